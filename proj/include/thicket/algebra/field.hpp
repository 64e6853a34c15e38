#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace thicket {

/// Field elements are exact rationals. Over a prime field the value is kept as
/// the symmetric integer representative in (-p/2, p/2].
using Scalar = mpq_class;

enum class FieldKind { Rationals, PrimeField };

class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rationals, 0); }
  /// Throws InputError unless `p` is prime.
  static Field prime(std::uint64_t p);
  /// 0 selects the rationals, anything else must be a prime.
  static Field from_characteristic(std::uint64_t characteristic);

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return characteristic_; }

  /// Canonical representative of `a` in this field. Over F_p the input may be
  /// any rational whose denominator is prime to p.
  Scalar normalize(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.characteristic_ == b.characteristic_;
  }

 private:
  Field(FieldKind kind, std::uint64_t characteristic)
      : kind_(kind), characteristic_(characteristic) {}

  FieldKind kind_;
  std::uint64_t characteristic_;
};

bool is_prime(std::uint64_t n);

}  // namespace thicket
