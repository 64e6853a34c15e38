#include "thicket/algebra/field.hpp"

#include "thicket/errors.hpp"

namespace thicket {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p))
    throw InputError("characteristic " + std::to_string(p) + " is not prime");
  if (p > (std::uint64_t{1} << 31))
    throw InputError("characteristic " + std::to_string(p) + " exceeds 2^31");
  return Field(FieldKind::PrimeField, p);
}

Field Field::from_characteristic(std::uint64_t characteristic) {
  return characteristic == 0 ? rationals() : prime(characteristic);
}

namespace {

mpz_class symmetric_mod(const mpz_class& a, const mpz_class& p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  if (2 * r > p) r -= p;
  return r;
}

}  // namespace

Scalar Field::normalize(const Scalar& a) const {
  if (kind_ == FieldKind::Rationals) {
    Scalar r = a;
    r.canonicalize();
    return r;
  }
  const mpz_class p(static_cast<unsigned long>(characteristic_));
  mpz_class num = symmetric_mod(a.get_num(), p);
  if (a.get_den() == 1) return Scalar(num);
  mpz_class den = symmetric_mod(a.get_den(), p);
  if (den == 0) throw InputError("denominator divisible by the characteristic");
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  return Scalar(symmetric_mod(num * den_inv, p));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rationals) return a + b;
  return normalize(a + b);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rationals) return a - b;
  return normalize(a - b);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rationals) return a * b;
  return normalize(a * b);
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == FieldKind::Rationals) return -a;
  return normalize(-a);
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw PreconditionError("division by zero in " + name());
  if (kind_ == FieldKind::Rationals) return 1 / a;
  const mpz_class p(static_cast<unsigned long>(characteristic_));
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
  return Scalar(symmetric_mod(r, p));
}

std::string Field::name() const {
  if (kind_ == FieldKind::Rationals) return "QQ";
  return "GF(" + std::to_string(characteristic_) + ")";
}

}  // namespace thicket
