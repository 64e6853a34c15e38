#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace thicket {

inline constexpr std::size_t kMaxVariables = 12;

/// Exponent vector together with its cached weighted degree. Exponents past
/// the ring's variable count are always zero, so comparisons can run over the
/// full array.
struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exponents{};
  std::int32_t degree = 0;

  bool is_one() const { return degree == 0 && exponents == decltype(exponents){}; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents == b.exponents;
  }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    r.exponents[i] = static_cast<std::uint16_t>(a.exponents[i] + b.exponents[i]);
  r.degree = a.degree + b.degree;
  return r;
}

/// True iff `a` divides `b`.
inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree > b.degree) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a.exponents[i] > b.exponents[i]) return false;
  return true;
}

/// b / a, assuming divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    r.exponents[i] = static_cast<std::uint16_t>(b.exponents[i] - a.exponents[i]);
  r.degree = b.degree - a.degree;
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exponents[i] = a.exponents[i] > b.exponents[i] ? a.exponents[i] : b.exponents[i];
    if (i < weights.size()) r.degree += weights[i] * r.exponents[i];
  }
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a.exponents[i] != 0 && b.exponents[i] != 0) return false;
  return true;
}

/// Weighted graded reverse lexicographic comparison: higher weighted degree
/// wins; ties are broken by the smaller exponent in the last differing
/// variable. Returns -1, 0 or 1.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i] ? 1 : -1;
  }
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m.exponents) h = (h ^ e) * 1099511628211ULL;
    return h;
  }
};

}  // namespace thicket
