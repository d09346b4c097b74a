#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "akh/complex.hpp"

namespace akh {

// Integer Laurent polynomial in t, q, x. Exponents are keyed (t, q, x).
class Laurent {
public:
  using Exponent = std::array<int, 3>;

  Laurent() = default;
  static Laurent monomial(int t, int q, int x, long long c = 1);
  static Laurent constant(long long c) { return monomial(0, 0, 0, c); }

  const std::map<Exponent, long long>& terms() const { return terms_; }
  long long coefficient(int t, int q, int x) const;
  bool is_zero() const { return terms_.empty(); }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const { return Laurent(*this) += o; }
  Laurent operator-(const Laurent& o) const { return Laurent(*this) -= o; }
  Laurent operator*(const Laurent& o) const;
  bool operator==(const Laurent&) const = default;

  Laurent shifted(int t, int q, int x) const;
  Laurent at_t_minus_one() const;
  // Exact quotient, or nothing when `divisor` does not divide.
  std::optional<Laurent> divided_by(const Laurent& divisor) const;
  std::string to_string() const;

private:
  void add(const Exponent& e, long long c);
  std::map<Exponent, long long> terms_;
};

// The class of one non-trivial circle: q x + q^-1 x^-1.
Laurent circle_class();
// Sum of rank * t^i q^j x^k over a table keyed (i, j, k).
Laurent poincare(const f2::RankTable& ranks);
// Inverse of `poincare`; fails on negative coefficients.
std::optional<f2::RankTable> ranks_of(const Laurent& p);

}  // namespace akh
