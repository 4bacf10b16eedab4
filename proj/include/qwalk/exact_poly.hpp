#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qwalk {

__extension__ typedef __int128 int128;

/// Overflow-checked 128-bit helpers; throw OverflowError instead of wrapping.
int128 checked_add(int128 x, int128 y);
int128 checked_mul(int128 x, int128 y);
int128 binomial(long n, long k);
std::string to_string(int128 v);

/// Dense polynomial in |a| with exact integer coefficients; coeffs()[p]
/// multiplies |a|^p. Trailing zeros are trimmed.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<int128> coeffs);
  static IntPoly constant(int128 c);
  static IntPoly monomial(int128 c, std::size_t power);

  const std::vector<int128>& coeffs() const { return c_; }
  int128 coeff(std::size_t power) const { return power < c_.size() ? c_[power] : 0; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly scaled(int128 s) const;
  /// Multiplication by |a|^n.
  IntPoly shifted(std::size_t n) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  /// Exact value at |a| = 1.
  int128 at_one() const;
  /// Horner evaluation in quad precision, rounded to double.
  double evaluate(double x) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<int128> c_;
};

}  // namespace qwalk
