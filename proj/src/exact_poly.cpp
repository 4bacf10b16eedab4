#include "qwalk/exact_poly.hpp"

#include <algorithm>

#include "qwalk/errors.hpp"

namespace qwalk {

int128 checked_add(int128 x, int128 y) {
  int128 r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("128-bit overflow in polynomial addition");
  return r;
}

int128 checked_mul(int128 x, int128 y) {
  int128 r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("128-bit overflow in polynomial product");
  return r;
}

int128 binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  int128 r = 1;
  // r * (n - k + i) is always divisible by i at this point
  for (long i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

std::string to_string(int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  std::string s;
  while (v != 0) {
    int digit = static_cast<int>(v % 10);
    s.push_back(static_cast<char>('0' + (neg ? -digit : digit)));
    v /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

IntPoly::IntPoly(std::vector<int128> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(int128 c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(int128 c, std::size_t power) {
  std::vector<int128> v(power + 1, 0);
  v[power] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<int128> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(coeff(i), o.coeff(i));
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + o.scaled(-1); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<int128> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
    }
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(int128 s) const {
  std::vector<int128> r(c_);
  for (auto& v : r) v = checked_mul(v, s);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(std::size_t n) const {
  if (is_zero()) return {};
  std::vector<int128> r(n, 0);
  r.insert(r.end(), c_.begin(), c_.end());
  return IntPoly(std::move(r));
}

int128 IntPoly::at_one() const {
  int128 s = 0;
  for (auto v : c_) s = checked_add(s, v);
  return s;
}

double IntPoly::evaluate(double x) const {
  __float128 acc = 0;
  const __float128 xq = x;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xq + static_cast<__float128>(*it);
  return static_cast<double>(acc);
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const int128 c = c_[i];
    if (c == 0) continue;
    const int128 mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) s += qwalk::to_string(mag);
    if (i >= 1) s += "|a|";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace qwalk
