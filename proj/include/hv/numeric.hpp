#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hv {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// cpp_rational keeps lowest terms with positive denominator; route all
// two-argument construction through the division operator, which normalizes.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  return BigRational(num) / BigRational(den);
}

inline BigRational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(BigInt(text));
  return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

inline std::string rational_str(const BigRational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Int floor_div(Int a, Int b) {
  if (b < 0) { a = -a; b = -b; }
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

// Binomial in the polynomial convention: s(s-1)...(s-r+1)/r!, exact for any
// integer s.  Agrees with the combinatorial binomial for s >= r >= 0 and
// vanishes for 0 <= s < r; for s < 0 it takes the signed values needed by
// Euler-characteristic identities.
inline BigInt pbinom(Int s, Int r) {
  if (r < 0) throw std::invalid_argument("pbinom: negative lower index");
  BigInt num = 1;
  for (Int j = 0; j < r; ++j) num *= BigInt(s - j);
  for (Int j = 2; j <= r; ++j) num /= j;
  return num;
}

// Combinatorial binomial, clamped to 0 outside 0 <= r <= s.
inline BigInt binom(Int s, Int r) {
  if (r < 0) throw std::invalid_argument("binom: negative lower index");
  if (s < r) return 0;
  return pbinom(s, r);
}

// Integer power series truncated at a fixed cap; coefficients indexed by
// degree 0..cap, so the vector length is always cap+1.
struct TruncatedSeries {
  Int cap = 0;
  std::vector<BigInt> coeffs;

  explicit TruncatedSeries(Int cap_) : cap(cap_), coeffs(static_cast<std::size_t>(cap_ + 1)) {
    if (cap_ < 0) throw std::invalid_argument("TruncatedSeries: negative cap");
  }

  static TruncatedSeries one(Int cap) {
    TruncatedSeries s(cap);
    s.coeffs[0] = 1;
    return s;
  }

  const BigInt& operator[](Int k) const { return coeffs[static_cast<std::size_t>(k)]; }
  BigInt& operator[](Int k) { return coeffs[static_cast<std::size_t>(k)]; }

  // coefficient of t^k, 0 beyond the cap
  BigInt at(Int k) const {
    if (k < 0 || k > cap) return 0;
    return coeffs[static_cast<std::size_t>(k)];
  }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    if (cap != o.cap) throw std::invalid_argument("series cap mismatch");
    TruncatedSeries r(cap);
    for (Int k = 0; k <= cap; ++k) r[k] = (*this)[k] + o[k];
    return r;
  }

  TruncatedSeries operator*(const TruncatedSeries& o) const {
    if (cap != o.cap) throw std::invalid_argument("series cap mismatch");
    TruncatedSeries r(cap);
    for (Int a = 0; a <= cap; ++a) {
      if ((*this)[a] == 0) continue;
      for (Int b = 0; a + b <= cap; ++b) {
        if (o[b] == 0) continue;
        r[a + b] += (*this)[a] * o[b];
      }
    }
    return r;
  }

  bool operator==(const TruncatedSeries& o) const = default;
};

// ((1 - t^(d-1)) / (1 - t))^(n+1) = (1 + t + ... + t^(d-2))^(n+1), truncated
// at degree cap.  This is the Hilbert series of a polynomial ring in n+1
// variables modulo a regular sequence of n+1 forms of degree d-1.
inline TruncatedSeries series_pow_ratio(Int d, Int n, Int cap) {
  if (d < 2 || n < 0) throw std::invalid_argument("series_pow_ratio: need d >= 2, n >= 0");
  if (cap < 0) throw std::invalid_argument("series_pow_ratio: negative cap");
  TruncatedSeries base(cap);
  for (Int k = 0; k <= std::min<Int>(cap, d - 2); ++k) base[k] = 1;
  TruncatedSeries result = TruncatedSeries::one(cap);
  for (Int i = 0; i < n + 1; ++i) result = result * base;
  return result;
}

}  // namespace hv
