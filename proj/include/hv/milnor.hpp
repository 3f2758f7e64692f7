#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hv/numeric.hpp"

namespace hv {

// Word-sized primes for the rank oracle.  Ranks over a random large prime
// agree with characteristic-zero ranks away from a measure-zero set; the
// second prime is the cheap cross-check.
constexpr std::uint32_t kOraclePrime = 2147483647u;
constexpr std::uint32_t kOracleCheckPrime = 2147483629u;

namespace fp {

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("fp::inv of zero");
  return pow(a, p - 2, p);
}

inline std::uint32_t reduce(long long c, std::uint32_t p) {
  long long r = c % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace fp

struct PolyTerm {
  std::uint32_t coeff = 0;
  std::vector<Int> exps;
  bool operator==(const PolyTerm&) const = default;
};

// Homogeneous multivariate polynomial over a prime field, exponent-vector
// terms kept in descending lexicographic order with no duplicates and no
// zero coefficients.
class SparsePolynomial {
 public:
  SparsePolynomial(std::uint32_t prime, Int num_vars, Int degree, std::vector<PolyTerm> terms)
      : prime_(prime), num_vars_(num_vars), degree_(degree) {
    if (num_vars < 1) throw std::invalid_argument("SparsePolynomial: need at least one variable");
    if (degree < 0) throw std::invalid_argument("SparsePolynomial: negative degree");
    std::map<std::vector<Int>, std::uint32_t, std::greater<>> collected;
    for (auto& t : terms) {
      if (static_cast<Int>(t.exps.size()) != num_vars)
        throw std::invalid_argument("SparsePolynomial: exponent vector length mismatch");
      Int total = 0;
      for (Int e : t.exps) {
        if (e < 0) throw std::invalid_argument("SparsePolynomial: negative exponent");
        total += e;
      }
      if (total != degree)
        throw std::invalid_argument("SparsePolynomial: term of degree " + std::to_string(total) +
                                    " in a polynomial declared homogeneous of degree " +
                                    std::to_string(degree));
      std::uint32_t c = t.coeff % prime;
      auto [it, inserted] = collected.emplace(std::move(t.exps), c);
      if (!inserted) it->second = static_cast<std::uint32_t>((static_cast<std::uint64_t>(it->second) + c) % prime);
    }
    for (auto& [e, c] : collected)
      if (c != 0) terms_.push_back(PolyTerm{c, e});
  }

  std::uint32_t prime() const { return prime_; }
  Int num_vars() const { return num_vars_; }
  Int degree() const { return degree_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const SparsePolynomial&) const = default;

  static SparsePolynomial fermat(Int n, Int d, std::uint32_t prime = kOraclePrime) {
    std::vector<PolyTerm> terms;
    for (Int i = 0; i <= n; ++i) {
      std::vector<Int> e(static_cast<std::size_t>(n + 1), 0);
      e[static_cast<std::size_t>(i)] = d;
      terms.push_back(PolyTerm{1, std::move(e)});
    }
    return SparsePolynomial(prime, n + 1, d, std::move(terms));
  }

  // Text format: header "n d P", then one "c e0 e1 ... en" line per term.
  static SparsePolynomial parse(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("polynomial file: missing header");
    std::istringstream header(line);
    Int n = 0, d = 0;
    long long prime = 0;
    if (!(header >> n >> d >> prime) || prime < 2)
      throw std::invalid_argument("polynomial file: header must be \"n d P\"");
    std::vector<PolyTerm> terms;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream row(line);
      long long c = 0;
      if (!(row >> c)) throw std::invalid_argument("polynomial file: bad term line \"" + line + "\"");
      PolyTerm t;
      t.coeff = fp::reduce(c, static_cast<std::uint32_t>(prime));
      Int e = 0;
      while (row >> e) t.exps.push_back(e);
      if (static_cast<Int>(t.exps.size()) != n + 1)
        throw std::invalid_argument("polynomial file: expected " + std::to_string(n + 1) +
                                    " exponents per term");
      terms.push_back(std::move(t));
    }
    return SparsePolynomial(static_cast<std::uint32_t>(prime), n + 1, d, std::move(terms));
  }

  static SparsePolynomial parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
  }

  std::string to_text() const {
    std::ostringstream out;
    out << (num_vars_ - 1) << " " << degree_ << " " << prime_ << "\n";
    for (const auto& t : terms_) {
      out << t.coeff;
      for (Int e : t.exps) out << " " << e;
      out << "\n";
    }
    return out.str();
  }

 private:
  std::uint32_t prime_;
  Int num_vars_;
  Int degree_;
  std::vector<PolyTerm> terms_;
};

// Formal partial derivatives, each homogeneous of degree d-1 (possibly the
// zero polynomial when a variable does not occur).
inline std::vector<SparsePolynomial> jacobian_partials(const SparsePolynomial& f) {
  if (f.degree() < 1) throw std::invalid_argument("jacobian_partials: degree must be >= 1");
  std::vector<SparsePolynomial> out;
  for (Int i = 0; i < f.num_vars(); ++i) {
    std::vector<PolyTerm> terms;
    for (const auto& t : f.terms()) {
      Int e = t.exps[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      PolyTerm dt;
      dt.coeff = fp::mul(t.coeff, fp::reduce(e, f.prime()), f.prime());
      dt.exps = t.exps;
      dt.exps[static_cast<std::size_t>(i)] -= 1;
      if (dt.coeff != 0) terms.push_back(std::move(dt));
    }
    out.emplace_back(f.prime(), f.num_vars(), f.degree() - 1, std::move(terms));
  }
  return out;
}

// Generic graded dimensions [dim R_0, ..., dim R_rho] of the Jacobian ring,
// rho = (n+1)(d-2); the last entry is 1.
inline std::vector<BigInt> milnor_hilbert(Int n, Int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("milnor_hilbert: need n >= 2, d >= 2");
  Int rho = (n + 1) * (d - 2);
  auto series = series_pow_ratio(d, n, rho);
  return series.coeffs;
}

namespace detail {

using SparseRow = std::vector<std::pair<Int, std::uint32_t>>;  // (column, value), sorted

// Monomials of total degree k in v variables, descending lexicographic.
inline void monomials_of_degree(Int v, Int k, std::vector<Int>& prefix,
                                std::vector<std::vector<Int>>& out) {
  if (v == 1) {
    prefix.push_back(k);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (Int e = k; e >= 0; --e) {
    prefix.push_back(e);
    monomials_of_degree(v - 1, k - e, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<Int>> monomials_of_degree(Int v, Int k) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> prefix;
  monomials_of_degree(v, k, prefix, out);
  return out;
}

constexpr Int kDenseColumnLimit = 20000;

inline Int rank_dense(const std::vector<SparseRow>& rows, Int cols, std::uint32_t p) {
  std::vector<Int> pivot_of_col(static_cast<std::size_t>(cols), -1);
  std::vector<std::vector<std::uint32_t>> pivots;
  std::vector<std::uint32_t> buf(static_cast<std::size_t>(cols));
  Int rank = 0;
  for (const auto& row : rows) {
    std::fill(buf.begin(), buf.end(), 0u);
    for (auto [c, v] : row) buf[static_cast<std::size_t>(c)] = v;
    for (Int c = row.empty() ? cols : row.front().first; c < cols; ++c) {
      if (buf[static_cast<std::size_t>(c)] == 0) continue;
      Int idx = pivot_of_col[static_cast<std::size_t>(c)];
      if (idx < 0) {
        std::uint32_t s = fp::inv(buf[static_cast<std::size_t>(c)], p);
        std::vector<std::uint32_t> stored(static_cast<std::size_t>(cols), 0u);
        for (Int j = c; j < cols; ++j) stored[static_cast<std::size_t>(j)] = fp::mul(buf[static_cast<std::size_t>(j)], s, p);
        pivot_of_col[static_cast<std::size_t>(c)] = rank;
        pivots.push_back(std::move(stored));
        ++rank;
        break;
      }
      const auto& pr = pivots[static_cast<std::size_t>(idx)];
      std::uint32_t m = buf[static_cast<std::size_t>(c)];
      for (Int j = c; j < cols; ++j) {
        if (pr[static_cast<std::size_t>(j)] == 0) continue;
        std::uint64_t sub = static_cast<std::uint64_t>(m) * pr[static_cast<std::size_t>(j)] % p;
        std::uint64_t cur = buf[static_cast<std::size_t>(j)];
        buf[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>((cur + p - sub) % p);
      }
    }
  }
  return rank;
}

inline Int rank_sparse(const std::vector<SparseRow>& rows, Int /*cols*/, std::uint32_t p) {
  std::map<Int, SparseRow> pivot_by_col;  // leading value normalized to 1
  Int rank = 0;
  for (const auto& input : rows) {
    SparseRow row = input;
    while (!row.empty()) {
      Int c = row.front().first;
      auto it = pivot_by_col.find(c);
      if (it == pivot_by_col.end()) {
        std::uint32_t s = fp::inv(row.front().second, p);
        for (auto& [col, v] : row) v = fp::mul(v, s, p);
        pivot_by_col.emplace(c, std::move(row));
        ++rank;
        break;
      }
      std::uint32_t m = row.front().second;
      SparseRow next;
      next.reserve(row.size() + it->second.size());
      auto a = row.begin();
      auto b = it->second.begin();
      while (a != row.end() || b != it->second.end()) {
        if (b == it->second.end() || (a != row.end() && a->first < b->first)) {
          next.push_back(*a++);
        } else if (a == row.end() || b->first < a->first) {
          std::uint32_t v = static_cast<std::uint32_t>((p - fp::mul(m, b->second, p)) % p);
          if (v != 0) next.emplace_back(b->first, v);
          ++b;
        } else {
          std::uint32_t v = static_cast<std::uint32_t>(
              (a->second + static_cast<std::uint64_t>(p) - fp::mul(m, b->second, p)) % p);
          if (v != 0) next.emplace_back(a->first, v);
          ++a;
          ++b;
        }
      }
      row = std::move(next);
    }
  }
  return rank;
}

inline Int rank_of_rows(const std::vector<SparseRow>& rows, Int cols, std::uint32_t p) {
  if (cols == 0) return 0;
  return cols <= kDenseColumnLimit ? rank_dense(rows, cols, p) : rank_sparse(rows, cols, p);
}

// Rows of the degree-k piece of the Jacobian ideal: every monomial multiple
// of every partial, expressed in the degree-k monomial basis.
inline Int jacobian_ideal_rank(const SparsePolynomial& f, Int k) {
  const Int v = f.num_vars();
  const Int gen_deg = f.degree() - 1;
  if (k < gen_deg) return 0;

  BigInt cols_big = binom(k + v - 1, v - 1);
  if (cols_big > BigInt(1) << 24)
    throw std::invalid_argument("jacobian_ideal_rank: degree " + std::to_string(k) +
                                " is beyond desk scale");
  const Int cols = static_cast<Int>(cols_big);

  auto basis = monomials_of_degree(v, k);
  std::map<std::vector<Int>, Int> col_index;
  for (Int c = 0; c < cols; ++c) col_index.emplace(basis[static_cast<std::size_t>(c)], c);

  auto partials = jacobian_partials(f);
  auto multipliers = monomials_of_degree(v, k - gen_deg);

  std::vector<SparseRow> rows;
  rows.reserve(partials.size() * multipliers.size());
  std::vector<Int> mono(static_cast<std::size_t>(v));
  for (const auto& g : partials) {
    if (g.is_zero()) continue;
    for (const auto& mu : multipliers) {
      SparseRow row;
      row.reserve(g.terms().size());
      for (const auto& t : g.terms()) {
        for (Int j = 0; j < v; ++j)
          mono[static_cast<std::size_t>(j)] = mu[static_cast<std::size_t>(j)] + t.exps[static_cast<std::size_t>(j)];
        row.emplace_back(col_index.at(mono), t.coeff);
      }
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
  }
  return rank_of_rows(rows, cols, f.prime());
}

}  // namespace detail

struct IdealDims {
  std::vector<Int> dims;        // dim R_k for k = 0..k_max
  bool matches_generic = true;  // agrees with milnor_hilbert up to k_max
  std::string note;
};

// Graded dimensions of R = k[x_0..x_n]/(jacobian ideal of f) by explicit
// rank computation.  A divergence from the generic Hilbert function means a
// singular hypersurface or an unlucky prime; the two are not distinguished
// at a single prime.
inline IdealDims ideal_dims(const SparsePolynomial& f, Int k_max) {
  if (k_max < 0) throw std::invalid_argument("ideal_dims: negative k_max");
  const Int n = f.num_vars() - 1;
  IdealDims out;
  for (Int k = 0; k <= k_max; ++k) {
    BigInt full = binom(k + n, n);
    BigInt dim = full - detail::jacobian_ideal_rank(f, k);
    out.dims.push_back(static_cast<Int>(dim));
  }
  if (f.degree() >= 2 && n >= 2) {
    auto generic = milnor_hilbert(n, f.degree());
    for (Int k = 0; k <= k_max; ++k) {
      BigInt expected = k < static_cast<Int>(generic.size()) ? generic[static_cast<std::size_t>(k)] : BigInt(0);
      if (expected != out.dims[static_cast<std::size_t>(k)]) {
        out.matches_generic = false;
        out.note = "singular or unlucky prime: dim R_" + std::to_string(k) + " = " +
                   std::to_string(out.dims[static_cast<std::size_t>(k)]) + ", generic value " +
                   expected.str();
        break;
      }
    }
  }
  return out;
}

struct JacobianMapRank {
  Int rank = 0;
  Int coker_dim = 0;
};

// Rank and cokernel of (g_0..g_n) -> sum g_i d_i f from (n+1)-tuples of
// degree r+1 forms into degree d+r forms; the cokernel is dim R_{d+r}.
inline JacobianMapRank jacobian_map_rank(const SparsePolynomial& f, Int r) {
  if (r < -1) throw std::invalid_argument("jacobian_map_rank: need r >= -1");
  const Int n = f.num_vars() - 1;
  const Int k = f.degree() + r;
  Int rank = detail::jacobian_ideal_rank(f, k);
  BigInt coker = binom(k + n, n) - rank;
  return JacobianMapRank{rank, static_cast<Int>(coker)};
}

// dim R_k on demand for the window queries of the classification engine.
inline std::function<BigInt(Int)> milnor_dim_fn(const SparsePolynomial& f) {
  return [f](Int k) -> BigInt {
    if (k < 0) return 0;
    const Int n = f.num_vars() - 1;
    return binom(k + n, n) - detail::jacobian_ideal_rank(f, k);
  };
}

}  // namespace hv
