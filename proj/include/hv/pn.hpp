#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hv/cohomology.hpp"
#include "hv/numeric.hpp"

namespace hv {

// H^q(P^n, Omega^p(l)) for the ambient projective space.
struct PnQuery {
  Int n = 0;  // ambient dimension, >= 2
  Int p = 0;  // form degree, 0..n
  Int l = 0;  // twist
  Int q = 0;  // cohomology degree, 0..n

  void validate() const {
    if (n < 2) throw std::invalid_argument("PnQuery: need n >= 2");
    if (p < 0 || p > n) throw std::invalid_argument("PnQuery: p out of range");
    if (q < 0 || q > n) throw std::invalid_argument("PnQuery: q out of range");
  }
};

// Bott's formula.  Cohomology of twisted forms on P^n is concentrated in a
// single degree; the three branches below are the only nonzero cases.
inline BigInt bott_dim(Int n, Int p, Int l, Int q) {
  PnQuery{n, p, l, q}.validate();
  if (q == 0 && l > p) return binom(l + n - p, l) * binom(l - 1, p);
  if (q == p && l == 0) return 1;
  if (q == n && l < p - n) return binom(-l + p, -l) * binom(-l - 1, n - p);
  return 0;
}

inline CohomologyDim bott_pn(const PnQuery& query) {
  query.validate();
  const auto [n, p, l, q] = query;
  if (q == 0 && l > p)
    return CohomologyDim::exact(bott_dim(n, p, l, q), "bott: global sections branch (q=0, l>p)");
  if (q == p && l == 0)
    return CohomologyDim::exact(1, "bott: hodge diagonal branch (q=p, l=0)");
  if (q == n && l < p - n)
    return CohomologyDim::exact(bott_dim(n, p, l, q), "bott: top-degree branch (q=n, l<p-n)");
  return CohomologyDim::zero("bott: outside the three nonzero branches");
}

// One step of the Koszul-type resolution of Omega^p_{P^n}|_X by direct sums
// of line bundles on X.
struct ResolutionTerm {
  BigInt multiplicity;
  Int twist = 0;
  bool operator==(const ResolutionTerm&) const = default;
};

// The resolution 0 -> O_X(-n-1) -> ... -> O_X(-p-1)^C(n+1,p+1) -> Omega^p|_X -> 0,
// listed from the term next to Omega^p|_X outward.  Length n-p+1.
inline std::vector<ResolutionTerm> koszul_resolution(Int n, Int p) {
  if (n < 2 || p < 0 || p > n) throw std::invalid_argument("koszul_resolution: bad (n, p)");
  std::vector<ResolutionTerm> terms;
  for (Int j = 0; j <= n - p; ++j)
    terms.push_back(ResolutionTerm{binom(n + 1, p + 1 + j), -(p + 1 + j)});
  return terms;
}

// chi(O_X(l)) on a degree-d hypersurface X in P^n, exact for every l via the
// polynomial-convention binomial.
inline BigInt euler_char_ox(Int n, Int d, Int l) {
  if (n < 2 || d < 1) throw std::invalid_argument("euler_char_ox: need n >= 2, d >= 1");
  return pbinom(l + n, n) - pbinom(l - d + n, n);
}

namespace detail {

inline BigInt h0_ox(Int n, Int d, Int l) {
  if (l < 0) return 0;
  return binom(n + l, n) - binom(n + l - d, n);
}

}  // namespace detail

// dim H^i(X, O_X(l)).  Sections come from P^n, the top degree is Serre-dual
// to sections, and the middle range vanishes.
inline CohomologyDim h_ox(Int n, Int d, Int l, Int i) {
  if (n < 2 || d < 1) throw std::invalid_argument("h_ox: need n >= 2, d >= 1");
  if (i < 0 || i > n - 1) throw std::invalid_argument("h_ox: i out of [0, n-1]");
  if (i == 0)
    return CohomologyDim::exact(detail::h0_ox(n, d, l),
                                "restriction of sections from the ambient space");
  if (i == n - 1) {
    Int dual = d - n - 1 - l;
    auto r = CohomologyDim::exact(detail::h0_ox(n, d, dual),
                                  "serre duality to sections, twist " + std::to_string(dual));
    return r;
  }
  return CohomologyDim::zero("line bundles on a hypersurface have no middle cohomology");
}

namespace detail {

// Rank of multiplication by the defining equation f,
// H^q(P^n, Omega^p(l-d)) -> H^q(P^n, Omega^p(l)).  On sections it is
// injective, on top cohomology surjective (dual to a section map), and in the
// middle range at most one side is nonzero.
inline BigInt restriction_map_rank(Int n, Int p, Int l, Int d, Int q) {
  BigInt source = bott_dim(n, p, l - d, q);
  BigInt target = bott_dim(n, p, l, q);
  if (source == 0 || target == 0) return 0;
  if (q == 0) return source;
  if (q == n) return target;
  throw std::logic_error("restriction_map_rank: middle-degree map with both sides nonzero");
}

}  // namespace detail

// dim H^i(X, Omega^p_{P^n}|_X(l)) from the restriction sequence
// 0 -> Omega^p(l-d) -> Omega^p(l) -> Omega^p|_X(l) -> 0 on P^n.  Every value
// is exact: the connecting data reduces to ranks of multiplication by f,
// which are pinned in all degrees.
inline CohomologyDim h_restricted_forms(Int n, Int d, Int p, Int l, Int i) {
  if (n < 2) throw std::invalid_argument("h_restricted_forms: need n >= 2");
  if (d < 2) throw std::invalid_argument("h_restricted_forms: need d >= 2");
  if (p < 0 || p > n) throw std::invalid_argument("h_restricted_forms: p out of [0, n]");
  if (i < 0 || i > n - 1) throw std::invalid_argument("h_restricted_forms: i out of [0, n-1]");

  BigInt target_i = bott_dim(n, p, l, i);
  BigInt source_next = bott_dim(n, p, l - d, i + 1);
  BigInt coker = target_i - detail::restriction_map_rank(n, p, l, d, i);
  BigInt kernel = source_next - detail::restriction_map_rank(n, p, l, d, i + 1);

  CohomologyDim r = CohomologyDim::exact(
      coker + kernel,
      "restriction sequence chase: coker in degree " + std::to_string(i) + " is " + coker.str() +
          ", kernel in degree " + std::to_string(i + 1) + " is " + kernel.str());
  if (coker > 0 && i == p && l == 0) r.note("hodge class surviving restriction");
  if (kernel > 0 && i == p - 1 && l == d)
    r.note("connecting kernel from the ambient hodge class in degree " + std::to_string(p));
  if (n < 4) r.note("outside the n >= 4 classification hypothesis; chase is still exact");
  return r;
}

}  // namespace hv
