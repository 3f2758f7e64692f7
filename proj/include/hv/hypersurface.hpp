#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "hv/cohomology.hpp"
#include "hv/numeric.hpp"
#include "hv/pn.hpp"

namespace hv {

// H^i(X, Omega^p_X(l)) for a smooth degree-d hypersurface X in P^n, n >= 4.
struct XFormQuery {
  Int n = 0;
  Int d = 0;
  Int p = 0;  // 0..n-1
  Int l = 0;
  Int i = 0;  // 0..n-1

  void validate() const {
    if (n < 4) throw std::invalid_argument("XFormQuery: need n >= 4 (surfaces go through the n=3 certifier)");
    if (d < 2) throw std::invalid_argument("XFormQuery: need d >= 2");
    if (p < 0 || p > n - 1) throw std::invalid_argument("XFormQuery: p out of [0, n-1]");
    if (i < 0 || i > n - 1) throw std::invalid_argument("XFormQuery: i out of [0, n-1]");
  }
};

// Graded dimension of the Jacobian ring of a smooth f, supplied by the
// explicit-polynomial oracle; maps k to dim R_k.
using MilnorDimFn = std::function<BigInt(Int)>;

// Hodge number h^{q, n-1-q}(X) through the Jacobian ring: the primitive part
// is dim R_{(n-q)d-n-1}, plus one hyperplane-power class on the middle
// diagonal of even-dimensional X.
inline BigInt hodge_middle(Int n, Int d, Int q) {
  if (n < 3 || d < 2) throw std::invalid_argument("hodge_middle: need n >= 3, d >= 2");
  if (q < 0 || q > n - 1) throw std::invalid_argument("hodge_middle: q out of [0, n-1]");
  const Int rho = (n + 1) * (d - 2);
  const Int k = (n - q) * d - n - 1;
  BigInt dim = 0;
  if (k >= 0 && k <= rho) dim = series_pow_ratio(d, n, rho).at(k);
  if (2 * q == n - 1) dim += 1;
  return dim;
}

struct JacobianThreshold {
  Int r_min = 0;  // least r with R_{d+r} = 0 guaranteed
  Int rho = 0;    // top nonzero degree of the Jacobian ring
};

inline JacobianThreshold jacobian_surjectivity_threshold(Int n, Int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("jacobian_surjectivity_threshold: need n >= 2, d >= 2");
  return JacobianThreshold{n * (d - 2) - 1, (n + 1) * (d - 2)};
}

// Status of H^{n-2}(X, Omega^1_X(l)), the borderline case p = 1.  Exactly the
// three-valued classification: proved zero above 2d-n and below (1-n)d+n,
// proved nonzero in the band just under the upper threshold, honest Unknown
// in the remaining window.
inline CohomologyDim borderline_p1_status(Int n, Int d, Int l) {
  if (n < 4 || d < 2) throw std::invalid_argument("borderline_p1_status: need n >= 4, d >= 2");
  if (l >= 2 * d - n)
    return CohomologyDim::zero("upper threshold l >= 2d-n: dual section target and cokernel both vanish");
  if (l > d - n)
    return CohomologyDim::nonzero_at_least(
        1, "band d-n < l <= 2d-n-1: zero map onto a nonzero section space is not surjective");
  if (l <= (1 - n) * d + n)
    return CohomologyDim::zero("lower threshold l <= (1-n)d+n: jacobian multiplication is surjective");
  return CohomologyDim::unknown("window (1-n)d+n < l <= d-n: not decided without an explicit polynomial");
}

namespace detail {

// Exact chase for h^0(X, Omega^p_X(l)) with l > p, down the conormal
// sequence: h^0(Omega^p_X(l)) = h^0(Omega^p|_X(l)) - h^0(Omega^{p-1}_X(l-d)).
// The potential kernel contribution in degree one vanishes in every case
// (when p = 2, l = d the connecting map is an isomorphism).
inline BigInt h0_form_dim(Int n, Int d, Int p, Int l, std::vector<std::string>& trace) {
  if (l <= p) throw std::logic_error("h0_form_dim: requires l > p");
  if (p == 0) {
    trace.push_back("h^0(O_X(" + std::to_string(l) + ")) from ambient sections");
    return h0_ox(n, d, l);
  }
  if (p == n - 1) {
    trace.push_back("top forms are O_X(" + std::to_string(l + d - n - 1) + ")");
    return h0_ox(n, d, l + d - n - 1);
  }
  BigInt ambient = h_restricted_forms(n, d, p, l, 0).exact_value();
  BigInt sub = 0;
  if (l - d > p - 1) {
    trace.push_back("conormal step: subtract h^0(Omega^" + std::to_string(p - 1) + "_X(" +
                    std::to_string(l - d) + "))");
    sub = h0_form_dim(n, d, p - 1, l - d, trace);
  } else if (p - 1 == 0 && l - d == 0) {
    trace.push_back("conormal step: subtract h^0(O_X) = 1");
    sub = 1;
  }
  if (p == 2 && l == d)
    trace.push_back("connecting map out of h^1(Omega^1_X) is an isomorphism; no kernel term");
  return ambient - sub;
}

struct ReducedDiagonal {
  Int i = 0;
  Int p = 0;
  Int l = 0;
};

// Slide a middle-diagonal query to the terminal form degree (p = 1 when the
// cohomological index is at least the form degree, p = n-2 otherwise), along
// the two unconditional conormal isomorphisms.
inline ReducedDiagonal reduce_diagonal(Int n, Int d, Int p, Int l, Int i,
                                       std::vector<std::string>& trace) {
  ReducedDiagonal cur{i, p, l};
  while (cur.p != 1 && cur.p != n - 2) {
    if (cur.i >= cur.p) {
      cur = ReducedDiagonal{cur.i + 1, cur.p - 1, cur.l - d};
    } else {
      cur = ReducedDiagonal{cur.i - 1, cur.p + 1, cur.l + d};
    }
  }
  if (cur.p != p)
    trace.push_back("reduced along conormal isomorphisms to (i=" + std::to_string(cur.i) +
                    ", p=" + std::to_string(cur.p) + ", l=" + std::to_string(cur.l) + ")");
  return cur;
}

}  // namespace detail

// Classification and (where determined) exact dimension of H^i(X, Omega^p_X(l)).
// Off the middle diagonal the answer is always exact.  On the diagonal the
// proved thresholds and the nonvanishing band apply; the untwisted case is
// answered through the Jacobian ring, and the remaining window stays Unknown
// unless an explicit-polynomial oracle is supplied.
inline CohomologyDim classify_form_cohomology(const XFormQuery& query,
                                              const MilnorDimFn& oracle = {}) {
  query.validate();
  const Int n = query.n, d = query.d, p = query.p, l = query.l, i = query.i;

  if (i + p != n - 1) {
    if (i == p && l == 0)
      return CohomologyDim::exact(1, "restriction of the ambient hodge class; h^{p,p} contribution is 1");
    if (i == 0 && l > p) {
      std::vector<std::string> trace;
      BigInt v = detail::h0_form_dim(n, d, p, l, trace);
      auto r = CohomologyDim::exact(v, "section chase closed");
      r.prepend_trace(trace);
      return r;
    }
    if (i == n - 1 && l < p - n + 1) {
      std::vector<std::string> trace;
      trace.push_back("serre duality to (i=0, p=" + std::to_string(n - 1 - p) +
                      ", l=" + std::to_string(-l) + ")");
      BigInt v = detail::h0_form_dim(n, d, n - 1 - p, -l, trace);
      auto r = CohomologyDim::exact(v, "section chase closed on the dual side");
      r.prepend_trace(trace);
      return r;
    }
    return CohomologyDim::zero("off-diagonal classification: no exceptional case applies");
  }

  // middle diagonal i + p = n - 1
  if (i == 0) {
    auto r = h_ox(n, d, l + d - n - 1, 0);
    r.note("top forms: h^0(omega_X(" + std::to_string(l) + ")) = h^0(O_X(" +
           std::to_string(l + d - n - 1) + "))");
    return r;
  }
  if (i == n - 1) {
    auto r = h_ox(n, d, l, n - 1);
    r.note("structure sheaf in top degree");
    return r;
  }

  if (l == 0) {
    auto r = CohomologyDim::exact(hodge_middle(n, d, p),
                                  "untwisted middle diagonal answered through the jacobian ring");
    return r;
  }
  if (l >= (p + 1) * d - n || l <= (p - n) * d + n)
    return CohomologyDim::zero("middle-diagonal vanishing threshold");

  std::vector<std::string> trace;
  auto red = detail::reduce_diagonal(n, d, p, l, i, trace);

  // Borderline dimensions live in the jacobian ring.  rd is the ring degree
  // the query lands on; it is invariant under the reduction isomorphisms and
  // under serre duality, and the surviving thresholds pin 0 <= rd <= rho.
  // On odd-dimensional ambient space the self-dual middle tie additionally
  // identifies rd with rho - rd, so every rule below respects that mirror.
  const Int rho = (n + 1) * (d - 2);
  const Int rd = red.p == 1 ? 2 * d - n - 1 - red.l : red.l + 2 * d - n - 1;
  const Int rd_untwisted = 2 * d - n - 1;

  CohomologyDim r = CohomologyDim::unknown("placeholder");
  if (rd == rd_untwisted) {
    r = CohomologyDim::exact(hodge_middle(n, d, red.p),
                             "reduced query is untwisted; answered through the jacobian ring");
  } else if (n % 2 == 1 && rd == rho - rd_untwisted) {
    r = CohomologyDim::exact(hodge_middle(n, d, red.p),
                             "dual of an untwisted query through the middle tie; answered "
                             "through the jacobian ring");
  } else if (oracle) {
    r = CohomologyDim::exact(oracle(rd), "resolved by the jacobian-ring oracle at degree " +
                                             std::to_string(rd));
  } else if (rd <= d - 2) {
    r = CohomologyDim::nonzero_at_least(
        1, "nonvanishing band: zero map onto a nonzero section space is not surjective");
  } else if (rd >= rho - (d - 2)) {
    r = CohomologyDim::nonzero_at_least(
        1, "nonvanishing band mirrored through the macaulay pairing");
  } else {
    r = CohomologyDim::unknown("borderline window: supply an explicit polynomial to decide");
  }
  r.prepend_trace(trace);
  return r;
}

}  // namespace hv
