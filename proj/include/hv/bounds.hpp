#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hv/numeric.hpp"

namespace hv {

// Degree and length bounds for a complete intersection D = X cap {g = 0},
// deg X = d, deg g = m, with at worst isolated singularities.

namespace detail {

inline void validate_bound_query(Int n, Int d, Int m) {
  if (n < 4) throw std::invalid_argument("bounds: need n >= 4");
  if (d < 1) throw std::invalid_argument("bounds: need d >= 1");
  if (m < 1) throw std::invalid_argument("bounds: need m >= 1");
}

}  // namespace detail

struct LengthBound {
  Int l = 0;  // auxiliary twist used by the bound
  BigInt bound;
};

// length(Z_k) <= C((k+1)m+l+d-1, n) - C((k+1)m+l-1, n) with
// l = max{k(d-2), k(d-2)+(n-2)(d-1)-m}; binomials clamp to 0 below n.
inline LengthBound length_bound(Int n, Int d, Int m, Int k) {
  detail::validate_bound_query(n, d, m);
  if (k < 0) throw std::invalid_argument("length_bound: need k >= 0");
  LengthBound r;
  r.l = std::max(k * (d - 2), k * (d - 2) + (n - 2) * (d - 1) - m);
  Int top = (k + 1) * m + r.l + d - 1;
  r.bound = binom(top, n) - binom(top - d, n);
  return r;
}

struct IndependentConditions {
  Int k = 0;
  Int l = 0;
  Int degree = 0;
  bool s_t_empty = false;  // a negative degree bounds sections of a negative twist
  std::string interpretation;
};

// Least degree from which the points of multiplicity >= t impose independent
// conditions.  The two ceiling conventions for k coincide identically
// (ceil(n/t) - 1 == ceil(n/t - 1)); both are evaluated and compared.
inline IndependentConditions independent_conditions_degree(Int n, Int d, Int m, Int t) {
  detail::validate_bound_query(n, d, m);
  if (t < 2) throw std::invalid_argument("independent_conditions_degree: need t >= 2");
  IndependentConditions r;
  r.k = ceil_div(n, t) - 1;
  Int k_alt = ceil_div(n - t, t);
  if (k_alt != r.k)
    throw std::logic_error("independent_conditions_degree: ceiling conventions diverged");
  r.l = std::max<Int>({0, r.k * (d - 2), r.k * (d - 2) + (n - 2) * (d - 1) - m});
  r.degree = (r.k + 1) * m + r.l + d - n - 1;
  r.s_t_empty = r.degree < 0;
  r.interpretation = r.s_t_empty
                         ? "S_t empty: no such singular points exist"
                         : "S_t imposes independent conditions from degree " + std::to_string(r.degree);
  return r;
}

struct JetSeparation {
  Int k = 0;
  Int l = 0;
  Int degree = 0;
};

// Least degree whose hypersurfaces separate (j-1)-jets along S_t, t >= 3,
// with k_{t,j} = ceil((n-1-t+j)/t) for j <= t-1 and ceil((n-1-t+j)/(t-2))
// for j >= t.
inline JetSeparation jet_separation_degree(Int n, Int d, Int m, Int t, Int j) {
  detail::validate_bound_query(n, d, m);
  if (t < 3) throw std::invalid_argument("jet_separation_degree: need t >= 3");
  if (j < 1) throw std::invalid_argument("jet_separation_degree: need j >= 1");
  JetSeparation r;
  r.k = j <= t - 1 ? ceil_div(n - 1 - t + j, t) : ceil_div(n - 1 - t + j, t - 2);
  r.l = std::max(r.k * (d - 2), r.k * (d - 2) + (n - 2) * (d - 1) - m);
  r.degree = (r.k + 1) * m + r.l + d - n - 1;
  return r;
}

}  // namespace hv
