#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hv/numeric.hpp"

namespace hv {

// Input data for the vanishing certifiers: an effective Q-divisor D of degree
// m on the degree-d hypersurface X in P^n, with support Z of degree mZ and
// O_X(Z - ceil(D)) = O_X(-a).  A reduced divisor forces Z = D, so a = 0 and
// mZ = m.
struct DivisorData {
  Int n = 0;
  Int d = 0;
  BigRational m;
  Int support_degree = 0;  // degree of Z
  Int a = 0;
  bool reduced = false;

  void validate() const {
    if (d < 1) throw std::invalid_argument("DivisorData: need d >= 1");
    if (a < 0) throw std::invalid_argument("DivisorData: a must be non-negative");
    if (support_degree < 0) throw std::invalid_argument("DivisorData: support degree must be non-negative");
    if (reduced) {
      if (denominator(m) != 1) throw std::invalid_argument("DivisorData: reduced divisors have integral degree");
      if (a != 0) throw std::invalid_argument("DivisorData: reduced divisors force a = 0");
      if (BigRational(support_degree) != m)
        throw std::invalid_argument("DivisorData: reduced divisors force deg Z = deg D");
    }
  }

  static DivisorData reduced_divisor(Int n, Int d, Int m) {
    DivisorData dd;
    dd.n = n;
    dd.d = d;
    dd.m = m;
    dd.support_degree = m;
    dd.a = 0;
    dd.reduced = true;
    dd.validate();
    return dd;
  }
};

// Formal class h*H + z*Z on X.  Ampleness is a pluggable predicate; the
// default models the complete-intersection Picard case, where only the total
// degree against the hyperplane class matters.
struct AmpleClass {
  Int h = 0;
  Int z = 0;
  std::string str() const { return std::to_string(h) + "H + " + std::to_string(z) + "Z"; }
};

using AmpleTest = std::function<bool(const AmpleClass&)>;

inline AmpleTest complete_intersection_ample_model(Int support_degree) {
  return [support_degree](const AmpleClass& c) { return c.h + c.z * support_degree > 0; };
}

struct CertCheck {
  std::string description;
  std::string lhs;
  std::string relation;  // ">", ">=", "!=", "predicate"
  std::string rhs;
  bool holds = false;
};

inline CertCheck check_rational(std::string desc, const BigRational& lhs, std::string rel,
                                const BigRational& rhs) {
  CertCheck c;
  c.description = std::move(desc);
  c.lhs = rational_str(lhs);
  c.rhs = rational_str(rhs);
  c.relation = std::move(rel);
  if (c.relation == ">") c.holds = lhs > rhs;
  else if (c.relation == ">=") c.holds = lhs >= rhs;
  else if (c.relation == "!=") c.holds = lhs != rhs;
  else throw std::logic_error("check_rational: unknown relation " + c.relation);
  return c;
}

// Re-evaluate a recorded inequality from its stored operands alone.
inline bool reevaluate(const CertCheck& c) {
  if (c.relation == "predicate") return c.holds;
  BigRational lhs = parse_rational(c.lhs);
  BigRational rhs = parse_rational(c.rhs);
  if (c.relation == ">") return lhs > rhs;
  if (c.relation == ">=") return lhs >= rhs;
  if (c.relation == "!=") return lhs != rhs;
  throw std::logic_error("reevaluate: unknown relation " + c.relation);
}

struct Verdict {
  bool vanishes = false;  // false means "unknown", never "does not vanish"
  std::string citation;
  std::vector<CertCheck> certificate;
};

namespace detail {

inline CertCheck ample_check(const std::string& role, const AmpleClass& c, const AmpleTest& ample,
                             bool default_model, Int support_degree) {
  if (default_model) {
    auto chk = check_rational(role + ": " + c.str() + " ample (degree model)",
                              BigRational(c.h + c.z * support_degree), ">", BigRational(0));
    return chk;
  }
  CertCheck chk;
  chk.description = role + ": " + c.str() + " ample (custom predicate)";
  chk.lhs = c.str();
  chk.relation = "predicate";
  chk.rhs = "ample";
  chk.holds = ample(c);
  return chk;
}

}  // namespace detail

// Vanishing of H^i(X, omega_X(kZ) x I_k(D) x O_X(l)) for n >= 4 and D with
// at worst isolated singularities.  Clauses, in the order tried:
//   interior degrees 2 <= i != n-1 vanish outright;
//   top degree needs (l-a)H + kZ ample (l + km > 0 for reduced D);
//   i = 1, k >= 1 needs l >= max{k(d-2)+m, k(d-2)+(n-2)(d-1)+a};
//   k = 0, i >= 1 is the multiplier-ideal case, l >= m.
inline Verdict certify_thm1(const DivisorData& dd, Int k, Int l, Int i,
                            const AmpleTest& ample = {}) {
  dd.validate();
  if (dd.n < 4) throw std::invalid_argument("certify_thm1: need n >= 4 (use certify_surface for n = 3)");
  if (dd.d < 2) throw std::invalid_argument("certify_thm1: need d >= 2");
  if (k < 0) throw std::invalid_argument("certify_thm1: need k >= 0");
  if (i < 0) throw std::invalid_argument("certify_thm1: need i >= 0");

  const bool default_model = !ample;
  const AmpleTest model = default_model ? complete_intersection_ample_model(dd.support_degree) : ample;
  std::vector<CertCheck> failed;

  if (i >= 2 && i != dd.n - 1) {
    Verdict v;
    v.vanishes = true;
    v.citation = "interior-degree-vanishing";
    v.certificate.push_back(check_rational("cohomological degree at least 2", BigRational(i), ">=", BigRational(2)));
    v.certificate.push_back(check_rational("cohomological degree away from the top", BigRational(i), "!=", BigRational(dd.n - 1)));
    return v;
  }

  if (i == dd.n - 1) {
    if (dd.reduced) {
      auto chk = check_rational("reduced top-degree positivity l + k m > 0",
                                BigRational(l) + BigRational(k) * dd.m, ">", BigRational(0));
      if (chk.holds) {
        Verdict v;
        v.vanishes = true;
        v.citation = "top-degree-positivity-reduced";
        v.certificate.push_back(chk);
        return v;
      }
      failed.push_back(chk);
    } else {
      auto chk = detail::ample_check("top-degree class", AmpleClass{l - dd.a, k}, model,
                                     default_model, dd.support_degree);
      if (chk.holds) {
        Verdict v;
        v.vanishes = true;
        v.citation = "top-degree-ample";
        v.certificate.push_back(chk);
        return v;
      }
      failed.push_back(chk);
    }
  }

  if (i == 1 && k >= 1) {
    BigRational bound_m = BigRational(k * (dd.d - 2)) + dd.m;
    BigRational bound_a = BigRational(k * (dd.d - 2) + (dd.n - 2) * (dd.d - 1) + dd.a);
    BigRational bound = bound_m > bound_a ? bound_m : bound_a;
    auto chk = check_rational("twist threshold l >= max{k(d-2)+m, k(d-2)+(n-2)(d-1)+a}",
                              BigRational(l), ">=", bound);
    if (chk.holds) {
      Verdict v;
      v.vanishes = true;
      v.citation = "h1-twist-threshold";
      v.certificate.push_back(chk);
      return v;
    }
    failed.push_back(chk);
  }

  if (k == 0 && i >= 1) {
    auto chk = check_rational("multiplier-ideal positivity l >= m", BigRational(l), ">=", dd.m);
    if (chk.holds) {
      Verdict v;
      v.vanishes = true;
      v.citation = "multiplier-ideal-base";
      v.certificate.push_back(chk);
      return v;
    }
    failed.push_back(chk);
  }

  Verdict v;
  v.vanishes = false;
  v.citation = "no-criterion-applies";
  v.certificate = std::move(failed);
  return v;
}

// Vanishing of H^i(X, omega_X(kZ) x I_k(D) x L) on a surface X in P^3.
// L is a formal class in the (H, Z) lattice; ceil(D) enters as Z + aH.
// For i = 1 the reduced statement is also evaluated through its own printed
// index range (j shifted by one); the two families are the same classes.
inline Verdict certify_surface(const DivisorData& dd, Int k, const AmpleClass& L, Int i,
                               const AmpleTest& ample = {}) {
  dd.validate();
  if (dd.n != 3) throw std::invalid_argument("certify_surface: defined for n = 3");
  if (dd.d < 2) throw std::invalid_argument("certify_surface: need d >= 2");
  if (k < 0) throw std::invalid_argument("certify_surface: need k >= 0");
  if (i < 0) throw std::invalid_argument("certify_surface: need i >= 0");

  const bool default_model = !ample;
  const AmpleTest model = default_model ? complete_intersection_ample_model(dd.support_degree) : ample;
  const Int d = dd.d, a = dd.a;

  if (i >= 2) {
    auto chk = detail::ample_check("class L + (k+1)Z - ceil(D)", AmpleClass{L.h - a, L.z + k},
                                   model, default_model, dd.support_degree);
    Verdict v;
    v.vanishes = chk.holds;
    v.citation = chk.holds ? "surface-top-ample" : "no-criterion-applies";
    v.certificate.push_back(chk);
    return v;
  }

  if (i == 1) {
    std::vector<CertCheck> checks;
    checks.push_back(detail::ample_check(
        "class (L - ceil(D))((k-1)(2-d))",
        AmpleClass{L.h - a + (k - 1) * (2 - d), L.z - 1}, model, default_model, dd.support_degree));
    for (Int j = 1; j <= k; ++j)
      checks.push_back(detail::ample_check(
          "class (L + " + std::to_string(j) + "Z - ceil(D))((k-j+2)(2-d))",
          AmpleClass{L.h - a + (k - j + 2) * (2 - d), L.z + j - 1}, model, default_model,
          dd.support_degree));

    if (dd.reduced) {
      // printed reduced family, indexed 0..k-1; must match the general one
      std::vector<CertCheck> reduced_checks;
      reduced_checks.push_back(detail::ample_check(
          "reduced class (L - D)((k-1)(2-d))", AmpleClass{L.h + (k - 1) * (2 - d), L.z - 1},
          model, default_model, dd.support_degree));
      for (Int j = 0; j <= k - 1; ++j)
        reduced_checks.push_back(detail::ample_check(
            "reduced class (L + " + std::to_string(j) + "D)((k-j+1)(2-d))",
            AmpleClass{L.h + (k - j + 1) * (2 - d), L.z + j}, model, default_model,
            dd.support_degree));
      if (reduced_checks.size() != checks.size())
        throw std::logic_error("certify_surface: reduced index family size mismatch");
      for (std::size_t idx = 0; idx < checks.size(); ++idx)
        if (reduced_checks[idx].holds != checks[idx].holds)
          throw std::logic_error("certify_surface: reduced index family diverges from the general one");
    }

    bool all = true;
    for (const auto& c : checks) all = all && c.holds;
    Verdict v;
    v.vanishes = all;
    v.citation = all ? "surface-h1-ample-family" : "no-criterion-applies";
    v.certificate = std::move(checks);
    return v;
  }

  Verdict v;
  v.vanishes = false;
  v.citation = "no-criterion-applies";
  return v;
}

// H^1(X, Omega^1_X x L) = 0 on a surface X in P^3 when L(4-2d) is ample.
inline Verdict certify_prop16(Int d, const AmpleClass& L, Int support_degree = 0,
                              const AmpleTest& ample = {}) {
  if (d < 2) throw std::invalid_argument("certify_prop16: need d >= 2");
  const bool default_model = !ample;
  const AmpleTest model = default_model ? complete_intersection_ample_model(support_degree) : ample;
  auto chk = detail::ample_check("class L(4-2d)", AmpleClass{L.h + 4 - 2 * d, L.z}, model,
                                 default_model, support_degree);
  Verdict v;
  v.vanishes = chk.holds;
  v.citation = chk.holds ? "surface-borderline-h11" : "no-criterion-applies";
  v.certificate.push_back(chk);
  return v;
}

// ---------------------------------------------------------------------------
// Recursive sufficient conditions A_{i,k,l}: the statement that
// H^i(X, omega_X x O_X((k+1)m + l) x I_k(D)) vanishes, proved by a
// well-founded recursion that strictly decreases k.

enum class AklMode { Verbatim, Corrected };
enum class AklStatus { Proved, Unknown, InProgress };

// Verbatim keeps the interior premise family at twist rd exactly as printed;
// Corrected uses l + rd, the twist the derivation actually produces.
inline const char* to_string(AklMode m) { return m == AklMode::Verbatim ? "verbatim" : "corrected"; }
inline const char* to_string(AklStatus s) {
  switch (s) {
    case AklStatus::Proved: return "Proved";
    case AklStatus::Unknown: return "Unknown";
    case AklStatus::InProgress: return "InProgress";
  }
  return "?";
}

struct ConditionNode {
  Int i = 0, k = 0, l = 0;
  AklStatus status = AklStatus::Unknown;
  std::string rule;
  std::vector<std::shared_ptr<const ConditionNode>> premises;
  std::vector<CertCheck> inequalities;
  Int depth = 1;  // 1 + max premise depth

  std::string key() const {
    return "A(" + std::to_string(i) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
  }
};

class AklProver {
 public:
  // enforce_all_r: require the i=1 twist inequality for every r in 1..k
  // (the conservative reading); false accepts any single r.
  AklProver(Int n, Int d, BigRational m, AklMode mode = AklMode::Corrected,
            bool enforce_all_r = true)
      : n_(n), d_(d), m_(std::move(m)), mode_(mode), enforce_all_r_(enforce_all_r) {
    if (n_ < 4) throw std::invalid_argument("AklProver: need n >= 4");
    if (d_ < 2) throw std::invalid_argument("AklProver: need d >= 2");
  }

  std::shared_ptr<const ConditionNode> prove(Int i, Int k, Int l) {
    if (i < 1) throw std::invalid_argument("AklProver: need i >= 1");
    if (k < 0) throw std::invalid_argument("AklProver: need k >= 0");
    return build(i, k, l);
  }

  const std::map<std::tuple<Int, Int, Int>, std::shared_ptr<ConditionNode>>& table() const {
    return memo_;
  }

 private:
  std::shared_ptr<const ConditionNode> build(Int i, Int k, Int l) {
    auto key = std::make_tuple(i, k, l);
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (it->second->status == AklStatus::InProgress)
        throw std::logic_error("AklProver: cycle at " + it->second->key());
      return it->second;
    }
    auto node = std::make_shared<ConditionNode>();
    node->i = i;
    node->k = k;
    node->l = l;
    node->status = AklStatus::InProgress;
    memo_.emplace(key, node);

    if (i > n_ - 1) {
      node->status = AklStatus::Proved;
      node->rule = "beyond-top-degree";
    } else if (k == 0) {
      auto chk = check_rational("base twist l >= 0", BigRational(l), ">=", BigRational(0));
      node->inequalities.push_back(chk);
      node->status = chk.holds ? AklStatus::Proved : AklStatus::Unknown;
      node->rule = chk.holds ? "multiplier-ideal-base" : "base-twist-negative";
    } else if (i >= 2) {
      node->rule = "interior-recursion";
      add_premise(node, i, k - 1, l);
      for (Int r = 1; r <= k; ++r)
        add_premise(node, i - 1, k - r, mode_ == AklMode::Corrected ? l + r * d_ : r * d_);
      for (Int r = 1; r <= k; ++r)
        for (Int j = i + 1; j <= i + r; ++j)
          for (Int t = 0; t <= j - i; ++t)
            add_premise(node, j + t - 1, k - r, l + (i + r - j) * d_ - i + j - t);
      finish(node, true);
    } else {  // i == 1
      node->rule = "h1-recursion";
      for (Int r = 0; r <= k - 1; ++r) add_premise(node, 1, k - 1, l + r * d_);
      for (Int r = 1; r <= k - 1; ++r)
        for (Int j = 2; j <= 1 + r; ++j)
          for (Int t = 0; t <= j - 1; ++t)
            add_premise(node, j + t, k - r - 1, l + (r - j + 1) * d_ + j - t - 1);
      for (Int r = 1; r <= k; ++r)
        for (Int j = r; j <= n_ - 3; ++j)
          for (Int t = 0; t <= j + 1; ++t)
            add_premise(node, j + t, k - r, l + (r - j - 1) * d_ + j - t + 1);
      bool ineq_ok = enforce_all_r_;
      for (Int r = 1; r <= k; ++r) {
        BigRational bound = BigRational((n_ - r) * d_ - n_) - BigRational(k - r + 1) * m_;
        auto chk = check_rational("twist bound l >= (n-r)d-n-(k-r+1)m at r=" + std::to_string(r),
                                  BigRational(l), ">=", bound);
        node->inequalities.push_back(chk);
        if (enforce_all_r_) ineq_ok = ineq_ok && chk.holds;
        else ineq_ok = ineq_ok || chk.holds;
      }
      finish(node, ineq_ok);
    }
    if (node->status == AklStatus::InProgress)
      throw std::logic_error("AklProver: unresolved node " + node->key());
    return node;
  }

  void add_premise(const std::shared_ptr<ConditionNode>& node, Int i, Int k, Int l) {
    if (k >= node->k) throw std::logic_error("AklProver: premise does not decrease k");
    auto child = build(i, k, l);
    for (const auto& existing : node->premises)
      if (existing.get() == child.get()) return;
    node->premises.push_back(child);
  }

  void finish(const std::shared_ptr<ConditionNode>& node, bool inequalities_ok) {
    bool all = inequalities_ok;
    Int depth = 0;
    for (const auto& p : node->premises) {
      all = all && p->status == AklStatus::Proved;
      depth = std::max(depth, p->depth);
    }
    node->depth = depth + 1;
    node->status = all ? AklStatus::Proved : AklStatus::Unknown;
  }

  Int n_, d_;
  BigRational m_;
  AklMode mode_;
  bool enforce_all_r_;
  std::map<std::tuple<Int, Int, Int>, std::shared_ptr<ConditionNode>> memo_;
};

inline std::shared_ptr<const ConditionNode> prove_akl(Int n, Int d, const BigRational& m, Int i,
                                                      Int k, Int l,
                                                      AklMode mode = AklMode::Corrected,
                                                      bool enforce_all_r = true) {
  AklProver prover(n, d, m, mode, enforce_all_r);
  return prover.prove(i, k, l);
}

// ---------------------------------------------------------------------------
// Cross-check of the k = 1 recursion against the closed-form thresholds:
// interior degrees proved for l >= 0, and i = 1 proved for
// l >= max{(n-2)d, (n-1)d - n - m}.

struct GridPoint {
  Int i = 0;
  Int l = 0;
  bool operator==(const GridPoint&) const = default;
};

struct Prop72Report {
  Int n = 0, d = 0, m = 0;
  Int l_lo = 0, l_hi = 0, i_max = 0;
  AklMode mode = AklMode::Corrected;
  Int closed_form_i1_threshold = 0;
  std::optional<Int> dag_i1_min_proved;
  std::vector<GridPoint> both;
  std::vector<GridPoint> closed_form_only;
  std::vector<GridPoint> dag_only;
  std::vector<std::string> notes;
};

inline Prop72Report crosscheck_prop72(Int n, Int d, Int m, Int l_lo = -10,
                                      std::optional<Int> l_hi = std::nullopt,
                                      AklMode mode = AklMode::Corrected) {
  if (n < 4 || d < 2 || m < 1) throw std::invalid_argument("crosscheck_prop72: need n >= 4, d >= 2, m >= 1");
  Prop72Report rep;
  rep.n = n;
  rep.d = d;
  rep.m = m;
  rep.mode = mode;
  rep.closed_form_i1_threshold = std::max((n - 2) * d, (n - 1) * d - n - m);
  rep.l_lo = l_lo;
  rep.l_hi = l_hi.value_or(rep.closed_form_i1_threshold + 6);
  rep.i_max = n - 1;
  rep.notes.push_back("closed form read with l as the twist variable");
  rep.notes.push_back("closed form: i >= 2 proved for l >= 0; i = 1 proved for l >= " +
                      std::to_string(rep.closed_form_i1_threshold));

  AklProver prover(n, d, BigRational(m), mode);
  for (Int i = 1; i <= rep.i_max; ++i) {
    for (Int l = rep.l_lo; l <= rep.l_hi; ++l) {
      bool dag = prover.prove(i, 1, l)->status == AklStatus::Proved;
      bool cf = i >= 2 ? l >= 0 : l >= rep.closed_form_i1_threshold;
      if (dag && i == 1 && (!rep.dag_i1_min_proved || l < *rep.dag_i1_min_proved))
        rep.dag_i1_min_proved = l;
      if (dag && cf) rep.both.push_back(GridPoint{i, l});
      else if (cf) rep.closed_form_only.push_back(GridPoint{i, l});
      else if (dag) rep.dag_only.push_back(GridPoint{i, l});
    }
  }
  return rep;
}

}  // namespace hv
