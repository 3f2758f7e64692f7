// hv: cohomology dimensions, vanishing certificates, and degree bounds for
// smooth hypersurfaces in projective space.  Every subcommand prints one
// JSON record per result on stdout; output is deterministic byte for byte.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hv/hv.hpp"

using Json = nlohmann::ordered_json;
using namespace hv;

namespace {

struct OutputOptions {
  bool trace = false;
  bool plain = false;
  std::optional<std::pair<Int, Int>> table;
  int workers = 1;
};

std::pair<Int, Int> parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--table", "expected a range of the form lo:hi");
  Int lo = std::stoll(text.substr(0, colon));
  Int hi = std::stoll(text.substr(colon + 1));
  if (hi < lo) throw CLI::ValidationError("--table", "range must satisfy lo <= hi");
  return {lo, hi};
}

void add_output_flags(CLI::App* cmd, OutputOptions& out, bool sweepable) {
  cmd->add_flag("--trace", out.trace, "include the derivation trace");
  cmd->add_flag("--plain", out.plain, "print the bare value instead of JSON");
  if (sweepable) {
    cmd->add_option_function<std::string>(
           "--table", [&out](const std::string& s) { out.table = parse_range(s); },
           "sweep l over lo:hi, one record per value");
    cmd->add_option("--workers", out.workers, "worker threads for --table sweeps")
        ->check(CLI::Range(1, 64));
  }
}

// Emit one record per l in order; records are computed independently, so the
// sweep may run on several workers without changing a byte of output.
void run_sweep(const OutputOptions& out, Int lo, Int hi,
               const std::function<std::string(Int)>& render) {
  const Int count = hi - lo + 1;
  std::vector<std::string> lines(static_cast<std::size_t>(count));
  const int workers = static_cast<int>(std::min<Int>(out.workers, count));
  if (workers <= 1) {
    for (Int idx = 0; idx < count; ++idx) lines[static_cast<std::size_t>(idx)] = render(lo + idx);
  } else {
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (Int idx = w; idx < count; idx += workers)
          lines[static_cast<std::size_t>(idx)] = render(lo + idx);
      }));
    for (auto& j : jobs) j.get();
  }
  for (const auto& line : lines) std::cout << line << "\n";
}

void emit(const OutputOptions& out, const std::function<std::string(Int)>& render_json,
          const std::function<std::string(Int)>& render_plain, Int l) {
  const auto& render = out.plain ? render_plain : render_json;
  if (out.table) run_sweep(out, out.table->first, out.table->second, render);
  else std::cout << render(l) << "\n";
}

Json cohomology_json(const CohomologyDim& h, bool trace) {
  Json r;
  r["status"] = to_string(h.status);
  if (h.status == CohStatus::Zero) r["value"] = "0";
  if (h.status == CohStatus::Exact) r["value"] = h.value.str();
  if (h.status == CohStatus::NonzeroAtLeast) r["at_least"] = h.value.str();
  Json record;
  record["result"] = std::move(r);
  if (trace) record["trace"] = h.trace;
  return record;
}

std::string cohomology_plain(const CohomologyDim& h) {
  switch (h.status) {
    case CohStatus::Zero: return "0";
    case CohStatus::Exact: return h.value.str();
    case CohStatus::NonzeroAtLeast: return ">=" + h.value.str();
    case CohStatus::Unknown: return "unknown";
  }
  return "?";
}

Json certificate_json(const std::vector<CertCheck>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["description"] = c.description;
    e["lhs"] = c.lhs;
    e["relation"] = c.relation;
    e["rhs"] = c.rhs;
    e["holds"] = c.holds;
    arr.push_back(std::move(e));
  }
  return arr;
}

Json verdict_json(const Verdict& v) {
  Json record;
  record["result"] = Json{{"vanishes", v.vanishes ? "yes" : "unknown"}};
  record["citation"] = v.citation;
  record["certificate"] = certificate_json(v.certificate);
  return record;
}

std::string render_record(const std::string& command, Json inputs, Json body) {
  Json record;
  record["command"] = command;
  record["inputs"] = std::move(inputs);
  for (auto& [key, value] : body.items()) record[key] = std::move(value);
  return record.dump();
}

SparsePolynomial load_polynomial(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open polynomial file " + path);
  auto f = SparsePolynomial::parse(in);
  if (const char* env = std::getenv("HV_PRIME")) {
    long long p = std::stoll(env);
    if (p < 2) throw std::invalid_argument("HV_PRIME must be a prime >= 2");
    std::vector<PolyTerm> terms;
    for (const auto& t : f.terms())
      terms.push_back(PolyTerm{fp::reduce(t.coeff, static_cast<std::uint32_t>(p)), t.exps});
    f = SparsePolynomial(static_cast<std::uint32_t>(p), f.num_vars(), f.degree(), std::move(terms));
  }
  return f;
}

DivisorData divisor_from_flags(Int n, Int d, const std::string& m_text, Int support_degree,
                               Int a, bool reduced) {
  DivisorData dd;
  dd.n = n;
  dd.d = d;
  dd.m = parse_rational(m_text);
  dd.reduced = reduced;
  if (reduced) {
    if (denominator(dd.m) != 1)
      throw std::invalid_argument("a reduced divisor needs an integral degree m");
    dd.support_degree = static_cast<Int>(numerator(dd.m));
    dd.a = 0;
  } else {
    if (support_degree < 0)
      throw std::invalid_argument("supply --mz (degree of the support) or pass --reduced");
    dd.support_degree = support_degree;
    dd.a = a;
  }
  dd.validate();
  return dd;
}

Json akl_nodes_json(const AklProver& prover) {
  Json nodes = Json::array();
  for (const auto& [key, node] : prover.table()) {
    Json e;
    e["node"] = node->key();
    e["status"] = to_string(node->status);
    e["rule"] = node->rule;
    Json premises = Json::array();
    for (const auto& p : node->premises) premises.push_back(p->key());
    e["premises"] = std::move(premises);
    if (!node->inequalities.empty()) e["inequalities"] = certificate_json(node->inequalities);
    nodes.push_back(std::move(e));
  }
  return nodes;
}

Json grid_points_json(const std::vector<GridPoint>& pts) {
  Json arr = Json::array();
  for (const auto& pt : pts) arr.push_back(Json{{"i", pt.i}, {"l", pt.l}});
  return arr;
}

int run(int argc, char** argv) {
  CLI::App app{"cohomology dimensions, vanishing certificates, and degree bounds\n"
               "for smooth hypersurfaces in projective space (exact arithmetic)"};
  app.require_subcommand(1);

  // ---- bott ----------------------------------------------------------
  auto* bott = app.add_subcommand("bott", "H^q(P^n, Omega^p(l)) by Bott's formula");
  Int b_n = 0, b_p = 0, b_l = 0, b_q = 0;
  OutputOptions b_out;
  bott->add_option("--n", b_n, "ambient dimension")->required();
  bott->add_option("--p", b_p, "form degree")->required();
  bott->add_option("--l", b_l, "twist");
  bott->add_option("--q", b_q, "cohomology degree")->required();
  add_output_flags(bott, b_out, true);
  bott->callback([&] {
    auto render = [&](Int l) {
      auto h = bott_pn(PnQuery{b_n, b_p, l, b_q});
      Json inputs{{"n", b_n}, {"p", b_p}, {"l", l}, {"q", b_q}};
      return render_record("bott", inputs, cohomology_json(h, b_out.trace));
    };
    auto plain = [&](Int l) { return cohomology_plain(bott_pn(PnQuery{b_n, b_p, l, b_q})); };
    emit(b_out, render, plain, b_l);
  });

  // ---- coh-restricted -------------------------------------------------
  auto* cr = app.add_subcommand("coh-restricted",
                                "H^i(X, Omega^p_{P^n}|_X(l)) on a degree-d hypersurface");
  Int cr_n = 0, cr_d = 0, cr_p = 0, cr_l = 0, cr_i = 0;
  OutputOptions cr_out;
  cr->add_option("--n", cr_n, "ambient dimension")->required();
  cr->add_option("--d", cr_d, "hypersurface degree")->required();
  cr->add_option("--p", cr_p, "form degree")->required();
  cr->add_option("--l", cr_l, "twist");
  cr->add_option("--i", cr_i, "cohomology degree")->required();
  add_output_flags(cr, cr_out, true);
  cr->callback([&] {
    auto render = [&](Int l) {
      auto h = h_restricted_forms(cr_n, cr_d, cr_p, l, cr_i);
      Json inputs{{"n", cr_n}, {"d", cr_d}, {"p", cr_p}, {"l", l}, {"i", cr_i}};
      return render_record("coh-restricted", inputs, cohomology_json(h, cr_out.trace));
    };
    auto plain = [&](Int l) {
      return cohomology_plain(h_restricted_forms(cr_n, cr_d, cr_p, l, cr_i));
    };
    emit(cr_out, render, plain, cr_l);
  });

  // ---- coh-x ----------------------------------------------------------
  auto* cx = app.add_subcommand("coh-x", "H^i(X, Omega^p_X(l)) classification");
  Int cx_n = 0, cx_d = 0, cx_p = 0, cx_l = 0, cx_i = 0;
  std::string cx_poly;
  OutputOptions cx_out;
  cx->add_option("--n", cx_n, "ambient dimension")->required();
  cx->add_option("--d", cx_d, "hypersurface degree")->required();
  cx->add_option("--p", cx_p, "form degree")->required();
  cx->add_option("--l", cx_l, "twist");
  cx->add_option("--i", cx_i, "cohomology degree")->required();
  cx->add_option("--poly", cx_poly, "polynomial file; resolves borderline windows exactly");
  add_output_flags(cx, cx_out, true);
  cx->callback([&] {
    MilnorDimFn oracle;
    if (!cx_poly.empty()) oracle = milnor_dim_fn(load_polynomial(cx_poly));
    auto render = [&](Int l) {
      auto h = classify_form_cohomology(XFormQuery{cx_n, cx_d, cx_p, l, cx_i}, oracle);
      Json inputs{{"n", cx_n}, {"d", cx_d}, {"p", cx_p}, {"l", l}, {"i", cx_i}};
      if (!cx_poly.empty()) inputs["poly"] = cx_poly;
      return render_record("coh-x", inputs, cohomology_json(h, cx_out.trace));
    };
    auto plain = [&](Int l) {
      return cohomology_plain(
          classify_form_cohomology(XFormQuery{cx_n, cx_d, cx_p, l, cx_i}, oracle));
    };
    emit(cx_out, render, plain, cx_l);
  });

  // ---- hilbert --------------------------------------------------------
  auto* hb = app.add_subcommand("hilbert", "generic jacobian-ring dimensions [R_0..R_rho]");
  Int hb_n = 0, hb_d = 0;
  OutputOptions hb_out;
  hb->add_option("--n", hb_n, "ambient dimension")->required();
  hb->add_option("--d", hb_d, "hypersurface degree")->required();
  add_output_flags(hb, hb_out, false);
  hb->callback([&] {
    auto dims = milnor_hilbert(hb_n, hb_d);
    if (hb_out.plain) {
      std::string s = "[";
      for (std::size_t k = 0; k < dims.size(); ++k) s += (k ? "," : "") + dims[k].str();
      std::cout << s << "]\n";
      return;
    }
    Json vals = Json::array();
    for (const auto& v : dims) vals.push_back(v.str());
    Json body;
    body["result"] = Json{{"rho", static_cast<Int>(dims.size()) - 1}, {"dims", std::move(vals)}};
    std::cout << render_record("hilbert", Json{{"n", hb_n}, {"d", hb_d}}, std::move(body)) << "\n";
  });

  // ---- oracle ---------------------------------------------------------
  auto* orc = app.add_subcommand("oracle", "explicit-polynomial jacobian-ring computations");
  orc->require_subcommand(1);

  auto* oid = orc->add_subcommand("ideal-dims", "dim R_k by finite-field rank, k = 0..kmax");
  std::string oid_poly;
  Int oid_kmax = -1;
  OutputOptions oid_out;
  oid->add_option("--poly", oid_poly, "polynomial file")->required();
  oid->add_option("--kmax", oid_kmax, "largest degree (default rho)");
  add_output_flags(oid, oid_out, false);
  oid->callback([&] {
    auto f = load_polynomial(oid_poly);
    Int kmax = oid_kmax >= 0 ? oid_kmax : f.num_vars() * (f.degree() - 2);
    auto dims = ideal_dims(f, kmax);
    if (oid_out.plain) {
      std::string s = "[";
      for (std::size_t k = 0; k < dims.dims.size(); ++k)
        s += (k ? "," : "") + std::to_string(dims.dims[k]);
      std::cout << s << "]\n";
      return;
    }
    Json body;
    body["result"] = Json{{"prime", f.prime()},
                          {"kmax", kmax},
                          {"dims", dims.dims},
                          {"matches_generic", dims.matches_generic}};
    if (!dims.note.empty()) body["result"]["note"] = dims.note;
    std::cout << render_record("oracle ideal-dims", Json{{"poly", oid_poly}}, std::move(body))
              << "\n";
  });

  auto* omr = orc->add_subcommand("map-rank", "rank/coker of the jacobian multiplication map");
  std::string omr_poly;
  Int omr_r = 0;
  OutputOptions omr_out;
  omr->add_option("--poly", omr_poly, "polynomial file")->required();
  omr->add_option("--r", omr_r, "multiplier twist, r >= -1")->required();
  add_output_flags(omr, omr_out, false);
  omr->callback([&] {
    auto f = load_polynomial(omr_poly);
    auto mr = jacobian_map_rank(f, omr_r);
    if (omr_out.plain) {
      std::cout << mr.rank << " " << mr.coker_dim << "\n";
      return;
    }
    Json body;
    body["result"] = Json{{"prime", f.prime()}, {"rank", mr.rank}, {"coker_dim", mr.coker_dim}};
    std::cout << render_record("oracle map-rank", Json{{"poly", omr_poly}, {"r", omr_r}},
                               std::move(body))
              << "\n";
  });

  auto* opd = orc->add_subcommand("partials", "formal partial derivatives");
  std::string opd_poly;
  OutputOptions opd_out;
  opd->add_option("--poly", opd_poly, "polynomial file")->required();
  add_output_flags(opd, opd_out, false);
  opd->callback([&] {
    auto f = load_polynomial(opd_poly);
    auto parts = jacobian_partials(f);
    if (opd_out.plain) {
      for (const auto& g : parts) std::cout << g.to_text();
      return;
    }
    Json arr = Json::array();
    for (const auto& g : parts) {
      Json terms = Json::array();
      for (const auto& t : g.terms()) {
        std::string line = std::to_string(t.coeff);
        for (Int e : t.exps) line += " " + std::to_string(e);
        terms.push_back(line);
      }
      arr.push_back(Json{{"degree", g.degree()}, {"terms", std::move(terms)}});
    }
    Json body;
    body["result"] = Json{{"prime", f.prime()}, {"partials", std::move(arr)}};
    std::cout << render_record("oracle partials", Json{{"poly", opd_poly}}, std::move(body))
              << "\n";
  });

  // ---- certify-thm1 ---------------------------------------------------
  auto* ct = app.add_subcommand("certify-thm1",
                                "vanishing certificate for isolated singularities, n >= 4");
  Int ct_n = 0, ct_d = 0, ct_mz = -1, ct_a = 0, ct_k = 0, ct_l = 0, ct_i = 0;
  std::string ct_m;
  bool ct_reduced = false;
  OutputOptions ct_out;
  ct->add_option("--n", ct_n, "ambient dimension")->required();
  ct->add_option("--d", ct_d, "hypersurface degree")->required();
  ct->add_option("--m", ct_m, "divisor degree (integer or rational p/q)")->required();
  ct->add_option("--mz", ct_mz, "support degree (defaults to m for reduced divisors)");
  ct->add_option("--a", ct_a, "round-up defect: O_X(Z - ceil D) = O_X(-a)");
  ct->add_flag("--reduced", ct_reduced, "reduced divisor (forces a = 0, mz = m)");
  ct->add_option("--k", ct_k, "hodge-ideal index")->required();
  ct->add_option("--l", ct_l, "twist");
  ct->add_option("--i", ct_i, "cohomology degree")->required();
  add_output_flags(ct, ct_out, true);
  ct->callback([&] {
    auto dd = divisor_from_flags(ct_n, ct_d, ct_m, ct_mz, ct_a, ct_reduced);
    auto render = [&](Int l) {
      Json inputs{{"n", ct_n},
                  {"d", ct_d},
                  {"m", rational_str(dd.m)},
                  {"mz", dd.support_degree},
                  {"a", dd.a},
                  {"reduced", dd.reduced},
                  {"k", ct_k},
                  {"l", l},
                  {"i", ct_i}};
      return render_record("certify-thm1", std::move(inputs),
                           verdict_json(certify_thm1(dd, ct_k, l, ct_i)));
    };
    auto plain = [&](Int l) {
      return std::string(certify_thm1(dd, ct_k, l, ct_i).vanishes ? "yes" : "unknown");
    };
    emit(ct_out, render, plain, ct_l);
  });

  // ---- certify-surface ------------------------------------------------
  auto* cs = app.add_subcommand("certify-surface", "vanishing certificate on surfaces in P^3");
  Int cs_d = 0, cs_mz = -1, cs_a = 0, cs_k = 0, cs_i = 0, cs_lh = 0, cs_lz = 0;
  std::string cs_m = "1";
  bool cs_reduced = false, cs_prop16 = false;
  OutputOptions cs_out;
  cs->add_option("--d", cs_d, "hypersurface degree")->required();
  cs->add_option("--m", cs_m, "divisor degree (integer or rational p/q)");
  cs->add_option("--mz", cs_mz, "support degree");
  cs->add_option("--a", cs_a, "round-up defect");
  cs->add_flag("--reduced", cs_reduced, "reduced divisor");
  cs->add_option("--k", cs_k, "hodge-ideal index");
  cs->add_option("--i", cs_i, "cohomology degree");
  cs->add_option("--lh", cs_lh, "H coefficient of the class L")->required();
  cs->add_option("--lz", cs_lz, "Z coefficient of the class L");
  cs->add_flag("--prop16", cs_prop16, "check the borderline h^{1,1} criterion instead");
  add_output_flags(cs, cs_out, false);
  cs->callback([&] {
    if (cs_prop16) {
      auto v = certify_prop16(cs_d, AmpleClass{cs_lh, cs_lz}, std::max<Int>(cs_mz, 0));
      if (cs_out.plain) {
        std::cout << (v.vanishes ? "yes" : "unknown") << "\n";
        return;
      }
      Json inputs{{"d", cs_d}, {"Lh", cs_lh}, {"Lz", cs_lz}, {"prop16", true}};
      std::cout << render_record("certify-surface", std::move(inputs), verdict_json(v)) << "\n";
      return;
    }
    if (cs->count("--i") == 0)
      throw std::invalid_argument("certify-surface needs --i (or --prop16)");
    auto dd = divisor_from_flags(3, cs_d, cs_m, cs_mz, cs_a, cs_reduced);
    auto v = certify_surface(dd, cs_k, AmpleClass{cs_lh, cs_lz}, cs_i);
    if (cs_out.plain) {
      std::cout << (v.vanishes ? "yes" : "unknown") << "\n";
      return;
    }
    Json inputs{{"d", cs_d},          {"m", rational_str(dd.m)}, {"mz", dd.support_degree},
                {"a", dd.a},          {"reduced", dd.reduced},   {"k", cs_k},
                {"i", cs_i},          {"Lh", cs_lh},             {"Lz", cs_lz}};
    std::cout << render_record("certify-surface", std::move(inputs), verdict_json(v)) << "\n";
  });

  // ---- prove-akl ------------------------------------------------------
  auto* pa = app.add_subcommand("prove-akl", "recursive sufficient-condition prover");
  Int pa_n = 0, pa_d = 0, pa_i = 0, pa_k = 0, pa_l = 0;
  std::string pa_m, pa_mode = "corrected", pa_ineq = "all";
  OutputOptions pa_out;
  pa->add_option("--n", pa_n, "ambient dimension")->required();
  pa->add_option("--d", pa_d, "hypersurface degree")->required();
  pa->add_option("--m", pa_m, "divisor degree (integer or rational p/q)")->required();
  pa->add_option("--i", pa_i, "cohomology degree")->required();
  pa->add_option("--k", pa_k, "hodge-ideal index")->required();
  pa->add_option("--l", pa_l, "twist");
  pa->add_option("--mode", pa_mode, "premise twist reading")
      ->check(CLI::IsMember({"corrected", "verbatim"}));
  pa->add_option("--ineq", pa_ineq, "enforce the twist bound for all r or any r")
      ->check(CLI::IsMember({"all", "any"}));
  add_output_flags(pa, pa_out, true);
  pa->callback([&] {
    AklMode mode = pa_mode == "verbatim" ? AklMode::Verbatim : AklMode::Corrected;
    bool all_r = pa_ineq == "all";
    auto render = [&](Int l) {
      AklProver prover(pa_n, pa_d, parse_rational(pa_m), mode, all_r);
      auto node = prover.prove(pa_i, pa_k, l);
      Json inputs{{"n", pa_n}, {"d", pa_d}, {"m", pa_m},       {"i", pa_i},
                  {"k", pa_k}, {"l", l},    {"mode", pa_mode}, {"ineq", pa_ineq}};
      Json body;
      body["result"] =
          Json{{"status", to_string(node->status)}, {"rule", node->rule}, {"depth", node->depth}};
      if (pa_out.trace) body["nodes"] = akl_nodes_json(prover);
      return render_record("prove-akl", std::move(inputs), std::move(body));
    };
    auto plain = [&](Int l) {
      AklProver prover(pa_n, pa_d, parse_rational(pa_m), mode, all_r);
      return std::string(to_string(prover.prove(pa_i, pa_k, l)->status));
    };
    emit(pa_out, render, plain, pa_l);
  });

  // ---- crosscheck-72 --------------------------------------------------
  auto* cc = app.add_subcommand("crosscheck-72",
                                "compare the k=1 prover against closed-form thresholds");
  Int cc_n = 0, cc_d = 0, cc_m = 0, cc_lmin = -10;
  std::optional<Int> cc_lmax;
  std::string cc_mode = "corrected";
  OutputOptions cc_out;
  cc->add_option("--n", cc_n, "ambient dimension")->required();
  cc->add_option("--d", cc_d, "hypersurface degree")->required();
  cc->add_option("--m", cc_m, "divisor degree (integer)")->required();
  cc->add_option("--lmin", cc_lmin, "smallest twist in the grid");
  cc->add_option_function<Int>(
      "--lmax", [&](Int v) { cc_lmax = v; }, "largest twist in the grid");
  cc->add_option("--mode", cc_mode, "premise twist reading")
      ->check(CLI::IsMember({"corrected", "verbatim"}));
  add_output_flags(cc, cc_out, false);
  cc->callback([&] {
    AklMode mode = cc_mode == "verbatim" ? AklMode::Verbatim : AklMode::Corrected;
    auto rep = crosscheck_prop72(cc_n, cc_d, cc_m, cc_lmin, cc_lmax, mode);
    if (cc_out.plain) {
      std::cout << rep.closed_form_i1_threshold << " "
                << (rep.dag_i1_min_proved ? std::to_string(*rep.dag_i1_min_proved) : "none") << " "
                << rep.closed_form_only.size() << " " << rep.dag_only.size() << "\n";
      return;
    }
    Json inputs{{"n", cc_n},        {"d", cc_d},        {"m", cc_m},
                {"lmin", rep.l_lo}, {"lmax", rep.l_hi}, {"mode", cc_mode}};
    Json body;
    body["result"] = Json{
        {"closed_form_i1_threshold", rep.closed_form_i1_threshold},
        {"dag_i1_min_proved", rep.dag_i1_min_proved ? Json(*rep.dag_i1_min_proved) : Json(nullptr)},
        {"both", grid_points_json(rep.both)},
        {"closed_form_only", grid_points_json(rep.closed_form_only)},
        {"dag_only", grid_points_json(rep.dag_only)},
    };
    body["notes"] = rep.notes;
    std::cout << render_record("crosscheck-72", std::move(inputs), std::move(body)) << "\n";
  });

  // ---- bounds ---------------------------------------------------------
  auto* bd = app.add_subcommand("bounds", "closed-form degree and length bounds");
  bd->require_subcommand(1);

  auto* bl = bd->add_subcommand("length", "bound on length(Z_k)");
  Int bl_n = 0, bl_d = 0, bl_m = 0, bl_k = 0;
  OutputOptions bl_out;
  bl->add_option("--n", bl_n)->required();
  bl->add_option("--d", bl_d)->required();
  bl->add_option("--m", bl_m)->required();
  bl->add_option("--k", bl_k)->required();
  add_output_flags(bl, bl_out, false);
  bl->callback([&] {
    auto b = length_bound(bl_n, bl_d, bl_m, bl_k);
    if (bl_out.plain) {
      std::cout << b.bound.str() << "\n";
      return;
    }
    Json body;
    body["result"] = Json{{"l", b.l}, {"bound", b.bound.str()}};
    std::cout << render_record("bounds length",
                               Json{{"n", bl_n}, {"d", bl_d}, {"m", bl_m}, {"k", bl_k}},
                               std::move(body))
              << "\n";
  });

  auto* bi = bd->add_subcommand("independent", "independent-conditions degree for S_t");
  Int bi_n = 0, bi_d = 0, bi_m = 0, bi_t = 0;
  OutputOptions bi_out;
  bi->add_option("--n", bi_n)->required();
  bi->add_option("--d", bi_d)->required();
  bi->add_option("--m", bi_m)->required();
  bi->add_option("--t", bi_t)->required();
  add_output_flags(bi, bi_out, false);
  bi->callback([&] {
    auto r = independent_conditions_degree(bi_n, bi_d, bi_m, bi_t);
    if (bi_out.plain) {
      std::cout << r.degree << "\n";
      return;
    }
    Json body;
    body["result"] = Json{{"k", r.k},
                          {"l", r.l},
                          {"degree", r.degree},
                          {"s_t_empty", r.s_t_empty},
                          {"interpretation", r.interpretation}};
    std::cout << render_record("bounds independent",
                               Json{{"n", bi_n}, {"d", bi_d}, {"m", bi_m}, {"t", bi_t}},
                               std::move(body))
              << "\n";
  });

  auto* bj = bd->add_subcommand("jets", "jet-separation degree along S_t");
  Int bj_n = 0, bj_d = 0, bj_m = 0, bj_t = 0, bj_j = 0;
  OutputOptions bj_out;
  bj->add_option("--n", bj_n)->required();
  bj->add_option("--d", bj_d)->required();
  bj->add_option("--m", bj_m)->required();
  bj->add_option("--t", bj_t)->required();
  bj->add_option("--j", bj_j)->required();
  add_output_flags(bj, bj_out, false);
  bj->callback([&] {
    auto r = jet_separation_degree(bj_n, bj_d, bj_m, bj_t, bj_j);
    if (bj_out.plain) {
      std::cout << r.degree << "\n";
      return;
    }
    Json body;
    body["result"] = Json{{"k", r.k}, {"l", r.l}, {"degree", r.degree}};
    std::cout << render_record(
                     "bounds jets",
                     Json{{"n", bj_n}, {"d", bj_d}, {"m", bj_m}, {"t", bj_t}, {"j", bj_j}},
                     std::move(body))
              << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
