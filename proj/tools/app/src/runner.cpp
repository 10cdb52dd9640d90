#include "feq_app/runner.hpp"

#include <chrono>
#include <map>

#include "feq/solvers.hpp"
#include "feq/verifier.hpp"

namespace feq::app {

namespace {

using json = nlohmann::json;

struct Candidate {
  FamilyReport report;
  std::map<std::string, Slot> fns;
  std::optional<Theorem> theorem;
};

Candidate make_candidate(std::string name, std::string theorem, std::string case_id, std::string kind) {
  Candidate c;
  c.report.name = std::move(name);
  c.report.theorem = std::move(theorem);
  c.report.case_id = std::move(case_id);
  c.report.kind = std::move(kind);
  return c;
}

Measure measure_of(const Config& cfg) {
  if (cfg.equation == Equation::Dalembert) return dalembert_measure(cfg.group);
  return *cfg.measure;
}

void solve_families(const Config& cfg, const std::vector<Exponential>& cands, Report& rep, std::vector<Candidate>& out) {
  if (cfg.equation == Equation::Sincos || cfg.equation == Equation::Dalem1) {
    throw ConfigError("task solve is not available for equation " + to_string(cfg.equation) +
                      "; list the families explicitly");
  }
  const auto mu = measure_of(cfg);
  switch (cfg.equation) {
    case Equation::Fech: {
      const auto res = solve_fech(mu, cands, cfg.fech, cfg.tolerance);
      for (const auto& f : res.families) {
        const bool pair = f.kind == FechFamily::Kind::ExpPair;
        auto c = make_candidate(to_string(f.kind) + " " + f.m.describe(), "fech", pair ? "i" : "ii", to_string(f.kind));
        auto& p = c.report.params;
        p[pair ? "m" : "m0"] = to_json(f.m);
        if (pair) {
          p["gamma"] = complex_json(f.gamma);
          p["delta"] = complex_json(f.delta);
          p["mu_hat_m_check"] = complex_json(f.mu_hat_m_check);
        } else {
          p["beta"] = complex_json(f.beta);
          if (f.a) p["a"] = to_json(*f.a);
        }
        p["mu_hat_m"] = complex_json(f.mu_hat_m);
        c.report.near_threshold = f.near_threshold;
        c.fns.emplace("f", f.f);
        c.fns.emplace("k", f.k);
        out.push_back(std::move(c));
      }
      for (const auto& s : res.skipped) rep.skipped.push_back({s.m, s.reason, s.mu_hat_abs});
      return;
    }
    case Equation::WilsonModified: {
      const auto res = solve_wilson_modified(mu, cands, cfg.alpha, cfg.tolerance);
      for (const auto& f : res.families) {
        const bool noneven = f.kind == WilsonModFamily::Kind::NonEvenExp;
        auto c = make_candidate(to_string(f.kind) + " " + f.m.describe(), "wilson_modified", noneven ? "i" : "ii",
                                to_string(f.kind));
        auto& p = c.report.params;
        p[noneven ? "m" : "m0"] = to_json(f.m);
        p["alpha"] = complex_json(f.alpha);
        p["mu_hat_m"] = complex_json(f.mu_hat_m);
        p["mu_hat_m_check"] = complex_json(f.mu_hat_m_check);
        c.report.near_threshold = f.near_threshold;
        c.fns.emplace("f", f.f);
        c.fns.emplace("k", f.k);
        out.push_back(std::move(c));
      }
      for (const auto& s : res.skipped) rep.skipped.push_back({s.m, s.reason, s.mu_hat_abs});
      return;
    }
    case Equation::Gajda:
    case Equation::Dalembert: {
      const auto theorem = to_string(cfg.equation);
      for (const auto& m : cands) {
        if (!is_canonical_orientation(m)) continue;  // m-check gives the same f
        const auto f = cfg.equation == Equation::Gajda ? reduce_gajda(mu, m) : reduce_dalembert(m);
        auto c = make_candidate(theorem + " " + m.describe(), theorem, "", "exp_pair");
        c.report.params["m"] = to_json(m);
        c.report.params["mu_hat_m"] = complex_json(mu_hat(mu, m));
        c.report.params["mu_hat_m_check"] = complex_json(mu_hat(mu, m.reflected()));
        c.fns.emplace("f", f);
        out.push_back(std::move(c));
      }
      return;
    }
    case Equation::Sincos:
    case Equation::Dalem1:
      break;
  }
}

Candidate explicit_candidate(const Config& cfg, const ExplicitFamily& fam) {
  if (!fam.theorem) {
    auto c = make_candidate(fam.name, to_string(cfg.equation), "", "explicit");
    for (const auto& [k, f] : fam.functions) c.fns.emplace(k, f);
    return c;
  }
  auto c = make_candidate(fam.name, to_string(*fam.theorem), roman(fam.case_number), "theorem");
  c.theorem = fam.theorem;
  c.report.params = to_json(fam.params);
  try {
    switch (*fam.theorem) {
      case Theorem::Even: {
        auto s = build_even_case(static_cast<EvenCase>(fam.case_number), fam.params, cfg.group,
                                 {cfg.tolerance, cfg.window, false});
        c.fns.emplace("F1", s.F);
        c.fns.emplace("g", s.g);
        c.fns.emplace("h", s.h_even);
        break;
      }
      case Theorem::Odd: {
        auto s = build_odd_case(static_cast<OddCase>(fam.case_number), fam.params, cfg.group,
                                {cfg.tolerance, cfg.window, false});
        c.fns.emplace("F1", s.H);
        c.fns.emplace("g", s.g);
        c.fns.emplace("h", s.h_odd);
        break;
      }
      case Theorem::Combined: {
        auto s = build_combined_case(static_cast<CombinedCase>(fam.case_number), fam.params, cfg.group,
                                     {cfg.tolerance, cfg.window, false});
        c.fns.emplace("F1", s.F1);
        c.fns.emplace("F2", s.F2);
        c.fns.emplace("g", s.g);
        c.fns.emplace("h", s.h);
        break;
      }
    }
  } catch (const ParameterError& e) {
    throw ConfigError("family '" + fam.name + "': " + e.what());
  }
  return c;
}

/// Left side and right side of the equation as the functions
/// (F1, F2, g, h) of F1(x+y) + F2(x-y) = g(x) h(y), or as a sincos form.
struct Shape {
  bool measure_free = false;
  Function f1;
  Function f2;
  Function g;
  Function h;
};

Shape shape_of(const Config& cfg, const Candidate& c) {
  const auto fn = [&](const char* k) { return c.fns.at(k).function(); };
  if (c.theorem) {
    switch (*c.theorem) {
      case Theorem::Even:
        return {true, fn("F1"), fn("F1"), fn("g"), fn("h").scaled(2.0)};
      case Theorem::Odd:
        return {true, fn("F1"), fn("F1").scaled(-1.0), fn("g"), fn("h").scaled(2.0)};
      case Theorem::Combined:
        return {true, fn("F1"), fn("F2"), fn("g"), fn("h")};
    }
  }
  switch (cfg.equation) {
    case Equation::Dalem1:
      return {true, fn("F1"), fn("F2"), fn("g"), fn("h")};
    case Equation::Sincos:
      return {false, fn("f1"), fn("f2"), fn("g"), fn("h")};
    case Equation::Fech:
      return {false, fn("f"), fn("f"), fn("f"), fn("k")};
    case Equation::WilsonModified:
      return {false, fn("f"), fn("f"), fn("k"), fn("f")};
    case Equation::Gajda:
    case Equation::Dalembert:
      return {false, fn("f"), fn("f"), fn("f"), fn("f")};
  }
  throw ConfigError("unknown equation");
}

std::optional<std::string> unrealized(const Candidate& c) {
  for (const auto& [k, s] : c.fns) {
    if (s.is_arbitrary()) return "arbitrary function " + k + " has no realization";
  }
  return std::nullopt;
}

void verify(const Config& cfg, Candidate& c) {
  if (auto why = unrealized(c)) {
    c.report.status = Status::Unverifiable;
    c.report.note = *why;
    return;
  }
  const Domain dom{cfg.group, cfg.window};
  const auto s = shape_of(cfg, c);
  // The residual helpers all reduce to these two sweeps; the equation-specific
  // ones are used where the slot order matches.
  Residual r;
  if (s.measure_free) {
    r = residual_dalem1(s.f1, s.f2, s.g, s.h, dom);
  } else {
    const auto mu = measure_of(cfg);
    switch (cfg.equation) {
      case Equation::Fech:
        r = residual_fech(c.fns.at("f").function(), c.fns.at("k").function(), mu, dom);
        break;
      case Equation::WilsonModified:
        r = residual_wilson_modified(c.fns.at("f").function(), c.fns.at("k").function(), mu, dom);
        break;
      case Equation::Gajda:
      case Equation::Dalembert:
        r = residual_gajda(c.fns.at("f").function(), mu, dom);
        break;
      default:
        r = residual_sincos(s.f1, s.f2, s.g, s.h, mu, dom);
        break;
    }
  }
  c.report.residual = r;
  c.report.status = r.passes(cfg.tolerance) ? Status::Pass : Status::Fail;
}

void factorize(const Config& cfg, Candidate& c) {
  if (unrealized(c)) return;
  const auto s = shape_of(cfg, c);
  ComplexMatrix L(0, 0);
  if (s.measure_free) {
    L = dalem1_matrix(s.f1, s.f2);
  } else {
    const auto mu = measure_of(cfg);
    const auto els = enumerate_elements(cfg.group);
    L = ComplexMatrix(els.size(), els.size());
    for (std::size_t i = 0; i < els.size(); ++i) {
      for (std::size_t j = 0; j < els.size(); ++j) L(i, j) = sincos_lhs(s.f1, s.f2, mu, els[i], els[j]);
    }
  }
  const auto res = rank1_factorize(L);
  FactorizationInfo info;
  if (const auto* f = std::get_if<Rank1Factors>(&res)) {
    info = {true, f->sigma1, f->sigma2, max_reconstruction_error(L, *f)};
  } else {
    const auto& n = std::get<NotRank1>(res);
    info = {false, n.sigma1, n.sigma2, 0.0};
  }
  c.report.factorization = info;
}

}  // namespace

Report run_config(const Config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.equation = cfg.equation;
  rep.group = cfg.group;
  rep.tolerance = cfg.tolerance;
  rep.window = cfg.window;
  if (cfg.equation != Equation::Dalem1) rep.measure = measure_of(cfg);

  if (cfg.has_task(Task::Factorize) && !cfg.group.is_finite()) {
    throw ConfigError("task factorize needs a finite group, got " + to_string(cfg.group));
  }

  std::optional<std::vector<Exponential>> cands;
  const auto candidates = [&]() -> const std::vector<Exponential>& {
    if (!cands) cands = cfg.exponentials ? *cfg.exponentials : enumerate_exponentials(cfg.group);
    return *cands;
  };

  if (cfg.has_task(Task::Enumerate)) {
    for (const auto& m : candidates()) {
      CharacterReport cr{m, std::nullopt};
      if (rep.measure) cr.mu_hat = mu_hat(*rep.measure, m);
      rep.characters.push_back(cr);
    }
  }

  std::vector<Candidate> families;
  if (cfg.has_task(Task::Solve)) solve_families(cfg, candidates(), rep, families);
  for (const auto& fam : cfg.families) families.push_back(explicit_candidate(cfg, fam));

  for (auto& c : families) {
    if (cfg.has_task(Task::Verify)) verify(cfg, c);
    if (cfg.has_task(Task::Factorize)) factorize(cfg, c);
    if (c.report.status == Status::Fail) rep.all_pass = false;
    rep.families.push_back(std::move(c.report));
  }

  rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

int exit_code(const Report& r) { return r.all_pass ? 0 : 1; }

}  // namespace feq::app
