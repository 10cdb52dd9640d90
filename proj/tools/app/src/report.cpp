#include "feq_app/report.hpp"

#include <cstdio>
#include <sstream>

namespace feq::app {

using json = nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::NotVerified:
      return "not_verified";
    case Status::Unverifiable:
      return "unverifiable";
  }
  return "?";
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json to_json(const GroupSpec& g) { return {{"free_rank", g.free_rank()}, {"torsion", g.torsion_orders()}}; }

json to_json(const GroupElement& x) { return x.coords; }

json to_json(const Exponential& m) {
  json mult = json::array();
  for (const auto& l : m.free_multipliers()) mult.push_back(complex_json(l));
  return {{"torsion_roots", m.torsion_roots()}, {"free_multipliers", mult}};
}

json to_json(const AdditiveFunction& a) {
  json c = json::array();
  for (const auto& v : a.free_coeffs()) c.push_back(complex_json(v));
  return {{"free_coeffs", c}};
}

json to_json(const TwoGPeriodic& T) {
  json table = json::object();
  for (const auto& c : enumerate_cosets_2g(T.group())) {
    std::string key;
    for (auto b : c.bits) key.push_back(static_cast<char>('0' + b));
    table[key] = complex_json(T.value(c));
  }
  return {{"table", table}};
}

json to_json(const Measure& mu) {
  json atoms = json::array();
  for (const auto& [p, w] : mu.atoms()) atoms.push_back({{"point", to_json(p)}, {"weight", complex_json(w)}});
  return {{"atoms", atoms}};
}

json to_json(const SolutionParams& p) {
  json out = {{"alpha", complex_json(p.alpha)},
              {"beta", complex_json(p.beta)},
              {"gamma", complex_json(p.gamma)},
              {"delta", complex_json(p.delta)},
              {"b", complex_json(p.b)}};
  if (p.m) out["m"] = to_json(*p.m);
  if (p.m0) out["m0"] = to_json(*p.m0);
  if (p.a) out["a"] = to_json(*p.a);
  if (p.T) out["T"] = to_json(*p.T);
  if (p.arbitrary_g) out["g"] = p.arbitrary_g->is_closed_form() ? "closed form" : "value table";
  if (p.arbitrary_h) out["h"] = p.arbitrary_h->is_closed_form() ? "closed form" : "value table";
  return out;
}

json to_json(const Report& r) {
  json families = json::array();
  for (const auto& f : r.families) {
    json fam = {{"name", f.name},
                {"theorem", f.theorem},
                {"case", f.case_id},
                {"kind", f.kind},
                {"params", f.params},
                {"status", to_string(f.status)},
                {"pass", f.status != Status::Fail},
                {"near_threshold", f.near_threshold},
                {"residual", nullptr},
                {"argmax", nullptr},
                {"pairs", 0}};
    if (f.residual) {
      fam["residual"] = f.residual->max;
      fam["argmax"] = {{"x", to_json(f.residual->x)}, {"y", to_json(f.residual->y)}};
      fam["pairs"] = f.residual->pairs;
    }
    if (!f.note.empty()) fam["note"] = f.note;
    if (f.factorization) {
      fam["factorization"] = {{"rank1", f.factorization->rank1},
                              {"sigma1", f.factorization->sigma1},
                              {"sigma2", f.factorization->sigma2},
                              {"reconstruction_error", f.factorization->reconstruction_error}};
    }
    families.push_back(fam);
  }

  json characters = json::array();
  for (const auto& c : r.characters) {
    json e = to_json(c.m);
    e["even"] = c.m.is_even();
    if (c.mu_hat) e["mu_hat"] = complex_json(*c.mu_hat);
    characters.push_back(e);
  }

  json skipped = json::array();
  for (const auto& s : r.skipped) {
    skipped.push_back({{"exponential", to_json(s.m)}, {"reason", s.reason}, {"mu_hat_abs", s.mu_hat_abs}});
  }

  json out = {{"equation", to_string(r.equation)},
              {"group", to_json(r.group)},
              {"tolerance", r.tolerance},
              {"window", r.window},
              {"characters", characters},
              {"families", families},
              {"skipped", skipped},
              {"all_pass", r.all_pass},
              {"timing_ms", r.timing_ms}};
  if (r.measure) out["measure"] = to_json(*r.measure);
  return out;
}

namespace {

std::string fmt_double(double v, const char* spec = "%.3e") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string fmt_complex(Complex c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", c.real(), c.imag());
  return buf;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

}  // namespace

std::string render_table(const Report& r) {
  std::ostringstream os;
  os << "equation " << to_string(r.equation) << " on " << to_string(r.group) << ", tolerance "
     << fmt_double(r.tolerance, "%.1e");
  if (!r.group.is_finite()) os << ", window " << r.window;
  os << "\n";

  if (!r.characters.empty()) {
    os << "\n" << pad("character", 36) << pad("even", 6) << "mu_hat\n";
    for (const auto& c : r.characters) {
      os << pad(c.m.describe(), 36) << pad(c.m.is_even() ? "yes" : "no", 6)
         << (c.mu_hat ? fmt_complex(*c.mu_hat) : "-") << "\n";
    }
  }

  if (!r.families.empty()) {
    os << "\n" << pad("family", 28) << pad("case", 22) << pad("residual", 12) << pad("pairs", 8) << "status\n";
    for (const auto& f : r.families) {
      os << pad(f.name, 28) << pad(f.theorem + (f.case_id.empty() ? "" : "(" + f.case_id + ")"), 22)
         << pad(f.residual ? fmt_double(f.residual->max) : "-", 12)
         << pad(f.residual ? std::to_string(f.residual->pairs) : "-", 8) << to_string(f.status);
      if (f.near_threshold) os << " [near threshold]";
      if (f.factorization) os << (f.factorization->rank1 ? " [rank 1]" : " [not rank 1]");
      if (!f.note.empty()) os << "  " << f.note;
      os << "\n";
    }
  }

  for (const auto& s : r.skipped) os << "skipped " << s.m.describe() << ": " << s.reason << "\n";
  os << "\n" << (r.all_pass ? "ALL PASS" : "FAILURES") << " (" << fmt_double(r.timing_ms, "%.1f") << " ms)\n";
  return os.str();
}

}  // namespace feq::app
