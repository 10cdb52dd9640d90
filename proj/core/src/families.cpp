#include "feq/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include "feq/errors.hpp"

namespace feq {

namespace {

constexpr std::array<const char*, 6> kRoman = {"i", "ii", "iii", "iv", "v", "vi"};

std::string case_label(const char* theorem, int n) { return std::string(theorem) + "(" + roman(n) + ")"; }

void require(bool cond, const std::string& what) {
  if (!cond) throw ParameterError(what);
}

bool nonzero(Complex c, double tol) { return std::abs(c) > tol; }

const Exponential& need_m(const SolutionParams& p, const GroupSpec& g, const std::string& where) {
  require(p.m.has_value(), where + " needs an exponential m");
  if (!(p.m->group() == g)) throw StructuralError(where + ": m lives on a different group");
  return *p.m;
}

const Exponential& need_even_m0(const SolutionParams& p, const GroupSpec& g, const std::string& where,
                                double tol) {
  require(p.m0.has_value(), where + " needs an exponential m0");
  if (!(p.m0->group() == g)) throw StructuralError(where + ": m0 lives on a different group");
  require(p.m0->is_even(tol), where + " needs m0 even, got " + p.m0->describe());
  return *p.m0;
}

AdditiveFunction additive_or_zero(const SolutionParams& p, const GroupSpec& g) {
  if (!p.a) return AdditiveFunction::zero(g);
  if (!(p.a->group() == g)) throw StructuralError("additive function lives on a different group");
  return *p.a;
}

std::optional<PeriodicPart> periodic(const SolutionParams& p, const GroupSpec& g, int sign) {
  if (!p.T) return std::nullopt;
  if (!(p.T->group() == g)) throw StructuralError("2G-periodic function lives on a different group");
  return PeriodicPart{sign, *p.T};
}

ExpPolyFunction T_only(const SolutionParams& p, const GroupSpec& g, int sign) {
  return ExpPolyFunction(g, {}, periodic(p, g, sign));
}

/// alpha m + beta m-check (+ sign T).
ExpPolyFunction pair_form(const Exponential& m, Complex alpha, Complex beta, const GroupSpec& g,
                          std::optional<PeriodicPart> T = std::nullopt) {
  const auto zero = AdditiveFunction::zero(g);
  return ExpPolyFunction(g, {{m, zero, alpha}, {m.reflected(), zero, beta}}, std::move(T));
}

Function check_realization(const Function& f, const GroupSpec& g, Parity parity, const FamilyOptions& opt,
                           const std::string& where) {
  if (!(f.group() == g)) throw StructuralError(where + ": arbitrary function lives on a different group");
  if (parity == Parity::Any) return f;
  const Domain dom{g, opt.window};
  for (const auto& x : dom.points()) {
    const Complex v = f(x);
    const Complex r = f(neg(g, x));
    const double dev = parity == Parity::Even ? std::abs(v - r) : std::abs(v + r);
    if (dev > opt.tol) {
      throw ParameterError(where + ": arbitrary function must be " + (parity == Parity::Even ? "even" : "odd") +
                           ", fails at " + to_string(x));
    }
  }
  return f;
}

Slot arbitrary_slot(const std::optional<Function>& f, const GroupSpec& g, Parity parity, const FamilyOptions& opt,
                    const std::string& where) {
  if (!f) return Slot::arbitrary(parity);
  return check_realization(*f, g, parity, opt, where);
}

}  // namespace

std::string roman(int n) {
  if (n < 1 || n > static_cast<int>(kRoman.size())) return std::to_string(n);
  return kRoman[static_cast<std::size_t>(n - 1)];
}

int parse_roman(const std::string& s) {
  std::string lower;
  for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (std::size_t i = 0; i < kRoman.size(); ++i) {
    if (lower == kRoman[i]) return static_cast<int>(i) + 1;
  }
  return 0;
}

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::Even:
      return "even";
    case Theorem::Odd:
      return "odd";
    case Theorem::Combined:
      return "combined";
  }
  return "?";
}

std::string to_string(EvenCase c) { return case_label("even", static_cast<int>(c)); }
std::string to_string(OddCase c) { return case_label("odd", static_cast<int>(c)); }
std::string to_string(CombinedCase c) { return case_label("combined", static_cast<int>(c)); }

const Function& Slot::function() const {
  if (!value_) throw EvaluationError("slot holds an arbitrary function with no realization");
  return *value_;
}

SolutionFamily to_family(const EvenSolution& s) {
  return {Theorem::Even, static_cast<int>(s.id), s.params, {{"F", s.F}, {"g", s.g}, {"h_e", s.h_even}}};
}

SolutionFamily to_family(const OddSolution& s) {
  return {Theorem::Odd, static_cast<int>(s.id), s.params, {{"H", s.H}, {"g", s.g}, {"h_o", s.h_odd}}};
}

SolutionFamily to_family(const CombinedSolution& s) {
  return {Theorem::Combined,
          static_cast<int>(s.id),
          s.params,
          {{"F1", s.F1}, {"F2", s.F2}, {"g", s.g}, {"h", s.h}}};
}

EvenSolution build_even_case(EvenCase id, const SolutionParams& p, const GroupSpec& g, const FamilyOptions& opt) {
  const auto where = to_string(id);
  const auto zero = Function::zero(g);
  switch (id) {
    case EvenCase::I: {
      const auto& m = need_m(p, g, where);
      require(nonzero(p.gamma, opt.tol), where + " needs gamma != 0");
      require(!m.is_even(opt.tol), where + " needs m != m-check, got even " + m.describe());
      return {id, p, pair_form(m, p.gamma * p.alpha, p.gamma * p.beta, g), pair_form(m, p.alpha, p.beta, g),
              pair_form(m, p.gamma / 2.0, p.gamma / 2.0, g)};
    }
    case EvenCase::II: {
      const auto& m0 = need_even_m0(p, g, where, opt.tol);
      require(nonzero(p.alpha, opt.tol), where + " needs alpha != 0");
      const auto a = additive_or_zero(p, g);
      return {id, p, ExpPolyFunction::term(m0, a, p.alpha * p.beta),
              ExpPolyFunction::term(m0, a.scaled(1.0 / p.alpha), p.beta), ExpPolyFunction::exponential(m0, p.alpha)};
    }
    case EvenCase::III: {
      Slot h_e = Slot::arbitrary(Parity::Even);
      if (p.arbitrary_h) h_e = even_part(check_realization(*p.arbitrary_h, g, Parity::Any, opt, where));
      return {id, p, zero, zero, h_e};
    }
    case EvenCase::IV: {
      if (p.arbitrary_h) check_realization(*p.arbitrary_h, g, Parity::Odd, opt, where + " h");
      return {id, p, zero, arbitrary_slot(p.arbitrary_g, g, Parity::Any, opt, where + " g"), zero};
    }
  }
  throw ParameterError("unknown even case");
}

OddSolution build_odd_case(OddCase id, const SolutionParams& p, const GroupSpec& g, const FamilyOptions& opt) {
  const auto where = to_string(id);
  const auto zero = Function::zero(g);
  switch (id) {
    case OddCase::I: {
      const auto& m = need_m(p, g, where);
      require(!m.is_even(opt.tol), where + " needs m != m-check, got even " + m.describe());
      return {id, p, pair_form(m, p.alpha * p.gamma, -p.beta * p.gamma, g, periodic(p, g, 1)),
              pair_form(m, p.alpha, p.beta, g), pair_form(m, p.gamma / 2.0, -p.gamma / 2.0, g)};
    }
    case OddCase::II: {
      const auto& m0 = need_even_m0(p, g, where, opt.tol);
      require(nonzero(p.alpha, opt.tol), where + " needs alpha != 0");
      require(p.a.has_value() && !p.a->is_zero(opt.tol), where + " needs a nonzero additive function");
      const auto a = additive_or_zero(p, g);
      ExpPolyFunction H(g, {{m0, a, p.b}}, periodic(p, g, 1));
      return {id, p, H, ExpPolyFunction::exponential(m0, 1.0 / p.alpha),
              ExpPolyFunction::term(m0, a.scaled(p.alpha), 0.0)};
    }
    case OddCase::III:
    case OddCase::V: {
      Slot h_o = Slot::arbitrary(Parity::Odd);
      if (p.arbitrary_h) h_o = odd_part(check_realization(*p.arbitrary_h, g, Parity::Any, opt, where));
      Function H = id == OddCase::III ? Function(T_only(p, g, 1)) : zero;
      return {id, p, H, zero, h_o};
    }
    case OddCase::IV:
    case OddCase::VI: {
      if (p.arbitrary_h) check_realization(*p.arbitrary_h, g, Parity::Even, opt, where + " h");
      Function H = id == OddCase::IV ? Function(T_only(p, g, 1)) : zero;
      return {id, p, H, arbitrary_slot(p.arbitrary_g, g, Parity::Any, opt, where + " g"), zero};
    }
  }
  throw ParameterError("unknown odd case");
}

CombinedSolution build_combined_case(CombinedCase id, const SolutionParams& p, const GroupSpec& g,
                                     const FamilyOptions& opt) {
  const auto where = to_string(id);
  const auto zero = Function::zero(g);
  switch (id) {
    case CombinedCase::I: {
      // m is allowed to be even here; that overlaps the m0 cases but stays a solution.
      const auto& m = need_m(p, g, where);
      return {id,
              p,
              pair_form(m, p.alpha * p.gamma, p.beta * p.delta, g, periodic(p, g, 1)),
              pair_form(m, p.alpha * p.delta, p.beta * p.gamma, g, periodic(p, g, -1)),
              pair_form(m, p.alpha, p.beta, g),
              pair_form(m, p.gamma, p.delta, g)};
    }
    case CombinedCase::II:
    case CombinedCase::III: {
      const auto& m0 = need_even_m0(p, g, where, opt.tol);
      require(nonzero(p.alpha, opt.tol), where + " needs alpha != 0");
      if (!opt.allow_degenerate) {
        require(p.a.has_value() && !p.a->is_zero(opt.tol), where + " needs a nonzero additive function");
      }
      const auto a = additive_or_zero(p, g);
      const Complex ab = p.alpha * p.beta;
      ExpPolyFunction F1(g, {{m0, a.scaled(0.5), (ab + p.gamma) / 2.0}}, periodic(p, g, 1));
      const Complex f2_sign = id == CombinedCase::II ? -0.5 : 0.5;
      ExpPolyFunction F2(g, {{m0, a.scaled(f2_sign), (ab - p.gamma) / 2.0}}, periodic(p, g, -1));
      auto plain = ExpPolyFunction::exponential(m0, p.alpha);
      auto linear = ExpPolyFunction::term(m0, a.scaled(1.0 / p.alpha), p.beta);
      if (id == CombinedCase::II) return {id, p, F1, F2, plain, linear};
      return {id, p, F1, F2, linear, plain};
    }
    case CombinedCase::IV:
      return {id, p, T_only(p, g, 1), T_only(p, g, -1), zero,
              arbitrary_slot(p.arbitrary_h, g, Parity::Any, opt, where + " h")};
    case CombinedCase::V:
      return {id, p, T_only(p, g, 1), T_only(p, g, -1),
              arbitrary_slot(p.arbitrary_g, g, Parity::Any, opt, where + " g"), zero};
  }
  throw ParameterError("unknown combined case");
}

std::pair<Function, Function> split_FH(const Function& F1, const Function& F2) {
  if (!(F1.group() == F2.group())) throw StructuralError("split_FH: functions on different groups");
  return {F1 + F2, F1 - F2};
}

std::pair<Function, Function> compose_FH(const Function& F, const Function& H) {
  if (!(F.group() == H.group())) throw StructuralError("compose_FH: functions on different groups");
  return {(F + H).scaled(0.5), (F - H).scaled(0.5)};
}

}  // namespace feq
