#include <cmath>

#include "feq/errors.hpp"
#include "feq/families.hpp"

namespace feq {

namespace {

using E = EvenCase;
using O = OddCase;
using C = CombinedCase;

SolutionParams oriented_even(EvenCase id, SolutionParams p) {
  if (id == E::I && p.m && !is_canonical_orientation(*p.m)) {
    p.m = p.m->reflected();
    std::swap(p.alpha, p.beta);
  }
  return p;
}

SolutionParams oriented_odd(OddCase id, SolutionParams p) {
  // alpha gamma m - beta gamma m-check reads, in terms of m-check,
  // beta (-gamma) m-check' - alpha (-gamma) m'.
  if (id == O::I && p.m && !is_canonical_orientation(*p.m)) {
    p.m = p.m->reflected();
    std::swap(p.alpha, p.beta);
    p.gamma = -p.gamma;
  }
  return p;
}

bool slots_agree(const Slot& a, const Slot& b, const GroupSpec& g, const FamilyOptions& opt, GroupElement* where) {
  if (a.is_arbitrary() || b.is_arbitrary()) return true;
  const Domain dom{g, opt.window};
  for (const auto& x : dom.points()) {
    if (std::abs(a(x) - b(x)) > opt.tol) {
      if (where) *where = x;
      return false;
    }
  }
  return true;
}

}  // namespace

PairingRule classify_pairing(EvenCase even, OddCase odd) {
  // Odd cases (v)/(vi) are (iii)/(iv) with T = 0 and pair the same way.
  const OddCase o = odd == O::V ? O::III : odd == O::VI ? O::IV : odd;
  switch (even) {
    case E::I:
      switch (o) {
        case O::I:
          return {C::I, "same exponential on both sides; gamma, delta are the half sum and half difference"};
        case O::II:
          return {std::nullopt, "odd (ii) has g = m0/alpha with m0 even, forcing m = m-check, but even (i) needs "
                                "m != m-check"};
        case O::III:
          return {C::IV, "g = 0 forces alpha = beta = 0, so F1 + F2 = 0"};
        case O::IV:
          return {C::I, "delta = gamma = gamma'/2"};
        default:
          break;
      }
      break;
    case E::II:
      switch (o) {
        case O::I:
          return {std::nullopt, "even (ii) has g built on m0 = m0-check, but odd (i) needs m != m-check"};
        case O::II:
          return {C::II, "g = m0/alpha on both sides"};
        case O::III:
          return {C::III, "g = 0 forces a = 0 and beta = 0 in the even case"};
        case O::IV:
          return {C::III, "combined (iii) with gamma = 0"};
        default:
          break;
      }
      break;
    case E::III:
      if (o == O::II) return {std::nullopt, "even (iii) has g = 0, odd (ii) has g = m0/alpha != 0"};
      return {C::IV, "g = 0"};
    case E::IV:
      switch (o) {
        case O::I:
          return {C::I, "F = 0, the combined family comes from the odd side"};
        case O::II:
          return {C::II, "F = 0, the combined family comes from the odd side"};
        case O::III:
          return {C::IV, "g = 0, h_e = 0"};
        case O::IV:
          return {C::V, "h_e = 0 and h_o = 0, so h = 0"};
        default:
          break;
      }
      break;
  }
  return {std::nullopt, "unhandled pairing"};
}

PairingResult pair_cases(EvenCase even, OddCase odd, const SolutionParams& even_params,
                         const SolutionParams& odd_params, const GroupSpec& g, const FamilyOptions& opt) {
  const auto rule = classify_pairing(even, odd);
  if (!rule.combined) return Incompatible{rule.note};

  const SolutionParams ep = oriented_even(even, even_params);
  const SolutionParams op = oriented_odd(odd, odd_params);
  const auto es = build_even_case(even, ep, g, opt);
  const auto os = build_odd_case(odd, op, g, opt);

  GroupElement at;
  if (!slots_agree(es.g, os.g, g, opt, &at)) {
    return Incompatible{"g differs between " + to_string(even) + " and " + to_string(odd) + " at " + to_string(at)};
  }

  std::optional<TwoGPeriodic> half_T;
  if (op.T && odd != O::V && odd != O::VI) half_T = op.T->scaled(0.5);

  PairedCase out{*rule.combined, {}, false, rule.note};
  auto& cp = out.params;
  cp.T = half_T;

  switch (*rule.combined) {
    case C::I:
      if (even == E::I) {
        cp.m = ep.m;
        cp.alpha = ep.alpha;
        cp.beta = ep.beta;
        if (odd == O::I) {
          if (!op.m->same_as(*ep.m, opt.tol)) {
            return Incompatible{"even and odd sides use different exponentials " + ep.m->describe() + " and " +
                                op.m->describe()};
          }
          cp.gamma = (ep.gamma + op.gamma) / 2.0;
          cp.delta = (ep.gamma - op.gamma) / 2.0;
        } else {
          cp.gamma = ep.gamma / 2.0;
          cp.delta = ep.gamma / 2.0;
        }
      } else {
        cp.m = op.m;
        cp.alpha = op.alpha;
        cp.beta = op.beta;
        cp.gamma = op.gamma / 2.0;
        cp.delta = -op.gamma / 2.0;
      }
      break;
    case C::II:
      if (even == E::II && !ep.m0->same_as(*op.m0, opt.tol)) {
        return Incompatible{"even and odd sides use different exponentials m0"};
      }
      cp.m0 = op.m0;
      cp.alpha = 1.0 / op.alpha;
      cp.a = op.a;
      cp.beta = even == E::II ? ep.alpha : Complex{};
      cp.gamma = op.b;
      break;
    case C::III:
      cp.m0 = ep.m0;
      cp.alpha = ep.alpha;
      if (odd == O::III || odd == O::V) {
        cp.a = AdditiveFunction::zero(g);
        cp.beta = 0.0;
      } else {
        cp.a = ep.a ? *ep.a : AdditiveFunction::zero(g);
        cp.beta = ep.beta;
      }
      out.degenerate = cp.a->is_zero(opt.tol);
      break;
    case C::IV:
      if (!es.h_even.is_arbitrary() && !os.h_odd.is_arbitrary()) {
        cp.arbitrary_h = es.h_even.function() + os.h_odd.function();
      }
      break;
    case C::V:
      if (!es.g.is_arbitrary()) {
        cp.arbitrary_g = es.g.function();
      } else if (!os.g.is_arbitrary()) {
        cp.arbitrary_g = os.g.function();
      }
      break;
  }
  return out;
}

CombinedSolution realize(const PairedCase& paired, const GroupSpec& g, const FamilyOptions& opt) {
  FamilyOptions o = opt;
  o.allow_degenerate = o.allow_degenerate || paired.degenerate;
  return build_combined_case(paired.id, paired.params, g, o);
}

}  // namespace feq
