#include "feq/solvers.hpp"

#include <algorithm>
#include <cmath>

#include "feq/errors.hpp"

namespace feq {

namespace {

ExpPolyFunction pair_form(const Exponential& m, Complex c, Complex c_check) {
  const auto zero = AdditiveFunction::zero(m.group());
  return ExpPolyFunction(m.group(), {{m, zero, c}, {m.reflected(), zero, c_check}});
}

bool vanishes(const ExpPolyFunction& f, double tol) { return f.simplified(tol).terms().empty(); }

double norm_inf(const AdditiveFunction& a) {
  double n = 0.0;
  for (const auto& c : a.free_coeffs()) n = std::max(n, std::abs(c));
  return n;
}

}  // namespace

std::string to_string(FechFamily::Kind k) {
  return k == FechFamily::Kind::ExpPair ? "exp_pair" : "additive_even";
}

std::string to_string(WilsonModFamily::Kind k) {
  return k == WilsonModFamily::Kind::NonEvenExp ? "noneven_exp" : "even_exp";
}

SolveResult<FechFamily> solve_fech(const Measure& mu, const std::vector<Exponential>& exponentials,
                                   const FechFreeParams& params, double tol) {
  SolveResult<FechFamily> out;
  const auto& g = mu.group();
  const auto a = params.a ? *params.a : AdditiveFunction::zero(g);

  for (const auto& m : exponentials) {
    if (!(m.group() == g)) throw StructuralError("candidate exponential " + m.describe() + " is on another group");
    const Complex p = mu_hat(mu, m);
    const Complex q = mu_hat(mu, m.reflected());

    auto f = pair_form(m, params.gamma, params.delta);
    auto k = pair_form(m, p, q);
    if (vanishes(f, tol)) {
      out.skipped.push_back({m, "exp_pair: f = gamma m + delta m-check vanishes", std::abs(p)});
    } else if (vanishes(k, tol)) {
      out.skipped.push_back({m, "exp_pair: mu_hat(m) and mu_hat(m-check) vanish, k = 0", std::abs(p)});
    } else {
      out.families.push_back({FechFamily::Kind::ExpPair, m, params.gamma, params.delta, {}, std::nullopt, p, q,
                              std::move(f), std::move(k), false});
    }

    if (!m.is_even(tol)) continue;
    if (std::abs(p) <= tol) {
      out.skipped.push_back({m, "additive_even: mu_hat(m0) = 0", std::abs(p)});
      continue;
    }
    auto f2 = ExpPolyFunction::term(m, a.scaled(1.0 / (2.0 * p)), params.beta);
    if (vanishes(f2, tol)) {
      out.skipped.push_back({m, "additive_even: a = 0 and beta = 0 give f = 0", std::abs(p)});
      continue;
    }
    out.families.push_back({FechFamily::Kind::AdditiveEven, m, {}, {}, params.beta, a, p, p, std::move(f2),
                            ExpPolyFunction::exponential(m, 2.0 * p), std::abs(p) < kNearThreshold});
  }
  return out;
}

SolveResult<FechFamily> solve_fech(const Measure& mu, const FechFreeParams& params, double tol) {
  return solve_fech(mu, enumerate_exponentials(mu.group()), params, tol);
}

NecessityCheck necessity_check_fech_case1(const Measure& mu, const Exponential& m, Complex alpha, Complex beta,
                                          Complex gamma, Complex delta, double tol) {
  if (std::abs(gamma) <= tol && std::abs(delta) <= tol) {
    throw ParameterError("necessity check needs gamma or delta nonzero");
  }
  const Complex p = mu_hat(mu, m);
  const Complex q = mu_hat(mu, m.reflected());
  const double r = std::max({std::abs(gamma * p - alpha * gamma), std::abs(gamma * q - beta * gamma),
                             std::abs(delta * p - alpha * delta), std::abs(delta * q - beta * delta)});
  return {r <= tol, r};
}

Case3Check necessity_check_fech_case3(const Measure& mu, const Exponential& m0, Complex alpha,
                                      const Case3Extras& extras, double tol) {
  if (!m0.is_even(tol)) throw ParameterError("case 3 needs an even exponential, got " + m0.describe());
  if (std::abs(alpha) <= tol) throw ParameterError("case 3 needs alpha != 0");

  const auto& g = mu.group();
  const auto a = extras.a ? *extras.a : AdditiveFunction::zero(g);
  const Complex c = mu_hat(mu, m0);
  // m0 is even, so sum a(t) m0(-t) w(t) is the integral of a m0.
  const Complex A = additive_moment(mu, a, m0);
  const Complex beta = extras.beta;
  const Complex gamma = extras.gamma;

  // T from the F1 equation and from the F2 equation; both are
  //   [(c/alpha - 1/2) a + const] m0.
  const Complex t1 = beta * c - A / alpha - (alpha * beta + gamma) / 2.0;
  const Complex t2 = (alpha * beta - gamma) / 2.0 - beta * c - A / alpha;

  Case3Check out;
  out.residual = std::abs(alpha - 2.0 * c);
  out.t_balance = std::abs(t1 - t2);
  out.t_periodic = std::abs(c / alpha - 0.5) * norm_inf(a) <= tol;
  out.t_coefficient = t1;
  out.holds = out.residual <= tol && out.t_balance <= tol && out.t_periodic;
  return out;
}

FechSecondCase fech_second_case(const Measure& mu, const Exponential& m0, Complex alpha, double tol) {
  if (!m0.is_even(tol)) throw ParameterError("second case needs an even exponential, got " + m0.describe());
  if (std::abs(alpha) <= tol) throw ParameterError("second case needs alpha != 0");
  const Complex c = mu_hat(mu, m0);
  FechFamily same{FechFamily::Kind::ExpPair,
                  m0,
                  alpha,
                  0.0,
                  {},
                  std::nullopt,
                  c,
                  c,
                  pair_form(m0, alpha, 0.0),
                  pair_form(m0, c, c),
                  false};
  return {ExpPolyFunction::exponential(m0, alpha), ExpPolyFunction::exponential(m0, 2.0 * c), std::move(same)};
}

SolveResult<WilsonModFamily> solve_wilson_modified(const Measure& mu, const std::vector<Exponential>& exponentials,
                                                   Complex alpha, double tol) {
  if (std::abs(alpha) <= tol) throw ParameterError("modified Wilson families need alpha != 0");
  SolveResult<WilsonModFamily> out;
  const auto& g = mu.group();

  for (const auto& m : exponentials) {
    if (!(m.group() == g)) throw StructuralError("candidate exponential " + m.describe() + " is on another group");
    const Complex p = mu_hat(mu, m);

    if (!m.is_even(tol)) {
      if (!is_canonical_orientation(m)) continue;  // same family as m-check
      const Complex q = mu_hat(mu, m.reflected());
      auto k = pair_form(m, p, q);
      if (vanishes(k, tol)) {
        out.skipped.push_back({m, "noneven_exp: mu_hat(m) and mu_hat(m-check) vanish", std::abs(p)});
        continue;
      }
      out.families.push_back({WilsonModFamily::Kind::NonEvenExp, m, alpha, p, q, k.scaled(alpha), k, false});
      continue;
    }

    if (std::abs(p) <= tol) {
      out.skipped.push_back({m, "even_exp: mu_hat(m0) = 0", std::abs(p)});
      continue;
    }
    out.families.push_back({WilsonModFamily::Kind::EvenExp, m, alpha, p, p,
                            ExpPolyFunction::exponential(m, 2.0 * alpha * p), ExpPolyFunction::exponential(m, 2.0 * p),
                            std::abs(p) < kNearThreshold});
  }
  return out;
}

SolveResult<WilsonModFamily> solve_wilson_modified(const Measure& mu, Complex alpha, double tol) {
  return solve_wilson_modified(mu, enumerate_exponentials(mu.group()), alpha, tol);
}

ExpPolyFunction reduce_gajda(const Measure& mu, const Exponential& m) {
  return pair_form(m, mu_hat(mu, m), mu_hat(mu, m.reflected()));
}

ExpPolyFunction reduce_dalembert(const Exponential& m) { return reduce_gajda(dalembert_measure(m.group()), m); }

}  // namespace feq
