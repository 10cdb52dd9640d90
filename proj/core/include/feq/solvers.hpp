#pragma once

#include <optional>
#include <string>
#include <vector>

#include "feq/functions.hpp"
#include "feq/measures.hpp"

namespace feq {

// Solution families of
//   sum_t [f(x+y-t) + f(x-y+t)] w(t) = f(x) k(y)     ("fech")
//   sum_t [f(x+y-t) + f(x-y+t)] w(t) = k(x) f(y)     ("wilson_modified")
// with their Gajda (f = k) and d'Alembert (mu = delta_0 / 2) reductions.

/// |mu_hat(m0)| below this is reported as close to the nonvanishing threshold.
inline constexpr double kNearThreshold = 1e-6;

struct FechFreeParams {
  Complex gamma{1.0, 0.0};
  Complex delta{0.0, 0.0};
  Complex beta{1.0, 0.0};
  /// Additive part for the even-exponential family; zero when absent.
  std::optional<AdditiveFunction> a;
};

struct FechFamily {
  enum class Kind { ExpPair, AdditiveEven };

  Kind kind;
  Exponential m;
  Complex gamma{};
  Complex delta{};
  Complex beta{};
  std::optional<AdditiveFunction> a;
  Complex mu_hat_m{};
  Complex mu_hat_m_check{};
  ExpPolyFunction f;
  ExpPolyFunction k;
  bool near_threshold = false;
};

struct WilsonModFamily {
  enum class Kind { NonEvenExp, EvenExp };

  Kind kind;
  Exponential m;
  Complex alpha{};
  Complex mu_hat_m{};
  Complex mu_hat_m_check{};
  ExpPolyFunction f;
  ExpPolyFunction k;
  bool near_threshold = false;
};

/// A candidate exponential that produced no family, with the reason.
struct SkippedCandidate {
  Exponential m;
  std::string reason;
  double mu_hat_abs = 0.0;
};

template <typename Family>
struct SolveResult {
  std::vector<Family> families;
  std::vector<SkippedCandidate> skipped;
};

std::string to_string(FechFamily::Kind k);
std::string to_string(WilsonModFamily::Kind k);

/// For every candidate m: f = gamma m + delta m-check, k = mu_hat(m) m + mu_hat(m-check) m-check.
/// For every even m0 with |mu_hat(m0)| > tol: f = [a / (2 mu_hat(m0)) + beta] m0, k = 2 mu_hat(m0) m0.
/// Candidates giving f = 0 or k = 0 are skipped.
SolveResult<FechFamily> solve_fech(const Measure& mu, const std::vector<Exponential>& exponentials,
                                   const FechFreeParams& params = {}, double tol = kDefaultTolerance);
/// Finite groups: every character is a candidate.
SolveResult<FechFamily> solve_fech(const Measure& mu, const FechFreeParams& params = {},
                                   double tol = kDefaultTolerance);

struct NecessityCheck {
  bool holds = false;
  double residual = 0.0;
};

/// The four linear conditions tying k = alpha m + beta m-check to f = gamma m + delta m-check.
NecessityCheck necessity_check_fech_case1(const Measure& mu, const Exponential& m, Complex alpha, Complex beta,
                                          Complex gamma, Complex delta, double tol = kDefaultTolerance);

struct Case3Extras {
  std::optional<AdditiveFunction> a;
  Complex beta{};
  Complex gamma{};
};

struct Case3Check {
  bool holds = false;
  /// |alpha - 2 mu_hat(m0)|
  double residual = 0.0;
  /// Disagreement between the two expressions for T; zero iff beta (alpha - 2 mu_hat(m0)) = 0.
  double t_balance = 0.0;
  /// T has no additive component, i.e. is 2G-periodic.
  bool t_periodic = false;
  /// T = t_coefficient * m0 when the check holds.
  Complex t_coefficient{};
};

/// f = [a/alpha + beta] m0, k = alpha m0 solves the equation iff alpha = 2 mu_hat(m0).
Case3Check necessity_check_fech_case3(const Measure& mu, const Exponential& m0, Complex alpha,
                                      const Case3Extras& extras = {}, double tol = kDefaultTolerance);

/// f = alpha m0, k = 2 mu_hat(m0) m0: the m0-constant branch, which coincides with
/// the exponential-pair family at m = m0 with gamma = alpha, delta = 0.
struct FechSecondCase {
  ExpPolyFunction f;
  ExpPolyFunction k;
  FechFamily same_as;
};

FechSecondCase fech_second_case(const Measure& mu, const Exponential& m0, Complex alpha,
                                double tol = kDefaultTolerance);

/// Non-even m: k = mu_hat(m) m + mu_hat(m-check) m-check, f = alpha k (one family per {m, m-check}).
/// Even m0 with |mu_hat(m0)| > tol: f = 2 alpha mu_hat(m0) m0, k = 2 mu_hat(m0) m0.
SolveResult<WilsonModFamily> solve_wilson_modified(const Measure& mu, const std::vector<Exponential>& exponentials,
                                                   Complex alpha, double tol = kDefaultTolerance);
SolveResult<WilsonModFamily> solve_wilson_modified(const Measure& mu, Complex alpha, double tol = kDefaultTolerance);

/// f = k = mu_hat(m) m + mu_hat(m-check) m-check.
ExpPolyFunction reduce_gajda(const Measure& mu, const Exponential& m);

/// reduce_gajda with mu = delta_0 / 2, i.e. f = (m + m-check) / 2.
ExpPolyFunction reduce_dalembert(const Exponential& m);

}  // namespace feq
