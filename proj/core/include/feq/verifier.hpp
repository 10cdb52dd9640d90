#pragma once

#include <variant>
#include <vector>

#include "feq/domain.hpp"
#include "feq/functions.hpp"
#include "feq/measures.hpp"

namespace feq {

// Brute-force residual oracles. Every integral is evaluated by direct
// summation over the atoms of the measure, never through the closed-form
// identities the solvers use.

struct Residual {
  double max = 0.0;
  GroupElement x;
  GroupElement y;
  std::size_t pairs = 0;

  bool passes(double tol) const { return max <= tol; }
};

/// sum_t [f1(x+y-t) + f2(x-y+t)] w(t).
Complex sincos_lhs(const Function& f1, const Function& f2, const Measure& mu, const GroupElement& x,
                   const GroupElement& y);

/// (f1 * mu)(x+y) + (f2-check * mu)(x-y), through the convolution operator.
/// Equals sincos_lhs at the interchanged point (y, x).
Complex sincos_convolution_lhs(const Function& f1, const Function& f2, const Measure& mu, const GroupElement& x,
                               const GroupElement& y);

/// max |sum_t [f1(x+y-t) + f2(x-y+t)] w(t) - g(x) h(y)|.
Residual residual_sincos(const Function& f1, const Function& f2, const Function& g, const Function& h,
                         const Measure& mu, const Domain& dom);

/// max |F1(x+y) + F2(x-y) - g(x) h(y)|.
Residual residual_dalem1(const Function& F1, const Function& F2, const Function& g, const Function& h,
                         const Domain& dom);

/// max |F(x+y) + F(x-y) - 2 g(x) h_e(y)|.
Residual residual_dalem_even(const Function& F, const Function& g, const Function& h_even, const Domain& dom);

/// max |H(x+y) - H(x-y) - 2 g(x) h_o(y)|.
Residual residual_dalem_odd(const Function& H, const Function& g, const Function& h_odd, const Domain& dom);

/// Right side f(x) k(y).
Residual residual_fech(const Function& f, const Function& k, const Measure& mu, const Domain& dom);
/// Right side k(x) f(y).
Residual residual_wilson_modified(const Function& f, const Function& k, const Measure& mu, const Domain& dom);
/// Right side f(x) f(y).
Residual residual_gajda(const Function& f, const Measure& mu, const Domain& dom);
/// max |f(x+y) + f(x-y) - 2 f(x) f(y)|.
Residual residual_dalembert(const Function& f, const Domain& dom);

class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

/// L[x][y] = F1(x+y) + F2(x-y) over enumerate_elements order; finite groups only.
ComplexMatrix dalem1_matrix(const Function& F1, const Function& F2);

inline constexpr double kRankRatioThreshold = 1e-8;
/// Largest singular value at or below this is treated as the zero matrix.
inline constexpr double kZeroMatrixScale = 1e-12;

struct Rank1Factors {
  std::vector<Complex> g;
  std::vector<Complex> h;
  /// L is zero: g = 0 and h is unconstrained (returned as zeros).
  bool zero = false;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
};

struct NotRank1 {
  double sigma1 = 0.0;
  double sigma2 = 0.0;
};

using Rank1Result = std::variant<Rank1Factors, NotRank1>;

/// Rank test on sigma2 / sigma1. On success L[x][y] = g[x] h[y] with g = 1 at
/// the first row that is not numerically zero.
Rank1Result rank1_factorize(const ComplexMatrix& L, double ratio_tol = kRankRatioThreshold);

double max_reconstruction_error(const ComplexMatrix& L, const Rank1Factors& f);

}  // namespace feq
