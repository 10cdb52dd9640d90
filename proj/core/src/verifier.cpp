#include "feq/verifier.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

#include "feq/errors.hpp"

namespace feq {

namespace {

template <typename Lhs, typename Rhs>
Residual sweep(const Domain& dom, Lhs&& lhs, Rhs&& rhs) {
  Residual r;
  const auto pts = dom.points();
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      Complex diff;
      try {
        diff = lhs(x, y) - rhs(x, y);
      } catch (const EvaluationError& e) {
        throw EvaluationError(std::string(e.what()) + " [x=" + to_string(x) + ", y=" + to_string(y) + "]");
      }
      const double d = std::abs(diff);
      if (r.pairs == 0 || d > r.max) {
        r.max = d;
        r.x = x;
        r.y = y;
      }
      ++r.pairs;
    }
  }
  return r;
}

void require_same_group(const GroupSpec& g, const Function& f, const char* name) {
  if (!(f.group() == g)) throw StructuralError(std::string(name) + " is defined on a different group");
}

}  // namespace

Complex sincos_lhs(const Function& f1, const Function& f2, const Measure& mu, const GroupElement& x,
                   const GroupElement& y) {
  const auto& g = mu.group();
  const auto plus = add(g, x, y);
  const auto minus = sub(g, x, y);
  Complex s{};
  for (const auto& [t, w] : mu.atoms()) {
    try {
      s += (f1(sub(g, plus, t)) + f2(add(g, minus, t))) * w;
    } catch (const EvaluationError& e) {
      throw EvaluationError(std::string(e.what()) + " [t=" + to_string(t) + "]");
    }
  }
  return s;
}

Complex sincos_convolution_lhs(const Function& f1, const Function& f2, const Measure& mu, const GroupElement& x,
                               const GroupElement& y) {
  const auto& g = mu.group();
  return convolve(f1, mu, add(g, x, y)) + convolve(f2.reflected(), mu, sub(g, x, y));
}

Residual residual_sincos(const Function& f1, const Function& f2, const Function& g, const Function& h,
                         const Measure& mu, const Domain& dom) {
  const auto& G = mu.group();
  require_same_group(G, f1, "f1");
  require_same_group(G, f2, "f2");
  require_same_group(G, g, "g");
  require_same_group(G, h, "h");
  return sweep(
      dom, [&](const auto& x, const auto& y) { return sincos_lhs(f1, f2, mu, x, y); },
      [&](const auto& x, const auto& y) { return g(x) * h(y); });
}

Residual residual_dalem1(const Function& F1, const Function& F2, const Function& g, const Function& h,
                         const Domain& dom) {
  const auto& G = dom.group;
  return sweep(
      dom, [&](const auto& x, const auto& y) { return F1(add(G, x, y)) + F2(sub(G, x, y)); },
      [&](const auto& x, const auto& y) { return g(x) * h(y); });
}

Residual residual_dalem_even(const Function& F, const Function& g, const Function& h_even, const Domain& dom) {
  const auto& G = dom.group;
  return sweep(
      dom, [&](const auto& x, const auto& y) { return F(add(G, x, y)) + F(sub(G, x, y)); },
      [&](const auto& x, const auto& y) { return 2.0 * g(x) * h_even(y); });
}

Residual residual_dalem_odd(const Function& H, const Function& g, const Function& h_odd, const Domain& dom) {
  const auto& G = dom.group;
  return sweep(
      dom, [&](const auto& x, const auto& y) { return H(add(G, x, y)) - H(sub(G, x, y)); },
      [&](const auto& x, const auto& y) { return 2.0 * g(x) * h_odd(y); });
}

Residual residual_fech(const Function& f, const Function& k, const Measure& mu, const Domain& dom) {
  return residual_sincos(f, f, f, k, mu, dom);
}

Residual residual_wilson_modified(const Function& f, const Function& k, const Measure& mu, const Domain& dom) {
  return residual_sincos(f, f, k, f, mu, dom);
}

Residual residual_gajda(const Function& f, const Measure& mu, const Domain& dom) {
  return residual_sincos(f, f, f, f, mu, dom);
}

Residual residual_dalembert(const Function& f, const Domain& dom) {
  const auto& G = dom.group;
  return sweep(
      dom, [&](const auto& x, const auto& y) { return f(add(G, x, y)) + f(sub(G, x, y)); },
      [&](const auto& x, const auto& y) { return 2.0 * f(x) * f(y); });
}

ComplexMatrix dalem1_matrix(const Function& F1, const Function& F2) {
  const auto& G = F1.group();
  if (!(F2.group() == G)) throw StructuralError("dalem1_matrix: F1 and F2 on different groups");
  const auto pts = enumerate_elements(G);
  ComplexMatrix L(pts.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) L(i, j) = F1(add(G, pts[i], pts[j])) + F2(sub(G, pts[i], pts[j]));
  }
  return L;
}

Rank1Result rank1_factorize(const ComplexMatrix& L, double ratio_tol) {
  const auto rows = static_cast<Eigen::Index>(L.rows());
  const auto cols = static_cast<Eigen::Index>(L.cols());
  Eigen::MatrixXcd M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) M(i, j) = L(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const auto& sv = svd.singularValues();
  const double s1 = sv.size() > 0 ? sv(0) : 0.0;
  const double s2 = sv.size() > 1 ? sv(1) : 0.0;

  Rank1Factors out;
  out.sigma1 = s1;
  out.sigma2 = s2;
  out.g.assign(L.rows(), Complex{});
  out.h.assign(L.cols(), Complex{});
  if (s1 <= kZeroMatrixScale) {
    out.zero = true;
    return out;
  }
  if (s2 > ratio_tol * s1) return NotRank1{s1, s2};

  // Pivot on the first row carrying a non-negligible share of the norm.
  Eigen::Index pivot = 0;
  for (; pivot < rows; ++pivot) {
    if (M.row(pivot).norm() > ratio_tol * s1) break;
  }
  const Eigen::VectorXcd h = M.row(pivot).transpose();
  const double hh = h.squaredNorm();
  for (Eigen::Index j = 0; j < cols; ++j) out.h[static_cast<std::size_t>(j)] = h(j);
  for (Eigen::Index i = 0; i < rows; ++i) {
    // least-squares coefficient of row i along h
    out.g[static_cast<std::size_t>(i)] = h.dot(M.row(i).transpose()) / hh;
  }
  out.g[static_cast<std::size_t>(pivot)] = 1.0;
  return out;
}

double max_reconstruction_error(const ComplexMatrix& L, const Rank1Factors& f) {
  double err = 0.0;
  for (std::size_t i = 0; i < L.rows(); ++i) {
    for (std::size_t j = 0; j < L.cols(); ++j) err = std::max(err, std::abs(f.g[i] * f.h[j] - L(i, j)));
  }
  return err;
}

}  // namespace feq
