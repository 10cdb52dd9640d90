#pragma once

#include <map>
#include <utility>
#include <vector>

#include "feq/functions.hpp"
#include "feq/group.hpp"

namespace feq {

struct Atom {
  GroupElement point;
  Complex weight;
};

/// Finitely supported complex measure. Points are canonical and distinct;
/// atoms given at the same point are merged by adding their weights.
class Measure {
 public:
  explicit Measure(GroupSpec g, const std::vector<Atom>& atoms = {});

  static Measure dirac(const GroupSpec& g, const GroupElement& point, Complex weight = 1.0);

  const GroupSpec& group() const { return group_; }
  const std::map<GroupElement, Complex>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  Complex total_weight() const;

  /// Drops atoms with |weight| <= tol. Integrals are unchanged up to tol per atom.
  Measure pruned(double tol = 0.0) const;

  /// Shifts every atom by +y.
  Measure translate(const GroupElement& y) const;
  /// Negates every atom point.
  Measure invert() const;

  Measure operator+(const Measure& o) const;
  Measure scaled(Complex c) const;

  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  GroupSpec group_;
  std::map<GroupElement, Complex> atoms_;
};

/// The measure of the classical d'Alembert equation, (1/2) delta_0.
Measure dalembert_measure(const GroupSpec& g);

/// (f * mu)(x) = sum_t f(x - t) w(t), by direct summation.
Complex convolve(const Function& f, const Measure& mu, const GroupElement& x);

/// Fourier-Stieltjes transform: sum_t m(-t) w(t).
Complex mu_hat(const Measure& mu, const Exponential& m);

/// sum_t a(t) m(-t) w(t); the correction term in the convolution of (a + b) m.
Complex additive_moment(const Measure& mu, const AdditiveFunction& a, const Exponential& m);

/// Closed-form f * mu. Each term becomes
///   m(x) [ (a(x) + b) mu_hat(m) - sum_t a(t) m(-t) w(t) ]
/// and the 2G-periodic part is convolved coset by coset.
ExpPolyFunction convolve_closed_form(const ExpPolyFunction& f, const Measure& mu);

}  // namespace feq
