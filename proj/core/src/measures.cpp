#include "feq/measures.hpp"

#include "feq/errors.hpp"

namespace feq {

Measure::Measure(GroupSpec g, const std::vector<Atom>& atoms) : group_(std::move(g)) {
  for (const auto& [point, weight] : atoms) {
    if (point.dimension() != group_.dimension()) {
      throw StructuralError("measure atom " + to_string(point) + " does not fit " + to_string(group_));
    }
    atoms_[group_.element(point.coords)] += weight;
  }
}

Measure Measure::dirac(const GroupSpec& g, const GroupElement& point, Complex weight) {
  return Measure(g, {{point, weight}});
}

Complex Measure::total_weight() const {
  Complex s{};
  for (const auto& [p, w] : atoms_) s += w;
  return s;
}

Measure Measure::pruned(double tol) const {
  Measure out(group_);
  for (const auto& [p, w] : atoms_) {
    if (std::abs(w) > tol) out.atoms_.emplace(p, w);
  }
  return out;
}

Measure Measure::translate(const GroupElement& y) const {
  Measure out(group_);
  for (const auto& [p, w] : atoms_) out.atoms_[add(group_, p, y)] += w;
  return out;
}

Measure Measure::invert() const {
  Measure out(group_);
  for (const auto& [p, w] : atoms_) out.atoms_[neg(group_, p)] += w;
  return out;
}

Measure Measure::operator+(const Measure& o) const {
  if (!(group_ == o.group_)) throw StructuralError("sum of measures on different groups");
  Measure out = *this;
  for (const auto& [p, w] : o.atoms_) out.atoms_[p] += w;
  return out;
}

Measure Measure::scaled(Complex c) const {
  Measure out = *this;
  for (auto& [p, w] : out.atoms_) w *= c;
  return out;
}

Measure dalembert_measure(const GroupSpec& g) { return Measure::dirac(g, g.zero(), 0.5); }

Complex convolve(const Function& f, const Measure& mu, const GroupElement& x) {
  const auto& g = mu.group();
  Complex s{};
  for (const auto& [t, w] : mu.atoms()) s += f(sub(g, x, t)) * w;
  return s;
}

Complex mu_hat(const Measure& mu, const Exponential& m) {
  const auto& g = mu.group();
  Complex s{};
  for (const auto& [t, w] : mu.atoms()) s += m(neg(g, t)) * w;
  return s;
}

Complex additive_moment(const Measure& mu, const AdditiveFunction& a, const Exponential& m) {
  const auto& g = mu.group();
  Complex s{};
  for (const auto& [t, w] : mu.atoms()) s += a(t) * m(neg(g, t)) * w;
  return s;
}

ExpPolyFunction convolve_closed_form(const ExpPolyFunction& f, const Measure& mu) {
  const auto& g = f.group();
  if (!(g == mu.group())) throw StructuralError("convolution of function and measure on different groups");

  std::vector<ExpPolyTerm> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    const Complex hat = mu_hat(mu, t.m);
    terms.push_back({t.m, t.a.scaled(hat), t.b * hat - additive_moment(mu, t.a, t.m)});
  }

  std::optional<PeriodicPart> periodic;
  if (const auto& p = f.periodic_part()) {
    std::map<CosetIndex2G, Complex> table;
    for (const auto& c : enumerate_cosets_2g(g)) {
      Complex s{};
      for (const auto& [t, w] : mu.atoms()) s += p->T.value(coset_difference(c, coset_2g(g, t))) * w;
      table.emplace(c, static_cast<double>(p->sign) * s);
    }
    periodic = PeriodicPart{1, TwoGPeriodic(g, std::move(table))};
  }
  return ExpPolyFunction(g, std::move(terms), std::move(periodic));
}

}  // namespace feq
