#pragma once

#include <random>
#include <vector>

#include "feq/functions.hpp"
#include "feq/measures.hpp"

namespace testing_support {

inline feq::Complex random_complex(std::mt19937_64& rng, double scale = 2.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng)};
}

inline feq::Complex random_nonzero(std::mt19937_64& rng, double scale = 2.0) {
  feq::Complex c;
  do {
    c = random_complex(rng, scale);
  } while (std::abs(c) < 0.1);
  return c;
}

/// Random finite group of order <= max_order with at most three cyclic factors.
inline feq::GroupSpec random_finite_group(std::mt19937_64& rng, std::uint64_t max_order = 24) {
  std::uniform_int_distribution<int> factors(1, 3);
  std::uniform_int_distribution<std::int64_t> order(1, 12);
  while (true) {
    std::vector<std::int64_t> t;
    const int k = factors(rng);
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
      t.push_back(order(rng));
      total *= static_cast<std::uint64_t>(t.back());
    }
    if (total <= max_order) return feq::GroupSpec(0, t);
  }
}

inline feq::GroupElement random_element(std::mt19937_64& rng, const feq::GroupSpec& g, int window = 10) {
  std::vector<std::int64_t> c;
  std::uniform_int_distribution<std::int64_t> free(-window, window);
  for (int i = 0; i < g.free_rank(); ++i) c.push_back(free(rng));
  for (auto n : g.torsion_orders()) c.push_back(std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng));
  return g.element(c);
}

inline feq::Measure random_measure(std::mt19937_64& rng, const feq::GroupSpec& g, int min_atoms = 1,
                                   int max_atoms = 4) {
  std::uniform_int_distribution<int> count(min_atoms, max_atoms);
  std::vector<feq::Atom> atoms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) atoms.push_back({random_element(rng, g, 3), random_nonzero(rng)});
  return feq::Measure(g, atoms);
}

inline feq::Exponential random_character(std::mt19937_64& rng, const feq::GroupSpec& g) {
  std::vector<std::int64_t> roots;
  for (auto n : g.torsion_orders()) roots.push_back(std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng));
  std::vector<feq::Complex> mult;
  std::uniform_real_distribution<double> mod(0.8, 1.25);
  std::uniform_real_distribution<double> arg(-3.14159, 3.14159);
  for (int i = 0; i < g.free_rank(); ++i) mult.push_back(std::polar(mod(rng), arg(rng)));
  return feq::Exponential(g, roots, mult);
}

}  // namespace testing_support
