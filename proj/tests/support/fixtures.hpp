#pragma once

// Random parameter draws for the solution families, shared by the unit and
// acceptance tests.

#include <optional>
#include <random>

#include "feq/families.hpp"
#include "random.hpp"

namespace testing_support {

/// A non-even exponential: a primitive character on a finite group, lambda^x with |lambda| != 1 otherwise.
inline feq::Exponential random_noneven(std::mt19937_64& rng, const feq::GroupSpec& g) {
  while (true) {
    auto m = random_character(rng, g);
    if (!m.is_even()) return m;
  }
}

inline feq::Exponential random_even(std::mt19937_64& rng, const feq::GroupSpec& g) {
  std::vector<std::int64_t> roots;
  for (auto n : g.torsion_orders()) {
    const bool flip = n % 2 == 0 && std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    roots.push_back(flip ? n / 2 : 0);
  }
  std::vector<feq::Complex> mult;
  for (int i = 0; i < g.free_rank(); ++i) mult.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? 1.0 : -1.0);
  return feq::Exponential(g, roots, mult);
}

/// Nonconstant whenever G / 2G is nontrivial.
inline feq::TwoGPeriodic random_periodic(std::mt19937_64& rng, const feq::GroupSpec& g) {
  std::map<feq::CosetIndex2G, feq::Complex> table;
  for (const auto& c : feq::enumerate_cosets_2g(g)) table[c] = random_complex(rng);
  return feq::TwoGPeriodic(g, table);
}

inline feq::AdditiveFunction random_additive(std::mt19937_64& rng, const feq::GroupSpec& g) {
  std::vector<feq::Complex> c;
  for (int i = 0; i < g.free_rank(); ++i) c.push_back(random_nonzero(rng));
  return feq::AdditiveFunction(g, c);
}

/// A function with no particular structure: a random table on finite groups,
/// a random exponential polynomial otherwise.
inline feq::Function random_function(std::mt19937_64& rng, const feq::GroupSpec& g) {
  if (g.is_finite()) {
    std::vector<feq::Complex> v;
    for (std::uint64_t i = 0; i < g.order(); ++i) v.push_back(random_complex(rng));
    return feq::TableFunction(g, v);
  }
  return feq::ExpPolyFunction::term(random_character(rng, g), random_additive(rng, g), random_complex(rng)) +
         feq::ExpPolyFunction::exponential(random_character(rng, g), random_complex(rng)) +
         feq::ExpPolyFunction::periodic(random_periodic(rng, g));
}

struct PairFixture {
  feq::SolutionParams even;
  feq::SolutionParams odd;
};

/// Parameters for an even and an odd case whose g agree, so that the pair can
/// be combined. nullopt when the odd case cannot be instantiated on g (odd (ii)
/// needs a nonzero additive function, which finite groups do not have).
inline std::optional<PairFixture> make_pair_fixture(feq::EvenCase e, feq::OddCase o, const feq::GroupSpec& g,
                                                    std::mt19937_64& rng) {
  using feq::EvenCase;
  using feq::OddCase;
  if (o == OddCase::II && g.free_rank() == 0) return std::nullopt;

  const auto m = random_noneven(rng, g);
  const auto m0 = random_even(rng, g);
  const feq::Complex alpha = random_nonzero(rng);
  const feq::Complex beta = random_complex(rng);
  const feq::Complex alpha_o = random_nonzero(rng);

  feq::SolutionParams ep;
  switch (e) {
    case EvenCase::I: {
      // Odd (iii)/(v) have g = 0, which forces alpha = beta = 0.
      const bool g_zero = o == OddCase::III || o == OddCase::V;
      ep.m = m;
      ep.alpha = g_zero ? feq::Complex{} : alpha;
      ep.beta = g_zero ? feq::Complex{} : beta;
      ep.gamma = random_nonzero(rng);
      break;
    }
    case EvenCase::II: {
      ep.m0 = m0;
      ep.alpha = random_nonzero(rng);
      const bool g_zero = o == OddCase::III || o == OddCase::V;
      ep.a = (o == OddCase::II || g_zero) ? feq::AdditiveFunction::zero(g) : random_additive(rng, g);
      ep.beta = o == OddCase::II ? 1.0 / alpha_o : g_zero ? feq::Complex{} : beta;
      break;
    }
    case EvenCase::III:
      ep.arbitrary_h = random_function(rng, g);
      break;
    case EvenCase::IV:
      ep.arbitrary_h = feq::odd_part(random_function(rng, g));
      break;
  }

  feq::SolutionParams op;
  switch (o) {
    case OddCase::I:
      op.m = m;
      if (e == EvenCase::I) {
        op.alpha = ep.alpha;
        op.beta = ep.beta;
      } else if (e == EvenCase::IV) {
        op.alpha = alpha;
        op.beta = beta;
      }
      op.gamma = random_nonzero(rng);
      op.T = random_periodic(rng, g);
      break;
    case OddCase::II:
      op.m0 = m0;
      op.alpha = alpha_o;
      op.a = random_additive(rng, g);
      op.b = random_complex(rng);
      op.T = random_periodic(rng, g);
      break;
    case OddCase::III:
    case OddCase::V:
      if (o == OddCase::III) op.T = random_periodic(rng, g);
      op.arbitrary_h = random_function(rng, g);
      break;
    case OddCase::IV:
    case OddCase::VI:
      if (o == OddCase::IV) op.T = random_periodic(rng, g);
      op.arbitrary_h = feq::even_part(random_function(rng, g));
      break;
  }

  // Make the arbitrary g on one side equal the realized g on the other.
  const bool odd_g_arbitrary = o == OddCase::IV || o == OddCase::VI;
  if (e == EvenCase::IV) {
    if (odd_g_arbitrary) {
      const auto shared = random_function(rng, g);
      ep.arbitrary_g = shared;
      op.arbitrary_g = shared;
    } else {
      ep.arbitrary_g = build_odd_case(o, op, g).g.function();
    }
  } else if (odd_g_arbitrary) {
    op.arbitrary_g = build_even_case(e, ep, g).g.function();
  }
  return PairFixture{ep, op};
}

/// Random valid parameters for a combined case.
inline feq::SolutionParams random_combined_params(feq::CombinedCase c, const feq::GroupSpec& g,
                                                  std::mt19937_64& rng) {
  feq::SolutionParams p;
  switch (c) {
    case feq::CombinedCase::I:
      p.m = random_character(rng, g);
      p.alpha = random_complex(rng);
      p.beta = random_complex(rng);
      p.gamma = random_complex(rng);
      p.delta = random_complex(rng);
      p.T = random_periodic(rng, g);
      break;
    case feq::CombinedCase::II:
    case feq::CombinedCase::III:
      p.m0 = random_even(rng, g);
      p.alpha = random_nonzero(rng);
      p.beta = random_complex(rng);
      p.gamma = random_complex(rng);
      p.a = random_additive(rng, g);
      p.T = random_periodic(rng, g);
      break;
    case feq::CombinedCase::IV:
      p.T = random_periodic(rng, g);
      p.arbitrary_h = random_function(rng, g);
      break;
    case feq::CombinedCase::V:
      p.T = random_periodic(rng, g);
      p.arbitrary_g = random_function(rng, g);
      break;
  }
  return p;
}

}  // namespace testing_support
