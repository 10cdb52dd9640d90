#include <gtest/gtest.h>

#include <random>

#include "feq/domain.hpp"
#include "feq/errors.hpp"
#include "feq/measures.hpp"
#include "oracle.hpp"
#include "random.hpp"

using namespace feq;

namespace {

const Complex I{0.0, 1.0};

oracle::Atoms to_atoms(const Measure& mu) {
  oracle::Atoms out;
  for (const auto& [p, w] : mu.atoms()) out.emplace_back(p.coords.at(0), w);
  return out;
}

}  // namespace

TEST(Measure, MergesDuplicatePoints) {
  const auto g = GroupSpec::cyclic(4);
  const Measure mu(g, {{{1}, 1.0}, {g.element({5}), 2.0}, {{2}, I}});
  EXPECT_EQ(mu.size(), 2u);
  EXPECT_EQ(mu.atoms().at(GroupElement{1}), Complex(3.0));
  EXPECT_EQ(mu.total_weight(), Complex(3.0, 1.0));
}

TEST(Measure, PruningKeepsIntegrals) {
  const auto g = GroupSpec::cyclic(5);
  const Measure mu(g, {{{1}, 2.0}, {{3}, 0.0}});
  const auto p = mu.pruned();
  EXPECT_EQ(p.size(), 1u);
  for (const auto& m : enumerate_exponentials(g)) EXPECT_EQ(mu_hat(mu, m), mu_hat(p, m));
}

TEST(Measure, TranslateInvert) {
  const auto g = GroupSpec::cyclic(6);
  EXPECT_EQ(Measure::dirac(g, {2}).translate({5}), Measure::dirac(g, {1}));
  EXPECT_EQ(Measure::dirac(g, {2}).invert(), Measure::dirac(g, {4}));
  const Measure mu(g, {{{1}, 2.0}, {{4}, Complex(1, 1)}});
  const Measure expected(g, {{{5}, 2.0}, {{2}, Complex(1, 1)}});
  EXPECT_EQ(mu.invert(), expected);
  const auto z = GroupSpec::integers();
  EXPECT_EQ(Measure::dirac(z, {3}).invert(), Measure::dirac(z, {-3}));
}

TEST(Convolve, Examples) {
  const auto g = GroupSpec::cyclic(4);
  const Exponential m(g, {1});
  const Function f = ExpPolyFunction::exponential(m);
  for (const auto& x : enumerate_elements(g)) {
    EXPECT_EQ(convolve(f, Measure::dirac(g, g.zero()), x), f(x));
    EXPECT_EQ(convolve(f, dalembert_measure(g), x), 0.5 * f(x));
  }
  EXPECT_LT(std::abs(convolve(f, Measure::dirac(g, {1}), {0}) + I), 1e-15);
  for (const auto& x : enumerate_elements(g)) {
    EXPECT_LT(std::abs(convolve(f, Measure::dirac(g, {1}), x) + I * m(x)), 1e-15);
  }
}

TEST(Convolve, TableOffDomainThrows) {
  // x - t = 3 is not a point of the table's group Z_3.
  const Function f = TableFunction(GroupSpec::cyclic(3), {1.0, 2.0, 3.0});
  EXPECT_THROW(convolve(f, Measure::dirac(GroupSpec::cyclic(4), {1}), {0}), EvaluationError);
}

TEST(MuHat, Examples) {
  const auto g = GroupSpec::cyclic(5);
  for (const auto& m : enumerate_exponentials(g)) EXPECT_EQ(mu_hat(dalembert_measure(g), m), Complex(0.5));
  const Measure mu(g, {{{1}, Complex(1, 2)}, {{3}, -4.0}});
  EXPECT_LT(std::abs(mu_hat(mu, Exponential::trivial(g)) - mu.total_weight()), 1e-15);
  const auto z4 = GroupSpec::cyclic(4);
  EXPECT_LT(std::abs(mu_hat(Measure::dirac(z4, {1}), Exponential(z4, {1})) + I), 1e-15);
}

TEST(MuHat, MatchesOracle) {
  std::mt19937_64 rng(31);
  for (std::int64_t n = 1; n <= 12; ++n) {
    const auto g = GroupSpec::cyclic(n);
    const auto mu = testing_support::random_measure(rng, g);
    for (std::int64_t k = 0; k < n; ++k) {
      const auto expected = oracle::mu_hat(oracle::character(n, k), to_atoms(mu));
      EXPECT_LT(std::abs(mu_hat(mu, Exponential(g, {k})) - expected), 1e-12);
    }
  }
}

TEST(MeasureProperty, EigenIdentity) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const GroupSpec g(trial % 2, testing_support::random_finite_group(rng).torsion_orders());
    const auto mu = testing_support::random_measure(rng, g);
    const auto m = testing_support::random_character(rng, g);
    const Function f = ExpPolyFunction::exponential(m);
    const auto mh = mu_hat(mu, m);
    for (const auto& x : Domain{g, 4}.points()) {
      EXPECT_LT(std::abs(convolve(f, mu, x) - mh * m(x)), 1e-10 * std::max(1.0, std::abs(m(x))));
    }
  }
}

TEST(MeasureProperty, AdditiveCase) {
  std::mt19937_64 rng(33);
  const GroupSpec g(1, {2});
  for (int trial = 0; trial < 30; ++trial) {
    const auto mu = testing_support::random_measure(rng, g, 1, 4);
    const auto m0 = testing_support::random_character(rng, g);
    const AdditiveFunction a(g, {testing_support::random_complex(rng)});
    const Complex b = testing_support::random_complex(rng);
    const Function f = ExpPolyFunction::term(m0, a, b);
    Complex moment{};
    for (const auto& [t, w] : mu.atoms()) moment += a(t) * m0(neg(g, t)) * w;
    EXPECT_LT(std::abs(additive_moment(mu, a, m0) - moment), 1e-12);
    for (const auto& x : Domain{g, 5}.points()) {
      const Complex expected = m0(x) * ((a(x) + b) * mu_hat(mu, m0) - moment);
      EXPECT_LT(std::abs(convolve(f, mu, x) - expected), 1e-9 * std::max(1.0, std::abs(expected)));
    }
  }
}

// For even m0 the moment is sum a(t) m0(t) w(t).
TEST(MeasureProperty, AdditiveMomentEvenExponential) {
  const GroupSpec g(1, {});
  const Exponential m0(g, {}, {-1.0});
  const Measure mu(g, {{{1}, Complex(1, 1)}, {{-3}, 2.0}, {{4}, Complex(0, -1)}});
  const AdditiveFunction a(g, {Complex(2, -1)});
  Complex direct{};
  for (const auto& [t, w] : mu.atoms()) direct += a(t) * m0(t) * w;
  EXPECT_LT(std::abs(additive_moment(mu, a, m0) - direct), 1e-12);
}

TEST(MeasureProperty, Linearity) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing_support::random_finite_group(rng);
    const auto mu = testing_support::random_measure(rng, g);
    const auto nu = testing_support::random_measure(rng, g);
    std::vector<Complex> vals;
    for (std::uint64_t i = 0; i < g.order(); ++i) vals.push_back(testing_support::random_complex(rng));
    const Function f = TableFunction(g, vals);
    for (const auto& x : enumerate_elements(g)) {
      EXPECT_LT(std::abs(convolve(f, mu + nu, x) - convolve(f, mu, x) - convolve(f, nu, x)), 1e-12);
    }
  }
}

TEST(MeasureProperty, InversionTransform) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 60; ++trial) {
    const GroupSpec g(trial % 2, testing_support::random_finite_group(rng).torsion_orders());
    const auto mu = testing_support::random_measure(rng, g);
    const auto m = testing_support::random_character(rng, g);
    EXPECT_LT(std::abs(mu_hat(mu.invert(), m) - mu_hat(mu, m.reflected())), 1e-9);
  }
}

TEST(MeasureProperty, ClosedFormMatchesDirectConvolution) {
  std::mt19937_64 rng(36);
  const GroupSpec g(1, {4});
  for (int trial = 0; trial < 30; ++trial) {
    const auto mu = testing_support::random_measure(rng, g);
    std::map<CosetIndex2G, Complex> table;
    for (const auto& c : enumerate_cosets_2g(g)) table[c] = testing_support::random_complex(rng);
    const auto f = ExpPolyFunction::term(testing_support::random_character(rng, g),
                                         AdditiveFunction(g, {testing_support::random_complex(rng)}),
                                         testing_support::random_complex(rng)) +
                   ExpPolyFunction::exponential(testing_support::random_character(rng, g), 2.0) +
                   ExpPolyFunction::periodic(TwoGPeriodic(g, table), trial % 2 == 0 ? 1 : -1);
    const auto closed = convolve_closed_form(f, mu);
    for (const auto& x : Domain{g, 5}.points()) {
      const auto direct = convolve(f, mu, x);
      EXPECT_LT(std::abs(closed(x) - direct), 1e-9 * std::max(1.0, std::abs(direct)));
    }
  }
}
