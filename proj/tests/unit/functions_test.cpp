#include <gtest/gtest.h>

#include <random>

#include "feq/domain.hpp"
#include "feq/errors.hpp"
#include "feq/functions.hpp"
#include "oracle.hpp"
#include "random.hpp"

using namespace feq;

namespace {

const Complex I{0.0, 1.0};

Exponential z4_i() { return Exponential(GroupSpec::cyclic(4), {1}); }

}  // namespace

TEST(Exponential, Evaluation) {
  const auto z = GroupSpec::integers();
  EXPECT_EQ(ExpPolyFunction::exponential(Exponential::trivial(z))({17}), Complex(1.0));
  const AdditiveFunction a(z, {1.0});
  EXPECT_EQ(ExpPolyFunction::term(Exponential::trivial(z), a, 0.0)({5}), Complex(5.0));
  // i^3 by repeated multiplication.
  EXPECT_LT(std::abs(ExpPolyFunction::exponential(z4_i())({3}) - I * I * I), 1e-15);
}

TEST(Exponential, MatchesCharacterTableOracle) {
  for (std::int64_t n = 1; n <= 12; ++n) {
    const auto g = GroupSpec::cyclic(n);
    for (std::int64_t k = 0; k < n; ++k) {
      const Exponential m(g, {k});
      const auto table = oracle::character(n, k);
      for (std::int64_t x = 0; x < n; ++x) EXPECT_LT(std::abs(m({x}) - table[static_cast<std::size_t>(x)]), 1e-13);
    }
  }
}

TEST(Exponential, FreeMultipliers) {
  const GroupSpec g(1, {3});
  const Complex lambda{0.5, 1.5};
  const Exponential m(g, {1}, {lambda});
  const Complex expected = std::pow(lambda, -4) * std::exp(Complex(0.0, 2.0 * std::numbers::pi * 2.0 / 3.0));
  EXPECT_LT(std::abs(m({-4, 2}) - expected), 1e-12);
  EXPECT_THROW(Exponential(g, {1}, {0.0}), ParameterError);
  EXPECT_THROW(Exponential(g, {1}, {}), StructuralError);
}

TEST(Exponential, Enumerate) {
  const auto z2 = enumerate_exponentials(GroupSpec::cyclic(2));
  ASSERT_EQ(z2.size(), 2u);
  // Oracle: m(1)^2 = 1 has exactly the solutions +1 and -1.
  std::vector<Complex> values;
  for (const auto& m : z2) values.push_back(m({1}));
  EXPECT_LT(std::abs(values[0] - 1.0), 1e-15);
  EXPECT_LT(std::abs(values[1] + 1.0), 1e-15);

  const auto z3 = enumerate_exponentials(GroupSpec::cyclic(3));
  ASSERT_EQ(z3.size(), 3u);
  for (const auto& m : z3) EXPECT_LT(std::abs(std::pow(m({1}), 3) - 1.0), 1e-12);
  EXPECT_GT(std::abs(z3[1]({1}) - z3[2]({1})), 0.5);

  const auto triv = enumerate_exponentials(GroupSpec::trivial());
  ASSERT_EQ(triv.size(), 1u);
  EXPECT_EQ(triv[0](GroupElement{}), Complex(1.0));

  EXPECT_THROW(enumerate_exponentials(GroupSpec::integers()), UnsupportedDomainError);
}

TEST(Exponential, CheckExponential) {
  const auto g = GroupSpec::cyclic(4);
  const auto pairs = all_pairs(g);
  const auto ok = check_exponential(z4_i(), pairs);
  EXPECT_TRUE(ok.ok);
  EXPECT_LE(ok.max_deviation, 1e-12);

  const auto triv = check_exponential(Exponential::trivial(g), pairs);
  EXPECT_TRUE(triv.ok);
  EXPECT_EQ(triv.max_deviation, 0.0);

  // m(1) = 2 cannot be a character of Z_4 since 2^4 = 16.
  const auto bad = [](const GroupElement& x) { return std::pow(Complex(2.0), static_cast<int>(x.coords[0])); };
  const auto r = check_exponential(g, bad, pairs);
  EXPECT_FALSE(r.ok);
  EXPECT_GT(r.max_deviation, 1.0);
}

TEST(Exponential, IsEven) {
  EXPECT_FALSE(is_even_exponential(z4_i()));
  EXPECT_TRUE(is_even_exponential(Exponential(GroupSpec::cyclic(4), {2})));
  EXPECT_TRUE(is_even_exponential(Exponential::trivial(GroupSpec(1, {3}))));
  EXPECT_TRUE(is_even_exponential(Exponential(GroupSpec::integers(), {}, {-1.0})));
  EXPECT_FALSE(is_even_exponential(Exponential(GroupSpec::integers(), {}, {2.0})));
}

// Structural evenness agrees with pointwise evenness on every character.
TEST(Exponential, IsEvenAgreesWithPointwise) {
  for (const auto& g : {GroupSpec::cyclic(6), GroupSpec(0, {2, 4}), GroupSpec(0, {3, 5})}) {
    for (const auto& m : enumerate_exponentials(g)) {
      bool pointwise = true;
      for (const auto& x : enumerate_elements(g)) pointwise &= std::abs(m(x) - m(neg(g, x))) < 1e-12;
      EXPECT_EQ(is_even_exponential(m), pointwise) << m.describe();
    }
  }
}

TEST(Exponential, Reflected) {
  const auto m = z4_i();
  const auto r = m.reflected();
  for (std::int64_t x = 0; x < 4; ++x) EXPECT_LT(std::abs(r({x}) - m({(4 - x) % 4})), 1e-14);
  EXPECT_TRUE(r.reflected().same_as(m));
  EXPECT_NE(is_canonical_orientation(m), is_canonical_orientation(r));
}

TEST(ExponentialProperty, NeverVanishes) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const GroupSpec g(trial % 2, testing_support::random_finite_group(rng).torsion_orders());
    const auto m = testing_support::random_character(rng, g);
    for (const auto& x : Domain{g}.points()) EXPECT_GE(std::abs(m(x)), 1e-12);
  }
}

TEST(Additive, VanishesOnFiniteGroups) {
  const auto g = GroupSpec(0, {3, 4});
  const auto a = AdditiveFunction(g, {});
  for (const auto& x : enumerate_elements(g)) EXPECT_EQ(a(x), Complex{});
  EXPECT_TRUE(a.is_zero());
  EXPECT_THROW(AdditiveFunction(g, {1.0}), StructuralError);
}

TEST(Additive, IsAdditive) {
  const GroupSpec g(2, {6});
  const AdditiveFunction a(g, {Complex(1, 2), Complex(-3, 0.5)});
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const auto x = testing_support::random_element(rng, g);
    const auto y = testing_support::random_element(rng, g);
    EXPECT_LT(std::abs(a(add(g, x, y)) - a(x) - a(y)), 1e-12);
  }
}

TEST(TwoGPeriodic, DependsOnlyOnCoset) {
  const GroupSpec g(1, {4, 3});
  std::map<CosetIndex2G, Complex> table;
  int k = 1;
  for (const auto& c : enumerate_cosets_2g(g)) {
    table[c] = Complex(k, -k);
    ++k;
  }
  const TwoGPeriodic T(g, table);
  for (const auto& x : Domain{g, 4}.points()) {
    EXPECT_EQ(T(x), T(neg(g, x)));
    EXPECT_EQ(T(x), T(add(g, x, twice(g, x))));
  }
  EXPECT_FALSE(T.is_constant());
}

// On a 2-divisible group there is a single coset, so every 2G-periodic function is constant.
TEST(TwoGPeriodic, TwoDivisibleCollapse) {
  for (const auto& g : {GroupSpec::cyclic(3), GroupSpec(0, {5, 7}), GroupSpec::cyclic(9)}) {
    const auto cosets = enumerate_cosets_2g(g);
    ASSERT_EQ(cosets.size(), 1u);
    const TwoGPeriodic T(g, {{cosets[0], Complex(2, 1)}});
    EXPECT_TRUE(T.is_constant());
    for (const auto& x : enumerate_elements(g)) EXPECT_EQ(T(x), Complex(2, 1));
  }
}

TEST(EvenOdd, Examples) {
  const auto g = GroupSpec::cyclic(3);
  const auto c = ExpPolyFunction::constant(g, Complex(2, 1));
  const auto ce = even_part(c);
  const auto co = odd_part(c);
  for (const auto& x : enumerate_elements(g)) {
    EXPECT_LT(std::abs(ce(x) - c(x)), 1e-15);
    EXPECT_LT(std::abs(co(x)), 1e-15);
  }

  const Exponential m(g, {1});
  const auto e = even_part(ExpPolyFunction::exponential(m));
  for (const auto& x : enumerate_elements(g)) EXPECT_LT(std::abs(e(x) - 0.5 * (m(x) + m.reflected()(x))), 1e-15);

  const auto z4 = GroupSpec::cyclic(4);
  const Function ind = TableFunction(z4, {0.0, 1.0, 0.0, 0.0});
  const auto ie = even_part(ind);
  EXPECT_EQ(ie({1}), Complex(0.5));
  EXPECT_EQ(ie({3}), Complex(0.5));
  EXPECT_EQ(ie({0}), Complex(0.0));
}

TEST(EvenOddProperty, DecompositionAndParity) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing_support::random_finite_group(rng);
    std::vector<Complex> vals;
    for (std::uint64_t i = 0; i < g.order(); ++i) vals.push_back(testing_support::random_complex(rng));
    const Function f = TableFunction(g, vals);
    const auto fe = even_part(f);
    const auto fo = odd_part(f);
    for (const auto& x : enumerate_elements(g)) {
      EXPECT_LT(std::abs(fe(x) + fo(x) - f(x)), 1e-14);
      EXPECT_LT(std::abs(fe(neg(g, x)) - fe(x)), 1e-14);
      EXPECT_LT(std::abs(fo(neg(g, x)) + fo(x)), 1e-14);
    }
  }
  // Closed forms on an infinite group, checked on the window.
  const GroupSpec z(1, {2});
  const Exponential m(z, {1}, {Complex(1.1, 0.3)});
  const auto f = ExpPolyFunction::term(m, AdditiveFunction(z, {Complex(0, 1)}), 2.0) +
                 ExpPolyFunction::periodic(TwoGPeriodic(z, {{CosetIndex2G{{1, 0}}, 3.0}}));
  const auto fe = even_part(f);
  const auto fo = odd_part(f);
  for (const auto& x : Domain{z}.points()) {
    EXPECT_LT(std::abs(fe(x) + fo(x) - f(x)), 1e-9 * std::max(1.0, std::abs(f(x))));
    EXPECT_LT(std::abs(fe(neg(z, x)) - fe(x)), 1e-9 * std::max(1.0, std::abs(fe(x))));
  }
}

// Same exponentials with different (a, b) factors are distinguished on a
// window of half-width #terms.
TEST(ExpPolyProperty, UniquenessOnSmallWindow) {
  std::mt19937_64 rng(24);
  const auto z = GroupSpec::integers();
  for (int trial = 0; trial < 50; ++trial) {
    const int n_terms = 1 + trial % 3;
    std::vector<ExpPolyTerm> t1;
    std::vector<ExpPolyTerm> t2;
    for (int k = 0; k < n_terms; ++k) {
      const Exponential m(z, {}, {std::polar(1.0 + 0.3 * k, 0.7 * k + 0.1)});
      t1.push_back({m, AdditiveFunction(z, {testing_support::random_complex(rng)}), testing_support::random_complex(rng)});
      t2.push_back(t1.back());
    }
    const auto which = static_cast<std::size_t>(trial % n_terms);
    if (trial % 2 == 0) {
      t2[which].b += 0.25;
    } else {
      t2[which].a = t2[which].a + AdditiveFunction(z, {0.25});
    }
    const ExpPolyFunction f1(z, t1);
    const ExpPolyFunction f2(z, t2);
    double diff = 0.0;
    for (const auto& x : Domain{z, n_terms}.points()) diff = std::max(diff, std::abs(f1(x) - f2(x)));
    EXPECT_GT(diff, 1e-6) << "trial " << trial;
  }
}

TEST(ExpPoly, ReflectedAndSimplified) {
  const auto z = GroupSpec::integers();
  const Exponential m(z, {}, {Complex(2.0, 0.0)});
  const auto f = ExpPolyFunction::term(m, AdditiveFunction(z, {3.0}), 1.0);
  const auto r = f.reflected();
  for (std::int64_t x = -5; x <= 5; ++x) EXPECT_LT(std::abs(r({x}) - f({-x})), 1e-9 * std::max(1.0, std::abs(f({-x}))));

  const auto doubled = (f + f).simplified();
  EXPECT_EQ(doubled.terms().size(), 1u);
  EXPECT_LT(std::abs(doubled({3}) - 2.0 * f({3})), 1e-9);
  EXPECT_TRUE((f - f).simplified().terms().empty());
  EXPECT_TRUE(f.has_additive_component());
}

TEST(TableFunction, OffDomainThrows) {
  EXPECT_THROW(TableFunction(GroupSpec::integers(), {1.0}), UnsupportedDomainError);
  EXPECT_THROW(TableFunction(GroupSpec::cyclic(3), {1.0}), StructuralError);
  const TableFunction t(GroupSpec::cyclic(3), {1.0, 2.0, 3.0});
  EXPECT_THROW(t({5, 1}), Error);
}

TEST(Function, MixedArithmeticTabulates) {
  const auto g = GroupSpec::cyclic(4);
  const Function a = ExpPolyFunction::exponential(z4_i());
  const Function b = TableFunction(g, {1.0, 0.0, 0.0, 0.0});
  const auto s = a + b;
  EXPECT_FALSE(s.is_closed_form());
  EXPECT_LT(std::abs(s({0}) - 2.0), 1e-15);
  EXPECT_LT(std::abs(s({1}) - I), 1e-15);
}
