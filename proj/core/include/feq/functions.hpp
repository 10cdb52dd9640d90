#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "feq/group.hpp"

namespace feq {

using Complex = std::complex<double>;

/// Absolute tolerance used for complex comparisons unless a caller overrides it.
inline constexpr double kDefaultTolerance = 1e-9;

using ElementPair = std::pair<GroupElement, GroupElement>;

/// Multiplicative function m(x+y) = m(x)m(y). On torsion coordinate j the
/// value m(e_j) = exp(2 pi i k_j / n_j) is kept as the exact root index k_j;
/// on free coordinate i the value m(e_i) = lambda_i is a nonzero complex number.
class Exponential {
 public:
  Exponential(GroupSpec g, std::vector<std::int64_t> torsion_roots, std::vector<Complex> free_multipliers = {});

  static Exponential trivial(const GroupSpec& g);

  const GroupSpec& group() const { return group_; }
  const std::vector<std::int64_t>& torsion_roots() const { return roots_; }
  const std::vector<Complex>& free_multipliers() const { return multipliers_; }

  Complex operator()(const GroupElement& x) const;

  /// x -> m(-x).
  Exponential reflected() const;

  /// Structural test for m = m(-.): lambda_i = +-1 and 2 k_j = 0 mod n_j.
  bool is_even(double tol = kDefaultTolerance) const;
  bool is_trivial(double tol = kDefaultTolerance) const;
  bool same_as(const Exponential& other, double tol = kDefaultTolerance) const;

  std::string describe() const;

 private:
  GroupSpec group_;
  std::vector<std::int64_t> roots_;
  std::vector<Complex> multipliers_;
};

/// Lexicographic order on (root indices, multipliers by (re, im)); used to pick
/// a canonical representative of {m, m-check}.
bool canonically_precedes(const Exponential& a, const Exponential& b);

/// True when m is the canonical member of {m, m-check} (ties count as canonical).
bool is_canonical_orientation(const Exponential& m);

bool is_even_exponential(const Exponential& m, double tol = kDefaultTolerance);

/// All characters of a finite group, lexicographic in root-index vectors.
std::vector<Exponential> enumerate_exponentials(const GroupSpec& g);

struct ExponentialCheck {
  bool ok = true;
  double max_deviation = 0.0;
};

ExponentialCheck check_exponential(const Exponential& m, std::span<const ElementPair> samples,
                                   double tol = kDefaultTolerance);
ExponentialCheck check_exponential(const GroupSpec& g, const std::function<Complex(const GroupElement&)>& m,
                                   std::span<const ElementPair> samples, double tol = kDefaultTolerance);

/// Every ordered pair of a finite group.
std::vector<ElementPair> all_pairs(const GroupSpec& g);

/// a(x) = sum_i c_i x_i over free coordinates. Torsion coordinates never
/// contribute: a homomorphism from a finite group into (C, +) is zero.
class AdditiveFunction {
 public:
  AdditiveFunction(GroupSpec g, std::vector<Complex> free_coeffs);
  static AdditiveFunction zero(const GroupSpec& g);

  const GroupSpec& group() const { return group_; }
  const std::vector<Complex>& free_coeffs() const { return coeffs_; }

  Complex operator()(const GroupElement& x) const;
  bool is_zero(double tol = kDefaultTolerance) const;

  AdditiveFunction scaled(Complex c) const;
  AdditiveFunction operator+(const AdditiveFunction& o) const;

 private:
  GroupSpec group_;
  std::vector<Complex> coeffs_;
};

/// Function constant on the cosets of 2G. Cosets missing from the table read as 0.
class TwoGPeriodic {
 public:
  TwoGPeriodic(GroupSpec g, std::map<CosetIndex2G, Complex> table);
  static TwoGPeriodic constant(const GroupSpec& g, Complex c);
  static TwoGPeriodic zero(const GroupSpec& g) { return constant(g, Complex{}); }

  const GroupSpec& group() const { return group_; }
  const std::map<CosetIndex2G, Complex>& table() const { return table_; }

  Complex value(const CosetIndex2G& c) const;
  Complex operator()(const GroupElement& x) const { return value(coset_2g(group_, x)); }

  bool is_constant(double tol = kDefaultTolerance) const;
  bool is_zero(double tol = kDefaultTolerance) const;

  TwoGPeriodic scaled(Complex c) const;
  TwoGPeriodic operator+(const TwoGPeriodic& o) const;

 private:
  GroupSpec group_;
  std::map<CosetIndex2G, Complex> table_;
};

/// One addend (a(x) + b) m(x).
struct ExpPolyTerm {
  Exponential m;
  AdditiveFunction a;
  Complex b;

  Complex operator()(const GroupElement& x) const { return (a(x) + b) * m(x); }
};

struct PeriodicPart {
  int sign = 1;
  TwoGPeriodic T;
};

/// x -> sum_k (a_k(x) + b_k) m_k(x) + sign * T(x). Closed form, defined on the whole group.
class ExpPolyFunction {
 public:
  explicit ExpPolyFunction(GroupSpec g, std::vector<ExpPolyTerm> terms = {},
                           std::optional<PeriodicPart> periodic = std::nullopt);

  static ExpPolyFunction zero(const GroupSpec& g) { return ExpPolyFunction(g); }
  static ExpPolyFunction exponential(const Exponential& m, Complex coeff = 1.0);
  static ExpPolyFunction term(const Exponential& m, const AdditiveFunction& a, Complex b);
  static ExpPolyFunction periodic(const TwoGPeriodic& T, int sign = 1);
  static ExpPolyFunction constant(const GroupSpec& g, Complex c);

  const GroupSpec& group() const { return group_; }
  const std::vector<ExpPolyTerm>& terms() const { return terms_; }
  const std::optional<PeriodicPart>& periodic_part() const { return periodic_; }

  Complex operator()(const GroupElement& x) const;

  ExpPolyFunction reflected() const;
  ExpPolyFunction scaled(Complex c) const;
  ExpPolyFunction operator+(const ExpPolyFunction& o) const;
  ExpPolyFunction operator-(const ExpPolyFunction& o) const;

  /// Merges terms that share an exponential and drops vanishing terms.
  ExpPolyFunction simplified(double tol = kDefaultTolerance) const;

  bool has_additive_component(double tol = kDefaultTolerance) const;

 private:
  GroupSpec group_;
  std::vector<ExpPolyTerm> terms_;
  std::optional<PeriodicPart> periodic_;
};

/// Dense value table on a finite group, indexed by linear_index.
class TableFunction {
 public:
  TableFunction(GroupSpec g, std::vector<Complex> values);

  static TableFunction tabulate(const GroupSpec& g, const std::function<Complex(const GroupElement&)>& f);

  const GroupSpec& group() const { return group_; }
  const std::vector<Complex>& values() const { return values_; }

  Complex operator()(const GroupElement& x) const;

 private:
  GroupSpec group_;
  std::vector<Complex> values_;
};

/// Either a closed form or a finite value table.
class Function {
 public:
  Function(ExpPolyFunction f) : impl_(std::move(f)) {}  // NOLINT(google-explicit-constructor)
  Function(TableFunction f) : impl_(std::move(f)) {}    // NOLINT(google-explicit-constructor)

  static Function zero(const GroupSpec& g) { return ExpPolyFunction::zero(g); }

  const GroupSpec& group() const;
  Complex operator()(const GroupElement& x) const;

  bool is_closed_form() const { return std::holds_alternative<ExpPolyFunction>(impl_); }
  const ExpPolyFunction* closed_form() const { return std::get_if<ExpPolyFunction>(&impl_); }
  const TableFunction* table() const { return std::get_if<TableFunction>(&impl_); }

  Function reflected() const;
  Function scaled(Complex c) const;
  Function operator+(const Function& o) const;
  Function operator-(const Function& o) const;

  /// Dense table of this function; finite groups only.
  TableFunction tabulated() const;

 private:
  std::variant<ExpPolyFunction, TableFunction> impl_;
};

Function even_part(const Function& f);
Function odd_part(const Function& f);
ExpPolyFunction even_part(const ExpPolyFunction& f);
ExpPolyFunction odd_part(const ExpPolyFunction& f);

}  // namespace feq
