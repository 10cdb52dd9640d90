#include "feq/functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "feq/errors.hpp"

namespace feq {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

Complex int_pow(Complex base, std::int64_t e) {
  const bool invert = e < 0;
  std::uint64_t k = invert ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Complex result{1.0, 0.0};
  while (k) {
    if (k & 1U) result *= base;
    base *= base;
    k >>= 1U;
  }
  return invert ? Complex{1.0, 0.0} / result : result;
}

void require_group(const GroupSpec& expected, const GroupSpec& got, const char* what) {
  if (!(expected == got)) {
    throw StructuralError(std::string(what) + ": group mismatch " + to_string(expected) + " vs " + to_string(got));
  }
}

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

// ---------------------------------------------------------------- Exponential

Exponential::Exponential(GroupSpec g, std::vector<std::int64_t> torsion_roots, std::vector<Complex> free_multipliers)
    : group_(std::move(g)), roots_(std::move(torsion_roots)), multipliers_(std::move(free_multipliers)) {
  if (roots_.size() != group_.torsion_orders().size()) {
    throw StructuralError("exponential needs one root index per torsion coordinate");
  }
  if (multipliers_.size() != static_cast<std::size_t>(group_.free_rank())) {
    throw StructuralError("exponential needs one multiplier per free coordinate");
  }
  for (std::size_t j = 0; j < roots_.size(); ++j) roots_[j] = mod(roots_[j], group_.torsion_orders()[j]);
  for (const auto& l : multipliers_) {
    if (l == Complex{}) throw ParameterError("exponential multipliers must be nonzero");
  }
}

Exponential Exponential::trivial(const GroupSpec& g) {
  return Exponential(g, std::vector<std::int64_t>(g.torsion_orders().size(), 0),
                     std::vector<Complex>(static_cast<std::size_t>(g.free_rank()), Complex{1.0, 0.0}));
}

Complex Exponential::operator()(const GroupElement& x) const {
  if (x.dimension() != group_.dimension()) throw StructuralError("exponential evaluated at " + to_string(x));
  const auto r = static_cast<std::size_t>(group_.free_rank());
  Complex value{1.0, 0.0};
  for (std::size_t i = 0; i < r; ++i) value *= int_pow(multipliers_[i], x.coords[i]);

  // Accumulate the torsion phase as a fraction of a full turn.
  double turns = 0.0;
  const auto& orders = group_.torsion_orders();
  for (std::size_t j = 0; j < orders.size(); ++j) {
    const auto n = orders[j];
    const auto num = (roots_[j] * mod(x.coords[r + j], n)) % n;
    turns += static_cast<double>(num) / static_cast<double>(n);
  }
  turns -= std::floor(turns);
  if (turns != 0.0) value *= std::polar(1.0, 2.0 * std::numbers::pi * turns);
  return value;
}

Exponential Exponential::reflected() const {
  std::vector<std::int64_t> roots(roots_.size());
  for (std::size_t j = 0; j < roots_.size(); ++j) roots[j] = mod(-roots_[j], group_.torsion_orders()[j]);
  std::vector<Complex> mult(multipliers_.size());
  for (std::size_t i = 0; i < mult.size(); ++i) mult[i] = Complex{1.0, 0.0} / multipliers_[i];
  return Exponential(group_, std::move(roots), std::move(mult));
}

bool Exponential::is_even(double tol) const {
  for (std::size_t j = 0; j < roots_.size(); ++j) {
    if (mod(2 * roots_[j], group_.torsion_orders()[j]) != 0) return false;
  }
  for (const auto& l : multipliers_) {
    if (!close(l, 1.0, tol) && !close(l, -1.0, tol)) return false;
  }
  return true;
}

bool Exponential::is_trivial(double tol) const {
  for (auto k : roots_) {
    if (k != 0) return false;
  }
  for (const auto& l : multipliers_) {
    if (!close(l, 1.0, tol)) return false;
  }
  return true;
}

bool Exponential::same_as(const Exponential& other, double tol) const {
  if (!(group_ == other.group_) || roots_ != other.roots_) return false;
  for (std::size_t i = 0; i < multipliers_.size(); ++i) {
    const double scale = std::max(1.0, std::abs(multipliers_[i]));
    if (std::abs(multipliers_[i] - other.multipliers_[i]) > tol * scale) return false;
  }
  return true;
}

std::string Exponential::describe() const {
  std::ostringstream os;
  os << "m[";
  for (std::size_t j = 0; j < roots_.size(); ++j) os << (j ? "," : "") << roots_[j];
  if (!multipliers_.empty()) {
    os << "|";
    for (std::size_t i = 0; i < multipliers_.size(); ++i) os << (i ? "," : "") << multipliers_[i];
  }
  os << "]";
  return os.str();
}

bool canonically_precedes(const Exponential& a, const Exponential& b) {
  if (a.torsion_roots() != b.torsion_roots()) return a.torsion_roots() < b.torsion_roots();
  const auto& la = a.free_multipliers();
  const auto& lb = b.free_multipliers();
  for (std::size_t i = 0; i < la.size() && i < lb.size(); ++i) {
    if (la[i].real() != lb[i].real()) return la[i].real() < lb[i].real();
    if (la[i].imag() != lb[i].imag()) return la[i].imag() < lb[i].imag();
  }
  return false;
}

bool is_canonical_orientation(const Exponential& m) { return !canonically_precedes(m.reflected(), m); }

bool is_even_exponential(const Exponential& m, double tol) { return m.is_even(tol); }

std::vector<Exponential> enumerate_exponentials(const GroupSpec& g) {
  if (!g.is_finite()) {
    throw UnsupportedDomainError("exponentials of " + to_string(g) +
                                 " form a continuum on free coordinates; supply them explicitly");
  }
  // Characters of a finite group are indexed by the group itself.
  std::vector<Exponential> out;
  for (const auto& k : enumerate_elements(g)) out.emplace_back(g, k.coords);
  return out;
}

ExponentialCheck check_exponential(const GroupSpec& g, const std::function<Complex(const GroupElement&)>& m,
                                   std::span<const ElementPair> samples, double tol) {
  ExponentialCheck out;
  for (const auto& [x, y] : samples) {
    const double dev = std::abs(m(add(g, x, y)) - m(x) * m(y));
    out.max_deviation = std::max(out.max_deviation, dev);
  }
  out.ok = out.max_deviation <= tol;
  return out;
}

ExponentialCheck check_exponential(const Exponential& m, std::span<const ElementPair> samples, double tol) {
  return check_exponential(m.group(), [&m](const GroupElement& x) { return m(x); }, samples, tol);
}

std::vector<ElementPair> all_pairs(const GroupSpec& g) {
  const auto elems = enumerate_elements(g);
  std::vector<ElementPair> out;
  out.reserve(elems.size() * elems.size());
  for (const auto& x : elems) {
    for (const auto& y : elems) out.emplace_back(x, y);
  }
  return out;
}

// ---------------------------------------------------------- AdditiveFunction

AdditiveFunction::AdditiveFunction(GroupSpec g, std::vector<Complex> free_coeffs)
    : group_(std::move(g)), coeffs_(std::move(free_coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(group_.free_rank())) {
    throw StructuralError("additive function needs one coefficient per free coordinate");
  }
}

AdditiveFunction AdditiveFunction::zero(const GroupSpec& g) {
  return AdditiveFunction(g, std::vector<Complex>(static_cast<std::size_t>(g.free_rank())));
}

Complex AdditiveFunction::operator()(const GroupElement& x) const {
  if (x.dimension() != group_.dimension()) throw StructuralError("additive function evaluated at " + to_string(x));
  Complex s{};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s += coeffs_[i] * static_cast<double>(x.coords[i]);
  return s;
}

bool AdditiveFunction::is_zero(double tol) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [tol](Complex c) { return std::abs(c) <= tol; });
}

AdditiveFunction AdditiveFunction::scaled(Complex c) const {
  auto out = coeffs_;
  for (auto& v : out) v *= c;
  return AdditiveFunction(group_, std::move(out));
}

AdditiveFunction AdditiveFunction::operator+(const AdditiveFunction& o) const {
  require_group(group_, o.group_, "additive sum");
  auto out = coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.coeffs_[i];
  return AdditiveFunction(group_, std::move(out));
}

// -------------------------------------------------------------- TwoGPeriodic

TwoGPeriodic::TwoGPeriodic(GroupSpec g, std::map<CosetIndex2G, Complex> table)
    : group_(std::move(g)), table_(std::move(table)) {
  const auto nbits = group_.coset_bit_count();
  for (const auto& [c, v] : table_) {
    if (c.bits.size() != nbits) throw StructuralError("coset key " + to_string(c) + " has wrong bit count");
    for (auto b : c.bits) {
      if (b > 1) throw StructuralError("coset key bits must be 0 or 1");
    }
  }
}

TwoGPeriodic TwoGPeriodic::constant(const GroupSpec& g, Complex c) {
  std::map<CosetIndex2G, Complex> table;
  for (auto& k : enumerate_cosets_2g(g)) table.emplace(std::move(k), c);
  return TwoGPeriodic(g, std::move(table));
}

Complex TwoGPeriodic::value(const CosetIndex2G& c) const {
  auto it = table_.find(c);
  return it == table_.end() ? Complex{} : it->second;
}

bool TwoGPeriodic::is_constant(double tol) const {
  const auto cosets = enumerate_cosets_2g(group_);
  const Complex first = value(cosets.front());
  return std::all_of(cosets.begin(), cosets.end(), [&](const auto& c) { return close(value(c), first, tol); });
}

bool TwoGPeriodic::is_zero(double tol) const {
  return std::all_of(table_.begin(), table_.end(), [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

TwoGPeriodic TwoGPeriodic::scaled(Complex c) const {
  auto t = table_;
  for (auto& [k, v] : t) v *= c;
  return TwoGPeriodic(group_, std::move(t));
}

TwoGPeriodic TwoGPeriodic::operator+(const TwoGPeriodic& o) const {
  require_group(group_, o.group_, "periodic sum");
  auto t = table_;
  for (const auto& [k, v] : o.table_) t[k] += v;
  return TwoGPeriodic(group_, std::move(t));
}

// ----------------------------------------------------------- ExpPolyFunction

ExpPolyFunction::ExpPolyFunction(GroupSpec g, std::vector<ExpPolyTerm> terms, std::optional<PeriodicPart> periodic)
    : group_(std::move(g)), terms_(std::move(terms)), periodic_(std::move(periodic)) {
  for (const auto& t : terms_) {
    require_group(group_, t.m.group(), "exp-poly term exponential");
    require_group(group_, t.a.group(), "exp-poly term additive");
  }
  if (periodic_) {
    require_group(group_, periodic_->T.group(), "exp-poly periodic part");
    if (periodic_->sign != 1 && periodic_->sign != -1) throw StructuralError("periodic sign must be +1 or -1");
  }
}

ExpPolyFunction ExpPolyFunction::exponential(const Exponential& m, Complex coeff) {
  return term(m, AdditiveFunction::zero(m.group()), coeff);
}

ExpPolyFunction ExpPolyFunction::term(const Exponential& m, const AdditiveFunction& a, Complex b) {
  return ExpPolyFunction(m.group(), {ExpPolyTerm{m, a, b}});
}

ExpPolyFunction ExpPolyFunction::periodic(const TwoGPeriodic& T, int sign) {
  return ExpPolyFunction(T.group(), {}, PeriodicPart{sign, T});
}

ExpPolyFunction ExpPolyFunction::constant(const GroupSpec& g, Complex c) {
  return exponential(Exponential::trivial(g), c);
}

Complex ExpPolyFunction::operator()(const GroupElement& x) const {
  if (x.dimension() != group_.dimension()) throw StructuralError("function evaluated at " + to_string(x));
  Complex s{};
  for (const auto& t : terms_) s += t(x);
  if (periodic_) s += static_cast<double>(periodic_->sign) * periodic_->T(x);
  return s;
}

ExpPolyFunction ExpPolyFunction::reflected() const {
  // (a(-x) + b) m(-x) = (-a(x) + b) m-check(x); T is even.
  std::vector<ExpPolyTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.m.reflected(), t.a.scaled(-1.0), t.b});
  return ExpPolyFunction(group_, std::move(out), periodic_);
}

ExpPolyFunction ExpPolyFunction::scaled(Complex c) const {
  std::vector<ExpPolyTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.m, t.a.scaled(c), t.b * c});
  std::optional<PeriodicPart> p;
  if (periodic_) p = PeriodicPart{1, periodic_->T.scaled(c * static_cast<double>(periodic_->sign))};
  return ExpPolyFunction(group_, std::move(out), std::move(p));
}

ExpPolyFunction ExpPolyFunction::operator+(const ExpPolyFunction& o) const {
  require_group(group_, o.group_, "function sum");
  auto out = terms_;
  out.insert(out.end(), o.terms_.begin(), o.terms_.end());
  std::optional<PeriodicPart> p;
  if (periodic_ && o.periodic_) {
    p = PeriodicPart{1, periodic_->T.scaled(static_cast<double>(periodic_->sign)) +
                            o.periodic_->T.scaled(static_cast<double>(o.periodic_->sign))};
  } else if (periodic_) {
    p = periodic_;
  } else if (o.periodic_) {
    p = o.periodic_;
  }
  return ExpPolyFunction(group_, std::move(out), std::move(p));
}

ExpPolyFunction ExpPolyFunction::operator-(const ExpPolyFunction& o) const { return *this + o.scaled(-1.0); }

ExpPolyFunction ExpPolyFunction::simplified(double tol) const {
  std::vector<ExpPolyTerm> merged;
  for (const auto& t : terms_) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const ExpPolyTerm& u) { return u.m.same_as(t.m, tol); });
    if (it == merged.end()) {
      merged.push_back(t);
    } else {
      it->a = it->a + t.a;
      it->b += t.b;
    }
  }
  std::erase_if(merged, [tol](const ExpPolyTerm& t) { return t.a.is_zero(tol) && std::abs(t.b) <= tol; });
  std::optional<PeriodicPart> p;
  if (periodic_ && !periodic_->T.is_zero(tol)) p = periodic_;
  return ExpPolyFunction(group_, std::move(merged), std::move(p));
}

bool ExpPolyFunction::has_additive_component(double tol) const {
  return std::any_of(terms_.begin(), terms_.end(), [tol](const ExpPolyTerm& t) { return !t.a.is_zero(tol); });
}

ExpPolyFunction even_part(const ExpPolyFunction& f) { return (f + f.reflected()).scaled(0.5).simplified(); }

ExpPolyFunction odd_part(const ExpPolyFunction& f) { return (f - f.reflected()).scaled(0.5).simplified(); }

// ------------------------------------------------------------- TableFunction

TableFunction::TableFunction(GroupSpec g, std::vector<Complex> values) : group_(std::move(g)), values_(std::move(values)) {
  if (!group_.is_finite()) {
    throw UnsupportedDomainError("value tables need a finite group, got " + to_string(group_));
  }
  if (values_.size() != group_.order()) {
    throw StructuralError("value table has " + std::to_string(values_.size()) + " entries, group has " +
                          std::to_string(group_.order()) + " elements");
  }
}

TableFunction TableFunction::tabulate(const GroupSpec& g, const std::function<Complex(const GroupElement&)>& f) {
  std::vector<Complex> values;
  for (const auto& x : enumerate_elements(g)) values.push_back(f(x));
  return TableFunction(g, std::move(values));
}

Complex TableFunction::operator()(const GroupElement& x) const {
  if (!group_.conforms(x)) {
    throw EvaluationError("table function has no value at " + to_string(x) + " in " + to_string(group_));
  }
  return values_[linear_index(group_, x)];
}

// ------------------------------------------------------------------ Function

const GroupSpec& Function::group() const {
  return std::visit([](const auto& f) -> const GroupSpec& { return f.group(); }, impl_);
}

Complex Function::operator()(const GroupElement& x) const {
  return std::visit([&x](const auto& f) { return f(x); }, impl_);
}

TableFunction Function::tabulated() const {
  if (const auto* t = table()) return *t;
  return TableFunction::tabulate(group(), [this](const GroupElement& x) { return (*this)(x); });
}

Function Function::reflected() const {
  if (const auto* f = closed_form()) return f->reflected();
  const auto& g = group();
  const auto& t = *table();
  return TableFunction::tabulate(g, [&](const GroupElement& x) { return t(neg(g, x)); });
}

Function Function::scaled(Complex c) const {
  if (const auto* f = closed_form()) return f->scaled(c);
  auto values = table()->values();
  for (auto& v : values) v *= c;
  return TableFunction(group(), std::move(values));
}

Function Function::operator+(const Function& o) const {
  require_group(group(), o.group(), "function sum");
  if (closed_form() && o.closed_form()) return *closed_form() + *o.closed_form();
  auto a = tabulated().values();
  const auto b = o.tabulated().values();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return TableFunction(group(), std::move(a));
}

Function Function::operator-(const Function& o) const { return *this + o.scaled(-1.0); }

Function even_part(const Function& f) {
  if (const auto* c = f.closed_form()) return even_part(*c);
  return (f + f.reflected()).scaled(0.5);
}

Function odd_part(const Function& f) {
  if (const auto* c = f.closed_form()) return odd_part(*c);
  return (f - f.reflected()).scaled(0.5);
}

}  // namespace feq
