#include "feq/group.hpp"

#include <sstream>

#include "feq/errors.hpp"

namespace feq {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

void require_same_dimension(const GroupSpec& g, const GroupElement& x) {
  if (x.dimension() != g.dimension()) {
    std::ostringstream os;
    os << "element " << to_string(x) << " has dimension " << x.dimension() << ", group "
       << to_string(g) << " expects " << g.dimension();
    throw StructuralError(os.str());
  }
}

}  // namespace

std::string to_string(const GroupElement& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) os << ',';
    os << x.coords[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const CosetIndex2G& c) {
  std::string s;
  for (auto b : c.bits) s.push_back(b ? '1' : '0');
  return s;
}

GroupSpec::GroupSpec(int free_rank, std::vector<std::int64_t> torsion_orders)
    : free_rank_(free_rank), torsion_(std::move(torsion_orders)) {
  if (free_rank_ < 0) throw StructuralError("free rank must be non-negative");
  for (auto n : torsion_) {
    if (n < 1) throw StructuralError("torsion orders must be >= 1, got " + std::to_string(n));
  }
}

std::string to_string(const GroupSpec& g) {
  std::ostringstream os;
  bool first = true;
  if (g.free_rank() > 0) {
    os << 'Z';
    if (g.free_rank() > 1) os << '^' << g.free_rank();
    first = false;
  }
  for (auto n : g.torsion_orders()) {
    if (!first) os << '+';
    os << 'Z' << n;
    first = false;
  }
  if (first) os << "{0}";
  return os.str();
}

std::uint64_t GroupSpec::order() const {
  if (!is_finite()) throw UnsupportedDomainError("group " + to_string(*this) + " is infinite");
  std::uint64_t n = 1;
  for (auto t : torsion_) n *= static_cast<std::uint64_t>(t);
  return n;
}

std::size_t GroupSpec::coset_bit_count() const {
  std::size_t bits = static_cast<std::size_t>(free_rank_);
  for (auto n : torsion_) bits += (n % 2 == 0) ? 1 : 0;
  return bits;
}

GroupElement GroupSpec::element(std::vector<std::int64_t> coords) const {
  GroupElement x(std::move(coords));
  require_same_dimension(*this, x);
  for (std::size_t j = 0; j < torsion_.size(); ++j) {
    auto& c = x.coords[static_cast<std::size_t>(free_rank_) + j];
    c = reduce(c, torsion_[j]);
  }
  return x;
}

GroupElement GroupSpec::zero() const { return GroupElement(std::vector<std::int64_t>(dimension(), 0)); }

bool GroupSpec::conforms(const GroupElement& x) const {
  if (x.dimension() != dimension()) return false;
  for (std::size_t j = 0; j < torsion_.size(); ++j) {
    const auto c = x.coords[static_cast<std::size_t>(free_rank_) + j];
    if (c < 0 || c >= torsion_[j]) return false;
  }
  return true;
}

void GroupSpec::require_conforms(const GroupElement& x) const {
  require_same_dimension(*this, x);
  if (!conforms(x)) {
    throw StructuralError("element " + to_string(x) + " is not reduced in " + to_string(*this));
  }
}

GroupElement add(const GroupSpec& g, const GroupElement& x, const GroupElement& y) {
  require_same_dimension(g, x);
  require_same_dimension(g, y);
  std::vector<std::int64_t> c(x.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords[i] + y.coords[i];
  return g.element(std::move(c));
}

GroupElement neg(const GroupSpec& g, const GroupElement& x) {
  require_same_dimension(g, x);
  std::vector<std::int64_t> c(x.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -x.coords[i];
  return g.element(std::move(c));
}

GroupElement sub(const GroupSpec& g, const GroupElement& x, const GroupElement& y) {
  require_same_dimension(g, x);
  require_same_dimension(g, y);
  std::vector<std::int64_t> c(x.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords[i] - y.coords[i];
  return g.element(std::move(c));
}

GroupElement twice(const GroupSpec& g, const GroupElement& x) { return add(g, x, x); }

std::vector<GroupElement> enumerate_elements(const GroupSpec& g) {
  if (!g.is_finite()) {
    throw UnsupportedDomainError("cannot enumerate elements of infinite group " + to_string(g));
  }
  const auto total = g.order();
  const auto& orders = g.torsion_orders();
  std::vector<GroupElement> out;
  out.reserve(total);
  std::vector<std::int64_t> c(orders.size(), 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    out.emplace_back(c);
    // odometer, last coordinate fastest
    for (std::size_t j = orders.size(); j-- > 0;) {
      if (++c[j] < orders[j]) break;
      c[j] = 0;
    }
  }
  return out;
}

std::size_t linear_index(const GroupSpec& g, const GroupElement& x) {
  if (!g.is_finite()) throw UnsupportedDomainError("linear index needs a finite group");
  g.require_conforms(x);
  std::size_t idx = 0;
  const auto& orders = g.torsion_orders();
  for (std::size_t j = 0; j < orders.size(); ++j) {
    idx = idx * static_cast<std::size_t>(orders[j]) + static_cast<std::size_t>(x.coords[j]);
  }
  return idx;
}

CosetIndex2G coset_2g(const GroupSpec& g, const GroupElement& x) {
  g.require_conforms(x);
  CosetIndex2G c;
  c.bits.reserve(g.coset_bit_count());
  const auto r = static_cast<std::size_t>(g.free_rank());
  for (std::size_t i = 0; i < r; ++i) c.bits.push_back(static_cast<std::uint8_t>(reduce(x.coords[i], 2)));
  const auto& orders = g.torsion_orders();
  for (std::size_t j = 0; j < orders.size(); ++j) {
    if (orders[j] % 2 != 0) continue;
    c.bits.push_back(static_cast<std::uint8_t>(x.coords[r + j] % 2));
  }
  return c;
}

std::vector<CosetIndex2G> enumerate_cosets_2g(const GroupSpec& g) {
  const auto nbits = g.coset_bit_count();
  if (nbits >= 20) throw UnsupportedDomainError("too many cosets of 2G to enumerate");
  std::vector<CosetIndex2G> out;
  const std::size_t total = std::size_t{1} << nbits;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    CosetIndex2G c;
    c.bits.resize(nbits);
    for (std::size_t b = 0; b < nbits; ++b) c.bits[b] = static_cast<std::uint8_t>((i >> (nbits - 1 - b)) & 1U);
    out.push_back(std::move(c));
  }
  return out;
}

CosetIndex2G coset_difference(const CosetIndex2G& a, const CosetIndex2G& b) {
  if (a.bits.size() != b.bits.size()) throw StructuralError("coset indices of different groups");
  CosetIndex2G c;
  c.bits.resize(a.bits.size());
  for (std::size_t i = 0; i < a.bits.size(); ++i) c.bits[i] = a.bits[i] ^ b.bits[i];
  return c;
}

}  // namespace feq
