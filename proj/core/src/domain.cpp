#include "feq/domain.hpp"

#include "feq/errors.hpp"

namespace feq {

std::vector<GroupElement> Domain::points() const {
  if (group.is_finite()) return enumerate_elements(group);
  if (window < 0) throw UnsupportedDomainError("window half-width must be non-negative");

  const auto r = static_cast<std::size_t>(group.free_rank());
  const auto& orders = group.torsion_orders();
  std::vector<std::int64_t> lo(group.dimension());
  std::vector<std::int64_t> hi(group.dimension());
  for (std::size_t i = 0; i < r; ++i) {
    lo[i] = -window;
    hi[i] = window;
  }
  for (std::size_t j = 0; j < orders.size(); ++j) {
    lo[r + j] = 0;
    hi[r + j] = orders[j] - 1;
  }

  std::vector<GroupElement> out;
  std::vector<std::int64_t> c = lo;
  while (true) {
    out.emplace_back(c);
    std::size_t j = c.size();
    while (j-- > 0) {
      if (++c[j] <= hi[j]) break;
      c[j] = lo[j];
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace feq
