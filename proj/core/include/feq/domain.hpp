#pragma once

#include <vector>

#include "feq/group.hpp"

namespace feq {

inline constexpr int kDefaultWindow = 10;

/// Evaluation set for brute-force checks. Finite groups are enumerated in
/// full; otherwise each free coordinate ranges over [-window, window] and
/// torsion coordinates over all residues.
struct Domain {
  GroupSpec group;
  int window = kDefaultWindow;

  std::vector<GroupElement> points() const;
};

}  // namespace feq
