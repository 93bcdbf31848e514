#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "torslat/arc.hpp"
#include "torslat/lattice.hpp"
#include "torslat/string_module.hpp"
#include "torslat/torsion.hpp"

namespace testing {

inline torslat::StringModule mod(int n, const std::string& text) { return torslat::parse_module(n, text); }

inline std::vector<std::string> texts(const std::vector<torslat::StringModule>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(torslat::to_text(m));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> texts(const torslat::ModuleCatalog& cat, const torslat::ModuleSet& s) {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(torslat::to_text(cat.module(static_cast<int>(i)))); });
  std::sort(out.begin(), out.end());
  return out;
}

inline torslat::ModuleSet set_of(const torslat::ModuleCatalog& cat, const std::vector<std::string>& ms) {
  auto s = cat.empty_set();
  for (const auto& t : ms) s.set(static_cast<std::size_t>(cat.id_of(mod(cat.rank(), t))));
  return s;
}

// Small named lattices.
inline torslat::FiniteLattice pentagon() {
  // 0 < x < z < 1, 0 < y < 1
  return torslat::FiniteLattice::from_covers({"0", "x", "y", "z", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}});
}

inline torslat::FiniteLattice diamond() {
  return torslat::FiniteLattice::from_covers({"0", "a", "b", "c", "1"},
                                             {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

// 0 < a < b, c < 1
inline torslat::FiniteLattice kite_with_tail() {
  return torslat::FiniteLattice::from_covers({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

inline torslat::FiniteLattice boolean_lattice(int k) {
  std::vector<torslat::Cover> covers;
  for (int s = 0; s < (1 << k); ++s)
    for (int b = 0; b < k; ++b)
      if (!(s & (1 << b))) covers.push_back({s, s | (1 << b)});
  return torslat::FiniteLattice::from_covers(static_cast<std::size_t>(1 << k), covers);
}

inline torslat::FiniteLattice chain(int k) {
  std::vector<torslat::Cover> covers;
  for (int i = 0; i + 1 < k; ++i) covers.push_back({i, i + 1});
  return torslat::FiniteLattice::from_covers(static_cast<std::size_t>(k), covers);
}

}  // namespace testing
