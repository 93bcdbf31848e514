#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "torslat/torsion.hpp"
#include "torslat/weak_order.hpp"

namespace torslat {

/// The inversion set {inv_pair(M) : M in t}.
InversionSet inversion_set(const ModuleCatalog& cat, const ModuleSet& t);

/// Permutation whose inversion set is that of t. Throws Internal when the
/// set is not realizable.
Permutation phi(const ModuleCatalog& cat, const TorsionClass& t);
/// Join of delta_inv(sigma(M)) over the bricks M of the canonical joinands.
Permutation phi_via_cjr(const TorsLattice& tors, ElementId id);

struct IsoReport {
  int n = 0;
  std::pair<std::size_t, std::size_t> sizes;
  bool bijective = false;
  bool cover_preserving = false;
  bool inversion_increment = false;
  bool phi_routes_agree = false;
  bool cjc_isomorphic = false;
  std::vector<std::string> failures;

  bool ok() const noexcept {
    return bijective && cover_preserving && inversion_increment && phi_routes_agree && cjc_isomorphic &&
           failures.empty();
  }
};

IsoReport verify_isomorphism(int n, std::size_t budget = kDefaultElementBudget);
std::string to_json(const IsoReport& report);

}  // namespace torslat
