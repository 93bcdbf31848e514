#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torslat/bitset.hpp"
#include "torslat/lattice.hpp"
#include "torslat/string_module.hpp"

namespace torslat {

using ModuleId = int;
/// A set of indecomposables, indexed by catalog id.
using ModuleSet = Bitset;
/// A ModuleSet closed under indecomposable factors and gluing.
using TorsionClass = ModuleSet;

/// The indecomposables of RA_n in canonical order, with precomputed factor,
/// submodule, gluing, Hom and duality tables.
class ModuleCatalog {
public:
  explicit ModuleCatalog(int n);

  int rank() const noexcept { return n_; }
  std::size_t size() const noexcept { return modules_.size(); }
  const std::vector<StringModule>& modules() const noexcept { return modules_; }
  const StringModule& module(ModuleId id) const { return modules_.at(static_cast<std::size_t>(id)); }
  ModuleId id_of(const StringModule& m) const;

  /// Indecomposable factors of id, including id itself.
  const ModuleSet& factors(ModuleId id) const { return factors_[idx(id)]; }
  const ModuleSet& submodules(ModuleId id) const { return submodules_[idx(id)]; }
  /// Gluing of sub and quot; nullopt when the supports are not adjacent.
  std::optional<ModuleId> glue(ModuleId sub, ModuleId quot) const;
  int hom(ModuleId from, ModuleId to) const { return hom_[idx(from) * size() + idx(to)]; }
  ModuleId dual(ModuleId id) const { return dual_[idx(id)]; }

  ModuleSet empty_set() const { return ModuleSet(size()); }
  ModuleSet full_set() const;
  ModuleSet set_of(const std::vector<StringModule>& ms) const;
  ModuleSet dual_set(const ModuleSet& s) const;

private:
  static std::size_t idx(ModuleId id) { return static_cast<std::size_t>(id); }

  int n_;
  std::vector<StringModule> modules_;
  std::vector<ModuleSet> factors_;
  std::vector<ModuleSet> submodules_;
  std::vector<int> glue_;  // size^2, -1 when undefined
  std::vector<int> hom_;   // size^2
  std::vector<ModuleId> dual_;
};

TorsionClass torsion_closure(const ModuleCatalog& cat, const ModuleSet& seeds);
/// Indecomposables admitting a filtration by seeds: closure under gluing only.
ModuleSet filt_closure(const ModuleCatalog& cat, const ModuleSet& seeds);
TorsionClass filt_gen(const ModuleCatalog& cat, ModuleId m);
ModuleSet perp(const ModuleCatalog& cat, const TorsionClass& t);

std::vector<ModuleId> minimal_extending(const ModuleCatalog& cat, const TorsionClass& t);

struct UpperCover {
  TorsionClass upper;
  ModuleId brick;
};
std::vector<UpperCover> upper_covers(const ModuleCatalog& cat, const TorsionClass& t);

bool is_torsion_class(const ModuleCatalog& cat, const ModuleSet& s);

/// Subset scan over all 2^|ind| sets; only for n <= 3.
std::vector<TorsionClass> enumerate_torsion_classes_bruteforce(const ModuleCatalog& cat);

/// Property P2 over indecomposable middle terms: whenever X has m as a
/// submodule and every summand of X/m lies in t, X lies in t.
bool p2_holds(const ModuleCatalog& cat, const ModuleSet& t, ModuleId m);
/// p2_holds, with the precondition that m is minimal extending for t.
bool check_p2(const ModuleCatalog& cat, const TorsionClass& t, ModuleId m);
/// P1'-P3' for m against perp(torsion_closure(t + m)). P2' runs p2_holds on
/// the dual torsion class.
bool min_coextending_check(const ModuleCatalog& cat, const TorsionClass& t, ModuleId m);

/// tors RA_n as a labelled lattice. Element ids are BFS discovery order
/// from the zero class; each cover carries the catalog id of its brick.
struct TorsLattice {
  ModuleCatalog catalog;
  std::vector<TorsionClass> classes;
  FiniteLattice lattice;

  std::optional<ElementId> find(const TorsionClass& t) const;
  /// Brick labelling the unique lower cover of a join-irreducible class.
  ModuleId brick_of_join_irreducible(ElementId j) const;
};

inline constexpr std::size_t kDefaultElementBudget = 100000;

TorsLattice build_tors_lattice(int n, std::size_t budget = kDefaultElementBudget);

std::string class_text(const ModuleCatalog& cat, const ModuleSet& s);
/// {"n":..,"elements":[[module,..],..],"covers":[[lo,hi(,brick)],..]}
std::string to_json(const TorsLattice& tors, bool with_labels);
std::string to_dot(const TorsLattice& tors, bool with_labels);

}  // namespace torslat
