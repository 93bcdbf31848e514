#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "torslat/bitset.hpp"

namespace torslat {

using ElementId = int;
using Cover = std::pair<ElementId, ElementId>;  // (lower, upper)
using Face = std::vector<ElementId>;             // sorted

struct JoinRepresentation {
  ElementId target = 0;
  std::vector<ElementId> joinands;  // sorted
};

/// A finite lattice given by its Hasse diagram. Element ids are the indices
/// 0..size()-1; names are display strings only. Construction verifies
/// acyclicity, Hasse-minimality and the lattice property, and precomputes
/// the up/down reachability rows used by every query.
class FiniteLattice {
public:
  static FiniteLattice from_covers(std::vector<std::string> names, const std::vector<Cover>& covers,
                                   std::map<Cover, int> labels = {});
  static FiniteLattice from_covers(std::size_t size, const std::vector<Cover>& covers,
                                   std::map<Cover, int> labels = {});

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(ElementId e) const { return names_.at(static_cast<std::size_t>(e)); }
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  const std::map<Cover, int>& labels() const noexcept { return labels_; }
  std::optional<int> label(ElementId lower, ElementId upper) const;

  ElementId bottom() const noexcept { return bottom_; }
  ElementId top() const noexcept { return top_; }

  bool leq(ElementId a, ElementId b) const { return up_[idx(a)].test(idx(b)); }
  bool comparable(ElementId a, ElementId b) const { return leq(a, b) || leq(b, a); }

  /// Elements x with a <= x, as a bitset over ids.
  const Bitset& up_set(ElementId a) const { return up_[idx(a)]; }
  const Bitset& down_set(ElementId a) const { return down_[idx(a)]; }

  ElementId join(ElementId a, ElementId b) const;
  ElementId meet(ElementId a, ElementId b) const;
  // join of the empty set is bottom; meet of the empty set is top.
  ElementId join(const std::vector<ElementId>& elements) const;
  ElementId meet(const std::vector<ElementId>& elements) const;

  const std::vector<ElementId>& lower_covers(ElementId w) const { return lower_[idx(w)]; }
  const std::vector<ElementId>& upper_covers(ElementId w) const { return upper_[idx(w)]; }

  std::vector<ElementId> join_irreducibles() const;
  bool is_join_irreducible(ElementId w) const { return lower_covers(w).size() == 1; }

  /// Length of the longest chain from bottom to w.
  int rank(ElementId w) const { return rank_[idx(w)]; }

private:
  FiniteLattice() = default;
  static std::size_t idx(ElementId e) { return static_cast<std::size_t>(e); }
  // Least element of a set of common bounds, if one exists.
  std::optional<ElementId> least_of(const Bitset& candidates) const;
  std::optional<ElementId> greatest_of(const Bitset& candidates) const;

  std::vector<std::string> names_;
  std::vector<Cover> covers_;
  std::map<Cover, int> labels_;
  std::vector<std::vector<ElementId>> lower_;
  std::vector<std::vector<ElementId>> upper_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<int> topo_pos_;
  std::vector<int> rank_;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
};

/// Canonical join representation of w, or nullopt when none exists.
///
/// For each lower cover m of w the candidate joinand is the unique minimal
/// element of {x <= w : x v m = w}. The candidate set is then checked for
/// join, irredundance, and lowness: for every joinand a, the join of all
/// x <= w with a not below x must stay strictly below w. The last test is
/// equivalent to A << B for every join representation B of w.
std::optional<JoinRepresentation> canonical_join_representation(const FiniteLattice& lattice,
                                                                ElementId w);

/// All faces of the canonical join complex, sorted. Throws Internal if the
/// collection is not closed under subsets.
std::vector<Face> canonical_join_complex(const FiniteLattice& lattice);

/// True iff every element has |CJR| equal to its number of lower covers.
/// Throws MissingCJR if some element has no canonical join representation.
bool count_check_covers_vs_joinands(const FiniteLattice& lattice);

/// Cover-preserving bijection from a to b (indexed by ids of a), if any.
std::optional<std::vector<ElementId>> find_isomorphism(const FiniteLattice& a,
                                                       const FiniteLattice& b);

/// True iff the two face collections are equal after relabelling vertices
/// through `vertex_map` (vertex_map[v] is the image of v).
bool faces_correspond(const std::vector<Face>& from, const std::vector<Face>& to,
                      const std::vector<int>& vertex_map);

/// DOT digraph with edges lower -> upper. `label_text` renders cover labels
/// (defaults to the integer label).
std::string to_dot(const FiniteLattice& lattice, bool with_labels,
                   const std::function<std::string(int)>& label_text = {});
std::string to_json(const FiniteLattice& lattice);

}  // namespace torslat
