#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torslat/arc.hpp"
#include "torslat/lattice.hpp"

namespace torslat {

/// A permutation of {0,..,n} in one-line notation.
struct Permutation {
  std::vector<int> word;

  static Permutation identity(int n);
  /// "210", or comma separated "2,1,0" for n >= 10. Throws InvalidArgument.
  static Permutation parse(const std::string& text);

  int n() const noexcept { return static_cast<int>(word.size()) - 1; }
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Inversions as value pairs (p, q), p < q, with q appearing before p.
struct InversionSet {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // sorted

  bool contains(int p, int q) const;
  friend bool operator==(const InversionSet&, const InversionSet&) = default;
};

InversionSet inversions(const Permutation& w);
InversionSet make_inversion_set(int n, std::vector<std::pair<int, int>> pairs);
InversionSet transitive_closure(const InversionSet& s);
/// Both the set and its complement among all p < q pairs are transitively closed.
bool is_realizable(const InversionSet& s);

std::optional<Permutation> perm_from_inversions(const InversionSet& s);

std::vector<Permutation> weak_covers_below(const Permutation& w);
int descent_count(const Permutation& w);

/// Join in the weak order; the empty join is the identity on {0,..,n}.
Permutation weak_join(int n, const std::vector<Permutation>& perms);

/// One arc per descent. Values left of the descent are passed on the right,
/// values right of it on the left.
ArcDiagram delta(const Permutation& w);
/// The join-irreducible permutation of a single arc.
Permutation delta_inv(const Arc& a);
Permutation delta_inv(const ArcDiagram& d);

inline constexpr std::size_t kDefaultPermutationBudget = 100000;

struct WeakOrder {
  int n = 0;
  std::vector<Permutation> perms;  // lexicographic, id = index
  FiniteLattice lattice;

  ElementId id_of(const Permutation& w) const;
};

WeakOrder build_weak_order(int n, std::size_t budget = kDefaultPermutationBudget);

std::string to_json(const Permutation& w);

}  // namespace torslat
