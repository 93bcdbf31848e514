#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "torslat/string_module.hpp"

namespace torslat {

/// An arc on nodes 0..n, travelling up from `b` to `t`. `sides[k]` is 'L'
/// or 'R' for interior node b+1+k, naming the side the arc passes it on.
struct Arc {
  int n = 1;
  int b = 0;
  int t = 1;
  std::string sides;

  static Arc make(int n, int b, int t, std::string sides);

  bool interior(int node) const noexcept { return b < node && node < t; }
  bool in_support(int node) const noexcept { return b <= node && node <= t; }
  /// Side at an interior node.
  char side(int node) const { return sides.at(static_cast<std::size_t>(node - b - 1)); }
  bool passes_left(int node) const { return interior(node) && side(node) == 'L'; }
  bool passes_right(int node) const { return interior(node) && side(node) == 'R'; }

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A set of pairwise compatible arcs on n+1 nodes, kept sorted.
struct ArcDiagram {
  int n = 1;
  std::vector<Arc> arcs;
  friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;
};

Arc sigma(const StringModule& m);
StringModule sigma_inv(const Arc& a);

/// All arcs on n+1 nodes, in the order induced by sigma from the module catalog.
std::vector<Arc> enumerate_arcs(int n);

bool is_subarc(const Arc& beta, const Arc& alpha);
bool is_pred_closed_subarc(const Arc& beta, const Arc& alpha);
bool is_succ_closed_subarc(const Arc& beta, const Arc& alpha);

/// Arcs that are predecessor closed subarcs of alpha and successor closed
/// subarcs of alpha2.
int hom_count_via_arcs(const Arc& alpha, const Arc& alpha2);

/// No arc is a predecessor closed subarc of one and a successor closed
/// subarc of the other. Throws SameArc for equal arcs.
bool compatible(const Arc& alpha, const Arc& alpha2);

bool overlap(const Arc& alpha, const Arc& alpha2);
/// Throws NotOverlapping when the arcs do not overlap.
bool left_of(const Arc& alpha, const Arc& alpha2);

/// Throws InvalidArgument if some pair is incompatible.
ArcDiagram make_diagram(int n, std::vector<Arc> arcs);

inline constexpr std::size_t kDefaultFaceBudget = 1000000;

/// Every set of pairwise compatible arcs (the complex is flag), as sorted
/// index lists into enumerate_arcs(n), in lexicographic order.
std::vector<std::vector<int>> arc_complex(int n, std::size_t budget = kDefaultFaceBudget);

/// Maximal faces by Bron-Kerbosch with pivoting, sorted.
std::vector<std::vector<int>> arc_complex_facets(int n);

std::string to_json(const Arc& a);
std::string to_json(const ArcDiagram& d);

/// Horizontal offset of every arc at every node it passes, as used by the
/// renderer: layout[a][node] for interior nodes, 0 at endpoints. Positive
/// is to the right of the node column.
std::vector<std::vector<double>> arc_layout(const ArcDiagram& d);

std::string render_svg(const ArcDiagram& d);
/// Several diagrams side by side.
std::string render_svg_gallery(const std::vector<ArcDiagram>& diagrams);

}  // namespace torslat
