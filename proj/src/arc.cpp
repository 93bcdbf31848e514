#include "torslat/arc.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "torslat/bitset.hpp"
#include "torslat/error.hpp"

namespace torslat {

Arc Arc::make(int n, int b, int t, std::string sides) {
  if (n < 1) throw Error(ErrorCode::InvalidRank, "rank must be at least 1");
  if (b < 0 || b >= t || t > n)
    throw Error(ErrorCode::InvalidArgument, "arc endpoints must satisfy 0 <= b < t <= n");
  if (static_cast<int>(sides.size()) != t - b - 1)
    throw Error(ErrorCode::InvalidArgument, "arc needs one side per interior node");
  for (char c : sides)
    if (c != 'L' && c != 'R') throw Error(ErrorCode::InvalidArgument, "arc sides must be L or R");
  return {n, b, t, std::move(sides)};
}

Arc sigma(const StringModule& m) { return {m.n, m.p - 1, m.q, m.word}; }

StringModule sigma_inv(const Arc& a) { return {a.n, a.b + 1, a.t, a.sides}; }

std::vector<Arc> enumerate_arcs(int n) {
  std::vector<Arc> out;
  for (const auto& m : enumerate_indecomposables(n)) out.push_back(sigma(m));
  return out;
}

bool is_subarc(const Arc& beta, const Arc& alpha) {
  if (beta.n != alpha.n) throw Error(ErrorCode::RankMismatch, "arcs on different node counts");
  if (beta.b < alpha.b || beta.t > alpha.t) return false;
  for (int node = beta.b + 1; node < beta.t; ++node)
    if (alpha.side(node) != beta.side(node)) return false;
  return true;
}

bool is_pred_closed_subarc(const Arc& beta, const Arc& alpha) {
  return is_subarc(beta, alpha) && !alpha.passes_right(beta.b) && !alpha.passes_left(beta.t);
}

bool is_succ_closed_subarc(const Arc& beta, const Arc& alpha) {
  return is_subarc(beta, alpha) && !alpha.passes_left(beta.b) && !alpha.passes_right(beta.t);
}

int hom_count_via_arcs(const Arc& alpha, const Arc& alpha2) {
  if (alpha.n != alpha2.n) throw Error(ErrorCode::RankMismatch, "arcs on different node counts");
  const int lo = std::max(alpha.b, alpha2.b);
  const int hi = std::min(alpha.t, alpha2.t);
  int count = 0;
  for (int s = lo; s <= hi; ++s) {
    for (int t = s + 1; t <= hi; ++t) {
      const Arc beta{alpha.n, s, t,
                     alpha.sides.substr(static_cast<std::size_t>(s - alpha.b), static_cast<std::size_t>(t - s - 1))};
      if (is_pred_closed_subarc(beta, alpha) && is_succ_closed_subarc(beta, alpha2)) ++count;
    }
  }
  return count;
}

bool compatible(const Arc& alpha, const Arc& alpha2) {
  if (alpha == alpha2) throw Error(ErrorCode::SameArc, "compatibility needs two distinct arcs");
  return hom_count_via_arcs(alpha, alpha2) == 0 && hom_count_via_arcs(alpha2, alpha) == 0;
}

bool overlap(const Arc& alpha, const Arc& alpha2) {
  for (int node = 0; node <= alpha.n; ++node) {
    if (alpha.in_support(node) && alpha2.interior(node)) return true;
    if (alpha2.in_support(node) && alpha.interior(node)) return true;
  }
  return false;
}

bool left_of(const Arc& alpha, const Arc& alpha2) {
  if (!overlap(alpha, alpha2)) throw Error(ErrorCode::NotOverlapping, "arcs do not overlap");
  // (R(alpha) + endpoints of alpha), restricted to alpha2's interior, lies in R(alpha2).
  for (int node = alpha.b; node <= alpha.t; ++node) {
    const bool candidate = node == alpha.b || node == alpha.t || alpha.passes_right(node);
    if (candidate && alpha2.interior(node) && !alpha2.passes_right(node)) return false;
  }
  // Endpoints of alpha2 inside alpha's interior lie in L(alpha).
  for (int node : {alpha2.b, alpha2.t})
    if (alpha.interior(node) && !alpha.passes_left(node)) return false;
  return true;
}

ArcDiagram make_diagram(int n, std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  for (const auto& a : arcs)
    if (a.n != n) throw Error(ErrorCode::RankMismatch, "arc on a different node count");
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (!compatible(arcs[i], arcs[j]))
        throw Error(ErrorCode::InvalidArgument, "arcs " + to_json(arcs[i]) + " and " +
                                                    to_json(arcs[j]) + " are not compatible");
  return {n, std::move(arcs)};
}

namespace {

std::vector<Bitset> compatibility_graph(const std::vector<Arc>& arcs) {
  std::vector<Bitset> adj(arcs.size(), Bitset(arcs.size()));
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (compatible(arcs[i], arcs[j])) {
        adj[i].set(j);
        adj[j].set(i);
      }
  return adj;
}

}  // namespace

std::vector<std::vector<int>> arc_complex(int n, std::size_t budget) {
  const auto arcs = enumerate_arcs(n);
  const auto adj = compatibility_graph(arcs);
  std::vector<std::vector<int>> faces;
  std::vector<int> face;

  // Pre-order DFS over increasing indices yields faces in lexicographic order.
  std::function<void(const Bitset&)> grow = [&](const Bitset& candidates) {
    if (faces.size() >= budget)
      throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(budget) + " faces");
    faces.push_back(face);
    candidates.for_each([&](std::size_t v) {
      Bitset next = candidates & adj[v];
      Bitset above(arcs.size());
      next.for_each([&](std::size_t u) {
        if (u > v) above.set(u);
      });
      face.push_back(static_cast<int>(v));
      grow(above);
      face.pop_back();
    });
  };
  Bitset all(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) all.set(i);
  grow(all);
  return faces;
}

std::vector<std::vector<int>> arc_complex_facets(int n) {
  const auto arcs = enumerate_arcs(n);
  const auto adj = compatibility_graph(arcs);
  std::vector<std::vector<int>> facets;
  std::vector<int> clique;

  std::function<void(Bitset, Bitset)> expand = [&](Bitset p, Bitset x) {
    if (p.none() && x.none()) {
      facets.push_back(clique);
      return;
    }
    // Pivot on the vertex of P u X with the most neighbours in P.
    std::size_t pivot = 0, best = 0;
    bool have_pivot = false;
    (p | x).for_each([&](std::size_t u) {
      const std::size_t c = (p & adj[u]).count();
      if (!have_pivot || c > best) {
        pivot = u;
        best = c;
        have_pivot = true;
      }
    });
    for (int v : p.to_indices()) {
      if (adj[pivot].test(static_cast<std::size_t>(v))) continue;
      clique.push_back(v);
      expand(p & adj[static_cast<std::size_t>(v)], x & adj[static_cast<std::size_t>(v)]);
      clique.pop_back();
      p.reset(static_cast<std::size_t>(v));
      x.set(static_cast<std::size_t>(v));
    }
  };
  Bitset all(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) all.set(i);
  expand(all, Bitset(arcs.size()));
  for (auto& f : facets) std::sort(f.begin(), f.end());
  std::sort(facets.begin(), facets.end());
  return facets;
}

std::string to_json(const Arc& a) {
  nlohmann::ordered_json j;
  j["b"] = a.b;
  j["t"] = a.t;
  j["sides"] = nlohmann::ordered_json::object();
  for (int node = a.b + 1; node < a.t; ++node) j["sides"][std::to_string(node)] = std::string(1, a.side(node));
  return j.dump();
}

std::string to_json(const ArcDiagram& d) {
  nlohmann::ordered_json j;
  j["n"] = d.n;
  j["arcs"] = nlohmann::ordered_json::array();
  for (const auto& a : d.arcs) j["arcs"].push_back(nlohmann::ordered_json::parse(to_json(a)));
  return j.dump();
}

namespace {

constexpr double kNodeGap = 60.0;   // vertical distance between nodes
constexpr double kBaseOffset = 12.0;
constexpr double kNestStep = 10.0;
constexpr double kMargin = 24.0;

std::string num(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << v;
  return out.str();
}

double max_offset(const std::vector<std::vector<double>>& layout) {
  double widest = kBaseOffset;
  for (const auto& row : layout)
    for (double x : row) widest = std::max(widest, std::abs(x));
  return widest;
}

// Body of one diagram with its node column at x = cx.
void draw_diagram(std::ostringstream& out, const ArcDiagram& d, double cx) {
  const auto layout = arc_layout(d);
  auto y_of = [&](int node) { return kMargin + (d.n - node) * kNodeGap; };

  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const Arc& a = d.arcs[i];
    out << "  <path d=\"M " << num(cx) << " " << num(y_of(a.b));
    for (int node = a.b; node < a.t; ++node) {
      const double x0 = cx + layout[i][static_cast<std::size_t>(node)];
      const double x1 = cx + layout[i][static_cast<std::size_t>(node + 1)];
      const double ymid = y_of(node) - kNodeGap / 2;
      out << " C " << num(x0) << " " << num(ymid) << " " << num(x1) << " " << num(ymid) << " "
          << num(x1) << " " << num(y_of(node + 1));
    }
    out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (int node = 0; node <= d.n; ++node) {
    out << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(y_of(node)) << "\" r=\"4\" fill=\"black\"/>\n";
    out << "  <text x=\"" << num(cx + 8) << "\" y=\"" << num(y_of(node) + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << node << "</text>\n";
  }
}

}  // namespace

std::vector<std::vector<double>> arc_layout(const ArcDiagram& d) {
  std::vector<std::vector<double>> layout(d.arcs.size(),
                                          std::vector<double>(static_cast<std::size_t>(d.n) + 1, 0.0));
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const Arc& a = d.arcs[i];
    for (int node = a.b + 1; node < a.t; ++node) {
      const char s = a.side(node);
      int depth = 0;  // arcs squeezed between this one and the node
      for (std::size_t j = 0; j < d.arcs.size(); ++j) {
        const Arc& other = d.arcs[j];
        if (j == i || !other.interior(node) || other.side(node) != s) continue;
        if (s == 'L' ? left_of(a, other) : left_of(other, a)) ++depth;
      }
      const double magnitude = kBaseOffset + kNestStep * depth;
      layout[i][static_cast<std::size_t>(node)] = s == 'L' ? -magnitude : magnitude;
    }
  }
  return layout;
}

std::string render_svg(const ArcDiagram& d) { return render_svg_gallery({d}); }

std::string render_svg_gallery(const std::vector<ArcDiagram>& diagrams) {
  int n = 1;
  double widest = kBaseOffset;
  for (const auto& d : diagrams) {
    n = std::max(n, d.n);
    widest = std::max(widest, max_offset(arc_layout(d)));
  }
  const double panel = 2 * (widest + kMargin);
  const double width = std::max(panel, panel * static_cast<double>(diagrams.size()));
  const double height = 2 * kMargin + n * kNodeGap;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height)
      << "\">\n";
  for (std::size_t k = 0; k < diagrams.size(); ++k) {
    out << " <g>\n";
    draw_diagram(out, diagrams[k], panel * static_cast<double>(k) + panel / 2);
    out << " </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace torslat
