#include "torslat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

#include "json.hpp"

#include "torslat/error.hpp"

namespace torslat {

namespace {

std::string pair_text(ElementId a, ElementId b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

FiniteLattice FiniteLattice::from_covers(std::size_t size, const std::vector<Cover>& covers,
                                         std::map<Cover, int> labels) {
  std::vector<std::string> names;
  names.reserve(size);
  for (std::size_t i = 0; i < size; ++i) names.push_back(std::to_string(i));
  return from_covers(std::move(names), covers, std::move(labels));
}

FiniteLattice FiniteLattice::from_covers(std::vector<std::string> names,
                                         const std::vector<Cover>& covers,
                                         std::map<Cover, int> labels) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "lattice must have at least one element");

  FiniteLattice L;
  L.names_ = std::move(names);
  L.lower_.assign(n, {});
  L.upper_.assign(n, {});

  std::set<Cover> seen;
  for (const auto& [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || static_cast<std::size_t>(lo) >= n || static_cast<std::size_t>(hi) >= n)
      throw Error(ErrorCode::InvalidArgument, "cover " + pair_text(lo, hi) + " references unknown id");
    if (lo == hi) throw Error(ErrorCode::CycleDetected, "self-cover at " + std::to_string(lo));
    if (!seen.insert({lo, hi}).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate cover " + pair_text(lo, hi));
    L.lower_[idx(hi)].push_back(lo);
    L.upper_[idx(lo)].push_back(hi);
  }
  for (auto& v : L.lower_) std::sort(v.begin(), v.end());
  for (auto& v : L.upper_) std::sort(v.begin(), v.end());
  L.covers_.assign(seen.begin(), seen.end());

  for (const auto& [cover, label] : labels) {
    if (!seen.count(cover))
      throw Error(ErrorCode::InvalidArgument,
                  "label on non-cover " + pair_text(cover.first, cover.second));
  }
  L.labels_ = std::move(labels);

  // Kahn's algorithm; ties broken by id so the order is deterministic.
  std::vector<int> indegree(n, 0);
  for (std::size_t v = 0; v < n; ++v) indegree[v] = static_cast<int>(L.lower_[v].size());
  std::set<ElementId> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.insert(static_cast<ElementId>(v));
  std::vector<ElementId> order;
  order.reserve(n);
  while (!ready.empty()) {
    const ElementId v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (ElementId u : L.upper_[idx(v)])
      if (--indegree[idx(u)] == 0) ready.insert(u);
  }
  if (order.size() != n) throw Error(ErrorCode::CycleDetected, "cover relation contains a cycle");

  L.topo_pos_.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) L.topo_pos_[idx(order[k])] = static_cast<int>(k);

  L.up_.assign(n, Bitset(n));
  L.down_.assign(n, Bitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Bitset& row = L.up_[idx(*it)];
    row.set(idx(*it));
    for (ElementId u : L.upper_[idx(*it)]) row |= L.up_[idx(u)];
  }
  for (ElementId v : order) {
    Bitset& row = L.down_[idx(v)];
    row.set(idx(v));
    for (ElementId d : L.lower_[idx(v)]) row |= L.down_[idx(d)];
  }

  for (const auto& [lo, hi] : L.covers_) {
    for (ElementId mid : L.upper_[idx(lo)]) {
      if (mid != hi && L.leq(mid, hi))
        throw Error(ErrorCode::NonHasseEdge,
                    "cover " + pair_text(lo, hi) + " is implied through " + std::to_string(mid));
    }
  }

  std::vector<ElementId> minimal, maximal;
  for (std::size_t v = 0; v < n; ++v) {
    if (L.lower_[v].empty()) minimal.push_back(static_cast<ElementId>(v));
    if (L.upper_[v].empty()) maximal.push_back(static_cast<ElementId>(v));
  }
  if (minimal.size() != 1)
    throw Error(ErrorCode::NotALattice,
                "no unique lower bound for " + pair_text(minimal[0], minimal[1]));
  if (maximal.size() != 1)
    throw Error(ErrorCode::NotALattice,
                "no unique upper bound for " + pair_text(maximal[0], maximal[1]));
  L.bottom_ = minimal.front();
  L.top_ = maximal.front();

  // A finite poset with a bottom and all pairwise joins is a lattice.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!L.least_of(L.up_[a] & L.up_[b]))
        throw Error(ErrorCode::NotALattice,
                    "no unique least upper bound for " +
                        pair_text(static_cast<ElementId>(a), static_cast<ElementId>(b)));
    }
  }

  L.rank_.assign(n, 0);
  for (ElementId v : order)
    for (ElementId d : L.lower_[idx(v)])
      L.rank_[idx(v)] = std::max(L.rank_[idx(v)], L.rank_[idx(d)] + 1);

  return L;
}

std::optional<int> FiniteLattice::label(ElementId lower, ElementId upper) const {
  auto it = labels_.find({lower, upper});
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

std::optional<ElementId> FiniteLattice::least_of(const Bitset& candidates) const {
  std::optional<ElementId> best;
  candidates.for_each([&](std::size_t i) {
    if (!best || topo_pos_[i] < topo_pos_[idx(*best)]) best = static_cast<ElementId>(i);
  });
  if (!best || !candidates.is_subset_of(up_[idx(*best)])) return std::nullopt;
  return best;
}

std::optional<ElementId> FiniteLattice::greatest_of(const Bitset& candidates) const {
  std::optional<ElementId> best;
  candidates.for_each([&](std::size_t i) {
    if (!best || topo_pos_[i] > topo_pos_[idx(*best)]) best = static_cast<ElementId>(i);
  });
  if (!best || !candidates.is_subset_of(down_[idx(*best)])) return std::nullopt;
  return best;
}

ElementId FiniteLattice::join(ElementId a, ElementId b) const {
  auto j = least_of(up_[idx(a)] & up_[idx(b)]);
  if (!j) throw Error(ErrorCode::Internal, "join missing for " + pair_text(a, b));
  return *j;
}

ElementId FiniteLattice::meet(ElementId a, ElementId b) const {
  auto m = greatest_of(down_[idx(a)] & down_[idx(b)]);
  if (!m) throw Error(ErrorCode::Internal, "meet missing for " + pair_text(a, b));
  return *m;
}

ElementId FiniteLattice::join(const std::vector<ElementId>& elements) const {
  ElementId acc = bottom_;
  for (ElementId e : elements) acc = join(acc, e);
  return acc;
}

ElementId FiniteLattice::meet(const std::vector<ElementId>& elements) const {
  ElementId acc = top_;
  for (ElementId e : elements) acc = meet(acc, e);
  return acc;
}

std::vector<ElementId> FiniteLattice::join_irreducibles() const {
  std::vector<ElementId> out;
  for (std::size_t v = 0; v < size(); ++v)
    if (lower_[v].size() == 1) out.push_back(static_cast<ElementId>(v));
  return out;
}

std::optional<JoinRepresentation> canonical_join_representation(const FiniteLattice& L,
                                                                ElementId w) {
  JoinRepresentation rep{w, {}};
  const Bitset& below = L.down_set(w);

  for (ElementId m : L.lower_covers(w)) {
    Bitset k(L.size());
    below.for_each([&](std::size_t x) {
      if (L.join(static_cast<ElementId>(x), m) == w) k.set(x);
    });
    std::vector<ElementId> minimal;
    k.for_each([&](std::size_t x) {
      if ((L.down_set(static_cast<ElementId>(x)) & k).count() == 1)
        minimal.push_back(static_cast<ElementId>(x));
    });
    if (minimal.size() != 1) return std::nullopt;
    rep.joinands.push_back(minimal.front());
  }
  std::sort(rep.joinands.begin(), rep.joinands.end());
  rep.joinands.erase(std::unique(rep.joinands.begin(), rep.joinands.end()), rep.joinands.end());

  if (L.join(rep.joinands) != w) return std::nullopt;

  for (std::size_t i = 0; i < rep.joinands.size(); ++i) {
    std::vector<ElementId> rest = rep.joinands;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (L.join(rest) == w) return std::nullopt;
  }

  // Lowness over every join representation drawn from the ideal below w.
  for (ElementId a : rep.joinands) {
    std::vector<ElementId> avoiding;
    below.for_each([&](std::size_t x) {
      if (!L.leq(a, static_cast<ElementId>(x))) avoiding.push_back(static_cast<ElementId>(x));
    });
    if (L.join(avoiding) == w) return std::nullopt;
  }
  return rep;
}

std::vector<Face> canonical_join_complex(const FiniteLattice& L) {
  std::set<Face> faces;
  for (std::size_t w = 0; w < L.size(); ++w) {
    if (auto rep = canonical_join_representation(L, static_cast<ElementId>(w)))
      faces.insert(rep->joinands);
  }
  for (const Face& f : faces) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face sub = f;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
      if (!faces.count(sub))
        throw Error(ErrorCode::Internal, "canonical join complex is not closed under subsets");
    }
  }
  return {faces.begin(), faces.end()};
}

bool count_check_covers_vs_joinands(const FiniteLattice& L) {
  bool ok = true;
  for (std::size_t w = 0; w < L.size(); ++w) {
    auto rep = canonical_join_representation(L, static_cast<ElementId>(w));
    if (!rep)
      throw Error(ErrorCode::MissingCJR, "element " + L.name(static_cast<ElementId>(w)) +
                                             " has no canonical join representation");
    if (rep->joinands.size() != L.lower_covers(static_cast<ElementId>(w)).size()) ok = false;
  }
  return ok;
}

namespace {

using Signature = std::tuple<int, std::size_t, std::size_t, int>;

std::vector<Signature> signatures(const FiniteLattice& L) {
  // Co-rank: longest chain from the element up to top.
  std::vector<int> corank(L.size(), 0);
  std::vector<ElementId> by_rank(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) by_rank[i] = static_cast<ElementId>(i);
  std::sort(by_rank.begin(), by_rank.end(),
            [&](ElementId x, ElementId y) { return L.rank(x) > L.rank(y); });
  for (ElementId v : by_rank)
    for (ElementId u : L.upper_covers(v))
      corank[static_cast<std::size_t>(v)] =
          std::max(corank[static_cast<std::size_t>(v)], corank[static_cast<std::size_t>(u)] + 1);

  std::vector<Signature> out(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) {
    const auto e = static_cast<ElementId>(i);
    out[i] = {L.rank(e), L.lower_covers(e).size(), L.upper_covers(e).size(), corank[i]};
  }
  return out;
}

}  // namespace

std::optional<std::vector<ElementId>> find_isomorphism(const FiniteLattice& a,
                                                       const FiniteLattice& b) {
  if (a.size() != b.size() || a.covers().size() != b.covers().size()) return std::nullopt;
  const auto sig_a = signatures(a);
  const auto sig_b = signatures(b);
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Visit a in rank order so every lower cover is mapped before its upper cover.
  std::vector<ElementId> order(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) order[i] = static_cast<ElementId>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId x, ElementId y) { return a.rank(x) < a.rank(y); });

  std::vector<ElementId> image(a.size(), -1);
  std::vector<bool> used(b.size(), false);

  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    const ElementId x = order[k];
    const auto& lower_x = a.lower_covers(x);

    std::vector<ElementId> mapped_lower;
    for (ElementId c : lower_x) mapped_lower.push_back(image[static_cast<std::size_t>(c)]);
    std::sort(mapped_lower.begin(), mapped_lower.end());

    std::vector<ElementId> candidates;
    if (lower_x.empty())
      candidates.push_back(b.bottom());
    else
      candidates = b.upper_covers(mapped_lower.front());

    for (ElementId y : candidates) {
      if (used[static_cast<std::size_t>(y)]) continue;
      if (sig_a[static_cast<std::size_t>(x)] != sig_b[static_cast<std::size_t>(y)]) continue;
      if (b.lower_covers(y) != mapped_lower) continue;
      image[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = true;
      if (extend(k + 1)) return true;
      used[static_cast<std::size_t>(y)] = false;
      image[static_cast<std::size_t>(x)] = -1;
    }
    return false;
  };

  if (!extend(0)) return std::nullopt;
  return image;
}

bool faces_correspond(const std::vector<Face>& from, const std::vector<Face>& to,
                      const std::vector<int>& vertex_map) {
  std::set<Face> mapped;
  for (const Face& f : from) {
    Face g;
    for (int v : f) {
      if (v < 0 || static_cast<std::size_t>(v) >= vertex_map.size() ||
          vertex_map[static_cast<std::size_t>(v)] < 0)
        return false;
      g.push_back(vertex_map[static_cast<std::size_t>(v)]);
    }
    std::sort(g.begin(), g.end());
    mapped.insert(g);
  }
  return mapped.size() == from.size() && mapped == std::set<Face>(to.begin(), to.end());
}

std::string to_dot(const FiniteLattice& L, bool with_labels,
                   const std::function<std::string(int)>& label_text) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < L.size(); ++i)
    out << "  n" << i << " [label=" << nlohmann::json(L.names()[i]).dump() << "];\n";
  for (const auto& [lo, hi] : L.covers()) {
    out << "  n" << lo << " -> n" << hi;
    if (with_labels) {
      if (auto l = L.label(lo, hi)) {
        const std::string text = label_text ? label_text(*l) : std::to_string(*l);
        out << " [label=" << nlohmann::json(text).dump() << "]";
      }
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const FiniteLattice& L) {
  nlohmann::ordered_json j;
  j["elements"] = L.names();
  j["covers"] = nlohmann::ordered_json::array();
  for (const auto& [lo, hi] : L.covers()) j["covers"].push_back({lo, hi});
  j["labels"] = nlohmann::ordered_json::object();
  for (const auto& [cover, label] : L.labels())
    j["labels"][std::to_string(cover.first) + "," + std::to_string(cover.second)] = label;
  return j.dump();
}

}  // namespace torslat
