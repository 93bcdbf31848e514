#include "torslat/weak_order.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "torslat/error.hpp"

namespace torslat {

Permutation Permutation::identity(int n) {
  Permutation w;
  w.word.resize(static_cast<std::size_t>(n) + 1);
  std::iota(w.word.begin(), w.word.end(), 0);
  return w;
}

Permutation Permutation::parse(const std::string& text) {
  Permutation w;
  if (text.find(',') != std::string::npos) {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        w.word.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::InvalidArgument, "cannot parse permutation '" + text + "'");
      }
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw Error(ErrorCode::InvalidArgument, "cannot parse permutation '" + text + "'");
      w.word.push_back(c - '0');
    }
  }
  std::vector<int> sorted = w.word;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() < 2 || sorted != identity(static_cast<int>(sorted.size()) - 1).word)
    throw Error(ErrorCode::InvalidArgument, "'" + text + "' is not a permutation of {0,..,n} with n >= 1");
  return w;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (n() >= 10 && i > 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

bool InversionSet::contains(int p, int q) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::pair{p, q});
}

InversionSet make_inversion_set(int n, std::vector<std::pair<int, int>> pairs) {
  for (const auto& [p, q] : pairs)
    if (p < 0 || p >= q || q > n)
      throw Error(ErrorCode::InvalidArgument, "inversion pairs need 0 <= p < q <= n");
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return {n, std::move(pairs)};
}

InversionSet inversions(const Permutation& w) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < w.word.size(); ++i)
    for (std::size_t j = i + 1; j < w.word.size(); ++j)
      if (w.word[i] > w.word[j]) pairs.emplace_back(w.word[j], w.word[i]);
  return make_inversion_set(w.n(), std::move(pairs));
}

namespace {

using Relation = std::vector<std::vector<bool>>;

Relation to_relation(const InversionSet& s) {
  Relation r(static_cast<std::size_t>(s.n) + 1, std::vector<bool>(static_cast<std::size_t>(s.n) + 1, false));
  for (const auto& [p, q] : s.pairs) r[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = true;
  return r;
}

}  // namespace

InversionSet transitive_closure(const InversionSet& s) {
  Relation r = to_relation(s);
  const std::size_t size = r.size();
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < size; ++j)
          if (r[k][j]) r[i][j] = true;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (r[i][j]) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return {s.n, std::move(pairs)};
}

bool is_realizable(const InversionSet& s) {
  const Relation r = to_relation(s);
  const auto size = static_cast<std::size_t>(s.n) + 1;
  for (std::size_t p = 0; p < size; ++p)
    for (std::size_t q = p + 1; q < size; ++q)
      for (std::size_t t = q + 1; t < size; ++t) {
        if (r[p][q] && r[q][t] && !r[p][t]) return false;
        if (!r[p][q] && !r[q][t] && r[p][t]) return false;
      }
  return true;
}

std::optional<Permutation> perm_from_inversions(const InversionSet& s) {
  if (!is_realizable(s)) return std::nullopt;
  Permutation w = Permutation::identity(s.n);
  // q precedes p exactly when (p, q) is an inversion.
  std::sort(w.word.begin(), w.word.end(), [&](int a, int b) {
    if (a < b) return !s.contains(a, b);
    return s.contains(b, a);
  });
  if (inversions(w) != s) return std::nullopt;
  return w;
}

int descent_count(const Permutation& w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.word.size(); ++i)
    if (w.word[i] > w.word[i + 1]) ++d;
  return d;
}

std::vector<Permutation> weak_covers_below(const Permutation& w) {
  std::vector<Permutation> out;
  for (std::size_t i = 0; i + 1 < w.word.size(); ++i) {
    if (w.word[i] > w.word[i + 1]) {
      Permutation v = w;
      std::swap(v.word[i], v.word[i + 1]);
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation weak_join(int n, const std::vector<Permutation>& perms) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& w : perms) {
    if (w.n() != n) throw Error(ErrorCode::RankMismatch, "permutation " + w.to_string() + " has the wrong size");
    const auto inv = inversions(w);
    pairs.insert(pairs.end(), inv.pairs.begin(), inv.pairs.end());
  }
  auto joined = perm_from_inversions(transitive_closure(make_inversion_set(n, std::move(pairs))));
  if (!joined) throw Error(ErrorCode::Internal, "transitive closure of inversion sets is not realizable");
  return *joined;
}

ArcDiagram delta(const Permutation& w) {
  const int n = w.n();
  std::vector<int> position(static_cast<std::size_t>(n) + 1);
  for (std::size_t j = 0; j < w.word.size(); ++j) position[static_cast<std::size_t>(w.word[j])] = static_cast<int>(j);

  ArcDiagram d{n, {}};
  for (std::size_t i = 0; i + 1 < w.word.size(); ++i) {
    const int top = w.word[i];
    const int bottom = w.word[i + 1];
    if (top < bottom) continue;
    std::string sides;
    for (int node = bottom + 1; node < top; ++node)
      sides += position[static_cast<std::size_t>(node)] < static_cast<int>(i) ? 'R' : 'L';
    d.arcs.push_back({n, bottom, top, std::move(sides)});
  }
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

Permutation delta_inv(const Arc& a) {
  // Inversions (x, y) with x in {b} + L(a) and y in {t} + R(a).
  std::vector<int> lows{a.b}, highs{a.t};
  for (int node = a.b + 1; node < a.t; ++node) (a.side(node) == 'L' ? lows : highs).push_back(node);
  std::vector<std::pair<int, int>> pairs;
  for (int x : lows)
    for (int y : highs)
      if (x < y) pairs.emplace_back(x, y);
  auto w = perm_from_inversions(make_inversion_set(a.n, std::move(pairs)));
  if (!w) throw Error(ErrorCode::Internal, "single-arc inversion set is not realizable");
  return *w;
}

Permutation delta_inv(const ArcDiagram& d) {
  std::vector<Permutation> parts;
  for (const auto& a : d.arcs) parts.push_back(delta_inv(a));
  Permutation w = weak_join(d.n, parts);
  ArcDiagram sorted = d;
  std::sort(sorted.arcs.begin(), sorted.arcs.end());
  if (delta(w) != sorted) throw Error(ErrorCode::NotInImage, "diagram is not the image of any permutation");
  return w;
}

ElementId WeakOrder::id_of(const Permutation& w) const {
  auto it = std::lower_bound(perms.begin(), perms.end(), w);
  if (it == perms.end() || *it != w)
    throw Error(ErrorCode::InvalidArgument, "permutation " + w.to_string() + " is not in the weak order");
  return static_cast<ElementId>(it - perms.begin());
}

WeakOrder build_weak_order(int n, std::size_t budget) {
  if (n < 1) throw Error(ErrorCode::InvalidRank, "rank must be at least 1");
  std::size_t count = 1;
  for (int k = 2; k <= n + 1; ++k) {
    count *= static_cast<std::size_t>(k);
    if (count > budget)
      throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(budget) + " permutations");
  }

  std::vector<Permutation> perms;
  perms.reserve(count);
  Permutation w = Permutation::identity(n);
  do {
    perms.push_back(w);
  } while (std::next_permutation(w.word.begin(), w.word.end()));

  std::map<Permutation, ElementId> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<ElementId>(i));

  std::vector<Cover> covers;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    names.push_back(perms[i].to_string());
    for (const auto& v : weak_covers_below(perms[i])) covers.push_back({index.at(v), static_cast<ElementId>(i)});
  }
  FiniteLattice lattice = FiniteLattice::from_covers(std::move(names), covers);
  return WeakOrder{n, std::move(perms), std::move(lattice)};
}

std::string to_json(const Permutation& w) { return nlohmann::json(w.word).dump(); }

}  // namespace torslat
