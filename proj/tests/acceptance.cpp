// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "torslat/arc.hpp"
#include "torslat/error.hpp"
#include "torslat/iso.hpp"
#include "torslat/lattice.hpp"
#include "torslat/string_module.hpp"
#include "torslat/torsion.hpp"
#include "torslat/weak_order.hpp"

using namespace torslat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::set<std::vector<int>> index_sets(const std::vector<TorsionClass>& cs) {
  std::set<std::vector<int>> out;
  for (const auto& c : cs) out.insert(c.to_indices());
  return out;
}

Outcome lattice_sizes() {
  const auto t0 = Clock::now();
  const std::size_t expected[] = {2, 6, 24, 120};
  std::string got;
  for (int n = 1; n <= 4; ++n) {
    const auto size = build_tors_lattice(n).classes.size();
    got += (n > 1 ? "," : "") + std::to_string(size);
    if (size != expected[n - 1]) return fail("sizes " + got);
  }
  const double s = seconds_since(t0);
  if (s >= 10.0) return fail("took " + std::to_string(s) + " s");
  return {true, "sizes " + got + " in " + std::to_string(s) + " s"};
}

Outcome oracle_equivalence() {
  for (int n = 1; n <= 3; ++n) {
    const auto tors = build_tors_lattice(n);
    if (index_sets(tors.classes) != index_sets(enumerate_torsion_classes_bruteforce(tors.catalog)))
      return fail("class sets differ at n=" + std::to_string(n));
  }
  return {true, "n=1..3"};
}

Outcome isomorphism() {
  for (int n = 1; n <= 4; ++n) {
    const auto r = verify_isomorphism(n);
    if (!r.bijective || !r.cover_preserving || !r.inversion_increment)
      return fail("n=" + std::to_string(n) + ": " + (r.failures.empty() ? "flag false" : r.failures.front()));
  }
  return {true, "n=1..4"};
}

Outcome hom_formula() {
  const auto mods = enumerate_indecomposables(4);
  const auto t0 = Clock::now();
  std::size_t pairs = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto ms = enumerate_indecomposables(n);
    for (const auto& a : ms)
      for (const auto& b : ms) {
        ++pairs;
        if (hom_dim(a, b) != hom_dim_oracle(a, b)) return fail("mismatch at " + to_text(a) + ", " + to_text(b));
      }
  }
  const double s = seconds_since(t0);
  if (s >= 1.0) return fail("took " + std::to_string(s) + " s");
  return {true, std::to_string(pairs) + " pairs (" + std::to_string(mods.size() * mods.size()) + " at n=4) in " +
                    std::to_string(s) + " s"};
}

Outcome bricks() {
  std::size_t count = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& m : enumerate_indecomposables(n)) {
      if (!is_brick(m)) return fail(to_text(m) + " is not a brick");
      if (n == 5) ++count;
    }
  return {true, std::to_string(count) + " modules at n=5"};
}

Outcome minimal_extending_covers() {
  std::size_t covers = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto tors = build_tors_lattice(n);
    for (std::size_t i = 0; i < tors.classes.size(); ++i) {
      const auto& t = tors.classes[i];
      const auto me = minimal_extending(tors.catalog, t);
      const auto ups = upper_covers(tors.catalog, t);
      if (me.size() != tors.lattice.upper_covers(static_cast<ElementId>(i)).size() || ups.size() != me.size())
        return fail("cover count mismatch at class " + std::to_string(i));
      std::set<std::vector<int>> distinct;
      for (const auto& c : ups) {
        distinct.insert(c.upper.to_indices());
        if (!check_p2(tors.catalog, t, c.brick) || !min_coextending_check(tors.catalog, t, c.brick))
          return fail("checks fail for " + to_text(tors.catalog.module(c.brick)));
        ++covers;
      }
      if (distinct.size() != ups.size()) return fail("two bricks give one cover");
    }
  }
  return {true, std::to_string(covers) + " covers checked"};
}

Outcome join_complexes() {
  for (int n = 1; n <= 3; ++n) {
    const auto tors = build_tors_lattice(n);
    const auto weak = build_weak_order(n);
    const auto arcs = enumerate_arcs(n);
    std::vector<int> to_arc(tors.classes.size(), -1);
    for (ElementId j : tors.lattice.join_irreducibles()) {
      const auto it = std::find(arcs.begin(), arcs.end(), sigma(tors.catalog.module(tors.brick_of_join_irreducible(j))));
      to_arc[static_cast<std::size_t>(j)] = static_cast<int>(it - arcs.begin());
    }
    std::vector<int> to_perm(arcs.size());
    for (std::size_t a = 0; a < arcs.size(); ++a) to_perm[a] = weak.id_of(delta_inv(arcs[a]));
    const auto arc_faces = arc_complex(n);
    if (!faces_correspond(canonical_join_complex(tors.lattice), arc_faces, to_arc))
      return fail("tors vs arcs at n=" + std::to_string(n));
    if (!faces_correspond(arc_faces, canonical_join_complex(weak.lattice), to_perm))
      return fail("arcs vs weak order at n=" + std::to_string(n));
  }
  return {true, "n=1..3"};
}

Outcome fixtures() {
  const auto pentagon =
      FiniteLattice::from_covers({"0", "x", "y", "z", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}});
  if (canonical_join_complex(pentagon) != std::vector<Face>{{}, {1}, {1, 2}, {2}, {3}})
    return fail("pentagon complex");
  const auto diamond =
      FiniteLattice::from_covers({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  if (canonical_join_representation(diamond, diamond.top())) return fail("diamond top has a CJR");
  const auto other =
      FiniteLattice::from_covers({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  if (find_isomorphism(pentagon, other)) return fail("lattices reported isomorphic");
  if (!faces_correspond(canonical_join_complex(pentagon), canonical_join_complex(other), {-1, 2, 3, 1, -1}))
    return fail("complexes differ");
  return {true, "pentagon, diamond, pair"};
}

Outcome named_values() {
  const ModuleCatalog cat(2);
  const auto p = Permutation::parse;
  if (phi(cat, cat.full_set()) != p("210")) return fail("phi(mod) != 210");
  const ArcDiagram d210{2, {Arc::make(2, 0, 1, ""), Arc::make(2, 1, 2, "")}};
  if (delta(p("210")) != d210) return fail("delta(210)");
  if (delta_inv(Arc::make(2, 0, 1, "")) != p("102")) return fail("delta_inv(arc(0,1))");
  if (delta_inv(Arc::make(2, 1, 2, "")) != p("021")) return fail("delta_inv(arc(1,2))");
  if (weak_join(2, {p("102"), p("021")}) != p("210")) return fail("102 v 021");
  return {true, "phi, delta, delta_inv, join"};
}

// Transport is through the filtration closure. For the torsion closure the
// seeds must first be closed under factors: S = {1-2:L} at n=2 gains S_2.
Outcome inversion_transport() {
  std::size_t checked = 0;
  auto check = [&](const ModuleCatalog& cat, std::uint64_t mask) {
    auto s = cat.empty_set();
    for (std::size_t i = 0; i < cat.size(); ++i)
      if ((mask >> i) & 1U) s.set(i);
    auto gen = s;
    s.for_each([&](std::size_t i) { gen |= cat.factors(static_cast<ModuleId>(i)); });
    ++checked;
    return inversion_set(cat, filt_closure(cat, s)) == transitive_closure(inversion_set(cat, s)) &&
           inversion_set(cat, torsion_closure(cat, s)) == transitive_closure(inversion_set(cat, gen));
  };
  const ModuleCatalog two(2);
  for (std::uint64_t m = 0; m < 16; ++m)
    if (!check(two, m)) return fail("n=2 subset " + std::to_string(m));
  const ModuleCatalog three(3);
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t m = rng() & ((std::uint64_t{1} << three.size()) - 1);
    if (!check(three, m)) return fail("n=3 subset " + std::to_string(m));
  }
  return {true, std::to_string(checked) + " subsets; inv(Filt S) = tran(inv S), inv(T(S)) = tran(inv Gen S)"};
}

Outcome orthogonal_labels() {
  std::size_t pairs = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto tors = build_tors_lattice(n);
    const auto& L = tors.lattice;
    for (ElementId w = 0; w < static_cast<ElementId>(L.size()); ++w) {
      const auto& lower = L.lower_covers(w);
      for (std::size_t a = 0; a < lower.size(); ++a)
        for (std::size_t b = a + 1; b < lower.size(); ++b) {
          const int x = *L.label(lower[a], w);
          const int y = *L.label(lower[b], w);
          ++pairs;
          if (x == y || tors.catalog.hom(x, y) != 0 || tors.catalog.hom(y, x) != 0)
            return fail("labels into class " + std::to_string(w));
        }
    }
  }
  return {true, std::to_string(pairs) + " label pairs"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"lattice sizes", lattice_sizes},
      {"lattice vs subset scan", oracle_equivalence},
      {"isomorphism with the weak order", isomorphism},
      {"hom formula vs linear algebra", hom_formula},
      {"every indecomposable is a brick", bricks},
      {"minimal extending modules and covers", minimal_extending_covers},
      {"canonical join complexes", join_complexes},
      {"lattice fixtures", fixtures},
      {"named values", named_values},
      {"inversion transport", inversion_transport},
      {"hom-orthogonal cover labels", orthogonal_labels},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  return failures;
}
