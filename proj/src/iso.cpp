#include "torslat/iso.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

#include "torslat/arc.hpp"
#include "torslat/error.hpp"

namespace torslat {

InversionSet inversion_set(const ModuleCatalog& cat, const ModuleSet& t) {
  std::vector<std::pair<int, int>> pairs;
  t.for_each([&](std::size_t i) {
    const auto ip = inv_pair(cat.module(static_cast<ModuleId>(i)));
    pairs.emplace_back(ip.lo, ip.hi);
  });
  return make_inversion_set(cat.rank(), std::move(pairs));
}

Permutation phi(const ModuleCatalog& cat, const TorsionClass& t) {
  auto w = perm_from_inversions(inversion_set(cat, t));
  if (!w) throw Error(ErrorCode::Internal, "inversion set of " + class_text(cat, t) + " is not realizable");
  return *w;
}

Permutation phi_via_cjr(const TorsLattice& tors, ElementId id) {
  auto cjr = canonical_join_representation(tors.lattice, id);
  if (!cjr) throw Error(ErrorCode::MissingCJR, "class " + std::to_string(id) + " has no canonical join representation");
  std::vector<Permutation> parts;
  for (ElementId j : cjr->joinands)
    parts.push_back(delta_inv(sigma(tors.catalog.module(tors.brick_of_join_irreducible(j)))));
  return weak_join(tors.catalog.rank(), parts);
}

namespace {

void fail(IsoReport& r, bool& flag, std::string what) {
  flag = false;
  if (r.failures.size() < 50) r.failures.push_back(std::move(what));
}

}  // namespace

IsoReport verify_isomorphism(int n, std::size_t budget) {
  IsoReport r;
  r.n = n;
  const TorsLattice tors = build_tors_lattice(n, budget);
  const WeakOrder weak = build_weak_order(n, budget);
  const ModuleCatalog& cat = tors.catalog;
  r.sizes = {tors.classes.size(), weak.perms.size()};

  std::vector<ElementId> image(tors.classes.size(), -1);
  std::vector<InversionSet> inv(tors.classes.size());
  r.bijective = r.sizes.first == r.sizes.second;
  if (!r.bijective)
    r.failures.push_back("sizes differ: " + std::to_string(r.sizes.first) + " vs " + std::to_string(r.sizes.second));
  std::vector<bool> hit(weak.perms.size(), false);
  for (std::size_t i = 0; i < tors.classes.size(); ++i) {
    inv[i] = inversion_set(cat, tors.classes[i]);
    auto w = perm_from_inversions(inv[i]);
    if (!w) {
      fail(r, r.bijective, "class " + std::to_string(i) + " has an unrealizable inversion set");
      continue;
    }
    const ElementId id = weak.id_of(*w);
    if (hit[static_cast<std::size_t>(id)])
      fail(r, r.bijective, "phi is not injective at " + w->to_string());
    hit[static_cast<std::size_t>(id)] = true;
    image[i] = id;
  }
  if (r.bijective && std::find(hit.begin(), hit.end(), false) != hit.end())
    fail(r, r.bijective, "phi is not surjective");

  r.phi_routes_agree = true;
  for (std::size_t i = 0; i < tors.classes.size(); ++i) {
    if (image[i] < 0) continue;
    const Permutation w = phi_via_cjr(tors, static_cast<ElementId>(i));
    if (w != weak.perms[static_cast<std::size_t>(image[i])])
      fail(r, r.phi_routes_agree,
           "routes disagree on class " + std::to_string(i) + ": " +
               weak.perms[static_cast<std::size_t>(image[i])].to_string() + " vs " + w.to_string());
  }

  r.cover_preserving = r.bijective;
  r.inversion_increment = r.bijective;
  if (r.bijective) {
    std::set<Cover> mapped;
    for (const auto& [lo, hi] : tors.lattice.covers()) {
      const Cover c{image[static_cast<std::size_t>(lo)], image[static_cast<std::size_t>(hi)]};
      mapped.insert(c);
      const auto lo_perm = weak.perms[static_cast<std::size_t>(c.first)].to_string();
      const auto hi_perm = weak.perms[static_cast<std::size_t>(c.second)].to_string();
      const auto& lower = inv[static_cast<std::size_t>(lo)].pairs;
      const auto& upper = inv[static_cast<std::size_t>(hi)].pairs;
      std::vector<std::pair<int, int>> added;
      std::set_difference(upper.begin(), upper.end(), lower.begin(), lower.end(), std::back_inserter(added));
      const auto brick = tors.lattice.label(lo, hi);
      if (!brick || !std::includes(upper.begin(), upper.end(), lower.begin(), lower.end()) || added.size() != 1) {
        fail(r, r.inversion_increment, "cover " + lo_perm + " < " + hi_perm + " does not add one inversion");
        continue;
      }
      const auto ip = inv_pair(cat.module(*brick));
      if (added.front() != std::pair{ip.lo, ip.hi})
        fail(r, r.inversion_increment, "cover " + lo_perm + " < " + hi_perm + " adds an inversion other than its label");
    }
    const auto& weak_covers = weak.lattice.covers();
    for (const auto& c : mapped)
      if (!std::binary_search(weak_covers.begin(), weak_covers.end(), c))
        fail(r, r.cover_preserving,
             "image of a cover is not a cover: " + weak.perms[static_cast<std::size_t>(c.first)].to_string() + " < " +
                 weak.perms[static_cast<std::size_t>(c.second)].to_string());
    if (mapped.size() != weak_covers.size())
      fail(r, r.cover_preserving, "weak order has covers outside the image of tors");
  }

  r.cjc_isomorphic = true;
  const auto tors_cjc = canonical_join_complex(tors.lattice);
  const auto weak_cjc = canonical_join_complex(weak.lattice);
  const auto arcs = enumerate_arcs(n);
  const auto arc_faces = arc_complex(n, budget * 10);

  // join-irreducible class -> arc -> join-irreducible permutation
  std::vector<int> zeta_sigma(tors.classes.size(), -1);
  for (ElementId j : tors.lattice.join_irreducibles()) {
    const Arc a = sigma(cat.module(tors.brick_of_join_irreducible(j)));
    auto it = std::find(arcs.begin(), arcs.end(), a);
    if (it == arcs.end()) {
      fail(r, r.cjc_isomorphic, "no arc for join-irreducible class " + std::to_string(j));
      continue;
    }
    zeta_sigma[static_cast<std::size_t>(j)] = static_cast<int>(it - arcs.begin());
  }
  std::vector<int> delta_map(arcs.size(), -1);
  for (std::size_t i = 0; i < arcs.size(); ++i) delta_map[i] = weak.id_of(delta_inv(arcs[i]));

  if (!faces_correspond(tors_cjc, arc_faces, zeta_sigma))
    fail(r, r.cjc_isomorphic, "canonical join complex of tors does not match the arc complex");
  if (!faces_correspond(arc_faces, weak_cjc, delta_map))
    fail(r, r.cjc_isomorphic, "arc complex does not match the canonical join complex of the weak order");
  return r;
}

std::string to_json(const IsoReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["sizes"] = {r.sizes.first, r.sizes.second};
  j["bijective"] = r.bijective;
  j["cover_preserving"] = r.cover_preserving;
  j["inversion_increment"] = r.inversion_increment;
  j["phi_routes_agree"] = r.phi_routes_agree;
  j["cjc_isomorphic"] = r.cjc_isomorphic;
  j["failures"] = r.failures;
  return j.dump();
}

}  // namespace torslat
