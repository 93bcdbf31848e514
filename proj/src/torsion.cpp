#include "torslat/torsion.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "json.hpp"

#include "torslat/error.hpp"

namespace torslat {

ModuleCatalog::ModuleCatalog(int n) : n_(n), modules_(enumerate_indecomposables(n)) {
  const std::size_t count = modules_.size();
  factors_.assign(count, ModuleSet(count));
  submodules_.assign(count, ModuleSet(count));
  glue_.assign(count * count, -1);
  hom_.assign(count * count, 0);
  dual_.assign(count, 0);

  for (std::size_t i = 0; i < count; ++i) {
    const StringModule& m = modules_[i];
    for (const auto& f : indecomposable_factors(m)) factors_[i].set(idx(id_of(f)));
    for (const auto& s : indecomposable_submodules(m)) submodules_[i].set(idx(id_of(s)));
    dual_[i] = id_of(dualize(m));
    for (std::size_t j = 0; j < count; ++j) {
      const StringModule& other = modules_[j];
      hom_[i * count + j] = hom_dim(m, other);
      const bool overlap = std::max(m.p, other.p) <= std::min(m.q, other.q);
      if (!overlap) {
        if (auto g = torslat::glue(m, other)) glue_[i * count + j] = id_of(*g);
      }
    }
  }
}

ModuleId ModuleCatalog::id_of(const StringModule& m) const {
  auto it = std::lower_bound(modules_.begin(), modules_.end(), m);
  if (it == modules_.end() || !(*it == m))
    throw Error(ErrorCode::InvalidArgument, "module " + to_text(m) + " is not in the catalog for RA_" +
                                                std::to_string(n_));
  return static_cast<ModuleId>(it - modules_.begin());
}

std::optional<ModuleId> ModuleCatalog::glue(ModuleId sub, ModuleId quot) const {
  const int g = glue_[idx(sub) * size() + idx(quot)];
  if (g < 0) return std::nullopt;
  return g;
}

ModuleSet ModuleCatalog::full_set() const {
  ModuleSet s(size());
  for (std::size_t i = 0; i < size(); ++i) s.set(i);
  return s;
}

ModuleSet ModuleCatalog::set_of(const std::vector<StringModule>& ms) const {
  ModuleSet s(size());
  for (const auto& m : ms) s.set(idx(id_of(m)));
  return s;
}

ModuleSet ModuleCatalog::dual_set(const ModuleSet& s) const {
  ModuleSet out(size());
  s.for_each([&](std::size_t i) { out.set(idx(dual_[i])); });
  return out;
}

namespace {

ModuleSet close(const ModuleCatalog& cat, const ModuleSet& seeds, bool with_factors) {
  ModuleSet result = seeds;
  std::vector<ModuleId> members = seeds.to_indices();
  std::deque<ModuleId> work(members.begin(), members.end());

  auto add = [&](ModuleId id) {
    if (result.test(static_cast<std::size_t>(id))) return;
    result.set(static_cast<std::size_t>(id));
    members.push_back(id);
    work.push_back(id);
  };

  while (!work.empty()) {
    const ModuleId x = work.front();
    work.pop_front();
    if (with_factors) cat.factors(x).for_each([&](std::size_t f) { add(static_cast<ModuleId>(f)); });
    const std::size_t known = members.size();
    for (std::size_t k = 0; k < known; ++k) {
      const ModuleId y = members[k];
      if (auto g = cat.glue(x, y)) add(*g);
      if (auto g = cat.glue(y, x)) add(*g);
    }
  }
  return result;
}

}  // namespace

TorsionClass torsion_closure(const ModuleCatalog& cat, const ModuleSet& seeds) { return close(cat, seeds, true); }

ModuleSet filt_closure(const ModuleCatalog& cat, const ModuleSet& seeds) { return close(cat, seeds, false); }

TorsionClass filt_gen(const ModuleCatalog& cat, ModuleId m) {
  return torsion_closure(cat, cat.factors(m));
}

ModuleSet perp(const ModuleCatalog& cat, const TorsionClass& t) {
  ModuleSet out(cat.size());
  for (std::size_t x = 0; x < cat.size(); ++x) {
    bool orthogonal = true;
    t.for_each([&](std::size_t y) {
      if (cat.hom(static_cast<ModuleId>(y), static_cast<ModuleId>(x)) != 0) orthogonal = false;
    });
    if (orthogonal) out.set(x);
  }
  return out;
}

std::vector<ModuleId> minimal_extending(const ModuleCatalog& cat, const TorsionClass& t) {
  std::vector<ModuleId> out;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto m = static_cast<ModuleId>(i);
    if (t.test(i)) continue;

    ModuleSet proper = cat.factors(m);
    proper.reset(i);
    if (!proper.is_subset_of(t)) continue;  // P1

    bool hom_free = true;  // P3
    t.for_each([&](std::size_t y) {
      if (cat.hom(static_cast<ModuleId>(y), m) != 0) hom_free = false;
    });
    if (!hom_free) continue;

    ModuleSet seeds = t;
    seeds.set(i);
    const TorsionClass upper = torsion_closure(cat, seeds);
    bool factor_of_each = true;
    upper.for_each([&](std::size_t x) {
      if (!t.test(x) && !cat.factors(static_cast<ModuleId>(x)).test(i)) factor_of_each = false;
    });
    if (factor_of_each) out.push_back(m);
  }
  return out;
}

std::vector<UpperCover> upper_covers(const ModuleCatalog& cat, const TorsionClass& t) {
  std::vector<UpperCover> out;
  for (ModuleId m : minimal_extending(cat, t)) {
    ModuleSet seeds = t;
    seeds.set(static_cast<std::size_t>(m));
    out.push_back({torsion_closure(cat, seeds), m});
  }
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (out[a].upper == out[b].upper)
        throw Error(ErrorCode::Internal, "two minimal extending modules give the same cover");
  return out;
}

bool is_torsion_class(const ModuleCatalog& cat, const ModuleSet& s) {
  const auto members = s.to_indices();
  for (ModuleId x : members)
    if (!cat.factors(x).is_subset_of(s)) return false;
  for (ModuleId x : members) {
    for (ModuleId y : members) {
      if (auto g = cat.glue(x, y); g && !s.test(static_cast<std::size_t>(*g))) return false;
    }
  }
  return true;
}

std::vector<TorsionClass> enumerate_torsion_classes_bruteforce(const ModuleCatalog& cat) {
  if (cat.rank() > 3)
    throw Error(ErrorCode::RankTooLarge, "subset scan is limited to n <= 3");
  const std::size_t count = cat.size();
  std::vector<TorsionClass> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    ModuleSet s(count);
    for (std::size_t i = 0; i < count; ++i)
      if ((mask >> i) & 1U) s.set(i);
    if (is_torsion_class(cat, s)) out.push_back(std::move(s));
  }
  return out;
}

bool p2_holds(const ModuleCatalog& cat, const ModuleSet& t, ModuleId m) {
  const StringModule& sub = cat.module(m);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto x = static_cast<ModuleId>(i);
    if (x == m || !cat.submodules(x).test(static_cast<std::size_t>(m))) continue;
    const StringModule& big = cat.module(x);
    // X/m splits into the pieces of X on either side of m's support.
    bool quotient_in_t = true;
    if (big.p < sub.p)
      quotient_in_t = quotient_in_t && t.test(static_cast<std::size_t>(cat.id_of(substring(big, big.p, sub.p - 1))));
    if (sub.q < big.q)
      quotient_in_t = quotient_in_t && t.test(static_cast<std::size_t>(cat.id_of(substring(big, sub.q + 1, big.q))));
    if (quotient_in_t && !t.test(i)) return false;
  }
  return true;
}

namespace {

void require_minimal_extending(const ModuleCatalog& cat, const TorsionClass& t, ModuleId m) {
  const auto me = minimal_extending(cat, t);
  if (std::find(me.begin(), me.end(), m) == me.end())
    throw Error(ErrorCode::InvalidArgument,
                to_text(cat.module(m)) + " is not minimal extending for " + class_text(cat, t));
}

}  // namespace

bool check_p2(const ModuleCatalog& cat, const TorsionClass& t, ModuleId m) {
  require_minimal_extending(cat, t, m);
  return p2_holds(cat, t, m);
}

bool min_coextending_check(const ModuleCatalog& cat, const TorsionClass& t, ModuleId m) {
  require_minimal_extending(cat, t, m);
  ModuleSet seeds = t;
  seeds.set(static_cast<std::size_t>(m));
  const ModuleSet free_class = perp(cat, torsion_closure(cat, seeds));

  if (free_class.test(static_cast<std::size_t>(m))) return false;

  ModuleSet proper_subs = cat.submodules(m);  // P1'
  proper_subs.reset(static_cast<std::size_t>(m));
  if (!proper_subs.is_subset_of(free_class)) return false;

  bool hom_free = true;  // P3'
  free_class.for_each([&](std::size_t x) {
    if (cat.hom(m, static_cast<ModuleId>(x)) != 0) hom_free = false;
  });
  if (!hom_free) return false;

  // P2' is P2 over the opposite algebra, identified with RA_n by dualizing.
  return p2_holds(cat, cat.dual_set(free_class), cat.dual(m));
}

std::optional<ElementId> TorsLattice::find(const TorsionClass& t) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == t) return static_cast<ElementId>(i);
  return std::nullopt;
}

ModuleId TorsLattice::brick_of_join_irreducible(ElementId j) const {
  const auto& lower = lattice.lower_covers(j);
  if (lower.size() != 1)
    throw Error(ErrorCode::InvalidArgument, "class " + std::to_string(j) + " is not join-irreducible");
  return *lattice.label(lower.front(), j);
}

TorsLattice build_tors_lattice(int n, std::size_t budget) {
  ModuleCatalog cat(n);
  std::vector<TorsionClass> classes;
  std::map<std::vector<int>, ElementId> registry;
  std::vector<Cover> covers;
  std::map<Cover, int> labels;

  auto intern = [&](const TorsionClass& t) -> ElementId {
    auto key = t.to_indices();
    if (auto it = registry.find(key); it != registry.end()) return it->second;
    if (classes.size() >= budget)
      throw Error(ErrorCode::BudgetExceeded,
                  "more than " + std::to_string(budget) + " torsion classes");
    const auto id = static_cast<ElementId>(classes.size());
    registry.emplace(std::move(key), id);
    classes.push_back(t);
    return id;
  };

  intern(cat.empty_set());
  for (std::size_t next = 0; next < classes.size(); ++next) {
    const TorsionClass current = classes[next];
    for (const auto& [upper, brick] : upper_covers(cat, current)) {
      const ElementId up = intern(upper);
      covers.push_back({static_cast<ElementId>(next), up});
      labels[{static_cast<ElementId>(next), up}] = brick;
    }
  }

  std::vector<std::string> names;
  names.reserve(classes.size());
  for (const auto& t : classes) names.push_back(class_text(cat, t));
  FiniteLattice lattice = FiniteLattice::from_covers(std::move(names), covers, std::move(labels));
  return TorsLattice{std::move(cat), std::move(classes), std::move(lattice)};
}

std::string class_text(const ModuleCatalog& cat, const ModuleSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ", ";
    first = false;
    out += to_text(cat.module(static_cast<ModuleId>(i)));
  });
  return out + "}";
}

namespace {

nlohmann::ordered_json module_json(const StringModule& m) {
  return nlohmann::ordered_json::parse(to_json(m));
}

}  // namespace

std::string to_json(const TorsLattice& tors, bool with_labels) {
  nlohmann::ordered_json j;
  j["n"] = tors.catalog.rank();
  j["elements"] = nlohmann::ordered_json::array();
  for (const auto& t : tors.classes) {
    auto members = nlohmann::ordered_json::array();
    t.for_each([&](std::size_t i) { members.push_back(module_json(tors.catalog.module(static_cast<ModuleId>(i)))); });
    j["elements"].push_back(std::move(members));
  }
  j["covers"] = nlohmann::ordered_json::array();
  for (const auto& [lo, hi] : tors.lattice.covers()) {
    auto edge = nlohmann::ordered_json::array({lo, hi});
    if (with_labels) edge.push_back(module_json(tors.catalog.module(*tors.lattice.label(lo, hi))));
    j["covers"].push_back(std::move(edge));
  }
  return j.dump();
}

std::string to_dot(const TorsLattice& tors, bool with_labels) {
  return to_dot(tors.lattice, with_labels,
                [&](int brick) { return to_text(tors.catalog.module(brick)); });
}

}  // namespace torslat
