#include <random>
#include <set>

#include "doctest.h"

#include "json.hpp"
#include "support.hpp"
#include "torslat/iso.hpp"

using namespace torslat;
using testing::mod;
using testing::set_of;
using testing::texts;

TEST_CASE("phi values") {
  const ModuleCatalog cat(2);
  CHECK(phi(cat, cat.empty_set()) == Permutation::identity(2));
  CHECK(phi(cat, cat.full_set()).to_string() == "210");
  CHECK(phi(cat, filt_gen(cat, cat.id_of(mod(2, "1-2:R")))).to_string() == "120");
  CHECK(phi(cat, filt_gen(cat, cat.id_of(mod(2, "1-2:L")))).to_string() == "201");
  CHECK(phi(cat, set_of(cat, {"1"})).to_string() == "102");
  CHECK(phi(cat, set_of(cat, {"2"})).to_string() == "021");
}

TEST_CASE("phi of a filt_gen class is delta_inv of sigma") {
  for (int n = 1; n <= 4; ++n) {
    const ModuleCatalog cat(n);
    for (ModuleId m = 0; m < static_cast<ModuleId>(cat.size()); ++m)
      CHECK(phi(cat, filt_gen(cat, m)) == delta_inv(sigma(cat.module(m))));
  }
}

TEST_CASE("both routes to phi agree") {
  for (int n = 1; n <= 4; ++n) {
    const auto tors = build_tors_lattice(n);
    for (std::size_t i = 0; i < tors.classes.size(); ++i)
      CHECK(phi_via_cjr(tors, static_cast<ElementId>(i)) == phi(tors.catalog, tors.classes[i]));
  }
  const auto tors = build_tors_lattice(2);
  CHECK(phi_via_cjr(tors, tors.lattice.bottom()) == Permutation::identity(2));
  CHECK(phi_via_cjr(tors, tors.lattice.top()).to_string() == "210");
}

namespace {

ModuleSet factor_closure(const ModuleCatalog& cat, const ModuleSet& s) {
  ModuleSet out = s;
  s.for_each([&](std::size_t i) { out |= cat.factors(static_cast<ModuleId>(i)); });
  return out;
}

}  // namespace

TEST_CASE("inversion sets of closures are transitive closures") {
  for (int n = 2; n <= 3; ++n) {
    const ModuleCatalog cat(n);
    const std::size_t k = cat.size();
    std::vector<std::uint64_t> masks;
    if (n == 2) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) masks.push_back(m);
    } else {
      std::mt19937_64 rng(2024);
      for (int i = 0; i < 200; ++i) masks.push_back(rng() & ((std::uint64_t{1} << k) - 1));
    }
    for (auto mask : masks) {
      auto s = cat.empty_set();
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1U) s.set(i);
      CHECK(inversion_set(cat, filt_closure(cat, s)) == transitive_closure(inversion_set(cat, s)));
      CHECK(inversion_set(cat, torsion_closure(cat, s)) ==
            transitive_closure(inversion_set(cat, factor_closure(cat, s))));
    }
  }
}

TEST_CASE("torsion closure differs from filtration closure") {
  const ModuleCatalog cat(2);
  const auto s = set_of(cat, {"1-2:L"});
  CHECK(texts(cat, filt_closure(cat, s)) == std::vector<std::string>{"1-2:L"});
  CHECK(texts(cat, torsion_closure(cat, s)) == std::vector<std::string>{"1-2:L", "2"});
  CHECK(inversion_set(cat, torsion_closure(cat, s)) != transitive_closure(inversion_set(cat, s)));
}

TEST_CASE("verify_isomorphism") {
  const std::size_t sizes[] = {2, 6, 24, 120, 720};
  for (int n = 1; n <= 5; ++n) {
    const auto r = verify_isomorphism(n);
    CHECK(r.n == n);
    CHECK(r.sizes.first == sizes[n - 1]);
    CHECK(r.sizes.second == sizes[n - 1]);
    CHECK(r.bijective);
    CHECK(r.cover_preserving);
    CHECK(r.inversion_increment);
    CHECK(r.phi_routes_agree);
    CHECK(r.cjc_isomorphic);
    CHECK(r.failures.empty());
    CHECK(r.ok());
  }
}

TEST_CASE("tors and the weak order are isomorphic as lattices") {
  for (int n = 1; n <= 3; ++n) {
    const auto tors = build_tors_lattice(n);
    const auto weak = build_weak_order(n);
    const auto iso = find_isomorphism(tors.lattice, weak.lattice);
    REQUIRE(iso.has_value());
  }
}

TEST_CASE("report json") {
  const auto j = nlohmann::json::parse(to_json(verify_isomorphism(3)));
  CHECK(j["sizes"] == nlohmann::json({24, 24}));
  CHECK(j["bijective"] == true);
  CHECK(j["cjc_isomorphic"] == true);
  CHECK(j["failures"].empty());
  IsoReport bad;
  bad.failures.push_back("x");
  CHECK_FALSE(bad.ok());
}
