#include <set>

#include "doctest.h"

#include "json.hpp"
#include "support.hpp"
#include "torslat/error.hpp"
#include "torslat/lattice.hpp"
#include "torslat/weak_order.hpp"

using namespace torslat;
using testing::boolean_lattice;
using testing::chain;
using testing::diamond;
using testing::kite_with_tail;
using testing::pentagon;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Internal;
}

bool refines(const FiniteLattice& L, const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
  for (ElementId x : a) {
    bool below = false;
    for (ElementId y : b) below = below || L.leq(x, y);
    if (!below) return false;
  }
  return true;
}

// Canonical join representation by scanning every set of join-irreducibles below w.
std::optional<std::vector<ElementId>> cjr_by_subsets(const FiniteLattice& L, ElementId w) {
  std::vector<ElementId> below;
  for (ElementId j : L.join_irreducibles())
    if (L.leq(j, w)) below.push_back(j);
  REQUIRE(below.size() <= 16);
  std::vector<std::vector<ElementId>> irredundant;
  for (unsigned mask = 0; mask < (1U << below.size()); ++mask) {
    std::vector<ElementId> a;
    for (std::size_t i = 0; i < below.size(); ++i)
      if ((mask >> i) & 1U) a.push_back(below[i]);
    if (L.join(a) != w) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < a.size() && minimal; ++drop) {
      auto smaller = a;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
      if (L.join(smaller) == w) minimal = false;
    }
    if (minimal) irredundant.push_back(a);
  }
  std::vector<std::vector<ElementId>> lowest;
  for (const auto& a : irredundant) {
    bool ok = true;
    for (const auto& b : irredundant) ok = ok && refines(L, a, b);
    if (ok) lowest.push_back(a);
  }
  if (lowest.size() != 1) return std::nullopt;
  return lowest.front();
}

void check_against_subsets(const FiniteLattice& L) {
  for (ElementId w = 0; w < static_cast<ElementId>(L.size()); ++w) {
    const auto fast = canonical_join_representation(L, w);
    const auto slow = cjr_by_subsets(L, w);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) CHECK(fast->joinands == *slow);
  }
}

}  // namespace

TEST_CASE("construction errors") {
  CHECK(code_of([] { FiniteLattice::from_covers(2, {{0, 1}, {1, 0}}); }) == ErrorCode::CycleDetected);
  CHECK(code_of([] { FiniteLattice::from_covers(3, {{0, 1}, {1, 2}, {0, 2}}); }) == ErrorCode::NonHasseEdge);
  CHECK(code_of([] { FiniteLattice::from_covers(3, {{0, 1}, {0, 2}}); }) == ErrorCode::NotALattice);
  CHECK(code_of([] {
          FiniteLattice::from_covers(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
        }) == ErrorCode::NotALattice);
  CHECK(code_of([] { FiniteLattice::from_covers(2, {{0, 5}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { FiniteLattice::from_covers(0, {}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { FiniteLattice::from_covers(2, {{0, 1}}, {{{1, 0}, 3}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("pentagon") {
  const auto L = pentagon();
  CHECK(L.bottom() == 0);
  CHECK(L.top() == 4);
  CHECK(L.join(1, 2) == 4);
  CHECK(L.meet(3, 2) == 0);
  CHECK(L.join(1, 3) == 3);
  CHECK(L.leq(1, 3));
  CHECK_FALSE(L.comparable(2, 3));
  CHECK(L.join_irreducibles() == std::vector<ElementId>{1, 2, 3});
  CHECK(L.rank(4) == 3);
  CHECK(L.join(std::vector<ElementId>{}) == 0);
  CHECK(L.meet(std::vector<ElementId>{}) == 4);
  const auto cjr = canonical_join_representation(L, 4);
  REQUIRE(cjr);
  CHECK(cjr->joinands == std::vector<ElementId>{1, 2});
  CHECK(canonical_join_complex(L) == std::vector<Face>{{}, {1}, {1, 2}, {2}, {3}});
  CHECK(count_check_covers_vs_joinands(L));
}

TEST_CASE("diamond top has no canonical join representation") {
  const auto L = diamond();
  CHECK_FALSE(canonical_join_representation(L, 4).has_value());
  CHECK(canonical_join_representation(L, 1).has_value());
  CHECK(code_of([&] { count_check_covers_vs_joinands(L); }) == ErrorCode::MissingCJR);
  // elements without a representation contribute no face
  CHECK(canonical_join_complex(L) == std::vector<Face>{{}, {1}, {2}, {3}});
}

TEST_CASE("non-isomorphic lattices with isomorphic complexes") {
  const auto a = kite_with_tail();
  const auto b = pentagon();
  CHECK_FALSE(find_isomorphism(a, b).has_value());
  const auto fa = canonical_join_complex(a);
  const auto fb = canonical_join_complex(b);
  // Both are an edge plus an isolated vertex.
  CHECK(fa.size() == 5);
  CHECK(fb.size() == 5);
  CHECK(faces_correspond(fa, fb, {-1, 3, 1, 2, -1}));
  CHECK(faces_correspond(fb, fa, {-1, 2, 3, 1, -1}));
}

TEST_CASE("isomorphism search") {
  const auto tors = boolean_lattice(3);
  const auto same = boolean_lattice(3);
  const auto iso = find_isomorphism(tors, same);
  REQUIRE(iso);
  for (const auto& [lo, hi] : tors.covers()) {
    const auto& c = same.covers();
    CHECK(std::find(c.begin(), c.end(), Cover{(*iso)[static_cast<std::size_t>(lo)], (*iso)[static_cast<std::size_t>(hi)]}) !=
          c.end());
  }
  CHECK_FALSE(find_isomorphism(chain(4), boolean_lattice(2)).has_value());
  CHECK_FALSE(find_isomorphism(chain(3), chain(4)).has_value());
  CHECK(find_isomorphism(chain(5), chain(5)).has_value());
}

TEST_CASE("canonical join representations match the subset scan") {
  check_against_subsets(pentagon());
  check_against_subsets(diamond());
  check_against_subsets(kite_with_tail());
  check_against_subsets(boolean_lattice(3));
  check_against_subsets(chain(4));
  for (int n = 1; n <= 3; ++n) check_against_subsets(build_weak_order(n).lattice);
}

TEST_CASE("boolean lattice complex is the full simplex") {
  const auto faces = canonical_join_complex(boolean_lattice(3));
  CHECK(faces.size() == 8);
  CHECK(count_check_covers_vs_joinands(boolean_lattice(3)));
}

TEST_CASE("faces_correspond") {
  const std::vector<Face> a{{}, {0}, {1}, {0, 1}};
  const std::vector<Face> b{{}, {5}, {7}, {5, 7}};
  CHECK(faces_correspond(a, b, {7, 5}));
  CHECK_FALSE(faces_correspond(a, b, {7, 6}));
  CHECK_FALSE(faces_correspond(a, b, {7, 7}));
  CHECK_FALSE(faces_correspond(a, b, {7}));
}

TEST_CASE("labels and export") {
  const auto L = FiniteLattice::from_covers({"0", "a", "1"}, {{0, 1}, {1, 2}}, {{{0, 1}, 4}, {{1, 2}, 9}});
  CHECK(L.label(0, 1) == 4);
  CHECK_FALSE(L.label(0, 2).has_value());
  const auto j = nlohmann::json::parse(to_json(L));
  CHECK(j["elements"] == nlohmann::json({"0", "a", "1"}));
  CHECK(j["covers"] == nlohmann::json({{0, 1}, {1, 2}}));
  CHECK(j["labels"]["0,1"] == 4);
  const auto dot = to_dot(L, true, [](int x) { return "L" + std::to_string(x); });
  CHECK(dot.find("n0 -> n1 [label=\"L4\"]") != std::string::npos);
  CHECK(to_dot(L, false).find("label=\"4\"") == std::string::npos);
  CHECK(to_dot(L, false) == to_dot(L, false));
}
