#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "upsilon/codes.hpp"
#include "upsilon/constructions.hpp"
#include "upsilon/error.hpp"
#include "upsilon/search.hpp"

using namespace upsilon;

namespace {

SearchResult run(std::size_t n, Coord p, std::size_t max_solutions, bool symmetry = true) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.p = p;
  cfg.max_solutions = max_solutions;
  cfg.symmetry_breaking = symmetry;
  return search_tilings(cfg);
}

}  // namespace

TEST_CASE("divisibility precheck") {
  CHECK(divisibility_precheck(3, 4));
  CHECK_FALSE(divisibility_precheck(4, 12));
  CHECK(divisibility_precheck(2, 12));
  CHECK(divisibility_precheck(1, 4));
  CHECK_FALSE(divisibility_precheck(2, 4));
}

TEST_CASE("search in dimension one") {
  const auto r = run(1, 4, 0);
  CHECK(r.status == SearchStatus::Exhausted);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0].codewords() == std::vector<Point>{{0}});
  const auto r8 = run(1, 8, 0);
  REQUIRE(r8.solutions.size() == 1);
  CHECK(r8.solutions[0].codewords() == std::vector<Point>{{0}, {4}});
}

TEST_CASE("search in dimension three") {
  const auto r = run(3, 4, 0);
  CHECK(r.status == SearchStatus::Exhausted);
  REQUIRE_FALSE(r.solutions.empty());
  bool found_binary = false;
  const auto expected = from_binary_perfect(binary_hamming(2)).codewords();
  for (const auto& s : r.solutions) {
    CHECK(verify(s).is_tiling);
    CHECK(s.size() == 2);
    found_binary = found_binary || s.codewords() == expected;
  }
  CHECK(found_binary);
}

TEST_CASE("search in the plane") {
  const auto r = run(2, 12, 0);
  CHECK(r.status == SearchStatus::Exhausted);
  REQUIRE_FALSE(r.solutions.empty());
  const auto target = canonical_form(PeriodicTiling(2, 12, testsupport::lambda2_window()));
  bool matched = false;
  for (const auto& s : r.solutions) {
    CHECK(verify(s).is_tiling);
    CHECK(s.size() == 12);
    matched = matched || canonical_form(s).codewords() == target.codewords();
  }
  CHECK(matched);
  MESSAGE("tilings of Z_12^2 through the origin: " << r.solutions.size());
}

TEST_CASE("orbit relation between symmetric and full counts") {
  for (const auto& [n, p] : std::vector<std::pair<std::size_t, Coord>>{{1, 4}, {3, 4}, {1, 8}, {2, 12}}) {
    const auto with = run(n, p, 0, true);
    const auto without = run(n, p, 0, false);
    REQUIRE(with.status == SearchStatus::Exhausted);
    REQUIRE(without.status == SearchStatus::Exhausted);
    CHECK(without.solutions.size() == with.solutions.size() * upsilon_size(n));
    for (const auto& s : without.solutions) CHECK(verify(s).is_tiling);
  }
}

TEST_CASE("rejected by divisibility") {
  const auto r = run(2, 4, 0);
  CHECK(r.status == SearchStatus::RejectedByDivisibility);
  CHECK(r.solutions.empty());
  REQUIRE(r.certificate);
  CHECK_FALSE(r.certificate->divides);
  CHECK(r.certificate->shape_size == "12");
  CHECK(r.certificate->window_size == "16");
}

TEST_CASE("budgets and limits") {
  SearchConfig cfg;
  cfg.n = 2;
  cfg.p = 12;
  cfg.node_budget = 5;
  cfg.max_solutions = 0;
  CHECK(search_tilings(cfg).status == SearchStatus::BudgetExhausted);
  cfg.node_budget = 10'000'000;
  cfg.max_solutions = 1;
  const auto one = search_tilings(cfg);
  CHECK(one.status == SearchStatus::SolutionLimit);
  CHECK(one.solutions.size() == 1);
  cfg.n = 7;
  cfg.p = 12;
  CHECK_THROWS_AS(search_tilings(cfg), BudgetExceeded);
  cfg.n = 2;
  cfg.p = 3;
  CHECK_THROWS_AS(search_tilings(cfg), InvalidArgument);
}

TEST_CASE("canonical form") {
  const PeriodicTiling t(2, 12, testsupport::lambda2_window());
  const auto c = canonical_form(t);
  CHECK(canonical_form(reflect(t, {-1, 1})).codewords() == c.codewords());
  CHECK(canonical_form(permute(t, {1, 0})).codewords() == c.codewords());
  CHECK(canonical_form(normalize(t, {3, 2})).codewords() == c.codewords());
  CHECK(c.contains({0, 0}));
}
