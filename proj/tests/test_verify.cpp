#include <doctest.h>

#include "planar/errors.hpp"
#include "planar/verify.hpp"

using namespace planar;

TEST_CASE("suite names and groups") {
  CHECK(suite_names().size() == 11);
  CHECK(expand_suite("all") == suite_names());
  CHECK(expand_suite("cross-formula").size() == 2);
  CHECK(expand_suite("genus") == std::vector<std::string>{"genus"});
  CHECK_THROWS_AS(expand_suite("nope"), DomainError);
  CHECK_THROWS_AS(run_suite("nope"), DomainError);
}

TEST_CASE("threaded runs keep order and results") {
  const std::vector<std::string> names = {"hermitian-limits", "genus", "elliptic-law", "holomorphic-scaling"};
  const auto a = run_suites(names, {}, 1);
  const auto b = run_suites(names, {}, 3);
  REQUIRE(a.size() == names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    CHECK(a[i].name == names[i]);
    CHECK(b[i].name == names[i]);
    CHECK(a[i].pass);
    CHECK(a[i].checks == b[i].checks);
    CHECK(a[i].first_failure.empty());
  }
}

TEST_CASE("oracle suite family filter") {
  SuiteOptions only;
  only.family = FamilyKind::gegenbauer;
  const auto g = run_suite("oracle", only);
  const auto all = run_suite("oracle");
  CHECK(g.pass);
  CHECK(g.checks > 0);
  CHECK(g.checks < all.checks);
}
