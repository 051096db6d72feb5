#include <doctest.h>

#include <random>

#include "coxgrowth/error.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/oracle.hpp"
#include "support.hpp"

using namespace coxgrowth;

namespace {

std::vector<Int> icounts(std::initializer_list<long> cs) {
  std::vector<Int> v;
  for (long c : cs) v.emplace_back(c);
  return v;
}

}  // namespace

TEST_CASE("bfs_group: infinite dihedral") {
  auto t = bfs_group(testsupport::fixture("dihedral_inf"), 4);
  CHECK(t.w == icounts({1, 2, 2, 2, 2}));
  CHECK(t.g == t.w);  // every element has a unique geodesic here
  CHECK(static_cast<int>(t.elements.size()) == 9);
  CHECK(t.find(t.elements[3]) == 3);
}

TEST_CASE("bfs_group: universal rank-3") {
  auto t = bfs_group(testsupport::fixture("universal3"), 4);
  CHECK(t.w == icounts({1, 3, 6, 12, 24}));
  CHECK(t.g == t.w);
}

TEST_CASE("bfs_group: finite A2 terminates") {
  auto t = bfs_group(testsupport::fixture("finite_a2"), 5);
  CHECK(t.w == icounts({1, 2, 2, 1, 0, 0}));
  CHECK(static_cast<int>(t.elements.size()) == 6);
}

TEST_CASE("bfs_group: golden fixture geodesics exceed elements") {
  auto t = bfs_group(testsupport::fixture("golden"), 2);
  CHECK(t.w == icounts({1, 3, 5}));
  CHECK(t.g == icounts({1, 3, 6}));  // s1 s3 = s3 s1 collapses one pair
  CHECK(t.w[2] == t.g[2] - 1);
}

TEST_CASE("reflection matrices are exact involutions") {
  auto d = testsupport::fixture("chord4");
  auto B = gram_matrix(d, diagram_field(d));
  for (int i = 0; i < d.rank; ++i) {
    FMatrix r = reflection_matrix(B, i);
    FMatrix sq = r * r;
    for (int a = 0; a < d.rank; ++a)
      for (int b = 0; b < d.rank; ++b)
        CHECK(sq(a, b) == FieldElement(a == b ? 1 : 0));
  }
}

TEST_CASE("word and geodesic count helpers") {
  auto d = testsupport::fixture("golden");
  auto t = bfs_group(d, 5);
  CHECK(word_counts(d, 5) == t.w);
  CHECK(geodesic_counts(d, 5) == t.g);
}

TEST_CASE("shortlex language counts reproduce the element counts") {
  for (const char* name : {"dihedral_inf", "golden", "chord4", "finite_a2"}) {
    auto d = testsupport::fixture(name);
    auto t = bfs_group(d, 6);
    std::vector<int> order(d.rank);
    for (int i = 0; i < d.rank; ++i) order[i] = i;
    CHECK(shortlex_language_counts(d, order, 6) == t.w);
  }
}

TEST_CASE("shortlex language counts are order-independent") {
  std::mt19937 rng(13);
  auto d = testsupport::fixture("chord5");
  std::vector<int> order{0, 1, 2};
  auto base = shortlex_language_counts(d, order, 6);
  for (int t = 0; t < 4; ++t) {
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(shortlex_language_counts(d, order, 6) == base);
  }
}

TEST_CASE("counts are invariant under vertex relabelling") {
  auto d = testsupport::fixture("chord4");
  auto p = d.permuted(std::vector<int>{2, 0, 1});
  auto a = bfs_group(d, 6), b = bfs_group(p, 6);
  CHECK(a.w == b.w);
  CHECK(a.g == b.g);
}

TEST_CASE("oracle agrees with the automata on every fixture") {
  for (const auto& name : testsupport::all_fixture_names()) {
    CAPTURE(name);
    auto d = testsupport::fixture(name);
    auto t = bfs_group(d, 6);
    auto s = small_roots(d);
    CHECK(count_words(build_geo(s), 6) == t.g);
    CHECK(count_words(build_shortlex(s, testsupport::standard_priority(d)), 6) ==
          t.w);
  }
}

TEST_CASE("oracle agrees with the automata on random spanned diagrams") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 5; ++trial) {
    auto d = testsupport::random_spanned(rng);
    int K = d.rank <= 4 ? 6 : 5;
    auto t = bfs_group(d, K);
    auto s = small_roots(d);
    CHECK(count_words(build_geo(s), K) == t.g);
    CHECK(count_words(build_shortlex(s, testsupport::standard_priority(d)), K) ==
          t.w);
  }
}

TEST_CASE("element cap raises CapError") {
  Caps tight;
  tight.elements = 10;
  CHECK_THROWS_AS(bfs_group(testsupport::fixture("universal3"), 6, tight),
                  CapError);
}
