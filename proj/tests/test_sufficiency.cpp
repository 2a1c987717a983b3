#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twc/matrix.hpp"
#include "twc/permanent.hpp"
#include "twc/sufficiency.hpp"

using namespace twc;

namespace {

Graph path4() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}}); }
Graph triangle() { return Graph(3, {{1, 2}, {2, 3}, {1, 3}}); }

// First K' <= cap in lex order with a nonzero brute-force permanent.
std::optional<EdgeVector> oracle_witness(const Graph& g, const EdgeVector& cap) {
  const IntMatrix c = oracle::c_matrix(g);
  for (const auto& k : oracle::bounded_vectors(cap, static_cast<long>(g.m()))) {
    if (oracle::permanent(replicate_cols(c, k)) != 0) return k;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("enumerate_bounded examples") {
  CHECK(enumerate_bounded(EdgeVector({1, 1, 1}), 3) == std::vector<EdgeVector>{EdgeVector({1, 1, 1})});
  CHECK(enumerate_bounded(EdgeVector({2, 2}), 2) ==
        std::vector<EdgeVector>{EdgeVector({0, 2}), EdgeVector({1, 1}), EdgeVector({2, 0})});
  CHECK(enumerate_bounded(EdgeVector({0, 0, 0}), 1).empty());
  CHECK(enumerate_bounded(EdgeVector({0, 0}), 0) == std::vector<EdgeVector>{EdgeVector({0, 0})});
  CHECK(enumerate_bounded(EdgeVector({3}), 2) == std::vector<EdgeVector>{EdgeVector({2})});
  CHECK(enumerate_bounded(EdgeVector(), 0).size() == 1);
}

TEST_CASE("enumerate_bounded matches a full box scan") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> cap(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> c(1 + trial % 6);
    for (auto& x : c) x = cap(rng);
    const EdgeVector k(c);
    const long total = trial % (k.total() + 2);
    REQUIRE(enumerate_bounded(k, total) == oracle::bounded_vectors(k, total));
  }
}

TEST_CASE("sufficiency examples") {
  auto cert = is_sufficient(path4(), EdgeVector({1, 2, 0}));
  REQUIRE(cert);
  CHECK(cert->witness == EdgeVector({1, 2, 0}));
  CHECK(cert->permanent == -2);
  CHECK_FALSE(is_sufficient(path4(), EdgeVector({1, 1, 1})));
  auto tri = is_sufficient(triangle(), EdgeVector({2, 2, 2}));
  REQUIRE(tri);
  CHECK(tri->witness.le(EdgeVector({2, 2, 2})));
  CHECK_FALSE(check_certificate(*tri));
}

TEST_CASE("capped witnesses") {
  CHECK_FALSE(find_witness_capped(path4(), 1));
  auto two = find_witness_capped(path4(), 2);
  REQUIRE(two);
  CHECK(two->witness.max() <= 2);
  CHECK_FALSE(check_certificate(*two));
  CHECK(permanent(replicate_cols(build_C(path4()), EdgeVector({1, 2, 0}))) == -2);
  for (int b = 0; b <= 4; ++b) CHECK_FALSE(find_witness_capped(Graph(2, {{1, 2}}), b));
  auto empty = find_witness_capped(Graph(3, {}), 0);
  REQUIRE(empty);
  CHECK(empty->permanent == 1);
  CHECK_THROWS(find_witness_capped(path4(), -1));
}

TEST_CASE("search returns the lexicographically first witness") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : oracle::all_labelled_graphs(n)) {
      if (g.m() == 0 || g.m() > 7) continue;
      for (int b : {1, 2}) {
        const EdgeVector cap(g.m(), b);
        const auto expected = oracle_witness(g, cap);
        const auto got = is_sufficient(g, cap);
        REQUIRE(got.has_value() == expected.has_value());
        if (got) {
          REQUIRE(got->witness == *expected);
          REQUIRE_FALSE(check_certificate(*got));
        }
      }
    }
  }
}

TEST_CASE("sufficiency is monotone in the cap") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> d(0, 2);
  const auto graphs = oracle::all_labelled_graphs(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph& g = graphs[rng() % graphs.size()];
    std::vector<int> lo(g.m()), hi(g.m());
    for (std::size_t e = 0; e < g.m(); ++e) {
      lo[e] = d(rng);
      hi[e] = lo[e] + d(rng);
    }
    if (is_sufficient(g, EdgeVector(lo))) REQUIRE(is_sufficient(g, EdgeVector(hi)));
  }
}

TEST_CASE("lower bounds restrict the search") {
  const Graph g = path4();
  auto cert = find_witness_between(g, EdgeVector({1, 0, 0}), EdgeVector({2, 2, 2}));
  REQUIRE(cert);
  CHECK(cert->witness[0] >= 1);
  CHECK_FALSE(find_witness_between(g, EdgeVector({1, 1, 1}), EdgeVector({1, 1, 1})));
  CHECK_FALSE(find_witness_between(g, EdgeVector({3, 0, 0}), EdgeVector({2, 2, 2})));
}

TEST_CASE("components are searched independently") {
  const Graph g(7, {{1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {5, 7}});
  auto cert = find_witness_capped(g, 2);
  REQUIRE(cert);
  CHECK_FALSE(check_certificate(*cert));
  const auto expected = oracle_witness(g, EdgeVector(g.m(), 2));
  REQUIRE(expected);
  CHECK(cert->witness == *expected);
}

TEST_CASE("rectangular search") {
  // two rows, three columns; only column 2 reaches row 0
  IntMatrix c(2, 3);
  c << 0, 0, 1, 1, 1, 0;
  auto hit = first_nonzero_permanent(c, {0, 0, 0}, {1, 1, 1});
  REQUIRE(hit);
  CHECK(hit->counts == std::vector<int>{0, 1, 1});
  CHECK(hit->permanent == 1);
  CHECK_FALSE(first_nonzero_permanent(c, {0, 0, 0}, {1, 1, 0}));
  CHECK_THROWS(first_nonzero_permanent(c, {0, 0}, {1, 1}));
}

TEST_CASE("certificate json") {
  auto cert = *is_sufficient(path4(), EdgeVector({1, 2, 0}));
  const std::string text = certificate_to_json(cert);
  CHECK(text == R"({"n":4,"edges":[[1,2],[2,3],[3,4]],"cap":[1,2,0],"witness":[1,2,0],"permanent":"-2"})");
  auto back = certificate_from_json(text);
  CHECK(back.graph == cert.graph);
  CHECK(back.witness == cert.witness);
  CHECK(back.permanent == -2);
  CHECK_FALSE(check_certificate(back));

  back.permanent = 2;
  CHECK(check_certificate(back));
  back.permanent = -2;
  back.witness = EdgeVector({1, 1, 1});
  back.cap = EdgeVector({1, 1, 1});
  CHECK(check_certificate(back));
  back.witness = EdgeVector({2, 1, 0});
  CHECK(check_certificate(back));

  CHECK_THROWS_AS(certificate_from_json("{"), ParseError);
  CHECK_THROWS_AS(certificate_from_json(R"({"n":4})"), ParseError);
  CHECK_THROWS_AS(certificate_from_json(
                      R"({"n":4,"edges":[[2,3],[1,2]],"cap":[1,1],"witness":[1,1],"permanent":"1"})"),
                  ParseError);
}
