#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "conic/relative.hpp"
#include "conic/stats.hpp"

using namespace conic;

static InvariantQuery mk(const SurfaceModel& mo, const SurfaceClass& d, int g,
                         const char* a, const char* b) {
  return {mo, d, g, MultiSeq::parse(a), MultiSeq::parse(b)};
}

TEST_CASE("multiplicity from the marked diagram") {
  // the two cubic diagrams: weight-1 link gives 1, weight-2 link 4
  auto en = enumerate_marked(SurfaceModel::tilde_xn(0), {3, {}}, 0,
                             MultiSeq(), MultiSeq::parse("1^6"));
  std::map<int, Int> by_weight;
  for (auto& g : en.groups) {
    REQUIRE(g.diagram.ie.size() == 1);
    for (auto& m : g.classes)
      by_weight[g.diagram.ie[0].w] = complex_multiplicity(g.diagram, m);
  }
  CHECK(by_weight[1] == 1);
  CHECK(by_weight[2] == 4);

  // a tangent moving contact contributes its weight
  auto tg = enumerate_marked(SurfaceModel::tilde_xn(0), {1, {}}, 0,
                             MultiSeq(), MultiSeq::parse("2^1"));
  REQUIRE(tg.total_classes() == 1);
  CHECK(complex_multiplicity(tg.groups[0].diagram, tg.groups[0].classes[0]) ==
        2);
}

TEST_CASE("plane invariants") {
  auto t0 = SurfaceModel::tilde_xn(0);
  CHECK(gw_relative(mk(t0, {1, {}}, 0, "", "1^2")) == 1);
  CHECK(gw_relative(mk(t0, {2, {}}, 0, "", "1^4")) == 1);
  CHECK(gw_relative(mk(t0, {3, {}}, 0, "", "1^6")) == 12);
  CHECK(gw_relative(mk(t0, {3, {}}, 1, "", "1^6")) == 1);
  // two lines through a point tangent to a conic
  CHECK(gw_relative(mk(t0, {1, {}}, 0, "", "2^1")) == 2);
}

TEST_CASE("base values") {
  auto t2 = SurfaceModel::tilde_xn(2);
  CHECK(gw_relative(mk(t2, {0, {-1, 0}}, 0, "", "1^1")) == 1);
  CHECK(gw_relative(mk(t2, {0, {0, -1}}, 0, "", "1^1")) == 1);
  CHECK(gw_relative(mk(t2, {1, {0, 0}}, 0, "1^2", "")) == 1);
  CHECK(gw_relative(mk(t2, {1, {0, 0}}, 0, "2^1", "")) == 1);
  CHECK(gw_relative(mk(t2, {1, {1, 0}}, 0, "1^1", "")) == 1);
  CHECK(gw_relative(mk(t2, {1, {1, 1}}, 0, "", "")) == 1);
  // not in the table
  CHECK(gw_relative(mk(t2, {1, {2, 0}}, 0, "", "")) == 0);
  CHECK(gw_relative(mk(t2, {0, {-1, 0}}, 0, "1^1", "")) == 0);
  CHECK(gw_relative(mk(t2, {0, {-1, -1}}, 0, "", "1^2")) == 0);
  // fixed contact instead of moving one on an exceptional curve
  CHECK(gw_relative(mk(t2, {0, {-1, 0}}, 1, "", "1^1")) == 0);
}

TEST_CASE("multiple exceptional cover is rejected") {
  auto t2 = SurfaceModel::tilde_xn(2);
  CHECK_THROWS_AS(gw_relative_uncached(mk(t2, {0, {-2, 0}}, 0, "", "2^1")),
                  std::domain_error);
  CHECK_THROWS_AS(gw_relative_uncached(mk(t2, {0, {-3, 0}}, 0, "", "3^1")),
                  std::domain_error);
  // type mismatch reported before anything else
  CHECK_THROWS_AS(gw_relative_uncached(mk(t2, {1, {0, 0}}, 0, "", "1^3")),
                  std::invalid_argument);
}

TEST_CASE("pinned quartic and sextic") {
  auto t6 = SurfaceModel::tilde_xn(6);
  CHECK(gw_relative(mk(t6, {4, {1, 1, 1, 1, 1, 1}}, 0, "", "1^2")) == 616);
  CHECK(gw_relative(mk(t6, {6, {2, 2, 2, 2, 2, 2}}, 0, "", "")) == 2002);
  CHECK(gw_relative(mk(t6, {2, {0, 0, 0, 0, 0, 0}}, 0, "", "1^4")) == 1);
}

TEST_CASE("conic points are interchangeable in the cache") {
  auto t2 = SurfaceModel::tilde_xn(2);
  clear_relative_cache();
  reset_stats();
  Int a = gw_relative(mk(t2, {2, {1, 0}}, 0, "", "1^3"));
  long long hits = stats().cache_hits;
  Int b = gw_relative(mk(t2, {2, {0, 1}}, 0, "", "1^3"));
  CHECK(a == b);
  CHECK(stats().cache_hits == hits + 1);
}

// all tangency profiles of the given weight with parts of size <= 2
static std::vector<MultiSeq> profiles(long long weight) {
  std::vector<MultiSeq> out;
  for (long long c2 = 0; 2 * c2 <= weight; ++c2) {
    MultiSeq m;
    if (weight - 2 * c2) m.add(1, weight - 2 * c2);
    if (c2) m.add(2, c2);
    out.push_back(m);
  }
  return out;
}

TEST_CASE("cache transparency on random queries") {
  std::vector<InvariantQuery> pool;
  for (int n = 0; n <= 2; ++n) {
    auto mo = SurfaceModel::tilde_xn(n);
    std::vector<std::vector<long long>> mus;
    if (n == 0) mus = {{}};
    if (n == 1) mus = {{0}, {1}};
    if (n == 2) mus = {{0, 0}, {1, 0}, {1, 1}};
    for (auto& mu : mus)
      for (long long dD = 1; dD <= 2; ++dD)
        for (int g = 0; g <= 1; ++g) {
          SurfaceClass d{dD, mu};
          long long dE = pair_E(mo, d);
          if (dE < 0) continue;
          for (long long ia = 0; ia <= dE; ++ia)
            for (auto& a : profiles(ia))
              for (auto& b : profiles(dE - ia))
                pool.push_back({mo, d, g, a, b});
        }
  }
  REQUIRE(pool.size() >= 50);
  std::mt19937 rng(20260814);
  std::shuffle(pool.begin(), pool.end(), rng);
  for (int k = 0; k < 50; ++k) {
    const auto& q = pool[k];
    INFO("query " << q.key());
    CHECK(gw_relative(q) == gw_relative_uncached(q));
  }
}
