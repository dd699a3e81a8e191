#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "hamcay/cayley.hpp"

using namespace hamcay;

namespace {

// Brute-force oracle: (x,y) lies in the kernel of (x,y) |-> x*a + y*b on
// Z + Z_m iff the image is the identity, evaluated directly.
bool in_kernel(std::int64_t torsion, GroupElem a, GroupElem b, std::int64_t x, std::int64_t y) {
  std::int64_t free_part = x * a.x + y * b.x;
  if (free_part != 0) return false;
  if (torsion == 0) return x * a.y + y * b.y == 0;
  if (torsion == 1) return true;
  return pos_mod(x * a.y + y * b.y, torsion) == 0;
}

bool is_multiple_of(std::int64_t x, std::int64_t y, std::int64_t K, std::int64_t L) {
  for (std::int64_t s = -20; s <= 20; ++s)
    if (x == s * K && y == s * L) return true;
  return false;
}

GeneratorWord letters(std::initializer_list<Gen> gs) {
  return GeneratorWord::fromLetters(std::vector<Gen>(gs));
}

}  // namespace

TEST_CASE("canonicalize reduces into the window") {
  CHECK(canonicalize(GklParams{3, 1}, 3, 5) == Vertex{0, 4});
  CHECK(canonicalize(GklParams{3, 1}, 3, 2) == Vertex{0, 1});  // (2,2) + Right
  CHECK(canonicalize(GklParams{4, 2}, -1, 0) == Vertex{3, 2});
}

TEST_CASE("canonicalize agrees with coset enumeration on a box") {
  // Independent check for (4,2): vertices are equal iff they differ by an
  // integer multiple of (k,l).
  GklParams p{4, 2};
  for (std::int64_t m1 = -6; m1 <= 6; ++m1)
    for (std::int64_t n1 = -6; n1 <= 6; ++n1)
      for (std::int64_t m2 = -6; m2 <= 6; ++m2)
        for (std::int64_t n2 = -6; n2 <= 6; ++n2) {
          bool same_coset = is_multiple_of(m1 - m2, n1 - n2, p.k, p.l);
          bool same_canon = canonicalize(p, m1, n1) == canonicalize(p, m2, n2);
          REQUIRE(same_coset == same_canon);
        }
}

TEST_CASE("canonicalize is idempotent and constant on cosets") {
  std::mt19937 rng(20240901);
  std::uniform_int_distribution<std::int64_t> coord(-30, 30), small(-5, 5);
  for (std::int64_t k = 1; k <= 10; ++k)
    for (std::int64_t l = -10; l <= 10; ++l) {
      GklParams p{k, l};
      for (int i = 0; i < 20; ++i) {
        std::int64_t m = coord(rng), n = coord(rng), t = small(rng);
        Vertex c = canonicalize(p, m, n);
        CHECK(canonicalize(p, c.m, c.n) == c);
        CHECK(canonicalize(p, m + t * k, n + t * l) == c);
        CHECK(c.m >= 0);
        CHECK(c.m < k);
      }
    }
}

TEST_CASE("neighbors") {
  auto ns = neighbors(GklParams{3, 1}, Vertex{2, 2});
  std::set<Vertex> got(ns.begin(), ns.end());
  std::set<Vertex> want = {{2, 1}, {2, 3}, {1, 2}, {0, 1}};
  CHECK(got == want);

  auto ns2 = neighbors(GklParams{2, 1}, Vertex{0, 0});
  std::set<Vertex> got2(ns2.begin(), ns2.end());
  std::set<Vertex> want2 = {{1, 0}, {1, 1}, {0, 1}, {0, -1}};
  CHECK(got2 == want2);

  CHECK_THROWS_AS(neighbors(GklParams{2, 0}, Vertex{0, 0}), Error);
}

TEST_CASE("neighbors is symmetric and 4-distinct on random vertices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> lvl(-20, 20);
  for (std::int64_t k = 1; k <= 10; ++k)
    for (std::int64_t l = 0; l <= 10; ++l) {
      GklParams p{k, l};
      if (!is_four_regular(p)) continue;
      std::uniform_int_distribution<std::int64_t> col(0, k - 1);
      for (int i = 0; i < 100; ++i) {
        Vertex v{col(rng), lvl(rng)};
        auto ns = neighbors(p, v);
        CHECK(std::set<Vertex>(ns.begin(), ns.end()).size() == 4);
        for (const auto& u : ns) {
          auto back = neighbors(p, u);
          CHECK(std::count(back.begin(), back.end(), v) >= 1);
        }
      }
    }
}

TEST_CASE("apply_word follows the (3,1) walk") {
  GeneratorWord w;
  w.blocks.push_back(WordBlock{{Gen::Right}, 1});
  w.blocks.push_back(WordBlock{{Gen::Up, Gen::Right}, 2});
  w.blocks.push_back(WordBlock{{Gen::Up, Gen::Up}, 1});
  auto walk = apply_word(GklParams{3, 1}, Vertex{0, 0}, w);
  std::vector<Vertex> want = {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 1}, {0, 2}, {0, 3}};
  CHECK(walk == want);

  // A regrouped spelling of the same word evaluates identically.
  GeneratorWord w2;
  w2.blocks.push_back(
      WordBlock{{Gen::Right, Gen::Up, Gen::Right, Gen::Up, Gen::Right, Gen::Up, Gen::Up}, 1});
  CHECK(apply_word(GklParams{3, 1}, Vertex{0, 0}, w2) == walk);
}

TEST_CASE("apply_word edge cases") {
  CHECK(apply_word(GklParams{5, 3}, Vertex{2, 2}, GeneratorWord{}) ==
        std::vector<Vertex>{Vertex{2, 2}});
  auto walk = apply_word(GklParams{4, 2}, Vertex{3, 0}, letters({Gen::Right}));
  CHECK(walk.back() == Vertex{0, -2});
}

TEST_CASE("is_four_regular") {
  CHECK_FALSE(is_four_regular(GklParams{2, 0}));
  CHECK(is_four_regular(GklParams{2, 1}));
  CHECK_FALSE(is_four_regular(GklParams{1, 1}));
  CHECK_FALSE(is_four_regular(GklParams{1, 0}));
  CHECK(is_four_regular(GklParams{1, 2}));
  CHECK(is_four_regular(GklParams{2, 2}));
  CHECK(is_four_regular(GklParams{3, 0}));
}

TEST_CASE("parity condition") {
  CHECK(satisfies_parity_P(GklParams{4, 2}));
  CHECK_FALSE(satisfies_parity_P(GklParams{2, 1}));
  CHECK(satisfies_parity_P(GklParams{3, 1}));
}

TEST_CASE("level cut contents and size") {
  auto cut = level_cut(GklParams{4, 2}, 0);
  CHECK(cut.size() == 6);
  std::set<Edge> got(cut.begin(), cut.end());
  CHECK(got.count(Edge{Vertex{3, 0}, Dir::H}) == 1);
  CHECK(got.count(Edge{Vertex{3, 1}, Dir::H}) == 1);
  for (std::int64_t m = 0; m < 4; ++m) CHECK(got.count(Edge{Vertex{m, -1}, Dir::V}) == 1);

  CHECK(level_cut(GklParams{2, 1}, 0).size() == 3);
  CHECK(level_cut(GklParams{3, 1}, 5).size() == 4);
}

TEST_CASE("level cut size is k+|l| and translates with c") {
  for (std::int64_t k = 1; k <= 6; ++k)
    for (std::int64_t l = -6; l <= 6; ++l) {
      GklParams p{k, l};
      if (!is_four_regular(p)) continue;
      for (std::int64_t c : {-3, 0, 5}) {
        auto cut = level_cut(p, c);
        CHECK(static_cast<std::int64_t>(cut.size()) == k + std::abs(l));
        // cut(c+1) is the vertical translate of cut(c).
        auto next = level_cut(p, c + 1);
        std::set<Edge> shifted;
        for (const auto& e : cut)
          shifted.insert(Edge{canonicalize(p, e.base.m, e.base.n + 1), e.dir});
        CHECK(std::set<Edge>(next.begin(), next.end()) == shifted);
      }
    }
}

TEST_CASE("classification: square grid") {
  auto res = classify_generators(0, GroupElem{1, 0}, GroupElem{0, 1});
  CHECK(res.tag == ClassificationResult::Tag::SquareGrid);
}

TEST_CASE("classification: Z with generators 2, -3") {
  auto res = classify_generators(1, GroupElem{2, 0}, GroupElem{-3, 0});
  REQUIRE(res.tag == ClassificationResult::Tag::Gkl);
  CHECK(res.params == GklParams{3, 2});
  // Kernel oracle on a box.
  for (std::int64_t x = -10; x <= 10; ++x)
    for (std::int64_t y = -10; y <= 10; ++y)
      REQUIRE(in_kernel(1, GroupElem{2, 0}, GroupElem{-3, 0}, x, y) ==
              is_multiple_of(x, y, 3, 2));
}

TEST_CASE("classification: Z+Z2 with generators (-1,1), (1,0)") {
  auto res = classify_generators(2, GroupElem{-1, 1}, GroupElem{1, 0});
  REQUIRE(res.tag == ClassificationResult::Tag::Gkl);
  CHECK(res.params == GklParams{2, 2});
  for (std::int64_t x = -10; x <= 10; ++x)
    for (std::int64_t y = -10; y <= 10; ++y)
      REQUIRE(in_kernel(2, GroupElem{-1, 1}, GroupElem{1, 0}, x, y) ==
              is_multiple_of(x, y, 2, 2));
}

TEST_CASE("classification: Z+Z4 with an axis swap") {
  auto res = classify_generators(4, GroupElem{1, 1}, GroupElem{0, 1});
  REQUIRE(res.tag == ClassificationResult::Tag::Gkl);
  CHECK(res.params == GklParams{4, 0});
  CHECK(res.iso.find("swapped") != std::string::npos);
}

TEST_CASE("classification: degenerate kernels are flagged") {
  auto res = classify_generators(1, GroupElem{1, 0}, GroupElem{1, 0});
  CHECK(res.tag == ClassificationResult::Tag::NotFourRegularInfinite);
  auto res2 = classify_generators(1, GroupElem{1, 0}, GroupElem{0, 0});
  CHECK(res2.tag == ClassificationResult::Tag::NotFourRegularInfinite);
}

TEST_CASE("classification: non-generating pairs are rejected") {
  CHECK_THROWS_AS(classify_generators(0, GroupElem{2, 0}, GroupElem{0, 1}), Error);
  CHECK_THROWS_AS(classify_generators(1, GroupElem{2, 0}, GroupElem{4, 0}), Error);
  CHECK_THROWS_AS(classify_generators(2, GroupElem{0, 1}, GroupElem{0, 1}), Error);
}

TEST_CASE("classification is consistent with the wrap relation") {
  // For normalized 4-regular (k,l) with gcd 1, the group Z with generators
  // l and -k has kernel exactly <(k,l)>.
  for (std::int64_t k = 1; k <= 10; ++k)
    for (std::int64_t l = 0; l <= k; ++l) {
      GklParams p{k, l};
      if (!is_four_regular(p) || std::gcd(k, l) != 1) continue;
      auto res = classify_generators(1, GroupElem{l, 0}, GroupElem{-k, 0});
      REQUIRE(res.tag == ClassificationResult::Tag::Gkl);
      CHECK(res.params == p);
    }
}

TEST_CASE("smith invariants") {
  CHECK(smith_invariants({{1, 0}, {0, 1}}) == std::vector<std::int64_t>{1, 1});
  CHECK(smith_invariants({{2, 0}, {0, 3}}) == std::vector<std::int64_t>{1, 6});
  CHECK(smith_invariants({{4, 2}}) == std::vector<std::int64_t>{2});
  CHECK(smith_invariants({{2, 4}, {4, 8}}) == std::vector<std::int64_t>{2});
}

TEST_CASE("normalize") {
  auto [p1, c1] = normalize(GklParams{3, -2});
  CHECK(p1 == GklParams{3, 2});
  CHECK(c1.describe() == "Flip");

  auto [p2, c2] = normalize(GklParams{2, 5});
  CHECK(p2 == GklParams{5, 2});
  CHECK(c2.describe() == "Transpose");

  auto [p3, c3] = normalize(GklParams{4, 2});
  CHECK(p3 == GklParams{4, 2});
  CHECK(c3.describe() == "Identity");

  auto [p4, c4] = normalize(GklParams{2, -5});
  CHECK(p4 == GklParams{5, 2});
  CHECK(c4.steps.size() == 2);
}

TEST_CASE("map_through examples") {
  auto t = transpose_chain(GklParams{2, 5});
  CHECK(map_through(t, Vertex{1, 3}) == Vertex{3, 1});

  auto f = flip_chain(GklParams{3, -2});
  CHECK(map_through(f, Edge{Vertex{0, 0}, Dir::V}) == Edge{Vertex{0, -1}, Dir::V});

  auto id = identity_chain(GklParams{4, 2});
  CHECK(map_through(id, Vertex{2, 7}) == Vertex{2, 7});
}

TEST_CASE("normalize chains are graph isomorphisms") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::int64_t> lvl(-12, 12);
  std::vector<GklParams> inputs = {{3, -2}, {2, 5}, {2, -5}, {4, 2}, {1, 3}, {3, -7}, {2, 1}};
  for (const auto& p : inputs) {
    if (!is_four_regular(p)) continue;
    auto [np, chain] = normalize(p);
    auto inv = chain.inverse();
    std::uniform_int_distribution<std::int64_t> col(0, p.k - 1);
    for (int i = 0; i < 200; ++i) {
      Vertex v{col(rng), lvl(rng)};
      Vertex w = map_through(chain, v);
      // Round trip.
      CHECK(map_through(inv, w) == v);
      // Adjacency preserved in both directions.
      auto nv = neighbors(p, v);
      auto nw = neighbors(np, w);
      std::set<Vertex> mapped;
      for (const auto& u : nv) mapped.insert(map_through(chain, u));
      CHECK(mapped == std::set<Vertex>(nw.begin(), nw.end()));
      // Edge maps commute with the endpoint maps.
      for (Dir dir : {Dir::H, Dir::V}) {
        Edge e{v, dir};
        Edge img = map_through(chain, e);
        auto src_ends = endpoints(p, e);
        auto img_ends = endpoints(np, img);
        std::set<Vertex> mapped_ends = {map_through(chain, src_ends[0]),
                                        map_through(chain, src_ends[1])};
        CHECK(mapped_ends == std::set<Vertex>(img_ends.begin(), img_ends.end()));
        CHECK(map_through(inv, img) == e);
      }
    }
  }
}
