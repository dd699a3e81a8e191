#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hamcay/constructor.hpp"
#include "hamcay/periodic.hpp"

using namespace hamcay;

namespace {

Decomposition hv_split(GklParams p, std::int64_t period) {
  Decomposition d(p, period);
  for (const auto& e : window_edges(p.k, period))
    d.set_color(e.m, e.n, e.dir, e.dir == Dir::H ? 1 : 2);
  return d;
}

}  // namespace

TEST_CASE("class_edges partitions the window") {
  auto d = hv_split(GklParams{2, 1}, 1);
  auto h = class_edges(d, 1);
  auto v = class_edges(d, 2);
  CHECK(h.member(0, 0, Dir::H));
  CHECK(h.member(1, 0, Dir::H));
  CHECK_FALSE(h.member(0, 0, Dir::V));
  CHECK(v.member(0, 0, Dir::V));
  CHECK(v.member(1, 0, Dir::V));
  CHECK(h.size() + v.size() == 4);

  auto d2 = base_pattern("G42_rays").decomposition;
  CHECK(class_edges(d2, 1).size() + class_edges(d2, 2).size() ==
        static_cast<std::size_t>(2 * 4 * d2.period()));
}

TEST_CASE("membership is periodic in the level") {
  auto d = base_pattern("G42_rays").decomposition;
  auto c1 = class_edges(d, 1);
  for (const auto& e : window_edges(4, d.period())) {
    CHECK(c1.member(e.m, e.n + d.period(), e.dir) == c1.member(e.m, e.n, e.dir));
    CHECK(c1.member(e.m, e.n - 3 * d.period(), e.dir) == c1.member(e.m, e.n, e.dir));
  }
}

TEST_CASE("translate identities") {
  auto d = base_pattern("G42_rays").decomposition;
  auto s = class_edges(d, 1);
  CHECK(translate(s, 0, 0) == s);
  CHECK(translate(s, 0, s.period()) == s);

  // The all-H set is fixed by any horizontal translation.
  auto hv = hv_split(GklParams{4, 2}, 1);
  auto h = class_edges(hv, 1);
  CHECK(translate(h, 1, 0) == h);
  CHECK(translate(h, 3, 5) == h);
}

TEST_CASE("translate moves membership the right way") {
  auto d = base_pattern("G41_mixed").decomposition;
  auto s = class_edges(d, 1);
  auto t = translate(s, 1, 2);
  GklParams p{4, 1};
  for (const auto& e : window_edges(4, s.period())) {
    Edge image{canonicalize(p, e.m + 1, e.n + 2), e.dir};
    CHECK(t.member(image) == s.member(e.m, e.n, e.dir));
  }
}

TEST_CASE("minimize_period") {
  // Constant pattern stored with a fat period collapses to 1.
  PeriodicEdgeSet allv(GklParams{3, 1}, 4);
  for (const auto& e : window_edges(3, 4)) allv.set(e.m, e.n, e.dir, e.dir == Dir::V);
  CHECK(minimize_period(allv).period() == 1);

  // The lift window on (4,2) depends on (m+n) mod 6, so 6 is already minimal.
  auto lifted = lift_base(GklParams{4, 2}, Mode::DoubleRays);
  CHECK(lifted.period() == 6);
  auto m = minimize_period(class_edges(lifted, 1));
  CHECK(6 % m.period() == 0);
  CHECK(m.period() == 6);

  // A window with no smaller repeat is unchanged.
  auto g40 = class_edges(base_pattern("G40_rays").decomposition, 1);
  CHECK(minimize_period(g40) == g40);
}

TEST_CASE("minimize_period never changes membership") {
  std::mt19937 rng(5);
  auto lifted = class_edges(lift_base(GklParams{3, 1}, Mode::DoubleRays), 2);
  // Re-wrap at a multiple of the true period, then minimize.
  PeriodicEdgeSet fat(GklParams{3, 1}, 3 * lifted.period());
  for (const auto& e : window_edges(3, fat.period()))
    fat.set(e.m, e.n, e.dir, lifted.member(e.m, e.n, e.dir));
  auto slim = minimize_period(fat);
  CHECK(slim.period() < fat.period());
  std::uniform_int_distribution<std::int64_t> lvl(-10 * fat.period(), 10 * fat.period());
  std::uniform_int_distribution<std::int64_t> col(0, 2);
  std::uniform_int_distribution<int> dd(0, 1);
  for (int i = 0; i < 1000; ++i) {
    std::int64_t m = col(rng), n = lvl(rng);
    Dir dir = dd(rng) ? Dir::V : Dir::H;
    CHECK(slim.member(m, n, dir) == fat.member(m, n, dir));
  }
}

TEST_CASE("degree condition flags bad colorings") {
  auto d = base_pattern("G22_rays").decomposition;
  CHECK(d.degree_condition());
  Decomposition broken = d;
  broken.set_color(0, 0, Dir::H, broken.color(0, 0, Dir::H) == 1 ? 2 : 1);
  Vertex w;
  CHECK_FALSE(broken.degree_condition(&w));
}

TEST_CASE("transport through transpose recomputes the period") {
  auto d = base_pattern("G42_circles").decomposition;  // (4,2), period 2
  auto t = transport(d, transpose_chain(d.params()));
  CHECK(t.params() == GklParams{2, 4});
  // Up^2-invariance becomes Right^2-invariance; with Right^2 = Up^{-4} in the
  // target the vertical period divides k*p/gcd(p,l) = 4.
  CHECK(4 % t.period() == 0);
  // Round trip restores the original on minimized windows.
  auto back = transport(t, transpose_chain(t.params()));
  auto dmin = minimize_period(d);
  CHECK(back.params() == d.params());
  CHECK(minimize_period(back).same_coloring(dmin));
}

TEST_CASE("transport through flip preserves component structure") {
  auto d = base_pattern("G31_circles").decomposition;
  auto flipped = transport(d, flip_chain(d.params()));
  CHECK(flipped.params() == GklParams{3, -1});
  CHECK(verify(flipped, Mode::Circles).pass);
  auto back = transport(flipped, flip_chain(flipped.params()));
  CHECK(minimize_period(back).same_coloring(minimize_period(d)));

  // Same per-class trajectory census on both sides.
  auto r1 = quotient_components(class_edges(d, 1));
  auto r2 = quotient_components(class_edges(flipped, 1));
  CHECK(r1.cycles.size() == r2.cycles.size());
  CHECK(std::abs(r1.cycles[0].winding) == std::abs(r2.cycles[0].winding));
}

TEST_CASE("transport records provenance and validates the chain") {
  auto d = base_pattern("G21_mixed").decomposition;
  auto t = transport(d, translate_chain(d.params(), 1, 3));
  CHECK(t.provenance().back().find("transport") != std::string::npos);
  CHECK_THROWS_AS(transport(d, transpose_chain(GklParams{5, 2})), Error);
}

TEST_CASE("verdicts survive transport") {
  for (const char* name : {"G42_rays", "G41_mixed", "G40_circles"}) {
    auto f = base_pattern(name);
    auto moved = transport(f.decomposition, translate_chain(f.decomposition.params(), 1, 1));
    Verdict v = verify(moved, f.mode);
    CHECK(v.pass);
  }
}

TEST_CASE("JSON round trip is canonical") {
  auto d = base_pattern("G42_rays").decomposition;
  std::string text = to_json(d);
  auto back = decomposition_from_json(text);
  CHECK(back.same_coloring(d));
  CHECK(to_json(back) == text);  // byte-exact

  // Sorted by (n, m, dir) with exactly 2*k*period entries.
  CHECK(text.find("\"k\": 4") != std::string::npos);
  auto first_h = text.find("\"dir\": \"H\"");
  auto first_v = text.find("\"dir\": \"V\"");
  CHECK(first_h < first_v);
}

TEST_CASE("JSON decoder rejects malformed input") {
  CHECK_THROWS_AS(decomposition_from_json("not json"), Error);
  CHECK_THROWS_AS(decomposition_from_json("{\"k\":2,\"l\":1,\"period\":1,\"edges\":[]}"), Error);
  // Duplicate edge entry.
  std::string dup = R"({"k":1,"l":2,"period":1,"edges":[
    {"m":0,"n":0,"dir":"H","color":1},{"m":0,"n":0,"dir":"H","color":2}]})";
  CHECK_THROWS_AS(decomposition_from_json(dup), Error);
  // Out-of-range column.
  std::string oob = R"({"k":1,"l":2,"period":1,"edges":[
    {"m":1,"n":0,"dir":"H","color":1},{"m":0,"n":0,"dir":"V","color":2}]})";
  CHECK_THROWS_AS(decomposition_from_json(oob), Error);
}
