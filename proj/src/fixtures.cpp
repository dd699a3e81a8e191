#include "hamcay/constructor.hpp"

#include <map>

#include <json.hpp>

// Committed window patterns.  Each table lists the class-1 edges of one
// period window (the complement is class 2) together with the properties the
// pattern is committed to have; base_pattern() rebuilds the decomposition,
// re-runs the verifier and the prevalence scan, and refuses to hand out a
// fixture whose stored claims no longer hold.

namespace hamcay {

namespace {

struct FixtureTable {
  const char* name;
  std::int64_t k, l, p;
  Mode mode;
  ClassKind class1, class2;
  bool vertically_prevalent;
  bool horizontally_prevalent;
  std::vector<WindowEdge> class1_edges;
};

const WindowEdge H(std::int64_t m, std::int64_t n) { return WindowEdge{m, n, Dir::H}; }
const WindowEdge V(std::int64_t m, std::int64_t n) { return WindowEdge{m, n, Dir::V}; }

const std::vector<FixtureTable>& tables() {
  static const std::vector<FixtureTable> t = {
      // Horizontal/vertical split: one spanning double-ray plus one circle.
      {"G21_mixed", 2, 1, 1, Mode::Mixed, ClassKind::HamiltonianDoubleRay,
       ClassKind::HamiltonianCircle, false, false,
       {H(0, 0), H(1, 0)}},

      // Horizontal/vertical split of G_{2,2}; both classes are circles.
      {"G22_circles", 2, 2, 1, Mode::Circles, ClassKind::HamiltonianCircle,
       ClassKind::HamiltonianCircle, false, false,
       {H(0, 0), H(1, 0)}},

      // Staircase double-rays on G_{2,2}, period 2.
      {"G22_rays", 2, 2, 2, Mode::DoubleRays, ClassKind::HamiltonianDoubleRay,
       ClassKind::HamiltonianDoubleRay, true, true,
       {V(0, 0), H(0, 0), V(1, 0), H(1, 1)}},

      // Double-ray pair on G_{4,0}, period 2.
      {"G40_rays", 4, 0, 2, Mode::DoubleRays, ClassKind::HamiltonianDoubleRay,
       ClassKind::HamiltonianDoubleRay, true, true,
       {V(0, 0), H(0, 0), V(1, 1), H(1, 1), V(2, 0), H(2, 0), V(3, 0), H(3, 1)}},

      // Circle pair on G_{4,0}, period 4 (the complement is the pattern
      // shifted vertically by 2).
      {"G40_circles", 4, 0, 4, Mode::Circles, ClassKind::HamiltonianCircle,
       ClassKind::HamiltonianCircle, true, true,
       {H(0, 3), V(1, 3), V(1, 0), H(1, 1), H(2, 1), V(3, 1), V(3, 2), H(3, 3),
        V(0, 0), V(0, 1), H(0, 2), H(1, 2), V(2, 2), V(2, 3), H(2, 0), H(3, 0)}},

      // Double-ray (class 1) whose complement is a circle, G_{4,1}, period 5.
      {"G41_mixed", 4, 1, 5, Mode::Mixed, ClassKind::HamiltonianDoubleRay,
       ClassKind::HamiltonianCircle, true, true,
       {H(0, 1), H(1, 1), H(2, 1), H(0, 2), H(1, 2), H(2, 4), H(3, 4), H(0, 3), H(1, 0),
        H(2, 0), H(3, 0), H(3, 3), V(0, 0), V(0, 4), V(1, 3), V(1, 4), V(2, 2), V(2, 3),
        V(3, 1), V(3, 2)}},

      // Double-ray pair on G_{4,2}, period 6.
      {"G42_rays", 4, 2, 6, Mode::DoubleRays, ClassKind::HamiltonianDoubleRay,
       ClassKind::HamiltonianDoubleRay, true, true,
       {H(0, 0), H(1, 0), H(2, 0), H(0, 1), H(1, 1), H(0, 2), H(3, 3), H(2, 4), H(3, 4),
        H(1, 5), H(2, 5), H(3, 5), V(3, 0), V(2, 1), V(3, 1), V(1, 2), V(2, 2), V(3, 2),
        V(0, 3), V(1, 3), V(2, 3), V(0, 4), V(1, 4), V(0, 5)}},

      // Circle pair on G_{4,2}, period 2 (complement = vertical shift by 1).
      {"G42_circles", 4, 2, 2, Mode::Circles, ClassKind::HamiltonianCircle,
       ClassKind::HamiltonianCircle, true, true,
       {V(0, 0), H(0, 0), V(1, 1), H(1, 1), V(2, 0), H(2, 0), V(3, 0), H(3, 1)}},

      // Double-ray (class 1) whose complement is a circle, G_{3,2}, period 5:
      // the lift with horizontal labels on cosets {0,1,2,3}.
      {"G32_mixed", 3, 2, 5, Mode::Mixed, ClassKind::HamiltonianDoubleRay,
       ClassKind::HamiltonianCircle, true, true,
       {H(0, 0), H(1, 0), H(2, 0), H(0, 1), H(1, 1), H(2, 1), H(0, 2), H(1, 2), V(2, 2),
        H(0, 3), V(1, 3), H(2, 3), V(0, 4), H(1, 4), H(2, 4)}},

      // Circle pair on G_{3,1}, period 2, minted by exhaustive search with a
      // bi-prevalence filter (the direct lift degenerates here).
      {"G31_circles", 3, 1, 2, Mode::Circles, ClassKind::HamiltonianCircle,
       ClassKind::HamiltonianCircle, true, true,
       {H(0, 0), V(0, 0), H(2, 0), V(2, 0), H(1, 1), V(1, 1)}},
  };
  return t;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& t : tables()) names.push_back(t.name);
  return names;
}

Fixture base_pattern(const std::string& name) {
  for (const auto& t : tables()) {
    if (name != t.name) continue;
    Fixture f;
    f.name = t.name;
    f.mode = t.mode;
    f.decomposition = Decomposition(GklParams{t.k, t.l}, t.p);
    for (const auto& e : t.class1_edges) f.decomposition.set_color(e.m, e.n, e.dir, 1);
    for (const auto& e : window_edges(t.k, t.p)) {
      bool in1 = false;
      for (const auto& c : t.class1_edges)
        if (c.m == e.m && c.n == e.n && c.dir == e.dir) { in1 = true; break; }
      if (!in1) f.decomposition.set_color(e.m, e.n, e.dir, 2);
    }
    f.decomposition.note("fixture:" + f.name);

    f.verdict = verify(f.decomposition, t.mode);
    f.prevalence_report = prevalence(f.decomposition);
    bool claims_ok = f.verdict.pass && f.verdict.class1.kind == t.class1 &&
                     f.verdict.class2.kind == t.class2 &&
                     f.prevalence_report.vertically_prevalent == t.vertically_prevalent &&
                     f.prevalence_report.horizontally_prevalent == t.horizontally_prevalent;
    if (!claims_ok)
      throw Error(ErrorCode::VerificationRegression,
                  "fixture " + name + " no longer matches its stored claims");
    return f;
  }
  throw Error(ErrorCode::UnknownFixture, "unknown fixture: " + name);
}

std::string fixture_verdict_json(const Fixture& f) {
  nlohmann::ordered_json j;
  j["verdict"] = nlohmann::ordered_json::parse(to_json(f.verdict));
  j["prevalence"] = nlohmann::ordered_json::parse(to_json(f.prevalence_report));
  return j.dump(2) + "\n";
}

}  // namespace hamcay
