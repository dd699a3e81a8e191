#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hamcay/periodic.hpp"

// Finite decision procedures for the infinite questions: whether a periodic
// 2-regular edge class of G_{k,l} is a spanning double-ray, a Hamiltonian
// circle, or neither, plus the prevalence preconditions of the inductive
// constructions and two independent brute-force oracles.
//
// The classifier works in the quotient of G_{k,l} by Up^p.  A 2-regular
// periodic class projects to a disjoint union of closed trajectories on the
// k x p window (a multigraph; self-loops and parallel edges are normal).
// Each trajectory accumulates a net vertical displacement, always a multiple
// of p; the winding w = displacement / p decides the lift: w = 0 lifts to
// infinitely many finite cycles, w != 0 to exactly |w| disjoint double-rays,
// each with one tail towards each end.  Since every 4-regular G_{k,l} has
// exactly two ends, a pair of spanning double-rays with tails in both ends
// is a Hamiltonian circle; the winding certificate is finite and complete
// for periodic sets, so no quantification over all finite cuts is needed.

namespace hamcay {

struct QuotientCycle {
  std::int64_t length = 0;                 // edges in the quotient trajectory
  std::int64_t winding = 0;                // net vertical displacement / p
  std::vector<Vertex> covered;             // window vertices on the trajectory
  std::vector<std::size_t> edge_indices;   // canonical window indices, traversal order
};

struct ComponentReport {
  std::vector<QuotientCycle> cycles;
  std::int64_t window_vertices = 0;   // k * p
  std::int64_t covered_vertices = 0;  // distinct vertices covered by all cycles
  bool spanning() const { return covered_vertices == window_vertices; }
};

/// Trace the closed trajectories of a 2-regular periodic set in the Up^p
/// quotient.  Throws NotTwoRegular (with a witness vertex in the message)
/// when some vertex does not have exactly two member edges.
ComponentReport quotient_components(const PeriodicEdgeSet& s);

enum class ClassKind : std::uint8_t { HamiltonianDoubleRay, HamiltonianCircle, Other };
enum class OtherReason : std::uint8_t { None, FiniteCycle, TooManyComponents, NotSpanning, NotTwoRegular };

struct ClassVerdict {
  ClassKind kind = ClassKind::Other;
  OtherReason reason = OtherReason::None;
  std::string witness;  // human-readable witness for Other verdicts
  ComponentReport report;

  bool is(ClassKind k) const { return kind == k; }
};

std::string to_string(ClassKind k);
std::string to_string(OtherReason r);

/// Decide double-ray / circle / neither for one periodic class:
///  - exactly one spanning trajectory with |w| = 1      -> double-ray
///  - two spanning trajectories with |w| = 1 each, or
///    one spanning trajectory with |w| = 2              -> circle
///  - otherwise Other (FiniteCycle if some w = 0, else coverage gap,
///    else TooManyComponents), with a concrete witness.
ClassVerdict classify_class(const PeriodicEdgeSet& s);

enum class Mode : std::uint8_t { DoubleRays, Circles, Mixed, Auto };

std::string to_string(Mode m);
std::optional<Mode> mode_from_string(const std::string& s);

struct Verdict {
  bool pass = false;
  Mode mode = Mode::Auto;
  ClassVerdict class1, class2;
  std::string failure;  // empty on pass

  explicit operator bool() const { return pass; }
};

/// Full decomposition check: partition and degree condition, then the two
/// class verdicts matched against the requested mode (Mixed accepts the
/// ray/circle pair in either order).
Verdict verify(const Decomposition& d, Mode mode);

std::string to_json(const Verdict& v);

// ---------------------------------------------------------------------------
// Prevalence.
//
// For a p-periodic class the order quantifiers in the prevalence definitions
// collapse: one member edge in a vertical cut yields member translates
// arbitrarily far above and below (shift by multiples of p), so a class
// prevails in the vertical cut at column m iff its window has an H edge
// based at column m.  The induction step consumes a cut in which *both*
// classes prevail, so the decomposition-level witness is a single column
// owning H edges of each color.

struct ClassPrevalence {
  std::vector<std::int64_t> h_columns;  // columns with >= 1 H edge of the class
  bool horizontal = false;              // every column has >= 1 V edge of the class
};

struct PrevalenceReport {
  ClassPrevalence class1, class2;
  std::vector<std::int64_t> both_h_columns;  // usable cuts for the k-extension
  bool vertically_prevalent = false;         // both classes share a witness column
  bool horizontally_prevalent = false;       // both classes horizontally prevalent
  bool bi_prevalent = false;
};

PrevalenceReport prevalence(const Decomposition& d);

std::string to_json(const PrevalenceReport& r);

// ---------------------------------------------------------------------------
// Window oracle: an independent check that never looks at windings.  It
// materializes the finite truncation of G_{k,l} to levels |n| <= N and
// inspects raw component structure per class: a spanning double-ray must cut
// to a single path through the interior (plus fragments stranded within
// k+|l| levels of the boundary), a circle to two, and no cycle may appear;
// any path endpoint deeper than k+|l| levels from the boundary witnesses a
// degree violation and fails immediately.

struct OracleClassObservation {
  bool has_cycle = false;
  std::int64_t interior_paths = 0;   // path components reaching the interior
  std::int64_t fragments = 0;        // components confined to the boundary band
  std::int64_t path_endpoints = 0;   // endpoints over all path components
};

struct OracleResult {
  bool pass = false;
  std::string failure;
  OracleClassObservation class1, class2;

  explicit operator bool() const { return pass; }
};

/// Requires N >= 3 * d.period(); throws WindowTooSmall otherwise.
OracleResult window_oracle(const Decomposition& d, std::int64_t N);

// ---------------------------------------------------------------------------
// Small-cut enumeration: exhaustive search for finite cuts with two infinite
// sides.  Operationally a cut is an edge set E(A,B) of a vertex bipartition
// of the truncation to levels |n| <= N that puts everything adjacent to
// below the truncation in A and everything adjacent to above it in B; such a
// bipartition extends verbatim to a finite cut of G with two infinite sides.
// Cuts are enumerated in nondecreasing size by min-cut branching
// (force-uncut = contract, force-cut = pin endpoints), so every cut of size
// <= maxEdges whose edges fit the truncation is found, in particular every
// level cut (size k + |l|).

struct CutEnumeration {
  std::vector<std::int64_t> sizes;  // one entry per distinct cut found, ascending
  bool complete = true;             // false when the node budget was exhausted
};

CutEnumeration enumerate_small_cuts(const GklParams& params, std::int64_t max_edges,
                                    std::int64_t N, std::int64_t node_budget = 2000000);

}  // namespace hamcay
