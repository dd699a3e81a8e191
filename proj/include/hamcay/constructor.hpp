#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamcay/verifier.hpp"

// Construction of the decompositions: committed figure fixtures, the
// quotient-lift construction, the two inductive extension steps, a bounded
// exhaustive search, and the planner that combines them for any 4-regular
// G_{k,l}.
//
// Lift construction.  Let D = Right^{-1} * Up.  The quotient of the vertex
// group by <D> is cyclic of order q = |k+l| (generated by the common image of
// Right and Up, since D^k = Up^{k+l}), and its Cayley graph H is a q-cycle
// with every edge doubled: one copy per generator.  A Hamiltonian cycle C of
// H picks one label (horizontal or vertical) per position; its preimage is a
// 2-regular spanning subgraph of G_{k,l} whose trajectory structure depends
// only on the signed generator sum R^a U^b along C: if that sum equals D^t,
// the preimage is a spanning double-ray for |t| = 1 and a Hamiltonian circle
// for |t| = 2.  The complement of C is the co-cycle with the labels swapped,
// so both classes are controlled by one choice of (a, t1, t2).

namespace hamcay {

/// Solved label counts for one lift: class 1 uses `a` horizontal labels and
/// `b = q - a` vertical ones with target sum D^t1; the complement then has
/// (b, a) and target D^t2.
struct LiftSpec {
  GklParams params;
  std::int64_t q = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t t1 = 0;
  std::int64_t t2 = 0;
};

/// Find the deterministic lift solution for the mode, enumerating target
/// pairs in a fixed order and a ascending.  Returns nullopt when no label
/// count works (e.g. circles on (3,1), where the complement sum degenerates
/// to the identity and would lift to finite cycles).
std::optional<LiftSpec> solve_lift_spec(const GklParams& params, Mode mode);

/// Build the lift decomposition: horizontal labels on the lexicographically
/// first a positions, period q.  Throws QuotientTooSmall (q < 3) or
/// NoLiftSolution.  The output passes verify(mode); prevalence is checked by
/// callers that need it, not assumed.
Decomposition lift_base(const GklParams& params, Mode mode);

/// Per-residue bookkeeping of one k-extension: who owns the wrap edge e_n at
/// the cut column and the cyclic gap h_n to the next wrap edge of the same
/// class.
struct ExtensionTrace {
  std::int64_t cut_column = 0;
  std::vector<int> owner;           // size p, values 1 / 2
  std::vector<std::int64_t> gap;    // size p, values in [1, p]
};

ExtensionTrace extension_trace(const Decomposition& d);

/// Widen by two columns: rotate the witness column onto k-1, then replace
/// each wrap edge e_n of class i by the walk
///   (k-1,n) [R] [U]^{h_n-1} [R] [D]^{h_n-1} [R]
/// through the two new columns.  Requires a column in which both classes own
/// wrap edges (NotPrevalent otherwise).  Postconditions are asserted: the
/// walks tile the new columns disjointly, the result verifies with the same
/// class verdicts, stays vertically prevalent, and keeps horizontal
/// prevalence when the input had it.
Decomposition extend_k(const Decomposition& d);

/// Heighten by two: transpose to G_{l,k}, extend_k there, transpose back.
/// Requires l > 0 (LNotPositive) and horizontal prevalence.
Decomposition extend_l(const Decomposition& d);

struct SearchOptions {
  bool require_bi_prevalent = false;
  std::int64_t max_window_edges = 24;  // budget: 2*k*p per candidate
};

/// First (in canonical order) decomposition with period <= p_max passing
/// verify(mode), scanning periods ascending and colorings depth-first with
/// per-vertex degree pruning.  Returns nullopt when the space is exhausted.
std::optional<Decomposition> search_decomposition(const GklParams& params, std::int64_t p_max,
                                                  Mode mode, const SearchOptions& opts = {});

// ---------------------------------------------------------------------------
// Fixtures: committed window patterns (the drawn ones plus two minted by
// search), each shipped with its stored verdict and prevalence report and
// re-verified at load.

struct Fixture {
  std::string name;
  Mode mode = Mode::Auto;
  Decomposition decomposition;
  Verdict verdict;
  PrevalenceReport prevalence_report;
};

std::vector<std::string> fixture_names();

/// Load a committed fixture by name; throws UnknownFixture.  The stored
/// verdict and prevalence are recomputed at load and must match.
Fixture base_pattern(const std::string& name);

/// Canonical bytes of the companion verdict file committed next to each
/// fixture JSON ({"verdict": ..., "prevalence": ...}).
std::string fixture_verdict_json(const Fixture& f);

// ---------------------------------------------------------------------------
// Planner.

struct DecomposeOptions {
  Mode auto_preference = Mode::DoubleRays;  // what Auto picks when both work
  bool verify_result = true;
};

/// Produce a decomposition of the requested kind for any 4-regular G_{k,l}:
/// normalize to k >= l >= 0, run the fixture/lift/extension plan there, and
/// transport the result back through the inverse chain.  Throws
/// NotFourRegular, or ParityMismatch when the mode is incompatible with the
/// parity of k - l (the level cut has k + |l| edges; double-rays and circles
/// need it even, a mixed pair needs it odd).
Decomposition decompose(const GklParams& params, Mode mode, const DecomposeOptions& opts = {});

}  // namespace hamcay
