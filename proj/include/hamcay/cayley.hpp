#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Group and graph arithmetic for the two-parameter family G_{k,l}: the Cayley
// graph of Z^2 / <(k,l)> with generators Right = (1,0) and Up = (0,1), drawn
// as k columns of Z with wrap edges sheared by l.  Vertices are stored only as
// canonical coset representatives (m,n) with 0 <= m < k; the closed-form
// generator presentation over Z + Z_gcd(k,l) is intentionally not used as a
// representation (it does not stay faithful for every (k,l), e.g. (2,2)).

namespace hamcay {

enum class ErrorCode {
  NotFourRegular,
  ParityMismatch,
  SquareGridUnsupported,
  NotGenerating,
  NotPrevalent,
  LNotPositive,
  NoLiftSolution,
  QuotientTooSmall,
  BudgetExceeded,
  WindowTooSmall,
  ChainMismatch,
  UnknownFixture,
  RangeTooSmall,
  VerificationRegression,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Parameters (k,l) of G_{k,l}.  k >= 1 is the column count, l the vertical
/// shear of the wrap edges (k-1,n) -- (0,n-l).
struct GklParams {
  std::int64_t k = 1;
  std::int64_t l = 0;

  bool operator==(const GklParams&) const = default;
};

/// Canonical coset representative: 0 <= m < k, n unbounded.
struct Vertex {
  std::int64_t m = 0;
  std::int64_t n = 0;

  bool operator==(const Vertex&) const = default;
  auto operator<=>(const Vertex&) const = default;
};

enum class Dir : std::uint8_t { H = 0, V = 1 };

/// Undirected edge in canonical form: (v,H) = {v, v+Right}, (v,V) = {v, v+Up}.
/// Wrap edges are exactly the H edges with base column k-1.
struct Edge {
  Vertex base;
  Dir dir = Dir::H;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

enum class Gen : std::uint8_t { Right, Up, Left, Down };

/// Walk word over the generators, as a sequence of repeated blocks so that
/// [R][UR]^2[UU] style expressions can be written down directly.  Evaluation
/// is independent of how a word is split into blocks.
struct WordBlock {
  std::vector<Gen> letters;
  std::int64_t repeat = 1;
};

struct GeneratorWord {
  std::vector<WordBlock> blocks;

  static GeneratorWord fromLetters(std::vector<Gen> letters);
  std::vector<Gen> flatten() const;
};

std::string to_string(Gen g);

// ---------------------------------------------------------------------------
// Basic coset arithmetic.

/// Floor division / non-negative modulus for int64.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t pos_mod(std::int64_t a, std::int64_t b);

/// Canonical representative of (m,n) in Z^2 / <(k,l)>: reduce the column into
/// [0,k) and absorb the wraps into the level.  Two inputs map to the same
/// output iff they differ by an integer multiple of (k,l).
Vertex canonicalize(const GklParams& p, std::int64_t m, std::int64_t n);

Vertex step(const GklParams& p, const Vertex& v, Gen g);

/// True iff the four generator images of a vertex are pairwise distinct and
/// distinct from the vertex itself.  Vertex-transitivity makes the single
/// check at (0,0) sufficient.
bool is_four_regular(const GklParams& p);

void require_four_regular(const GklParams& p);

/// The 4 neighbours v+Right, v-Right, v+Up, v-Up in canonical form.
/// Throws NotFourRegular when they are not distinct.
std::vector<Vertex> neighbors(const GklParams& p, const Vertex& v);

/// Vertex sequence of the walk defined by `word` starting at `start`
/// (including the start, so the result has word-length + 1 entries).
std::vector<Vertex> apply_word(const GklParams& p, const Vertex& start, const GeneratorWord& word);

/// Parity condition: every finite cut of G_{k,l} has an even number of edges
/// iff k and l have the same parity.
bool satisfies_parity_P(const GklParams& p);

/// The canonical finite cut separating levels < c from the rest: the k
/// vertical edges below level c plus the |l| wrap edges straddling it.
/// Always has exactly k + |l| edges.
std::vector<Edge> level_cut(const GklParams& p, std::int64_t c);

/// Canonical form of the edge joining two adjacent vertices.
/// Throws InvalidArgument if u and w are not adjacent.
Edge edge_between(const GklParams& p, const Vertex& u, const Vertex& w);

/// The two endpoints of an edge, canonicalized; endpoints()[0] is the base.
std::vector<Vertex> endpoints(const GklParams& p, const Edge& e);

// ---------------------------------------------------------------------------
// Isomorphism family.

enum class IsoKind : std::uint8_t {
  Identity,
  Flip,       // (k,l) -> (k,-l), vertex (m,n) -> (m,-n)
  Transpose,  // (k,l) -> (l,k) for l > 0, vertex (m,n) -> canon(n,m)
  Translate,  // params unchanged, vertex v -> canon(v + shift)
};

struct IsoStep {
  IsoKind kind = IsoKind::Identity;
  std::int64_t dm = 0;  // Translate only
  std::int64_t dn = 0;
};

/// Composable coordinate change between members of the isomorphism family
/// G_{k,l} ~ G_{k,-l} ~ G_{l,k}.  Applying a chain and then its inverse is
/// the identity on canonical forms.
struct IsomorphismChain {
  GklParams source;
  GklParams target;
  std::vector<IsoStep> steps;

  IsomorphismChain inverse() const;
  std::string describe() const;
};

IsomorphismChain identity_chain(const GklParams& p);
IsomorphismChain flip_chain(const GklParams& p);
IsomorphismChain transpose_chain(const GklParams& p);
IsomorphismChain translate_chain(const GklParams& p, std::int64_t dm, std::int64_t dn);

/// Composition: first `a`, then `b` (requires a.target == b.source).
IsomorphismChain compose(const IsomorphismChain& a, const IsomorphismChain& b);

/// Normalize (k,l) to k' >= l' >= 0 via Flip and Transpose, returning the
/// chain that realizes the isomorphism from the input onto the normal form.
std::pair<GklParams, IsomorphismChain> normalize(const GklParams& p);

Vertex map_through(const IsomorphismChain& chain, const Vertex& v);
Edge map_through(const IsomorphismChain& chain, const Edge& e);

// ---------------------------------------------------------------------------
// Classification of two-generator presentations.

/// Outcome of classifying Cay(Z + Z_m, {a, b}).
struct ClassificationResult {
  enum class Tag { SquareGrid, Gkl, NotFourRegularInfinite, FiniteGroup } tag = Tag::SquareGrid;
  GklParams params;   // Gkl / NotFourRegularInfinite
  std::string iso;    // human-readable description of the coordinate change
  std::string reason; // NotFourRegularInfinite / FiniteGroup
};

/// Pair (x, y) with y read in Z_m (m >= 2), in Z for m = 0, ignored for m = 1.
struct GroupElem {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

/// Classify the Cayley graph of Z + Z_m with respect to generators a, b,
/// where torsion 0 encodes the free group Z^2 and torsion 1 encodes Z.
/// Computes the kernel lattice of (x,y) |-> x*a + y*b by exact integer
/// arithmetic; kernel rank 0 is the square grid, rank 1 gives G_{k,l}
/// (normalized to k > 0, with an axis swap when the generator is (0,l)),
/// rank 2 a finite group.  Throws NotGenerating when <a,b> is proper.
ClassificationResult classify_generators(std::int64_t torsion, GroupElem a, GroupElem b);

// Exact Smith normal form over the integers for tiny matrices (row-major,
// rows x cols).  Returns the invariant factors d_1 | d_2 | ... (non-negative).
std::vector<std::int64_t> smith_invariants(std::vector<std::vector<std::int64_t>> mat);

}  // namespace hamcay
