#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamcay/cayley.hpp"

// Finite representation of vertically periodic edge sets and edge 2-colorings
// of G_{k,l}.  A set invariant under translation by Up^p is stored as a dense
// membership table over the 2*k*p window edges {(m,n,dir) : 0 <= m < k,
// 0 <= n < p}; an arbitrary edge (m,n,dir) is a member iff (m, n mod p, dir)
// is in the window.

namespace hamcay {

/// Index of a window edge in the canonical (n, m, dir) order used everywhere,
/// including the JSON encoding.
inline std::size_t window_index(std::int64_t k, std::int64_t p, std::int64_t m, std::int64_t n,
                                Dir dir) {
  (void)p;
  return static_cast<std::size_t>(2 * (n * k + m) + (dir == Dir::V ? 1 : 0));
}

struct WindowEdge {
  std::int64_t m = 0;
  std::int64_t n = 0;  // 0 <= n < p
  Dir dir = Dir::H;
};

/// Enumerate the 2*k*p window edges in canonical order.
std::vector<WindowEdge> window_edges(std::int64_t k, std::int64_t p);

class PeriodicEdgeSet {
 public:
  PeriodicEdgeSet() = default;
  PeriodicEdgeSet(GklParams params, std::int64_t period);

  const GklParams& params() const { return params_; }
  std::int64_t period() const { return period_; }

  bool member(std::int64_t m, std::int64_t n, Dir dir) const;
  bool member(const Edge& e) const { return member(e.base.m, e.base.n, e.dir); }
  void set(std::int64_t m, std::int64_t n, Dir dir, bool value);

  std::size_t size() const;  // member edges per window

  bool operator==(const PeriodicEdgeSet&) const = default;

 private:
  GklParams params_;
  std::int64_t period_ = 1;
  std::vector<std::uint8_t> window_;
};

/// Image of the set under the graph automorphism v -> v + (dm, dn).
PeriodicEdgeSet translate(const PeriodicEdgeSet& s, std::int64_t dm, std::int64_t dn);

/// Equivalent set stored with the smallest period p' dividing p.
PeriodicEdgeSet minimize_period(const PeriodicEdgeSet& s);

/// A total 2-coloring of E(G_{k,l}), periodic with period p.  Construction
/// provenance (base used, steps applied) is carried along but is not part of
/// the serialized format.
class Decomposition {
 public:
  Decomposition() = default;
  Decomposition(GklParams params, std::int64_t period);

  const GklParams& params() const { return params_; }
  std::int64_t period() const { return period_; }

  int color(std::int64_t m, std::int64_t n, Dir dir) const;
  int color(const Edge& e) const { return color(e.base.m, e.base.n, e.dir); }
  void set_color(std::int64_t m, std::int64_t n, Dir dir, int color);

  /// Checks that every vertex sees exactly two edges of each color; returns
  /// a witness vertex on failure.
  bool degree_condition(Vertex* witness = nullptr) const;

  std::vector<std::string>& provenance() { return provenance_; }
  const std::vector<std::string>& provenance() const { return provenance_; }
  void note(const std::string& line) { provenance_.push_back(line); }

  bool same_coloring(const Decomposition& other) const {
    return params_ == other.params_ && period_ == other.period_ && colors_ == other.colors_;
  }

 private:
  GklParams params_;
  std::int64_t period_ = 1;
  std::vector<std::uint8_t> colors_;  // values 1 / 2
  std::vector<std::string> provenance_;
};

/// The i-colored class of d as a periodic edge set (i = 1 or 2).
PeriodicEdgeSet class_edges(const Decomposition& d, int i);

Decomposition translate(const Decomposition& d, std::int64_t dm, std::int64_t dn);

/// Decomposition with both classes stored at the smallest common period.
Decomposition minimize_period(const Decomposition& d);

/// Carry a decomposition through an isomorphism chain.  The period is
/// recomputed step by step (a Transpose turns Up^p-invariance into
/// invariance under the target's Up^{k*p/gcd(p,l)}) and minimized at the
/// end.  Throws ChainMismatch when the chain does not start at d's params.
Decomposition transport(const Decomposition& d, const IsomorphismChain& chain);

/// The four edges incident to window vertex (m, n) with 0 <= n < p, as
/// window edges (wrap-aware).  Order: up, down, right, left.
std::vector<WindowEdge> incident_window_edges(const GklParams& params, std::int64_t p,
                                              std::int64_t m, std::int64_t n);

// ---------------------------------------------------------------------------
// Canonical JSON encoding (the bit-exact fixture/golden-file contract):
// { "k": int, "l": int, "period": int,
//   "edges": [ { "m":, "n":, "dir": "H"|"V", "color": 1|2 }, ... ] }
// with edges sorted by (n, m, dir) and exactly 2*k*period entries.

std::string to_json(const Decomposition& d);
Decomposition decomposition_from_json(const std::string& text);

}  // namespace hamcay
