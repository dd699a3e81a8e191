#include "hamcay/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace hamcay {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t pos_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

GeneratorWord GeneratorWord::fromLetters(std::vector<Gen> letters) {
  GeneratorWord w;
  w.blocks.push_back(WordBlock{std::move(letters), 1});
  return w;
}

std::vector<Gen> GeneratorWord::flatten() const {
  std::vector<Gen> out;
  for (const auto& b : blocks) {
    for (std::int64_t r = 0; r < b.repeat; ++r)
      out.insert(out.end(), b.letters.begin(), b.letters.end());
  }
  return out;
}

std::string to_string(Gen g) {
  switch (g) {
    case Gen::Right: return "R";
    case Gen::Up: return "U";
    case Gen::Left: return "L";
    case Gen::Down: return "D";
  }
  return "?";
}

Vertex canonicalize(const GklParams& p, std::int64_t m, std::int64_t n) {
  if (p.k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  std::int64_t t = floor_div(m, p.k);
  return Vertex{m - t * p.k, n - t * p.l};
}

Vertex step(const GklParams& p, const Vertex& v, Gen g) {
  switch (g) {
    case Gen::Right: return canonicalize(p, v.m + 1, v.n);
    case Gen::Left: return canonicalize(p, v.m - 1, v.n);
    case Gen::Up: return canonicalize(p, v.m, v.n + 1);
    case Gen::Down: return canonicalize(p, v.m, v.n - 1);
  }
  return v;
}

bool is_four_regular(const GklParams& p) {
  if (p.k < 1) return false;
  Vertex o{0, 0};
  std::vector<Vertex> img = {step(p, o, Gen::Right), step(p, o, Gen::Left), step(p, o, Gen::Up),
                             step(p, o, Gen::Down)};
  std::set<Vertex> distinct(img.begin(), img.end());
  if (distinct.size() != 4) return false;
  return distinct.find(o) == distinct.end();
}

void require_four_regular(const GklParams& p) {
  if (!is_four_regular(p))
    throw Error(ErrorCode::NotFourRegular,
                "G_{" + std::to_string(p.k) + "," + std::to_string(p.l) + "} is not 4-regular");
}

std::vector<Vertex> neighbors(const GklParams& p, const Vertex& v) {
  std::vector<Vertex> img = {step(p, v, Gen::Right), step(p, v, Gen::Left), step(p, v, Gen::Up),
                             step(p, v, Gen::Down)};
  std::set<Vertex> distinct(img.begin(), img.end());
  if (distinct.size() != 4 || distinct.count(v))
    throw Error(ErrorCode::NotFourRegular, "generator images are not 4 distinct vertices");
  return img;
}

std::vector<Vertex> apply_word(const GklParams& p, const Vertex& start, const GeneratorWord& word) {
  std::vector<Vertex> walk = {canonicalize(p, start.m, start.n)};
  for (Gen g : word.flatten()) walk.push_back(step(p, walk.back(), g));
  return walk;
}

bool satisfies_parity_P(const GklParams& p) {
  require_four_regular(p);
  return pos_mod(p.k - p.l, 2) == 0;
}

std::vector<Edge> level_cut(const GklParams& p, std::int64_t c) {
  require_four_regular(p);
  std::vector<Edge> cut;
  for (std::int64_t m = 0; m < p.k; ++m) cut.push_back(Edge{Vertex{m, c - 1}, Dir::V});
  // Wrap edge (k-1,n)--(0,n-l) straddles level c when exactly one of n, n-l
  // lies below it.
  if (p.l > 0) {
    for (std::int64_t n = c; n < c + p.l; ++n) cut.push_back(Edge{Vertex{p.k - 1, n}, Dir::H});
  } else if (p.l < 0) {
    for (std::int64_t n = c + p.l; n < c; ++n) cut.push_back(Edge{Vertex{p.k - 1, n}, Dir::H});
  }
  return cut;
}

std::vector<Vertex> endpoints(const GklParams& p, const Edge& e) {
  if (e.dir == Dir::V) return {e.base, canonicalize(p, e.base.m, e.base.n + 1)};
  return {e.base, canonicalize(p, e.base.m + 1, e.base.n)};
}

Edge edge_between(const GklParams& p, const Vertex& u, const Vertex& w) {
  if (step(p, u, Gen::Right) == w) return Edge{u, Dir::H};
  if (step(p, u, Gen::Left) == w) return Edge{w, Dir::H};
  if (step(p, u, Gen::Up) == w) return Edge{u, Dir::V};
  if (step(p, u, Gen::Down) == w) return Edge{w, Dir::V};
  throw Error(ErrorCode::InvalidArgument, "vertices are not adjacent");
}

// ---------------------------------------------------------------------------
// Isomorphism chains.

namespace {

GklParams step_target(const GklParams& p, const IsoStep& s) {
  switch (s.kind) {
    case IsoKind::Identity:
    case IsoKind::Translate:
      return p;
    case IsoKind::Flip:
      return GklParams{p.k, -p.l};
    case IsoKind::Transpose:
      if (p.l <= 0)
        throw Error(ErrorCode::ChainMismatch, "transpose requires l > 0");
      return GklParams{p.l, p.k};
  }
  return p;
}

Vertex step_vertex(const GklParams& src, const IsoStep& s, const Vertex& v) {
  GklParams dst = step_target(src, s);
  switch (s.kind) {
    case IsoKind::Identity: return v;
    case IsoKind::Flip: return canonicalize(dst, v.m, -v.n);
    case IsoKind::Transpose: return canonicalize(dst, v.n, v.m);
    case IsoKind::Translate: return canonicalize(dst, v.m + s.dm, v.n + s.dn);
  }
  return v;
}

Edge step_edge(const GklParams& src, const IsoStep& s, const Edge& e) {
  GklParams dst = step_target(src, s);
  switch (s.kind) {
    case IsoKind::Identity:
      return e;
    case IsoKind::Flip:
      // {(m,n),(m,n+1)} -> {(m,-n),(m,-n-1)}; H edges keep their base column.
      if (e.dir == Dir::V) return Edge{canonicalize(dst, e.base.m, -e.base.n - 1), Dir::V};
      return Edge{canonicalize(dst, e.base.m, -e.base.n), Dir::H};
    case IsoKind::Transpose:
      // H edges {v, v+R} map to V edges {T(v), T(v)+U} and vice versa.
      return Edge{step_vertex(src, s, e.base), e.dir == Dir::H ? Dir::V : Dir::H};
    case IsoKind::Translate:
      return Edge{step_vertex(src, s, e.base), e.dir};
  }
  return e;
}

IsoStep invert_step(const IsoStep& s) {
  if (s.kind == IsoKind::Translate) return IsoStep{IsoKind::Translate, -s.dm, -s.dn};
  return s;  // Identity, Flip, Transpose are involutive as coordinate maps
}

}  // namespace

IsomorphismChain identity_chain(const GklParams& p) { return IsomorphismChain{p, p, {}}; }

IsomorphismChain flip_chain(const GklParams& p) {
  return IsomorphismChain{p, GklParams{p.k, -p.l}, {IsoStep{IsoKind::Flip}}};
}

IsomorphismChain transpose_chain(const GklParams& p) {
  if (p.l <= 0) throw Error(ErrorCode::ChainMismatch, "transpose requires l > 0");
  return IsomorphismChain{p, GklParams{p.l, p.k}, {IsoStep{IsoKind::Transpose}}};
}

IsomorphismChain translate_chain(const GklParams& p, std::int64_t dm, std::int64_t dn) {
  return IsomorphismChain{p, p, {IsoStep{IsoKind::Translate, dm, dn}}};
}

IsomorphismChain compose(const IsomorphismChain& a, const IsomorphismChain& b) {
  if (!(a.target == b.source))
    throw Error(ErrorCode::ChainMismatch, "chain composition endpoint mismatch");
  IsomorphismChain c{a.source, b.target, a.steps};
  c.steps.insert(c.steps.end(), b.steps.begin(), b.steps.end());
  return c;
}

IsomorphismChain IsomorphismChain::inverse() const {
  IsomorphismChain inv{target, source, {}};
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) inv.steps.push_back(invert_step(*it));
  return inv;
}

std::string IsomorphismChain::describe() const {
  if (steps.empty()) return "Identity";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : steps) {
    if (!first) os << " . ";
    first = false;
    switch (s.kind) {
      case IsoKind::Identity: os << "Identity"; break;
      case IsoKind::Flip: os << "Flip"; break;
      case IsoKind::Transpose: os << "Transpose"; break;
      case IsoKind::Translate: os << "Translate(" << s.dm << "," << s.dn << ")"; break;
    }
  }
  return os.str();
}

std::pair<GklParams, IsomorphismChain> normalize(const GklParams& p) {
  require_four_regular(p);
  IsomorphismChain chain = identity_chain(p);
  GklParams cur = p;
  if (cur.l < 0) {
    chain = compose(chain, flip_chain(cur));
    cur = chain.target;
  }
  if (cur.l > cur.k) {
    chain = compose(chain, transpose_chain(cur));
    cur = chain.target;
  }
  return {cur, chain};
}

Vertex map_through(const IsomorphismChain& chain, const Vertex& v) {
  GklParams cur = chain.source;
  Vertex x = canonicalize(cur, v.m, v.n);
  for (const auto& s : chain.steps) {
    x = step_vertex(cur, s, x);
    cur = step_target(cur, s);
  }
  return x;
}

Edge map_through(const IsomorphismChain& chain, const Edge& e) {
  GklParams cur = chain.source;
  Edge x = e;
  for (const auto& s : chain.steps) {
    x = step_edge(cur, s, x);
    cur = step_target(cur, s);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Smith normal form and classification.

std::vector<std::int64_t> smith_invariants(std::vector<std::vector<std::int64_t>> mat) {
  std::size_t rows = mat.size();
  std::size_t cols = rows ? mat[0].size() : 0;
  std::vector<std::int64_t> inv;
  std::size_t r0 = 0, c0 = 0;
  while (r0 < rows && c0 < cols) {
    // Find a nonzero pivot in the remaining block.
    std::size_t pr = r0, pc = c0;
    bool found = false;
    for (std::size_t i = r0; i < rows && !found; ++i)
      for (std::size_t j = c0; j < cols && !found; ++j)
        if (mat[i][j] != 0) { pr = i; pc = j; found = true; }
    if (!found) break;
    std::swap(mat[r0], mat[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(mat[i][c0], mat[i][pc]);
    // Euclidean elimination of row r0 / column c0.
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = r0 + 1; i < rows; ++i) {
        while (mat[i][c0] != 0) {
          std::int64_t q = floor_div(mat[i][c0], mat[r0][c0]);
          for (std::size_t j = c0; j < cols; ++j) mat[i][j] -= q * mat[r0][j];
          if (mat[i][c0] != 0) std::swap(mat[i], mat[r0]);
        }
      }
      for (std::size_t j = c0 + 1; j < cols; ++j) {
        while (mat[r0][j] != 0) {
          std::int64_t q = floor_div(mat[r0][j], mat[r0][c0]);
          for (std::size_t i = r0; i < rows; ++i) mat[i][j] -= q * mat[i][c0];
          if (mat[r0][j] != 0) {
            for (std::size_t i = r0; i < rows; ++i) std::swap(mat[i][j], mat[i][c0]);
            again = true;
          }
        }
      }
    }
    inv.push_back(mat[r0][c0] < 0 ? -mat[r0][c0] : mat[r0][c0]);
    ++r0;
    ++c0;
  }
  // Enforce the divisibility chain d_1 | d_2 | ...
  for (std::size_t i = 0; i + 1 < inv.size(); ++i) {
    for (std::size_t j = i + 1; j < inv.size(); ++j) {
      std::int64_t g = std::gcd(inv[i], inv[j]);
      std::int64_t m = (g == 0) ? 0 : inv[i] / g * inv[j];
      inv[i] = g;
      inv[j] = m;
    }
  }
  return inv;
}

namespace {

bool generates(std::int64_t torsion, const GroupElem& a, const GroupElem& b) {
  if (torsion == 0) {
    std::int64_t det = a.x * b.y - a.y * b.x;
    return det == 1 || det == -1;
  }
  if (torsion == 1) return std::gcd(a.x, b.x) == 1;
  auto inv = smith_invariants({{a.x, a.y}, {b.x, b.y}, {0, torsion}});
  return inv.size() == 2 && inv[0] == 1 && inv[1] == 1;
}

}  // namespace

ClassificationResult classify_generators(std::int64_t torsion, GroupElem a, GroupElem b) {
  if (torsion < 0) throw Error(ErrorCode::InvalidArgument, "torsion must be >= 0");
  if (torsion == 1) { a.y = 0; b.y = 0; }
  if (torsion >= 2) { a.y = pos_mod(a.y, torsion); b.y = pos_mod(b.y, torsion); }
  if (!generates(torsion, a, b))
    throw Error(ErrorCode::NotGenerating, "the two elements do not generate the group");

  ClassificationResult res;
  if (torsion == 0) {
    // Generating pairs of Z^2 are unimodular, so the kernel is trivial.
    res.tag = ClassificationResult::Tag::SquareGrid;
    res.iso = "right=a, up=b";
    return res;
  }

  // Kernel of (x,y) |-> x*a + y*b on Z + Z_torsion.  The free coordinate
  // pins the solutions of x*a.x + y*b.x = 0 to multiples of d; the torsion
  // coordinate then thins them by an extra integer factor.
  std::int64_t g = std::gcd(a.x, b.x);
  // g = 0 would mean a.x = b.x = 0, which cannot generate the Z factor.
  std::int64_t dx = b.x / g, dy = -a.x / g;
  std::int64_t mult = 1;
  if (torsion >= 2) {
    std::int64_t s = pos_mod(dx * a.y + dy * b.y, torsion);
    mult = torsion / std::gcd(s, torsion);
  }
  std::int64_t K = mult * dx, L = mult * dy;
  if (K < 0 || (K == 0 && L < 0)) { K = -K; L = -L; }

  res.iso = "right=a, up=b";
  if (K == 0) {
    // Kernel generated by (0,L): swap the generator roles so the wrap
    // relation lands on the first coordinate.
    std::swap(K, L);
    res.iso = "axes swapped (right=b, up=a)";
  }
  res.params = GklParams{K, L};
  if (is_four_regular(res.params)) {
    res.tag = ClassificationResult::Tag::Gkl;
  } else {
    res.tag = ClassificationResult::Tag::NotFourRegularInfinite;
    res.reason = "kernel generator (" + std::to_string(K) + "," + std::to_string(L) +
                 ") gives a degenerate (non-4-regular) graph";
  }
  return res;
}

}  // namespace hamcay
