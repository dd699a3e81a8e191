#include "hamcay/constructor.hpp"

#include <algorithm>
#include <sstream>

namespace hamcay {

namespace {

bool in_wrap_lattice(const GklParams& p, std::int64_t x, std::int64_t y) {
  // (x, y) in <(k,l)>  <=>  k | x and the matching multiple hits y exactly.
  if (x % p.k != 0) return false;
  return (x / p.k) * p.l == y;
}

std::vector<std::pair<int, int>> target_pairs(Mode mode) {
  switch (mode) {
    case Mode::DoubleRays:
      return {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    case Mode::Circles:
      return {{2, 2}, {2, -2}, {-2, 2}, {-2, -2}};
    case Mode::Mixed:
      // Class 1 as the double-ray first, then as the circle.
      return {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}, {2, 1}, {2, -1}, {-2, 1}, {-2, -1}};
    case Mode::Auto:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "lift needs a concrete mode");
}

}  // namespace

std::optional<LiftSpec> solve_lift_spec(const GklParams& params, Mode mode) {
  const std::int64_t q = std::abs(params.k + params.l);
  if (q < 3) return std::nullopt;
  for (auto [t1, t2] : target_pairs(mode)) {
    for (std::int64_t a = 0; a <= q; ++a) {
      std::int64_t b = q - a;
      if (!in_wrap_lattice(params, a + t1, b - t1)) continue;
      if (!in_wrap_lattice(params, b + t2, a - t2)) continue;
      return LiftSpec{params, q, a, b, t1, t2};
    }
  }
  return std::nullopt;
}

Decomposition lift_base(const GklParams& params, Mode mode) {
  require_four_regular(params);
  const std::int64_t q = std::abs(params.k + params.l);
  if (q < 3)
    throw Error(ErrorCode::QuotientTooSmall,
                "diagonal quotient has order " + std::to_string(q) + " < 3");
  auto spec = solve_lift_spec(params, mode);
  if (!spec)
    throw Error(ErrorCode::NoLiftSolution,
                "no label count lifts to " + to_string(mode) + " on G_{" +
                    std::to_string(params.k) + "," + std::to_string(params.l) + "}");

  // Horizontal labels on the lexicographically first a positions.  The coset
  // of vertex (m,n) in the diagonal quotient is (m+n) mod q, so class 1 holds
  // the H edges based in cosets [0,a) and the V edges based in cosets [a,q);
  // the complement has the labels swapped.
  Decomposition d(params, q);
  for (const auto& e : window_edges(params.k, q)) {
    std::int64_t coset = pos_mod(e.m + e.n, q);
    bool class1 = (e.dir == Dir::H) == (coset < spec->a);
    d.set_color(e.m, e.n, e.dir, class1 ? 1 : 2);
  }
  std::ostringstream os;
  os << "lift_base(" << params.k << "," << params.l << "," << to_string(mode) << ") a=" << spec->a
     << " b=" << spec->b << " t1=" << spec->t1 << " t2=" << spec->t2;
  d.note(os.str());

  if (!verify(d, mode))
    throw Error(ErrorCode::VerificationRegression, "lift output failed verification");
  return d;
}

namespace {

Mode derive_mode(const Decomposition& d, Verdict* out = nullptr) {
  for (Mode m : {Mode::DoubleRays, Mode::Circles, Mode::Mixed}) {
    Verdict v = verify(d, m);
    if (v) {
      if (out) *out = v;
      return m;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "decomposition is not of any recognized kind");
}

}  // namespace

ExtensionTrace extension_trace(const Decomposition& d) {
  PrevalenceReport rep = prevalence(d);
  if (rep.both_h_columns.empty())
    throw Error(ErrorCode::NotPrevalent,
                "no vertical cut in which both classes prevail (no shared H-edge column)");
  ExtensionTrace tr;
  tr.cut_column = rep.both_h_columns.back();
  const std::int64_t p = d.period();
  tr.owner.resize(static_cast<std::size_t>(p));
  tr.gap.resize(static_cast<std::size_t>(p));
  for (std::int64_t n = 0; n < p; ++n)
    tr.owner[static_cast<std::size_t>(n)] = d.color(tr.cut_column, n, Dir::H);
  for (std::int64_t n = 0; n < p; ++n) {
    std::int64_t h = 1;
    while (h <= p && tr.owner[static_cast<std::size_t>(pos_mod(n + h, p))] !=
                         tr.owner[static_cast<std::size_t>(n)])
      ++h;
    tr.gap[static_cast<std::size_t>(n)] = h;  // h = p when the class owns only e_n
  }
  return tr;
}

Decomposition extend_k(const Decomposition& d) {
  Verdict input_verdict;
  Mode mode = derive_mode(d, &input_verdict);
  PrevalenceReport before = prevalence(d);
  ExtensionTrace tr = extension_trace(d);

  const GklParams old = d.params();
  const std::int64_t p = d.period();
  Decomposition rotated =
      tr.cut_column == old.k - 1 ? d : translate(d, old.k - 1 - tr.cut_column, 0);
  if (tr.cut_column != old.k - 1) tr = extension_trace(rotated);  // gaps at column k-1 now

  const GklParams next{old.k + 2, old.l};
  Decomposition out(next, p);
  std::vector<bool> assigned(static_cast<std::size_t>(2 * next.k * p), false);
  auto assign = [&](std::int64_t m, std::int64_t n, Dir dir, int color) {
    std::size_t idx = window_index(next.k, p, m, pos_mod(n, p), dir);
    if (assigned[idx])
      throw Error(ErrorCode::VerificationRegression, "extension walks are not edge-disjoint");
    assigned[idx] = true;
    out.set_color(m, n, dir, color);
  };

  // Old columns carry over unchanged (the cut edges at column k-1 keep their
  // color as the first edge of each walk).
  for (const auto& e : window_edges(old.k, p)) assign(e.m, e.n, e.dir, rotated.color(e.m, e.n, e.dir));

  // Walk (k-1,n) [R] [U]^{h-1} [R] [D]^{h-1} [R] for each wrap edge e_n.
  for (std::int64_t n = 0; n < p; ++n) {
    int color = tr.owner[static_cast<std::size_t>(n)];
    std::int64_t h = tr.gap[static_cast<std::size_t>(n)];
    for (std::int64_t j = 0; j + 1 < h; ++j) {
      assign(old.k, n + j, Dir::V, color);
      assign(old.k + 1, n + j, Dir::V, color);
    }
    assign(old.k, n + h - 1, Dir::H, color);
    assign(old.k + 1, n, Dir::H, color);
  }
  for (bool a : assigned)
    if (!a) throw Error(ErrorCode::VerificationRegression, "extension walks left an edge uncolored");

  out.provenance() = d.provenance();
  out.note("extend_k cut_column=" + std::to_string(tr.cut_column) + " -> (" +
           std::to_string(next.k) + "," + std::to_string(next.l) + ")");

  Verdict v = verify(out, mode);
  if (!v)
    throw Error(ErrorCode::VerificationRegression, "extension broke verification: " + v.failure);
  PrevalenceReport after = prevalence(out);
  if (!after.vertically_prevalent)
    throw Error(ErrorCode::VerificationRegression, "extension lost vertical prevalence");
  if (before.horizontally_prevalent && !after.horizontally_prevalent)
    throw Error(ErrorCode::VerificationRegression, "extension lost horizontal prevalence");
  return out;
}

Decomposition extend_l(const Decomposition& d) {
  const GklParams old = d.params();
  if (old.l <= 0) throw Error(ErrorCode::LNotPositive, "the l-extension needs l > 0");
  PrevalenceReport rep = prevalence(d);
  if (!rep.horizontally_prevalent)
    throw Error(ErrorCode::NotPrevalent,
                "both classes need a V edge in every column for the l-extension");
  Mode mode = derive_mode(d);

  Decomposition t = transport(d, transpose_chain(old));
  Decomposition extended = extend_k(t);
  Decomposition back = transport(extended, transpose_chain(extended.params()));
  back.note("extend_l -> (" + std::to_string(back.params().k) + "," +
            std::to_string(back.params().l) + ")");

  Verdict v = verify(back, mode);
  if (!v)
    throw Error(ErrorCode::VerificationRegression, "l-extension broke verification: " + v.failure);
  return back;
}

// ---------------------------------------------------------------------------
// Bounded exhaustive search.

namespace {

struct SearchContext {
  GklParams params;
  std::int64_t p;
  Mode mode;
  const SearchOptions* opts;
  std::vector<WindowEdge> edges;
  // Endpoint vertex ids per edge (a self-loop lists the same vertex twice).
  std::vector<std::array<std::size_t, 2>> ends;
  std::vector<std::array<int, 2>> count;  // per vertex: edges of color 1 / 2
  Decomposition candidate;
  std::optional<Decomposition> result;

  bool place(std::size_t idx, int color) {
    for (std::size_t v : ends[idx])
      if (++count[v][color - 1] > 2) return false;
    return true;
  }
  void unplace(std::size_t idx, int color) {
    for (std::size_t v : ends[idx]) --count[v][color - 1];
  }

  void dfs(std::size_t idx) {
    if (result) return;
    if (idx == edges.size()) {
      Verdict v = verify(candidate, mode);
      if (!v) return;
      if (opts->require_bi_prevalent && !prevalence(candidate).bi_prevalent) return;
      result = candidate;
      return;
    }
    const auto& e = edges[idx];
    for (int color : {1, 2}) {
      bool ok = place(idx, color);
      if (ok) {
        candidate.set_color(e.m, e.n, e.dir, color);
        dfs(idx + 1);
      }
      unplace(idx, color);
      if (result) return;
    }
  }
};

}  // namespace

std::optional<Decomposition> search_decomposition(const GklParams& params, std::int64_t p_max,
                                                  Mode mode, const SearchOptions& opts) {
  require_four_regular(params);
  if (mode == Mode::Auto) throw Error(ErrorCode::InvalidArgument, "search needs a concrete mode");
  if (2 * params.k * p_max > opts.max_window_edges)
    throw Error(ErrorCode::BudgetExceeded,
                "window would have " + std::to_string(2 * params.k * p_max) + " edges > budget " +
                    std::to_string(opts.max_window_edges));

  for (std::int64_t p = 1; p <= p_max; ++p) {
    SearchContext ctx{params, p, mode, &opts, window_edges(params.k, p), {}, {}, Decomposition(params, p), {}};
    ctx.ends.reserve(ctx.edges.size());
    for (const auto& e : ctx.edges) {
      std::size_t a, b;
      if (e.dir == Dir::V) {
        a = static_cast<std::size_t>(e.n * params.k + e.m);
        b = static_cast<std::size_t>(pos_mod(e.n + 1, p) * params.k + e.m);
      } else if (e.m < params.k - 1) {
        a = static_cast<std::size_t>(e.n * params.k + e.m);
        b = static_cast<std::size_t>(e.n * params.k + e.m + 1);
      } else {
        a = static_cast<std::size_t>(e.n * params.k + e.m);
        b = static_cast<std::size_t>(pos_mod(e.n - params.l, p) * params.k);
      }
      ctx.ends.push_back({a, b});
    }
    ctx.count.assign(static_cast<std::size_t>(params.k * p), {0, 0});
    ctx.dfs(0);
    if (ctx.result) {
      ctx.result->note("search_decomposition(" + std::to_string(params.k) + "," +
                       std::to_string(params.l) + ",p=" + std::to_string(p) + "," +
                       to_string(mode) + ")");
      return ctx.result;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Planner.

namespace {

Decomposition plan_normalized(const GklParams& g, Mode mode) {
  const std::int64_t k = g.k, l = g.l;
  Decomposition d;

  auto from_fixture = [](const std::string& name) { return base_pattern(name).decomposition; };

  switch (mode) {
    case Mode::DoubleRays: {
      if (k == 2 && l == 2) return from_fixture("G22_rays");
      if (l == 0) {
        d = from_fixture("G40_rays");
      } else {
        std::int64_t l0 = (l % 2 == 1) ? 1 : 2;
        d = lift_base(GklParams{l0 + 2, l0}, Mode::DoubleRays);
      }
      break;
    }
    case Mode::Circles: {
      if (k == 2 && l == 2) return from_fixture("G22_circles");
      if (l == 0) {
        d = lift_base(GklParams{4, 0}, Mode::Circles);
      } else if (l % 2 == 0) {
        d = from_fixture("G42_circles");
      } else {
        // The direct lift for circles with odd shear degenerates (on (3,1)
        // the complement sum is the identity and lifts to finite cycles), so
        // this branch starts from a searched, machine-verified pattern.
        d = from_fixture("G31_circles");
      }
      break;
    }
    case Mode::Mixed: {
      if (k == 2 && l == 1) return from_fixture("G21_mixed");
      if (k == 3 && l == 2) return lift_base(GklParams{3, 2}, Mode::Mixed);
      if (l == 0) {
        d = lift_base(GklParams{3, 0}, Mode::Mixed);
      } else {
        std::int64_t l0 = (l % 2 == 1) ? 1 : 2;
        d = lift_base(GklParams{l0 + 3, l0}, Mode::Mixed);
      }
      break;
    }
    case Mode::Auto:
      throw Error(ErrorCode::InvalidArgument, "plan needs a concrete mode");
  }

  while (d.params().l < l) d = extend_l(d);
  while (d.params().k < k) d = extend_k(d);
  if (!(d.params() == g))
    throw Error(ErrorCode::VerificationRegression, "planner missed the target parameters");
  return d;
}

}  // namespace

Decomposition decompose(const GklParams& params, Mode mode, const DecomposeOptions& opts) {
  require_four_regular(params);
  auto [norm, chain] = normalize(params);
  const bool parity_even = pos_mod(norm.k - norm.l, 2) == 0;
  if (mode == Mode::Auto) mode = parity_even ? opts.auto_preference : Mode::Mixed;

  const std::int64_t cut_size = norm.k + std::abs(norm.l);
  if ((mode == Mode::DoubleRays || mode == Mode::Circles) && !parity_even)
    throw Error(ErrorCode::ParityMismatch,
                to_string(mode) + " impossible: the level cut has " + std::to_string(cut_size) +
                    " edges (odd), but each spanning double-ray crosses a two-sided finite cut "
                    "an odd number of times and each Hamiltonian circle an even number, so two "
                    "of a kind need every finite cut even");
  if (mode == Mode::Mixed && parity_even)
    throw Error(ErrorCode::ParityMismatch,
                "mixed impossible: every finite cut of this graph is even (level cut has " +
                    std::to_string(cut_size) +
                    " edges), but a double-ray plus a circle crosses some finite cut an odd "
                    "number of times in total");

  Decomposition d = plan_normalized(norm, mode);
  if (!chain.steps.empty()) {
    d = transport(d, chain.inverse());
    d.note("mapped back to user coordinates (" + std::to_string(params.k) + "," +
           std::to_string(params.l) + ") via " + chain.inverse().describe());
  }
  if (opts.verify_result) {
    Verdict v = verify(d, mode);
    if (!v)
      throw Error(ErrorCode::VerificationRegression,
                  "constructed decomposition failed verification: " + v.failure);
  }
  return d;
}

}  // namespace hamcay
