#include "hamcay/verifier.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hamcay {

namespace {

struct QEndpoints {
  std::int64_t am, an;  // A-side window vertex
  std::int64_t bm, bn;  // B-side window vertex
  std::int64_t delta;   // vertical displacement traversing A -> B
};

QEndpoints quotient_endpoints(const GklParams& params, std::int64_t p, const WindowEdge& e) {
  if (e.dir == Dir::V) return {e.m, e.n, e.m, pos_mod(e.n + 1, p), 1};
  if (e.m < params.k - 1) return {e.m, e.n, e.m + 1, e.n, 0};
  return {e.m, e.n, 0, pos_mod(e.n - params.l, p), -params.l};
}

std::string vertex_str(std::int64_t m, std::int64_t n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

}  // namespace

ComponentReport quotient_components(const PeriodicEdgeSet& s) {
  const GklParams& params = s.params();
  const std::int64_t k = params.k, p = s.period();
  const auto edges = window_edges(k, p);

  // Slot table: each member edge contributes an A-slot and a B-slot; a vertex
  // is 2-regular iff it owns exactly two member slots.
  struct Slot {
    std::size_t edge;
    bool a_side;
  };
  auto vid = [&](std::int64_t m, std::int64_t n) { return static_cast<std::size_t>(n * k + m); };
  std::vector<std::vector<Slot>> slots(static_cast<std::size_t>(k * p));
  std::vector<QEndpoints> ends(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!s.member(edges[i].m, edges[i].n, edges[i].dir)) continue;
    ends[i] = quotient_endpoints(params, p, edges[i]);
    slots[vid(ends[i].am, ends[i].an)].push_back(Slot{i, true});
    slots[vid(ends[i].bm, ends[i].bn)].push_back(Slot{i, false});
  }
  for (std::int64_t n = 0; n < p; ++n)
    for (std::int64_t m = 0; m < k; ++m)
      if (slots[vid(m, n)].size() != 2)
        throw Error(ErrorCode::InvalidArgument,
                    "NotTwoRegular: vertex " + vertex_str(m, n) + " has " +
                        std::to_string(slots[vid(m, n)].size()) + " member edges");

  ComponentReport report;
  report.window_vertices = k * p;
  std::vector<bool> visited(edges.size(), false);
  std::set<std::size_t> covered_all;

  for (std::size_t start = 0; start < edges.size(); ++start) {
    if (!s.member(edges[start].m, edges[start].n, edges[start].dir) || visited[start]) continue;
    QuotientCycle cyc;
    std::set<std::size_t> covered;
    std::int64_t disp = 0;
    std::size_t cur = start;
    bool from_a = true;
    covered.insert(vid(ends[start].am, ends[start].an));
    while (true) {
      visited[cur] = true;
      cyc.edge_indices.push_back(cur);
      ++cyc.length;
      disp += from_a ? ends[cur].delta : -ends[cur].delta;
      std::size_t v =
          from_a ? vid(ends[cur].bm, ends[cur].bn) : vid(ends[cur].am, ends[cur].an);
      covered.insert(v);
      // Leave through the other member slot at the arrival vertex.
      const auto& sl = slots[v];
      Slot next = (sl[0].edge == cur && sl[0].a_side == !from_a) ? sl[1] : sl[0];
      if (next.edge == start && next.a_side) break;  // back at the initial slot
      cur = next.edge;
      from_a = next.a_side;
    }
    if (pos_mod(disp, p) != 0)
      throw Error(ErrorCode::VerificationRegression,
                  "trajectory displacement not a multiple of the period");
    cyc.winding = disp / p;
    for (std::size_t v : covered) {
      cyc.covered.push_back(Vertex{static_cast<std::int64_t>(v % static_cast<std::size_t>(k)),
                                   static_cast<std::int64_t>(v / static_cast<std::size_t>(k))});
      covered_all.insert(v);
    }
    std::sort(cyc.covered.begin(), cyc.covered.end());
    report.cycles.push_back(std::move(cyc));
  }
  report.covered_vertices = static_cast<std::int64_t>(covered_all.size());
  return report;
}

std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::HamiltonianDoubleRay: return "double_ray";
    case ClassKind::HamiltonianCircle: return "circle";
    case ClassKind::Other: return "other";
  }
  return "?";
}

std::string to_string(OtherReason r) {
  switch (r) {
    case OtherReason::None: return "none";
    case OtherReason::FiniteCycle: return "finite_cycle";
    case OtherReason::TooManyComponents: return "too_many_components";
    case OtherReason::NotSpanning: return "not_spanning";
    case OtherReason::NotTwoRegular: return "not_two_regular";
  }
  return "?";
}

ClassVerdict classify_class(const PeriodicEdgeSet& s) {
  ClassVerdict v;
  // All failure modes are verdicts, so check 2-regularity up front.
  const std::int64_t k = s.params().k, p = s.period();
  for (std::int64_t n = 0; n < p; ++n)
    for (std::int64_t m = 0; m < k; ++m) {
      int deg = 0;
      for (const auto& e : incident_window_edges(s.params(), p, m, n))
        if (s.member(e.m, e.n, e.dir)) ++deg;
      if (deg != 2) {
        v.kind = ClassKind::Other;
        v.reason = OtherReason::NotTwoRegular;
        v.witness = "vertex " + vertex_str(m, n) + " has degree " + std::to_string(deg);
        return v;
      }
    }

  v.report = quotient_components(s);
  const auto& cycles = v.report.cycles;
  bool spanning = v.report.spanning();

  if (cycles.size() == 1 && spanning && std::abs(cycles[0].winding) == 1) {
    v.kind = ClassKind::HamiltonianDoubleRay;
    return v;
  }
  bool two_rays = cycles.size() == 2 && spanning && std::abs(cycles[0].winding) == 1 &&
                  std::abs(cycles[1].winding) == 1;
  bool one_double = cycles.size() == 1 && spanning && std::abs(cycles[0].winding) == 2;
  if (two_rays || one_double) {
    v.kind = ClassKind::HamiltonianCircle;
    return v;
  }
  v.kind = ClassKind::Other;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].winding == 0) {
      v.reason = OtherReason::FiniteCycle;
      v.witness = "trajectory " + std::to_string(i) + " (length " +
                  std::to_string(cycles[i].length) + ") has winding 0";
      return v;
    }
  }
  if (!spanning) {
    v.reason = OtherReason::NotSpanning;
    v.witness = "covers " + std::to_string(v.report.covered_vertices) + " of " +
                std::to_string(v.report.window_vertices) + " window vertices";
    return v;
  }
  v.reason = OtherReason::TooManyComponents;
  std::int64_t lifted = 0;
  for (const auto& c : cycles) lifted += std::abs(c.winding);
  v.witness = std::to_string(cycles.size()) + " trajectories lifting to " +
              std::to_string(lifted) + " double-rays";
  return v;
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::DoubleRays: return "rays";
    case Mode::Circles: return "circles";
    case Mode::Mixed: return "mixed";
    case Mode::Auto: return "auto";
  }
  return "?";
}

std::optional<Mode> mode_from_string(const std::string& s) {
  if (s == "rays") return Mode::DoubleRays;
  if (s == "circles") return Mode::Circles;
  if (s == "mixed") return Mode::Mixed;
  if (s == "auto") return Mode::Auto;
  return std::nullopt;
}

Verdict verify(const Decomposition& d, Mode mode) {
  Verdict v;
  v.mode = mode;
  Vertex w;
  if (!d.degree_condition(&w)) {
    v.failure = "degree condition fails at vertex " + vertex_str(w.m, w.n);
    return v;
  }
  v.class1 = classify_class(class_edges(d, 1));
  v.class2 = classify_class(class_edges(d, 2));
  auto k1 = v.class1.kind, k2 = v.class2.kind;
  switch (mode) {
    case Mode::DoubleRays:
      v.pass = k1 == ClassKind::HamiltonianDoubleRay && k2 == ClassKind::HamiltonianDoubleRay;
      break;
    case Mode::Circles:
      v.pass = k1 == ClassKind::HamiltonianCircle && k2 == ClassKind::HamiltonianCircle;
      break;
    case Mode::Mixed:
      v.pass = (k1 == ClassKind::HamiltonianDoubleRay && k2 == ClassKind::HamiltonianCircle) ||
               (k1 == ClassKind::HamiltonianCircle && k2 == ClassKind::HamiltonianDoubleRay);
      break;
    case Mode::Auto:
      v.pass = false;
      v.failure = "verify needs a concrete mode";
      return v;
  }
  if (!v.pass) {
    std::ostringstream os;
    os << "class verdicts (" << to_string(k1) << ", " << to_string(k2) << ") do not match mode "
       << to_string(mode);
    if (v.class1.kind == ClassKind::Other) os << "; class 1: " << v.class1.witness;
    if (v.class2.kind == ClassKind::Other) os << "; class 2: " << v.class2.witness;
    v.failure = os.str();
  }
  return v;
}

namespace {

nlohmann::ordered_json class_verdict_json(const ClassVerdict& c) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(c.kind);
  if (c.kind == ClassKind::Other) {
    j["reason"] = to_string(c.reason);
    j["witness"] = c.witness;
  }
  nlohmann::ordered_json cycles = nlohmann::ordered_json::array();
  for (const auto& cyc : c.report.cycles) {
    nlohmann::ordered_json jc;
    jc["length"] = cyc.length;
    jc["winding"] = cyc.winding;
    jc["covered"] = cyc.covered.size();
    cycles.push_back(std::move(jc));
  }
  j["trajectories"] = std::move(cycles);
  return j;
}

}  // namespace

std::string to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["pass"] = v.pass;
  j["mode"] = to_string(v.mode);
  j["class1"] = class_verdict_json(v.class1);
  j["class2"] = class_verdict_json(v.class2);
  if (!v.pass) j["failure"] = v.failure;
  return j.dump(2) + "\n";
}

PrevalenceReport prevalence(const Decomposition& d) {
  PrevalenceReport r;
  const std::int64_t k = d.params().k, p = d.period();
  std::vector<std::set<std::int64_t>> hcols(2);
  std::vector<std::set<std::int64_t>> vcols(2);
  for (const auto& e : window_edges(k, p)) {
    int c = d.color(e.m, e.n, e.dir) - 1;
    (e.dir == Dir::H ? hcols[c] : vcols[c]).insert(e.m);
  }
  auto fill = [&](int c, ClassPrevalence& out) {
    out.h_columns.assign(hcols[c].begin(), hcols[c].end());
    out.horizontal = static_cast<std::int64_t>(vcols[c].size()) == k;
  };
  fill(0, r.class1);
  fill(1, r.class2);
  std::set_intersection(hcols[0].begin(), hcols[0].end(), hcols[1].begin(), hcols[1].end(),
                        std::back_inserter(r.both_h_columns));
  r.vertically_prevalent = !r.both_h_columns.empty();
  r.horizontally_prevalent = r.class1.horizontal && r.class2.horizontal;
  r.bi_prevalent = r.vertically_prevalent && r.horizontally_prevalent;
  return r;
}

std::string to_json(const PrevalenceReport& r) {
  nlohmann::ordered_json j;
  auto cls = [](const ClassPrevalence& c) {
    nlohmann::ordered_json jc;
    jc["h_columns"] = c.h_columns;
    jc["horizontal"] = c.horizontal;
    return jc;
  };
  j["class1"] = cls(r.class1);
  j["class2"] = cls(r.class2);
  j["both_h_columns"] = r.both_h_columns;
  j["vertically_prevalent"] = r.vertically_prevalent;
  j["horizontally_prevalent"] = r.horizontally_prevalent;
  j["bi_prevalent"] = r.bi_prevalent;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Window oracle.

namespace {

struct Truncation {
  GklParams params;
  std::int64_t N;
  std::int64_t k;

  std::int64_t vertex_count() const { return k * (2 * N + 1); }
  bool inside(const Vertex& v) const { return v.n >= -N && v.n <= N; }
  std::size_t id(const Vertex& v) const {
    return static_cast<std::size_t>((v.n + N) * k + v.m);
  }
  Vertex vertex(std::size_t id) const {
    return Vertex{static_cast<std::int64_t>(id) % k, static_cast<std::int64_t>(id) / k - N};
  }

  /// The four incident edges of v in the infinite graph, canonical form.
  std::vector<Edge> incident(const Vertex& v) const {
    std::vector<Edge> out;
    out.push_back(Edge{v, Dir::V});
    out.push_back(Edge{Vertex{v.m, v.n - 1}, Dir::V});
    out.push_back(Edge{v, Dir::H});
    if (v.m > 0)
      out.push_back(Edge{Vertex{v.m - 1, v.n}, Dir::H});
    else
      out.push_back(Edge{Vertex{params.k - 1, v.n + params.l}, Dir::H});
    return out;
  }

  Vertex other_endpoint(const Edge& e, const Vertex& v) const {
    auto ep = endpoints(params, e);
    return ep[0] == v ? ep[1] : ep[0];
  }
};

struct DSU {
  std::vector<std::size_t> parent;
  explicit DSU(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

OracleResult window_oracle(const Decomposition& d, std::int64_t N) {
  if (N < 3 * d.period())
    throw Error(ErrorCode::WindowTooSmall, "window oracle needs N >= 3 * period");
  OracleResult res;
  Vertex w;
  if (!d.degree_condition(&w)) {
    res.failure = "degree condition fails at vertex " + vertex_str(w.m, w.n);
    return res;
  }

  Truncation tr{d.params(), N, d.params().k};
  const std::int64_t band_endpoint = d.params().k + std::abs(d.params().l);
  // Components confined this close to a boundary are truncation artifacts
  // (one period of wiggle plus the reach of a wrap edge).
  const std::int64_t band_fragment = band_endpoint + d.period();

  for (int cls = 1; cls <= 2; ++cls) {
    ClassVerdict expected = classify_class(class_edges(d, cls));
    OracleClassObservation obs;

    DSU dsu(static_cast<std::size_t>(tr.vertex_count()));
    std::vector<int> degree(static_cast<std::size_t>(tr.vertex_count()), 0);
    for (std::int64_t n = -N; n <= N; ++n)
      for (std::int64_t m = 0; m < tr.k; ++m) {
        Vertex v{m, n};
        for (const Edge& e : tr.incident(v)) {
          if (d.color(e) != cls) continue;
          Vertex u = tr.other_endpoint(e, v);
          if (!tr.inside(u)) continue;
          ++degree[tr.id(v)];
          dsu.unite(tr.id(v), tr.id(u));
        }
      }

    struct CompStat {
      std::int64_t vertices = 0, degree_sum = 0;
      std::int64_t max_depth = 0;  // deepest vertex, measured from the boundary
      bool present = false;
    };
    std::map<std::size_t, CompStat> comps;
    for (std::size_t id = 0; id < degree.size(); ++id) {
      if (degree[id] == 0) {
        // Vertex with both class edges leaving the truncation; only legal in
        // the endpoint band.
        Vertex v = tr.vertex(id);
        std::int64_t depth = N - std::abs(v.n);
        if (depth > band_endpoint) {
          res.failure = "class " + std::to_string(cls) + ": interior vertex " +
                        vertex_str(v.m, v.n) + " isolated in the truncation";
          return res;
        }
        continue;
      }
      Vertex v = tr.vertex(id);
      auto& c = comps[dsu.find(id)];
      c.present = true;
      ++c.vertices;
      c.degree_sum += degree[id];
      c.max_depth = std::max(c.max_depth, N - std::abs(v.n));
      if (degree[id] < 2) {
        ++obs.path_endpoints;
        std::int64_t depth = N - std::abs(v.n);
        if (depth > band_endpoint) {
          res.failure = "class " + std::to_string(cls) + ": path endpoint " +
                        vertex_str(v.m, v.n) + " in the interior (depth " +
                        std::to_string(depth) + ")";
          return res;
        }
      }
    }
    for (auto& [root, c] : comps) {
      bool cycle = c.degree_sum == 2 * c.vertices;
      if (cycle) {
        obs.has_cycle = true;
      } else if (c.max_depth > band_fragment) {
        ++obs.interior_paths;
      } else {
        ++obs.fragments;
      }
    }

    bool ray_like = !obs.has_cycle && obs.interior_paths == 1;
    bool circle_like = !obs.has_cycle && obs.interior_paths == 2;
    bool agree = false;
    switch (expected.kind) {
      case ClassKind::HamiltonianDoubleRay: agree = ray_like; break;
      case ClassKind::HamiltonianCircle: agree = circle_like; break;
      case ClassKind::Other: agree = !ray_like && !circle_like; break;
    }
    if (!agree) {
      res.failure = "class " + std::to_string(cls) + ": truncation shape (cycles=" +
                    std::to_string(obs.has_cycle) + ", interior paths=" +
                    std::to_string(obs.interior_paths) + ") disagrees with verdict " +
                    to_string(expected.kind);
      (cls == 1 ? res.class1 : res.class2) = obs;
      return res;
    }
    (cls == 1 ? res.class1 : res.class2) = obs;
  }
  res.pass = true;
  return res;
}

// ---------------------------------------------------------------------------
// Small-cut enumeration.

namespace {

struct FlowGraph {
  struct Arc {
    int to;
    std::int64_t cap;
    std::size_t rev;
  };
  std::vector<std::vector<Arc>> adj;

  explicit FlowGraph(std::size_t n) : adj(n) {}

  void add_edge(int u, int v, std::int64_t cap_uv, std::int64_t cap_vu) {
    adj[u].push_back(Arc{v, cap_uv, adj[v].size()});
    adj[v].push_back(Arc{u, cap_vu, adj[u].size() - 1});
  }

  /// Edmonds-Karp, stopping as soon as the flow exceeds `limit`.
  std::int64_t max_flow(int s, int t, std::int64_t limit) {
    std::int64_t flow = 0;
    while (flow <= limit) {
      std::vector<std::pair<int, std::size_t>> parent(adj.size(), {-1, 0});
      std::queue<int> q;
      q.push(s);
      parent[s] = {s, 0};
      while (!q.empty() && parent[t].first < 0) {
        int u = q.front();
        q.pop();
        for (std::size_t i = 0; i < adj[u].size(); ++i) {
          const Arc& a = adj[u][i];
          if (a.cap > 0 && parent[a.to].first < 0) {
            parent[a.to] = {u, i};
            q.push(a.to);
          }
        }
      }
      if (parent[t].first < 0) break;
      for (int v = t; v != s;) {
        auto [u, i] = parent[v];
        adj[u][i].cap -= 1;
        adj[adj[u][i].to][adj[u][i].rev].cap += 1;
        v = u;
      }
      ++flow;
    }
    return flow;
  }

  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(adj.size(), false);
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Arc& a : adj[u])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          q.push(a.to);
        }
    }
    return seen;
  }
};

constexpr std::int64_t kInf = 1'000'000;

// One undirected truncation edge of the cut-search graph.
struct CutEdge {
  int u, v;  // contracted node ids (s = 0, t = 1)
  Edge original;
};

enum class EdgeState : std::uint8_t { Free, Uncut, CutUV, CutVU };

struct CutSolution {
  std::vector<std::size_t> cut;                       // all cut edge ids, sorted
  std::vector<std::pair<std::size_t, bool>> free_or;  // free cut edges + (u on A side)
};

struct CutSearch {
  std::vector<CutEdge> edges;
  std::int64_t budget = 0;
  std::int64_t node_budget = 0;
  std::size_t node_count = 0;
  bool complete = true;
  std::set<std::vector<std::size_t>> found;  // canonical edge-id sets
  std::size_t nodes_total = 0;

  // Solve the constrained min-cut problem: Uncut edges are contracted, CutUV /
  // CutVU edges are removed, counted, and their endpoints pinned to the s / t
  // side with infinite arcs.  Returns the canonical (s-reachable) min cut, or
  // nullopt when the constraints are contradictory or the value exceeds the
  // budget.
  std::optional<CutSolution> solve(const std::vector<EdgeState>& state) {
    DSU dsu(nodes_total);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (state[i] == EdgeState::Uncut) dsu.unite(edges[i].u, edges[i].v);

    std::vector<int> label(nodes_total, -1);
    int next = 0;
    auto mapped = [&](int raw) {
      std::size_t r = dsu.find(static_cast<std::size_t>(raw));
      if (label[r] < 0) label[r] = next++;
      return label[r];
    };
    int s = mapped(0), t = mapped(1);
    if (s == t) return std::nullopt;  // a forced-uncut chain joined the sides

    std::vector<std::tuple<int, int, std::size_t>> flow_edges;
    std::int64_t forced = 0;
    std::vector<std::pair<int, int>> pins;  // (A-side node, B-side node)
    for (std::size_t i = 0; i < edges.size(); ++i) {
      switch (state[i]) {
        case EdgeState::Uncut:
          break;
        case EdgeState::Free: {
          int u = mapped(edges[i].u), v = mapped(edges[i].v);
          if (u != v) flow_edges.emplace_back(u, v, i);
          break;
        }
        case EdgeState::CutUV:
        case EdgeState::CutVU: {
          int u = mapped(edges[i].u), v = mapped(edges[i].v);
          int a = state[i] == EdgeState::CutUV ? u : v;
          int b = state[i] == EdgeState::CutUV ? v : u;
          if (a == b) return std::nullopt;
          ++forced;
          pins.emplace_back(a, b);
          break;
        }
      }
    }
    if (forced > budget) return std::nullopt;

    FlowGraph g(static_cast<std::size_t>(next));
    for (auto [u, v, id] : flow_edges) g.add_edge(u, v, 1, 1);
    for (auto [a, b] : pins) {
      g.add_edge(s, a, kInf, 0);
      g.add_edge(b, t, kInf, 0);
    }
    std::int64_t f = g.max_flow(s, t, budget - forced + 1);
    if (forced + f > budget) return std::nullopt;

    auto reach = g.reachable(s);
    CutSolution sol;
    for (auto [u, v, id] : flow_edges)
      if (reach[u] != reach[v]) {
        sol.cut.push_back(id);
        sol.free_or.emplace_back(id, reach[u]);
      }
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (state[i] == EdgeState::CutUV || state[i] == EdgeState::CutVU) sol.cut.push_back(i);
    std::sort(sol.cut.begin(), sol.cut.end());
    return sol;
  }

  // Exhaustive enumeration of partition cuts of size <= budget.  At each node
  // the found min cut C is reported, then the space splits along C's free
  // edges: every other admissible partition either leaves some C edge uncut,
  // crosses it the other way, or crosses all of C identically and pays for at
  // least one extra component boundary (>= 4 more edges, every interior
  // vertex having degree 4); the last bucket is only explored when the budget
  // can afford it.
  void run(std::vector<EdgeState>& state) {
    if (++node_count > static_cast<std::size_t>(node_budget)) {
      complete = false;
      return;
    }
    auto sol = solve(state);
    if (!sol) return;
    found.insert(sol->cut);

    std::vector<std::size_t> pinned_here;
    for (auto [id, u_on_a] : sol->free_or) {
      state[id] = EdgeState::Uncut;
      run(state);
      state[id] = u_on_a ? EdgeState::CutVU : EdgeState::CutUV;
      run(state);
      state[id] = u_on_a ? EdgeState::CutUV : EdgeState::CutVU;
      pinned_here.push_back(id);
      if (!complete) break;
    }
    if (complete && static_cast<std::int64_t>(sol->cut.size()) + 4 <= budget) {
      // Supersets of C with identical orientations: split by the first extra
      // crossing edge in global order.
      std::vector<std::size_t> uncut_here;
      for (std::size_t f = 0; f < edges.size(); ++f) {
        if (state[f] != EdgeState::Free) continue;
        state[f] = EdgeState::CutUV;
        run(state);
        if (complete) {
          state[f] = EdgeState::CutVU;
          run(state);
        }
        state[f] = EdgeState::Uncut;
        uncut_here.push_back(f);
        if (!complete) break;
      }
      for (std::size_t f : uncut_here) state[f] = EdgeState::Free;
    }
    for (std::size_t id : pinned_here) state[id] = EdgeState::Free;
  }
};

}  // namespace

CutEnumeration enumerate_small_cuts(const GklParams& params, std::int64_t max_edges,
                                    std::int64_t N, std::int64_t node_budget) {
  require_four_regular(params);
  if (max_edges < 1 || max_edges > 12)
    throw Error(ErrorCode::InvalidArgument, "max_edges must be between 1 and 12");
  if (N < std::abs(params.l) + 2 || N > 30)
    throw Error(ErrorCode::WindowTooSmall, "need |l| + 2 <= N <= 30");

  Truncation tr{params, N, params.k};
  // Vertices adjacent to below the truncation are contracted into s, those
  // adjacent to above into t; edges inside become the search graph.
  std::vector<int> node_id(static_cast<std::size_t>(tr.vertex_count()), -1);
  int next = 2;  // 0 = s, 1 = t
  for (std::int64_t n = -N; n <= N; ++n)
    for (std::int64_t m = 0; m < params.k; ++m) {
      Vertex v{m, n};
      bool below = false, above = false;
      for (const Edge& e : tr.incident(v)) {
        Vertex u = tr.other_endpoint(e, v);
        if (u.n < -N) below = true;
        if (u.n > N) above = true;
      }
      if (below && above)
        throw Error(ErrorCode::WindowTooSmall, "truncation too small to separate the boundaries");
      node_id[tr.id(v)] = below ? 0 : above ? 1 : next++;
    }

  CutSearch search;
  search.budget = max_edges;
  search.node_budget = node_budget;
  search.nodes_total = static_cast<std::size_t>(next);
  std::set<Edge> added;
  for (std::int64_t n = -N; n <= N; ++n)
    for (std::int64_t m = 0; m < params.k; ++m) {
      Vertex v{m, n};
      for (const Edge& e : tr.incident(v)) {
        Vertex u = tr.other_endpoint(e, v);
        if (!tr.inside(u) || added.count(e)) continue;
        added.insert(e);
        int a = node_id[tr.id(v)], b = node_id[tr.id(u)];
        if (a == b) continue;  // both endpoints in the same terminal block
        if ((a == 0 && b == 1) || (a == 1 && b == 0))
          throw Error(ErrorCode::WindowTooSmall, "boundary blocks touch; increase N");
        search.edges.push_back(CutEdge{a, b, e});
      }
    }

  std::vector<EdgeState> state(search.edges.size(), EdgeState::Free);
  search.run(state);
  if (!search.complete && search.found.empty())
    throw Error(ErrorCode::BudgetExceeded, "cut enumeration exceeded its node budget");

  CutEnumeration out;
  out.complete = search.complete;
  for (const auto& cut : search.found) out.sizes.push_back(static_cast<std::int64_t>(cut.size()));
  std::sort(out.sizes.begin(), out.sizes.end());
  return out;
}

}  // namespace hamcay
