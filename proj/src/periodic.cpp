#include "hamcay/periodic.hpp"

#include <numeric>

#include <json.hpp>

namespace hamcay {

std::vector<WindowEdge> window_edges(std::int64_t k, std::int64_t p) {
  std::vector<WindowEdge> out;
  out.reserve(static_cast<std::size_t>(2 * k * p));
  for (std::int64_t n = 0; n < p; ++n)
    for (std::int64_t m = 0; m < k; ++m) {
      out.push_back(WindowEdge{m, n, Dir::H});
      out.push_back(WindowEdge{m, n, Dir::V});
    }
  return out;
}

PeriodicEdgeSet::PeriodicEdgeSet(GklParams params, std::int64_t period)
    : params_(params), period_(period) {
  if (params_.k < 1 || period_ < 1)
    throw Error(ErrorCode::InvalidArgument, "need k >= 1 and period >= 1");
  window_.assign(static_cast<std::size_t>(2 * params_.k * period_), 0);
}

bool PeriodicEdgeSet::member(std::int64_t m, std::int64_t n, Dir dir) const {
  return window_[window_index(params_.k, period_, m, pos_mod(n, period_), dir)] != 0;
}

void PeriodicEdgeSet::set(std::int64_t m, std::int64_t n, Dir dir, bool value) {
  window_[window_index(params_.k, period_, m, pos_mod(n, period_), dir)] = value ? 1 : 0;
}

std::size_t PeriodicEdgeSet::size() const {
  std::size_t c = 0;
  for (auto b : window_) c += b;
  return c;
}

namespace {

/// Preimage of window edge e under translation by (dm, dn): the edge whose
/// translate is e.  Direction never changes under translation.
Edge untranslate_edge(const GklParams& params, const WindowEdge& e, std::int64_t dm,
                      std::int64_t dn) {
  Vertex v = canonicalize(params, e.m - dm, e.n - dn);
  return Edge{v, e.dir};
}

}  // namespace

PeriodicEdgeSet translate(const PeriodicEdgeSet& s, std::int64_t dm, std::int64_t dn) {
  PeriodicEdgeSet out(s.params(), s.period());
  for (const auto& e : window_edges(s.params().k, s.period())) {
    Edge src = untranslate_edge(s.params(), e, dm, dn);
    out.set(e.m, e.n, e.dir, s.member(src));
  }
  return out;
}

PeriodicEdgeSet minimize_period(const PeriodicEdgeSet& s) {
  std::int64_t p = s.period();
  for (std::int64_t q = 1; q < p; ++q) {
    if (p % q != 0) continue;
    bool ok = true;
    for (const auto& e : window_edges(s.params().k, p)) {
      if (s.member(e.m, e.n, e.dir) != s.member(e.m, pos_mod(e.n, q), e.dir)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      PeriodicEdgeSet out(s.params(), q);
      for (const auto& e : window_edges(s.params().k, q)) out.set(e.m, e.n, e.dir, s.member(e.m, e.n, e.dir));
      return out;
    }
  }
  return s;
}

Decomposition::Decomposition(GklParams params, std::int64_t period)
    : params_(params), period_(period) {
  if (params_.k < 1 || period_ < 1)
    throw Error(ErrorCode::InvalidArgument, "need k >= 1 and period >= 1");
  colors_.assign(static_cast<std::size_t>(2 * params_.k * period_), 1);
}

int Decomposition::color(std::int64_t m, std::int64_t n, Dir dir) const {
  return colors_[window_index(params_.k, period_, m, pos_mod(n, period_), dir)];
}

void Decomposition::set_color(std::int64_t m, std::int64_t n, Dir dir, int color) {
  if (color != 1 && color != 2) throw Error(ErrorCode::InvalidArgument, "color must be 1 or 2");
  colors_[window_index(params_.k, period_, m, pos_mod(n, period_), dir)] =
      static_cast<std::uint8_t>(color);
}

std::vector<WindowEdge> incident_window_edges(const GklParams& params, std::int64_t p,
                                              std::int64_t m, std::int64_t n) {
  std::vector<WindowEdge> out;
  out.push_back(WindowEdge{m, n, Dir::V});
  out.push_back(WindowEdge{m, pos_mod(n - 1, p), Dir::V});
  out.push_back(WindowEdge{m, n, Dir::H});
  if (m > 0)
    out.push_back(WindowEdge{m - 1, n, Dir::H});
  else
    out.push_back(WindowEdge{params.k - 1, pos_mod(n + params.l, p), Dir::H});
  return out;
}

bool Decomposition::degree_condition(Vertex* witness) const {
  for (std::int64_t n = 0; n < period_; ++n)
    for (std::int64_t m = 0; m < params_.k; ++m) {
      int c1 = 0, c2 = 0;
      for (const auto& e : incident_window_edges(params_, period_, m, n))
        (color(e.m, e.n, e.dir) == 1 ? c1 : c2)++;
      if (c1 != 2 || c2 != 2) {
        if (witness) *witness = Vertex{m, n};
        return false;
      }
    }
  return true;
}

PeriodicEdgeSet class_edges(const Decomposition& d, int i) {
  if (i != 1 && i != 2) throw Error(ErrorCode::InvalidArgument, "class index must be 1 or 2");
  PeriodicEdgeSet s(d.params(), d.period());
  for (const auto& e : window_edges(d.params().k, d.period()))
    s.set(e.m, e.n, e.dir, d.color(e.m, e.n, e.dir) == i);
  return s;
}

Decomposition translate(const Decomposition& d, std::int64_t dm, std::int64_t dn) {
  Decomposition out(d.params(), d.period());
  for (const auto& e : window_edges(d.params().k, d.period())) {
    Edge src = untranslate_edge(d.params(), e, dm, dn);
    out.set_color(e.m, e.n, e.dir, d.color(src));
  }
  out.provenance() = d.provenance();
  out.note("translate(" + std::to_string(dm) + "," + std::to_string(dn) + ")");
  return out;
}

Decomposition minimize_period(const Decomposition& d) {
  std::int64_t p = d.period();
  for (std::int64_t q = 1; q < p; ++q) {
    if (p % q != 0) continue;
    bool ok = true;
    for (const auto& e : window_edges(d.params().k, p)) {
      if (d.color(e.m, e.n, e.dir) != d.color(e.m, pos_mod(e.n, q), e.dir)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Decomposition out(d.params(), q);
      for (const auto& e : window_edges(d.params().k, q))
        out.set_color(e.m, e.n, e.dir, d.color(e.m, e.n, e.dir));
      out.provenance() = d.provenance();
      return out;
    }
  }
  return d;
}

Decomposition transport(const Decomposition& d, const IsomorphismChain& chain) {
  if (!(chain.source == d.params()))
    throw Error(ErrorCode::ChainMismatch, "chain source does not match decomposition params");

  Decomposition cur = d;
  GklParams params = d.params();
  for (const auto& s : chain.steps) {
    IsomorphismChain one{params, params, {s}};
    std::int64_t q = cur.period();
    switch (s.kind) {
      case IsoKind::Identity:
      case IsoKind::Translate:
      case IsoKind::Flip:
        break;
      case IsoKind::Transpose:
        if (params.l <= 0) throw Error(ErrorCode::ChainMismatch, "transpose requires l > 0");
        // Up^p-invariance becomes Right^p-invariance in the target, which
        // contains Up^{k*p/gcd(p,l)} via Right^l = Up^{-k} there.
        one.target = GklParams{params.l, params.k};
        q = params.k * cur.period() / std::gcd(cur.period(), params.l);
        break;
    }
    if (s.kind == IsoKind::Flip) one.target = GklParams{params.k, -params.l};

    IsomorphismChain back = one.inverse();
    Decomposition next(one.target, q);
    for (const auto& e : window_edges(one.target.k, q)) {
      Edge src = map_through(back, Edge{Vertex{e.m, e.n}, e.dir});
      next.set_color(e.m, e.n, e.dir, cur.color(src));
    }
    next.provenance() = cur.provenance();
    cur = std::move(next);
    params = one.target;
  }
  cur = minimize_period(cur);
  cur.note("transport[" + chain.describe() + "]");
  return cur;
}

// ---------------------------------------------------------------------------
// JSON.

std::string to_json(const Decomposition& d) {
  nlohmann::ordered_json j;
  j["k"] = d.params().k;
  j["l"] = d.params().l;
  j["period"] = d.period();
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : window_edges(d.params().k, d.period())) {
    nlohmann::ordered_json je;
    je["m"] = e.m;
    je["n"] = e.n;
    je["dir"] = e.dir == Dir::H ? "H" : "V";
    je["color"] = d.color(e.m, e.n, e.dir);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

Decomposition decomposition_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("l") || !j.contains("period") ||
      !j.contains("edges") || !j["edges"].is_array())
    throw Error(ErrorCode::InvalidArgument, "decomposition JSON must have k, l, period, edges");

  GklParams params{j["k"].get<std::int64_t>(), j["l"].get<std::int64_t>()};
  std::int64_t period = j["period"].get<std::int64_t>();
  if (params.k < 1 || period < 1)
    throw Error(ErrorCode::InvalidArgument, "need k >= 1 and period >= 1");
  Decomposition d(params, period);
  std::vector<bool> seen(static_cast<std::size_t>(2 * params.k * period), false);
  if (j["edges"].size() != seen.size())
    throw Error(ErrorCode::InvalidArgument,
                "expected exactly " + std::to_string(seen.size()) + " edges");
  for (const auto& je : j["edges"]) {
    std::int64_t m = je.at("m").get<std::int64_t>();
    std::int64_t n = je.at("n").get<std::int64_t>();
    std::string dir = je.at("dir").get<std::string>();
    int color = je.at("color").get<int>();
    if (m < 0 || m >= params.k || n < 0 || n >= period || (dir != "H" && dir != "V") ||
        (color != 1 && color != 2))
      throw Error(ErrorCode::InvalidArgument, "edge entry out of range");
    Dir dd = dir == "H" ? Dir::H : Dir::V;
    std::size_t idx = window_index(params.k, period, m, n, dd);
    if (seen[idx]) throw Error(ErrorCode::InvalidArgument, "duplicate edge entry");
    seen[idx] = true;
    d.set_color(m, n, dd, color);
  }
  return d;
}

}  // namespace hamcay
