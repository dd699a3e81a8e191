#include "hamcay/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamcay/constructor.hpp"
#include "hamcay/render.hpp"

namespace hamcay {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitImpossible = 2;
constexpr int kExitVerifyFail = 3;
constexpr int kExitUsage = 4;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParityMismatch:
    case ErrorCode::NotFourRegular:
    case ErrorCode::SquareGridUnsupported:
    case ErrorCode::NotGenerating:
      return kExitImpossible;
    case ErrorCode::InvalidArgument:
    case ErrorCode::RangeTooSmall:
    case ErrorCode::UnknownFixture:
      return kExitUsage;
    default:
      return kExitVerifyFail;
  }
}

Mode parse_mode(const std::string& s) {
  auto m = mode_from_string(s);
  if (!m) throw Error(ErrorCode::InvalidArgument, "unknown mode: " + s);
  return *m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::int64_t oracle_window(const CliConfig& cfg, const Decomposition& d) {
  std::int64_t n =
      cfg.oracle_multiplier * d.period() * (d.params().k + std::abs(d.params().l));
  return std::max<std::int64_t>(n, 3 * d.period());
}

GroupElem parse_pair(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw Error(ErrorCode::InvalidArgument, "expected a pair x,y but got: " + s);
  try {
    return GroupElem{std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "cannot parse pair: " + s);
  }
}

}  // namespace

void CliConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open config file " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::InvalidArgument,
                  "config line " + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "oracle_multiplier")
      oracle_multiplier = std::stoll(value);
    else if (key == "search_budget")
      search_budget = std::stoll(value);
    else if (key == "auto_preference")
      auto_preference = parse_mode(value);
    else
      throw Error(ErrorCode::InvalidArgument, "unknown config key: " + key);
  }
  if (oracle_multiplier < 1 || search_budget < 1)
    throw Error(ErrorCode::InvalidArgument, "config budgets must be positive");
}

CliConfig CliConfig::from_environment() {
  CliConfig cfg;
  if (const char* path = std::getenv("HAMCAY_CONFIG")) cfg.load_file(path);
  return cfg;
}

namespace {

int cmd_classify(const std::string& group, std::int64_t m, const std::string& a_str,
                 const std::string& b_str, std::ostream& out) {
  std::int64_t torsion;
  GroupElem a, b;
  if (group == "Z2") {
    torsion = 0;
    a = parse_pair(a_str);
    b = parse_pair(b_str);
  } else if (group == "Z") {
    torsion = 1;
    a = GroupElem{std::stoll(a_str), 0};
    b = GroupElem{std::stoll(b_str), 0};
  } else if (group == "Z+Zm") {
    if (m < 2) throw Error(ErrorCode::InvalidArgument, "--m must be >= 2 for Z+Zm");
    torsion = m;
    a = parse_pair(a_str);
    b = parse_pair(b_str);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown group: " + group);
  }
  ClassificationResult res = classify_generators(torsion, a, b);
  nlohmann::ordered_json j;
  switch (res.tag) {
    case ClassificationResult::Tag::SquareGrid:
      j["tag"] = "SquareGrid";
      break;
    case ClassificationResult::Tag::Gkl:
      j["tag"] = "Gkl";
      j["k"] = res.params.k;
      j["l"] = res.params.l;
      j["iso"] = res.iso;
      break;
    case ClassificationResult::Tag::NotFourRegularInfinite:
      j["tag"] = "NotFourRegularInfinite";
      j["k"] = res.params.k;
      j["l"] = res.params.l;
      j["reason"] = res.reason;
      break;
    case ClassificationResult::Tag::FiniteGroup:
      j["tag"] = "FiniteGroup";
      j["reason"] = res.reason;
      break;
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_decompose(const CliConfig& cfg, std::int64_t k, std::int64_t l, const std::string& mode_str,
                  const std::string& json_out, bool no_verify, std::ostream& out,
                  std::ostream& err) {
  Mode mode = parse_mode(mode_str);
  DecomposeOptions opts;
  opts.auto_preference = cfg.auto_preference;
  opts.verify_result = !no_verify;
  Decomposition d = decompose(GklParams{k, l}, mode, opts);

  Mode effective = mode;
  if (mode == Mode::Auto) {
    auto [norm, chain] = normalize(GklParams{k, l});
    effective = pos_mod(norm.k - norm.l, 2) == 0 ? cfg.auto_preference : Mode::Mixed;
  }
  if (!no_verify) {
    Verdict v = verify(d, effective);
    if (!v.pass) {
      err << to_json(v);
      return kExitVerifyFail;
    }
    out << "verified: both classes match mode " << to_string(effective) << "\n";
  }
  out << "G_{" << k << "," << l << "} mode=" << to_string(effective)
      << " period=" << d.period() << "\n";
  for (const auto& line : d.provenance()) out << "  " << line << "\n";
  if (!json_out.empty()) {
    std::ofstream f(json_out);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + json_out);
    f << to_json(d);
    out << "wrote " << json_out << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& file, const std::string& mode_str, std::ostream& out,
               std::ostream& err) {
  Decomposition d = decomposition_from_json(read_file(file));
  Verdict v = verify(d, parse_mode(mode_str));
  if (!v.pass) {
    err << to_json(v);
    return kExitVerifyFail;
  }
  out << to_json(v);
  return kExitOk;
}

int cmd_render(const std::string& file, const std::string& format, std::int64_t from,
               std::int64_t to, std::ostream& out) {
  Decomposition d = decomposition_from_json(read_file(file));
  RenderSpec spec;
  spec.n_lo = from;
  spec.n_hi = to;
  if (format == "ascii")
    spec.format = RenderFormat::Ascii;
  else if (format == "svg")
    spec.format = RenderFormat::Svg;
  else if (format == "tikz")
    spec.format = RenderFormat::Tikz;
  else
    throw Error(ErrorCode::InvalidArgument, "unknown format: " + format);
  out << render(d, spec);
  return kExitOk;
}

int cmd_search(const CliConfig& cfg, std::int64_t k, std::int64_t l, std::int64_t pmax,
               const std::string& mode_str, bool biprev, std::ostream& out, std::ostream& err) {
  SearchOptions opts;
  opts.require_bi_prevalent = biprev;
  opts.max_window_edges = cfg.search_budget;
  auto found = search_decomposition(GklParams{k, l}, pmax, parse_mode(mode_str), opts);
  if (!found) {
    err << "no decomposition with period <= " << pmax << "\n";
    return kExitImpossible;
  }
  out << to_json(*found);
  return kExitOk;
}

int cmd_cuts(std::int64_t k, std::int64_t l, std::int64_t max_edges, std::int64_t window,
             std::ostream& out) {
  CutEnumeration cuts = enumerate_small_cuts(GklParams{k, l}, max_edges, window);
  nlohmann::ordered_json j;
  j["k"] = k;
  j["l"] = l;
  j["max_edges"] = max_edges;
  j["window"] = window;
  j["complete"] = cuts.complete;
  j["sizes"] = cuts.sizes;
  bool odd = false;
  for (auto s : cuts.sizes) odd = odd || (s % 2 != 0);
  j["odd_cut_found"] = odd;
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_sweep(const CliConfig& cfg, std::int64_t kmax, const std::string& mode_str,
              std::ostream& out) {
  Mode mode = parse_mode(mode_str);
  for (std::int64_t k = 1; k <= kmax; ++k)
    for (std::int64_t l = 0; l <= k; ++l) {
      GklParams g{k, l};
      if (!is_four_regular(g)) continue;
      Mode effective = mode;
      if (mode == Mode::Auto)
        effective = pos_mod(k - l, 2) == 0 ? cfg.auto_preference : Mode::Mixed;
      if ((effective == Mode::Mixed) == (pos_mod(k - l, 2) == 0)) {
        out << "G_{" << k << "," << l << "} " << to_string(effective) << ": parity obstruction\n";
        continue;
      }
      Decomposition d = decompose(g, effective);
      OracleResult oracle = window_oracle(d, oracle_window(cfg, d));
      out << "G_{" << k << "," << l << "} " << to_string(effective) << ": verify=pass oracle="
          << (oracle.pass ? "agree" : "DISAGREE") << " period=" << d.period() << "\n";
      if (!oracle.pass) return kExitVerifyFail;
    }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hamcay: Hamiltonian decompositions of the 4-regular graphs G_{k,l}"};
  app.require_subcommand(1);

  CliConfig cfg;
  try {
    cfg = CliConfig::from_environment();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file (overrides HAMCAY_CONFIG)");

  auto* classify = app.add_subcommand("classify", "classify a two-generator presentation");
  std::string group, a_str, b_str;
  std::int64_t m_tor = 0;
  classify->add_option("--group", group, "Z2 | Z | Z+Zm")->required();
  classify->add_option("--m", m_tor, "torsion order for Z+Zm");
  classify->add_option("--a", a_str, "first generator (int for Z, pair x,y otherwise)")->required();
  classify->add_option("--b", b_str, "second generator")->required();

  auto* decomp = app.add_subcommand("decompose", "construct a verified decomposition");
  std::int64_t k = 0, l = 0;
  std::string mode_str = "auto", json_out;
  bool no_verify = false;
  decomp->add_option("--k", k, "columns")->required();
  decomp->add_option("--l", l, "wrap shear")->required();
  decomp->add_option("--mode", mode_str, "rays | circles | mixed | auto");
  decomp->add_option("--json", json_out, "write the decomposition JSON here");
  decomp->add_flag("--no-verify", no_verify,
                   "skip re-verification (unsafe; benchmarking only)");

  auto* verify_cmd = app.add_subcommand("verify", "verify a decomposition JSON file");
  std::string verify_file, verify_mode = "auto";
  verify_cmd->add_option("file", verify_file, "decomposition JSON")->required();
  verify_cmd->add_option("--mode", verify_mode, "rays | circles | mixed")->required();

  auto* render_cmd = app.add_subcommand("render", "render a decomposition JSON file");
  std::string render_file, render_format = "ascii";
  std::int64_t from = 0, to = 0;
  render_cmd->add_option("file", render_file, "decomposition JSON")->required();
  render_cmd->add_option("--format", render_format, "ascii | svg | tikz");
  render_cmd->add_option("--from", from, "lowest level")->required();
  render_cmd->add_option("--to", to, "highest level")->required();

  auto* search_cmd = app.add_subcommand("search", "bounded exhaustive search");
  std::int64_t pmax = 1;
  bool biprev = false;
  std::string search_mode = "rays";
  search_cmd->add_option("--k", k, "columns")->required();
  search_cmd->add_option("--l", l, "wrap shear")->required();
  search_cmd->add_option("--pmax", pmax, "largest period to try")->required();
  search_cmd->add_option("--mode", search_mode, "rays | circles | mixed")->required();
  search_cmd->add_flag("--bi-prevalent", biprev, "only accept bi-prevalent results");

  auto* cuts_cmd = app.add_subcommand("cuts", "enumerate small finite cuts");
  std::int64_t max_edges = 4, window = 12;
  cuts_cmd->add_option("--k", k, "columns")->required();
  cuts_cmd->add_option("--l", l, "wrap shear")->required();
  cuts_cmd->add_option("--max-edges", max_edges, "cut size budget")->required();
  cuts_cmd->add_option("--window", window, "truncation half-height (default 12)");

  auto* sweep_cmd = app.add_subcommand("sweep", "decompose and cross-check a parameter range");
  std::int64_t kmax = 4;
  std::string sweep_mode = "auto";
  sweep_cmd->add_option("--kmax", kmax, "largest k")->required();
  sweep_cmd->add_option("--mode", sweep_mode, "rays | circles | mixed | auto");

  try {
    std::vector<std::string> argv_copy = args;
    std::reverse(argv_copy.begin(), argv_copy.end());
    app.name("hamcay");
    app.parse(argv_copy);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (!config_path.empty()) cfg.load_file(config_path);
    if (classify->parsed()) return cmd_classify(group, m_tor, a_str, b_str, out);
    if (decomp->parsed())
      return cmd_decompose(cfg, k, l, mode_str, json_out, no_verify, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_file, verify_mode, out, err);
    if (render_cmd->parsed()) return cmd_render(render_file, render_format, from, to, out);
    if (search_cmd->parsed()) return cmd_search(cfg, k, l, pmax, search_mode, biprev, out, err);
    if (cuts_cmd->parsed()) return cmd_cuts(k, l, max_edges, window, out);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, kmax, sweep_mode, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hamcay
