#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hamcay/constructor.hpp"
#include "hamcay/render.hpp"

namespace py = pybind11;
using namespace hamcay;

namespace {

Mode mode_arg(const std::string& s) {
  auto m = mode_from_string(s);
  if (!m) throw Error(ErrorCode::InvalidArgument, "unknown mode: " + s);
  return *m;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["pass"] = v.pass;
  d["mode"] = to_string(v.mode);
  auto cls = [](const ClassVerdict& c) {
    py::dict jc;
    jc["kind"] = to_string(c.kind);
    if (c.kind == ClassKind::Other) {
      jc["reason"] = to_string(c.reason);
      jc["witness"] = c.witness;
    }
    py::list cycles;
    for (const auto& cyc : c.report.cycles) {
      py::dict jcy;
      jcy["length"] = cyc.length;
      jcy["winding"] = cyc.winding;
      jcy["covered"] = cyc.covered.size();
      cycles.append(jcy);
    }
    jc["trajectories"] = cycles;
    return jc;
  };
  d["class1"] = cls(v.class1);
  d["class2"] = cls(v.class2);
  if (!v.pass) d["failure"] = v.failure;
  return d;
}

py::dict prevalence_dict(const PrevalenceReport& r) {
  py::dict d;
  auto cls = [](const ClassPrevalence& c) {
    py::dict jc;
    jc["h_columns"] = c.h_columns;
    jc["horizontal"] = c.horizontal;
    return jc;
  };
  d["class1"] = cls(r.class1);
  d["class2"] = cls(r.class2);
  d["both_h_columns"] = r.both_h_columns;
  d["vertically_prevalent"] = r.vertically_prevalent;
  d["horizontally_prevalent"] = r.horizontally_prevalent;
  d["bi_prevalent"] = r.bi_prevalent;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hamcay, m) {
  m.doc() = "Hamiltonian decompositions of the 4-regular graphs G_{k,l}";

  py::register_exception<Error>(m, "HamcayError");

  py::class_<Vertex>(m, "Vertex")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("m"), py::arg("n"))
      .def_readonly("m", &Vertex::m)
      .def_readonly("n", &Vertex::n)
      .def("__eq__", [](const Vertex& a, const Vertex& b) { return a == b; })
      .def("__repr__", [](const Vertex& v) {
        return "(" + std::to_string(v.m) + "," + std::to_string(v.n) + ")";
      });

  py::class_<Decomposition>(m, "Decomposition")
      .def_property_readonly("k", [](const Decomposition& d) { return d.params().k; })
      .def_property_readonly("l", [](const Decomposition& d) { return d.params().l; })
      .def_property_readonly("period", &Decomposition::period)
      .def_property_readonly("provenance",
                             [](const Decomposition& d) { return d.provenance(); })
      .def("color",
           [](const Decomposition& d, std::int64_t m, std::int64_t n, const std::string& dir) {
             return d.color(m, n, dir == "V" ? Dir::V : Dir::H);
           },
           py::arg("m"), py::arg("n"), py::arg("dir"))
      .def("edges",
           [](const Decomposition& d) {
             py::list out;
             for (const auto& e : window_edges(d.params().k, d.period()))
               out.append(py::make_tuple(e.m, e.n, e.dir == Dir::H ? "H" : "V",
                                         d.color(e.m, e.n, e.dir)));
             return out;
           })
      .def("to_json", [](const Decomposition& d) { return to_json(d); })
      .def_static("from_json", &decomposition_from_json, py::arg("text"))
      .def("translate",
           [](const Decomposition& d, std::int64_t dm, std::int64_t dn) {
             return translate(d, dm, dn);
           },
           py::arg("dm"), py::arg("dn"))
      .def("__repr__", [](const Decomposition& d) {
        return "Decomposition(G_{" + std::to_string(d.params().k) + "," +
               std::to_string(d.params().l) + "}, period=" + std::to_string(d.period()) + ")";
      });

  m.def("canonicalize",
        [](std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n) {
          return canonicalize(GklParams{k, l}, m, n);
        },
        py::arg("k"), py::arg("l"), py::arg("m"), py::arg("n"));
  m.def("neighbors",
        [](std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n) {
          return neighbors(GklParams{k, l}, Vertex{m, n});
        },
        py::arg("k"), py::arg("l"), py::arg("m"), py::arg("n"));
  m.def("is_four_regular",
        [](std::int64_t k, std::int64_t l) { return is_four_regular(GklParams{k, l}); },
        py::arg("k"), py::arg("l"));
  m.def("satisfies_parity",
        [](std::int64_t k, std::int64_t l) { return satisfies_parity_P(GklParams{k, l}); },
        py::arg("k"), py::arg("l"));
  m.def("normalize",
        [](std::int64_t k, std::int64_t l) {
          auto [params, chain] = normalize(GklParams{k, l});
          return py::make_tuple(params.k, params.l, chain.describe());
        },
        py::arg("k"), py::arg("l"));

  m.def("classify",
        [](std::int64_t torsion, std::pair<std::int64_t, std::int64_t> a,
           std::pair<std::int64_t, std::int64_t> b) {
          auto res = classify_generators(torsion, GroupElem{a.first, a.second},
                                         GroupElem{b.first, b.second});
          py::dict d;
          switch (res.tag) {
            case ClassificationResult::Tag::SquareGrid: d["tag"] = "SquareGrid"; break;
            case ClassificationResult::Tag::Gkl:
              d["tag"] = "Gkl";
              d["k"] = res.params.k;
              d["l"] = res.params.l;
              d["iso"] = res.iso;
              break;
            case ClassificationResult::Tag::NotFourRegularInfinite:
              d["tag"] = "NotFourRegularInfinite";
              d["k"] = res.params.k;
              d["l"] = res.params.l;
              d["reason"] = res.reason;
              break;
            case ClassificationResult::Tag::FiniteGroup:
              d["tag"] = "FiniteGroup";
              d["reason"] = res.reason;
              break;
          }
          return d;
        },
        py::arg("torsion"), py::arg("a"), py::arg("b"),
        "Classify Cay(Z+Z_m, {a,b}); torsion 0 means Z^2, torsion 1 means Z.");

  m.def("decompose",
        [](std::int64_t k, std::int64_t l, const std::string& mode) {
          return decompose(GklParams{k, l}, mode_arg(mode));
        },
        py::arg("k"), py::arg("l"), py::arg("mode") = "auto");
  m.def("verify",
        [](const Decomposition& d, const std::string& mode) {
          return verdict_dict(verify(d, mode_arg(mode)));
        },
        py::arg("decomposition"), py::arg("mode"));
  m.def("prevalence",
        [](const Decomposition& d) { return prevalence_dict(prevalence(d)); },
        py::arg("decomposition"));
  m.def("window_oracle",
        [](const Decomposition& d, std::int64_t N) {
          OracleResult r = window_oracle(d, N);
          py::dict out;
          out["pass"] = r.pass;
          if (!r.pass) out["failure"] = r.failure;
          return out;
        },
        py::arg("decomposition"), py::arg("N"));
  m.def("search",
        [](std::int64_t k, std::int64_t l, std::int64_t pmax, const std::string& mode,
           bool bi_prevalent) -> py::object {
          SearchOptions opts;
          opts.require_bi_prevalent = bi_prevalent;
          auto found = search_decomposition(GklParams{k, l}, pmax, mode_arg(mode), opts);
          if (!found) return py::none();
          return py::cast(*found);
        },
        py::arg("k"), py::arg("l"), py::arg("pmax"), py::arg("mode"),
        py::arg("bi_prevalent") = false);
  m.def("lift_base",
        [](std::int64_t k, std::int64_t l, const std::string& mode) {
          return lift_base(GklParams{k, l}, mode_arg(mode));
        },
        py::arg("k"), py::arg("l"), py::arg("mode"));
  m.def("extend_k", [](const Decomposition& d) { return extend_k(d); }, py::arg("decomposition"));
  m.def("extend_l", [](const Decomposition& d) { return extend_l(d); }, py::arg("decomposition"));
  m.def("enumerate_small_cuts",
        [](std::int64_t k, std::int64_t l, std::int64_t max_edges, std::int64_t N) {
          return enumerate_small_cuts(GklParams{k, l}, max_edges, N).sizes;
        },
        py::arg("k"), py::arg("l"), py::arg("max_edges"), py::arg("N") = 12);
  m.def("level_cut_size",
        [](std::int64_t k, std::int64_t l, std::int64_t c) {
          return level_cut(GklParams{k, l}, c).size();
        },
        py::arg("k"), py::arg("l"), py::arg("c") = 0);
  m.def("fixture_names", &fixture_names);
  m.def("base_pattern",
        [](const std::string& name) { return base_pattern(name).decomposition; },
        py::arg("name"));
  m.def("render",
        [](const Decomposition& d, const std::string& format, std::int64_t lo, std::int64_t hi) {
          RenderSpec spec;
          spec.n_lo = lo;
          spec.n_hi = hi;
          spec.format = format == "svg"    ? RenderFormat::Svg
                        : format == "tikz" ? RenderFormat::Tikz
                                           : RenderFormat::Ascii;
          return render(d, spec);
        },
        py::arg("decomposition"), py::arg("format"), py::arg("lo"), py::arg("hi"));
}
