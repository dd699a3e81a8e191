#include "hamcay/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hamcay {

namespace {

struct WrapLabel {
  std::int64_t n;  // right-side level
  std::int64_t label;
};

/// Wrap edges with their right-side level in range, numbered top to bottom.
std::vector<WrapLabel> wrap_labels(const RenderSpec& spec) {
  std::vector<WrapLabel> out;
  std::int64_t next = 1;
  for (std::int64_t n = spec.n_hi; n >= spec.n_lo; --n) out.push_back(WrapLabel{n, next++});
  return out;
}

std::int64_t label_of(const std::vector<WrapLabel>& labels, std::int64_t n) {
  for (const auto& w : labels)
    if (w.n == n) return w.label;
  return 0;
}

char h_char(int color) { return color == 1 ? '-' : '='; }
char v_char(int color) { return color == 1 ? '|' : ':'; }

std::string render_ascii(const Decomposition& d, const RenderSpec& spec) {
  const std::int64_t k = d.params().k, l = d.params().l;
  auto labels = wrap_labels(spec);
  std::size_t lw = std::to_string(labels.size()).size();

  std::ostringstream os;
  for (std::int64_t n = spec.n_hi; n >= spec.n_lo; --n) {
    // Vertex row: optional left stub, k vertices with H edges between, and
    // the right wrap stub.
    std::string left(lw + 1, ' ');
    std::int64_t src = n + l;  // wrap (k-1, n+l) enters (0, n) from the left
    if (src >= spec.n_lo && src <= spec.n_hi) {
      std::string num = std::to_string(label_of(labels, src));
      left = std::string(lw - num.size(), ' ') + num + h_char(d.color(k - 1, src, Dir::H));
    }
    os << left;
    for (std::int64_t m = 0; m < k; ++m) {
      os << 'o';
      if (m < k - 1) os << h_char(d.color(m, n, Dir::H));
    }
    os << h_char(d.color(k - 1, n, Dir::H)) << label_of(labels, n) << '\n';
    if (n > spec.n_lo) {
      os << std::string(lw + 1, ' ');
      for (std::int64_t m = 0; m < k; ++m) {
        os << v_char(d.color(m, n - 1, Dir::V));
        if (m < k - 1) os << ' ';
      }
      os << '\n';
    }
  }
  return os.str();
}

std::string render_svg(const Decomposition& d, const RenderSpec& spec) {
  const std::int64_t k = d.params().k, l = d.params().l;
  const double s = 40.0, margin = 60.0, stub = 0.45 * s;
  auto X = [&](double m) { return margin + m * s; };
  // SVG y grows downward; put n_hi at the top.  Leave |l| levels of slack so
  // off-range left halves of wrap edges stay on canvas.
  const std::int64_t slack = std::abs(l);
  auto Y = [&](double n) { return margin + (spec.n_hi - n) * s; };
  double width = 2 * margin + (k - 1) * s;
  double height = 2 * margin + (spec.n_hi - spec.n_lo + slack) * s;
  auto labels = wrap_labels(spec);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  auto color = [&](int c) { return c == 1 ? spec.color1 : spec.color2; };
  auto line = [&](double x1, double y1, double x2, double y2, int c) {
    os << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
       << "\" stroke=\"" << color(c) << "\" stroke-width=\"3\"/>\n";
  };
  for (std::int64_t n = spec.n_hi; n >= spec.n_lo; --n) {
    for (std::int64_t m = 0; m + 1 < k; ++m)
      line(X(m), Y(n), X(m + 1), Y(n), d.color(m, n, Dir::H));
    if (n > spec.n_lo)
      for (std::int64_t m = 0; m < k; ++m)
        line(X(m), Y(n), X(m), Y(n - 1), d.color(m, n - 1, Dir::V));
    // Wrap edge (k-1,n) -> (0,n-l): two half edges sharing one number.
    int c = d.color(k - 1, n, Dir::H);
    line(X(k - 1), Y(n), X(k - 1) + stub, Y(n), c);
    line(X(0) - stub, Y(n - l), X(0), Y(n - l), c);
    std::int64_t lab = label_of(labels, n);
    os << "  <text x=\"" << X(k - 1) + stub + 4 << "\" y=\"" << Y(n) + 4 << "\" font-size=\"12\">"
       << lab << "</text>\n";
    os << "  <text x=\"" << X(0) - stub - 14 << "\" y=\"" << Y(n - l) + 4
       << "\" font-size=\"12\">" << lab << "</text>\n";
  }
  for (std::int64_t n = spec.n_hi; n >= spec.n_lo; --n)
    for (std::int64_t m = 0; m < k; ++m)
      os << "  <circle cx=\"" << X(m) << "\" cy=\"" << Y(n) << "\" r=\"3\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_tikz(const Decomposition& d, const RenderSpec& spec) {
  const std::int64_t k = d.params().k, l = d.params().l;
  auto labels = wrap_labels(spec);
  std::ostringstream os;
  os << "\\documentclass[tikz]{standalone}\n\\begin{document}\n";
  os << "\\begin{tikzpicture}[scale=.6]\n";
  os << "\\definecolor{classA}{HTML}{C0392B}\n\\definecolor{classB}{HTML}{2980B9}\n";
  auto color = [&](int c) { return c == 1 ? "classA" : "classB"; };
  for (std::int64_t n = spec.n_hi; n >= spec.n_lo; --n) {
    for (std::int64_t m = 0; m + 1 < k; ++m)
      os << "\\draw[ultra thick," << color(d.color(m, n, Dir::H)) << "] (" << m << "," << n
         << ") -- (" << m + 1 << "," << n << ");\n";
    if (n > spec.n_lo)
      for (std::int64_t m = 0; m < k; ++m)
        os << "\\draw[ultra thick," << color(d.color(m, n - 1, Dir::V)) << "] (" << m << "," << n
           << ") -- (" << m << "," << n - 1 << ");\n";
    int c = d.color(k - 1, n, Dir::H);
    std::int64_t lab = label_of(labels, n);
    os << "\\draw[ultra thick," << color(c) << "] (" << k - 1 << "," << n << ") -- (" << k - 1
       << ".45," << n << ");\n";
    os << "\\draw[ultra thick," << color(c) << "] (-0.45," << n - l << ") -- (0," << n - l
       << ");\n";
    os << "\\node[scale=0.7] at (" << k - 1 << ".75," << n << ") {" << lab << "};\n";
    os << "\\node[scale=0.7] at (-0.75," << n - l << ") {" << lab << "};\n";
  }
  for (std::int64_t n = spec.n_hi; n >= spec.n_lo; --n)
    for (std::int64_t m = 0; m < k; ++m)
      os << "\\node[circle,fill,scale=0.3] at (" << m << "," << n << ") {};\n";
  os << "\\end{tikzpicture}\n\\end{document}\n";
  return os.str();
}

}  // namespace

std::string render(const Decomposition& d, const RenderSpec& spec) {
  if (spec.n_hi < spec.n_lo + 1)
    throw Error(ErrorCode::RangeTooSmall, "render range needs at least two levels");
  switch (spec.format) {
    case RenderFormat::Ascii: return render_ascii(d, spec);
    case RenderFormat::Svg: return render_svg(d, spec);
    case RenderFormat::Tikz: return render_tikz(d, spec);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown render format");
}

Decomposition parse_ascii(const std::string& text, const GklParams& params, std::int64_t period,
                          std::int64_t n_lo, std::int64_t n_hi) {
  Decomposition d(params, period);
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);

  std::size_t lw = std::to_string(n_hi - n_lo + 1).size();
  std::size_t row = 0;
  for (std::int64_t n = n_hi; n >= n_lo; --n) {
    const std::string& vr = lines.at(row++);
    std::size_t core = lw + 1;
    for (std::int64_t m = 0; m + 1 < params.k; ++m) {
      char c = vr.at(core + static_cast<std::size_t>(2 * m + 1));
      d.set_color(m, n, Dir::H, c == '-' ? 1 : 2);
    }
    char wrap = vr.at(core + static_cast<std::size_t>(2 * (params.k - 1) + 1));
    d.set_color(params.k - 1, n, Dir::H, wrap == '-' ? 1 : 2);
    if (n > n_lo) {
      const std::string& er = lines.at(row++);
      for (std::int64_t m = 0; m < params.k; ++m) {
        char c = er.at(lw + 1 + static_cast<std::size_t>(2 * m));
        d.set_color(m, n - 1, Dir::V, c == '|' ? 1 : 2);
      }
    }
  }
  return d;
}

}  // namespace hamcay
