#include "macposets/render.hpp"

#include <algorithm>
#include <sstream>

namespace macposets {

namespace {

std::string coordinate(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// "x^2*y^3" -> "x^{2}y^{3}" so monomial labels typeset the way the Hasse
// figures expect; other labels pass through.
std::string math_label(const std::string& label) {
  std::string out;
  for (size_t i = 0; i < label.size(); ++i) {
    if (label[i] == '*') {
      out += "\\,";
    } else if (label[i] == '^') {
      out += "^{";
      ++i;
      while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i])))
        out += label[i++];
      --i;
      out += "}";
    } else {
      out += label[i];
    }
  }
  return out;
}

}  // namespace

std::string to_tikz(const Poset& p, const std::optional<LevelOrder>& order) {
  const auto& ra = p.ranks();  // not_ranked for unranked posets
  std::vector<std::vector<int>> rows;
  if (order) {
    rows = order->levels;
  } else {
    rows = ra.levels;
    for (auto& row : rows)
      std::sort(row.begin(), row.end(),
                [&](int a, int b) { return p.label(a) < p.label(b); });
  }

  std::ostringstream os;
  os << "\\begin{tikzpicture}\n";
  for (size_t d = 0; d < rows.size(); ++d) {
    const auto& row = rows[d];
    const double k = static_cast<double>(row.size());
    for (size_t i = 0; i < row.size(); ++i) {
      double x = static_cast<double>(i) - (k - 1) / 2.0;
      os << "  \\node at (" << coordinate(x) << ", " << d << ") (" << row[i] << ") {$"
         << math_label(p.label(row[i])) << "$};\n";
    }
  }
  os << "\n";
  for (auto [a, b] : p.covers()) os << "  \\draw (" << a << ") -- (" << b << ");\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  if (p.ranked()) {
    for (const auto& level : p.ranks().levels) {
      os << "  { rank=same;";
      for (int v : level) os << " n" << v << ";";
      os << " }\n";
    }
  }
  for (auto [a, b] : p.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace macposets
