#include "bv/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "bv/io.hpp"

namespace bv {

DiagramSpec make_diagram(const FractionTriple& t, bool reduce_braid) {
  BraidWord w = reduce_braid ? free_reduce(t.braid) : t.braid;
  DiagramSpec d;
  d.num = t.num;
  d.den = t.den;
  for (const auto& l : w) d.crossings.push_back({l.index, l.sign});
  d.strands = std::max({strand_bound(w),
                        t.num.leaves_through(t.num.active_end()),
                        t.den.leaves_through(t.den.active_end()), uint32_t{1}});
  return d;
}

namespace {

constexpr double kMargin = 24, kSpacing = 40, kRowT = 28, kRowB = 36;

std::string num_str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void line(std::string& out, double x1, double y1, double x2, double y2) {
  out += "<line x1=\"" + num_str(x1) + "\" y1=\"" + num_str(y1) + "\" x2=\"" +
         num_str(x2) + "\" y2=\"" + num_str(y2) + "\"/>";
}

// the under strand of a crossing: same diagonal, drawn with a central gap
void broken_line(std::string& out, double x1, double y1, double x2, double y2) {
  line(out, x1, y1, x1 + 0.38 * (x2 - x1), y1 + 0.38 * (y2 - y1));
  line(out, x1 + 0.62 * (x2 - x1), y1 + 0.62 * (y2 - y1), x2, y2);
}

uint32_t forest_depth(const Forest& f) {
  size_t d = 0;
  for (const auto& [i, t] : f.active())
    for (const auto& v : t) d = std::max(d, v.size());
  return static_cast<uint32_t>(d);
}

double col_x(uint32_t j) { return kMargin + j * kSpacing; }

// dir -1 grows the tree upward from the leaf line (numerator side),
// dir +1 downward from it (denominator side, drawn inverted)
void draw_forest(std::string& out, const Forest& f, uint32_t strands,
                 double leaf_line, int dir) {
  uint32_t depth = forest_depth(f);
  if (depth == 0) return;
  auto node_y = [&](size_t dep) {
    return leaf_line + dir * static_cast<double>(depth - dep) * kRowT;
  };
  for (const auto& [ti, tree] : f.active()) {
    uint32_t base = f.leaves_through(ti);
    std::map<std::string, double> xs;
    auto leaves = tree_leaves(tree);
    for (size_t i = 0; i < leaves.size(); ++i) xs[leaves[i]] = col_x(base + i);
    // interior positions: midpoints, children first
    std::vector<std::string> addrs(tree.begin(), tree.end());
    std::sort(addrs.begin(), addrs.end(),
              [](const std::string& a, const std::string& b) {
                return a.size() > b.size();
              });
    for (const auto& v : addrs)
      if (!tree_is_leaf(tree, v)) xs[v] = (xs[v + '0'] + xs[v + '1']) / 2;
    for (const auto& v : addrs) {
      if (tree_is_leaf(tree, v)) {
        if (v.size() < depth) line(out, xs[v], node_y(v.size()), xs[v], leaf_line);
        continue;
      }
      line(out, xs[v], node_y(v.size()), xs[v + '0'], node_y(v.size() + 1));
      line(out, xs[v], node_y(v.size()), xs[v + '1'], node_y(v.size() + 1));
    }
  }
  // strands on trivial trees hang straight through the tree band
  for (uint32_t g = 0; g < strands; ++g)
    if (f.leaf_addr(g).path.empty())
      line(out, col_x(g), node_y(0), col_x(g), leaf_line);
}

}  // namespace

std::string render_svg(const DiagramSpec& d) {
  uint32_t dn = forest_depth(d.num);
  uint32_t dd = forest_depth(d.den);
  double leaf_line = kMargin + dn * kRowT;
  double den_top = leaf_line + d.crossings.size() * kRowB;
  double w = 2 * kMargin + (d.strands - 1) * kSpacing;
  double h = den_top + dd * kRowT + kMargin;

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                    num_str(w) + " " + num_str(h) + "\" width=\"" + num_str(w) +
                    "\" height=\"" + num_str(h) + "\">\n";
  out += "<g fill=\"none\" stroke=\"#333\" stroke-width=\"2\" stroke-linecap=\"round\">\n";

  draw_forest(out, d.num, d.strands, leaf_line, -1);
  out += "\n";

  for (size_t r = 0; r < d.crossings.size(); ++r) {
    const Crossing& c = d.crossings[r];
    double y0 = leaf_line + r * kRowB;
    double y1 = y0 + kRowB;
    for (uint32_t j = 0; j < d.strands; ++j)
      if (j != c.index && j != c.index + 1) line(out, col_x(j), y0, col_x(j), y1);
    double xa = col_x(c.index);
    double xb = col_x(c.index + 1);
    out += "<g class=\"crossing\" data-index=\"" + std::to_string(c.index) +
           "\" data-sign=\"" + (c.sign > 0 ? "+1" : "-1") + "\">";
    if (c.sign > 0) {
      line(out, xa, y0, xb, y1);
      broken_line(out, xb, y0, xa, y1);
    } else {
      broken_line(out, xa, y0, xb, y1);
      line(out, xb, y0, xa, y1);
    }
    out += "</g>\n";
  }

  draw_forest(out, d.den, d.strands, den_top, 1);
  out += "\n</g>\n</svg>\n";
  return out;
}

std::string render_ascii(const DiagramSpec& d) {
  std::string out = "num: " + format(d.num) + "\n";
  std::string bar;
  for (uint32_t j = 0; j < d.strands; ++j) bar += j ? " |" : "|";
  out += bar + "\n";
  for (const Crossing& c : d.crossings) {
    std::string row = bar;
    row[2 * c.index] = ' ';
    row[2 * c.index + 1] = 'X';
    row[2 * c.index + 2] = ' ';
    out += row + "   s" + std::to_string(c.index) + (c.sign < 0 ? "'" : "") + "\n";
    out += bar + "\n";
  }
  out += "den: " + format(d.den) + "\n";
  out += "(lossy: over/under not shown)\n";
  return out;
}

}  // namespace bv
