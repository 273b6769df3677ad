#include "braidthom/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace braidthom {
namespace {

constexpr double kMargin = 30.0;
constexpr double kLeafGap = 40.0;
constexpr double kLevelGap = 22.0;
constexpr double kRowHeight = 36.0;
constexpr double kTwistBand = 24.0;

double leaf_x(int slot) { return kMargin + (slot - 1) * kLeafGap; }

struct Node {
  double x;
  int depth;
  bool leaf;
  int left_child = -1;
  int right_child = -1;
};

// Nodes in preorder; leaves get consecutive slots.
int layout(const std::string& bits, std::size_t& pos, int depth, int& next_leaf,
           std::vector<Node>& nodes) {
  const int id = static_cast<int>(nodes.size());
  nodes.push_back({0.0, depth, bits[pos] == '0'});
  if (bits[pos++] == '0') {
    nodes[static_cast<std::size_t>(id)].x = leaf_x(++next_leaf);
    return id;
  }
  const int l = layout(bits, pos, depth + 1, next_leaf, nodes);
  const int r = layout(bits, pos, depth + 1, next_leaf, nodes);
  Node& n = nodes[static_cast<std::size_t>(id)];
  n.left_child = l;
  n.right_child = r;
  n.x = (nodes[static_cast<std::size_t>(l)].x + nodes[static_cast<std::size_t>(r)].x) / 2.0;
  return id;
}

int max_depth(const std::vector<Node>& nodes) {
  int d = 0;
  for (const Node& n : nodes) d = std::max(d, n.depth);
  return d;
}

// `leaf_y` is where the leaves sit; `dir` is -1 for a tree growing upward
// from its leaves (range tree), +1 for one hanging below (domain tree).
void draw_tree(std::string& out, const Tree& t, double leaf_y, int dir, const char* cls) {
  std::vector<Node> nodes;
  std::size_t pos = 0;
  int next_leaf = 0;
  layout(t.bits(), pos, 0, next_leaf, nodes);
  const int depth = max_depth(nodes);
  auto y_of = [&](const Node& n) {
    return n.leaf ? leaf_y : leaf_y + dir * (depth - n.depth) * kLevelGap;
  };
  out += fmt::format("  <g class=\"{}\">\n", cls);
  for (const Node& n : nodes) {
    if (n.leaf) continue;
    for (int c : {n.left_child, n.right_child}) {
      const Node& child = nodes[static_cast<std::size_t>(c)];
      out += fmt::format(
          "    <line class=\"tree-edge\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n",
          n.x, y_of(n), child.x, y_of(child));
    }
  }
  for (const Node& n : nodes) {
    out += fmt::format("    <circle class=\"node\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2.50\"/>\n", n.x,
                       y_of(n));
  }
  out += "  </g>\n";
}

}  // namespace

std::string render_svg(const Element& g) {
  const int n = g.strands();
  const auto& letters = g.braid().letters();
  const auto rows = static_cast<int>(letters.size());
  auto depth_of = [](const Tree& t) {
    std::vector<Node> nodes;
    std::size_t pos = 0;
    int next_leaf = 0;
    layout(t.bits(), pos, 0, next_leaf, nodes);
    return max_depth(nodes);
  };
  const double top_leaves = kMargin + depth_of(g.left) * kLevelGap;
  const double braid_bottom = top_leaves + std::max(rows, 1) * kRowHeight;
  const double bottom_leaves = braid_bottom + kTwistBand;
  const double height = bottom_leaves + depth_of(g.right) * kLevelGap + kMargin;
  const double width = leaf_x(n) + kMargin;
  // Row r spans y(r) (top) to y(r+1); boundary `rows` is the braid bottom.
  auto row_y = [&](int boundary) {
    return rows == 0 ? (boundary == 0 ? top_leaves : braid_bottom)
                     : top_leaves + boundary * kRowHeight;
  };

  std::string out;
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.2f}\" height=\"{:.2f}\" "
      "viewBox=\"0 0 {:.2f} {:.2f}\">\n",
      width, height, width, height);
  out += "  <style>line,polyline{stroke:#000;stroke-width:1.6;fill:none}"
         ".halo{stroke:#fff;stroke-width:7}circle{fill:#000}"
         "text{font-family:monospace;font-size:11px}</style>\n";
  draw_tree(out, g.left, top_leaves, -1, "range-tree");
  draw_tree(out, g.right, bottom_leaves, +1, "domain-tree");

  // slot_at[b][s]: position of strand s (bottom start, 0-based) at boundary b.
  std::vector<std::vector<int>> slot_at(static_cast<std::size_t>(rows) + 1,
                                        std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<int> strand_at(static_cast<std::size_t>(n));
  std::iota(strand_at.begin(), strand_at.end(), 0);
  for (int b = rows;; --b) {
    for (int p = 0; p < n; ++p) {
      slot_at[static_cast<std::size_t>(b)][static_cast<std::size_t>(strand_at[static_cast<std::size_t>(p)])] = p + 1;
    }
    if (b == 0) break;
    const Letter& l = letters[static_cast<std::size_t>(b - 1)];
    std::swap(strand_at[static_cast<std::size_t>(l.index - 1)],
              strand_at[static_cast<std::size_t>(l.index)]);
  }

  out += "  <g class=\"strands\">\n";
  for (int s = 0; s < n; ++s) {
    std::string points = fmt::format("{:.2f},{:.2f}", leaf_x(s + 1), bottom_leaves);
    for (int b = rows; b >= 0; --b) {
      points += fmt::format(" {:.2f},{:.2f}",
                            leaf_x(slot_at[static_cast<std::size_t>(b)][static_cast<std::size_t>(s)]),
                            row_y(b));
    }
    out += fmt::format("    <polyline class=\"strand\" data-strand=\"{}\" points=\"{}\"/>\n", s + 1,
                       points);
  }
  out += "  </g>\n";

  for (int r = 0; r < rows; ++r) {
    const Letter& l = letters[static_cast<std::size_t>(r)];
    // s_i: the strand entering at bottom slot i passes under, so the over
    // strand runs from slot i+1 below to slot i above; inverted for s_i^-1.
    const int from = l.sign > 0 ? l.index + 1 : l.index;
    const int to = l.sign > 0 ? l.index : l.index + 1;
    const double x1 = leaf_x(from);
    const double y1 = row_y(r + 1);
    const double x2 = leaf_x(to);
    const double y2 = row_y(r);
    // Trim the halo so it does not erase the strands' joints.
    const double t = 0.22;
    const double hx1 = x1 + (x2 - x1) * t;
    const double hy1 = y1 + (y2 - y1) * t;
    const double hx2 = x2 - (x2 - x1) * t;
    const double hy2 = y2 - (y2 - y1) * t;
    out += fmt::format("  <g class=\"crossing\" data-generator=\"s{}\" data-sign=\"{}\">\n",
                       l.index, l.sign > 0 ? "+" : "-");
    out += fmt::format(
        "    <line class=\"halo\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", hx1,
        hy1, hx2, hy2);
    out += fmt::format(
        "    <line class=\"over\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", x1,
        y1, x2, y2);
    out += "  </g>\n";
  }

  for (int s = 0; s < n; ++s) {
    const auto m = g.twists()[static_cast<std::size_t>(s)];
    if (m == 0) continue;
    out += fmt::format(
        "  <text class=\"twist\" data-strand=\"{}\" x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", s + 1,
        leaf_x(s + 1) + 4.0, braid_bottom + kTwistBand * 0.6, m);
  }
  out += "</svg>\n";
  return out;
}

void write_svg(const Element& g, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << render_svg(g);
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace braidthom
