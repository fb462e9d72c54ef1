#include "actad/render.hpp"

#include <sstream>

#include "actad/base.hpp"
#include "actad/plane_tree.hpp"

namespace actad {

namespace {

void ascii_tree(const Element& z, const std::string& prefix, std::ostream& out) {
  const HeadForm h = decompose_head(z);
  out << to_string(h.head) << "\n";
  size_t next = 0;
  for (int s = 1; s <= h.head.m(); ++s) {
    const bool last = s == h.head.m();
    out << prefix << (last ? "`-- " : "|-- ") << s << ": ";
    if (next < h.attachments.size() && h.attachments[next].slot == s) {
      ascii_tree(h.attachments[next++].subtree, prefix + (last ? "    " : "|   "), out);
    } else {
      out << (z.level() == 2 ? "leaf" : "free") << "\n";
    }
  }
}

std::string ascii(const Element& x) {
  if (x.level() == 0) return "*\n";
  std::ostringstream out;
  if (x.level() == 1) {
    out << x.arity() << "\n";
    for (int s = 1; s <= x.arity(); ++s) out << (s == x.arity() ? "`-- " : "|-- ") << s << ": leaf\n";
    return out.str();
  }
  ascii_tree(x, "", out);
  return out.str();
}

// Vertices of one level-2 tree under the id prefix `p`; returns the root id.
std::string dot_level2(const Element& t, const std::string& p, const std::string& indent, std::ostream& out) {
  const PlaneTree tree = PlaneTree::of(t);
  int leaf = 0;
  for (size_t v = 0; v < tree.nodes.size(); ++v) {
    out << indent << p << "n" << v + 1 << " [label=\"" << tree.nodes[v].arity << "\"];\n";
  }
  for (size_t v = 0; v < tree.nodes.size(); ++v) {
    for (size_t q = 0; q < tree.nodes[v].child.size(); ++q) {
      const int c = tree.nodes[v].child[q];
      std::string target;
      if (c >= 0) {
        target = p + "n" + std::to_string(c + 1);
      } else {
        target = p + "l" + std::to_string(++leaf);
        out << indent << target << " [shape=point];\n";
      }
      out << indent << p << "n" << v + 1 << " -> " << target << " [label=\"" << q + 1 << "\"];\n";
    }
  }
  return p + "n" + std::to_string(tree.root + 1);
}

void dot_level3(const Element& z, int& counter, std::ostream& out, std::string& root) {
  const HeadForm h = decompose_head(z);
  const int k = ++counter;
  const std::string p = "c" + std::to_string(k) + "_";
  out << "  subgraph cluster_" << k << " {\n    label=\"" << to_string(h.head) << "\";\n";
  root = dot_level2(h.head, p, "    ", out);
  out << "  }\n";
  for (const Attachment& a : h.attachments) {
    std::string child;
    dot_level3(a.subtree, counter, out, child);
    out << "  " << p << "n" << a.slot << " -> " << child << " [style=dashed, label=\"" << a.slot << "\"];\n";
  }
}

std::string dot(const Element& x) {
  std::ostringstream out;
  out << "digraph element {\n  node [shape=circle];\n";
  if (x.level() == 0) {
    out << "  p [shape=point];\n";
  } else if (x.level() == 1) {
    out << "  r [shape=point];\n  n1 [label=\"" << x.arity() << "\"];\n  r -> n1;\n";
    for (int s = 1; s <= x.arity(); ++s) {
      out << "  l" << s << " [shape=point];\n  n1 -> l" << s << " [label=\"" << s << "\"];\n";
    }
  } else if (x.level() == 2) {
    out << "  r [shape=point];\n";
    const std::string root = dot_level2(x, "", "  ", out);
    out << "  r -> " << root << ";\n";
  } else {
    int counter = 0;
    std::string root;
    dot_level3(x, counter, out, root);
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string render(const Element& x, RenderFormat format) {
  if (x.level() >= 4) throw Error(ErrorKind::LevelMismatch, "rendering supports levels 0 to 3");
  return format == RenderFormat::Ascii ? ascii(x) : dot(x);
}

}  // namespace actad
