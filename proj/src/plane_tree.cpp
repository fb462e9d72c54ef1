#include "actad/plane_tree.hpp"

#include <algorithm>
#include <functional>

#include "actad/base.hpp"

namespace actad {

PlaneTree PlaneTree::of(const Element& z) {
  if (z.level() != 2) throw Error(ErrorKind::LevelMismatch, "planar trees are level-2 elements");
  // Factor t+1 grafts onto leaf i_t of the tree built so far.
  PlaneTree t;
  t.root = t.add_node(z.factor(1).arity());
  std::vector<std::pair<int, int>> leaves;
  for (int p = 0; p < z.factor(1).arity(); ++p) leaves.emplace_back(0, p);
  for (int k = 2; k <= z.m(); ++k) {
    const size_t at = static_cast<size_t>(z.indices()[static_cast<size_t>(k - 2)] - 1);
    const auto [parent, prong] = leaves[at];
    const int id = t.add_node(z.factor(k).arity());
    t.attach(parent, prong, id);
    std::vector<std::pair<int, int>> fresh;
    for (int p = 0; p < z.factor(k).arity(); ++p) fresh.emplace_back(id, p);
    leaves.erase(leaves.begin() + static_cast<long>(at));
    leaves.insert(leaves.begin() + static_cast<long>(at), fresh.begin(), fresh.end());
  }
  return t;
}

int PlaneTree::add_node(int arity) {
  Node n;
  n.arity = arity;
  n.child.assign(static_cast<size_t>(arity), -1);
  nodes.push_back(std::move(n));
  return static_cast<int>(nodes.size()) - 1;
}

void PlaneTree::attach(int parent, int prong, int node) {
  nodes[static_cast<size_t>(parent)].child[static_cast<size_t>(prong)] = node;
  nodes[static_cast<size_t>(node)].parent = parent;
  nodes[static_cast<size_t>(node)].prong = prong;
}

PlaneTree::Canonical PlaneTree::canonical() const {
  // Canonical factor order is the preorder; each node grafts onto the leaf
  // its (parent, prong) occupies among the leaves of the nodes before it.
  std::vector<int> order;
  std::function<void(int)> walk = [&](int v) {
    const Node& n = nodes[static_cast<size_t>(v)];
    if (n.arity < 1) throw Error(ErrorKind::RangeViolation, "node of arity 0 in a plain tree");
    order.push_back(v);
    for (int c : n.child) {
      if (c >= 0) walk(c);
    }
  };
  walk(root);
  std::vector<Element> factors;
  std::vector<int> indices;
  std::vector<std::pair<int, int>> leaves;
  for (int v : order) {
    const Node& n = nodes[static_cast<size_t>(v)];
    factors.push_back(Element::corolla(n.arity));
    size_t at = 0;
    if (v != root) {
      at = static_cast<size_t>(std::find(leaves.begin(), leaves.end(), std::make_pair(n.parent, n.prong)) -
                               leaves.begin());
      indices.push_back(static_cast<int>(at) + 1);
      leaves.erase(leaves.begin() + static_cast<long>(at));
    }
    std::vector<std::pair<int, int>> fresh;
    for (int p = 0; p < n.arity; ++p) fresh.emplace_back(v, p);
    leaves.insert(leaves.begin() + static_cast<long>(at), fresh.begin(), fresh.end());
  }
  Canonical c{Element::from_parts(std::move(factors), std::move(indices)), std::vector<int>(nodes.size(), 0)};
  for (size_t q = 0; q < order.size(); ++q) c.position[static_cast<size_t>(order[q])] = static_cast<int>(q + 1);
  return c;
}

std::vector<std::pair<int, int>> PlaneTree::leaves() const {
  std::vector<std::pair<int, int>> out;
  std::function<void(int)> walk = [&](int v) {
    const Node& n = nodes[static_cast<size_t>(v)];
    for (int p = 0; p < n.arity; ++p) {
      const int c = n.child[static_cast<size_t>(p)];
      if (c < 0) out.emplace_back(v, p);
      else walk(c);
    }
  };
  walk(root);
  return out;
}

}  // namespace actad
