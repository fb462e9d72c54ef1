#pragma once

#include <vector>

#include "actad/element.hpp"

namespace actad::oracle {

// Pointer-free planar rooted tree. Nodes carry the label they were created
// with; child[p] == -1 marks a leaf on prong p.
struct PlanarTree {
  struct Node {
    int arity = 0;
    int label = 0;
    std::vector<int> child;
  };
  std::vector<Node> nodes;
  int root = -1;

  std::vector<int> preorder() const;
  int leaf_count() const;
};

// Reads a level-2 element by grafting factor t+1 onto leaf i_t (leaves
// counted left to right). Node labels are factor positions.
PlanarTree tree_of(const Element& x);

// Preorder serialization; node labels are ignored.
Element element_of(const PlanarTree& t);

struct Substitution {
  Element element;
  std::vector<int> phi;  // preorder position of x's node j (0 at the substituted node)
  std::vector<int> psi;  // preorder position of y's node u
};

// Replaces the node labelled i in tree_of(x) by tree_of(y); the leaves of y
// receive the children of that node in order.
Substitution substitute(const Element& x, int i, const Element& y);

// All planar trees with 1..max_nodes nodes and arities 1..max_arity, serialized.
std::vector<Element> all_trees(int max_nodes, int max_arity);

}  // namespace actad::oracle
