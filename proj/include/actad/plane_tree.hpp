#pragma once

#include <utility>
#include <vector>

#include "actad/element.hpp"

namespace actad {

// Mutable planar-tree view of a level-2 element. Node ids of a freshly built
// tree are factor positions minus one; child[p] is -1 for a leaf.
struct PlaneTree {
  struct Node {
    int arity = 0;
    std::vector<int> child;
    int parent = -1;
    int prong = -1;
  };

  std::vector<Node> nodes;
  int root = 0;

  static PlaneTree of(const Element& z);

  struct Canonical {
    Element element;
    std::vector<int> position;  // position[node id] = 1-based factor position, 0 if detached
  };
  // Requires every reachable node to have arity >= 1.
  Canonical canonical() const;

  // (node, prong) pairs of the reachable tree, left to right.
  std::vector<std::pair<int, int>> leaves() const;
  int add_node(int arity);
  void attach(int parent, int prong, int node);
};

}  // namespace actad
