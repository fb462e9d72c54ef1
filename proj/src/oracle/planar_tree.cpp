#include "actad/oracle/planar_tree.hpp"

#include <functional>
#include <utility>

namespace actad::oracle {

namespace {

// Leaves in left-to-right order as (node, prong); nodes outside `present`
// count as leaves of their parent.
std::vector<std::pair<int, int>> leaves(const PlanarTree& t, const std::vector<bool>* present) {
  std::vector<std::pair<int, int>> out;
  std::function<void(int)> walk = [&](int v) {
    const auto& node = t.nodes[static_cast<size_t>(v)];
    for (int p = 0; p < node.arity; ++p) {
      int c = node.child[static_cast<size_t>(p)];
      if (c < 0 || (present && !(*present)[static_cast<size_t>(c)])) {
        out.emplace_back(v, p);
      } else {
        walk(c);
      }
    }
  };
  walk(t.root);
  return out;
}

}  // namespace

std::vector<int> PlanarTree::preorder() const {
  std::vector<int> out;
  std::function<void(int)> walk = [&](int v) {
    out.push_back(v);
    for (int c : nodes[static_cast<size_t>(v)].child) {
      if (c >= 0) walk(c);
    }
  };
  walk(root);
  return out;
}

int PlanarTree::leaf_count() const { return static_cast<int>(leaves(*this, nullptr).size()); }

PlanarTree tree_of(const Element& x) {
  if (x.level() != 2) throw Error(ErrorKind::LevelMismatch, "planar trees are level-2 elements");
  PlanarTree t;
  for (int j = 1; j <= x.m(); ++j) {
    PlanarTree::Node n;
    n.arity = x.factor(j).arity();
    n.label = j;
    n.child.assign(static_cast<size_t>(n.arity), -1);
    t.nodes.push_back(n);
  }
  t.root = 0;
  std::vector<bool> present(t.nodes.size(), false);
  present[0] = true;
  for (int j = 2; j <= x.m(); ++j) {
    auto ls = leaves(t, &present);
    const int a = x.indices()[static_cast<size_t>(j - 2)];
    if (a < 1 || a > static_cast<int>(ls.size())) {
      throw Error(ErrorKind::RangeViolation, "oracle: leaf index out of range");
    }
    auto [parent, prong] = ls[static_cast<size_t>(a - 1)];
    t.nodes[static_cast<size_t>(parent)].child[static_cast<size_t>(prong)] = j - 1;
    present[static_cast<size_t>(j - 1)] = true;
  }
  return t;
}

Element element_of(const PlanarTree& t) {
  std::vector<int> order = t.preorder();
  std::vector<Element> factors;
  std::vector<int> indices;
  std::vector<bool> present(t.nodes.size(), false);
  std::vector<int> parent(t.nodes.size(), -1), prong(t.nodes.size(), -1);
  for (size_t v = 0; v < t.nodes.size(); ++v) {
    for (size_t p = 0; p < t.nodes[v].child.size(); ++p) {
      int c = t.nodes[v].child[p];
      if (c >= 0) {
        parent[static_cast<size_t>(c)] = static_cast<int>(v);
        prong[static_cast<size_t>(c)] = static_cast<int>(p);
      }
    }
  }
  for (size_t s = 0; s < order.size(); ++s) {
    const int v = order[s];
    factors.push_back(Element::corolla(t.nodes[static_cast<size_t>(v)].arity));
    if (s > 0) {
      auto ls = leaves(t, &present);
      std::pair<int, int> want{parent[static_cast<size_t>(v)], prong[static_cast<size_t>(v)]};
      for (size_t q = 0; q < ls.size(); ++q) {
        if (ls[q] == want) indices.push_back(static_cast<int>(q + 1));
      }
    }
    present[static_cast<size_t>(v)] = true;
  }
  return Element::from_parts(std::move(factors), std::move(indices));
}

Substitution substitute(const Element& x, int i, const Element& y) {
  PlanarTree tx = tree_of(x);
  PlanarTree ty = tree_of(y);
  const int target = i - 1;
  if (ty.leaf_count() != tx.nodes[static_cast<size_t>(target)].arity) {
    throw Error(ErrorKind::NotComposable, "oracle: leaf count differs from node arity");
  }
  PlanarTree out;
  out.nodes = tx.nodes;
  const int offset = static_cast<int>(out.nodes.size());
  for (auto n : ty.nodes) {
    for (int& c : n.child) {
      if (c >= 0) c += offset;
    }
    n.label = -n.label;  // y labels are negative
    out.nodes.push_back(n);
  }
  const std::vector<int> below = tx.nodes[static_cast<size_t>(target)].child;
  auto ly = leaves(ty, nullptr);
  for (size_t c = 0; c < ly.size(); ++c) {
    auto [v, p] = ly[c];
    out.nodes[static_cast<size_t>(v + offset)].child[static_cast<size_t>(p)] = below[c];
  }
  const int yroot = ty.root + offset;
  out.root = tx.root == target ? yroot : tx.root;
  for (auto& n : out.nodes) {
    for (int& c : n.child) {
      if (c == target) c = yroot;
    }
  }
  out.nodes[static_cast<size_t>(target)].child.clear();
  out.nodes[static_cast<size_t>(target)].arity = 0;

  Substitution s;
  s.element = element_of(out);
  s.phi.assign(static_cast<size_t>(x.m()), 0);
  s.psi.assign(static_cast<size_t>(y.m()), 0);
  std::vector<int> order = out.preorder();
  for (size_t q = 0; q < order.size(); ++q) {
    int label = out.nodes[static_cast<size_t>(order[q])].label;
    if (label > 0) s.phi[static_cast<size_t>(label - 1)] = static_cast<int>(q + 1);
    else s.psi[static_cast<size_t>(-label - 1)] = static_cast<int>(q + 1);
  }
  return s;
}

std::vector<Element> all_trees(int max_nodes, int max_arity) {
  // A shape is its preorder token list: arity, then per prong 0 (leaf) or a subtree.
  using Shape = std::vector<int>;
  std::function<std::vector<std::pair<Shape, int>>(int)> trees;
  std::function<std::vector<std::pair<Shape, int>>(int, int)> forests;
  forests = [&](int prongs, int budget) {
    std::vector<std::pair<Shape, int>> out;
    if (prongs == 0) {
      out.push_back({{}, 0});
      return out;
    }
    for (auto& [rest, used] : forests(prongs - 1, budget)) {
      Shape leaf = rest;
      leaf.insert(leaf.begin(), 0);
      out.push_back({leaf, used});
      for (auto& [sub, n] : trees(budget - used)) {
        Shape s = sub;
        s.insert(s.end(), rest.begin(), rest.end());
        out.push_back({s, used + n});
      }
    }
    return out;
  };
  trees = [&](int budget) {
    std::vector<std::pair<Shape, int>> out;
    if (budget < 1) return out;
    for (int a = 1; a <= max_arity; ++a) {
      for (auto& [f, used] : forests(a, budget - 1)) {
        Shape s{a};
        s.insert(s.end(), f.begin(), f.end());
        out.push_back({s, used + 1});
      }
    }
    return out;
  };
  std::vector<Element> result;
  for (auto& [shape, n] : trees(max_nodes)) {
    PlanarTree t;
    size_t pos = 0;
    std::function<int()> build = [&]() {
      int a = shape[pos++];
      int id = static_cast<int>(t.nodes.size());
      t.nodes.push_back({a, id + 1, std::vector<int>(static_cast<size_t>(a), -1)});
      for (int p = 0; p < a; ++p) {
        if (shape[pos] == 0) {
          ++pos;
        } else {
          int c = build();
          t.nodes[static_cast<size_t>(id)].child[static_cast<size_t>(p)] = c;
        }
      }
      return id;
    };
    t.root = build();
    result.push_back(element_of(t));
  }
  return result;
}

}  // namespace actad::oracle
