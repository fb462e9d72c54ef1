#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "actad/element.hpp"

namespace actad {

// Letters are +g for generator g (1-based) and -g for its inverse.
using Word = std::vector<int>;

struct Presentation {
  int generators = 0;
  std::vector<Word> relators;
  std::vector<std::string> names;  // optional; defaults to a1, a2, ...
};

std::string name_of(const Presentation& p, int g);
// <a1, a2 | a1^2, ...> with powers of repeated blocks collapsed.
std::string to_string(const Presentation& p);
// One relator per line in the a1*a2^-1 style.
std::string to_gap(const Presentation& p);

struct CosetTable {
  int generators = 0;
  std::vector<std::vector<int>> rows;  // column 2g-2 for g, 2g-1 for its inverse
  std::int64_t defined = 0;            // cosets ever created
  std::int64_t order = 0;
};

// Cosets of the trivial subgroup by relator scanning with immediate
// coincidence processing. Throws Overflow once more than max_cosets cosets
// have been defined.
CosetTable todd_coxeter(const Presentation& p, std::int64_t max_cosets = 100000);

// a1..a_{n-1} with a_i^2, (a_i a_{i+1})^3 and (a_i a_j)^2 for j > i + 1.
Presentation symmetric_presentation(int n);

// Adjacency tree of the nodes of a binary level-2 element. Nodes are factor
// positions; edges are sorted by (smaller end, larger end).
struct EdgeStructure {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> incidence;  // incidence[v-1]: 1-based edges at node v

  bool share_node(int e, int f) const;
};

EdgeStructure edge_structure(const Element& x);

struct TreePresentation {
  Presentation presentation;
  EdgeStructure edges;
};

// Generators are edges; a_i^2, (a_i a_j)^3 for edges sharing a node,
// (a_i a_j)^2 for disjoint edges and (a_i a_j a_k a_j)^2 for three edges at a node.
TreePresentation tree_presentation(const Element& x);

// Four edges a, b, c, d where a, b, d meet at one node and c continues b:
// a^2, b^2, c^2, d^2, (ab)^3, (bc)^3, (ad)^3, (db)^3, (daba)^2, (ac)^2, (cd)^2.
Presentation five_node_presentation();

struct RealizationReport {
  int nodes = 0;
  bool relators_hold = false;        // every relator is trivial on transpositions
  std::int64_t generated_order = 0;  // order of the subgroup of S_n they generate
  std::int64_t presented_order = 0;  // Todd-Coxeter order
  std::int64_t expected_order = 0;   // n!
  bool isomorphic = false;
};

// Sends each edge to the transposition of its end nodes.
RealizationReport verify_symmetric_realization(const Element& x, std::int64_t max_cosets = 100000);
RealizationReport verify_symmetric_realization(const TreePresentation& tp,
                                               std::int64_t max_cosets = 100000);

std::int64_t factorial(int n);

}  // namespace actad
