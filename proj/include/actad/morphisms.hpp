#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "actad/element.hpp"

namespace actad {

using Perm = std::vector<int>;  // 1-based images: p[k-1] = image of k

Perm identity_perm(int n);
Perm inverse(const Perm& p);
// (a * b)(k) = a(b(k)).
Perm compose_perm(const Perm& a, const Perm& b);
bool is_perm(const Perm& p);

// Prong permutations per node of a level-2 element. node_perms[t-1] sends
// prong q of source factor t to prong node_perms[t-1][q-1] of the same node.
struct OneMor2 {
  Element source;
  std::vector<Perm> node_perms;
  Element target;
  Perm leaf_perm;     // source leaf -> target leaf
  Perm node_relabel;  // source factor position -> target factor position
};

// Node permutation: target factor t is source factor sigma(t).
struct TwoMor2 {
  Element source;
  Element target;
  Perm sigma;
};

OneMor2 apply_one(const Element& source, const std::vector<Perm>& node_perms);
// Keeps the index sequence; nullopt when the permuted factors are not a valid element.
std::optional<TwoMor2> apply_two(const Element& source, const Perm& sigma);
// A node permutation onto an arbitrary target with matching factors.
TwoMor2 two_between(const Element& source, const Perm& sigma, const Element& target);

// g after f; g.source must equal f.target.
OneMor2 then(const OneMor2& f, const OneMor2& g);
TwoMor2 then(const TwoMor2& f, const TwoMor2& g);
OneMor2 inverse(const OneMor2& f);
TwoMor2 inverse(const TwoMor2& f);

// f : x -> x1 and g : x -> x2 close up through f2 : x2 -> w and g2 : x1 -> w.
struct Square12 {
  OneMor2 f;
  TwoMor2 g;
  OneMor2 f2;
  TwoMor2 g2;
};

Square12 complete_square(const OneMor2& f, const TwoMor2& g);
// Corners agree, f2 carries f's prong permutations along g, and node tracking commutes.
bool is_square(const Square12& s);

// For f : x -> x' and g : y -> y', the node permutation x o_i y -> x' o_{i'} y'
// where i' is the position of source factor i in x'.
TwoMor2 induced_two_on_composition(const Element& x, int i, const Element& y,
                                   const TwoMor2& f, const TwoMor2& g);
// Position in f.target of source factor i.
int moved_slot(const TwoMor2& f, int i);

// Visits every {1}-morphism out of x; throws SizeBound above 6 factors or
// past max_count morphisms.
void for_each_one(const Element& x, const std::function<void(const OneMor2&)>& visit,
                  std::int64_t max_count = 1000000);
// Visits every sigma accepted by apply_two; throws SizeBound above 6 factors.
void for_each_two(const Element& x, const std::function<void(const TwoMor2&)>& visit);

std::vector<OneMor2> enumerate_one(const Element& x);
std::vector<TwoMor2> enumerate_two(const Element& x);

}  // namespace actad
