#pragma once

#include <set>
#include <vector>

#include "actad/element.hpp"
#include "actad/ordinal.hpp"

namespace actad {

// Sum over head prongs: 1 for a free prong, w^(value of the subtree) otherwise.
Ordinal eval_phi2(const Element& z);

// Phi_n with one weight per factor (default all 1). A level-1 element sums its
// weights; above that, Phi_n(z) = Phi_{n-1}(head; args) + d, where 1 + d is the
// head weight, a free slot contributes 1 and a slot carrying subtree s
// contributes phi(n-1, e) with 1 + e = Phi_n(s; weights of s).
Ordinal eval_phin(const Element& z);
Ordinal eval_phin(const Element& z, const std::vector<Ordinal>& alphas);

// A level-n element with eval_phin(encode(beta, n)) == beta, for 1 <= beta < phi(n, 0).
Element encode(const Ordinal& beta, int n);

std::set<Ordinal> image_sweep(int n, int max_factors, int max_arity);

}  // namespace actad
