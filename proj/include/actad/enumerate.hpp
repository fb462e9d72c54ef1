#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "actad/element.hpp"

namespace actad {

// Every valid element of B_level with at most max_factors factors per level
// and arities at most max_arity, sorted by canonical serialization.
std::vector<Element> enumerate(int level, int max_factors, int max_arity);

// Visits every canonical element of the level above `pool` whose factors are
// drawn from `pool` and whose factor count lies in [1, max_factors].
void for_each_element(const std::vector<Element>& pool, int max_factors,
                      const std::function<void(const Element&)>& visit);

// Number of level-2 elements with k factors, all of arity 2.
std::int64_t count_binary(int k);

// Sum over z in B_level with G(z) = y and m_z <= bound of the product of
// sizes(f_i(z)); absent keys have size 0.
std::int64_t free_plain_algebra_count(int level, const std::map<Element, std::int64_t>& sizes,
                                      const Element& y, int bound);

struct FreeEA2Count {
  std::int64_t catalan_factor = 0;
  std::int64_t sym_factor = 0;
  std::int64_t multiset_factor = 0;
  std::int64_t product = 0;
};

// Components of the n-th space of the free algebra on a set of size s_size.
FreeEA2Count free_ea2_component_count(std::int64_t s_size, int n);

}  // namespace actad
