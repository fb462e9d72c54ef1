#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "actad/element.hpp"

namespace actad {

struct SuiteReport {
  explicit SuiteReport(std::string suite = {}) : name(std::move(suite)) {}

  std::string name;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::string first_failure;
  double seconds = 0;

  bool ok() const { return failures == 0 && checks > 0; }
  void fail(const std::string& what);
  void merge(const SuiteReport& other);
};

// Elements of one level bucketed by total arity, grown by random composition.
class ElementPool {
 public:
  ElementPool(std::vector<Element> seed_elements, std::uint64_t seed);

  // Adds `rounds` random composites with at most max_factors factors.
  void grow(int rounds, int max_factors);
  const Element& any();
  const Element& any_with_m_at_least(int m);
  // Some y with G(y) == g; the unit [g|] when the bucket is empty.
  Element with_G(const Element& g);
  std::mt19937_64& rng() { return rng_; }
  size_t size() const { return all_.size(); }

 private:
  void add(const Element& x);
  std::vector<Element> all_;
  std::map<Element, std::vector<size_t>> by_g_;
  std::mt19937_64 rng_;
};

// Level-2 compose and shuffle against tree substitution, over pairs with
// m_x + m_y <= max_nodes and arities <= max_arity.
SuiteReport check_oracle(int max_nodes, int max_arity);
enum class Axioms { Associativity, Phi, All };

// Associativity and/or both phi identities over all level-2 instances whose
// operands have at most max_nodes nodes in total.
SuiteReport check_axioms_exhaustive(int max_nodes, int max_arity, Axioms which);
// Randomized composable instances at level >= 3; `samples` per identity.
SuiteReport check_axioms_random(int level, int samples, std::uint64_t seed, Axioms which);
// Normalization of random raw sequences under all three swap strategies.
SuiteReport check_confluence(int level, int samples, std::uint64_t seed);
// count_binary against the Catalan recurrence for k = 1..max_k.
SuiteReport check_catalan(int max_k);
SuiteReport check_free_counts();
SuiteReport check_tree_presentations(int max_nodes);
SuiteReport check_symmetric_orders(int max_n);
SuiteReport check_ordinal_round_trip(int n, int samples, int depth, std::uint64_t seed);
SuiteReport check_ordinal_laws(int samples, std::uint64_t seed);
SuiteReport check_phi2_image(int max_factors, int max_arity);
// complete_square over every object with <= max_nodes nodes, and a search
// over all node permutations for a second completion.
SuiteReport check_cube_like(int max_nodes, int max_arity);
// Validity, functoriality and associativity of induced node permutations.
SuiteReport check_equivariance(int max_nodes, int max_arity);
SuiteReport check_unit_laws(int level, int max_factors, int max_arity);
SuiteReport check_runital(int max_factors, int max_arity);

enum class SuiteSize { Small, Medium, Large };

SuiteSize parse_suite_size(const std::string& text);
const std::vector<std::string>& suite_names();
// axioms, oracle, confluence, morphisms, ordinals, groups, counts.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed, SuiteSize size);

}  // namespace actad
