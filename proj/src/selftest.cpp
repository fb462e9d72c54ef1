#include "actad/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "actad/base.hpp"
#include "actad/enumerate.hpp"
#include "actad/morphisms.hpp"
#include "actad/oracle/planar_tree.hpp"
#include "actad/ordinal.hpp"
#include "actad/phi_map.hpp"
#include "actad/presentation.hpp"
#include "actad/units.hpp"

namespace actad {

void SuiteReport::fail(const std::string& what) {
  if (failures++ == 0) first_failure = what;
}

void SuiteReport::merge(const SuiteReport& other) {
  checks += other.checks;
  if (other.failures && !failures) first_failure = other.name + ": " + other.first_failure;
  failures += other.failures;
  seconds += other.seconds;
}

namespace {

class Timer {
 public:
  explicit Timer(SuiteReport& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  SuiteReport& r_;
  std::chrono::steady_clock::time_point start_;
};

size_t pick(std::mt19937_64& rng, size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); }
int pick_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string show(const Element& x, int i, const Element& y) {
  return to_string(x) + " o_" + std::to_string(i) + " " + to_string(y);
}

// Level-2 trees bucketed by node count.
std::vector<std::vector<Element>> trees_by_nodes(int max_nodes, int max_arity) {
  std::vector<std::vector<Element>> out(static_cast<size_t>(max_nodes + 1));
  for (const Element& t : oracle::all_trees(max_nodes, max_arity)) out[static_cast<size_t>(t.m())].push_back(t);
  return out;
}

bool fits(const Element& y, const Element& x, int i) { return total_G(y) == x.factor(i); }

Element slot_type(const Element& p, int a) { return p.level() == 1 ? Element::point() : p.factor(a); }

std::vector<Element> binary_elements(int k) {
  std::vector<Element> out;
  for_each_element({Element::corolla(2)}, k, [&](const Element& e) {
    if (e.m() == k) out.push_back(e);
  });
  return out;
}

}  // namespace

ElementPool::ElementPool(std::vector<Element> seed_elements, std::uint64_t seed) : rng_(seed) {
  for (const Element& x : seed_elements) add(x);
}

void ElementPool::add(const Element& x) {
  by_g_[total_G(x)].push_back(all_.size());
  all_.push_back(x);
}

void ElementPool::grow(int rounds, int max_factors) {
  for (int r = 0; r < rounds; ++r) {
    const Element x = any();
    const int k = pick_int(rng_, 1, x.m());
    const Element y = with_G(x.factor(k));
    if (x.m() + y.m() - 1 > max_factors) continue;
    add(compose(x, k, y).result);
  }
}

const Element& ElementPool::any() { return all_[pick(rng_, all_.size())]; }

const Element& ElementPool::any_with_m_at_least(int m) {
  for (int tries = 0; tries < 100000; ++tries) {
    const Element& x = any();
    if (x.m() >= m) return x;
  }
  throw Error(ErrorKind::SizeBound, "pool has no element with " + std::to_string(m) + " factors");
}

Element ElementPool::with_G(const Element& g) {
  auto it = by_g_.find(g);
  if (it == by_g_.end()) return Element::from_parts({g}, {});
  return all_[it->second[pick(rng_, it->second.size())]];
}

SuiteReport check_oracle(int max_nodes, int max_arity) {
  SuiteReport r{"oracle"};
  Timer timer(r);
  auto trees = oracle::all_trees(max_nodes - 1, max_arity);
  for (const Element& x : trees) {
    for (const Element& y : trees) {
      if (x.m() + y.m() > max_nodes) continue;
      for (int i = 1; i <= x.m(); ++i) {
        if (total_G(y).arity() != x.factor(i).arity()) continue;
        ++r.checks;
        Composite c = compose(x, i, y);
        oracle::Substitution s = oracle::substitute(x, i, y);
        if (c.result != s.element || c.shuffle.phi != s.phi || c.shuffle.psi != s.psi) {
          r.fail(show(x, i, y) + " = " + to_string(c.result) + ", tree substitution gives " +
                 to_string(s.element));
        }
      }
    }
  }
  return r;
}

SuiteReport check_axioms_exhaustive(int max_nodes, int max_arity, Axioms which) {
  SuiteReport r{"axioms/level2"};
  const bool assoc = which != Axioms::Phi, phis = which != Axioms::Associativity;
  Timer timer(r);
  auto by_nodes = trees_by_nodes(max_nodes - 2, max_arity);
  auto fail_if = [&](const AxiomCheck& c, const std::string& what) {
    ++r.checks;
    if (!c.ok) r.fail(what + ": " + c.lhs + " != " + c.rhs);
  };
  for (int mx = 1; mx <= max_nodes - 2; ++mx) {
    for (const Element& x : by_nodes[static_cast<size_t>(mx)]) {
      const int budget = max_nodes - mx;
      std::vector<const Element*> rest;
      for (int n = 1; n < budget; ++n) {
        for (const Element& t : by_nodes[static_cast<size_t>(n)]) rest.push_back(&t);
      }
      for (int i = 1; i <= x.m(); ++i) {
        for (const Element* y : rest) {
          if (!fits(*y, x, i)) continue;
          for (int j = i + 1; j <= x.m(); ++j) {
            for (const Element* z : rest) {
              if (y->m() + z->m() > budget || !fits(*z, x, j)) continue;
              const std::string at = to_string(x) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                     " y=" + to_string(*y) + " z=" + to_string(*z);
              if (assoc) fail_if(check_associativity(x, i, *y, j, *z), "associativity " + at);
              for (int k = 1; k <= x.m() && phis; ++k) {
                if (k != i && k != j) fail_if(check_phi_long(x, i, *y, j, *z, k), "phi long k=" + std::to_string(k) + " " + at);
              }
            }
          }
          // Short identity: y at i, t at k, j strictly between.
          for (int k = i + 2; k <= x.m() && phis; ++k) {
            for (const Element* t : rest) {
              if (y->m() + t->m() > budget || !fits(*t, x, k)) continue;
              for (int j = i + 1; j < k; ++j) {
                fail_if(check_phi_short(x, i, *y, j, k, *t),
                        "phi short " + to_string(x) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                            " k=" + std::to_string(k) + " y=" + to_string(*y) + " t=" + to_string(*t));
              }
            }
          }
        }
      }
    }
  }
  return r;
}

SuiteReport check_axioms_random(int level, int samples, std::uint64_t seed, Axioms which) {
  SuiteReport r{"axioms/level" + std::to_string(level)};
  const bool assoc = which != Axioms::Phi, phis = which != Axioms::Associativity;
  Timer timer(r);
  ElementPool pool(level == 3 ? enumerate(3, 3, 2) : enumerate(level, 2, 2), seed);
  pool.grow(2000, 8);
  auto& rng = pool.rng();
  auto fail_if = [&](const AxiomCheck& c, const std::string& what) {
    ++r.checks;
    if (!c.ok) r.fail(what + ": " + c.lhs + " != " + c.rhs);
  };
  for (int s = 0; s < samples; ++s) {
    {
      const Element x = pool.any_with_m_at_least(2);
      const int i = pick_int(rng, 1, x.m() - 1), j = pick_int(rng, i + 1, x.m());
      const Element y = pool.with_G(x.factor(i)), z = pool.with_G(x.factor(j));
      if (assoc) fail_if(check_associativity(x, i, y, j, z), "associativity " + to_string(x));
    }
    if (!phis) continue;
    const Element x = pool.any_with_m_at_least(3);
    std::vector<int> ks(static_cast<size_t>(x.m()));
    for (int q = 0; q < x.m(); ++q) ks[static_cast<size_t>(q)] = q + 1;
    std::shuffle(ks.begin(), ks.end(), rng);
    std::sort(ks.begin(), ks.begin() + 3);
    const int i = ks[0], j = ks[1], k = ks[2];
    const Element y = pool.with_G(x.factor(i));
    fail_if(check_phi_short(x, i, y, j, k, pool.with_G(x.factor(k))), "phi short " + to_string(x));
    // Any two of the three slots compose; the third is tracked.
    const int skip = pick_int(rng, 0, 2);
    std::vector<int> pair;
    for (int q = 0; q < 3; ++q) {
      if (q != skip) pair.push_back(ks[static_cast<size_t>(q)]);
    }
    const int a = pair[0], b = pair[1], c = ks[static_cast<size_t>(skip)];
    fail_if(check_phi_long(x, a, pool.with_G(x.factor(a)), b, pool.with_G(x.factor(b)), c),
            "phi long " + to_string(x));
  }
  return r;
}

SuiteReport check_confluence(int level, int samples, std::uint64_t seed) {
  SuiteReport r{"confluence/level" + std::to_string(level)};
  Timer timer(r);
  std::mt19937_64 rng(seed);
  std::vector<Element> factors = enumerate(level - 1, 3, 3);
  std::map<Element, std::vector<Element>> by_g;
  for (const Element& f : factors) by_g[total_G(f)].push_back(f);
  for (int s = 0; s < samples; ++s) {
    GammaSequence g;
    g.factors.push_back(factors[pick(rng, factors.size())]);
    Element partial = g.factors[0];
    const int steps = pick_int(rng, 1, 5);
    for (int t = 0; t < steps; ++t) {
      const int a = pick_int(rng, 1, partial.m());
      auto it = by_g.find(slot_type(partial, a));
      if (it == by_g.end()) continue;
      const Element& f = it->second[pick(rng, it->second.size())];
      partial = compose(partial, a, f).result;
      g.factors.push_back(f);
      g.indices.push_back(a);
    }
    ++r.checks;
    const Normalized left = normalize(g, SwapStrategy::LeftFirst);
    std::vector<Normalized> others{normalize(g, SwapStrategy::RightFirst)};
    for (std::uint64_t k = 0; k < 3; ++k) others.push_back(normalize(g, SwapStrategy::Random, seed * 31 + k + static_cast<std::uint64_t>(s)));
    bool ok = total_G(left.element) == partial;
    for (size_t p = 0; p < g.factors.size(); ++p) {
      ok = ok && left.element.factor(left.perm[p]) == g.factors[p];
    }
    for (const Normalized& n : others) ok = ok && n.element == left.element && n.perm == left.perm;
    if (!ok) r.fail("raw sequence headed by " + to_string(g.factors[0]) + " normalizes to " + to_string(left.element));
  }
  return r;
}

SuiteReport check_catalan(int max_k) {
  SuiteReport r{"catalan"};
  Timer timer(r);
  const std::vector<std::int64_t> table{1, 2, 5, 14, 42, 132, 429, 1430};
  std::vector<std::int64_t> c{1};
  for (int k = 1; k <= max_k; ++k) {
    std::int64_t next = 0;
    for (int i = 0; i < k; ++i) next += c[static_cast<size_t>(i)] * c[static_cast<size_t>(k - 1 - i)];
    c.push_back(next);
    ++r.checks;
    const std::int64_t got = count_binary(k);
    const bool table_ok = k > static_cast<int>(table.size()) || table[static_cast<size_t>(k - 1)] == next;
    if (got != next || !table_ok) {
      r.fail("count_binary(" + std::to_string(k) + ") = " + std::to_string(got) + ", Catalan " + std::to_string(next));
    }
  }
  return r;
}

SuiteReport check_free_counts() {
  SuiteReport r{"free-counts"};
  Timer timer(r);
  auto expect = [&](std::int64_t s, int n, FreeEA2Count want) {
    ++r.checks;
    FreeEA2Count got = free_ea2_component_count(s, n);
    if (got.catalan_factor != want.catalan_factor || got.sym_factor != want.sym_factor ||
        got.multiset_factor != want.multiset_factor || got.product != want.product) {
      r.fail("free_ea2_component_count(" + std::to_string(s) + ", " + std::to_string(n) + ")");
    }
  };
  expect(1, 2, {1, 2, 1, 2});
  expect(2, 3, {2, 6, 3, 36});
  expect(0, 4, {5, 24, 0, 0});
  for (std::int64_t c = 0; c <= 4; ++c) {
    ++r.checks;
    const std::int64_t got = free_plain_algebra_count(1, {{Element::point(), c}}, Element::point(), 3);
    if (got != c + c * c + c * c * c) r.fail("level-1 free count for c = " + std::to_string(c));
  }
  std::int64_t prev = -1;
  for (int bound = 1; bound <= 4; ++bound) {
    ++r.checks;
    const std::int64_t got = free_plain_algebra_count(2, {{Element::corolla(2), 1}}, Element::corolla(bound + 1), bound);
    if (got != count_binary(bound)) r.fail("binary free count at bound " + std::to_string(bound));
    const std::int64_t all = free_plain_algebra_count(2, {{Element::corolla(1), 2}, {Element::corolla(2), 1}},
                                                      Element::corolla(2), bound);
    ++r.checks;
    if (all < prev) r.fail("free count not monotone in the bound");
    prev = all;
  }
  return r;
}

SuiteReport check_tree_presentations(int max_nodes) {
  SuiteReport r{"tree-presentations"};
  Timer timer(r);
  for (int k = 1; k <= max_nodes; ++k) {
    for (const Element& x : binary_elements(k)) {
      ++r.checks;
      try {
        RealizationReport rep = verify_symmetric_realization(x);
        if (!rep.isomorphic) {
          r.fail(to_string(x) + ": order " + std::to_string(rep.presented_order) + ", generated " +
                 std::to_string(rep.generated_order) + ", expected " + std::to_string(rep.expected_order));
        }
      } catch (const Error& e) {
        r.fail(to_string(x) + ": " + e.what());
      }
    }
  }
  ++r.checks;
  const std::int64_t g = todd_coxeter(five_node_presentation()).order;
  if (g != 120) r.fail("five-node presentation has order " + std::to_string(g));
  return r;
}

SuiteReport check_symmetric_orders(int max_n) {
  SuiteReport r{"symmetric-orders"};
  Timer timer(r);
  for (int n = 2; n <= max_n; ++n) {
    ++r.checks;
    const std::int64_t got = todd_coxeter(symmetric_presentation(n)).order;
    if (got != factorial(n)) r.fail("S_" + std::to_string(n) + " has order " + std::to_string(got));
  }
  return r;
}

SuiteReport check_ordinal_round_trip(int n, int samples, int depth, std::uint64_t seed) {
  SuiteReport r{"ordinal-round-trip/n" + std::to_string(n)};
  Timer timer(r);
  std::mt19937_64 rng(seed);
  const Ordinal bound = phi(n, Ordinal());
  for (int s = 0; s < samples; ++s) {
    const Ordinal beta = random_ordinal(rng, n, depth);
    ++r.checks;
    if (beta < Ordinal::one() || !(beta < bound)) {
      r.fail("sample " + to_string(beta) + " outside [1, " + to_string(bound) + ")");
      continue;
    }
    try {
      const Element z = encode(beta, n);
      const Ordinal back = eval_phin(z);
      if (back != beta) r.fail(to_string(beta) + " encodes to " + to_string(z) + " which evaluates to " + to_string(back));
    } catch (const Error& e) {
      r.fail(to_string(beta) + ": " + e.what());
    }
  }
  return r;
}

SuiteReport check_ordinal_laws(int samples, std::uint64_t seed) {
  SuiteReport r{"ordinal-laws"};
  Timer timer(r);
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const int n = pick_int(rng, 1, 4);
    const Ordinal x = random_ordinal(rng, n, 3), y = random_ordinal(rng, n, 3), z = random_ordinal(rng, n, 3);
    r.checks += 5;
    if ((x < y) + (y < x) + (x == y) != 1) r.fail("trichotomy at " + to_string(x) + ", " + to_string(y));
    if (x < y && y < z && !(x < z)) r.fail("transitivity at " + to_string(x));
    if (add(add(x, y), z) != add(x, add(y, z))) r.fail("associativity of + at " + to_string(x));
    if (add(x, Ordinal()) != x || add(Ordinal(), x) != x) r.fail("zero is not neutral at " + to_string(x));
    if (parse_ordinal(to_string(x)) != x) r.fail("print/parse round trip of " + to_string(x));
    for (const auto& t : y.terms()) {
      if (t.one) continue;
      const Ordinal term = Ordinal::of_term(t);
      for (std::int64_t a = 1; Ordinal::nat(a) < t.a(); ++a) {
        ++r.checks;
        if (phi(a, term) != term) r.fail("absorption of " + to_string(term) + " at subscript " + std::to_string(a));
      }
    }
  }
  return r;
}

SuiteReport check_phi2_image(int max_factors, int max_arity) {
  SuiteReport r{"phi2-image"};
  Timer timer(r);
  std::set<Ordinal> image;
  for (const Element& z : enumerate(2, max_factors, max_arity)) image.insert(eval_phi2(z));
  for (const char* want : {"1", "2", "3", "4", "w", "w+1", "w+2", "w+w", "w^(2)", "w^(2)+w", "w^(w)"}) {
    ++r.checks;
    if (!image.count(parse_ordinal(want))) r.fail(std::string("image misses ") + want);
  }
  const Ordinal bound = phi(2, Ordinal());
  for (const Ordinal& v : image) {
    ++r.checks;
    if (!(v < bound)) r.fail("image contains " + to_string(v));
  }
  return r;
}

SuiteReport check_cube_like(int max_nodes, int max_arity) {
  SuiteReport r{"cube-like"};
  Timer timer(r);
  // {1}-morphisms out of each object, keyed by their prong permutations.
  std::map<Element, std::map<std::vector<Perm>, OneMor2>> ones;
  auto ones_of = [&](const Element& x) -> const std::map<std::vector<Perm>, OneMor2>& {
    auto it = ones.find(x);
    if (it == ones.end()) {
      it = ones.emplace(x, std::map<std::vector<Perm>, OneMor2>{}).first;
      for_each_one(x, [&](const OneMor2& f) { it->second.emplace(f.node_perms, f); });
    }
    return it->second;
  };
  for (const Element& x : oracle::all_trees(max_nodes, max_arity)) {
    const auto twos = enumerate_two(x);
    for (const auto& [perms, f] : ones_of(x)) {
      for (const TwoMor2& g : twos) {
        ++r.checks;
        Square12 s;
        try {
          s = complete_square(f, g);
        } catch (const Error& e) {
          r.fail("no completion at " + to_string(x) + ": " + e.what());
          continue;
        }
        if (!is_square(s)) {
          r.fail("completion at " + to_string(x) + " is not a square");
          continue;
        }
        // A square carries f's prong permutations along g, so only one f2
        // can qualify; every node permutation onto its target is tried.
        std::vector<Perm> carried;
        for (int t = 1; t <= x.m(); ++t) carried.push_back(perms[static_cast<size_t>(g.sigma[static_cast<size_t>(t - 1)] - 1)]);
        int found = 0;
        const auto& candidates = ones_of(g.target);
        auto it = candidates.find(carried);
        if (it != candidates.end()) {
          Square12 candidate{f, g, it->second, {}};
          const Element& w = candidate.f2.target;
          Perm sigma = identity_perm(x.m());
          do {
            bool matches = true;
            for (int t = 1; t <= x.m() && matches; ++t) {
              matches = w.factor(t) == f.target.factor(sigma[static_cast<size_t>(t - 1)]);
            }
            if (!matches) continue;
            candidate.g2 = two_between(f.target, sigma, w);
            if (is_square(candidate)) ++found;
          } while (std::next_permutation(sigma.begin(), sigma.end()));
        }
        if (found != 1) r.fail(std::to_string(found) + " completions at " + to_string(x));
      }
    }
  }
  return r;
}

SuiteReport check_equivariance(int max_nodes, int max_arity) {
  SuiteReport r{"equivariance"};
  Timer timer(r);
  auto by_nodes = trees_by_nodes(max_nodes - 1, max_arity);
  std::vector<Element> trees;
  for (const auto& bucket : by_nodes) trees.insert(trees.end(), bucket.begin(), bucket.end());
  std::map<Element, std::vector<TwoMor2>> cache;
  auto twos = [&](const Element& x) -> const std::vector<TwoMor2>& {
    auto it = cache.find(x);
    if (it == cache.end()) it = cache.emplace(x, enumerate_two(x)).first;
    return it->second;
  };
  auto same = [](const TwoMor2& a, const TwoMor2& b) {
    return a.source == b.source && a.target == b.target && a.sigma == b.sigma;
  };
  for (const Element& x : trees) {
    for (const Element& y : trees) {
      if (x.m() + y.m() > max_nodes) continue;
      for (int i = 1; i <= x.m(); ++i) {
        if (!fits(y, x, i)) continue;
        const std::string at = show(x, i, y);
        for (const TwoMor2& f : twos(x)) {
          for (const TwoMor2& g : twos(y)) {
            ++r.checks;
            TwoMor2 first;
            try {
              first = induced_two_on_composition(x, i, y, f, g);
            } catch (const Error& e) {
              r.fail("induced morphism at " + at + ": " + e.what());
              continue;
            }
            if (first.target != compose(f.target, moved_slot(f, i), g.target).result) {
              r.fail("induced target at " + at);
            }
            for (const TwoMor2& f2 : twos(f.target)) {
              for (const TwoMor2& g2 : twos(g.target)) {
                ++r.checks;
                const TwoMor2 whole = induced_two_on_composition(x, i, y, then(f, f2), then(g, g2));
                const TwoMor2 second = induced_two_on_composition(f.target, moved_slot(f, i), g.target, f2, g2);
                if (!same(whole, then(first, second))) r.fail("functoriality at " + at);
              }
            }
          }
        }
        for (int j = i + 1; j <= x.m(); ++j) {
          for (const Element& z : trees) {
            if (x.m() + y.m() + z.m() > max_nodes || !fits(z, x, j)) continue;
            const Composite xy = compose(x, i, y), xz = compose(x, j, z);
            for (const TwoMor2& f : twos(x)) {
              for (const TwoMor2& g : twos(y)) {
                for (const TwoMor2& h : twos(z)) {
                  ++r.checks;
                  const TwoMor2 p1 = induced_two_on_composition(
                      xy.result, xy.shuffle.phi_at(j), z, induced_two_on_composition(x, i, y, f, g), h);
                  const TwoMor2 p2 = induced_two_on_composition(
                      xz.result, xz.shuffle.phi_at(i), y, induced_two_on_composition(x, j, z, f, h), g);
                  if (!same(p1, p2)) r.fail("associativity of induced morphisms at " + at + " with z = " + to_string(z));
                }
              }
            }
          }
        }
      }
    }
  }
  return r;
}

SuiteReport check_unit_laws(int level, int max_factors, int max_arity) {
  SuiteReport r{"unit-laws/level" + std::to_string(level)};
  Timer timer(r);
  for (const Element& x : enumerate(level, max_factors, max_arity)) {
    for (int k = 1; k <= x.m(); ++k) {
      ++r.checks;
      if (compose(x, k, unit(x.factor(k))).result != x) r.fail("right unit at " + to_string(x) + " slot " + std::to_string(k));
    }
    ++r.checks;
    if (compose(unit(total_G(x)), 1, x).result != x) r.fail("left unit at " + to_string(x));
  }
  return r;
}

SuiteReport check_runital(int max_factors, int max_arity) {
  SuiteReport r{"r-unital"};
  Timer timer(r);
  for (int level : {1, 2}) {
    ++r.checks;
    RunitalReport rep = check_runital_bijection(level, max_factors, max_arity);
    if (!rep.bijective) {
      r.fail("level " + std::to_string(level) + ": " + std::to_string(rep.r_count) + " normal forms for " +
             std::to_string(rep.plain_count) + " plain elements");
    }
  }
  return r;
}

SuiteSize parse_suite_size(const std::string& text) {
  if (text == "small") return SuiteSize::Small;
  if (text == "medium") return SuiteSize::Medium;
  if (text == "large") return SuiteSize::Large;
  throw Error(ErrorKind::ParseError, "size must be small, medium or large");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms", "oracle", "confluence", "morphisms",
                                              "ordinals", "groups", "counts"};
  return names;
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, SuiteSize size) {
  const int s = static_cast<int>(size);
  SuiteReport total{suite};
  auto add = [&](const SuiteReport& part) { total.merge(part); };
  if (suite == "axioms") {
    add(check_axioms_exhaustive(s == 0 ? 5 : 6, s == 0 ? 2 : 3, Axioms::All));
    for (int level : {3, 4}) {
      add(check_axioms_random(level, s == 0 ? 300 : s == 1 ? 3000 : 10000, seed + static_cast<std::uint64_t>(level),
                              Axioms::All));
    }
    add(check_unit_laws(2, 4, 3));
    add(check_unit_laws(3, 2, 2));
  } else if (suite == "oracle") {
    add(check_oracle(6, s == 2 ? 4 : 3));
  } else if (suite == "confluence") {
    for (int level : {2, 3}) add(check_confluence(level, s == 0 ? 200 : s == 1 ? 1000 : 5000, seed + static_cast<std::uint64_t>(level)));
  } else if (suite == "morphisms") {
    add(check_cube_like(s == 0 ? 3 : 4, s == 0 ? 2 : 3));
    add(check_equivariance(s == 0 ? 4 : 5, s == 0 ? 2 : 3));
  } else if (suite == "ordinals") {
    for (int n = 1; n <= 4; ++n) add(check_ordinal_round_trip(n, s == 0 ? 50 : s == 1 ? 500 : 2000, 5, seed + static_cast<std::uint64_t>(n)));
    add(check_ordinal_laws(s == 0 ? 200 : 2000, seed));
    add(check_phi2_image(4, 4));
  } else if (suite == "groups") {
    add(check_symmetric_orders(s == 0 ? 5 : 6));
    add(check_tree_presentations(s == 0 ? 5 : 6));
  } else if (suite == "counts") {
    add(check_catalan(8));
    add(check_free_counts());
    add(check_runital(3, 3));
  } else {
    throw Error(ErrorKind::ParseError, "unknown suite " + suite);
  }
  total.name = suite;
  return total;
}

}  // namespace actad
