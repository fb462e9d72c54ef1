#include "doctest.h"

#include "actad/base.hpp"
#include "actad/enumerate.hpp"
#include "actad/morphisms.hpp"
#include "actad/oracle/planar_tree.hpp"

using namespace actad;

namespace {

Element E(const char* s) { return parse_element(s); }

// Child reordering on the oracle tree: prong q of node t moves to perms[t-1][q-1].
Element oracle_reorder(const Element& x, const std::vector<Perm>& perms) {
  oracle::PlanarTree t = oracle::tree_of(x);
  for (auto& n : t.nodes) {
    std::vector<int> moved(n.child.size(), -1);
    const Perm& p = perms[static_cast<size_t>(n.label - 1)];
    for (size_t q = 0; q < n.child.size(); ++q) moved[static_cast<size_t>(p[q] - 1)] = n.child[q];
    n.child = moved;
  }
  return oracle::element_of(t);
}

std::vector<Perm> swaps(const Element& x) {
  std::vector<Perm> perms;
  for (const Element& f : x.factors()) {
    Perm p = identity_perm(f.arity());
    std::reverse(p.begin(), p.end());
    perms.push_back(p);
  }
  return perms;
}

}  // namespace

TEST_CASE("permutation helpers") {
  Perm p{2, 3, 1};
  CHECK(compose_perm(p, inverse(p)) == identity_perm(3));
  CHECK(compose_perm(p, p) == Perm{3, 1, 2});
  CHECK(is_perm(p));
  CHECK_FALSE(is_perm(Perm{1, 1}));
}

TEST_CASE("apply_one examples") {
  Element x = E("[2,2|1]");
  OneMor2 id = apply_one(x, {{1, 2}, {1, 2}});
  CHECK(id.target == x);
  CHECK(id.leaf_perm == identity_perm(3));
  CHECK(id.node_relabel == identity_perm(2));
  OneMor2 f = apply_one(x, {{2, 1}, {1, 2}});
  CHECK(f.target == E("[2,2|2]"));
  CHECK(f.leaf_perm == Perm{2, 3, 1});
  CHECK_THROWS_AS(apply_one(x, {{1, 2}}), Error);
  CHECK_THROWS_AS(apply_one(x, {{1, 2}, {1, 2, 3}}), Error);
  CHECK(enumerate_one(E("[2|]")).size() == 2);
  CHECK(enumerate_one(E("[3|]")).size() == 6);
}

TEST_CASE("apply_one agrees with oracle child reordering") {
  for (const Element& x : oracle::all_trees(4, 3)) {
    for_each_one(x, [&](const OneMor2& f) {
      CHECK(f.target == oracle_reorder(x, f.node_perms));
      for (int s = 1; s <= x.m(); ++s) {
        CHECK(f.target.factor(f.node_relabel[static_cast<size_t>(s - 1)]) == x.factor(s));
      }
      CHECK(is_perm(f.leaf_perm));
      CHECK(is_perm(f.node_relabel));
    });
  }
}

TEST_CASE("{1}-morphisms form a groupoid") {
  for (const Element& x : oracle::all_trees(5, 2)) {
    auto fs = enumerate_one(x);
    for (const OneMor2& f : fs) {
      OneMor2 back = then(f, inverse(f));
      CHECK(back.target == x);
      CHECK(back.leaf_perm == identity_perm(static_cast<int>(f.leaf_perm.size())));
      for (const Perm& p : back.node_perms) CHECK(p == identity_perm(static_cast<int>(p.size())));
      for (const OneMor2& g : enumerate_one(f.target)) {
        OneMor2 fg = then(f, g);
        CHECK(fg.source == x);
        CHECK(fg.target == g.target);
        CHECK(fg.leaf_perm == compose_perm(g.leaf_perm, f.leaf_perm));
        CHECK(fg.node_relabel == compose_perm(g.node_relabel, f.node_relabel));
      }
    }
  }
}

TEST_CASE("apply_two examples") {
  Element x = E("[2,2|1]");
  auto id = apply_two(x, {1, 2});
  REQUIRE(id);
  CHECK(id->target == x);
  CHECK(enumerate_two(x).size() == 2);
  CHECK_FALSE(apply_two(E("[4,1,1|4,4]"), {2, 1, 3}));
  auto ok = apply_two(E("[4,1,1|4,4]"), {1, 3, 2});
  REQUIRE(ok);
  CHECK(ok->target == E("[4,1,1|4,4]"));
  int failing = 0;
  for (const Element& t : oracle::all_trees(3, 4)) {
    if (t.m() != 3) continue;
    Perm s = identity_perm(3);
    do {
      if (!apply_two(t, s)) ++failing;
    } while (std::next_permutation(s.begin(), s.end()));
  }
  CHECK(failing > 0);
  CHECK(two_between(x, {2, 1}, E("[2,2|2]")).target == E("[2,2|2]"));
  CHECK_THROWS_AS(two_between(E("[2,1|1]"), {1, 2}, E("[2,2|1]")), Error);
  CHECK_THROWS_AS(two_between(E("[2,1|1]"), {2, 1}, E("[2,1|1]")), Error);
}

TEST_CASE("{2}-morphisms form a groupoid") {
  for (const Element& x : oracle::all_trees(4, 3)) {
    for (const TwoMor2& f : enumerate_two(x)) {
      TwoMor2 back = then(f, inverse(f));
      CHECK(back.target == x);
      CHECK(back.sigma == identity_perm(x.m()));
      for (const TwoMor2& g : enumerate_two(f.target)) {
        TwoMor2 fg = then(f, g);
        for (int t = 1; t <= x.m(); ++t) CHECK(fg.target.factor(t) == x.factor(fg.sigma[t - 1]));
      }
    }
  }
}

TEST_CASE("squares") {
  Element x = E("[2,2|1]");
  OneMor2 theta = apply_one(x, {{2, 1}, {2, 1}});
  CHECK(theta.target == E("[2,2|2]"));
  TwoMor2 rho = *apply_two(x, {2, 1});
  Square12 s = complete_square(theta, rho);
  CHECK(is_square(s));
  CHECK(s.f2.target == E("[2,2|2]"));
  CHECK(s.g2.source == E("[2,2|2]"));

  Element y = E("[3,2,1|1,3]");
  OneMor2 f = apply_one(y, swaps(y));
  TwoMor2 id2 = *apply_two(y, identity_perm(3));
  Square12 d1 = complete_square(f, id2);
  CHECK(is_square(d1));
  CHECK(d1.f2.target == f.target);
  CHECK(d1.f2.node_perms == f.node_perms);
  CHECK(d1.g2.sigma == identity_perm(3));

  OneMor2 id1 = apply_one(y, {{1, 2, 3}, {1, 2}, {1}});
  for (const TwoMor2& g : enumerate_two(y)) {
    Square12 d2 = complete_square(id1, g);
    CHECK(is_square(d2));
    CHECK(d2.g2.target == g.target);
    CHECK(d2.g2.sigma == g.sigma);
  }
}

TEST_CASE("induced morphisms on composites") {
  Element x = E("[2,2|1]");
  Element u = E("[2|]");
  TwoMor2 swap = *apply_two(x, {2, 1});
  TwoMor2 idu = *apply_two(u, {1});
  CHECK(moved_slot(swap, 1) == 2);
  TwoMor2 h = induced_two_on_composition(x, 1, u, swap, idu);
  CHECK(h.source == x);
  CHECK(h.target == x);
  CHECK(h.sigma == Perm{2, 1});
  TwoMor2 idx = *apply_two(x, {1, 2});
  CHECK(induced_two_on_composition(x, 1, u, idx, idu).sigma == identity_perm(2));

  auto pool = oracle::all_trees(3, 2);
  for (const Element& a : pool) {
    for (const Element& b : pool) {
      if (a.m() + b.m() > 5) continue;
      for (int i = 1; i <= a.m(); ++i) {
        if (total_G(b).arity() != a.factor(i).arity()) continue;
        for (const TwoMor2& f1 : enumerate_two(a)) {
          for (const TwoMor2& g1 : enumerate_two(b)) {
            TwoMor2 first = induced_two_on_composition(a, i, b, f1, g1);
            CHECK(first.source == compose(a, i, b).result);
            for (const TwoMor2& f2 : enumerate_two(f1.target)) {
              const TwoMor2& g2 = g1;
              if (g2.source != g1.target) continue;
              TwoMor2 second = induced_two_on_composition(f1.target, moved_slot(f1, i), g1.target, f2, g2);
              TwoMor2 whole = induced_two_on_composition(a, i, b, then(f1, f2), then(g1, g2));
              TwoMor2 steps = then(first, second);
              CHECK(whole.target == steps.target);
              CHECK(whole.sigma == steps.sigma);
            }
          }
        }
      }
    }
  }
}
