#include "doctest.h"

#include "actad/base.hpp"
#include "actad/enumerate.hpp"
#include "actad/oracle/planar_tree.hpp"
#include "actad/units.hpp"

using namespace actad;

namespace {

Element E(const char* s) { return parse_element(s); }
RElement R(const char* s) { return parse_relement(s); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

// Deletes the 1-ary node labelled `label` from the oracle tree.
Element oracle_erase(const Element& x, int label) {
  oracle::PlanarTree t = oracle::tree_of(x);
  int v = 0;
  while (t.nodes[static_cast<size_t>(v)].label != label) ++v;
  const int below = t.nodes[static_cast<size_t>(v)].child[0];
  if (t.root == v) {
    t.root = below;
  } else {
    for (auto& n : t.nodes) {
      for (int& c : n.child) {
        if (c == v) c = below;
      }
    }
  }
  t.nodes[static_cast<size_t>(v)].child[0] = -1;
  return oracle::element_of(t);
}

}  // namespace

TEST_CASE("unit laws") {
  CHECK(unit(Element::point()) == E("1"));
  CHECK(unit(E("3")) == E("[3|]"));
  CHECK(compose(E("3"), 2, unit(Element::point())).result == E("3"));
  CHECK(compose(E("[2,2|1]"), 2, unit(E("2"))).result == E("[2,2|1]"));
  for (int level : {2, 3}) {
    for (const Element& x : enumerate(level, 3, 2)) {
      for (int k = 1; k <= x.m(); ++k) {
        Composite c = compose(x, k, unit(x.factor(k)));
        CHECK(c.result == x);
        for (int j = 1; j <= x.m(); ++j) {
          if (j != k) CHECK(c.shuffle.phi_at(j) == j);
        }
        CHECK(c.shuffle.psi_at(1) == k);
      }
      CHECK(compose(unit(total_G(x)), 1, x).result == x);
    }
  }
}

TEST_CASE("R-element literals") {
  CHECK(R("0") == RElement::zero(1));
  CHECK(R("!e") == RElement::eraser());
  CHECK(R("[2,0|1]") == RElement::of(E("[1|]")));
  CHECK(R("[2,0,0|1,1]") == RElement::zero(2));
  CHECK(R("[0|]") == RElement::zero(2));
  CHECK(R("[2,1,0|2,2]") == RElement::of(E("[1|]")));
  CHECK(to_string(R("[3,0|2]")) == "[2|]");
  CHECK(to_string(RElement::zero(2)) == "[0|]");
  CHECK(R("!e").m() == 0);
  CHECK(R("!e").total_arity() == 1);
  CHECK(R("0").m() == 0);
}

TEST_CASE("level-1 R-composition") {
  CHECK(r_compose(R("3"), 2, R("1")) == R("3"));
  CHECK(r_compose(R("3"), 2, R("0")) == R("2"));
  CHECK(r_compose(R("1"), 1, R("0")) == RElement::zero(1));
  CHECK(r_compose(R("2"), 1, R("4")) == R("5"));
  CHECK(kind_of([] { r_compose(R("2"), 3, R("1")); }) == ErrorKind::RangeViolation);
  CHECK(kind_of([] { r_compose(R("0"), 1, R("1")); }) == ErrorKind::RangeViolation);
}

TEST_CASE("level-2 R-composition") {
  CHECK(r_compose(R("[2,1|2]"), 2, RElement::eraser()) == R("[2|]"));
  RElement capped = r_compose(R("[2|]"), 1, RElement::zero(1));
  CHECK(capped == R("[1|]"));
  CHECK(R("[2|]").total_arity() == 2);
  CHECK(capped.total_arity() == 1);
  CHECK(kind_of([] { r_compose(R("[2,2|1]"), 2, RElement::eraser()); }) == ErrorKind::NotComposable);
  CHECK(r_compose(R("[1|]"), 1, RElement::eraser()) == RElement::eraser());
  CHECK(r_compose(R("[1,3|1]"), 1, RElement::eraser()) == R("[3|]"));
  CHECK(r_compose(R("[1|]"), 1, RElement::zero(1)) == RElement::zero(2));
  CHECK(r_compose(R("[2,1|1]"), 1, RElement::zero(1)) == R("[1|]"));
  CHECK(r_compose(R("[2,3|1]"), 2, RElement::zero(2)) == R("[2,2|1]"));
  CHECK(r_compose(RElement::eraser(), 1, RElement::zero(1)) == RElement::zero(2));
  CHECK(r_compose(R("[2,2|1]"), 1, R("[2,1|1]")) ==
        RElement::of(compose(E("[2,2|1]"), 1, E("[2,1|1]")).result));
  CHECK(kind_of([] { r_compose(RElement::of(E("[[2|]|]")), 1, RElement::eraser()); }) ==
        ErrorKind::NotImplementedLevel);
}

TEST_CASE("eraser deletion agrees with the tree oracle") {
  for (const Element& x : oracle::all_trees(5, 3)) {
    for (int a = 1; a <= x.m(); ++a) {
      if (x.factor(a).arity() != 1) continue;
      RElement r = r_compose(RElement::of(x), a, RElement::eraser());
      if (x.m() == 1) {
        CHECK(r == RElement::eraser());
      } else {
        CHECK(r == RElement::of(oracle_erase(x, a)));
      }
    }
  }
}

TEST_CASE("eraser deletion commutes with unrelated composition") {
  auto pool = enumerate(2, 3, 2);
  int checked = 0;
  for (const Element& x : pool) {
    for (int a = 1; a <= x.m(); ++a) {
      if (x.factor(a).arity() != 1 || x.m() == 1) continue;
      RElement erased = r_compose(RElement::of(x), a, RElement::eraser());
      for (int b = 1; b <= x.m(); ++b) {
        if (b == a) continue;
        for (const Element& y : pool) {
          if (total_G(y) != x.factor(b)) continue;
          Composite c = compose(x, b, y);
          RElement lhs = r_compose(RElement::of(c.result), c.shuffle.phi_at(a), RElement::eraser());
          RElement rhs = r_compose(erased, b - (b > a ? 1 : 0), RElement::of(y));
          CHECK(lhs == rhs);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("R-unital bijection") {
  RunitalReport one = check_runital_bijection(1, 1, 10);
  CHECK(one.bijective);
  CHECK(one.plain_count == 10);
  CHECK(one.r_count == 10);
  RunitalReport two = check_runital_bijection(2, 3, 3);
  CHECK(two.bijective);
  CHECK(two.plain_count == two.r_count);
  CHECK(two.raw_terms > two.plain_count);
  CHECK(two.eraser_plugs > 0);
}
