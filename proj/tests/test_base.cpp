#include "doctest.h"

#include "actad/base.hpp"
#include "actad/enumerate.hpp"
#include "actad/oracle/planar_tree.hpp"

using namespace actad;

namespace {

Element E(const char* s) { return parse_element(s); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("validate accepts and rejects literals") {
  CHECK(E("3").m() == 3);
  Element x = E("[3,2,4,3 | 1,4,5]");
  CHECK(x.m() == 4);
  CHECK(total_G(x) == Element::corolla(9));
  CHECK(kind_of([] { E("[2,2|3]"); }) == ErrorKind::RangeViolation);
  CHECK(kind_of([] { E("[2,2,2|2,1]"); }) == ErrorKind::OrderViolation);
  CHECK(kind_of([] { E("[[2|],[3|]|1]"); }) == ErrorKind::MatchViolation);
  CHECK(kind_of([] { E("[2,[2|]|1]"); }) == ErrorKind::LevelMismatch);
  CHECK(kind_of([] { E("[2,2"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_element("[2|]", 3); }) == ErrorKind::LevelMismatch);
}

TEST_CASE("serialization round trips") {
  for (const Element& e : enumerate(3, 2, 2)) {
    CHECK(parse_element(to_string(e)) == e);
    CHECK(from_json(to_json(e)) == e);
  }
  CHECK(to_string(E(" [ 2 , 2 | 1 ] ")) == "[2,2|1]");
  CHECK(to_json(E("[2|]")) == R"({"factors":[{"arity":2,"level":1}],"indices":[],"level":2})");
}

TEST_CASE("arity, slots and total arity") {
  CHECK(arity_m(E("5")) == 5);
  CHECK(arity_m(E("[2,2|1]")) == 2);
  CHECK(arity_m(Element::point()) == 1);
  CHECK(slots_F(E("3")) == std::vector<Element>(3, Element::point()));
  CHECK(slots_F(E("[[2,2|1],[2|]|1]")) == std::vector<Element>{E("[2,2|1]"), E("[2|]")});
  CHECK(total_G(E("4")) == Element::point());
  CHECK(total_G(E("[3,2|1]")) == E("4"));
  CHECK(kind_of([] { slots_F(Element::point()); }) == ErrorKind::LevelMismatch);
}

TEST_CASE("level-1 composition and shuffles") {
  Composite c = compose(E("4"), 2, E("3"));
  CHECK(c.result == E("6"));
  CHECK(c.shuffle.phi == std::vector<int>{1, 0, 5, 6});
  CHECK(c.shuffle.psi == std::vector<int>{2, 3, 4});
}

TEST_CASE("level-2 shuffles") {
  ShuffleMap s = shuffle(E("[2,2|1]"), 1, E("[2|]"));
  CHECK(s.phi == std::vector<int>{0, 2});
  CHECK(s.psi == std::vector<int>{1});

  CHECK(kind_of([] { shuffle(E("[2,2|2]"), 1, E("[2,2|1]")); }) == ErrorKind::NotComposable);
  Composite c = compose(E("[3,2|3]"), 1, E("[2,2|1]"));
  CHECK(to_string(c.result) == "[2,2,2|1,3]");
  CHECK(c.shuffle.phi == std::vector<int>{0, 3});
  CHECK(c.shuffle.psi == std::vector<int>{1, 2});
}

TEST_CASE("composite of the seven-leaf example") {
  Composite c = compose(E("[3,2,4,3|1,4,5]"), 3, E("[3,2|2]"));
  CHECK(to_string(c.result) == "[3,2,3,2,3|1,4,5,5]");
  CHECK(c.shuffle.phi == std::vector<int>{1, 2, 0, 5});
  CHECK(c.shuffle.psi == std::vector<int>{3, 4});
  CHECK(compose(E("[3,2,4,3|1,4,5]"), 2, E("[2|]")).result == E("[3,2,4,3|1,4,5]"));
}

TEST_CASE("normalize") {
  GammaSequence g{{E("2"), E("2"), E("2")}, {2, 1}};
  Normalized n = normalize(g);
  CHECK(to_string(n.element) == "[2,2,2|1,3]");
  CHECK(n.perm == std::vector<int>{1, 3, 2});

  GammaSequence sorted{{E("2"), E("2"), E("2")}, {1, 3}};
  Normalized id = normalize(sorted);
  CHECK(id.element == E("[2,2,2|1,3]"));
  CHECK(id.perm == std::vector<int>{1, 2, 3});

  GammaSequence four{{E("2"), E("2"), E("2"), E("2")}, {2, 3, 1}};
  Normalized l = normalize(four, SwapStrategy::LeftFirst);
  Normalized r = normalize(four, SwapStrategy::RightFirst);
  CHECK(l.element == r.element);
  CHECK(l.perm == r.perm);
  CHECK(l.element == oracle::element_of(oracle::tree_of(l.element)));

  GammaSequence bad{{E("2"), E("2")}, {3}};
  CHECK(kind_of([&] { normalize(bad); }) == ErrorKind::InvalidSequence);
}

TEST_CASE("head decomposition") {
  HeadForm h = decompose_head(E("[2|]"));
  CHECK(h.head == E("2"));
  CHECK(h.attachments.empty());

  h = decompose_head(E("[1,1|1]"));
  REQUIRE(h.attachments.size() == 1);
  CHECK(h.attachments[0].slot == 1);
  CHECK(h.attachments[0].subtree == E("[1|]"));

  Element z = E("[3,2,4,3|1,4,5]");
  h = decompose_head(z);
  CHECK(h.head == E("3"));
  REQUIRE(h.attachments.size() == 2);
  CHECK(h.attachments[0].slot == 1);
  CHECK(h.attachments[0].subtree == E("[2|]"));
  CHECK(h.attachments[1].slot == 3);
  CHECK(h.attachments[1].subtree == E("[4,3|2]"));
  CHECK(h.attachments[1].positions == std::vector<int>{3, 4});
  Assembled back = assemble_head(h.head, h.attachments);
  CHECK(back.element == z);
  CHECK(back.positions[1] == std::vector<int>{3, 4});
}

TEST_CASE("head decomposition recomposes at levels 2 and 3") {
  for (int level : {2, 3}) {
    for (const Element& z : enumerate(level, 3, 2)) {
      HeadForm h = decompose_head(z);
      int prev = 0;
      for (const auto& a : h.attachments) {
        CHECK(a.slot > prev);
        prev = a.slot;
        for (size_t u = 0; u < a.positions.size(); ++u) {
          CHECK(z.factor(a.positions[u]) == a.subtree.factors()[u]);
        }
      }
      Assembled back = assemble_head(h.head, h.attachments);
      CHECK(back.element == z);
      for (size_t t = 0; t < h.attachments.size(); ++t) {
        CHECK(back.positions[t] == h.attachments[t].positions);
      }
    }
  }
}

TEST_CASE("embed") {
  CHECK(embed(E("3")) == E("[3|]"));
  CHECK(embed(E("[2,2|1]")) == E("[[2,2|1]|]"));
  CHECK(total_G(embed(E("[2,2|1]"))) == E("[2,2|1]"));
  CHECK(kind_of([] { embed(Element::point()); }) == ErrorKind::LevelMismatch);
}

TEST_CASE("small level-2 compositions agree with tree substitution") {
  auto trees = oracle::all_trees(4, 2);
  int cases = 0;
  for (const Element& x : trees) {
    for (const Element& y : trees) {
      if (x.m() + y.m() > 5) continue;
      for (int i = 1; i <= x.m(); ++i) {
        if (total_G(y).arity() != x.factor(i).arity()) continue;
        Composite c = compose(x, i, y);
        oracle::Substitution s = oracle::substitute(x, i, y);
        CHECK(c.result == s.element);
        CHECK(c.shuffle.phi == s.phi);
        CHECK(c.shuffle.psi == s.psi);
        ++cases;
      }
    }
  }
  CHECK(cases > 100);
}

TEST_CASE("composition invariants") {
  auto pool = enumerate(3, 2, 2);
  for (const Element& x : pool) {
    for (const Element& y : pool) {
      for (int i = 1; i <= x.m(); ++i) {
        if (total_G(y) != x.factor(i)) continue;
        Composite c = compose(x, i, y);
        CHECK(c.result.m() == x.m() + y.m() - 1);
        CHECK(total_G(c.result) == total_G(x));
        std::vector<bool> hit(static_cast<size_t>(c.result.m()), false);
        for (int j = 1; j <= x.m(); ++j) {
          if (j == i) continue;
          if (j < i) CHECK(c.shuffle.phi_at(j) == j);
          CHECK(c.result.factor(c.shuffle.phi_at(j)) == x.factor(j));
          hit[c.shuffle.phi_at(j) - 1] = true;
        }
        for (int k = 1; k <= y.m(); ++k) {
          CHECK(c.result.factor(c.shuffle.psi_at(k)) == y.factor(k));
          hit[c.shuffle.psi_at(k) - 1] = true;
        }
        CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
        CHECK(parse_element(to_string(c.result)) == c.result);
      }
    }
  }
}
