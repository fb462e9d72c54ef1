#include "doctest.h"

#include "actad/enumerate.hpp"
#include "actad/morphisms.hpp"
#include "actad/presentation.hpp"

using namespace actad;

namespace {

std::vector<Element> binary_elements(int k) {
  std::vector<Element> out;
  for (const Element& x : enumerate(2, k, 2)) {
    bool binary = x.m() == k;
    for (const Element& f : x.factors()) binary = binary && f.arity() == 2;
    if (binary) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("coset enumeration of small groups") {
  Presentation z2{1, {{1, 1}}, {}};
  CHECK(todd_coxeter(z2).order == 2);
  Presentation z5{1, {{1, 1, 1, 1, 1}}, {}};
  CHECK(todd_coxeter(z5).order == 5);
  Presentation trivial{2, {{1}, {2}}, {}};
  CHECK(todd_coxeter(trivial).order == 1);
  // Klein four-group and the quaternion group.
  Presentation v4{2, {{1, 1}, {2, 2}, {1, 2, 1, 2}}, {}};
  CHECK(todd_coxeter(v4).order == 4);
  Presentation q8{2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}, {}};
  CHECK(todd_coxeter(q8).order == 8);
  Presentation free{1, {}, {}};
  CHECK_THROWS_AS(todd_coxeter(free, 50), Error);
  CHECK_THROWS_AS(todd_coxeter(Presentation{1, {{2}}, {}}), Error);
}

TEST_CASE("coset tables are closed and satisfy the relators") {
  Presentation p = symmetric_presentation(4);
  CosetTable t = todd_coxeter(p);
  REQUIRE(t.order == 24);
  for (int c = 0; c < t.order; ++c) {
    for (const Word& w : p.relators) {
      int d = c;
      for (int l : w) d = t.rows[static_cast<size_t>(d)][static_cast<size_t>(l > 0 ? 2 * l - 2 : -2 * l - 1)];
      CHECK(d == c);
    }
  }
}

TEST_CASE("symmetric presentations") {
  CHECK(to_string(symmetric_presentation(2)) == "<a1 | a1^2>");
  CHECK(to_string(symmetric_presentation(3)) == "<a1, a2 | a1^2, a2^2, (a1a2)^3>");
  for (int n = 2; n <= 6; ++n) CHECK(todd_coxeter(symmetric_presentation(n)).order == factorial(n));
  CHECK(to_gap(symmetric_presentation(3)) == "a1*a1\na2*a2\na1*a2*a1*a2*a1*a2\n");
}

TEST_CASE("tree presentations") {
  TreePresentation two = tree_presentation(parse_element("[2,2|1]"));
  CHECK(two.presentation.generators == 1);
  CHECK(to_string(two.presentation) == "<a1 | a1^2>");
  CHECK_THROWS_AS(tree_presentation(parse_element("[2,1|1]")), Error);

  // A path of four nodes gives the Coxeter presentation of S_4.
  TreePresentation path = tree_presentation(parse_element("[2,2,2,2|1,1,1]"));
  CHECK(path.edges.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(todd_coxeter(path.presentation).order == 24);

  Presentation g = five_node_presentation();
  CHECK(to_string(g) ==
        "<a, b, c, d | a^2, b^2, c^2, d^2, (ab)^3, (bc)^3, (ad)^3, (db)^3, (daba)^2, (ac)^2, (cd)^2>");
  CHECK(todd_coxeter(g).order == 120);
}

TEST_CASE("binary trees realize symmetric groups") {
  for (int k = 1; k <= 6; ++k) {
    auto xs = binary_elements(k);
    CHECK(static_cast<std::int64_t>(xs.size()) == count_binary(k));
    for (const Element& x : xs) {
      RealizationReport r = verify_symmetric_realization(x);
      CHECK(r.relators_hold);
      CHECK(r.generated_order == factorial(k));
      CHECK(r.presented_order == factorial(k));
      CHECK(r.isomorphic);
    }
  }
}

TEST_CASE("edges are adjacent node swaps") {
  for (const Element& x : binary_elements(5)) {
    EdgeStructure s = edge_structure(x);
    CHECK(static_cast<int>(s.edges.size()) == s.nodes - 1);
    for (const auto& inc : s.incidence) CHECK(inc.size() <= 3);
    for (const auto& [u, v] : s.edges) {
      Perm sigma = identity_perm(x.m());
      std::swap(sigma[static_cast<size_t>(u - 1)], sigma[static_cast<size_t>(v - 1)]);
      auto g = apply_two(x, sigma);
      REQUIRE(g);
      CHECK(g->target == x);
    }
  }
}

TEST_CASE("dropping the three-edge relator breaks the isomorphism") {
  int stars = 0;
  for (const Element& x : binary_elements(4)) {
    TreePresentation tp = tree_presentation(x);
    bool star = false;
    for (const auto& inc : tp.edges.incidence) star = star || inc.size() == 3;
    if (!star) continue;
    ++stars;
    Presentation& p = tp.presentation;
    auto before = p.relators.size();
    p.relators.erase(std::remove_if(p.relators.begin(), p.relators.end(),
                                    [](const Word& w) { return w.size() == 8 && w[1] == w[3]; }),
                     p.relators.end());
    CHECK(p.relators.size() + 1 == before);
    std::int64_t order = -1;
    try {
      order = todd_coxeter(p, 20000).order;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Overflow);
    }
    CHECK(order != 24);
  }
  CHECK(stars > 0);
}
