#include "doctest.h"

#include <random>

#include "actad/base.hpp"
#include "actad/enumerate.hpp"
#include "actad/phi_map.hpp"

using namespace actad;

namespace {

Ordinal O(const char* s) { return parse_ordinal(s); }
Element E(const char* s) { return parse_element(s); }

// Cantor normal form below epsilon_0: a nonincreasing list of exponents.
struct Cnf {
  std::vector<Cnf> exps;
};

int cnf_cmp(const Cnf& x, const Cnf& y) {
  for (size_t k = 0; k < std::min(x.exps.size(), y.exps.size()); ++k) {
    int c = cnf_cmp(x.exps[k], y.exps[k]);
    if (c) return c;
  }
  return x.exps.size() < y.exps.size() ? -1 : x.exps.size() > y.exps.size() ? 1 : 0;
}

Cnf cnf_nat(int64_t k) { return Cnf{std::vector<Cnf>(static_cast<size_t>(k), Cnf{})}; }

Cnf cnf_add(const Cnf& x, const Cnf& y) {
  if (y.exps.empty()) return x;
  Cnf r = x;
  while (!r.exps.empty() && cnf_cmp(r.exps.back(), y.exps.front()) < 0) r.exps.pop_back();
  r.exps.insert(r.exps.end(), y.exps.begin(), y.exps.end());
  return r;
}

// Only subscript-1 notations: one -> w^0, phi(1,b) -> w^(1+b).
Cnf to_cnf(const Ordinal& x) {
  Cnf r;
  for (const auto& t : x.terms()) {
    if (t.one) {
      r.exps.push_back(Cnf{});
    } else {
      REQUIRE(t.a().is_one());
      r.exps.push_back(cnf_add(cnf_nat(1), to_cnf(t.b())));
    }
  }
  return r;
}

}  // namespace

TEST_CASE("ordinal comparison examples") {
  CHECK(cmp(add(Ordinal::one(), Ordinal::omega()), Ordinal::omega()) == 0);
  CHECK(cmp(phi(1, Ordinal()), Ordinal::nat(3)) > 0);
  CHECK(cmp(phi(1, phi(2, Ordinal())), phi(2, Ordinal())) == 0);
  CHECK(phi(1, phi(2, Ordinal())) == phi(2, Ordinal()));
  CHECK(O("w^(w)") > O("w^(5)+w+1"));
  CHECK(O("phi(2,0)") > O("w^(w^(w^(w)))"));
  CHECK(O("phi(2,1)") > O("phi(2,0)+phi(2,0)"));
  CHECK(O("phi(3,0)") > O("phi(2,phi(2,phi(2,0)))"));
  CHECK(O("phi(2,phi(3,0))") == O("phi(3,0)"));
  CHECK(O("phi(w,0)") > O("phi(100,0)"));
  CHECK(O("phi(phi(2,0),0)") > O("phi(w^(w),5)"));
}

TEST_CASE("ordinal addition and printing") {
  CHECK(to_string(add(Ordinal::one(), Ordinal::omega())) == "w");
  CHECK(to_string(add(Ordinal::omega(), Ordinal::one())) == "w+1");
  Ordinal x = add(O("w^(2)+w"), O("w^(2)"));
  CHECK(to_string(x) == "w^(2)+w^(2)");
  REQUIRE(x.terms().size() == 2);
  CHECK(Ordinal::of_term(x.terms()[0]) == phi(1, Ordinal::one()));
  CHECK(to_string(O("0")) == "0");
  CHECK(to_string(O("2+3")) == "5");
  CHECK(to_string(O("w^(0)")) == "1");
  CHECK(to_string(O("w^(1)")) == "w");
  CHECK(to_string(phi(1, Ordinal::omega())) == "w^(w)");
  CHECK(to_string(O("phi(1, w)")) == "w^(w)");
  CHECK(to_string(O("phi(2,0) + w")) == "phi(2,0)+w");
  CHECK(to_string(O("w^(phi(2,0))")) == "phi(2,0)");
  CHECK_THROWS_AS(O("phi(0,1)"), Error);
  CHECK_THROWS_AS(O("w+"), Error);
  CHECK_THROWS_AS(O("omega"), Error);
}

TEST_CASE("comparison and addition agree with Cantor normal form below epsilon_0") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    Ordinal x = random_ordinal(rng, 2, 4);
    Ordinal y = random_ordinal(rng, 2, 4);
    const int c = cmp(x, y) < 0 ? -1 : cmp(x, y) > 0 ? 1 : 0;
    CHECK(c == cnf_cmp(to_cnf(x), to_cnf(y)));
    CHECK(cnf_cmp(to_cnf(add(x, y)), cnf_add(to_cnf(x), to_cnf(y))) == 0);
    CHECK(parse_ordinal(to_string(x)) == x);
  }
}

TEST_CASE("ordinal order and addition laws") {
  std::mt19937_64 rng(11);
  std::vector<Ordinal> xs;
  for (int k = 0; k < 60; ++k) xs.push_back(random_ordinal(rng, 4, 4));
  xs.push_back(Ordinal());
  for (const auto& a : xs) {
    CHECK(add(a, Ordinal()) == a);
    CHECK(add(Ordinal(), a) == a);
    CHECK(parse_ordinal(to_string(a)) == a);
    for (const auto& b : xs) {
      CHECK((cmp(a, b) < 0) == (cmp(b, a) > 0));
      CHECK(add(a, b) >= b);
      if (!b.is_zero()) CHECK(add(a, b) > a);
      for (const auto& c : xs) {
        if (a < b && b < c) CHECK(a < c);
      }
    }
  }
  for (size_t k = 0; k + 2 < xs.size(); ++k) {
    CHECK(add(add(xs[k], xs[k + 1]), xs[k + 2]) == add(xs[k], add(xs[k + 1], xs[k + 2])));
  }
}

TEST_CASE("phi normalization") {
  CHECK(to_string(phi(1, Ordinal())) == "w");
  CHECK(phi(1, phi(2, Ordinal())) == phi(2, Ordinal()));
  CHECK(to_string(phi(2, Ordinal())) == "phi(2,0)");
  CHECK(phi(2, phi(3, O("w"))) == phi(3, O("w")));
  CHECK(phi(3, phi(2, Ordinal())) != phi(2, Ordinal()));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    Ordinal b = random_ordinal(rng, 4, 3);
    for (int a = 1; a <= 3; ++a) {
      Ordinal p = phi(a, b);
      const bool fixed = b.is_phi_term() && b.terms()[0].a() > Ordinal::nat(a);
      CHECK(fixed == (p == b));
      CHECK(p >= b);
      CHECK(phi(a, add(b, Ordinal::one())) > p);
    }
  }
  CHECK(omega_pow(Ordinal::nat(3)) == O("w^(3)"));
  CHECK(left_minus_one(Ordinal::nat(3)) == Ordinal::nat(2));
  CHECK(left_minus_one(Ordinal::omega()) == Ordinal::omega());
}

TEST_CASE("eval_phi2 examples") {
  CHECK(eval_phi2(E("[4|]")) == Ordinal::nat(4));
  CHECK(eval_phi2(E("[1,1|1]")) == Ordinal::omega());
  CHECK(eval_phi2(E("[1,1,1|1,1]")) == O("w^(w)"));
  CHECK(eval_phi2(E("[3,2,1|2,3]")) == O("1+w^(w)+1"));
  CHECK(to_string(eval_phi2(E("[3,2,1|2,3]"))) == "w^(w)+1");
}

TEST_CASE("eval_phin examples") {
  std::vector<Ordinal> abc{O("w"), O("5"), O("phi(2,0)")};
  CHECK(eval_phin(E("3"), abc) == O("w+5+phi(2,0)"));
  CHECK(eval_phin(E("[4|]")) == Ordinal::nat(4));
  CHECK(eval_phin(E("[[2|]|]")) == Ordinal::nat(2));
  CHECK_THROWS_AS(eval_phin(E("3"), {O("1")}), Error);
  for (const Element& z : enumerate(2, 4, 3)) CHECK(eval_phin(z) == eval_phi2(z));
}

TEST_CASE("encode examples") {
  CHECK(encode(Ordinal::nat(5), 1) == E("5"));
  CHECK(encode(Ordinal::omega(), 2) == E("[1,1|1]"));
  Ordinal eps_w = O("phi(2,0)+w");
  Element z = encode(eps_w, 3);
  CHECK(z.level() == 3);
  CHECK(eval_phin(z) == eps_w);
  CHECK(parse_element(to_string(z)) == z);
  try {
    encode(phi(2, Ordinal()), 2);
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRange);
  }
  CHECK_THROWS_AS(encode(Ordinal(), 2), Error);
  CHECK_THROWS_AS(encode(Ordinal::omega(), 1), Error);
}

TEST_CASE("encode round trip on random normal forms") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < 40; ++k) {
      Ordinal b = random_ordinal(rng, n, 4);
      Element z = encode(b, n);
      CHECK(z.level() == n);
      CHECK(parse_element(to_string(z)) == z);
      CHECK(eval_phin(z) == b);
    }
  }
}

TEST_CASE("image sweep") {
  std::set<Ordinal> one = image_sweep(1, 1, 6);
  CHECK(one.size() == 6);
  CHECK(*one.begin() == Ordinal::nat(1));
  CHECK(*one.rbegin() == Ordinal::nat(6));
  std::set<Ordinal> two = image_sweep(2, 3, 3);
  for (const char* s : {"1", "2", "3", "w", "w+1", "w+w", "w^(2)", "w^(w)"}) {
    CHECK_MESSAGE(two.count(O(s)) == 1, s);
  }
  for (const Ordinal& b : two) CHECK(b < phi(2, Ordinal()));
}
