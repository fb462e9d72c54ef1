#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "actad/error.hpp"

namespace actad {

// Veblen normal form below Gamma_0, with shifted subscripts: phi(1, b) is
// w^(1+b) and phi(a, b) for a >= 2 enumerates common fixed points of the
// lower phi's. Terms are nonincreasing; the empty sum is 0.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;
  static Ordinal nat(std::int64_t k);
  static Ordinal one() { return nat(1); }
  static Ordinal omega();
  // Wraps one term without normalization checks.
  static Ordinal of_term(Term t);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_finite() const;
  // Throws OutOfRange when infinite.
  std::int64_t finite_value() const;
  // Single Phi term (One excluded).
  bool is_phi_term() const;

  friend std::strong_ordering operator<=>(const Ordinal& x, const Ordinal& y);
  friend bool operator==(const Ordinal& x, const Ordinal& y) { return (x <=> y) == 0; }

 private:
  friend Ordinal add(const Ordinal& x, const Ordinal& y);
  friend Ordinal phi(const Ordinal& a, const Ordinal& b);
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  bool one = true;
  std::vector<Ordinal> ab;  // {a, b} for Phi terms

  const Ordinal& a() const { return ab[0]; }
  const Ordinal& b() const { return ab[1]; }
};

std::strong_ordering cmp(const Ordinal& x, const Ordinal& y);
Ordinal add(const Ordinal& x, const Ordinal& y);
// Normalized phi term; a >= 1. Collapses b when b is already a fixed point.
Ordinal phi(const Ordinal& a, const Ordinal& b);
Ordinal phi(std::int64_t a, const Ordinal& b);
Ordinal omega_pow(const Ordinal& gamma);
// The delta with 1 + delta = gamma; gamma >= 1.
Ordinal left_minus_one(const Ordinal& gamma);

std::string to_string(const Ordinal& x);
Ordinal parse_ordinal(std::string_view text);

// Random normal form in [1, phi(n, 0)) built from subscripts below n.
Ordinal random_ordinal(std::mt19937_64& rng, int n, int depth, int max_terms = 3,
                       int max_nat = 4);

}  // namespace actad
