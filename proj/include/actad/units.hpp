#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "actad/element.hpp"

namespace actad {

// 1^n_y: the number 1 over the point, otherwise the single-factor element [y|].
Element unit(const Element& y);

// Element of the R-unital base at level <= 2. Zero is 0 at level 1 and its
// image at level 2 (total arity 0); the eraser is the bare edge (total arity 1).
// Both have m = 0.
struct RElement {
  enum class Kind { Plain, Zero, Eraser };
  Kind kind = Kind::Plain;
  int level = 1;
  Element plain;

  static RElement of(const Element& x);
  static RElement zero(int level);
  static RElement eraser();
  int m() const;
  // Number of leaves (level 2) or the arity (level 1).
  int total_arity() const;
  friend bool operator==(const RElement&, const RElement&) = default;
};

// Accepts plain literals, `0`, `!e`, and level-2 lists whose corollas may have
// arity 0; those are normalized by capping.
RElement parse_relement(std::string_view text);
std::string to_string(const RElement& x);

// Level 1: arithmetic over N_0. Level 2: a plain u composes at node i; the
// eraser deletes the 1-ary node i; zero caps leaf i.
RElement r_compose(const RElement& x, int i, const RElement& u);

struct RunitalReport {
  int level = 0;
  std::int64_t plain_count = 0;
  std::int64_t r_count = 0;        // distinct normal forms outside the zero set
  std::int64_t raw_terms = 0;      // R-terms examined
  std::int64_t eraser_plugs = 0;   // eraser plugs normalized and matched
  bool bijective = false;
};

// Level 1 compares arities 1..max_arity with N_0 \ {0}; level 2 normalizes every
// R-term with at most max_factors corollas of arity <= max_arity.
RunitalReport check_runital_bijection(int level, int max_factors, int max_arity);

}  // namespace actad
