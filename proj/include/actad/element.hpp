#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "actad/error.hpp"

namespace actad {

// An element of the plain base B_n. Level 0 is the point, level 1 a positive
// arity, level n >= 2 a factor sequence over B_{n-1} with graft indices.
// Instances built through validate() or the composition routines are
// canonical; from_parts() performs no checks.
class Element {
 public:
  Element() = default;

  static Element point() { return Element(); }
  static Element corolla(int arity);
  static Element from_parts(std::vector<Element> factors, std::vector<int> indices);

  int level() const { return level_; }
  int arity() const { return arity_; }
  const std::vector<Element>& factors() const { return factors_; }
  const std::vector<int>& indices() const { return indices_; }

  // Number of entries: factor count, arity, or 1 for the point.
  int m() const;
  // 1-based factor access for level >= 2.
  const Element& factor(int j) const { return factors_[static_cast<size_t>(j - 1)]; }

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  friend bool operator<(const Element& a, const Element& b);

 private:
  int level_ = 0;
  int arity_ = 1;
  std::vector<Element> factors_;
  std::vector<int> indices_;
};

// Unchecked parse tree of an element literal.
struct Literal {
  enum class Kind { Point, Number, Eraser, List };
  Kind kind = Kind::Point;
  long value = 0;
  std::vector<Literal> items;
  std::vector<long> indices;

  int depth() const;
};

Literal parse_literal(std::string_view text);

// Checks range, matching and ordering; throws Error on the first violation.
Element validate(const Literal& raw);
Element validate(const Literal& raw, int expected_level);
// Checked counterpart of Element::from_parts.
Element make_element(std::vector<Element> factors, const std::vector<long>& indices);
Element parse_element(std::string_view text);
Element parse_element(std::string_view text, int expected_level);

std::string to_string(const Element& x);

// {"level": n, "factors": [...], "indices": [...]}; level 1 uses "arity".
std::string to_json(const Element& x);
Element from_json(std::string_view text);

}  // namespace actad
