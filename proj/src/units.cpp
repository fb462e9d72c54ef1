#include "actad/units.hpp"

#include <set>
#include <vector>

#include "actad/base.hpp"
#include "actad/enumerate.hpp"
#include "actad/plane_tree.hpp"

namespace actad {

Element unit(const Element& y) {
  if (y.level() == 0) return Element::corolla(1);
  return Element::from_parts({y}, {});
}

RElement RElement::of(const Element& x) {
  RElement r;
  r.level = x.level();
  r.plain = x;
  return r;
}

RElement RElement::zero(int level) {
  if (level != 1 && level != 2) throw Error(ErrorKind::NotImplementedLevel, "zero exists at levels 1 and 2");
  RElement r;
  r.kind = Kind::Zero;
  r.level = level;
  return r;
}

RElement RElement::eraser() {
  RElement r;
  r.kind = Kind::Eraser;
  r.level = 2;
  return r;
}

int RElement::m() const { return kind == Kind::Plain ? plain.m() : 0; }

int RElement::total_arity() const {
  switch (kind) {
    case Kind::Zero: return 0;
    case Kind::Eraser: return 1;
    case Kind::Plain: break;
  }
  if (level == 1) return plain.arity();
  if (level == 2) return total_G(plain).arity();
  throw Error(ErrorKind::NotImplementedLevel, "R-unital structure is implemented up to level 2");
}

namespace {

// Planar tree over N_0 under the relations x o 0 = x - 1 and the eraser rule.
class RTree {
 public:
  explicit RTree(const Element& x) : t_(PlaneTree::of(x)) {}
  explicit RTree(int root_arity) {
    t_.root = t_.add_node(root_arity);
    if (root_arity == 0) state_ = RElement::Kind::Zero;
  }

  void graft(int leaf, int arity) {
    if (arity == 0) return cap(leaf);
    auto [v, p] = leaf_at(leaf);
    t_.attach(v, p, t_.add_node(arity));
  }

  void cap(int leaf) {
    auto [v, p] = leaf_at(leaf);
    remove_prong(v, p);
  }

  // Node ids in canonical position order.
  std::vector<int> positions() const {
    auto c = t_.canonical();
    std::vector<int> ids(static_cast<size_t>(c.element.m()));
    for (size_t v = 0; v < c.position.size(); ++v) {
      if (c.position[v] > 0) ids[static_cast<size_t>(c.position[v] - 1)] = static_cast<int>(v);
    }
    return ids;
  }

  void erase(int position) {
    const int v = node_at(position);
    auto& n = t_.nodes[static_cast<size_t>(v)];
    if (n.arity != 1) {
      throw Error(ErrorKind::NotComposable,
                  "eraser needs a 1-ary factor, factor " + std::to_string(position) +
                      " has arity " + std::to_string(n.arity));
    }
    const int c = n.child[0];
    if (v == t_.root) {
      if (c < 0) {
        state_ = RElement::Kind::Eraser;
        return;
      }
      t_.root = c;
      t_.nodes[static_cast<size_t>(c)].parent = -1;
      return;
    }
    const int parent = n.parent, prong = n.prong;
    t_.nodes[static_cast<size_t>(parent)].child[static_cast<size_t>(prong)] = -1;
    if (c >= 0) t_.attach(parent, prong, c);
  }

  RElement result() const {
    if (state_ == RElement::Kind::Zero) return RElement::zero(2);
    if (state_ == RElement::Kind::Eraser) return RElement::eraser();
    return RElement::of(t_.canonical().element);
  }

 private:
  std::pair<int, int> leaf_at(int leaf) const {
    if (state_ != RElement::Kind::Plain) throw Error(ErrorKind::RangeViolation, "no leaves left");
    auto ls = t_.leaves();
    if (leaf < 1 || leaf > static_cast<int>(ls.size())) {
      throw Error(ErrorKind::RangeViolation, "leaf " + std::to_string(leaf) + " outside 1.." +
                                                 std::to_string(ls.size()));
    }
    return ls[static_cast<size_t>(leaf - 1)];
  }

  int node_at(int position) const {
    auto ids = positions();
    if (position < 1 || position > static_cast<int>(ids.size())) {
      throw Error(ErrorKind::RangeViolation, "factor " + std::to_string(position) + " outside 1.." +
                                                 std::to_string(ids.size()));
    }
    return ids[static_cast<size_t>(position - 1)];
  }

  void remove_prong(int v, int p) {
    auto& n = t_.nodes[static_cast<size_t>(v)];
    n.child.erase(n.child.begin() + p);
    --n.arity;
    for (int q = p; q < n.arity; ++q) {
      const int c = n.child[static_cast<size_t>(q)];
      if (c >= 0) t_.nodes[static_cast<size_t>(c)].prong = q;
    }
    if (n.arity > 0) return;
    if (v == t_.root) {
      state_ = RElement::Kind::Zero;
      return;
    }
    const int parent = n.parent, prong = n.prong;
    t_.nodes[static_cast<size_t>(parent)].child[static_cast<size_t>(prong)] = -1;
    remove_prong(parent, prong);
  }

  PlaneTree t_;
  RElement::Kind state_ = RElement::Kind::Plain;
};

RElement normalize_raw(const Literal& lit) {
  std::vector<long> arities;
  for (const Literal& item : lit.items) {
    if (item.kind != Literal::Kind::Number) {
      throw Error(ErrorKind::LevelMismatch, "R-lists with zero corollas must be level 2");
    }
    arities.push_back(item.value);
  }
  if (lit.indices.size() + 1 != arities.size()) {
    throw Error(ErrorKind::RangeViolation, "expected " + std::to_string(arities.size() - 1) +
                                               " indices, got " + std::to_string(lit.indices.size()));
  }
  RTree t(static_cast<int>(arities[0]));
  long prev = 1;
  for (size_t k = 1; k < arities.size(); ++k) {
    const long a = lit.indices[k - 1];
    if (a < prev) throw Error(ErrorKind::OrderViolation, "indices must be nondecreasing");
    t.graft(static_cast<int>(a), static_cast<int>(arities[k]));
    prev = a;
  }
  return t.result();
}

bool has_zero_corolla(const Literal& lit) {
  for (const Literal& item : lit.items) {
    if (item.kind == Literal::Kind::Number && item.value == 0) return true;
  }
  return false;
}

}  // namespace

RElement parse_relement(std::string_view text) {
  Literal lit = parse_literal(text);
  if (lit.kind == Literal::Kind::Eraser) return RElement::eraser();
  if (lit.kind == Literal::Kind::Number && lit.value == 0) return RElement::zero(1);
  if (lit.kind == Literal::Kind::List && has_zero_corolla(lit)) return normalize_raw(lit);
  return RElement::of(validate(lit));
}

std::string to_string(const RElement& x) {
  switch (x.kind) {
    case RElement::Kind::Zero: return x.level == 1 ? "0" : "[0|]";
    case RElement::Kind::Eraser: return "!e";
    case RElement::Kind::Plain: break;
  }
  return to_string(x.plain);
}

RElement r_compose(const RElement& x, int i, const RElement& u) {
  if (x.level > 2 || u.level > 2) {
    throw Error(ErrorKind::NotImplementedLevel, "R-unital composition is implemented up to level 2");
  }
  if (x.level == 1) {
    if (u.level != 1) throw Error(ErrorKind::LevelMismatch, "level-1 composition needs a level-1 operand");
    const int n = x.total_arity();
    if (i < 1 || i > n) {
      throw Error(ErrorKind::RangeViolation, "slot " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    const int r = n + u.total_arity() - 1;
    return r == 0 ? RElement::zero(1) : RElement::of(Element::corolla(r));
  }
  if (x.kind == RElement::Kind::Zero) throw Error(ErrorKind::RangeViolation, "zero has no slots");
  if (x.kind == RElement::Kind::Eraser) {
    if (u.kind == RElement::Kind::Zero && i == 1) return RElement::zero(2);
    throw Error(ErrorKind::RangeViolation, "the eraser only accepts zero at its leaf");
  }
  switch (u.kind) {
    case RElement::Kind::Plain: {
      if (u.level != 2) throw Error(ErrorKind::LevelMismatch, "level-2 composition needs a level-2 operand");
      return RElement::of(compose(x.plain, i, u.plain).result);
    }
    case RElement::Kind::Eraser: {
      RTree t(x.plain);
      t.erase(i);
      return t.result();
    }
    case RElement::Kind::Zero: {
      RTree t(x.plain);
      t.cap(i);
      return t.result();
    }
  }
  return x;
}

RunitalReport check_runital_bijection(int level, int max_factors, int max_arity) {
  RunitalReport rep;
  rep.level = level;
  if (level == 1) {
    std::set<int> plain, r;
    for (int a = 1; a <= max_arity; ++a) plain.insert(a);
    for (int a = 0; a <= max_arity; ++a) {
      ++rep.raw_terms;
      if (a != 0) r.insert(a);
    }
    rep.plain_count = static_cast<std::int64_t>(plain.size());
    rep.r_count = static_cast<std::int64_t>(r.size());
    rep.bijective = plain == r;
    return rep;
  }
  if (level != 2) throw Error(ErrorKind::NotImplementedLevel, "R-unital structure is implemented up to level 2");
  std::vector<Element> plain_list = enumerate(2, max_factors, max_arity);
  std::set<Element> plain(plain_list.begin(), plain_list.end());
  std::set<Element> normal;
  bool inside = true;
  std::vector<Element> pool;
  for (int a = 0; a <= max_arity; ++a) pool.push_back(Element::corolla(a));
  for_each_element(pool, max_factors, [&](const Element& raw) {
    ++rep.raw_terms;
    RTree t(raw.factor(1).arity());
    for (int k = 2; k <= raw.m(); ++k) {
      t.graft(raw.indices()[static_cast<size_t>(k - 2)], raw.factor(k).arity());
    }
    RElement r = t.result();
    if (r.kind != RElement::Kind::Plain) return;
    normal.insert(r.plain);
    if (!plain.count(r.plain)) inside = false;
    for (int q = 1; q <= r.plain.m(); ++q) {
      if (r.plain.factor(q).arity() != 1) continue;
      RElement erased = r_compose(r, q, RElement::eraser());
      ++rep.eraser_plugs;
      if (erased.kind == RElement::Kind::Plain && !plain.count(erased.plain)) inside = false;
    }
  });
  rep.plain_count = static_cast<std::int64_t>(plain.size());
  rep.r_count = static_cast<std::int64_t>(normal.size());
  rep.bijective = inside && normal == plain;
  return rep;
}

}  // namespace actad
