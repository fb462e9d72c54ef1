#include "actad/morphisms.hpp"

#include <algorithm>
#include <numeric>

#include "actad/base.hpp"
#include "actad/plane_tree.hpp"

namespace actad {

Perm identity_perm(int n) {
  Perm p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

bool is_perm(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[static_cast<size_t>(v - 1)]) return false;
    seen[static_cast<size_t>(v - 1)] = true;
  }
  return true;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (size_t k = 0; k < p.size(); ++k) q[static_cast<size_t>(p[k] - 1)] = static_cast<int>(k + 1);
  return q;
}

Perm compose_perm(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t k = 0; k < b.size(); ++k) r[k] = a[static_cast<size_t>(b[k] - 1)];
  return r;
}

namespace {

int at(const Perm& p, int k) { return p[static_cast<size_t>(k - 1)]; }

void require_level2(const Element& x) {
  if (x.level() != 2) throw Error(ErrorKind::LevelMismatch, "morphisms are implemented at level 2");
}

}  // namespace

OneMor2 apply_one(const Element& source, const std::vector<Perm>& node_perms) {
  require_level2(source);
  if (static_cast<int>(node_perms.size()) != source.m()) {
    throw Error(ErrorKind::DegreeMismatch, "expected " + std::to_string(source.m()) +
                                               " permutations, got " + std::to_string(node_perms.size()));
  }
  for (int t = 1; t <= source.m(); ++t) {
    const Perm& p = node_perms[static_cast<size_t>(t - 1)];
    if (static_cast<int>(p.size()) != source.factor(t).arity() || !is_perm(p)) {
      throw Error(ErrorKind::DegreeMismatch, "permutation " + std::to_string(t) +
                                                 " is not a permutation of 1.." +
                                                 std::to_string(source.factor(t).arity()));
    }
  }
  PlaneTree before = PlaneTree::of(source);
  const auto src = before.canonical();
  PlaneTree after = before;
  for (size_t v = 0; v < before.nodes.size(); ++v) {
    const Perm& p = node_perms[static_cast<size_t>(src.position[v] - 1)];
    auto& n = after.nodes[v];
    for (int q = 1; q <= n.arity; ++q) {
      const int c = before.nodes[v].child[static_cast<size_t>(q - 1)];
      n.child[static_cast<size_t>(at(p, q) - 1)] = c;
      if (c >= 0) after.nodes[static_cast<size_t>(c)].prong = at(p, q) - 1;
    }
  }
  const auto tgt = after.canonical();
  OneMor2 f{source, node_perms, tgt.element, {}, Perm(static_cast<size_t>(source.m()))};
  for (size_t v = 0; v < before.nodes.size(); ++v) {
    f.node_relabel[static_cast<size_t>(src.position[v] - 1)] = tgt.position[v];
  }
  const auto src_leaves = before.leaves();
  const auto tgt_leaves = after.leaves();
  for (const auto& [v, q] : src_leaves) {
    const int moved = at(node_perms[static_cast<size_t>(src.position[static_cast<size_t>(v)] - 1)], q + 1) - 1;
    auto it = std::find(tgt_leaves.begin(), tgt_leaves.end(), std::make_pair(v, moved));
    f.leaf_perm.push_back(static_cast<int>(it - tgt_leaves.begin()) + 1);
  }
  return f;
}

std::optional<TwoMor2> apply_two(const Element& source, const Perm& sigma) {
  require_level2(source);
  if (static_cast<int>(sigma.size()) != source.m() || !is_perm(sigma)) {
    throw Error(ErrorKind::DegreeMismatch, "sigma must permute 1.." + std::to_string(source.m()));
  }
  std::vector<Element> factors;
  for (int t = 1; t <= source.m(); ++t) factors.push_back(source.factor(at(sigma, t)));
  std::vector<long> indices(source.indices().begin(), source.indices().end());
  try {
    return TwoMor2{source, make_element(std::move(factors), indices), sigma};
  } catch (const Error&) {
    return std::nullopt;
  }
}

TwoMor2 two_between(const Element& source, const Perm& sigma, const Element& target) {
  require_level2(source);
  require_level2(target);
  if (static_cast<int>(sigma.size()) != source.m() || target.m() != source.m() || !is_perm(sigma)) {
    throw Error(ErrorKind::DegreeMismatch, "sigma must permute 1.." + std::to_string(source.m()));
  }
  for (int t = 1; t <= source.m(); ++t) {
    if (target.factor(t) != source.factor(at(sigma, t))) {
      throw Error(ErrorKind::MatchViolation, "target factor " + std::to_string(t) +
                                                 " differs from source factor " +
                                                 std::to_string(at(sigma, t)));
    }
  }
  return TwoMor2{source, target, sigma};
}

OneMor2 then(const OneMor2& f, const OneMor2& g) {
  if (g.source != f.target) throw Error(ErrorKind::NotComposable, "morphisms do not meet");
  std::vector<Perm> perms;
  for (int s = 1; s <= f.source.m(); ++s) {
    perms.push_back(compose_perm(g.node_perms[static_cast<size_t>(at(f.node_relabel, s) - 1)],
                                 f.node_perms[static_cast<size_t>(s - 1)]));
  }
  return apply_one(f.source, perms);
}

TwoMor2 then(const TwoMor2& f, const TwoMor2& g) {
  if (g.source != f.target) throw Error(ErrorKind::NotComposable, "morphisms do not meet");
  return two_between(f.source, compose_perm(f.sigma, g.sigma), g.target);
}

OneMor2 inverse(const OneMor2& f) {
  std::vector<Perm> perms(f.node_perms.size());
  for (int s = 1; s <= f.source.m(); ++s) {
    perms[static_cast<size_t>(at(f.node_relabel, s) - 1)] = inverse(f.node_perms[static_cast<size_t>(s - 1)]);
  }
  return apply_one(f.target, perms);
}

TwoMor2 inverse(const TwoMor2& f) { return two_between(f.target, inverse(f.sigma), f.source); }

Square12 complete_square(const OneMor2& f, const TwoMor2& g) {
  if (f.source != g.source) throw Error(ErrorKind::NotComposable, "edges must share their source");
  const int k = f.source.m();
  std::vector<Perm> carried;
  for (int t = 1; t <= k; ++t) carried.push_back(f.node_perms[static_cast<size_t>(at(g.sigma, t) - 1)]);
  OneMor2 f2 = apply_one(g.target, carried);
  const Perm g_inv = inverse(g.sigma);
  Perm sigma(static_cast<size_t>(k));
  for (int s = 1; s <= k; ++s) {
    sigma[static_cast<size_t>(at(f2.node_relabel, at(g_inv, s)) - 1)] = at(f.node_relabel, s);
  }
  TwoMor2 g2 = two_between(f.target, sigma, f2.target);
  return Square12{f, g, f2, g2};
}

bool is_square(const Square12& s) {
  if (s.f.source != s.g.source || s.f2.source != s.g.target || s.g2.source != s.f.target ||
      s.f2.target != s.g2.target) {
    return false;
  }
  const int k = s.f.source.m();
  const Perm g_inv = inverse(s.g.sigma);
  const Perm g2_inv = inverse(s.g2.sigma);
  for (int t = 1; t <= k; ++t) {
    if (s.f2.node_perms[static_cast<size_t>(t - 1)] !=
        s.f.node_perms[static_cast<size_t>(at(s.g.sigma, t) - 1)]) {
      return false;
    }
  }
  for (int v = 1; v <= k; ++v) {
    if (at(s.f2.node_relabel, at(g_inv, v)) != at(g2_inv, at(s.f.node_relabel, v))) return false;
  }
  return true;
}

int moved_slot(const TwoMor2& f, int i) { return at(inverse(f.sigma), i); }

TwoMor2 induced_two_on_composition(const Element& x, int i, const Element& y, const TwoMor2& f,
                                   const TwoMor2& g) {
  if (f.source != x || g.source != y) {
    throw Error(ErrorKind::NotComposable, "morphisms must start at the composed elements");
  }
  Composite before = compose(x, i, y);
  const int i2 = moved_slot(f, i);
  Composite after = compose(f.target, i2, g.target);
  const Perm f_inv = inverse(f.sigma), g_inv = inverse(g.sigma);
  Perm forward(static_cast<size_t>(before.result.m()));
  for (int s = 1; s <= x.m(); ++s) {
    if (s == i) continue;
    forward[static_cast<size_t>(before.shuffle.phi_at(s) - 1)] = after.shuffle.phi_at(at(f_inv, s));
  }
  for (int u = 1; u <= y.m(); ++u) {
    forward[static_cast<size_t>(before.shuffle.psi_at(u) - 1)] = after.shuffle.psi_at(at(g_inv, u));
  }
  return two_between(before.result, inverse(forward), after.result);
}

void for_each_one(const Element& x, const std::function<void(const OneMor2&)>& visit,
                  std::int64_t max_count) {
  require_level2(x);
  if (x.m() > 6) throw Error(ErrorKind::SizeBound, "more than 6 factors");
  std::int64_t count = 1;
  for (const Element& f : x.factors()) {
    for (int a = 2; a <= f.arity(); ++a) {
      count *= a;
      if (count > max_count) throw Error(ErrorKind::SizeBound, "too many {1}-morphisms");
    }
  }
  std::vector<Perm> perms;
  for (const Element& f : x.factors()) perms.push_back(identity_perm(f.arity()));
  while (true) {
    visit(apply_one(x, perms));
    size_t t = 0;
    while (t < perms.size() && !std::next_permutation(perms[t].begin(), perms[t].end())) ++t;
    if (t == perms.size()) return;
  }
}

void for_each_two(const Element& x, const std::function<void(const TwoMor2&)>& visit) {
  require_level2(x);
  if (x.m() > 6) throw Error(ErrorKind::SizeBound, "more than 6 factors");
  Perm sigma = identity_perm(x.m());
  do {
    if (auto g = apply_two(x, sigma)) visit(*g);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

std::vector<OneMor2> enumerate_one(const Element& x) {
  std::vector<OneMor2> out;
  for_each_one(x, [&](const OneMor2& f) { out.push_back(f); });
  return out;
}

std::vector<TwoMor2> enumerate_two(const Element& x) {
  std::vector<TwoMor2> out;
  for_each_two(x, [&](const TwoMor2& g) { out.push_back(g); });
  return out;
}

}  // namespace actad
