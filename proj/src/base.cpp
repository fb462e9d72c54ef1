#include "actad/base.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace actad {

namespace {

Element slot_type(const Element& p, int a) {
  return p.level() == 1 ? Element::point() : p.factor(a);
}

ShuffleMap level1_shuffle(int mx, int i, int my) {
  ShuffleMap s;
  s.slot = i;
  s.mx = mx;
  s.my = my;
  s.phi.assign(static_cast<size_t>(mx), 0);
  for (int j = 1; j <= mx; ++j) {
    if (j < i) s.phi[j - 1] = j;
    if (j > i) s.phi[j - 1] = j + my - 1;
  }
  s.psi.resize(static_cast<size_t>(my));
  for (int k = 1; k <= my; ++k) s.psi[k - 1] = k + i - 1;
  return s;
}

// Appends y's factors to g, grafting y's head into slot p of the current
// composite `amb`. Each later graft index of y is moved from y-local slot
// numbering to ambient numbering through the running map local -> ambient.
// Returns the composite after the graft.
Element graft_raw(GammaSequence& g, Element amb, int p, const Element& y) {
  const auto& yf = y.factors();
  g.factors.push_back(yf[0]);
  g.indices.push_back(p);
  Composite ca = detail::compose_trusted(amb, p, yf[0]);
  std::vector<int> map(static_cast<size_t>(yf[0].m()));
  for (int u = 1; u <= yf[0].m(); ++u) map[u - 1] = ca.shuffle.psi_at(u);
  amb = std::move(ca.result);
  Element loc = yf[0];
  for (size_t t = 1; t < yf.size(); ++t) {
    const int b = y.indices()[t - 1];
    const int a = map[b - 1];
    g.factors.push_back(yf[t]);
    g.indices.push_back(a);
    Composite na = detail::compose_trusted(amb, a, yf[t]);
    Composite nl = detail::compose_trusted(loc, b, yf[t]);
    std::vector<int> next(static_cast<size_t>(nl.result.m()));
    for (int q = 1; q <= loc.m(); ++q) {
      if (q != b) next[nl.shuffle.phi_at(q) - 1] = na.shuffle.phi_at(map[q - 1]);
    }
    for (int v = 1; v <= yf[t].m(); ++v) next[nl.shuffle.psi_at(v) - 1] = na.shuffle.psi_at(v);
    map = std::move(next);
    amb = std::move(na.result);
    loc = std::move(nl.result);
  }
  return amb;
}

Normalized normalize_impl(GammaSequence g, SwapStrategy strategy, std::uint64_t seed, bool check) {
  const size_t k = g.factors.size();
  if (k == 0) throw Error(ErrorKind::InvalidSequence, "empty factor sequence");
  if (g.indices.size() + 1 != k) {
    throw Error(ErrorKind::InvalidSequence, "expected " + std::to_string(k - 1) + " indices");
  }
  const int lvl = g.factors.front().level();
  if (check && lvl == 0) throw Error(ErrorKind::LevelMismatch, "factors must have level >= 1");
  std::vector<Element> prefix(k);
  prefix[0] = g.factors[0];
  for (size_t t = 1; t < k; ++t) {
    const int a = g.indices[t - 1];
    if (check) {
      if (g.factors[t].level() != lvl) {
        throw Error(ErrorKind::InvalidSequence, "factors of differing levels");
      }
      if (a < 1 || a > prefix[t - 1].m()) {
        throw Error(ErrorKind::InvalidSequence, "step " + std::to_string(t) + ": index " +
                                                    std::to_string(a) + " out of range");
      }
      if (total_G(g.factors[t]) != slot_type(prefix[t - 1], a)) {
        throw Error(ErrorKind::InvalidSequence,
                    "step " + std::to_string(t) + ": factor does not match slot " + std::to_string(a));
      }
    }
    if (t + 1 < k) prefix[t] = detail::compose_trusted(prefix[t - 1], a, g.factors[t]).result;
  }

  std::vector<int> origin(k);
  std::iota(origin.begin(), origin.end(), 1);
  std::mt19937_64 rng(seed);
  std::vector<size_t> inversions;
  for (size_t guard = 0;; ++guard) {
    if (guard > 10000000) throw Error(ErrorKind::InvalidSequence, "normalization did not terminate");
    inversions.clear();
    for (size_t t = 1; t + 1 < k; ++t) {
      if (g.indices[t - 1] > g.indices[t]) inversions.push_back(t);
    }
    if (inversions.empty()) break;
    size_t t = inversions.front();
    if (strategy == SwapStrategy::RightFirst) t = inversions.back();
    if (strategy == SwapStrategy::Random) {
      t = inversions[std::uniform_int_distribution<size_t>(0, inversions.size() - 1)(rng)];
    }
    // (.., g_b v, g_a u, ..) with a < b  ->  (.., g_a u, g_{phi(b)} v, ..)
    const int b = g.indices[t - 1];
    const int a = g.indices[t];
    Composite c = detail::compose_trusted(prefix[t - 1], a, g.factors[t + 1]);
    std::swap(g.factors[t], g.factors[t + 1]);
    std::swap(origin[t], origin[t + 1]);
    g.indices[t - 1] = a;
    g.indices[t] = c.shuffle.phi_at(b);
    prefix[t] = std::move(c.result);
  }

  Normalized out;
  out.perm.assign(k, 0);
  for (size_t c = 0; c < k; ++c) out.perm[origin[c] - 1] = static_cast<int>(c + 1);
  out.element = Element::from_parts(std::move(g.factors), std::move(g.indices));
  return out;
}

}  // namespace

namespace detail {

Composite compose_trusted(const Element& x, int i, const Element& y) {
  if (x.level() == 1) {
    return {Element::corolla(x.arity() + y.arity() - 1), level1_shuffle(x.arity(), i, y.arity())};
  }
  const int mx = x.m();
  const int my = y.m();
  GammaSequence g;
  std::vector<int> xpos(static_cast<size_t>(mx) + 1, 0);
  std::vector<int> ypos(static_cast<size_t>(my) + 1, 0);
  if (i == 1) {
    g.factors = y.factors();
    g.indices = y.indices();
    for (int u = 1; u <= my; ++u) ypos[u] = u;
  } else {
    Element partial = x.factor(1);
    g.factors.push_back(partial);
    xpos[1] = 1;
    for (int j = 2; j < i; ++j) {
      g.factors.push_back(x.factor(j));
      g.indices.push_back(x.indices()[j - 2]);
      xpos[j] = j;
      partial = compose_trusted(partial, x.indices()[j - 2], x.factor(j)).result;
    }
    graft_raw(g, partial, x.indices()[i - 2], y);
    for (int u = 1; u <= my; ++u) ypos[u] = i - 1 + u;
  }
  for (int j = i + 1; j <= mx; ++j) {
    g.factors.push_back(x.factor(j));
    g.indices.push_back(x.indices()[j - 2]);
    xpos[j] = j + my - 1;
  }
  Normalized n = normalize_impl(std::move(g), SwapStrategy::LeftFirst, 0, false);
  Composite out;
  out.result = std::move(n.element);
  out.shuffle.slot = i;
  out.shuffle.mx = mx;
  out.shuffle.my = my;
  out.shuffle.phi.assign(static_cast<size_t>(mx), 0);
  for (int j = 1; j <= mx; ++j) {
    if (j != i) out.shuffle.phi[j - 1] = n.perm[xpos[j] - 1];
  }
  out.shuffle.psi.resize(static_cast<size_t>(my));
  for (int u = 1; u <= my; ++u) out.shuffle.psi[u - 1] = n.perm[ypos[u] - 1];
  return out;
}

}  // namespace detail

int arity_m(const Element& x) { return x.m(); }

std::vector<Element> slots_F(const Element& x) {
  if (x.level() == 0) throw Error(ErrorKind::LevelMismatch, "the point has no slots");
  if (x.level() == 1) return std::vector<Element>(static_cast<size_t>(x.arity()), Element::point());
  return x.factors();
}

Element total_G(const Element& x) {
  if (x.level() == 0) throw Error(ErrorKind::LevelMismatch, "G is undefined on the point");
  if (x.level() == 1) return Element::point();
  Element partial = x.factor(1);
  for (int t = 2; t <= x.m(); ++t) {
    partial = detail::compose_trusted(partial, x.indices()[t - 2], x.factor(t)).result;
  }
  return partial;
}

Composite compose(const Element& x, int i, const Element& y) {
  if (x.level() == 0 || x.level() != y.level()) {
    throw Error(ErrorKind::LevelMismatch, "compose needs two elements of the same level >= 1");
  }
  if (i < 1 || i > x.m()) {
    throw Error(ErrorKind::RangeViolation,
                "slot " + std::to_string(i) + " outside 1.." + std::to_string(x.m()));
  }
  if (total_G(y) != slot_type(x, i)) {
    throw Error(ErrorKind::NotComposable, "G(y) = " + to_string(total_G(y)) + " but slot " +
                                              std::to_string(i) + " is " + to_string(slot_type(x, i)));
  }
  return detail::compose_trusted(x, i, y);
}

ShuffleMap shuffle(const Element& x, int i, const Element& y) { return compose(x, i, y).shuffle; }

Normalized normalize(const GammaSequence& g, SwapStrategy strategy, std::uint64_t seed) {
  return normalize_impl(g, strategy, seed, true);
}

HeadForm decompose_head(const Element& z) {
  if (z.level() < 2) throw Error(ErrorKind::LevelMismatch, "head decomposition needs level >= 2");
  struct Owner {
    int owner;
    int local;  // 0 while the head slot is still free
  };
  struct Sub {
    GammaSequence g;
    Element composite;
    std::vector<int> zpos;
  };
  const Element& z0 = z.factor(1);
  std::vector<Owner> slots;
  for (int s = 1; s <= z0.m(); ++s) slots.push_back({s, 0});
  std::vector<Sub> subs(static_cast<size_t>(z0.m()));
  Element partial = z0;
  for (int t = 2; t <= z.m(); ++t) {
    const int p = z.indices()[t - 2];
    const Element& x = z.factor(t);
    Composite ca = detail::compose_trusted(partial, p, x);
    const Owner here = slots[p - 1];
    Sub& sub = subs[here.owner - 1];
    std::vector<Owner> next(static_cast<size_t>(ca.result.m()));
    if (here.local == 0) {
      sub.g.factors = {x};
      sub.composite = x;
      sub.zpos = {t};
      for (int q = 1; q <= partial.m(); ++q) {
        if (q != p) next[ca.shuffle.phi_at(q) - 1] = slots[q - 1];
      }
      for (int v = 1; v <= x.m(); ++v) next[ca.shuffle.psi_at(v) - 1] = {here.owner, v};
    } else {
      Composite cl = detail::compose_trusted(sub.composite, here.local, x);
      sub.g.factors.push_back(x);
      sub.g.indices.push_back(here.local);
      sub.zpos.push_back(t);
      for (int q = 1; q <= partial.m(); ++q) {
        if (q == p) continue;
        Owner o = slots[q - 1];
        if (o.owner == here.owner && o.local != 0) o.local = cl.shuffle.phi_at(o.local);
        next[ca.shuffle.phi_at(q) - 1] = o;
      }
      for (int v = 1; v <= x.m(); ++v) {
        next[ca.shuffle.psi_at(v) - 1] = {here.owner, cl.shuffle.psi_at(v)};
      }
      sub.composite = std::move(cl.result);
    }
    slots = std::move(next);
    partial = std::move(ca.result);
  }
  HeadForm out;
  out.head = z0;
  for (int s = 1; s <= z0.m(); ++s) {
    Sub& sub = subs[s - 1];
    if (sub.g.factors.empty()) continue;
    Normalized n = normalize_impl(sub.g, SwapStrategy::LeftFirst, 0, false);
    Attachment a;
    a.slot = s;
    a.subtree = std::move(n.element);
    a.positions.assign(sub.zpos.size(), 0);
    for (size_t r = 0; r < sub.zpos.size(); ++r) a.positions[n.perm[r] - 1] = sub.zpos[r];
    out.attachments.push_back(std::move(a));
  }
  return out;
}

Assembled assemble_head(const Element& head, const std::vector<Attachment>& attachments) {
  std::vector<size_t> order(attachments.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return attachments[a].slot > attachments[b].slot; });
  GammaSequence g;
  g.factors.push_back(head);
  Element partial = head;
  std::vector<std::vector<int>> rawpos(attachments.size());
  int last_slot = 0;
  for (size_t idx : order) {
    const Attachment& a = attachments[idx];
    if (a.slot < 1 || a.slot > head.m() || a.slot == last_slot) {
      throw Error(ErrorKind::RangeViolation, "attachment slot " + std::to_string(a.slot));
    }
    if (a.subtree.level() != head.level() + 1 ||
        total_G(a.subtree.factor(1)) != slot_type(head, a.slot)) {
      throw Error(ErrorKind::NotComposable,
                  "attachment does not fit slot " + std::to_string(a.slot));
    }
    last_slot = a.slot;
    const int start = static_cast<int>(g.factors.size());
    partial = graft_raw(g, partial, a.slot, a.subtree);
    for (int u = 1; u <= a.subtree.m(); ++u) rawpos[idx].push_back(start + u);
  }
  Normalized n = normalize_impl(std::move(g), SwapStrategy::LeftFirst, 0, false);
  Assembled out;
  out.element = std::move(n.element);
  out.positions.resize(attachments.size());
  for (size_t t = 0; t < attachments.size(); ++t) {
    for (int r : rawpos[t]) out.positions[t].push_back(n.perm[r - 1]);
  }
  return out;
}

Element embed(const Element& y) {
  if (y.level() < 1) throw Error(ErrorKind::LevelMismatch, "embed is defined for levels >= 2");
  return Element::from_parts({y}, {});
}

AxiomCheck check_associativity(const Element& x, int i, const Element& y, int j, const Element& z) {
  if (!(i < j)) throw Error(ErrorKind::RangeViolation, "associativity needs i < j");
  Composite xy = compose(x, i, y);
  Element lhs = compose(xy.result, xy.shuffle.phi_at(j), z).result;
  Element rhs = compose(compose(x, j, z).result, i, y).result;
  return {lhs == rhs, to_string(lhs), to_string(rhs)};
}

AxiomCheck check_phi_short(const Element& x, int i, const Element& y, int j, int k, const Element& t) {
  if (!(i < j && j < k)) throw Error(ErrorKind::RangeViolation, "short phi axiom needs i < j < k");
  const int lhs = shuffle(x, i, y).phi_at(j);
  const int rhs = shuffle(compose(x, k, t).result, i, y).phi_at(j);
  return {lhs == rhs, std::to_string(lhs), std::to_string(rhs)};
}

AxiomCheck check_phi_long(const Element& x, int i, const Element& y, int j, const Element& z, int k) {
  if (!(i < j) || k == i || k == j) {
    throw Error(ErrorKind::RangeViolation, "long phi axiom needs i < j and k outside {i, j}");
  }
  Composite xz = compose(x, j, z);
  const int lhs = shuffle(xz.result, i, y).phi_at(xz.shuffle.phi_at(k));
  Composite xy = compose(x, i, y);
  const int rhs = shuffle(xy.result, xy.shuffle.phi_at(j), z).phi_at(xy.shuffle.phi_at(k));
  return {lhs == rhs, std::to_string(lhs), std::to_string(rhs)};
}

}  // namespace actad
