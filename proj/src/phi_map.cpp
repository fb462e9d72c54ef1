#include "actad/phi_map.hpp"

#include <functional>
#include <map>

#include "actad/base.hpp"
#include "actad/enumerate.hpp"

namespace actad {

Ordinal eval_phi2(const Element& z) {
  if (z.level() != 2) throw Error(ErrorKind::LevelMismatch, "eval_phi2 takes a level-2 element");
  HeadForm h = decompose_head(z);
  std::vector<Ordinal> prong(static_cast<size_t>(h.head.arity()), Ordinal::one());
  for (const Attachment& a : h.attachments) {
    prong[static_cast<size_t>(a.slot - 1)] = omega_pow(eval_phi2(a.subtree));
  }
  Ordinal sum;
  for (const Ordinal& p : prong) sum = add(sum, p);
  return sum;
}

Ordinal eval_phin(const Element& z) {
  return eval_phin(z, std::vector<Ordinal>(static_cast<size_t>(z.m()), Ordinal::one()));
}

Ordinal eval_phin(const Element& z, const std::vector<Ordinal>& alphas) {
  if (z.level() < 1) throw Error(ErrorKind::LevelMismatch, "eval_phin needs level >= 1");
  if (static_cast<int>(alphas.size()) != z.m()) {
    throw Error(ErrorKind::RangeViolation, "expected " + std::to_string(z.m()) + " weights, got " +
                                               std::to_string(alphas.size()));
  }
  if (z.level() == 1) {
    Ordinal sum;
    for (const Ordinal& a : alphas) sum = add(sum, a);
    return sum;
  }
  HeadForm h = decompose_head(z);
  std::vector<Ordinal> args(static_cast<size_t>(h.head.m()), Ordinal::one());
  for (const Attachment& a : h.attachments) {
    std::vector<Ordinal> block;
    block.reserve(a.positions.size());
    for (int p : a.positions) block.push_back(alphas[static_cast<size_t>(p - 1)]);
    const Ordinal inner = eval_phin(a.subtree, block);
    args[static_cast<size_t>(a.slot - 1)] = phi(z.level() - 1, left_minus_one(inner));
  }
  return add(eval_phin(h.head, args), left_minus_one(alphas[0]));
}

namespace {

struct Weighted {
  Element element;
  std::vector<Ordinal> alphas;
};

// Factor to use for a weight-carrying entry, keyed by its weight.
using ShapeFn = std::function<Element(const Ordinal&)>;

Weighted weighted_encode(const Ordinal& beta, int m, const ShapeFn& shape_for) {
  if (m == 1) {
    Weighted w{Element::corolla(static_cast<int>(beta.terms().size())), {}};
    for (const Ordinal::Term& t : beta.terms()) w.alphas.push_back(Ordinal::of_term(t));
    return w;
  }
  const Ordinal sub = Ordinal::nat(m - 1);
  std::map<Ordinal, Weighted> cache;
  auto attachment_for = [&](const Ordinal& arg) -> const Weighted& {
    auto it = cache.find(arg);
    if (it != cache.end()) return it->second;
    const Ordinal::Term& t = arg.terms().front();
    Weighted w;
    if (t.a() == sub) {
      w = weighted_encode(add(Ordinal::one(), t.b()), m, shape_for);
    } else {
      w = {Element::from_parts({shape_for(arg)}, {}), {arg}};
    }
    return cache.emplace(arg, std::move(w)).first->second;
  };
  ShapeFn slot_shape = [&](const Ordinal& arg) {
    return total_G(attachment_for(arg).element.factor(1));
  };
  Weighted base = weighted_encode(beta, m - 1, slot_shape);
  std::vector<Attachment> atts;
  std::vector<const Weighted*> sources;
  for (size_t s = 0; s < base.alphas.size(); ++s) {
    if (base.alphas[s].is_one()) continue;
    const Weighted& w = attachment_for(base.alphas[s]);
    atts.push_back({static_cast<int>(s + 1), w.element, {}});
    sources.push_back(&w);
  }
  Assembled as = assemble_head(base.element, atts);
  Weighted out{as.element, std::vector<Ordinal>(static_cast<size_t>(as.element.m()), Ordinal::one())};
  for (size_t t = 0; t < sources.size(); ++t) {
    for (size_t u = 0; u < sources[t]->alphas.size(); ++u) {
      out.alphas[static_cast<size_t>(as.positions[t][u] - 1)] = sources[t]->alphas[u];
    }
  }
  return out;
}

}  // namespace

Element encode(const Ordinal& beta, int n) {
  if (n < 1) throw Error(ErrorKind::LevelMismatch, "encode needs level >= 1");
  const Ordinal bound = phi(n, Ordinal());
  if (beta.is_zero() || beta >= bound) {
    throw Error(ErrorKind::OutOfRange,
                to_string(beta) + " is outside [1, " + to_string(bound) + ")");
  }
  ShapeFn none = [](const Ordinal& arg) -> Element {
    throw Error(ErrorKind::OutOfRange, "unexpected fixed-point weight " + to_string(arg));
  };
  return weighted_encode(beta, n, none).element;
}

std::set<Ordinal> image_sweep(int n, int max_factors, int max_arity) {
  std::set<Ordinal> out;
  for (const Element& z : enumerate(n, max_factors, max_arity)) out.insert(eval_phin(z));
  return out;
}

}  // namespace actad
