#include "actad/enumerate.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "actad/base.hpp"

namespace actad {

namespace {

Element slot_type(const Element& p, int a) {
  return p.level() == 1 ? Element::point() : p.factor(a);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "count exceeds 64 bits");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "count exceeds 64 bits");
  return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

}  // namespace

void for_each_element(const std::vector<Element>& pool, int max_factors,
                      const std::function<void(const Element&)>& visit) {
  std::map<Element, std::vector<const Element*>> by_g;
  for (const Element& e : pool) by_g[total_G(e)].push_back(&e);
  std::vector<Element> factors;
  std::vector<int> indices;
  std::function<void(const Element&, int)> rec = [&](const Element& partial, int last) {
    visit(Element::from_parts(factors, indices));
    if (static_cast<int>(factors.size()) >= max_factors) return;
    for (int a = last; a <= partial.m(); ++a) {
      auto it = by_g.find(slot_type(partial, a));
      if (it == by_g.end()) continue;
      for (const Element* cand : it->second) {
        factors.push_back(*cand);
        indices.push_back(a);
        rec(detail::compose_trusted(partial, a, *cand).result, a);
        factors.pop_back();
        indices.pop_back();
      }
    }
  };
  for (const Element& head : pool) {
    factors = {head};
    indices.clear();
    rec(head, 1);
  }
}

std::vector<Element> enumerate(int level, int max_factors, int max_arity) {
  if (level < 0) throw Error(ErrorKind::LevelMismatch, "negative level");
  if (level == 0) return {Element::point()};
  if (level == 1) {
    std::vector<Element> out;
    for (int a = 1; a <= max_arity; ++a) out.push_back(Element::corolla(a));
    return out;
  }
  std::vector<Element> pool = enumerate(level - 1, max_factors, max_arity);
  std::vector<std::pair<std::string, Element>> keyed;
  for_each_element(pool, max_factors,
                   [&](const Element& e) { keyed.emplace_back(to_string(e), e); });
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Element> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

std::int64_t count_binary(int k) {
  if (k < 1) return 0;
  std::int64_t n = 0;
  for_each_element({Element::corolla(2)}, k, [&](const Element& e) {
    if (e.m() == k) ++n;
  });
  return n;
}

std::int64_t free_plain_algebra_count(int level, const std::map<Element, std::int64_t>& sizes,
                                      const Element& y, int bound) {
  if (level < 1) throw Error(ErrorKind::LevelMismatch, "free algebra count needs level >= 1");
  if (y.level() != level - 1) throw Error(ErrorKind::LevelMismatch, "y must lie one level down");
  if (level == 1) {
    auto it = sizes.find(Element::point());
    const std::int64_t c = it == sizes.end() ? 0 : it->second;
    std::int64_t total = 0, power = 1;
    for (int m = 1; m <= bound; ++m) {
      power = checked_mul(power, c);
      total = checked_add(total, power);
    }
    return total;
  }
  std::vector<Element> support;
  for (const auto& [e, size] : sizes) {
    if (e.level() != level - 1) throw Error(ErrorKind::LevelMismatch, "size key at wrong level");
    if (size > 0) support.push_back(e);
  }
  std::int64_t total = 0;
  for_each_element(support, bound, [&](const Element& z) {
    if (total_G(z) != y) return;
    std::int64_t prod = 1;
    for (const Element& f : z.factors()) prod = checked_mul(prod, sizes.at(f));
    total = checked_add(total, prod);
  });
  return total;
}

FreeEA2Count free_ea2_component_count(std::int64_t s_size, int n) {
  if (n < 2) throw Error(ErrorKind::RangeViolation, "n must be at least 2");
  if (s_size < 0) throw Error(ErrorKind::RangeViolation, "set size must be nonnegative");
  FreeEA2Count c;
  const std::int64_t k = n - 1;
  c.catalan_factor = binomial(2 * k, k) / (k + 1);
  c.sym_factor = 1;
  for (int i = 2; i <= n; ++i) c.sym_factor = checked_mul(c.sym_factor, i);
  c.multiset_factor = s_size == 0 ? 0 : binomial(s_size + n - 2, n - 1);
  c.product = checked_mul(checked_mul(c.catalan_factor, c.sym_factor), c.multiset_factor);
  return c;
}

}  // namespace actad
