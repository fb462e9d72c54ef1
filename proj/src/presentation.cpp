#include "actad/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "actad/plane_tree.hpp"

namespace actad {

std::string name_of(const Presentation& p, int g) {
  if (g >= 1 && g <= static_cast<int>(p.names.size())) return p.names[static_cast<size_t>(g - 1)];
  return "a" + std::to_string(g);
}

namespace {

std::string letter(const Presentation& p, int l) {
  return l > 0 ? name_of(p, l) : name_of(p, -l) + "^-1";
}

// Smallest block b with w = b^k, as (b, k).
std::pair<Word, int> root_of(const Word& w) {
  const size_t n = w.size();
  for (size_t len = 1; len < n; ++len) {
    if (n % len) continue;
    bool periodic = true;
    for (size_t k = len; k < n && periodic; ++k) periodic = w[k] == w[k - len];
    if (periodic) return {Word(w.begin(), w.begin() + static_cast<long>(len)), static_cast<int>(n / len)};
  }
  return {w, 1};
}

}  // namespace

std::string to_string(const Presentation& p) {
  std::ostringstream out;
  out << "<";
  for (int g = 1; g <= p.generators; ++g) out << (g > 1 ? ", " : "") << name_of(p, g);
  out << " | ";
  for (size_t r = 0; r < p.relators.size(); ++r) {
    if (r) out << ", ";
    auto [block, k] = root_of(p.relators[r]);
    const bool single = block.size() == 1 && block[0] > 0;
    if (k > 1 && !single) out << "(";
    for (size_t q = 0; q < block.size(); ++q) {
      if (q && (block[q - 1] < 0 || block[q] < 0)) out << " ";
      out << letter(p, block[q]);
    }
    if (k > 1 && !single) out << ")";
    if (k > 1) out << "^" << k;
  }
  out << ">";
  return out.str();
}

std::string to_gap(const Presentation& p) {
  std::ostringstream out;
  for (const Word& w : p.relators) {
    for (size_t q = 0; q < w.size(); ++q) out << (q ? "*" : "") << letter(p, w[q]);
    out << "\n";
  }
  return out.str();
}

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::int64_t cap) : p_(p), cols_(2 * p.generators), cap_(cap) {
    for (const Word& w : p.relators) {
      Word c;
      for (int l : w) c.push_back(column(l));
      rels_.push_back(c);
    }
    new_coset();
  }

  CosetTable run() {
    for (int c = 0; c < static_cast<int>(rows_.size()); ++c) {
      for (const Word& r : rels_) {
        if (!alive(c)) break;
        scan_and_fill(c, r);
      }
      for (int x = 0; x < cols_ && alive(c); ++x) {
        if (rows_[static_cast<size_t>(c)][static_cast<size_t>(x)] < 0) define(c, x);
      }
    }
    return compact();
  }

 private:
  static int column(int l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }
  static int inv(int x) { return x ^ 1; }
  int& at(int c, int x) { return rows_[static_cast<size_t>(c)][static_cast<size_t>(x)]; }
  bool alive(int c) const { return parent_[static_cast<size_t>(c)] == c; }

  int new_coset() {
    if (static_cast<std::int64_t>(rows_.size()) >= cap_) {
      throw Error(ErrorKind::Overflow, "more than " + std::to_string(cap_) + " cosets");
    }
    rows_.emplace_back(static_cast<size_t>(cols_), -1);
    const int c = static_cast<int>(rows_.size()) - 1;
    parent_.push_back(c);
    return c;
  }

  void define(int c, int x) {
    const int d = new_coset();
    at(c, x) = d;
    at(d, inv(x)) = c;
  }

  void scan_and_fill(int c, const Word& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[static_cast<size_t>(i)]) >= 0) f = at(f, w[static_cast<size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inv(w[static_cast<size_t>(j)])) >= 0) b = at(b, inv(w[static_cast<size_t>(j--)]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[static_cast<size_t>(i)]) = b;
        at(b, inv(w[static_cast<size_t>(i)])) = f;
        return;
      }
      define(f, w[static_cast<size_t>(i)]);
    }
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<size_t>(r)] != r) r = parent_[static_cast<size_t>(r)];
    while (parent_[static_cast<size_t>(c)] != r) {
      const int next = parent_[static_cast<size_t>(c)];
      parent_[static_cast<size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (l < k) std::swap(k, l);
    parent_[static_cast<size_t>(l)] = k;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (size_t q = 0; q < queue.size(); ++q) {
      const int e = queue[q];
      for (int x = 0; x < cols_; ++x) {
        const int f = at(e, x);
        if (f < 0) continue;
        at(f, inv(x)) = -1;
        const int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, inv(x)) >= 0) {
          merge(e1, at(f1, inv(x)), queue);
        } else {
          at(e1, x) = f1;
          at(f1, inv(x)) = e1;
        }
      }
    }
  }

  CosetTable compact() {
    std::vector<int> index(rows_.size(), -1);
    int live = 0;
    for (size_t c = 0; c < rows_.size(); ++c) {
      if (alive(static_cast<int>(c))) index[c] = live++;
    }
    CosetTable t;
    t.generators = p_.generators;
    t.defined = static_cast<std::int64_t>(rows_.size());
    t.order = live;
    for (size_t c = 0; c < rows_.size(); ++c) {
      if (index[c] < 0) continue;
      std::vector<int> row(static_cast<size_t>(cols_));
      for (int x = 0; x < cols_; ++x) row[static_cast<size_t>(x)] = index[static_cast<size_t>(rep(at(static_cast<int>(c), x)))];
      t.rows.push_back(row);
    }
    return t;
  }

  const Presentation& p_;
  int cols_;
  std::int64_t cap_;
  std::vector<Word> rels_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> parent_;
};

Word power(const Word& w, int k) {
  Word out;
  for (int r = 0; r < k; ++r) out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace

CosetTable todd_coxeter(const Presentation& p, std::int64_t max_cosets) {
  if (max_cosets < 1) throw Error(ErrorKind::RangeViolation, "max_cosets must be at least 1");
  for (const Word& w : p.relators) {
    for (int l : w) {
      if (l == 0 || std::abs(l) > p.generators) {
        throw Error(ErrorKind::RangeViolation, "letter " + std::to_string(l) + " outside the generators");
      }
    }
  }
  return Enumerator(p, max_cosets).run();
}

Presentation symmetric_presentation(int n) {
  if (n < 2) throw Error(ErrorKind::RangeViolation, "symmetric presentations need n >= 2");
  Presentation p;
  p.generators = n - 1;
  for (int i = 1; i < n; ++i) p.relators.push_back({i, i});
  for (int i = 1; i + 1 < n; ++i) p.relators.push_back(power({i, i + 1}, 3));
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) p.relators.push_back(power({i, j}, 2));
  }
  return p;
}

bool EdgeStructure::share_node(int e, int f) const {
  const auto& [a, b] = edges[static_cast<size_t>(e - 1)];
  const auto& [c, d] = edges[static_cast<size_t>(f - 1)];
  return a == c || a == d || b == c || b == d;
}

EdgeStructure edge_structure(const Element& x) {
  if (x.level() != 2) throw Error(ErrorKind::LevelMismatch, "edge structures are read from level-2 elements");
  for (int t = 1; t <= x.m(); ++t) {
    if (x.factor(t).arity() != 2) {
      throw Error(ErrorKind::NotBinary, "factor " + std::to_string(t) + " has arity " +
                                            std::to_string(x.factor(t).arity()));
    }
  }
  PlaneTree tree = PlaneTree::of(x);
  EdgeStructure s;
  s.nodes = x.m();
  for (size_t v = 0; v < tree.nodes.size(); ++v) {
    for (int c : tree.nodes[v].child) {
      if (c < 0) continue;
      const int a = static_cast<int>(v) + 1, b = c + 1;
      s.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(s.edges.begin(), s.edges.end());
  s.incidence.assign(static_cast<size_t>(s.nodes), {});
  for (size_t e = 0; e < s.edges.size(); ++e) {
    s.incidence[static_cast<size_t>(s.edges[e].first - 1)].push_back(static_cast<int>(e) + 1);
    s.incidence[static_cast<size_t>(s.edges[e].second - 1)].push_back(static_cast<int>(e) + 1);
  }
  return s;
}

TreePresentation tree_presentation(const Element& x) {
  TreePresentation tp;
  tp.edges = edge_structure(x);
  Presentation& p = tp.presentation;
  const int g = static_cast<int>(tp.edges.edges.size());
  p.generators = g;
  for (int i = 1; i <= g; ++i) p.relators.push_back({i, i});
  for (int i = 1; i <= g; ++i) {
    for (int j = i + 1; j <= g; ++j) {
      p.relators.push_back(power({i, j}, tp.edges.share_node(i, j) ? 3 : 2));
    }
  }
  for (const auto& at_node : tp.edges.incidence) {
    for (size_t a = 0; a < at_node.size(); ++a) {
      for (size_t b = a + 1; b < at_node.size(); ++b) {
        for (size_t c = b + 1; c < at_node.size(); ++c) {
          p.relators.push_back(power({at_node[a], at_node[b], at_node[c], at_node[b]}, 2));
        }
      }
    }
  }
  return tp;
}

Presentation five_node_presentation() {
  enum { a = 1, b, c, d };
  Presentation p;
  p.generators = 4;
  p.names = {"a", "b", "c", "d"};
  p.relators = {{a, a},
                {b, b},
                {c, c},
                {d, d},
                power({a, b}, 3),
                power({b, c}, 3),
                power({a, d}, 3),
                power({d, b}, 3),
                power({d, a, b, a}, 2),
                power({a, c}, 2),
                power({c, d}, 2)};
  return p;
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

namespace {

using Permutation = std::vector<int>;  // 0-based images

Permutation product(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = b[static_cast<size_t>(a[k])];
  return r;
}

}  // namespace

RealizationReport verify_symmetric_realization(const Element& x, std::int64_t max_cosets) {
  return verify_symmetric_realization(tree_presentation(x), max_cosets);
}

RealizationReport verify_symmetric_realization(const TreePresentation& tp, std::int64_t max_cosets) {
  const int n = tp.edges.nodes;
  if (n > 8) throw Error(ErrorKind::SizeBound, "realizations are checked for at most 8 nodes");
  RealizationReport rep;
  rep.nodes = n;
  rep.expected_order = factorial(n);
  Permutation id(static_cast<size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> gens;
  for (const auto& [u, v] : tp.edges.edges) {
    Permutation t = id;
    std::swap(t[static_cast<size_t>(u - 1)], t[static_cast<size_t>(v - 1)]);
    gens.push_back(t);
  }
  rep.relators_hold = true;
  for (const Word& w : tp.presentation.relators) {
    Permutation acc = id;
    for (int l : w) acc = product(acc, gens[static_cast<size_t>(std::abs(l) - 1)]);
    if (acc != id) rep.relators_hold = false;
  }
  std::set<Permutation> seen{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& p : frontier) {
      for (const Permutation& s : gens) {
        Permutation q = product(p, s);
        if (seen.insert(q).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  rep.generated_order = static_cast<std::int64_t>(seen.size());
  rep.presented_order = todd_coxeter(tp.presentation, max_cosets).order;
  rep.isomorphic = rep.relators_hold && rep.generated_order == rep.expected_order &&
                   rep.presented_order == rep.expected_order;
  return rep;
}

}  // namespace actad
