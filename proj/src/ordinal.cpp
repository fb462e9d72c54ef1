#include "actad/ordinal.hpp"

#include <cctype>

namespace actad {

namespace {

Ordinal::Term one_term() { return {}; }

std::strong_ordering cmp_term(const Ordinal::Term& x, const Ordinal::Term& y);

// Argument of the standard Veblen function for Phi(a, b).
Ordinal standard_arg(const Ordinal& a, const Ordinal& b) {
  return a.is_one() ? add(Ordinal::one(), b) : b;
}

std::strong_ordering cmp_term(const Ordinal::Term& x, const Ordinal::Term& y) {
  if (x.one || y.one) return static_cast<int>(!x.one) <=> static_cast<int>(!y.one);
  const auto by_sub = cmp(x.a(), y.a());
  if (by_sub == 0) return cmp(x.b(), y.b());
  if (by_sub < 0) return cmp(standard_arg(x.a(), x.b()), Ordinal::of_term(y));
  return cmp(Ordinal::of_term(x), standard_arg(y.a(), y.b()));
}

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view s) : s_(s) {}

  Ordinal parse_all() {
    Ordinal x = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  Ordinal parse_sum() {
    Ordinal x = parse_term();
    while (eat("+")) x = add(x, parse_term());
    return x;
  }

  Ordinal parse_term() {
    skip_ws();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::int64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + (s_[pos_++] - '0');
        if (v > 1000000) fail("natural number too large");
      }
      return Ordinal::nat(v);
    }
    if (eat("phi(")) {
      Ordinal a = parse_sum();
      expect(",");
      Ordinal b = parse_sum();
      expect(")");
      if (a.is_zero()) fail("phi subscript must be at least 1");
      return phi(a, b);
    }
    if (eat("w^(")) {
      Ordinal g = parse_sum();
      expect(")");
      return omega_pow(g);
    }
    if (eat("w")) return Ordinal::omega();
    fail("expected ordinal term");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

std::string term_string(const Ordinal::Term& t) {
  if (t.a().is_one()) {
    if (t.b().is_zero()) return "w";
    return "w^(" + to_string(add(Ordinal::one(), t.b())) + ")";
  }
  return "phi(" + to_string(t.a()) + "," + to_string(t.b()) + ")";
}

}  // namespace

Ordinal Ordinal::nat(std::int64_t k) {
  if (k < 0) throw Error(ErrorKind::RangeViolation, "negative natural number");
  Ordinal x;
  x.terms_.assign(static_cast<size_t>(k), one_term());
  return x;
}

Ordinal Ordinal::of_term(Term t) {
  Ordinal x;
  x.terms_.push_back(std::move(t));
  return x;
}

Ordinal Ordinal::omega() { return phi(Ordinal::one(), Ordinal()); }

bool Ordinal::is_one() const { return terms_.size() == 1 && terms_[0].one; }

bool Ordinal::is_finite() const { return terms_.empty() || terms_[0].one; }

std::int64_t Ordinal::finite_value() const {
  if (!is_finite()) throw Error(ErrorKind::OutOfRange, to_string(*this) + " is infinite");
  return static_cast<std::int64_t>(terms_.size());
}

bool Ordinal::is_phi_term() const { return terms_.size() == 1 && !terms_[0].one; }

std::strong_ordering operator<=>(const Ordinal& x, const Ordinal& y) {
  const size_t n = std::min(x.terms_.size(), y.terms_.size());
  for (size_t k = 0; k < n; ++k) {
    const auto c = cmp_term(x.terms_[k], y.terms_[k]);
    if (c != 0) return c;
  }
  return x.terms_.size() <=> y.terms_.size();
}

std::strong_ordering cmp(const Ordinal& x, const Ordinal& y) { return x <=> y; }

Ordinal add(const Ordinal& x, const Ordinal& y) {
  if (y.terms_.empty()) return x;
  Ordinal r = x;
  const Ordinal::Term& lead = y.terms_.front();
  while (!r.terms_.empty() && cmp_term(r.terms_.back(), lead) < 0) r.terms_.pop_back();
  r.terms_.insert(r.terms_.end(), y.terms_.begin(), y.terms_.end());
  return r;
}

Ordinal phi(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) throw Error(ErrorKind::RangeViolation, "phi subscript must be at least 1");
  if (b.is_phi_term() && cmp(b.terms_[0].a(), a) > 0) return b;
  Ordinal r;
  Ordinal::Term t;
  t.one = false;
  t.ab = {a, b};
  r.terms_.push_back(std::move(t));
  if (cmp(a, r) >= 0) {
    throw Error(ErrorKind::Gamma0Overflow, "subscript " + to_string(a) + " reaches Gamma_0");
  }
  return r;
}

Ordinal phi(std::int64_t a, const Ordinal& b) { return phi(Ordinal::nat(a), b); }

Ordinal omega_pow(const Ordinal& gamma) {
  if (gamma.is_zero()) return Ordinal::one();
  return phi(Ordinal::one(), left_minus_one(gamma));
}

Ordinal left_minus_one(const Ordinal& gamma) {
  if (gamma.is_zero()) throw Error(ErrorKind::OutOfRange, "0 has no predecessor");
  if (gamma.is_finite()) return Ordinal::nat(gamma.finite_value() - 1);
  return gamma;
}

std::string to_string(const Ordinal& x) {
  if (x.is_zero()) return "0";
  std::string out;
  size_t k = 0;
  const auto& ts = x.terms();
  while (k < ts.size()) {
    if (!out.empty()) out += '+';
    if (ts[k].one) {
      size_t run = 0;
      while (k < ts.size() && ts[k].one) ++run, ++k;
      out += std::to_string(run);
    } else {
      out += term_string(ts[k++]);
    }
  }
  return out;
}

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse_all(); }

Ordinal random_ordinal(std::mt19937_64& rng, int n, int depth, int max_terms, int max_nat) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  if (n <= 1 || depth <= 1) return Ordinal::nat(pick(1, max_nat));
  Ordinal x;
  const int count = pick(1, max_terms);
  for (int t = 0; t < count; ++t) {
    if (pick(0, 3) == 0) {
      x = add(x, Ordinal::nat(pick(1, max_nat)));
      continue;
    }
    const int a = pick(1, n - 1);
    Ordinal b = pick(0, 2) == 0 ? Ordinal() : random_ordinal(rng, n, depth - 1, max_terms, max_nat);
    x = add(x, phi(a, b));
  }
  return x;
}

}  // namespace actad
