#include "actad/element.hpp"

#include <cctype>
#include <limits>

#include "actad/base.hpp"
#include "json.hpp"

namespace actad {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::MatchViolation: return "MatchViolation";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::NotImplementedLevel: return "NotImplementedLevel";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::NotBinary: return "NotBinary";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Gamma0Overflow: return "Gamma0Overflow";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

Element Element::corolla(int arity) {
  Element e;
  e.level_ = 1;
  e.arity_ = arity;
  return e;
}

Element Element::from_parts(std::vector<Element> factors, std::vector<int> indices) {
  Element e;
  e.level_ = factors.empty() ? 2 : factors.front().level() + 1;
  e.arity_ = 0;
  e.factors_ = std::move(factors);
  e.indices_ = std::move(indices);
  return e;
}

int Element::m() const {
  if (level_ == 0) return 1;
  if (level_ == 1) return arity_;
  return static_cast<int>(factors_.size());
}

bool operator==(const Element& a, const Element& b) {
  return a.level_ == b.level_ && a.arity_ == b.arity_ && a.indices_ == b.indices_ &&
         a.factors_ == b.factors_;
}

bool operator<(const Element& a, const Element& b) {
  if (a.level_ != b.level_) return a.level_ < b.level_;
  if (a.arity_ != b.arity_) return a.arity_ < b.arity_;
  if (a.factors_ != b.factors_) return a.factors_ < b.factors_;
  return a.indices_ < b.indices_;
}

int Literal::depth() const {
  switch (kind) {
    case Kind::Point: return 0;
    case Kind::Number: return 1;
    case Kind::Eraser: return 2;
    case Kind::List: return items.empty() ? 2 : items.front().depth() + 1;
  }
  return 0;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Literal parse_all() {
    Literal lit = parse_item();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return lit;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long parse_number() {
    skip_ws();
    size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected number");
    return v;
  }

  Literal parse_item() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    Literal lit;
    char c = s_[pos_];
    if (c == '*') {
      ++pos_;
      lit.kind = Literal::Kind::Point;
    } else if (c == '!') {
      ++pos_;
      if (!eat('e')) fail("expected '!e'");
      lit.kind = Literal::Kind::Eraser;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      lit.kind = Literal::Kind::Number;
      lit.value = parse_number();
    } else if (c == '[') {
      ++pos_;
      lit.kind = Literal::Kind::List;
      lit.items.push_back(parse_item());
      while (eat(',')) lit.items.push_back(parse_item());
      if (eat('|')) {
        skip_ws();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          lit.indices.push_back(parse_number());
          while (eat(',')) lit.indices.push_back(parse_number());
        }
      }
      if (!eat(']')) fail("expected ']'");
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    return lit;
  }

  std::string_view s_;
  size_t pos_ = 0;
};

Element slot_type(const Element& p, int a) {
  return p.level() == 1 ? Element::point() : p.factor(a);
}

}  // namespace

Literal parse_literal(std::string_view text) { return Parser(text).parse_all(); }

Element validate(const Literal& raw) {
  switch (raw.kind) {
    case Literal::Kind::Point:
      return Element::point();
    case Literal::Kind::Number:
      if (raw.value < 1) throw Error(ErrorKind::RangeViolation, "level-1 arity must be positive");
      return Element::corolla(static_cast<int>(raw.value));
    case Literal::Kind::Eraser:
      throw Error(ErrorKind::LevelMismatch, "'!e' is not a plain element");
    case Literal::Kind::List:
      break;
  }
  std::vector<Element> factors;
  factors.reserve(raw.items.size());
  for (const Literal& item : raw.items) factors.push_back(validate(item));
  return make_element(std::move(factors), raw.indices);
}

Element make_element(std::vector<Element> factors, const std::vector<long>& raw_indices) {
  if (factors.empty()) throw Error(ErrorKind::RangeViolation, "an element needs at least one factor");
  const int lvl = factors.front().level();
  for (const Element& f : factors) {
    if (f.level() != lvl) throw Error(ErrorKind::LevelMismatch, "factors of differing levels");
  }
  if (raw_indices.size() + 1 != factors.size()) {
    throw Error(ErrorKind::RangeViolation,
                "expected " + std::to_string(factors.size() - 1) + " indices, got " +
                    std::to_string(raw_indices.size()));
  }
  if (lvl == 0) throw Error(ErrorKind::LevelMismatch, "level-1 elements are plain integers");
  std::vector<int> indices;
  Element partial = factors.front();
  long prev = 1;
  for (size_t t = 1; t < factors.size(); ++t) {
    long a = raw_indices[t - 1];
    if (a < prev) {
      throw Error(ErrorKind::OrderViolation,
                  "index " + std::to_string(a) + " after " + std::to_string(prev));
    }
    if (a < 1 || a > partial.m()) {
      throw Error(ErrorKind::RangeViolation, "index " + std::to_string(a) + " outside 1.." +
                                                 std::to_string(partial.m()));
    }
    const int ai = static_cast<int>(a);
    if (total_G(factors[t]) != slot_type(partial, ai)) {
      throw Error(ErrorKind::MatchViolation,
                  "factor " + std::to_string(t + 1) + " has G = " + to_string(total_G(factors[t])) +
                      " but slot " + std::to_string(a) + " is " + to_string(slot_type(partial, ai)));
    }
    partial = detail::compose_trusted(partial, ai, factors[t]).result;
    indices.push_back(ai);
    prev = a;
  }
  return Element::from_parts(std::move(factors), std::move(indices));
}

Element validate(const Literal& raw, int expected_level) {
  Element e = validate(raw);
  if (e.level() != expected_level) {
    throw Error(ErrorKind::LevelMismatch, "expected level " + std::to_string(expected_level) +
                                              ", literal has level " + std::to_string(e.level()));
  }
  return e;
}

Element parse_element(std::string_view text) { return validate(parse_literal(text)); }

Element parse_element(std::string_view text, int expected_level) {
  return validate(parse_literal(text), expected_level);
}

std::string to_string(const Element& x) {
  if (x.level() == 0) return "*";
  if (x.level() == 1) return std::to_string(x.arity());
  std::string out = "[";
  for (size_t t = 0; t < x.factors().size(); ++t) {
    if (t) out += ',';
    out += to_string(x.factors()[t]);
  }
  out += '|';
  for (size_t t = 0; t < x.indices().size(); ++t) {
    if (t) out += ',';
    out += std::to_string(x.indices()[t]);
  }
  out += ']';
  return out;
}

namespace {

nlohmann::json json_of(const Element& x) {
  nlohmann::json j;
  j["level"] = x.level();
  if (x.level() == 1) j["arity"] = x.arity();
  if (x.level() >= 2) {
    nlohmann::json fs = nlohmann::json::array();
    for (const Element& f : x.factors()) fs.push_back(json_of(f));
    j["factors"] = fs;
    j["indices"] = x.indices();
  }
  return j;
}

Literal literal_of(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("level") || !j["level"].is_number_integer()) {
    throw Error(ErrorKind::ParseError, "JSON element needs an integer \"level\"");
  }
  Literal lit;
  const int level = j["level"].get<int>();
  if (level == 0) return lit;
  if (level == 1) {
    if (!j.contains("arity") || !j["arity"].is_number_integer()) {
      throw Error(ErrorKind::ParseError, "level-1 JSON element needs \"arity\"");
    }
    lit.kind = Literal::Kind::Number;
    lit.value = j["arity"].get<long>();
    return lit;
  }
  if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty()) {
    throw Error(ErrorKind::ParseError, "JSON element needs a nonempty \"factors\" array");
  }
  lit.kind = Literal::Kind::List;
  for (const auto& f : j["factors"]) lit.items.push_back(literal_of(f));
  if (j.contains("indices")) {
    for (const auto& i : j["indices"]) {
      if (!i.is_number_integer()) throw Error(ErrorKind::ParseError, "indices must be integers");
      lit.indices.push_back(i.get<long>());
    }
  }
  if (lit.depth() != level) {
    throw Error(ErrorKind::LevelMismatch, "declared level does not match nesting");
  }
  return lit;
}

}  // namespace

std::string to_json(const Element& x) { return json_of(x).dump(); }

Element from_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::ParseError, "malformed JSON");
  return validate(literal_of(j));
}

}  // namespace actad
