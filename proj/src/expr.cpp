#include "qjlab/expr.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "qjlab/errors.hpp"

namespace qjlab::construct {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::optional<long> to_long(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Splits at commas and blanks that are not nested in (), [] or {}.
std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth == 0 && (c == ',' || is_space(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string_view strip_angles(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '<' && s.back() == '>') return trim(s.substr(1, s.size() - 2));
  return s;
}

bool has_pair_names(const RingTable& ring) {
  const auto& n = ring.name(ring.zero());
  return n.size() > 2 && n.front() == '(' && n.back() == ')';
}

std::vector<Elem> resolve_all(const RingTable& ring, std::string_view generators) {
  const auto tokens = split_top(strip_angles(generators));
  if (tokens.size() == 2 && has_pair_names(ring)) {
    const std::string pair = "(" + tokens[0] + "," + tokens[1] + ")";
    const auto& names = ring.names();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == pair) return {static_cast<Elem>(i)};
  }
  std::vector<Elem> out;
  for (const auto& t : tokens) out.push_back(parse_element(ring, t));
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expression top() {
    skip();
    Expression out;
    if (peek_word() == "ideal") {
      word();
      Expression inner = expr();
      const auto gens = rest_until_close();
      out = std::move(inner);
      out.ideal = parse_ideal(out.ring, gens);
    } else {
      out = expr();
    }
    skip();
    if (pos_ != s_.size())
      throw ParseError("trailing input '" + std::string(s_.substr(pos_)) + "'");
    return out;
  }

 private:
  Expression expr() {
    skip();
    if (at('(')) {
      ++pos_;
      Expression inner;
      skip();
      if (peek_word() == "ideal") {
        word();
        inner = expr();
        inner.ideal = parse_ideal(inner.ring, rest_until_close());
      } else {
        inner = expr();
      }
      skip();
      expect(')');
      return inner;
    }
    const std::string w = word();
    if (w == "Z") {
      const long n = number();
      if (n < 2) throw ParseError("Z n needs n >= 2");
      return {zmod(static_cast<unsigned>(n)), std::nullopt, std::nullopt};
    }
    if (w == "prod") {
      auto a = expr();
      auto b = expr();
      return {product(a.ring, b.ring), std::nullopt, std::nullopt};
    }
    if (w == "quot") {
      auto r = expr();
      const auto ideal = parse_ideal(r.ring, group());
      return {quotient(ideal).ring, std::nullopt, std::nullopt};
    }
    if (w == "idl") {
      auto r = expr();
      const std::string m = word();
      ModuleRef module;
      if (m == "selfmod") module = module_self(r.ring);
      else if (m == "zeromod") module = module_zero(r.ring);
      else if (m == "quotmod") module = module_from_quotient(parse_ideal(r.ring, group()));
      else throw ParseError("unknown module '" + m + "' (selfmod, zeromod, quotmod <gens>)");
      auto idl = idealization(r.ring, module);
      return {idl.ring, idl, std::nullopt};
    }
    if (w == "polyq") {
      const long p = number();
      skip();
      const auto f = token();
      if (p != 2 && p != 3 && p != 5) throw ParseError("polyq needs p in {2, 3, 5}");
      return {poly_quotient(static_cast<unsigned>(p), parse_polynomial(static_cast<unsigned>(p), f)),
              std::nullopt, std::nullopt};
    }
    if (w == "loc") {
      auto r = expr();
      const auto g = group();
      auto inner = trim(g);
      if (inner.size() >= 2 && inner.front() == '{' && inner.back() == '}')
        inner = inner.substr(1, inner.size() - 2);
      const auto elems = resolve_all(*r.ring, inner);
      if (elems.empty()) throw ParseError("loc needs a generator");
      ElementSubset s = elems.size() == 1 && trim(g).front() != '{'
                            ? powers_of(r.ring, elems[0])
                            : ElementSubset(r.ring, std::span<const Elem>(elems));
      return {localize(r.ring, s).ring, std::nullopt, std::nullopt};
    }
    if (w.empty()) throw ParseError("expected a ring expression at offset " + std::to_string(pos_));
    throw ParseError("unknown constructor '" + w + "'");
  }

  void skip() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }
  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  void expect(char c) {
    if (!at(c)) throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos_));
    ++pos_;
  }

  std::string peek_word() {
    const auto save = pos_;
    auto w = word();
    pos_ = save;
    return w;
  }

  std::string word() {
    skip();
    const auto start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  long number() {
    skip();
    const auto start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    auto v = to_long(s_.substr(start, pos_ - start));
    if (!v) throw ParseError("expected a number at offset " + std::to_string(start));
    return *v;
  }

  // A blank-delimited token with balanced brackets.
  std::string token() {
    skip();
    const auto start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '(' || c == '[' || c == '{' || c == '<') ++depth;
      if (c == ')' || c == ']' || c == '}' || c == '>') {
        if (depth == 0) break;
        --depth;
      }
      if (depth == 0 && is_space(c)) break;
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a token at offset " + std::to_string(start));
    return std::string(s_.substr(start, pos_ - start));
  }

  // <...> or {...} group, or a single token.
  std::string group() {
    skip();
    if (at('<') || at('{')) {
      const char close = at('<') ? '>' : '}';
      const auto start = pos_;
      int depth = 0;
      while (pos_ < s_.size()) {
        const char c = s_[pos_++];
        if (c == '<' || c == '{') ++depth;
        if (c == close && --depth == 0) return std::string(s_.substr(start, pos_ - start));
      }
      throw ParseError(std::string("missing '") + close + "'");
    }
    return token();
  }

  // Everything up to the ')' closing the current level, or the end.
  std::string rest_until_close() {
    skip();
    const auto start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '(' || c == '[' || c == '{' || c == '<') ++depth;
      if (c == ')' || c == ']' || c == '}' || c == '>') {
        if (depth == 0) break;
        --depth;
      }
      ++pos_;
    }
    auto out = trim(s_.substr(start, pos_ - start));
    if (out.empty()) throw ParseError("missing ideal generators");
    return std::string(out);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Elem parse_element(const RingTable& ring, std::string_view token) {
  token = trim(token);
  const auto& names = ring.names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == token) return static_cast<Elem>(i);
  if (auto v = to_long(token); v && *v >= 0 && static_cast<std::size_t>(*v) < ring.order())
    return static_cast<Elem>(*v);
  throw ParseError("no element '" + std::string(token) + "' in " + ring.label());
}

IdealSet parse_ideal(const RingRef& ring, std::string_view generators) {
  const auto elems = resolve_all(*ring, generators);
  if (elems.empty()) return finring::zero_ideal(ring);
  return finring::ideal_generated(ring, ElementSubset(ring, std::span<const Elem>(elems)));
}

std::vector<unsigned> parse_polynomial(unsigned p, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!is_space(c)) s += c;
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<unsigned> coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == '+') {
      ++pos;
      continue;
    }
    const auto start = pos;
    while (pos < s.size() && s[pos] != '+') ++pos;
    const std::string term = s.substr(start, pos - start);
    const auto x = term.find('x');
    unsigned coef = 1;
    std::size_t degree = 0;
    if (x == std::string::npos) {
      auto v = to_long(term);
      if (!v) throw ParseError("bad polynomial term '" + term + "'");
      coef = static_cast<unsigned>(*v);
    } else {
      if (x > 0) {
        auto v = to_long(std::string_view(term).substr(0, x));
        if (!v) throw ParseError("bad coefficient in '" + term + "'");
        coef = static_cast<unsigned>(*v);
      }
      degree = 1;
      if (x + 1 < term.size()) {
        if (term[x + 1] != '^') throw ParseError("bad polynomial term '" + term + "'");
        auto v = to_long(std::string_view(term).substr(x + 2));
        if (!v || *v < 0) throw ParseError("bad exponent in '" + term + "'");
        degree = static_cast<std::size_t>(*v);
      }
    }
    if (degree >= coeffs.size()) coeffs.resize(degree + 1, 0);
    coeffs[degree] = (coeffs[degree] + coef) % p;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

RingRef parse_ring(std::string_view text) {
  auto e = parse_expression(text);
  if (e.ideal) throw ParseError("expected a ring, got an ideal expression");
  return e.ring;
}

Expression parse_expression(std::string_view text) { return Parser(text).top(); }

}  // namespace qjlab::construct
