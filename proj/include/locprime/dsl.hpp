#pragma once

// Ring-description expressions:
//
//   expr     = ident "(" [ arg { "," arg } ] ")" ;
//   arg      = ident "=" value | value ;
//   value    = integer | expr | list | monomial ;
//   list     = "[" [ value { "," value } ] "]" ;
//   monomial = factor { "*" factor } ;
//   factor   = ident [ "^" integer ] ;

#include <cctype>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ideals.hpp"
#include "monomial.hpp"

namespace locprime::dsl {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string expected, const std::string& found)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": expected " +
                           expected + (found.empty() ? "" : ", found " + found)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_, column_;
  std::string expected_;
};

struct RingExpr;

struct Factor {
  std::string name;
  int exponent = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct Value {
  enum class Kind { integer, expr, list, monomial };
  Kind kind = Kind::integer;
  long long integer = 0;
  std::shared_ptr<RingExpr> expr;
  std::vector<Value> items;
  std::vector<Factor> factors;
  int line = 1, column = 1;
};

struct RingExpr {
  std::string ctor;
  std::vector<Value> positional;
  std::vector<std::pair<std::string, Value>> named;
  int line = 1, column = 1;

  const Value* find(const std::string& key) const {
    for (const auto& [k, v] : named)
      if (k == key) return &v;
    return nullptr;
  }
};

bool operator==(const RingExpr& a, const RingExpr& b);

inline bool operator==(const Value& a, const Value& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Value::Kind::integer: return a.integer == b.integer;
    case Value::Kind::expr: return *a.expr == *b.expr;
    case Value::Kind::list: return a.items == b.items;
    case Value::Kind::monomial: return a.factors == b.factors;
  }
  return false;
}

inline bool operator==(const RingExpr& a, const RingExpr& b) {
  return a.ctor == b.ctor && a.positional == b.positional && a.named == b.named;
}

namespace detail {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  RingExpr parse_top() {
    skip();
    RingExpr e = parse_expr();
    skip();
    if (pos_ != s_.size()) error("end of input");
    return e;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;

  [[noreturn]] void error(const std::string& expected) {
    std::string found = pos_ < s_.size() ? std::string("'") + s_[pos_] + "'" : "end of input";
    throw ParseError(line_, col_, expected, found);
  }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) error(std::string("'") + c + "'");
    advance();
  }
  bool at_ident() {
    skip();
    return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
  }
  std::string ident() {
    if (!at_ident()) error("identifier");
    std::string out;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      out += s_[pos_];
      advance();
    }
    return out;
  }
  long long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      advance();
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("integer");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000'000) error("integer below 10^9");
      advance();
    }
    return neg ? -v : v;
  }
  /// Lookahead: next non-space character after the identifier starting at pos_.
  char after_ident() {
    std::size_t p = pos_;
    while (p < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p])) || s_[p] == '_')) ++p;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    return p < s_.size() ? s_[p] : '\0';
  }

  RingExpr parse_expr() {
    skip();
    RingExpr e;
    e.line = line_;
    e.column = col_;
    e.ctor = ident();
    expect('(');
    if (!peek(')')) {
      do {
        skip();
        if (at_ident() && after_ident() == '=') {
          std::string key = ident();
          expect('=');
          e.named.emplace_back(key, parse_value());
        } else {
          if (!e.named.empty()) error("key=value after a keyword argument");
          e.positional.push_back(parse_value());
        }
      } while (peek(',') && (advance(), true));
    }
    expect(')');
    return e;
  }

  Value parse_value() {
    skip();
    Value v;
    v.line = line_;
    v.column = col_;
    if (peek('[')) {
      advance();
      v.kind = Value::Kind::list;
      if (!peek(']')) {
        do {
          v.items.push_back(parse_value());
        } while (peek(',') && (advance(), true));
      }
      expect(']');
      return v;
    }
    if (at_ident()) {
      if (after_ident() == '(') {
        v.kind = Value::Kind::expr;
        v.expr = std::make_shared<RingExpr>(parse_expr());
        return v;
      }
      v.kind = Value::Kind::monomial;
      do {
        Factor f{ident(), 1};
        if (peek('^')) {
          advance();
          const long long k = integer();
          if (k < 0 || k > 1000) error("exponent in 0..1000");
          f.exponent = static_cast<int>(k);
        }
        v.factors.push_back(f);
      } while (peek('*') && (advance(), true));
      return v;
    }
    skip();
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
      v.kind = Value::Kind::integer;
      v.integer = integer();
      return v;
    }
    error("integer, expression, list or monomial");
  }
};

}  // namespace detail

inline RingExpr parse_ring_expr(const std::string& text) { return detail::Parser(text).parse_top(); }

std::string render(const RingExpr& e);

inline std::string render(const Value& v) {
  switch (v.kind) {
    case Value::Kind::integer: return std::to_string(v.integer);
    case Value::Kind::expr: return render(*v.expr);
    case Value::Kind::list: {
      std::string s = "[";
      for (std::size_t i = 0; i < v.items.size(); ++i) s += (i ? ", " : "") + render(v.items[i]);
      return s + "]";
    }
    case Value::Kind::monomial: {
      std::string s;
      for (std::size_t i = 0; i < v.factors.size(); ++i) {
        s += (i ? "*" : "") + v.factors[i].name;
        if (v.factors[i].exponent != 1) s += "^" + std::to_string(v.factors[i].exponent);
      }
      return s;
    }
  }
  return {};
}

inline std::string render(const RingExpr& e) {
  std::string s = e.ctor + "(";
  bool first = true;
  for (const auto& v : e.positional) {
    s += (first ? "" : ", ") + render(v);
    first = false;
  }
  for (const auto& [k, v] : e.named) {
    s += (first ? "" : ", ") + k + "=" + render(v);
    first = false;
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Evaluation

struct Evaluated {
  RingPtr finite;
  std::optional<mono::CommMonomialRing> comm;
  std::optional<mono::AnAlgebra> an;

  const char* kind() const { return finite ? "finite" : comm ? "monomial" : "an"; }
};

namespace detail {

[[noreturn]] inline void arity(const RingExpr& e, const std::string& signature) {
  throw ParseError(e.line, e.column, signature, e.ctor);
}

inline int as_int(const RingExpr& e, const Value& v, const std::string& signature) {
  if (v.kind != Value::Kind::integer) throw ParseError(v.line, v.column, "integer", render(v));
  (void)e;
  (void)signature;
  return static_cast<int>(v.integer);
}

inline void only_keys(const RingExpr& e, std::initializer_list<const char*> keys, const std::string& signature) {
  for (const auto& [k, v] : e.named) {
    bool ok = false;
    for (const char* key : keys) ok = ok || k == key;
    if (!ok) throw ParseError(v.line, v.column, signature, "unknown key '" + k + "'");
  }
}

inline int keyed_int(const RingExpr& e, const char* key, int fallback, const std::string& signature) {
  const Value* v = e.find(key);
  return v ? as_int(e, *v, signature) : fallback;
}

}  // namespace detail

Evaluated evaluate(const RingExpr& e, int cap = kDefaultOrderCap);

inline RingPtr evaluate_finite(const Value& v, int cap) {
  if (v.kind != Value::Kind::expr) throw ParseError(v.line, v.column, "ring expression", render(v));
  Evaluated r = evaluate(*v.expr, cap);
  if (!r.finite) throw ParseError(v.line, v.column, "finite ring expression", render(v));
  return r.finite;
}

inline Evaluated evaluate(const RingExpr& e, int cap) {
  auto within = [&](RingPtr r) {
    if (r->order() > cap)
      throw Error(ErrorCode::size_limit, r->label() + " has order " + std::to_string(r->order()) + " above cap " +
                                             std::to_string(cap));
    return Evaluated{r, std::nullopt, std::nullopt};
  };
  const auto& p = e.positional;
  if (e.ctor == "zmod" || e.ctor == "gf") {
    const std::string sig = e.ctor + "(n)";
    if (p.size() != 1 || !e.named.empty()) detail::arity(e, sig);
    const int n = detail::as_int(e, p[0], sig);
    return within(e.ctor == "zmod" ? make_zmod(n) : make_gf(n));
  }
  if (e.ctor == "mat" || e.ctor == "tri") {
    const std::string sig = e.ctor + "(k, expr)";
    if (p.size() != 2 || !e.named.empty()) detail::arity(e, sig);
    const int k = detail::as_int(e, p[0], sig);
    RingPtr base = evaluate_finite(p[1], cap);
    return within(e.ctor == "mat" ? make_matrix_ring(k, *base, cap) : make_upper_triangular(k, *base, cap));
  }
  if (e.ctor == "prod") {
    if (p.size() != 2 || !e.named.empty()) detail::arity(e, "prod(expr, expr)");
    return within(make_product(*evaluate_finite(p[0], cap), *evaluate_finite(p[1], cap), cap));
  }
  if (e.ctor == "quot") {
    const std::string sig = "quot(expr, gens=[ids])";
    detail::only_keys(e, {"gens"}, sig);
    const Value* g = e.find("gens");
    if (p.size() != 1 || !g || g->kind != Value::Kind::list) detail::arity(e, sig);
    RingPtr base = evaluate_finite(p[0], cap);
    ElementSet gens(base->order());
    for (const auto& item : g->items) {
      const int id = detail::as_int(e, item, sig);
      if (id < 0 || id >= base->order())
        throw Error(ErrorCode::index_out_of_range,
                    "element id " + std::to_string(id) + " outside 0.." + std::to_string(base->order() - 1));
      gens.insert(id);
    }
    return within(make_quotient(base, ideal_generated_by(base, gens, Side::two_sided)).ring);
  }
  if (e.ctor == "mono") {
    const std::string sig = "mono(vars=n|[names], gens=[monomials], d=k)";
    detail::only_keys(e, {"vars", "gens", "d"}, sig);
    const Value* vars = e.find("vars");
    const Value* gens = e.find("gens");
    if (!p.empty() || !vars) detail::arity(e, sig);
    std::vector<std::string> names;
    if (vars->kind == Value::Kind::integer) {
      const int n = detail::as_int(e, *vars, sig);
      if (n < 0 || n > mono::kMaxVariables) throw Error(ErrorCode::size_limit, "variable count out of range");
      names = mono::default_names(n);
    } else if (vars->kind == Value::Kind::list) {
      for (const auto& item : vars->items) {
        if (item.kind != Value::Kind::monomial || item.factors.size() != 1 || item.factors[0].exponent != 1)
          throw ParseError(item.line, item.column, "variable name", render(item));
        names.push_back(item.factors[0].name);
      }
    } else {
      throw ParseError(vars->line, vars->column, "variable count or name list", render(*vars));
    }
    const int n = static_cast<int>(names.size());
    std::vector<mono::Exponents> exps;
    if (gens) {
      if (gens->kind != Value::Kind::list) throw ParseError(gens->line, gens->column, "list of monomials", render(*gens));
      for (const auto& item : gens->items) {
        mono::Exponents ex(static_cast<std::size_t>(n), 0);
        if (item.kind == Value::Kind::integer && item.integer == 1) {
          exps.push_back(ex);
          continue;
        }
        if (item.kind != Value::Kind::monomial) throw ParseError(item.line, item.column, "monomial", render(item));
        for (const auto& f : item.factors) {
          auto it = std::find(names.begin(), names.end(), f.name);
          if (it == names.end())
            throw ParseError(item.line, item.column, "declared variable", "'" + f.name + "'");
          ex[static_cast<std::size_t>(it - names.begin())] += f.exponent;
        }
        exps.push_back(ex);
      }
    }
    const int d = detail::keyed_int(e, "d", 6, sig);
    return {nullptr, mono::make_comm_monomial(n, std::move(exps), std::move(names), d), std::nullopt};
  }
  if (e.ctor == "an") {
    const std::string sig = "an(n=k, m=j, d=k)";
    detail::only_keys(e, {"n", "m", "d"}, sig);
    if (!p.empty() || !e.find("n")) detail::arity(e, sig);
    const int n = detail::keyed_int(e, "n", 0, sig);
    return {nullptr, std::nullopt, mono::an_build(n, detail::keyed_int(e, "d", 0, sig), detail::keyed_int(e, "m", -1, sig))};
  }
  throw ParseError(e.line, e.column, "constructor (zmod, gf, mat, tri, prod, quot, mono, an)", "'" + e.ctor + "'");
}

inline Evaluated evaluate(const std::string& text, int cap = kDefaultOrderCap) {
  return evaluate(parse_ring_expr(text), cap);
}

}  // namespace locprime::dsl
