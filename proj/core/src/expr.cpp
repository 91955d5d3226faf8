#include "symcalc/expr.hpp"

#include <cctype>

#include "symcalc/errors.hpp"

namespace symcalc {

namespace {

constexpr int kMaxExponent = 4096;
constexpr int kMaxNesting = 200;

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Slash, End };

struct Token {
  Tok kind;
  std::string text;
  Rational value;
  SourceLocation loc;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token tok{Tok::End, "", Rational(0), here()};
    if (pos_ >= src_.size()) return tok;
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number(tok);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        tok.text += advance();
      tok.kind = Tok::Ident;
      return tok;
    }
    tok.text = std::string(1, advance());
    switch (c) {
      case '+': tok.kind = Tok::Plus; break;
      case '-': tok.kind = Tok::Minus; break;
      case '*': tok.kind = Tok::Star; break;
      case '^': tok.kind = Tok::Caret; break;
      case '(': tok.kind = Tok::LParen; break;
      case ')': tok.kind = Tok::RParen; break;
      case '/': tok.kind = Tok::Slash; break;
      default:
        throw ParseError("unexpected character '" + tok.text + "'", tok.loc.line, tok.loc.column);
    }
    return tok;
  }

 private:
  SourceLocation here() const { return {line_, column_}; }

  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  std::string digits() {
    std::string s;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) s += advance();
    return s;
  }

  Token number(Token tok) {
    tok.kind = Tok::Number;
    tok.text = digits();
    Integer num(tok.text, 10);
    Integer den(1);
    // A '/' directly followed by an integer continues the literal.
    const std::size_t save_pos = pos_;
    const std::size_t save_line = line_;
    const std::size_t save_col = column_;
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == '/') {
      advance();
      skip_space();
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        const SourceLocation den_loc = here();
        const std::string d = digits();
        den = Integer(d, 10);
        if (den == 0) throw ParseError("zero denominator in rational literal", den_loc.line, den_loc.column);
        tok.text += "/" + d;
      } else {
        pos_ = save_pos;
        line_ = save_line;
        column_ = save_col;
      }
    } else {
      pos_ = save_pos;
      line_ = save_line;
      column_ = save_col;
    }
    tok.value = Rational(num, den);
    tok.value.canonicalize();
    return tok;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view src, const ExprConfig& config) : lexer_(src), config_(config) {
    cur_ = lexer_.next();
  }

  ExprPtr parse() {
    ExprPtr e = expr();
    if (cur_.kind == Tok::RParen) fail("unbalanced parentheses: unexpected ')'", cur_.loc);
    if (cur_.kind != Tok::End) unexpected();
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, SourceLocation loc) {
    throw ParseError(msg, loc.line, loc.column);
  }

  [[noreturn]] void unexpected() {
    if (cur_.kind == Tok::End) fail("unexpected end of input", cur_.loc);
    if (cur_.kind == Tok::Slash) fail("division is not part of the grammar", cur_.loc);
    fail("unexpected '" + cur_.text + "'", cur_.loc);
  }

  void bump() { cur_ = lexer_.next(); }

  static ExprPtr make(decltype(Expr::node) node, SourceLocation loc) {
    return std::make_shared<const Expr>(Expr{std::move(node), loc});
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxNesting) p_.fail("expression nested too deeply", p_.cur_.loc);
    }
    ~DepthGuard() { --p_.depth_; }
    Parser& p_;
  };

  ExprPtr expr() {
    DepthGuard guard(*this);
    ExprPtr lhs = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const char op = cur_.kind == Tok::Plus ? '+' : '-';
      const SourceLocation loc = cur_.loc;
      bump();
      lhs = make(Binary{op, lhs, term()}, loc);
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (cur_.kind == Tok::Star) {
      const SourceLocation loc = cur_.loc;
      bump();
      lhs = make(Binary{'*', lhs, unary()}, loc);
    }
    if (cur_.kind == Tok::Slash) fail("division is not part of the grammar", cur_.loc);
    if (cur_.kind == Tok::Number || cur_.kind == Tok::Ident || cur_.kind == Tok::LParen)
      fail("missing '*': implicit multiplication is not allowed", cur_.loc);
    return lhs;
  }

  ExprPtr unary() {
    DepthGuard guard(*this);
    if (cur_.kind == Tok::Minus) {
      const SourceLocation loc = cur_.loc;
      bump();
      return make(Negate{unary()}, loc);
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (cur_.kind != Tok::Caret) return base;
    const SourceLocation caret = cur_.loc;
    bump();
    bool paren = false;
    if (cur_.kind == Tok::LParen) {
      paren = true;
      bump();
    }
    bool negative = false;
    if (cur_.kind == Tok::Minus) {
      negative = true;
      bump();
    }
    if (cur_.kind != Tok::Number || cur_.text.find('/') != std::string::npos)
      fail("malformed exponent: expected an integer", cur_.loc);
    if (cur_.value > kMaxExponent) fail("malformed exponent: exponent too large", cur_.loc);
    int exponent = static_cast<int>(cur_.value.get_num().get_si());
    bump();
    if (paren) {
      if (cur_.kind != Tok::RParen) fail("unbalanced parentheses: missing ')' in exponent", cur_.loc);
      bump();
    }
    if (negative) {
      const auto* var = std::get_if<Variable>(&base->node);
      if (var == nullptr || var->kind != VarKind::Hbar)
        fail("malformed exponent: negative exponents are only allowed on h", caret);
      exponent = -exponent;
    }
    if (cur_.kind == Tok::Caret) fail("malformed exponent: chained '^' is ambiguous", cur_.loc);
    return make(Power{base, exponent}, caret);
  }

  ExprPtr primary() {
    const Token tok = cur_;
    switch (tok.kind) {
      case Tok::Number:
        bump();
        return make(NumberLit{tok.value}, tok.loc);
      case Tok::Ident:
        bump();
        return make(identifier(tok), tok.loc);
      case Tok::LParen: {
        bump();
        ExprPtr inner = expr();
        if (cur_.kind != Tok::RParen) {
          if (cur_.kind == Tok::End) fail("unbalanced parentheses: missing ')'", cur_.loc);
          unexpected();
        }
        bump();
        return inner;
      }
      case Tok::RParen:
        fail("unbalanced parentheses: unexpected ')'", tok.loc);
      default:
        unexpected();
    }
  }

  Variable identifier(const Token& tok) {
    const std::string& s = tok.text;
    if (s == "t") return {VarKind::T, 0, ""};
    if (s == "h") return {VarKind::Hbar, 0, ""};
    if (s == "sinv") return {VarKind::SInv, 0, ""};
    if ((s[0] == 'x' || s[0] == 'u') && s.size() > 1 &&
        s.find_first_not_of("0123456789", 1) == std::string::npos && s[1] != '0') {
      const auto index = s.size() > 6 ? config_.n + 1 : std::stoul(s.substr(1));
      if (index < 1 || index > config_.n)
        fail("unknown identifier '" + s + "' (" + variable_range() + ")", tok.loc);
      return {s[0] == 'x' ? VarKind::X : VarKind::U, index - 1, ""};
    }
    for (const auto& p : config_.parameters)
      if (p == s) return {VarKind::Param, 0, s};
    fail("unknown identifier '" + s + "'", tok.loc);
  }

  std::string variable_range() const {
    if (config_.n == 1) return "variables are x1 and u1";
    const std::string n = std::to_string(config_.n);
    return "variables are x1..x" + n + " and u1..u" + n;
  }

  Lexer lexer_;
  const ExprConfig& config_;
  Token cur_;
  int depth_ = 0;
};

using Key = std::tuple<int, unsigned, unsigned>;

void accumulate(Expansion& e, const Key& k, const XUPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

Expansion multiply(const Expansion& a, const Expansion& b) {
  Expansion r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      accumulate(r,
                 {std::get<0>(ka) + std::get<0>(kb), std::get<1>(ka) + std::get<1>(kb),
                  std::get<2>(ka) + std::get<2>(kb)},
                 ca * cb);
  return r;
}

Expansion expand_node(const Expr& e, std::size_t n) {
  return std::visit(
      [&](const auto& node) -> Expansion {
        using T = std::decay_t<decltype(node)>;
        Expansion r;
        if constexpr (std::is_same_v<T, NumberLit>) {
          accumulate(r, {0, 0, 0}, XUPoly(n, ParamScalar(node.value)));
        } else if constexpr (std::is_same_v<T, Variable>) {
          const XUPoly one(n, ParamScalar(1));
          switch (node.kind) {
            case VarKind::X: accumulate(r, {0, 0, 0}, XUPoly::x(n, node.index)); break;
            case VarKind::U: accumulate(r, {0, 0, 0}, XUPoly::u(n, node.index)); break;
            case VarKind::T: accumulate(r, {0, 1, 0}, one); break;
            case VarKind::SInv: accumulate(r, {0, 0, 1}, one); break;
            case VarKind::Hbar: accumulate(r, {-1, 0, 0}, one); break;
            case VarKind::Param:
              accumulate(r, {0, 0, 0}, XUPoly(n, ParamScalar::parameter(node.name)));
              break;
          }
        } else if constexpr (std::is_same_v<T, Negate>) {
          for (const auto& [k, c] : expand_node(*node.operand, n)) r.emplace(k, -c);
        } else if constexpr (std::is_same_v<T, Binary>) {
          const Expansion a = expand_node(*node.lhs, n);
          const Expansion b = expand_node(*node.rhs, n);
          if (node.op == '*') return multiply(a, b);
          r = a;
          for (const auto& [k, c] : b) accumulate(r, k, node.op == '+' ? c : -c);
        } else if constexpr (std::is_same_v<T, Power>) {
          const auto* var = std::get_if<Variable>(&node.base->node);
          if (var != nullptr && var->kind == VarKind::Hbar) {
            accumulate(r, {-node.exponent, 0, 0}, XUPoly(n, ParamScalar(1)));
            return r;
          }
          const Expansion base = expand_node(*node.base, n);
          accumulate(r, {0, 0, 0}, XUPoly(n, ParamScalar(1)));
          for (int i = 0; i < node.exponent; ++i) r = multiply(r, base);
        }
        return r;
      },
      e.node);
}

std::string describe_key(const Key& k) {
  return "term with t^" + std::to_string(std::get<1>(k)) + " and sinv^" +
         std::to_string(std::get<2>(k));
}

}  // namespace

ExprPtr parse_expr(std::string_view src, const ExprConfig& config) {
  return Parser(src, config).parse();
}

Expansion expand(const Expr& e, std::size_t n) { return expand_node(e, n); }

WSymbol lower_w(const Expr& e, std::size_t n) {
  WSymbol r(n);
  for (const auto& [k, c] : expand(e, n)) {
    if (std::get<1>(k) != 0)
      throw LoweringError("t is not allowed in a W symbol (" + describe_key(k) + ")");
    if (std::get<2>(k) != 0)
      throw LoweringError("sinv is only allowed in SW symbols (" + describe_key(k) + ")");
    r.add_coeff(std::get<0>(k), c);
  }
  return r;
}

SWSymbol lower_sw(const Expr& e, std::size_t n, unsigned depth) {
  SWSymbol r(n, depth);
  for (const auto& [k, c] : expand(e, n)) {
    if (std::get<1>(k) != 0)
      throw LoweringError("t is not allowed in an SW symbol (" + describe_key(k) + ")");
    if (std::get<2>(k) == 0)
      throw LoweringError("every SW term needs a sinv factor; entire functions of s vanish in SW");
    r.add_term(std::get<0>(k), std::get<2>(k) - 1, c);
  }
  return r;
}

TWSymbol lower_tw(const Expr& e, std::size_t n, unsigned max_degree, std::optional<int> order) {
  const Expansion terms = expand(e, n);
  int minimal = std::numeric_limits<int>::min();
  for (const auto& [k, c] : terms) {
    if (std::get<2>(k) != 0)
      throw LoweringError("sinv is only allowed in SW symbols (" + describe_key(k) + ")");
    if (std::get<1>(k) <= max_degree)
      minimal = std::max(minimal, std::get<0>(k) - static_cast<int>(std::get<1>(k)));
  }
  if (minimal == std::numeric_limits<int>::min()) minimal = 0;
  TWSymbol r(n, max_degree, order.value_or(minimal));
  for (const auto& [k, c] : terms) r.add_term(std::get<0>(k), std::get<1>(k), c);
  if (!r.satisfies_filtration())
    throw FiltrationViolation("declared order " + std::to_string(*order) +
                              " is below the least admissible order " + std::to_string(minimal));
  return r;
}

}  // namespace symcalc
