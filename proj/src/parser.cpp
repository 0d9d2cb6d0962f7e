#include "excalc/parser.hpp"

#include <cctype>
#include <memory>
#include <utility>

namespace excalc {

std::vector<GaussRat> SessionConfig::resolved_base() const {
  if (dim < 1) throw DomainError("dimension must be at least 1");
  if (base.empty()) return std::vector<GaussRat>(dim, GaussRat(0));
  if (static_cast<int>(base.size()) != dim)
    throw DomainError("base point needs " + std::to_string(dim) + " entries, got " +
                      std::to_string(base.size()));
  if (mode == Mode::Real) {
    for (const auto& b : base) {
      if (!b.is_real()) throw DomainError("real-mode base point must have real entries");
    }
  }
  return base;
}

namespace {

//------------------------------------------------------------------------------
// Lexer
//------------------------------------------------------------------------------

struct Token {
  enum class Kind { Num, Imag, Var, Diff, Plus, Minus, Star, Wedge, Caret, LParen, RParen, End };
  Kind kind = Kind::End;
  std::size_t pos = 0;  // 1-based
  Rat value;            // Num
  char family = 0;      // Var/Diff: 'x','y','z','Z' (Z = zb)
  int index = 0;        // 1-based coordinate index
  bool integral = true; // Num: literal had no '/'
};

Token tok(Token::Kind kind, std::size_t pos) {
  Token t;
  t.kind = kind;
  t.pos = pos;
  return t;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (at_end()) {
        out.push_back(tok(Token::Kind::End, pos() + 1));
        return out;
      }
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(number());
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        out.push_back(identifier());
      } else {
        out.push_back(symbol());
      }
    }
  }

 private:
  std::string_view text_;
  std::size_t i_ = 0;

  bool at_end() const { return i_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0';
  }
  std::size_t pos() const { return i_; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
  }

  // accumulate digit by digit; Int's string constructor would read a
  // leading zero as an octal prefix
  Int digits() {
    Int v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[i_++] - '0');
    }
    return v;
  }

  Token number() {
    Token t = tok(Token::Kind::Num, pos() + 1);
    Int num = digits();
    // "3/4" is one rational token; "3/\dx1" leaves the wedge alone
    if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      ++i_;
      const std::size_t den_pos = pos() + 1;
      Int den = digits();
      if (den == 0) throw ParseError("zero denominator", den_pos);
      t.value = Rat(num, den);
      t.integral = false;
    } else {
      t.value = Rat(num);
    }
    return t;
  }

  Token identifier() {
    const std::size_t start = pos() + 1;
    std::string word;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) word.push_back(text_[i_++]);
    std::string idx;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) idx.push_back(text_[i_++]);
    if (word == "i" && idx.empty()) return tok(Token::Kind::Imag, start);

    bool diff = false;
    std::string family = word;
    if (family.size() > 1 && family[0] == 'd') {
      diff = true;
      family.erase(0, 1);
    }
    char code = 0;
    if (family == "x") code = 'x';
    else if (family == "y") code = 'y';
    else if (family == "z") code = 'z';
    else if (family == "zb") code = 'Z';
    if (code == 0) throw ParseError("unknown identifier '" + word + idx + "'", start);
    if (idx.empty()) throw ParseError("coordinate '" + word + "' needs an index", start);
    if (idx.size() > 6) throw ParseError("coordinate index too large", start);
    Token t = tok(diff ? Token::Kind::Diff : Token::Kind::Var, start);
    t.family = code;
    t.index = std::stoi(idx);
    if (t.index < 1) throw ParseError("coordinate index must be >= 1", start);
    return t;
  }

  Token symbol() {
    const std::size_t start = pos() + 1;
    const char c = text_[i_++];
    switch (c) {
      case '+': return tok(Token::Kind::Plus, start);
      case '-': return tok(Token::Kind::Minus, start);
      case '*': return tok(Token::Kind::Star, start);
      case '^': return tok(Token::Kind::Caret, start);
      case '(': return tok(Token::Kind::LParen, start);
      case ')': return tok(Token::Kind::RParen, start);
      case '/':
        if (peek() == '\\') {
          ++i_;
          return tok(Token::Kind::Wedge, start);
        }
        throw ParseError("expected '\\' after '/' (wedge is spelled '/\\')", start);
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
};

//------------------------------------------------------------------------------
// AST
//------------------------------------------------------------------------------

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind { Rational, Imag, Var, Diff, Neg, Pow, Product, Sum };
  Kind kind;
  std::size_t pos = 0;
  Rat value;        // Rational
  char family = 0;  // Var/Diff
  int index = 0;
  int exponent = 0;  // Pow
  std::vector<ExprPtr> kids;
  std::vector<char> ops;  // Sum: sign per kid
};

ExprPtr make(Expr::Kind kind, std::size_t pos) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->pos = pos;
  return e;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr run() {
    ExprPtr e = sum();
    expect(Token::Kind::End, "expected end of input");
    return e;
  }

 private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;

  const Token& cur() const { return toks_[at_]; }
  bool accept(Token::Kind k) {
    if (cur().kind != k) return false;
    ++at_;
    return true;
  }
  void expect(Token::Kind k, const std::string& what) {
    if (!accept(k)) throw ParseError(what, cur().pos);
  }

  ExprPtr sum() {
    auto node = make(Expr::Kind::Sum, cur().pos);
    char sign = '+';
    if (accept(Token::Kind::Minus)) sign = '-';
    node->kids.push_back(term());
    node->ops.push_back(sign);
    for (;;) {
      if (accept(Token::Kind::Plus)) sign = '+';
      else if (accept(Token::Kind::Minus)) sign = '-';
      else break;
      node->kids.push_back(term());
      node->ops.push_back(sign);
    }
    return node;
  }

  ExprPtr term() {
    auto node = make(Expr::Kind::Product, cur().pos);
    node->kids.push_back(factor());
    while (accept(Token::Kind::Star) || accept(Token::Kind::Wedge)) node->kids.push_back(factor());
    return node;
  }

  ExprPtr factor() {
    ExprPtr base = primary();
    while (cur().kind == Token::Kind::Caret) {
      const std::size_t caret = cur().pos;
      ++at_;
      if (cur().kind != Token::Kind::Num || !cur().integral)
        throw ParseError("exponent must be a natural number", cur().pos);
      auto node = make(Expr::Kind::Pow, caret);
      node->exponent = cur().value.convert_to<int>();
      ++at_;
      node->kids.push_back(std::move(base));
      base = std::move(node);
    }
    return base;
  }

  ExprPtr primary() {
    const Token& t = cur();
    switch (t.kind) {
      case Token::Kind::Num: {
        auto node = make(Expr::Kind::Rational, t.pos);
        node->value = t.value;
        ++at_;
        return node;
      }
      case Token::Kind::Imag: {
        ++at_;
        return make(Expr::Kind::Imag, t.pos);
      }
      case Token::Kind::Var:
      case Token::Kind::Diff: {
        auto node = make(t.kind == Token::Kind::Var ? Expr::Kind::Var : Expr::Kind::Diff, t.pos);
        node->family = t.family;
        node->index = t.index;
        ++at_;
        return node;
      }
      case Token::Kind::LParen: {
        ++at_;
        ExprPtr inner = sum();
        expect(Token::Kind::RParen, "expected ')'");
        return inner;
      }
      case Token::Kind::Minus: throw ParseError("unexpected '-' (negate whole terms)", t.pos);
      default: throw ParseError("expected a value", t.pos);
    }
  }
};

//------------------------------------------------------------------------------
// Evaluation
//------------------------------------------------------------------------------

struct EvalContext {
  Mode mode;
  int dim;
  std::vector<GaussRat> base;
};

Label resolve_slot(const Expr& e, const EvalContext& ctx) {
  const bool real_family = e.family == 'x' || e.family == 'y';
  if (ctx.mode == Mode::Real && !real_family)
    throw ParseError("complex coordinate in a real-mode session", e.pos);
  if (ctx.mode == Mode::Complex && real_family)
    throw ParseError("real coordinate in a complex-mode session", e.pos);
  Label slot = 0;
  switch (e.family) {
    case 'x': slot = e.index - 1; break;
    case 'y': slot = 2 * e.index - 1; break;  // y_j aliases the 2j-th real slot
    case 'z': slot = e.index - 1; break;
    case 'Z': slot = ctx.dim + e.index - 1; break;
  }
  const int limit = slot_count(ctx.mode, ctx.dim);
  if (slot < 0 || slot >= limit ||
      (ctx.mode == Mode::Complex && e.family == 'z' && e.index > ctx.dim))
    throw ParseError("coordinate index exceeds dimension " + std::to_string(ctx.dim), e.pos);
  return slot;
}

GaussRat base_value(Label slot, const EvalContext& ctx) {
  if (ctx.mode == Mode::Real) return ctx.base[slot];
  return slot < ctx.dim ? ctx.base[slot] : ctx.base[slot - ctx.dim].conj();
}

Form eval_expr(const Expr& e, const EvalContext& ctx) {
  switch (e.kind) {
    case Expr::Kind::Rational: {
      Form f = Form::zero(ctx.mode, ctx.dim, ctx.base, 0);
      f.add_term(BasisTerm{}, Poly::constant(ctx.mode, ctx.dim, GaussRat(e.value)));
      return f;
    }
    case Expr::Kind::Imag: {
      Form f = Form::zero(ctx.mode, ctx.dim, ctx.base, 0);
      f.add_term(BasisTerm{}, Poly::constant(ctx.mode, ctx.dim, GaussRat::unit_i()));
      return f;
    }
    case Expr::Kind::Var: {
      const Label slot = resolve_slot(e, ctx);
      // standard coordinate = shifted variable + base value
      Poly p = Poly::variable(ctx.mode, ctx.dim, slot);
      p += Poly::constant(ctx.mode, ctx.dim, base_value(slot, ctx));
      Form f = Form::zero(ctx.mode, ctx.dim, ctx.base, 0);
      f.add_term(BasisTerm{}, p);
      return f;
    }
    case Expr::Kind::Diff: {
      const Label slot = resolve_slot(e, ctx);
      Form f = Form::zero(ctx.mode, ctx.dim, ctx.base, 1);
      f.add_term(BasisTerm({slot}), Poly::constant(ctx.mode, ctx.dim, GaussRat(1)));
      return f;
    }
    case Expr::Kind::Neg: return -eval_expr(*e.kids[0], ctx);
    case Expr::Kind::Pow: {
      Form base = eval_expr(*e.kids[0], ctx);
      if (base.degree() > 0 && !base.is_zero())
        throw ParseError("'^' applies to scalar factors only", e.pos);
      if (e.exponent == 0) {
        Form one = Form::zero(ctx.mode, ctx.dim, ctx.base, 0);
        one.add_term(BasisTerm{}, Poly::constant(ctx.mode, ctx.dim, GaussRat(1)));
        return one;
      }
      Form acc = base;
      for (int k = 1; k < e.exponent; ++k) acc = wedge(acc, base);
      return acc;
    }
    case Expr::Kind::Product: {
      Form acc = eval_expr(*e.kids[0], ctx);
      for (std::size_t k = 1; k < e.kids.size(); ++k) acc = wedge(acc, eval_expr(*e.kids[k], ctx));
      return acc;
    }
    case Expr::Kind::Sum: {
      Form acc = Form::zero(ctx.mode, ctx.dim, ctx.base, 0);
      bool have_degree = false;
      int degree = 0;
      for (std::size_t k = 0; k < e.kids.size(); ++k) {
        Form part = eval_expr(*e.kids[k], ctx);
        if (e.ops[k] == '-') part = -part;
        if (!part.is_zero()) {
          if (have_degree && part.degree() != degree)
            throw ParseError("mixed degrees " + std::to_string(degree) + " and " +
                                 std::to_string(part.degree()) + " in one sum",
                             e.kids[k]->pos);
          if (!have_degree) {
            have_degree = true;
            degree = part.degree();
            acc = Form::zero(ctx.mode, ctx.dim, ctx.base, degree);
          }
        }
        acc = acc + part;
      }
      return acc;
    }
  }
  throw Error("unreachable expression kind");
}

}  // namespace

Form parse_form(std::string_view text, const SessionConfig& cfg) {
  EvalContext ctx{cfg.mode, cfg.dim, cfg.resolved_base()};
  Lexer lexer(text);
  Parser parser(lexer.run());
  ExprPtr root = parser.run();
  return eval_expr(*root, ctx);
}

//------------------------------------------------------------------------------
// Scalar / point parsing ("--base", "--at")
//------------------------------------------------------------------------------

namespace {

struct ScalarScanner {
  std::string_view s;
  std::size_t i = 0;

  void skip_space() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool at_end() {
    skip_space();
    return i >= s.size();
  }
  char peek() {
    skip_space();
    return i < s.size() ? s[i] : '\0';
  }

  Rat number() {
    skip_space();
    bool any = false;
    Int num = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      num = num * 10 + (s[i++] - '0');
      any = true;
    }
    if (!any) throw ParseError("expected a number", i + 1);
    if (i < s.size() && s[i] == '/') {
      ++i;
      bool any_den = false;
      Int den = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        den = den * 10 + (s[i++] - '0');
        any_den = true;
      }
      if (!any_den) throw ParseError("expected a denominator", i + 1);
      if (den == 0) throw ParseError("zero denominator", i + 1);
      return Rat(num, den);
    }
    return Rat(num);
  }

  // [sign] (num ['*']['i'] | 'i')
  std::pair<Rat, bool> part() {  // (value, is_imaginary)
    Rat sign(1);
    if (peek() == '+') {
      ++i;
    } else if (peek() == '-') {
      ++i;
      sign = -1;
    }
    if (peek() == 'i') {
      ++i;
      return {sign, true};
    }
    Rat v = sign * number();
    if (peek() == '*') {
      ++i;
      if (peek() != 'i') throw ParseError("expected 'i'", i + 1);
      ++i;
      return {v, true};
    }
    if (peek() == 'i') {
      ++i;
      return {v, true};
    }
    return {v, false};
  }
};

}  // namespace

GaussRat parse_scalar(std::string_view text) {
  ScalarScanner sc{text};
  GaussRat out;
  bool seen_re = false, seen_im = false;
  auto take = [&](std::pair<Rat, bool> p) {
    if (p.second) {
      if (seen_im) throw ParseError("duplicate imaginary part", sc.i + 1);
      out.im = p.first;
      seen_im = true;
    } else {
      if (seen_re) throw ParseError("duplicate real part", sc.i + 1);
      out.re = p.first;
      seen_re = true;
    }
  };
  take(sc.part());
  if (!sc.at_end()) take(sc.part());
  if (!sc.at_end()) throw ParseError("trailing characters in scalar", sc.i + 1);
  return out;
}

std::vector<GaussRat> parse_point(std::string_view csv, Mode mode, int dim) {
  std::vector<GaussRat> entries;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string_view::npos) comma = csv.size();
    entries.push_back(parse_scalar(csv.substr(start, comma - start)));
    start = comma + 1;
  }
  if (mode == Mode::Real) {
    if (static_cast<int>(entries.size()) != dim)
      throw DomainError("expected " + std::to_string(dim) + " point entries, got " +
                        std::to_string(entries.size()));
    for (const auto& e : entries) {
      if (!e.is_real()) throw DomainError("real-mode point entries must be real");
    }
    return entries;
  }
  if (static_cast<int>(entries.size()) == dim) return entries;
  if (static_cast<int>(entries.size()) == 2 * dim) {
    bool all_real = true;
    for (const auto& e : entries) all_real = all_real && e.is_real();
    if (all_real) {
      std::vector<GaussRat> folded;
      folded.reserve(dim);
      for (int mu = 0; mu < dim; ++mu)
        folded.emplace_back(entries[2 * mu].re, entries[2 * mu + 1].re);
      return folded;
    }
  }
  throw DomainError("expected " + std::to_string(dim) + " complex entries (or " +
                    std::to_string(2 * dim) + " real re,im pairs), got " +
                    std::to_string(entries.size()));
}

}  // namespace excalc
