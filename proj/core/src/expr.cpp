#include "gwa/expr.hpp"

#include <cctype>
#include <sstream>

namespace gwa {

namespace {

enum class Tok { Number, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  mpz_class number;
  char var = 0;
  int line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n')) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    tok_.line = line_;
    tok_.column = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        digits += src_[pos_++];
        ++col_;
      }
      tok_.kind = Tok::Number;
      tok_.number = mpz_class(digits, 10);  // base 10; "08" is not octal
      return;
    }
    ++pos_;
    ++col_;
    switch (c) {
      case 'h': case 'x': case 'y': case 'q':
        tok_.kind = Tok::Var;
        tok_.var = c;
        return;
      case '+': tok_.kind = Tok::Plus; return;
      case '-': tok_.kind = Tok::Minus; return;
      case '*': tok_.kind = Tok::Star; return;
      case '/': tok_.kind = Tok::Slash; return;
      case '^': tok_.kind = Tok::Caret; return;
      case '(': tok_.kind = Tok::LParen; return;
      case ')': tok_.kind = Tok::RParen; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_,
                         col_ - 1);
    }
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& src, FieldMode mode) : lex_(src), mode_(mode) {}

  Expr run() {
    Expr e = expr();
    const Token& t = lex_.peek();
    if (t.kind != Tok::End)
      throw ParseError("unexpected trailing input", t.line, t.column);
    return e;
  }

 private:
  static Expr node(Expr::Kind k, std::vector<Expr> kids) {
    Expr e;
    e.kind = k;
    e.kids = std::move(kids);
    return e;
  }

  Expr expr() {
    Expr first;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      first = node(Expr::Kind::Neg, {term()});
    } else {
      first = term();
    }
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      const Tok op = lex_.take().kind;
      Expr rhs = term();
      first = node(op == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub,
                   {std::move(first), std::move(rhs)});
    }
    return first;
  }

  bool starts_factor(Tok k) const {
    return k == Tok::Number || k == Tok::Var || k == Tok::LParen;
  }

  Expr term() {
    Expr acc = factor();
    for (;;) {
      const Tok k = lex_.peek().kind;
      if (k == Tok::Star || k == Tok::Slash) {
        const Tok op = lex_.take().kind;
        Expr rhs = factor();
        acc = node(op == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div,
                   {std::move(acc), std::move(rhs)});
      } else if (starts_factor(k)) {  // juxtaposition multiplies
        Expr rhs = factor();
        acc = node(Expr::Kind::Mul, {std::move(acc), std::move(rhs)});
      } else {
        break;
      }
    }
    return acc;
  }

  Expr factor() {
    Expr base = atom();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      const Token& t = lex_.peek();
      if (t.kind != Tok::Number)
        throw ParseError("exponent must be a nonnegative integer", t.line,
                         t.column);
      const Token e = lex_.take();
      Expr p;
      p.kind = Expr::Kind::Pow;
      p.exponent = static_cast<unsigned>(e.number.get_ui());
      if (e.number > 1000000)
        throw ParseError("exponent too large", e.line, e.column);
      p.kids.push_back(std::move(base));
      return p;
    }
    return base;
  }

  Expr atom() {
    const Token t = lex_.take();
    switch (t.kind) {
      case Tok::Number: {
        Expr e;
        e.kind = Expr::Kind::Number;
        e.number = mpq_class(t.number);
        return e;
      }
      case Tok::Var: {
        if (t.var == 'q' && mode_ == FieldMode::Rational)
          throw ParseError("'q' is only available in generic mode", t.line,
                           t.column);
        Expr e;
        e.kind = Expr::Kind::Var;
        e.var = t.var;
        return e;
      }
      case Tok::LParen: {
        Expr e = expr();
        const Token& r = lex_.peek();
        if (r.kind != Tok::RParen)
          throw ParseError("expected ')'", r.line, r.column);
        lex_.take();
        return e;
      }
      default:
        throw ParseError("expected a value", t.line, t.column);
    }
  }

  Lexer lex_;
  FieldMode mode_;
};

}  // namespace

Expr parse(const std::string& source, FieldMode mode) {
  return Parser(source, mode).run();
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

Element eval_impl(const Expr& e, const Presentation& pres) {
  const FieldMode m = pres.mode;
  switch (e.kind) {
    case Expr::Kind::Number:
      return Element::from_poly(Poly::constant(
          m == FieldMode::Rational
              ? Scalar::rational(e.number)
              : Scalar::fraction(QPoly(e.number), QPoly(mpq_class(1)))));
    case Expr::Kind::Var:
      switch (e.var) {
        case 'h': return Element::h(m);
        case 'x': return Element::x(m);
        case 'y': return Element::y(m);
        default: return Element::from_poly(Poly::constant(Scalar::q()));
      }
    case Expr::Kind::Add:
      return add(eval_impl(e.kids[0], pres), eval_impl(e.kids[1], pres));
    case Expr::Kind::Sub:
      return sub(eval_impl(e.kids[0], pres), eval_impl(e.kids[1], pres));
    case Expr::Kind::Mul:
      return mul(eval_impl(e.kids[0], pres), eval_impl(e.kids[1], pres), pres);
    case Expr::Kind::Div: {
      const Element den = eval_impl(e.kids[1], pres);
      // division is only defined by nonzero scalars
      if (den.is_zero()) throw ArithmeticError("division by zero");
      const Poly p = den.component(0);
      if (den.components().size() != 1 ||
          den.components().begin()->first != 0 || !p.is_constant())
        throw ArithmeticError("division is only defined by scalars");
      const Scalar inv = p.coeff(0).inverse();
      Element num = eval_impl(e.kids[0], pres);
      Element r(m);
      for (const auto& [d, c] : num.components())
        r = add(r, Element::monomial(d, c.scaled(inv)));
      return r;
    }
    case Expr::Kind::Neg:
      return neg(eval_impl(e.kids[0], pres));
    case Expr::Kind::Pow:
      return pow(eval_impl(e.kids[0], pres), e.exponent, pres);
  }
  throw ArithmeticError("unreachable expression kind");
}

void reject_vars(const Expr& e, const char* allowed) {
  if (e.kind == Expr::Kind::Var &&
      std::string(allowed).find(e.var) == std::string::npos)
    throw ArithmeticError(std::string("generator '") + e.var +
                          "' is not allowed in this context");
  for (const auto& k : e.kids) reject_vars(k, allowed);
}

}  // namespace

Element eval_to_normal_form(const Expr& e, const Presentation& pres) {
  return eval_impl(e, pres);
}

Poly eval_to_poly(const Expr& e, FieldMode mode) {
  reject_vars(e, "hq");
  const Presentation scratch(AffineAuto::identity(mode), Poly(mode));
  const Element u = eval_impl(e, scratch);
  if (u.is_zero()) return Poly(mode);
  if (u.components().size() != 1 || u.components().begin()->first != 0)
    throw ArithmeticError("expected a polynomial in h only");
  return u.component(0);
}

Scalar eval_to_scalar(const Expr& e, FieldMode mode) {
  const Poly p = eval_to_poly(e, mode);
  if (!p.is_constant()) throw ArithmeticError("expected a scalar");
  return p.coeff(0);
}

Element parse_element(const std::string& source, const Presentation& pres) {
  return eval_to_normal_form(parse(source, pres.mode), pres);
}

Poly parse_poly(const std::string& source, FieldMode mode) {
  return eval_to_poly(parse(source, mode), mode);
}

Scalar parse_scalar(const std::string& source, FieldMode mode) {
  return eval_to_scalar(parse(source, mode), mode);
}

// ---------------------------------------------------------------------------
// Printing and JSON

namespace {

// A polynomial coefficient needs parentheses as a factor of a basis word
// unless it is a single printable term.
bool poly_needs_parens(const Poly& p) {
  int terms = 0;
  for (int i = 0; i <= p.degree(); ++i)
    if (!p.coeff(i).is_zero()) ++terms;
  return terms > 1;
}

std::string word_str(int d) {
  if (d == 0) return "";
  std::string s = d > 0 ? "y" : "x";
  const int m = d > 0 ? d : -d;
  if (m > 1) s += "^" + std::to_string(m);
  return s;
}

}  // namespace

std::string element_str(const Element& u) {
  if (u.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // highest y-degree first, then the diagonal part, then x-words
  for (auto it = u.components().rbegin(); it != u.components().rend(); ++it) {
    const auto& [d, p] = *it;
    std::string body;
    char sign = '+';
    if (d == 0) {
      body = p.str();
      if (!body.empty() && body[0] == '-') {
        sign = '-';
        body = body.substr(1);
      }
    } else if (poly_needs_parens(p)) {
      body = "(" + p.str() + ")*" + word_str(d);
    } else {
      const Poly one = Poly::constant(Scalar::one(u.mode()));
      if (p == one) {
        body = word_str(d);
      } else if (p == -one) {
        sign = '-';
        body = word_str(d);
      } else {
        body = p.str();
        if (!body.empty() && body[0] == '-') {
          sign = '-';
          body = body.substr(1);
        }
        body += "*" + word_str(d);
      }
    }
    if (first) {
      if (sign == '-') out << "-";
      first = false;
    } else {
      out << " " << sign << " ";
    }
    out << body;
  }
  return out.str();
}

nlohmann::ordered_json element_to_json(const Element& u) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [d, p] : u.components()) j[std::to_string(d)] = p.str();
  return j;
}

Element element_from_json(const nlohmann::json& j, const Presentation& pres) {
  Element u(pres.mode);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const int d = std::stoi(it.key());
    u = add(u, Element::monomial(d, parse_poly(it.value().get<std::string>(),
                                               pres.mode)));
  }
  return u;
}

nlohmann::ordered_json poly_to_json(const Poly& p) {
  auto arr = nlohmann::ordered_json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).str());
  return arr;
}

Poly poly_from_json(const nlohmann::json& j, FieldMode mode) {
  std::vector<Scalar> coeffs;
  coeffs.reserve(j.size());
  for (const auto& entry : j)
    coeffs.push_back(parse_scalar(entry.get<std::string>(), mode));
  return Poly(mode, std::move(coeffs));
}

nlohmann::ordered_json presentation_to_json(const Presentation& pres) {
  nlohmann::ordered_json j;
  j["mode"] = field_mode_name(pres.mode);
  j["q"] = pres.sigma.q.str();
  j["h0"] = pres.sigma.h0.str();
  j["poly"] = pres.a.str();
  return j;
}

Presentation presentation_from_json(const nlohmann::json& j) {
  const std::string mode_name = j.at("mode").get<std::string>();
  FieldMode mode;
  if (mode_name == "rational") {
    mode = FieldMode::Rational;
  } else if (mode_name == "generic") {
    mode = FieldMode::Generic;
  } else {
    throw ArithmeticError("unknown field mode: " + mode_name);
  }
  const Scalar q = parse_scalar(j.at("q").get<std::string>(), mode);
  const Scalar h0 = parse_scalar(j.at("h0").get<std::string>(), mode);
  const Poly a = parse_poly(j.at("poly").get<std::string>(), mode);
  return Presentation(AffineAuto(q, h0), a);
}

}  // namespace gwa
