#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gwa/algebra.hpp"

namespace gwa {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Abstract syntax tree over atoms {h, x, y, rational literals, q} and the
/// operators +, -, * (also by juxtaposition), / (by a scalar), and ^ with
/// nonnegative integer exponents.
struct Expr {
  enum class Kind { Number, Var, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Number;
  mpq_class number;          // Kind::Number
  char var = 0;              // Kind::Var: 'h', 'x', 'y' or 'q'
  unsigned exponent = 0;     // Kind::Pow
  std::vector<Expr> kids;
};

/// Parses the expression grammar; 'q' is only admitted in generic mode.
/// Errors carry a line and column.
Expr parse(const std::string& source, FieldMode mode);

/// Folds an AST through the normal-form operations of the presentation.
Element eval_to_normal_form(const Expr& e, const Presentation& pres);
/// Evaluates an AST that may only mention h, q and literals.
Poly eval_to_poly(const Expr& e, FieldMode mode);
/// Evaluates an AST that may only mention q and literals.
Scalar eval_to_scalar(const Expr& e, FieldMode mode);

Element parse_element(const std::string& source, const Presentation& pres);
Poly parse_poly(const std::string& source, FieldMode mode);
Scalar parse_scalar(const std::string& source, FieldMode mode);

/// Display form, e.g. "(h + 1)*y^2 + h + (h - 1)*x". Re-parses to the same
/// normal form.
std::string element_str(const Element& u);

/// JSON forms: elements as {"degree": "poly"} maps; polynomials as arrays of
/// scalar strings indexed by degree; presentations as {"mode","q","h0","poly"}.
nlohmann::ordered_json element_to_json(const Element& u);
Element element_from_json(const nlohmann::json& j, const Presentation& pres);
nlohmann::ordered_json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j, FieldMode mode);
nlohmann::ordered_json presentation_to_json(const Presentation& pres);
Presentation presentation_from_json(const nlohmann::json& j);

}  // namespace gwa
