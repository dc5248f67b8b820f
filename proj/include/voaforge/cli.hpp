#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "voaforge/lie.hpp"
#include "voaforge/mode.hpp"

namespace voaforge {
namespace cli {

struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at column " + std::to_string(pos + 1)),
        position(pos) {}
  std::size_t position;
};
struct UnknownSymbolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// ----- Expression AST ------------------------------------------------------

struct ExprAST;

struct Factor {
  enum class Kind { ModeSym, Bracket, Ground, Paren };
  Kind kind = Kind::ModeSym;
  std::string sym;                 // ModeSym: generator symbol
  std::vector<std::string> args;   // ModeSym: raw bracket arguments
  std::shared_ptr<ExprAST> lhs, rhs;  // Bracket operands
  std::string label;               // Ground: |label>
  std::shared_ptr<ExprAST> inner;  // Paren
  bool operator==(const Factor& o) const;
};

struct ExprTerm {
  Rational coeff = Rational(1);
  std::vector<Factor> factors;
  bool operator==(const ExprTerm& o) const = default;
};

struct ExprAST {
  std::vector<ExprTerm> terms;
  bool operator==(const ExprAST& o) const = default;
};

ExprAST parse_expr(const std::string& text);
std::string print_expr(const ExprAST& ast);

/// Evaluation context: a mode engine plus (optionally) the Lie algebra whose
/// basis names resolve J[name, n] symbols.
struct EvalContext {
  const ModeEngine* eng = nullptr;
  const LieAlgebra* alg = nullptr;
};

/// Evaluate an expression that ends in a ground vector to a State.
State eval_expr(const EvalContext& ctx, const ExprAST& ast);

/// ----- Session configuration and reports -----------------------------------

struct SessionConfig {
  std::string command;
  std::string format = "text";   // text | json
  std::string system;            // betagamma | ghost | cdo
  std::string algebra;           // registry name
  std::string algebra_json;      // inline custom-algebra JSON
  std::string module = "spinor"; // character: spinor | tensor
  std::string twist = "zero";    // twist/check-morphism: zero | beta
  std::string expr;
  std::string level;             // rational "p/q" (lambda_0 units / abelian identity)
  int d = 1;
  int dprime = 1;
  int wmax = 2;
  int degree = 3;
  int modes = 2;
  std::size_t budget = 5000;
  unsigned seed = 0;
};

/// Merge a JSON config file into cfg (file values fill fields the flags did
/// not set; the caller applies flag overrides after).
void load_config_file(SessionConfig& cfg, const std::string& path);

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;  // witnesses, measured values; rationals as "p/q"
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  bool pass() const;
};

Report run_command(const SessionConfig& cfg);
std::string emit_report(const Report& r, const std::string& format);

/// Exit status: 0 all checks pass, 1 check failure.
int exit_code(const Report& r);

}  // namespace cli
}  // namespace voaforge
