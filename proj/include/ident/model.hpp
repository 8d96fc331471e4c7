#pragma once

#include "ident/poly.hpp"

#include <string>
#include <vector>

namespace ident {

struct StateVar {
  std::string name;
  bool observed = false;
  bool operator==(const StateVar&) const = default;
};

class ModelParseError : public Error {
 public:
  ModelParseError(const std::string& msg, std::size_t line, std::size_t column = 0)
      : Error("line " + std::to_string(line) +
              (column ? ", col " + std::to_string(column) : "") + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// A parsed SDE model: per-state polynomial drift plus either a diffusion
/// matrix g (rows per state) or the squared diffusion G = g*g^T entrywise.
/// All polynomials live over `table` = states followed by parameters.
struct ModelSpec {
  std::string name;
  std::vector<StateVar> states;
  std::vector<std::string> params;
  std::vector<Poly> drift;                      // one per state
  std::vector<std::vector<Poly>> diffusion;     // n_states rows, equal width
  std::vector<std::vector<Poly>> diffusion_sq;  // n_states x n_states, symmetric
  SymbolTablePtr table;        // states ++ params
  SymbolTablePtr param_table;  // params only

  bool has_diffusion_sq() const { return !diffusion_sq.empty(); }
  std::size_t n_states() const { return states.size(); }
  std::size_t n_observed() const;
  std::size_t state_index(std::string_view name) const;

  /// G = g*g^T as polynomials over `table` (returns diffusion_sq directly
  /// when that form was supplied).
  std::vector<std::vector<Poly>> squared_diffusion() const;

  /// Throws Error unless the model fits the moment pipeline: exactly two
  /// states with exactly the first observed.
  void require_two_state_observed_first() const;

  bool operator==(const ModelSpec& rhs) const;
};

struct ParsedModel {
  ModelSpec spec;
  std::vector<std::string> warnings;
};

/// Parses the line-oriented model description language.  Sections: `model`,
/// `states:`, `params:`, `drift:`, and exactly one of `diffusion:` /
/// `diffusion_sq:`.  '#' starts a comment.  Throws ModelParseError with
/// 1-based line (and column for expression errors).
ParsedModel parse_model(const std::string& text);

/// Canonical text form; parse_model(render_model(m)).spec == m.
std::string render_model(const ModelSpec& spec);

/// Built-in models: "ou2", "geometric2", "semilogistic", "lv_full",
/// "lv_simple", "cle", "linear_unobs(n)" for 1 <= n <= 6.
ModelSpec builtin_model(const std::string& id);

/// Names of all built-ins (with linear_unobs instantiated at n = 1..3).
std::vector<std::string> builtin_model_ids();

/// Loads "builtin:<id>" or a filesystem path.
ParsedModel load_model(const std::string& uri);

}  // namespace ident
