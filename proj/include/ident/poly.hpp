#pragma once

#include "ident/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ident {

/// Immutable ordered list of symbol names.  Every Poly is bound to one table;
/// arithmetic between polynomials over different tables is an error.
class SymbolTable {
 public:
  explicit SymbolTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t k) const { return names_.at(k); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws Error if absent

  bool operator==(const SymbolTable& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

SymbolTablePtr make_symbols(std::vector<std::string> names);

/// Exponent vector; size always equals the owning table's size.
using Monomial = std::vector<unsigned>;

/// Graded lexicographic order (total degree first, then lex on exponents).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class PolyParseError : public Error {
 public:
  PolyParseError(const std::string& msg, std::size_t column)
      : Error(msg), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Multivariate polynomial with exact rational coefficients over a fixed
/// symbol table.  Invariants: no explicit zero terms; exponent vectors sized
/// to the table; term map ordered graded-lex so rendering is canonical.
class Poly {
 public:
  Poly() = default;  // zero polynomial over an empty table
  explicit Poly(SymbolTablePtr table);

  static Poly constant(SymbolTablePtr table, const Rat& value);
  static Poly variable(SymbolTablePtr table, std::string_view name);
  static Poly term(SymbolTablePtr table, const Rat& coeff, Monomial exponents);

  const SymbolTablePtr& table() const { return table_; }
  const std::map<Monomial, Rat, GrlexLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (throws if not constant).
  Rat constant_value() const;

  std::size_t degree(std::size_t symbol_index) const;
  std::size_t total_degree() const;
  bool depends_on(std::size_t symbol_index) const;

  /// Leading (grlex-largest) term; polynomial must be nonzero.
  std::pair<Monomial, Rat> leading_term() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rat& scalar);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, const Rat& s) { return lhs *= s; }
  friend Poly operator*(const Rat& s, Poly rhs) { return rhs *= s; }

  bool operator==(const Poly& rhs) const;
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }
  /// Arbitrary-but-deterministic order for use as set/map keys (same table).
  bool operator<(const Poly& rhs) const;

  Poly pow(unsigned e) const;

  /// Partial derivative with respect to the named symbol.
  Poly diff(std::string_view symbol) const;
  Poly diff(std::size_t symbol_index) const;

  /// Exact evaluation; `values` must assign every symbol the polynomial
  /// actually depends on (missing symbol -> Error).
  Rat eval(const std::map<std::string, Rat>& values) const;
  /// Evaluation from a full vector indexed like the symbol table.
  Rat eval_all(const std::vector<Rat>& values) const;

  /// Substitutes an exact value for one symbol, returning a polynomial over
  /// the same table.
  Poly substitute(std::size_t symbol_index, const Rat& value) const;

  /// Rational content: gcd of integer numerators / lcm of denominators, with
  /// the sign of the leading coefficient.  content(0) = 0.
  Rat content() const;
  /// this / content(): integer coefficients, gcd 1, positive leading coeff.
  Poly primitive_part() const;
  /// Scales so the grlex-leading coefficient equals exactly 1.
  Poly monic() const;

  /// Canonical text: terms sorted grlex-descending with explicit '*' and '^',
  /// e.g. "a^2 - 2*a*b + b^2".  Round-trips through parse_poly.
  std::string render() const;

 private:
  void set_or_erase(const Monomial& m, Rat value);
  void check_same_table(const Poly& rhs) const;

  SymbolTablePtr table_;
  std::map<Monomial, Rat, GrlexLess> terms_;
};

/// Parses canonical/infix polynomial text over the given table.
/// Grammar: + - * / ^ ( ), integer/decimal/fraction literals, declared
/// symbols.  '/' requires a nonzero constant divisor; '^' a nonnegative
/// integer.  Function-call syntax is rejected (expressions must be
/// polynomial).  Throws PolyParseError with a 1-based column.
Poly parse_poly(std::string_view text, const SymbolTablePtr& table);

/// GCD over Q[symbols]: content/primitive-part recursion with a primitive
/// pseudo-remainder sequence on the variable of highest degree.  Result is
/// monic in the grlex sense; gcd(f, 0) = monic(f); gcd(0, 0) = 0.
Poly poly_gcd(const Poly& f, const Poly& g);

/// Least common multiple, monic; lcm(f, 0) = 0.
Poly poly_lcm(const Poly& f, const Poly& g);

/// Exact division f / g: returns nullopt unless g divides f with zero
/// remainder.
std::optional<Poly> poly_divide_exact(const Poly& f, const Poly& g);

}  // namespace ident
