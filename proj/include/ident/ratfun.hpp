#pragma once

#include "ident/poly.hpp"

namespace ident {

/// Rational function num/den over one symbol table.  Invariants: den != 0;
/// gcd(num, den) constant (fully reduced); den monic in the grlex sense.
class RatFun {
 public:
  RatFun() = default;
  /// Implicit lift of a polynomial (den = 1).
  RatFun(Poly num);  // NOLINT(google-explicit-constructor)
  RatFun(Poly num, Poly den);  // reduces; throws Error on zero denominator

  static RatFun constant(SymbolTablePtr table, const Rat& value);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const SymbolTablePtr& table() const { return num_.table(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const;  // den == 1
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& rhs);
  RatFun& operator-=(const RatFun& rhs);
  RatFun& operator*=(const RatFun& rhs);
  RatFun& operator/=(const RatFun& rhs);  // throws Error on zero divisor
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

  RatFun inverse() const;

  bool operator==(const RatFun& rhs) const;
  bool operator!=(const RatFun& rhs) const { return !(*this == rhs); }
  bool operator<(const RatFun& rhs) const;

  RatFun diff(std::size_t symbol_index) const;  // quotient rule, reduced

  /// Exact evaluation; throws Error if the denominator vanishes at the point.
  Rat eval(const std::map<std::string, Rat>& values) const;
  Rat eval_all(const std::vector<Rat>& values) const;

  /// Canonical text: "num" when den == 1, else "(num)/(den)".
  std::string render() const;

 private:
  void reduce();

  Poly num_;
  Poly den_;
};

/// Parses "poly" or "(poly)/(poly)" (or any infix expression with '/').
RatFun parse_ratfun(std::string_view text, const SymbolTablePtr& table);

}  // namespace ident
