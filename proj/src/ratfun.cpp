#include "ident/ratfun.hpp"

namespace ident {

namespace detail {
std::pair<Poly, Poly> parse_fraction(std::string_view text, const SymbolTablePtr& table);
}  // namespace detail

RatFun::RatFun(Poly num) : num_(std::move(num)) {
  den_ = Poly::constant(num_.table(), 1);
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("RatFun: zero denominator");
  reduce();
}

RatFun RatFun::constant(SymbolTablePtr table, const Rat& value) {
  return RatFun(Poly::constant(std::move(table), value));
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.table(), 1);
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *poly_divide_exact(num_, g);
    den_ = *poly_divide_exact(den_, g);
  }
  // Normalize the denominator to be monic (grlex leading coefficient 1).
  Rat lc = den_.leading_term().second;
  if (lc != 1) {
    Rat inv = Rat(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

bool RatFun::is_poly() const { return den_.is_constant() && den_.constant_value() == 1; }

Rat RatFun::constant_value() const {
  if (!is_constant()) throw Error("constant_value on non-constant rational function");
  return num_.constant_value() / den_.constant_value();
}

RatFun RatFun::operator-() const {
  RatFun r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  reduce();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  reduce();
  return *this;
}

RatFun& RatFun::operator*=(const RatFun& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& rhs) {
  if (rhs.num_.is_zero()) throw Error("RatFun: division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  reduce();
  return *this;
}

RatFun RatFun::inverse() const {
  if (num_.is_zero()) throw Error("RatFun: inverse of zero");
  return RatFun(den_, num_);
}

bool RatFun::operator==(const RatFun& rhs) const {
  return num_ == rhs.num_ && den_ == rhs.den_;
}

bool RatFun::operator<(const RatFun& rhs) const {
  if (num_ < rhs.num_) return true;
  if (rhs.num_ < num_) return false;
  return den_ < rhs.den_;
}

RatFun RatFun::diff(std::size_t symbol_index) const {
  // (n/d)' = (n'd - nd')/d^2
  Poly n = num_.diff(symbol_index) * den_ - num_ * den_.diff(symbol_index);
  return RatFun(std::move(n), den_ * den_);
}

Rat RatFun::eval(const std::map<std::string, Rat>& values) const {
  Rat d = den_.eval(values);
  if (d == 0) throw Error("RatFun: denominator vanishes at evaluation point");
  return num_.eval(values) / d;
}

Rat RatFun::eval_all(const std::vector<Rat>& values) const {
  Rat d = den_.eval_all(values);
  if (d == 0) throw Error("RatFun: denominator vanishes at evaluation point");
  return num_.eval_all(values) / d;
}

std::string RatFun::render() const {
  if (is_poly()) return num_.render();
  return "(" + num_.render() + ")/(" + den_.render() + ")";
}

RatFun parse_ratfun(std::string_view text, const SymbolTablePtr& table) {
  auto [num, den] = detail::parse_fraction(text, table);
  return RatFun(std::move(num), std::move(den));
}

}  // namespace ident
