#include "ident/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ident {

// --------------------------------------------------------------- SymbolTable

SymbolTable::SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k].empty()) throw Error("symbol table: empty symbol name");
    auto [it, inserted] = index_.emplace(names_[k], k);
    (void)it;
    if (!inserted) throw Error("symbol table: duplicate symbol '" + names_[k] + "'");
  }
}

std::optional<std::size_t> SymbolTable::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SymbolTable::index_of(std::string_view name) const {
  auto k = find(name);
  if (!k) throw Error("unknown symbol '" + std::string(name) + "'");
  return *k;
}

SymbolTablePtr make_symbols(std::vector<std::string> names) {
  return std::make_shared<const SymbolTable>(std::move(names));
}

// ----------------------------------------------------------------- ordering

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  // Same total degree: lex with earlier symbols weighted higher, so the
  // lex-larger exponent vector is the grlex-larger monomial.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// --------------------------------------------------------------------- Poly

Poly::Poly(SymbolTablePtr table) : table_(std::move(table)) {
  if (!table_) throw Error("Poly: null symbol table");
}

Poly Poly::constant(SymbolTablePtr table, const Rat& value) {
  Poly p(std::move(table));
  if (value != 0) p.terms_.emplace(Monomial(p.table_->size(), 0), value);
  return p;
}

Poly Poly::variable(SymbolTablePtr table, std::string_view name) {
  Poly p(table);
  Monomial m(table->size(), 0);
  m[table->index_of(name)] = 1;
  p.terms_.emplace(std::move(m), Rat(1));
  return p;
}

Poly Poly::term(SymbolTablePtr table, const Rat& coeff, Monomial exponents) {
  Poly p(table);
  if (exponents.size() != p.table_->size())
    throw Error("Poly::term: exponent vector size mismatch");
  if (coeff != 0) p.terms_.emplace(std::move(exponents), coeff);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw Error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

std::size_t Poly::degree(std::size_t symbol_index) const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max<std::size_t>(d, m.at(symbol_index));
  return d;
}

std::size_t Poly::total_degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max<std::size_t>(d, std::accumulate(m.begin(), m.end(), 0u));
  return d;
}

bool Poly::depends_on(std::size_t symbol_index) const {
  for (const auto& [m, c] : terms_)
    if (m.at(symbol_index) > 0) return true;
  return false;
}

std::pair<Monomial, Rat> Poly::leading_term() const {
  if (terms_.empty()) throw Error("leading_term of zero polynomial");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

void Poly::set_or_erase(const Monomial& m, Rat value) {
  if (value == 0) {
    terms_.erase(m);
  } else {
    terms_[m] = std::move(value);
  }
}

void Poly::check_same_table(const Poly& rhs) const {
  if (table_ == rhs.table_) return;
  if (table_ && rhs.table_ && *table_ == *rhs.table_) return;
  throw Error("polynomial arithmetic across different symbol tables");
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_same_table(rhs);
  for (const auto& [m, c] : rhs.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  check_same_table(rhs);
  for (const auto& [m, c] : rhs.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  check_same_table(rhs);
  std::map<Monomial, Rat, GrlexLess> out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m(ma.size());
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      Rat c = ca * cb;
      auto it = out.find(m);
      if (it == out.end()) {
        out.emplace(std::move(m), std::move(c));
      } else {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= scalar;
  }
  return *this;
}

bool Poly::operator==(const Poly& rhs) const {
  if (table_ != rhs.table_) {
    if (!table_ || !rhs.table_ || !(*table_ == *rhs.table_)) return false;
  }
  return terms_ == rhs.terms_;
}

bool Poly::operator<(const Poly& rhs) const {
  const auto& an = table_ ? table_->names() : std::vector<std::string>{};
  const auto& bn = rhs.table_ ? rhs.table_->names() : std::vector<std::string>{};
  if (an != bn) return an < bn;
  return terms_ < rhs.terms_;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(table_, 1);
  for (unsigned k = 0; k < e; ++k) r *= *this;
  return r;
}

Poly Poly::diff(std::string_view symbol) const { return diff(table_->index_of(symbol)); }

Poly Poly::diff(std::size_t symbol_index) const {
  Poly r(table_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m.at(symbol_index);
    if (e == 0) continue;
    Monomial d = m;
    d[symbol_index] = e - 1;
    Rat add = c * e;
    auto it = r.terms_.find(d);
    if (it != r.terms_.end()) add += it->second;
    r.set_or_erase(d, add);
  }
  return r;
}

Rat Poly::eval(const std::map<std::string, Rat>& values) const {
  std::vector<std::optional<Rat>> v(table_->size());
  for (const auto& [name, val] : values) {
    if (auto k = table_->find(name)) v[*k] = val;
  }
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (!v[k])
        throw Error("eval: missing value for symbol '" + table_->name(k) + "'");
      Rat base = *v[k];
      for (unsigned e = 0; e < m[k]; ++e) t *= base;
    }
    total += t;
  }
  return total;
}

Rat Poly::eval_all(const std::vector<Rat>& values) const {
  if (values.size() != table_->size())
    throw Error("eval_all: value vector size mismatch");
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (std::size_t k = 0; k < m.size(); ++k)
      for (unsigned e = 0; e < m[k]; ++e) t *= values[k];
    total += t;
  }
  return total;
}

Poly Poly::substitute(std::size_t symbol_index, const Rat& value) const {
  Poly r(table_);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (unsigned e = 0; e < m.at(symbol_index); ++e) t *= value;
    Monomial d = m;
    d[symbol_index] = 0;
    if (t == 0) continue;
    auto it = r.terms_.find(d);
    if (it == r.terms_.end()) {
      r.terms_.emplace(std::move(d), std::move(t));
    } else {
      it->second += t;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

Rat Poly::content() const {
  if (terms_.empty()) return Rat(0);
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    num_gcd = boost::multiprecision::gcd(num_gcd, rat_num(c));
    den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(c));
  }
  Rat mag(num_gcd, den_lcm);
  return leading_term().second < 0 ? -mag : mag;
}

Poly Poly::primitive_part() const {
  if (terms_.empty()) return *this;
  Poly r(*this);
  r *= Rat(1) / content();
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  Poly r(*this);
  r *= Rat(1) / leading_term().second;
  return r;
}

std::string Poly::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool has_vars = std::any_of(m.begin(), m.end(), [](unsigned e) { return e > 0; });
    bool coeff_shown = !has_vars || a != 1;
    if (coeff_shown) os << to_string(a);
    bool first_var = true;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (!first_var || coeff_shown) os << "*";
      os << table_->name(k);
      if (m[k] > 1) os << "^" << m[k];
      first_var = false;
    }
  }
  return os.str();
}

// ------------------------------------------------------------------- parser

namespace {

struct Token {
  enum Kind { Number, Ident, Op, End } kind = End;
  std::string text;
  std::size_t column = 0;  // 1-based
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    tok_ = Token{};
    tok_.column = pos_ + 1;
    if (pos_ >= s_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      bool seen_dot = false;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
              (s_[pos_] == '.' && !seen_dot))) {
        if (s_[pos_] == '.') seen_dot = true;
        ++pos_;
      }
      tok_.kind = Token::Number;
      tok_.text = std::string(s_.substr(start, pos_ - start));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::Ident;
      tok_.text = std::string(s_.substr(start, pos_ - start));
      return;
    }
    if (std::string("+-*/^()[],:").find(c) != std::string::npos) {
      tok_.kind = Token::Op;
      tok_.text = std::string(1, c);
      ++pos_;
      return;
    }
    throw PolyParseError(std::string("unexpected character '") + c + "'", pos_ + 1);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Token tok_;
};

Rat number_to_rat(const std::string& text, std::size_t col) {
  auto dot = text.find('.');
  try {
    if (dot == std::string::npos) return Rat(BigInt(text));
    std::string ip = text.substr(0, dot);
    std::string fp = text.substr(dot + 1);
    if (ip.empty() && fp.empty())
      throw PolyParseError("malformed number '" + text + "'", col);
    BigInt num = ip.empty() ? BigInt(0) : BigInt(ip);
    BigInt den = 1;
    for (char d : fp) {
      num = num * 10 + (d - '0');
      den *= 10;
    }
    return Rat(num, den);
  } catch (const PolyParseError&) {
    throw;
  } catch (const std::exception&) {
    throw PolyParseError("malformed number '" + text + "'", col);
  }
}

// Unreduced fraction of polynomials; reduction happens at the end so that
// expressions like "a/b*b" still count as polynomial.
struct Frac {
  Poly num, den;
};

class ExprParser {
 public:
  ExprParser(std::string_view text, SymbolTablePtr table)
      : lex_(text), table_(std::move(table)) {}

  Frac parse() {
    Frac f = expr();
    if (lex_.peek().kind != Token::End)
      throw PolyParseError("unexpected trailing input '" + lex_.peek().text + "'",
                           lex_.peek().column);
    return f;
  }

 private:
  Frac expr() {
    bool neg = false;
    while (lex_.peek().kind == Token::Op &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      if (lex_.next().text == "-") neg = !neg;
    }
    Frac acc = term();
    if (neg) acc.num = -acc.num;
    while (lex_.peek().kind == Token::Op &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      std::string op = lex_.next().text;
      Frac rhs = term();
      // a/b +- c/d = (a*d +- c*b) / (b*d)
      Poly n = acc.num * rhs.den;
      Poly m = rhs.num * acc.den;
      acc.num = (op == "+") ? n + m : n - m;
      acc.den = acc.den * rhs.den;
    }
    return acc;
  }

  Frac term() {
    Frac acc = factor();
    while (lex_.peek().kind == Token::Op &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      Token op = lex_.next();
      Frac rhs = factor();
      if (op.text == "*") {
        acc.num *= rhs.num;
        acc.den *= rhs.den;
      } else {
        if (rhs.num.is_zero()) throw PolyParseError("division by zero", op.column);
        acc.num *= rhs.den;
        acc.den *= rhs.num;
      }
    }
    return acc;
  }

  Frac factor() {
    Frac base = atom();
    if (lex_.peek().kind == Token::Op && lex_.peek().text == "^") {
      Token caret = lex_.next();
      const Token& e = lex_.peek();
      if (e.kind == Token::Op && e.text == "-")
        throw PolyParseError("negative exponent is not polynomial", e.column);
      if (e.kind != Token::Number || e.text.find('.') != std::string::npos)
        throw PolyParseError("exponent must be a nonnegative integer", caret.column);
      unsigned exp = 0;
      try {
        exp = static_cast<unsigned>(std::stoul(lex_.next().text));
      } catch (const std::exception&) {
        throw PolyParseError("exponent out of range", caret.column);
      }
      base.num = base.num.pow(exp);
      base.den = base.den.pow(exp);
    }
    return base;
  }

  Frac atom() {
    Token t = lex_.next();
    if (t.kind == Token::Number)
      return {Poly::constant(table_, number_to_rat(t.text, t.column)),
              Poly::constant(table_, 1)};
    if (t.kind == Token::Ident) {
      if (lex_.peek().kind == Token::Op && lex_.peek().text == "(")
        throw PolyParseError("function call '" + t.text +
                                 "(...)' is not polynomial",
                             t.column);
      auto idx = table_->find(t.text);
      if (!idx)
        throw PolyParseError("undeclared symbol '" + t.text + "'", t.column);
      return {Poly::variable(table_, t.text), Poly::constant(table_, 1)};
    }
    if (t.kind == Token::Op && t.text == "(") {
      Frac inner = expr();
      const Token& close = lex_.peek();
      if (!(close.kind == Token::Op && close.text == ")"))
        throw PolyParseError("expected ')'", close.column);
      lex_.next();
      return inner;
    }
    if (t.kind == Token::End) throw PolyParseError("unexpected end of expression", t.column);
    throw PolyParseError("unexpected token '" + t.text + "'", t.column);
  }

  Lexer lex_;
  SymbolTablePtr table_;
};

}  // namespace

namespace detail {

std::pair<Poly, Poly> parse_fraction(std::string_view text, const SymbolTablePtr& table) {
  ExprParser p(text, table);
  Frac f = p.parse();
  return {std::move(f.num), std::move(f.den)};
}

}  // namespace detail

Poly parse_poly(std::string_view text, const SymbolTablePtr& table) {
  auto [num, den] = detail::parse_fraction(text, table);
  if (den.is_zero()) throw PolyParseError("division by zero", 1);
  if (den.is_constant()) {
    num *= Rat(1) / den.constant_value();
    return num;
  }
  Poly g = poly_gcd(num, den);
  auto qn = poly_divide_exact(num, g);
  auto qd = poly_divide_exact(den, g);
  if (qn && qd && qd->is_constant())
    return *qn * (Rat(1) / qd->constant_value());
  throw PolyParseError("expression is rational, not polynomial", 1);
}

// ------------------------------------------------------------ gcd machinery

std::optional<Poly> poly_divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return Poly(f.table() ? f.table() : g.table());
  Poly rem = f;
  Poly quot(f.table());
  auto [lg_m, lg_c] = g.leading_term();
  while (!rem.is_zero()) {
    auto [lr_m, lr_c] = rem.leading_term();
    Monomial q(lr_m.size());
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (lr_m[k] < lg_m[k]) return std::nullopt;  // leading term not divisible
      q[k] = lr_m[k] - lg_m[k];
    }
    Poly qt = Poly::term(f.table(), lr_c / lg_c, std::move(q));
    quot += qt;
    rem -= qt * g;
  }
  return quot;
}

namespace {

// f viewed as a univariate polynomial in symbol `v`: coefficient polys by
// degree (coefficients do not involve v).
std::vector<Poly> uni_coeffs(const Poly& f, std::size_t v) {
  std::vector<Poly> out(f.degree(v) + 1, Poly(f.table()));
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    unsigned e = rest[v];
    rest[v] = 0;
    out[e] += Poly::term(f.table(), c, std::move(rest));
  }
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

// gcd(c*x^alpha, g): exponentwise min of alpha with every monomial of g.
Poly monomial_gcd(const Poly& mono, const Poly& g) {
  Monomial lo = mono.leading_term().first;
  for (const auto& [m, c] : g.terms())
    for (std::size_t k = 0; k < lo.size(); ++k) lo[k] = std::min(lo[k], m[k]);
  return Poly::term(mono.table(), Rat(1), std::move(lo));
}

// f restricted to one variable by substituting `point` for the others.
// Coefficient vector indexed by degree in v.
std::vector<Rat> univariate_image(const Poly& f, std::size_t v,
                                  const std::vector<Rat>& point) {
  std::vector<Rat> out(f.degree(v) + 1, Rat(0));
  for (const auto& [m, c] : f.terms()) {
    Rat t = c;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == v) continue;
      for (unsigned e = 0; e < m[k]; ++e) t *= point[k];
    }
    out[m[v]] += t;
  }
  return out;
}

std::size_t uni_deg(const std::vector<Rat>& p) {
  std::size_t d = p.size();
  while (d > 0 && p[d - 1] == 0) --d;
  return d == 0 ? 0 : d - 1;
}

bool uni_is_zero(const std::vector<Rat>& p) {
  return std::all_of(p.begin(), p.end(), [](const Rat& c) { return c == 0; });
}

std::size_t univariate_gcd_degree(std::vector<Rat> a, std::vector<Rat> b) {
  if (uni_is_zero(a)) return uni_deg(b);
  if (uni_is_zero(b)) return uni_deg(a);
  while (!uni_is_zero(b)) {
    std::size_t da = uni_deg(a), db = uni_deg(b);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    // monic remainder step
    Rat inv = Rat(1) / b[db];
    for (auto& c : b) c *= inv;
    for (std::size_t sh = da - db + 1; sh-- > 0;) {
      Rat lead = a[db + sh];
      if (lead == 0) continue;
      for (std::size_t k = 0; k <= db; ++k) a[k + sh] -= lead * b[k];
    }
    a.resize(db);
    if (a.empty()) a.push_back(Rat(0));
    std::swap(a, b);
  }
  return uni_deg(a);
}

// Exact certificate that gcd(f, g) does not involve any variable: for each
// candidate variable v, evaluate the other variables at a point where the
// leading-in-v coefficient of f stays nonzero (so the image of the true gcd
// keeps its v-degree) and check that the univariate images are coprime.
bool certify_coprime(const Poly& f, const Poly& g) {
  const auto& t = f.table();
  static const Rat kPoints[] = {Rat(2),  Rat(3),  Rat(-1), Rat(5), Rat(1, 2),
                                Rat(-2), Rat(7),  Rat(-3), Rat(4), Rat(11, 3)};
  for (std::size_t v = 0; v < t->size(); ++v) {
    std::size_t dv = std::min(f.degree(v), g.degree(v));
    if (dv == 0) continue;
    auto fc = uni_coeffs(f, v);
    const Poly& lcf = fc.back();
    bool certified = false;
    for (int attempt = 0; attempt < 6 && !certified; ++attempt) {
      std::vector<Rat> pt(t->size());
      for (std::size_t k = 0; k < pt.size(); ++k)
        pt[k] = kPoints[(attempt + k * 3 + v) % std::size(kPoints)];
      if (lcf.eval_all(pt) == 0) continue;
      if (univariate_gcd_degree(univariate_image(f, v, pt),
                                univariate_image(g, v, pt)) == 0)
        certified = true;
    }
    if (!certified) return false;
  }
  return true;
}

// gcd of the univariate-view coefficients (the content w.r.t. v).
Poly content_wrt(const Poly& f, std::size_t v) {
  Poly c(f.table());
  for (const Poly& coeff : uni_coeffs(f, v)) c = poly_gcd(c, coeff);
  return c;
}

// Pseudo-remainder of A by B in variable v (defined up to factors of
// lc(B)^k, which is irrelevant because callers take primitive parts).
Poly pseudo_rem(Poly a, const Poly& b, std::size_t v) {
  const std::size_t db = b.degree(v);
  auto bc = uni_coeffs(b, v);
  const Poly& lb = bc.back();
  while (!a.is_zero() && a.degree(v) >= db) {
    auto ac = uni_coeffs(a, v);
    const Poly& la = ac.back();
    std::size_t shift = ac.size() - 1 - db;
    Monomial m(a.table()->size(), 0);
    m[v] = static_cast<unsigned>(shift);
    a = a * lb - b * la * Poly::term(a.table(), Rat(1), std::move(m));
  }
  return a;
}

}  // namespace

Poly poly_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) return f.table() ? f : g;
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.table() != g.table() && !(*f.table() == *g.table()))
    throw Error("poly_gcd across different symbol tables");
  const SymbolTablePtr& t = f.table();
  if (f.is_constant() || g.is_constant()) return Poly::constant(t, 1);
  if (f == g) return f.monic();

  // Fast paths that dominate in practice: monomial inputs, one input
  // dividing the other, and provably coprime inputs.
  if (f.terms().size() == 1) return monomial_gcd(f, g);
  if (g.terms().size() == 1) return monomial_gcd(g, f);
  if (poly_divide_exact(g, f)) return f.monic();
  if (poly_divide_exact(f, g)) return g.monic();
  if (certify_coprime(f, g)) return Poly::constant(t, 1);

  // Recurse on the variable of highest degree among the two inputs.
  std::size_t v = 0, best = 0;
  for (std::size_t k = 0; k < t->size(); ++k) {
    std::size_t d = std::max(f.degree(k), g.degree(k));
    if (d > best) {
      best = d;
      v = k;
    }
  }

  Poly cf = content_wrt(f, v);
  Poly cg = content_wrt(g, v);
  Poly cont = poly_gcd(cf, cg);
  Poly a = *poly_divide_exact(f, cf);
  Poly b = *poly_divide_exact(g, cg);
  if (a.degree(v) < b.degree(v)) std::swap(a, b);

  // Primitive pseudo-remainder sequence.
  while (!b.is_zero()) {
    Poly r = pseudo_rem(a, b, v);
    a = std::move(b);
    if (r.is_zero()) {
      b = Poly(t);
    } else {
      Poly rc = content_wrt(r, v);
      b = *poly_divide_exact(r, rc);
    }
  }
  return (cont * a).monic();
}

Poly poly_lcm(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() ? f : g;
  Poly d = poly_gcd(f, g);
  Poly q = *poly_divide_exact(f, d);
  return (q * g).monic();
}

// ------------------------------------------------------------------ parsing

Rat parse_rat(const std::string& text) {
  auto table = make_symbols({"__none__"});
  Poly p = parse_poly(text, table);
  if (!p.is_constant()) throw Error("expected a rational constant: '" + text + "'");
  return p.constant_value();
}

}  // namespace ident
