#include "ident/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ident {

std::size_t ModelSpec::n_observed() const {
  return static_cast<std::size_t>(
      std::count_if(states.begin(), states.end(), [](const StateVar& s) { return s.observed; }));
}

std::size_t ModelSpec::state_index(std::string_view name) const {
  for (std::size_t k = 0; k < states.size(); ++k)
    if (states[k].name == name) return k;
  throw Error("unknown state '" + std::string(name) + "'");
}

std::vector<std::vector<Poly>> ModelSpec::squared_diffusion() const {
  if (has_diffusion_sq()) return diffusion_sq;
  const std::size_t n = n_states();
  std::vector<std::vector<Poly>> G(n, std::vector<Poly>(n, Poly(table)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < diffusion[i].size(); ++k)
        G[i][j] += diffusion[i][k] * diffusion[j][k];
  return G;
}

void ModelSpec::require_two_state_observed_first() const {
  if (n_states() != 2)
    throw Error("model '" + name + "' has " + std::to_string(n_states()) +
                " states; the moment pipeline requires exactly 2");
  if (!states[0].observed || states[1].observed)
    throw Error("model '" + name +
                "': the moment pipeline requires exactly the first state observed");
}

bool ModelSpec::operator==(const ModelSpec& rhs) const {
  return name == rhs.name && states == rhs.states && params == rhs.params &&
         drift == rhs.drift && diffusion == rhs.diffusion &&
         diffusion_sq == rhs.diffusion_sq;
}

namespace {

std::string trim(std::string s) {
  auto issp = [](unsigned char c) { return std::isspace(c); };
  while (!s.empty() && issp(s.back())) s.pop_back();
  std::size_t k = 0;
  while (k < s.size() && issp(s[k])) ++k;
  return s.substr(k);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

struct RawEntry {
  std::string key;    // before ':'
  std::string value;  // after ':'
  std::size_t line;
  std::size_t value_col;  // 1-based column where value starts
};

Poly parse_expr(const std::string& text, const SymbolTablePtr& table,
                std::size_t line, std::size_t col_offset) {
  try {
    return parse_poly(text, table);
  } catch (const PolyParseError& e) {
    throw ModelParseError(std::string(e.what()) + " (expression must be polynomial in "
                                                  "declared states and parameters)",
                          line, col_offset + e.column() - 1);
  }
}

}  // namespace

ParsedModel parse_model(const std::string& text) {
  enum class Section { None, Drift, Diffusion, DiffusionSq };

  std::string name;
  std::vector<StateVar> states;
  std::vector<std::string> params;
  std::vector<RawEntry> drift_raw, diff_raw, diffsq_raw;
  bool have_states = false, have_params = false, have_drift = false,
       have_diff = false, have_diffsq = false;
  std::size_t states_line = 0;

  Section section = Section::None;
  std::istringstream stream(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(stream, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string t = trim(line);
    if (t.empty()) continue;

    if (t.rfind("model", 0) == 0 && (t.size() == 5 || std::isspace((unsigned char)t[5]))) {
      if (!name.empty()) throw ModelParseError("duplicate 'model' line", lineno);
      auto words = split_ws(t);
      if (words.size() != 2) throw ModelParseError("expected 'model <name>'", lineno);
      name = words[1];
      section = Section::None;
      continue;
    }
    if (t.rfind("states:", 0) == 0) {
      if (have_states) throw ModelParseError("duplicate 'states:' line", lineno);
      have_states = true;
      states_line = lineno;
      std::string rest = t.substr(7);
      std::istringstream ss(rest);
      std::string decl;
      while (std::getline(ss, decl, ',')) {
        auto words = split_ws(decl);
        if (words.empty()) throw ModelParseError("empty state declaration", lineno);
        StateVar sv;
        sv.name = words[0];
        if (words.size() == 2 && words[1] == "observed") {
          sv.observed = true;
        } else if (words.size() > 1) {
          throw ModelParseError("bad state declaration '" + decl +
                                    "' (expected '<name> [observed]')",
                                lineno);
        }
        states.push_back(sv);
      }
      if (states.empty()) throw ModelParseError("no states declared", lineno);
      section = Section::None;
      continue;
    }
    if (t.rfind("params:", 0) == 0) {
      if (have_params) throw ModelParseError("duplicate 'params:' line", lineno);
      have_params = true;
      std::string rest = t.substr(7);
      std::replace(rest.begin(), rest.end(), ',', ' ');
      params = split_ws(rest);
      section = Section::None;
      continue;
    }
    if (t == "drift:") {
      if (have_drift) throw ModelParseError("duplicate 'drift:' section", lineno);
      have_drift = true;
      section = Section::Drift;
      continue;
    }
    if (t == "diffusion:") {
      if (have_diff) throw ModelParseError("duplicate 'diffusion:' section", lineno);
      have_diff = true;
      section = Section::Diffusion;
      continue;
    }
    if (t == "diffusion_sq:") {
      if (have_diffsq) throw ModelParseError("duplicate 'diffusion_sq:' section", lineno);
      have_diffsq = true;
      section = Section::DiffusionSq;
      continue;
    }

    auto colon = t.find(':');
    if (section == Section::None || colon == std::string::npos)
      throw ModelParseError("unrecognized line '" + t + "'", lineno);
    RawEntry entry;
    entry.key = trim(t.substr(0, colon));
    entry.value = trim(t.substr(colon + 1));
    entry.line = lineno;
    // Column of the value within the original line (1-based), for error spans.
    entry.value_col = line.find(entry.value.empty() ? ":" : entry.value) + 1;
    switch (section) {
      case Section::Drift: drift_raw.push_back(entry); break;
      case Section::Diffusion: diff_raw.push_back(entry); break;
      case Section::DiffusionSq: diffsq_raw.push_back(entry); break;
      case Section::None: break;
    }
  }

  if (name.empty()) throw ModelParseError("missing 'model <name>' line", 1);
  if (!have_states) throw ModelParseError("missing 'states:' line", 1);
  if (!have_params) throw ModelParseError("missing 'params:' line", 1);
  if (!have_drift) throw ModelParseError("missing 'drift:' section", 1);
  if (have_diff == have_diffsq)
    throw ModelParseError(
        "exactly one of 'diffusion:' / 'diffusion_sq:' must be given", 1);

  ModelSpec m;
  m.name = name;
  m.states = states;
  m.params = params;
  std::vector<std::string> symbols;
  for (const auto& s : states) symbols.push_back(s.name);
  for (const auto& p : params) symbols.push_back(p);
  try {
    m.table = make_symbols(symbols);
    m.param_table = make_symbols(params);
  } catch (const Error& e) {
    throw ModelParseError(e.what(), states_line);
  }

  const std::size_t n = states.size();
  auto state_idx = [&](const RawEntry& e) -> std::size_t {
    for (std::size_t k = 0; k < n; ++k)
      if (states[k].name == e.key) return k;
    throw ModelParseError("unknown state '" + e.key + "'", e.line);
  };

  // Drift: one entry per state.
  m.drift.assign(n, Poly(m.table));
  std::vector<bool> seen(n, false);
  for (const auto& e : drift_raw) {
    std::size_t k = state_idx(e);
    if (seen[k]) throw ModelParseError("duplicate drift for state '" + e.key + "'", e.line);
    seen[k] = true;
    m.drift[k] = parse_expr(e.value, m.table, e.line, e.value_col);
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!seen[k])
      throw ModelParseError("missing drift for state '" + states[k].name + "'", 1);

  if (have_diff) {
    m.diffusion.assign(n, {});
    seen.assign(n, false);
    std::size_t width = 0;
    for (const auto& e : diff_raw) {
      std::size_t k = state_idx(e);
      if (seen[k])
        throw ModelParseError("duplicate diffusion row for state '" + e.key + "'", e.line);
      seen[k] = true;
      std::string v = e.value;
      if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        throw ModelParseError("diffusion row must be '[expr, expr, ...]'", e.line);
      v = v.substr(1, v.size() - 2);
      std::istringstream ss(v);
      std::string piece;
      std::vector<Poly> row;
      while (std::getline(ss, piece, ','))
        row.push_back(parse_expr(trim(piece), m.table, e.line, e.value_col));
      if (row.empty())
        throw ModelParseError("empty diffusion row", e.line);
      if (width == 0) width = row.size();
      if (row.size() != width)
        throw ModelParseError("diffusion rows must all have the same width", e.line);
      m.diffusion[k] = std::move(row);
    }
    for (std::size_t k = 0; k < n; ++k)
      if (!seen[k])
        throw ModelParseError("missing diffusion row for state '" + states[k].name + "'", 1);
  } else {
    m.diffusion_sq.assign(n, std::vector<Poly>(n, Poly(m.table)));
    std::vector<std::vector<bool>> got(n, std::vector<bool>(n, false));
    for (const auto& e : diffsq_raw) {
      auto words = split_ws(e.key);
      if (words.size() != 2)
        throw ModelParseError("diffusion_sq entry key must be two state names", e.line);
      RawEntry a{words[0], "", e.line, 0}, b{words[1], "", e.line, 0};
      std::size_t i = state_idx(a), j = state_idx(b);
      if (got[i][j])
        throw ModelParseError("duplicate diffusion_sq entry '" + e.key + "'", e.line);
      Poly val = parse_expr(e.value, m.table, e.line, e.value_col);
      m.diffusion_sq[i][j] = val;
      m.diffusion_sq[j][i] = val;
      got[i][j] = got[j][i] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (!got[i][j])
          throw ModelParseError("missing diffusion_sq entry for '" + states[i].name +
                                    " " + states[j].name + "'",
                                1);
  }

  ParsedModel out;
  out.spec = std::move(m);

  const ModelSpec& spec = out.spec;
  if (spec.n_observed() == 0)
    throw ModelParseError("at least one state must be marked observed", states_line);
  if (n != 2) {
    out.warnings.push_back("model has " + std::to_string(n) +
                           " states; only the OU analytic path accepts "
                           "n-dimensional models");
  } else if (!spec.states[0].observed || spec.states[1].observed) {
    out.warnings.push_back(
        "the moment pipeline requires exactly the first state observed; "
        "this model is usable only by the OU analytic path");
  }
  if (!spec.diffusion.empty()) {
    bool constant_in_states = true;
    for (const auto& row : spec.diffusion)
      for (const auto& g : row)
        for (std::size_t k = 0; k < n; ++k)
          if (g.depends_on(k)) constant_in_states = false;
    if (constant_in_states) {
      bool upper_nonzero = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < spec.diffusion[i].size(); ++j)
          if (!spec.diffusion[i][j].is_zero()) upper_nonzero = true;
      if (upper_nonzero)
        out.warnings.push_back(
            "constant diffusion matrix is over-parameterized: only S*S^T "
            "enters the law, so a lower-triangular S suffices");
    }
  }
  return out;
}

std::string render_model(const ModelSpec& m) {
  std::ostringstream os;
  os << "model " << m.name << "\n";
  os << "states:";
  for (std::size_t k = 0; k < m.states.size(); ++k) {
    os << (k ? "," : "") << " " << m.states[k].name
       << (m.states[k].observed ? " observed" : "");
  }
  os << "\nparams:";
  for (const auto& p : m.params) os << " " << p;
  os << "\ndrift:\n";
  for (std::size_t k = 0; k < m.states.size(); ++k)
    os << "  " << m.states[k].name << ": " << m.drift[k].render() << "\n";
  if (!m.diffusion.empty()) {
    os << "diffusion:\n";
    for (std::size_t k = 0; k < m.states.size(); ++k) {
      os << "  " << m.states[k].name << ": [";
      for (std::size_t j = 0; j < m.diffusion[k].size(); ++j)
        os << (j ? ", " : "") << m.diffusion[k][j].render();
      os << "]\n";
    }
  } else {
    os << "diffusion_sq:\n";
    for (std::size_t i = 0; i < m.states.size(); ++i)
      for (std::size_t j = i; j < m.states.size(); ++j)
        os << "  " << m.states[i].name << " " << m.states[j].name << ": "
           << m.diffusion_sq[i][j].render() << "\n";
  }
  return os.str();
}

namespace {

const char* kOu2 = R"(model ou2
states: x observed, y
params: a b c d e f p r s
drift:
  x: -a*(x - e) - b*(y - f)
  y: -c*(x - e) - d*(y - f)
diffusion:
  x: [p, 0]
  y: [r, s]
)";

const char* kGeometric2 = R"(model geometric2
states: x observed, y
params: a b c d e f p r s
drift:
  x: -a*(x - e) - b*(y - f)
  y: -c*(x - e) - d*(y - f)
diffusion:
  x: [p*x, 0]
  y: [r*y, s*y]
)";

const char* kSemilogistic = R"(model semilogistic
states: x observed, y
params: a b c d e f p r s
drift:
  x: a*x*(1 - b*x) + c*y
  y: d*x*(1 - e*x) + f*y
diffusion:
  x: [p, 0]
  y: [r, s]
)";

const char* kLvFull = R"(model lv_full
states: x observed, y
params: a b c d p s
drift:
  x: a*x + b*x*y
  y: c*y + d*x*y
diffusion:
  x: [p, 0]
  y: [0, s]
)";

const char* kLvSimple = R"(model lv_simple
states: x observed, y
params: a b c d p s
drift:
  x: a*x + b*y
  y: c*y + d*x*y
diffusion:
  x: [p, 0]
  y: [0, s]
)";

const char* kCle = R"(model cle
states: x observed, y
params: alpha beta gamma delta epsilon zeta
drift:
  x: -2*alpha*x^2 - zeta*x + 2*beta*y + epsilon
  y: alpha*x^2 - (beta + delta)*y + gamma
diffusion_sq:
  x x: 4*alpha*x^2 + 4*beta*y + epsilon + zeta*x^2
  x y: -2*alpha*x^2 - 2*beta*y
  y y: alpha*x^2 + beta*y + gamma + delta*y
)";

std::string linear_unobs_text(int n) {
  std::ostringstream os;
  os << "model linear_unobs(" << n << ")\nstates: x observed, y\nparams:";
  for (int k = 0; k <= n; ++k) os << " c" << k;
  os << " a";
  for (int k = 0; k <= n; ++k) os << " d" << k;
  os << " b p r s\ndrift:\n  x: c0";
  for (int k = 1; k <= n; ++k) os << " + c" << k << "*x" << (k > 1 ? "^" + std::to_string(k) : "");
  os << " + a*y\n  y: d0";
  for (int k = 1; k <= n; ++k) os << " + d" << k << "*x" << (k > 1 ? "^" + std::to_string(k) : "");
  os << " + b*y\ndiffusion:\n  x: [p, 0]\n  y: [r, s]\n";
  return os.str();
}

}  // namespace

ModelSpec builtin_model(const std::string& id) {
  if (id == "ou2") return parse_model(kOu2).spec;
  if (id == "geometric2") return parse_model(kGeometric2).spec;
  if (id == "semilogistic") return parse_model(kSemilogistic).spec;
  if (id == "lv_full") return parse_model(kLvFull).spec;
  if (id == "lv_simple") return parse_model(kLvSimple).spec;
  if (id == "cle") return parse_model(kCle).spec;
  if (id.rfind("linear_unobs(", 0) == 0 && id.back() == ')') {
    std::string inner = id.substr(13, id.size() - 14);
    int n = 0;
    try {
      n = std::stoi(inner);
    } catch (const std::exception&) {
      throw Error("bad linear_unobs argument '" + inner + "'");
    }
    if (n < 1 || n > 6)
      throw Error("linear_unobs(n) requires 1 <= n <= 6, got " + inner);
    return parse_model(linear_unobs_text(n)).spec;
  }
  throw Error("unknown builtin model '" + id + "'");
}

std::vector<std::string> builtin_model_ids() {
  return {"ou2",       "geometric2den", "semilogistic",    "lv_full",
          "lv_simple", "cle",        "linear_unobs(1)", "linear_unobs(2)",
          "linear_unobs(3)"};
}

ParsedModel load_model(const std::string& uri) {
  if (uri.rfind("builtin:", 0) == 0)
    return ParsedModel{builtin_model(uri.substr(8)), {}};
  std::ifstream in(uri);
  if (!in) throw Error("cannot open model file '" + uri + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_model(os.str());
}

}  // namespace ident
