#include "apsheat/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace apsheat {

namespace {

struct Value {
  enum class Kind { Number, String, Boolean, Array };
  Kind kind = Kind::Number;
  double num = 0;
  std::string str;
  bool boolean = false;
  std::vector<Value> arr;
  int line = 0;
};

struct Table {
  std::map<std::string, Value> kv;
  int line = 0;
};

struct Doc {
  std::string path;
  std::map<std::string, Table> sections;
  std::vector<std::pair<std::string, Table>> tables;  // [[name]] entries in order
};

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
  throw ConfigError(path, line, msg);
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Comment starts at an unquoted '#'.
std::string strip_comment(const std::string& s) {
  bool in_str = false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') in_str = !in_str;
    if (s[i] == '#' && !in_str) return s.substr(0, i);
  }
  return s;
}

bool valid_key(const std::string& k) {
  if (k.empty()) return false;
  for (char c : k)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  return true;
}

Value parse_scalar(const std::string& path, int line, const std::string& text) {
  Value v;
  v.line = line;
  if (text.empty()) fail(path, line, "empty value");
  if (text.front() == '"') {
    if (text.size() < 2 || text.back() != '"') fail(path, line, "unterminated string");
    v.kind = Value::Kind::String;
    v.str = text.substr(1, text.size() - 2);
    if (v.str.find('"') != std::string::npos) fail(path, line, "stray quote inside string");
    return v;
  }
  if (text == "true" || text == "false") {
    v.kind = Value::Kind::Boolean;
    v.boolean = text == "true";
    return v;
  }
  char* end = nullptr;
  v.num = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !std::isfinite(v.num))
    fail(path, line, "cannot parse value '" + text + "'");
  v.kind = Value::Kind::Number;
  return v;
}

Value parse_value(const std::string& path, int line, const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') fail(path, line, "arrays must close on the same line");
    Value v;
    v.kind = Value::Kind::Array;
    v.line = line;
    std::string body = trim(text.substr(1, text.size() - 2));
    if (body.empty()) return v;
    size_t start = 0;
    bool in_str = false;
    for (size_t i = 0; i <= body.size(); ++i) {
      if (i < body.size() && body[i] == '"') in_str = !in_str;
      if (i == body.size() || (body[i] == ',' && !in_str)) {
        std::string piece = trim(body.substr(start, i - start));
        if (piece.empty()) fail(path, line, "empty array element");
        v.arr.push_back(parse_scalar(path, line, piece));
        start = i + 1;
      }
    }
    return v;
  }
  return parse_scalar(path, line, text);
}

Doc parse_doc(const std::string& text, const std::string& path) {
  Doc doc;
  doc.path = path;
  Table* current = nullptr;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(strip_comment(raw));
    if (s.empty()) continue;
    if (s.size() >= 4 && s.substr(0, 2) == "[[") {
      if (s.substr(s.size() - 2) != "]]") fail(path, line, "malformed table header");
      std::string name = trim(s.substr(2, s.size() - 4));
      if (!valid_key(name)) fail(path, line, "bad table name '" + name + "'");
      doc.tables.emplace_back(name, Table{{}, line});
      current = &doc.tables.back().second;
      continue;
    }
    if (s.front() == '[') {
      if (s.back() != ']') fail(path, line, "malformed section header");
      std::string name = trim(s.substr(1, s.size() - 2));
      if (!valid_key(name)) fail(path, line, "bad section name '" + name + "'");
      if (doc.sections.count(name)) fail(path, line, "duplicate section [" + name + "]");
      current = &doc.sections[name];
      current->line = line;
      continue;
    }
    size_t eq = s.find('=');
    if (eq == std::string::npos) fail(path, line, "expected key = value");
    std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    if (!valid_key(key)) fail(path, line, "bad key '" + key + "'");
    if (!current) fail(path, line, "key '" + key + "' outside any section");
    if (current->kv.count(key)) fail(path, line, "duplicate key '" + key + "'");
    current->kv[key] = parse_value(path, line, val);
  }
  return doc;
}

class Reader {
 public:
  Reader(const Doc& doc, const std::string& section, const Table* table)
      : doc_(doc), section_(section), table_(table) {}

  bool has(const std::string& key) const { return table_ && table_->kv.count(key); }
  int line_of(const std::string& key) const {
    if (has(key)) return table_->kv.at(key).line;
    return table_ ? table_->line : 0;
  }

  const Value& raw(const std::string& key) const {
    if (!has(key)) fail(doc_.path, table_ ? table_->line : 0, where(key) + " is required");
    return table_->kv.at(key);
  }

  double number(const std::string& key) const {
    const Value& v = raw(key);
    if (v.kind != Value::Kind::Number) fail(doc_.path, v.line, where(key) + " must be a number");
    return v.num;
  }
  double number_or(const std::string& key, double def) const {
    return has(key) ? number(key) : def;
  }
  int integer(const std::string& key) const {
    double v = number(key);
    if (v != std::floor(v) || std::abs(v) > 1e9)
      fail(doc_.path, raw(key).line, where(key) + " must be an integer");
    return static_cast<int>(v);
  }
  int integer_or(const std::string& key, int def) const {
    return has(key) ? integer(key) : def;
  }
  std::string str(const std::string& key) const {
    const Value& v = raw(key);
    if (v.kind != Value::Kind::String) fail(doc_.path, v.line, where(key) + " must be a string");
    return v.str;
  }
  std::string str_or(const std::string& key, const std::string& def) const {
    return has(key) ? str(key) : def;
  }
  std::vector<double> numbers(const std::string& key) const {
    const Value& v = raw(key);
    if (v.kind != Value::Kind::Array)
      fail(doc_.path, v.line, where(key) + " must be an array of numbers");
    std::vector<double> out;
    for (const Value& e : v.arr) {
      if (e.kind != Value::Kind::Number)
        fail(doc_.path, v.line, where(key) + " must hold numbers only");
      out.push_back(e.num);
    }
    return out;
  }
  std::vector<int> integers(const std::string& key) const {
    std::vector<int> out;
    for (double v : numbers(key)) {
      if (v != std::floor(v) || std::abs(v) > 1e9)
        fail(doc_.path, raw(key).line, where(key) + " must hold integers only");
      out.push_back(static_cast<int>(v));
    }
    return out;
  }

  void reject_unknown(const std::vector<std::string>& allowed) const {
    if (!table_) return;
    for (const auto& [key, value] : table_->kv) {
      bool ok = false;
      for (const auto& a : allowed) ok = ok || a == key;
      if (!ok) fail(doc_.path, value.line, "unknown key '" + section_ + "." + key + "'");
    }
  }

 private:
  std::string where(const std::string& key) const { return section_ + "." + key; }

  const Doc& doc_;
  std::string section_;
  const Table* table_;
};

int rep_rank(int m) { return 1 << ((m + 2) / 2); }

FieldSpec field_from_table(const Doc& doc, const std::string& name, const Table& t,
                           const RunConfig& cfg) {
  Reader rd(doc, name, &t);
  rd.reject_unknown({"mode", "component", "poly", "exp_weight"});
  FieldSpec fs;
  fs.line = t.line;
  int mode_dim = cfg.regime == Regime::Circle ? 1 : cfg.m - 1;
  fs.mode = rd.has("mode") ? rd.integers("mode") : std::vector<int>{};
  if (static_cast<int>(fs.mode.size()) != mode_dim)
    fail(doc.path, rd.line_of("mode"),
         name + ".mode must have length " + std::to_string(mode_dim));
  for (int k : fs.mode)
    if (std::abs(k) > 64) fail(doc.path, rd.line_of("mode"), name + ".mode entry too large");
  fs.component = rd.integer_or("component", 0);
  int ell = cfg.regime == Regime::Circle ? 2 : rep_rank(cfg.m);
  if (fs.component < 0 || fs.component >= ell)
    fail(doc.path, rd.line_of("component"),
         name + ".component must lie in [0, " + std::to_string(ell) + ")");
  fs.poly = rd.has("poly") ? rd.numbers("poly") : std::vector<double>{1.0};
  if (fs.poly.empty() || static_cast<int>(fs.poly.size()) > 17)
    fail(doc.path, rd.line_of("poly"), name + ".poly degree must lie in [0, 16]");
  if (cfg.regime == Regime::Circle && fs.poly.size() > 1)
    fail(doc.path, rd.line_of("poly"), name + ".poly must be constant for circle models");
  fs.exp_weight = rd.integer_or("exp_weight", 0);
  if (fs.exp_weight != 0 && cfg.regime != Regime::Warped)
    fail(doc.path, rd.line_of("exp_weight"), name + ".exp_weight requires regime = \"warped\"");
  if (std::abs(fs.exp_weight) > 8)
    fail(doc.path, rd.line_of("exp_weight"), name + ".exp_weight out of range");
  return fs;
}

Field build_field(const std::vector<FieldSpec>& specs, int mode_dim, int ell) {
  Field fld;
  fld.mode_dim = mode_dim;
  for (const auto& fs : specs) {
    std::vector<Vec> coeffs;
    coeffs.reserve(fs.poly.size());
    for (double c : fs.poly) {
      Vec v = Vec::Zero(ell);
      v(fs.component) = c;
      coeffs.push_back(v);
    }
    RadialFn fn = RadialFn::poly(VecPoly(std::move(coeffs)));
    if (fs.exp_weight != 0) fn = exp_shift(fn, fs.exp_weight);
    fld.add(fs.mode, fn);
  }
  return fld;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& path) {
  Doc doc = parse_doc(text, path);

  for (const auto& [name, table] : doc.sections)
    if (name != "model" && name != "oracle" && name != "output")
      fail(path, table.line, "unknown section [" + name + "]");
  for (const auto& [name, table] : doc.tables)
    if (name != "phi" && name != "rho") fail(path, table.line, "unknown table [[" + name + "]]");
  if (!doc.sections.count("model")) fail(path, 0, "missing [model] section");

  RunConfig cfg;
  cfg.path = path;

  Reader model(doc, "model", &doc.sections.at("model"));
  model.reject_unknown({"regime", "m", "delta1", "delta2", "varrho", "warp"});

  const std::string regime = model.str("regime");
  if (regime == "flat")
    cfg.regime = Regime::Flat;
  else if (regime == "twisted")
    cfg.regime = Regime::Twisted;
  else if (regime == "warped")
    cfg.regime = Regime::Warped;
  else if (regime == "circle")
    cfg.regime = Regime::Circle;
  else
    fail(path, model.line_of("regime"),
         "model.regime must be one of flat, twisted, warped, circle");

  cfg.m = model.integer_or("m", 1);
  if (cfg.regime == Regime::Circle) {
    if (cfg.m != 1) fail(path, model.line_of("m"), "circle models are one dimensional");
  } else if (cfg.m < 1 || cfg.m > 6) {
    fail(path, model.line_of("m"), "model.m must lie in [1, 6]");
  }
  cfg.delta1 = model.number_or("delta1", 0.0);
  cfg.delta2 = model.number_or("delta2", 0.0);

  if (model.has("varrho")) {
    if (cfg.regime != Regime::Twisted)
      fail(path, model.line_of("varrho"), "model.varrho requires regime = \"twisted\"");
    cfg.varrho = model.numbers("varrho");
  }
  if (cfg.regime == Regime::Twisted) {
    if (cfg.m < 2) fail(path, model.line_of("m"), "twisted models need m >= 2");
    if (static_cast<int>(cfg.varrho.size()) != cfg.m - 1)
      fail(path, model.line_of("varrho"),
           "model.varrho must have length " + std::to_string(cfg.m - 1));
  }

  if (model.has("warp")) {
    if (cfg.regime != Regime::Warped)
      fail(path, model.line_of("warp"), "model.warp requires regime = \"warped\"");
    cfg.warp = model.numbers("warp");
    if (static_cast<int>(cfg.warp.size()) > 17)
      fail(path, model.line_of("warp"), "model.warp degree must not exceed 16");
    Poly f(cfg.warp);
    if (std::abs(f(0.0)) > 1e-12 || std::abs(f(1.0)) > 1e-12)
      fail(path, model.line_of("warp"), "model.warp must vanish at r = 0 and r = 1");
  }
  if (cfg.regime == Regime::Warped) {
    if (cfg.m < 2) fail(path, model.line_of("m"), "warped models need m >= 2");
    if (cfg.delta1 != 0.0)
      fail(path, model.line_of("delta1"), "warped models force delta1 = 0");
    if (!model.has("warp")) fail(path, model.line_of("regime"), "model.warp is required");
  }

  for (const auto& [name, table] : doc.tables) {
    FieldSpec fs = field_from_table(doc, name, table, cfg);
    (name == "phi" ? cfg.phi : cfg.rho).push_back(fs);
  }
  if (cfg.phi.empty()) fail(path, 0, "at least one [[phi]] block is required");
  if (cfg.rho.empty()) fail(path, 0, "at least one [[rho]] block is required");

  const Table* oracle_table =
      doc.sections.count("oracle") ? &doc.sections.at("oracle") : nullptr;
  Reader oracle(doc, "oracle", oracle_table);
  oracle.reject_unknown({"grid_n", "t_min", "t_max", "samples", "bc"});
  cfg.grid_n = oracle.integer_or("grid_n", 512);
  if (cfg.grid_n < 64) fail(path, oracle.line_of("grid_n"), "oracle.grid_n must be >= 64");
  if (cfg.grid_n > 1 << 16) fail(path, oracle.line_of("grid_n"), "oracle.grid_n too large");
  cfg.t_min = oracle.number_or("t_min", 1e-5);
  cfg.t_max = oracle.number_or("t_max", 1e-2);
  if (!(cfg.t_min > 0)) fail(path, oracle.line_of("t_min"), "oracle.t_min must be positive");
  if (!(cfg.t_max > cfg.t_min))
    fail(path, oracle.line_of("t_max"), "oracle.t_max must exceed t_min");
  cfg.samples = oracle.integer_or("samples", 40);
  if (cfg.samples < 12) fail(path, oracle.line_of("samples"), "oracle.samples must be >= 12");
  cfg.bc = oracle.str_or("bc", "spectral");
  if (cfg.bc != "spectral" && cfg.bc != "mixed" && cfg.bc != "dirichlet")
    fail(path, oracle.line_of("bc"), "oracle.bc must be spectral, mixed, or dirichlet");

  const Table* output_table =
      doc.sections.count("output") ? &doc.sections.at("output") : nullptr;
  Reader output(doc, "output", output_table);
  output.reject_unknown({"format"});
  cfg.format = output.str_or("format", "json");
  if (cfg.format != "json" && cfg.format != "csv")
    fail(path, output.line_of("format"), "output.format must be json or csv");

  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), path);
}

DiracModel model_from(const RunConfig& cfg) {
  switch (cfg.regime) {
    case Regime::Flat:
      return assemble_flat_model(cfg.m, build_rep(cfg.m), cfg.delta1, cfg.delta2);
    case Regime::Twisted:
      return assemble_flat_model(cfg.m, build_rep(cfg.m), cfg.delta1, cfg.delta2, cfg.varrho);
    case Regime::Warped:
      return assemble_warped_model(cfg.m, build_rep(cfg.m), WarpProfile::make(Poly(cfg.warp)),
                                   cfg.delta2);
    case Regime::Circle:
      break;
  }
  throw ConfigError(cfg.path, 0, "circle models have no boundary; use the closed-form path");
}

CircleModel circle_from(const RunConfig& cfg) {
  if (cfg.regime != Regime::Circle)
    throw ConfigError(cfg.path, 0, "model.regime is not \"circle\"");
  return make_circle(cfg.delta1);
}

Field phi_from(const RunConfig& cfg) {
  int mode_dim = cfg.regime == Regime::Circle ? 1 : cfg.m - 1;
  int ell = cfg.regime == Regime::Circle ? 2 : rep_rank(cfg.m);
  return build_field(cfg.phi, mode_dim, ell);
}

Field rho_from(const RunConfig& cfg) {
  int mode_dim = cfg.regime == Regime::Circle ? 1 : cfg.m - 1;
  int ell = cfg.regime == Regime::Circle ? 2 : rep_rank(cfg.m);
  return build_field(cfg.rho, mode_dim, ell);
}

TimeGrid timegrid_from(const RunConfig& cfg) {
  TimeGrid tg;
  tg.t_min = cfg.t_min;
  tg.t_max = cfg.t_max;
  tg.samples = cfg.samples;
  return tg;
}

MixedBC mixed_from(const RunConfig& cfg, const DiracModel& md) {
  if (cfg.bc == "dirichlet") return dirichlet_bc(md);
  return equivalent_mixed_bc(md);
}

OracleBC oracle_bc_from(const RunConfig& cfg) {
  return cfg.bc == "spectral" ? OracleBC::Spectral : OracleBC::Mixed;
}

std::array<CoefficientResult, 3> closed_coefficients(const RunConfig& cfg) {
  std::array<CoefficientResult, 3> out;
  if (cfg.regime == Regime::Circle) {
    const CircleModel cm = circle_from(cfg);
    const Field phi = phi_from(cfg);
    const Field rho = rho_from(cfg);
    for (int n = 0; n <= 2; ++n)
      out[static_cast<size_t>(n)] = CoefficientResult{n, beta_closed(n, phi, rho, cm)};
    return out;
  }
  const DiracModel md = model_from(cfg);
  const Field phi = phi_from(cfg);
  const Field rho = rho_from(cfg);
  if (cfg.bc == "spectral") {
    for (int n = 0; n <= 2; ++n) out[static_cast<size_t>(n)] = beta_spectral(n, phi, rho, md);
  } else {
    const MixedBC bc = mixed_from(cfg, md);
    for (int n = 0; n <= 2; ++n) out[static_cast<size_t>(n)] = beta_mixed(n, phi, rho, md, bc);
  }
  return out;
}

HeatContentCurve oracle_curve(const RunConfig& cfg, int grid_multiplier) {
  if (cfg.regime == Regime::Circle) {
    const CircleModel cm = circle_from(cfg);
    const Field phi = phi_from(cfg);
    const Field rho = rho_from(cfg);
    HeatContentCurve curve;
    curve.bc_kind = "closed";
    std::vector<double> times{0.0};
    for (int i = 0; i < cfg.samples; ++i) {
      const double s = cfg.samples == 1 ? 0.0 : static_cast<double>(i) / (cfg.samples - 1);
      times.push_back(cfg.t_min * std::pow(cfg.t_max / cfg.t_min, s));
    }
    curve.t = times;
    curve.beta = closed_curve(cm, phi, rho, times);
    curve.steps = static_cast<int>(times.size()) - 1;
    return curve;
  }
  const DiracModel md = model_from(cfg);
  const Field phi = phi_from(cfg);
  const Field rho = rho_from(cfg);
  const TimeGrid tg = timegrid_from(cfg);
  if (cfg.bc == "spectral")
    return solve_heat(md, phi, rho, cfg.grid_n * grid_multiplier, tg, OracleBC::Spectral);
  const MixedBC bc = mixed_from(cfg, md);
  return solve_heat(md, phi, rho, cfg.grid_n * grid_multiplier, tg, OracleBC::Mixed, &bc);
}

}  // namespace apsheat
