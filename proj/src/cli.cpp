#include "eck/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "eck/errors.hpp"
#include "eck/identities.hpp"
#include "eck/positivity.hpp"
#include "eck/specialize.hpp"

namespace eck::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kDefaultMaxN = 8;
constexpr int kHardMaxN = 2 * static_cast<int>(kMaxRank) - 1;

struct RunConfig {
  std::string command;
  std::string kind;
  std::string n_spec;
  std::string formula;
  std::optional<int> k;
  std::string format;
  bool expand = false;
  bool timing = false;
  int max_n = kDefaultMaxN;
  std::uint64_t seed = EqualityOptions{}.seed;
  std::string out_file;
};

int default_max_n() {
  const char* env = std::getenv("ECK_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultMaxN;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("ECK_MAX_N must be an integer, got '" + std::string(env) + "'");
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--n: '" + s + "' is not an integer");
}

std::vector<int> parse_n(const std::string& spec, int min_n, int max_n) {
  if (spec.empty()) throw UsageError("--n is required");
  int lo = 0, hi = 0;
  if (const auto dots = spec.find(".."); dots != std::string::npos) {
    lo = parse_int(spec.substr(0, dots));
    hi = parse_int(spec.substr(dots + 2));
    if (lo > hi) throw UsageError("--n: empty range " + spec);
  } else {
    lo = hi = parse_int(spec);
  }
  if (lo < min_n) throw UsageError("--n must be >= " + std::to_string(min_n) + ", got " + std::to_string(lo));
  if (hi > max_n) {
    throw UsageError("--n " + std::to_string(hi) + " exceeds the bound " + std::to_string(max_n) +
                     " (raise it with --max-n or ECK_MAX_N)");
  }
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

SpaceKind require_kind(const std::string& s) {
  if (s.empty()) throw UsageError("--kind is required");
  auto k = parse_space_kind(s);
  if (!k) throw UsageError("unknown --kind '" + s + "'");
  return *k;
}

std::string point_name(int label) { return "p_" + std::to_string(label); }

std::string latex_poly(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    if (t.mono.ypow > 0) mono = t.mono.ypow == 1 ? "y" : "y^{" + std::to_string(t.mono.ypow) + "}";
    if (!t.mono.chr.is_zero()) mono += (mono.empty() ? "" : " ") + latex_monomial(t.mono.chr);
    std::string coef = c.get_den() == 1 ? c.get_num().get_str()
                                         : "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
    out += mono.empty() ? coef : (c == 1 ? "" : coef + " ") + mono;
  }
  return out;
}

std::string latex_ratexpr(const RatExpr& r) {
  if (r.den().empty()) return latex_poly(r.num());
  std::string den;
  for (const auto& w : r.den()) den += "(1 - " + latex_monomial(w) + ")";
  return "\\frac{" + latex_poly(r.num()) + "}{" + den + "}";
}

std::string latex_t_poly(const SparsePoly& p) {
  std::string s = t_polynomial_string(p);
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '^') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out += "^{" + s.substr(i + 1, j - i - 1) + "}";
      i = j - 1;
    } else {
      out += s[i];
    }
  }
  return out;
}

ordered_json params_json(const RunConfig& cfg) {
  ordered_json p;
  if (!cfg.kind.empty()) p["kind"] = cfg.kind;
  if (!cfg.n_spec.empty()) p["n"] = cfg.n_spec;
  if (!cfg.formula.empty()) p["formula"] = cfg.formula;
  if (cfg.k) p["k"] = *cfg.k;
  p["format"] = cfg.format;
  p["expand"] = cfg.expand;
  p["max_n"] = cfg.max_n;
  p["seed"] = cfg.seed;
  return p;
}

struct Output {
  std::ostringstream text;
  ordered_json results = ordered_json::array();
  bool ok = true;
};

double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void cmd_compute(const RunConfig& cfg, Output& o) {
  const SpaceKind kind = require_kind(cfg.kind);
  const int min_n = is_projective(kind) ? 2 : (kind == SpaceKind::CX || kind == SpaceKind::CCX ? 2 : 0);
  for (int n : parse_n(cfg.n_spec, min_n, cfg.max_n)) {
    const LocalClass c = is_projective(kind) ? projective_class(kind, n) : affine_class(kind, n);
    ordered_json points = ordered_json::array();
    const std::string head = std::string(name(kind)) + "_" + std::to_string(n);
    if (cfg.format == "text") o.text << head << "\n";
    for (std::size_t i = 0; i < c.values.size(); ++i) {
      const std::string pt = c.affine() ? "origin" : point_name(c.geometry.indices[i]);
      const std::string tex = cfg.expand ? latex_ratexpr(c.values[i]) : c.latex[i];
      points.push_back({{"point", pt}, {"value", to_string(c.values[i])}, {"latex", tex}});
      if (cfg.format == "text") {
        o.text << "  " << pt << ": " << to_string(c.values[i]) << "\n";
      } else if (cfg.format == "latex") {
        const std::string at = c.affine() ? "0" : "p_{" + std::to_string(c.geometry.indices[i]) + "}";
        o.text << std::string(name(kind)) << "_{" << n << "}\\big|_{" << at << "} = " << tex << "\n";
      }
    }
    o.results.push_back({{"kind", name(kind)}, {"n", n}, {"points", points}});
  }
}

void cmd_verify(const RunConfig& cfg, Output& o) {
  if (cfg.formula.empty()) throw UsageError("--formula is required");
  const auto f = parse_formula_id(cfg.formula);
  if (!f) throw UsageError("unknown --formula '" + cfg.formula + "'");
  if (cfg.k && *f != FormulaId::remark_k) throw UsageError("--k only applies to --formula remark_k");
  const EqualityOptions opts{EqualityOptions{}.prefilter_points, cfg.seed};
  for (int n : parse_n(cfg.n_spec, 2, cfg.max_n)) {
    const auto r = verify(*f, n, cfg.k, opts);
    o.ok = o.ok && r.verified;
    ordered_json checks = ordered_json::array();
    for (const auto& pc : r.per_point) checks.push_back({{"point", pc.point}, {"check", pc.check}, {"equal", pc.equal}});
    ordered_json j{{"formula", name(*f)}, {"n", n}};
    if (r.k) j["k"] = *r.k;
    j["verified"] = r.verified;
    j["convention_dependent"] = r.convention_dependent;
    j["per_point"] = checks;
    if (cfg.timing) j["millis"] = r.millis;
    o.results.push_back(j);

    if (cfg.format != "json") {
      o.text << name(*f) << " n=" << n;
      if (r.k) o.text << " k=" << *r.k;
      o.text << ": " << (r.verified ? "verified" : "FAILED") << " (" << r.per_point.size()
             << (r.per_point.size() == 1 ? " check" : " checks");
      if (r.convention_dependent) o.text << ", empty-set convention";
      o.text << ")";
      if (cfg.timing) o.text << " " << std::fixed << std::setprecision(1) << r.millis << " ms";
      o.text << "\n";
      for (const auto& pc : r.per_point) {
        if (!pc.equal) o.text << "  mismatch at " << pc.point << " [" << pc.check << "]\n";
      }
    }
  }
}

std::string exponents_string(const SPolynomial::Exponents& e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "]";
}

void cmd_certify(const RunConfig& cfg, Output& o) {
  const SpaceKind kind = require_kind(cfg.kind);
  if (kind != SpaceKind::CCQ && kind != SpaceKind::CQ) throw UsageError("certify takes --kind CCQ or CQ");
  for (int n : parse_n(cfg.n_spec, 2, cfg.max_n)) {
    const auto t0 = std::chrono::steady_clock::now();
    const Certificate c = certify(kind, n);
    const double ms = millis_since(t0);
    o.ok = o.ok && c.nonnegative && c.roundtrip_ok;

    ordered_json variables = ordered_json::array({"delta"});
    for (const auto& w : c.spoly.weights()) variables.push_back("S[" + weight_label(w) + "]");
    ordered_json j{{"kind", name(kind)}, {"n", n}, {"nonnegative", c.nonnegative}, {"roundtrip_ok", c.roundtrip_ok},
                   {"terms", c.spoly.terms().size()}, {"variables", variables}, {"denominator", c.spoly.den()}};
    if (c.witness) {
      j["witness"] = {{"exponents", c.witness->first},
                      {"coefficient", c.witness->second.get_str()},
                      {"term", term_string(c.spoly, c.witness->first, c.witness->second)}};
    } else {
      j["witness"] = nullptr;
    }
    if (cfg.expand) j["spoly"] = to_string(c.spoly);
    if (cfg.timing) j["millis"] = ms;
    o.results.push_back(j);

    if (cfg.format != "json") {
      o.text << name(kind) << " n=" << n << ": " << (c.nonnegative ? "nonnegative" : "NEGATIVE") << ", "
             << (c.roundtrip_ok ? "round trip exact" : "ROUND TRIP FAILED") << " (" << c.spoly.terms().size()
             << " terms)";
      if (cfg.timing) o.text << " " << std::fixed << std::setprecision(1) << ms << " ms";
      o.text << "\n";
      if (c.witness) {
        o.text << "  witness " << exponents_string(c.witness->first) << " "
               << term_string(c.spoly, c.witness->first, c.witness->second) << "\n";
      }
      if (cfg.expand) o.text << "  " << to_string(c.spoly) << "\n";
    }
  }
}

void cmd_csm(const RunConfig& cfg, Output& o) {
  const SpaceKind kind = cfg.kind.empty() ? SpaceKind::CCQ : require_kind(cfg.kind);
  if (is_projective(kind)) throw UsageError("csm takes an affine --kind");
  const int min_n = kind == SpaceKind::CX || kind == SpaceKind::CCX ? 2 : 1;
  const auto ns = parse_n(cfg.n_spec, min_n, cfg.max_n);
  for (int n : ns) {
    const SparsePoly p = csm(diagonalize(affine_class(kind, n)), n);
    ordered_json coeffs = ordered_json::array();
    for (const auto& t : p.terms()) coeffs.push_back({{"degree", t.mono.chr[0]}, {"coefficient", t.coef.get_str()}});
    ordered_json j{{"kind", name(kind)}, {"n", n}, {"csm", t_polynomial_string(p)}, {"coefficients", coeffs}};
    if (kind == SpaceKind::CCQ && n >= 2) {
      const SparsePoly shown = csm_display(n);
      j["display"] = t_polynomial_string(shown);
      j["matches_display"] = shown == p;
    }
    o.results.push_back(j);
    if (cfg.format != "json") {
      const std::string s = cfg.format == "latex" ? latex_t_poly(p) : t_polynomial_string(p);
      if (ns.size() > 1) o.text << "n=" << n << ": ";
      o.text << s << "\n";
    }
  }
}

void cmd_table(const RunConfig& cfg, Output& o) {
  if (cfg.max_n < 2) throw UsageError("--max-n must be >= 2");
  const EqualityOptions opts{EqualityOptions{}.prefilter_points, cfg.seed};
  const std::vector<std::pair<std::string, FormulaId>> formulas = {
      {"proj", FormulaId::proj},         {"con", FormulaId::con},
      {"dope", FormulaId::dope},         {"expl", FormulaId::expl},
      {"remark_k", FormulaId::remark_k}, {"closed_form", FormulaId::closed_form},
      {"milnor_div_y", FormulaId::milnor_div_y}, {"blowup", FormulaId::blowup_consistency}};
  std::vector<std::string> columns;
  for (const auto& [label, f] : formulas) columns.push_back(label);
  for (const char* c : {"pos_CCQ", "pos_CQ", "multidegree", "csm_display"}) columns.push_back(c);

  auto emit_row = [&](const std::string& first, const std::vector<std::string>& cells) {
    std::ostringstream line;
    line << std::left << std::setw(4) << first;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      line << std::setw(std::max<int>(static_cast<int>(columns[i].size()) + 2, 6)) << cells[i];
    }
    std::string s = line.str();
    s.erase(s.find_last_not_of(' ') + 1);
    o.text << s << "\n";
  };
  if (cfg.format != "json") emit_row("n", columns);
  for (int n = 2; n <= cfg.max_n; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<bool> row;
    for (const auto& [label, f] : formulas) row.push_back(verify(f, n, std::nullopt, opts).verified);
    for (SpaceKind kind : {SpaceKind::CCQ, SpaceKind::CQ}) {
      const Certificate c = certify(kind, n);
      row.push_back(c.nonnegative && c.roundtrip_ok);
    }
    const BottomTerm md = multidegree(diagonalize(affine_class(SpaceKind::CQ, n)), n);
    row.push_back(md.coefficient == 2 && md.degree == 1 - n);
    row.push_back(csm(diagonalize(affine_class(SpaceKind::CCQ, n)), n) == csm_display(n));

    ordered_json checks;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      checks[columns[i]] = static_cast<bool>(row[i]);
      o.ok = o.ok && row[i];
    }
    ordered_json j{{"n", n}, {"checks", checks}};
    if (cfg.timing) j["millis"] = millis_since(t0);
    o.results.push_back(j);
    if (cfg.format != "json") {
      std::vector<std::string> cells;
      for (bool b : row) cells.push_back(b ? "ok" : "FAIL");
      emit_row(std::to_string(n), cells);
    }
  }
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_n) {
  if (with_n) sub->add_option("--n", cfg.n_spec, "Dimension n or inclusive range a..b");
  sub->add_option("--format", cfg.format, "text, latex or json")->check(CLI::IsMember({"text", "latex", "json"}));
  sub->add_option("--max-n", cfg.max_n, "Upper bound on n (default 8, or ECK_MAX_N)");
  sub->add_option("--seed", cfg.seed, "Seed of the randomized equality prefilter");
  sub->add_option("--out", cfg.out_file, "Write the report to FILE instead of stdout");
  sub->add_flag("--timing", cfg.timing, "Include wall-clock timings (output is then not reproducible)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.max_n = default_max_n();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Localized equivariant Hirzebruch classes of quadratic cones", "eck"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* compute = app.add_subcommand("compute", "Localized class of a space");
  compute->add_option("--kind", cfg.kind, "P, Q, X, Qc, Xc, Cn, CQ, CX, CCQ, CCX or Cstar");
  compute->add_flag("--expand", cfg.expand, "Render LaTeX with expanded numerators");
  add_common(compute, cfg, true);

  auto* verify_cmd = app.add_subcommand("verify", "Check an identity fixed point by fixed point");
  verify_cmd->add_option("--formula", cfg.formula,
                         "proj, con, dope, expl, remark_k, closed_form, milnor_div_y or blowup_consistency");
  verify_cmd->add_option("--k", cfg.k, "Degeneration index for remark_k (default: all)");
  add_common(verify_cmd, cfg, true);

  auto* certify_cmd = app.add_subcommand("certify", "Positivity certificate for CCQ or CQ");
  certify_cmd->add_option("--kind", cfg.kind, "CCQ or CQ");
  certify_cmd->add_flag("--expand", cfg.expand, "Print the S-polynomial");
  add_common(certify_cmd, cfg, true);

  auto* csm_cmd = app.add_subcommand("csm", "Chern-Schwartz-MacPherson polynomial of an affine class");
  csm_cmd->add_option("--kind", cfg.kind, "Affine kind (default CCQ)");
  add_common(csm_cmd, cfg, true);

  auto* table = app.add_subcommand("table", "Run every check for n = 2..max-n");
  add_common(table, cfg, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    err << "error: " << msg << "\n";
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  if (cfg.format.empty()) cfg.format = (cfg.command == "verify" || cfg.command == "certify") ? "json" : "text";

  Output o;
  try {
    if (cfg.max_n > kHardMaxN) throw UsageError("--max-n is limited to " + std::to_string(kHardMaxN));
    if (cfg.command == "compute") {
      cmd_compute(cfg, o);
    } else if (cfg.command == "verify") {
      cmd_verify(cfg, o);
    } else if (cfg.command == "certify") {
      cmd_certify(cfg, o);
    } else if (cfg.command == "csm") {
      cmd_csm(cfg, o);
    } else {
      cmd_table(cfg, o);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::string report;
  if (cfg.format == "json") {
    ordered_json doc{{"command", cfg.command}, {"params", params_json(cfg)}, {"results", o.results},
                     {"version", kVersion}};
    report = doc.dump(2) + "\n";
  } else {
    report = o.text.str();
  }

  if (cfg.out_file.empty()) {
    out << report;
  } else {
    std::ofstream f(cfg.out_file);
    if (!f) {
      err << "error: cannot write " << cfg.out_file << "\n";
      return 2;
    }
    f << report;
  }
  return o.ok ? 0 : 1;
}

}  // namespace eck::cli
