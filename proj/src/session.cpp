#include "monoval/session.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include "monoval/birational.hpp"
#include "monoval/expr.hpp"
#include "monoval/rational.hpp"

namespace monoval {

namespace {

using ordered_json = nlohmann::ordered_json;

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

mpq_class session_rational(const ordered_json& j, const char* where) {
  if (!j.is_string()) throw SessionError(std::string(where) + " must be a string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error&) {
    throw SessionError(std::string(where) + ": malformed rational \"" +
                       j.get<std::string>() + "\"");
  }
}

}  // namespace

SessionConfig parse_session(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SessionError(std::string("invalid session JSON: ") + e.what());
  }
  if (!j.is_object()) throw SessionError("session must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "variables" && key != "prime_basis" && key != "weights" &&
        key != "shift" && key != "group")
      throw SessionError("unknown session field \"" + key + "\"");

  SessionConfig cfg{{}, {}, QMatrix(1, 1), std::nullopt, std::nullopt};

  if (!j.contains("variables") || !j["variables"].is_array() || j["variables"].empty())
    throw SessionError("\"variables\" must be a nonempty array of names");
  for (const auto& v : j["variables"]) {
    if (!v.is_string() || !valid_identifier(v.get<std::string>()))
      throw SessionError("variable names must match [A-Za-z][A-Za-z0-9_]*");
    cfg.variables.push_back(v.get<std::string>());
  }
  for (std::size_t a = 0; a < cfg.variables.size(); ++a)
    for (std::size_t b = a + 1; b < cfg.variables.size(); ++b)
      if (cfg.variables[a] == cfg.variables[b])
        throw SessionError("duplicate variable name \"" + cfg.variables[a] + "\"");

  if (!j.contains("prime_basis") || !j["prime_basis"].is_array() ||
      j["prime_basis"].empty())
    throw SessionError("\"prime_basis\" must be a nonempty array of primes");
  for (const auto& p : j["prime_basis"]) {
    if (!p.is_number_unsigned())
      throw SessionError("\"prime_basis\" entries must be positive integers");
    cfg.prime_basis.emplace_back(p.get<unsigned long>());
  }

  if (!j.contains("weights") || !j["weights"].is_array() || j["weights"].empty())
    throw SessionError("\"weights\" must be a nonempty array of rows");
  const int rows = static_cast<int>(j["weights"].size());
  const int cols = static_cast<int>(cfg.variables.size());
  if (rows != static_cast<int>(cfg.prime_basis.size()))
    throw SessionError("\"weights\" must have one row per basis prime");
  QMatrix weights(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j["weights"][static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw SessionError("\"weights\" rows must have one entry per variable");
    for (int c = 0; c < cols; ++c)
      weights.at(i, c) = session_rational(row[static_cast<std::size_t>(c)], "weights");
  }
  cfg.weights = std::move(weights);

  if (j.contains("shift")) {
    if (!j["shift"].is_array() || static_cast<int>(j["shift"].size()) != cols)
      throw SessionError("\"shift\" must have one entry per variable");
    std::vector<mpq_class> shift;
    for (const auto& s : j["shift"]) shift.push_back(session_rational(s, "shift"));
    cfg.shift = std::move(shift);
  }

  if (j.contains("group")) {
    if (!j["group"].is_array()) throw SessionError("\"group\" must be an array");
    std::vector<GroupElement> gens;
    for (const auto& g : j["group"]) {
      if (!g.is_object() || !g.contains("perm") || !g.contains("scalars"))
        throw SessionError("group generators need \"perm\" and \"scalars\"");
      for (const auto& [key, _] : g.items())
        if (key != "perm" && key != "scalars")
          throw SessionError("unknown group generator field \"" + key + "\"");
      GroupElement e;
      if (!g["perm"].is_array() || static_cast<int>(g["perm"].size()) != cols)
        throw SessionError("\"perm\" must list an image for every variable");
      for (const auto& p : g["perm"]) {
        if (!p.is_number_unsigned() || p.get<unsigned long>() < 1 ||
            p.get<unsigned long>() > static_cast<unsigned long>(cols))
          throw SessionError("\"perm\" entries are 1-based variable indices");
        e.perm.push_back(static_cast<int>(p.get<unsigned long>()) - 1);
      }
      if (!g["scalars"].is_array() || static_cast<int>(g["scalars"].size()) != cols)
        throw SessionError("\"scalars\" must list one entry per variable");
      for (const auto& s : g["scalars"])
        e.scalars.push_back(session_rational(s, "scalars"));
      gens.push_back(std::move(e));
    }
    cfg.group_generators = std::move(gens);
  }
  return cfg;
}

SessionConfig load_session(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SessionError("cannot open session file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str());
}

SessionContext make_context(SessionConfig config) {
  PrimeBasisPtr basis = make_prime_basis(config.prime_basis);
  MonomialValuation valuation(static_cast<int>(config.variables.size()), basis,
                              config.weights, config.shift);
  ResidueFieldDesc desc = residue_field_desc(valuation);
  std::optional<MonomialAction> action;
  if (config.group_generators)
    action = MonomialAction::generate(static_cast<int>(config.variables.size()),
                                      *config.group_generators);
  return SessionContext{std::move(config), std::move(valuation), std::move(desc),
                        std::move(action)};
}

// ---------------------------------------------------------------------------
// command rendering

namespace {

std::string trim_approx(std::string s) {
  std::size_t dot = s.find('.');
  if (dot == std::string::npos) return s;
  std::size_t last = s.find_last_not_of('0');
  if (last == dot) --last;
  return s.substr(0, last + 1);
}

std::string value_line(const Value& v) { return value_to_string(v); }

std::string approx_line(const Value& v, int digits) {
  return trim_approx(value_approx(v, digits));
}

/// The printable name of the j-th monomial coordinate: "x" or "x - 1".
std::string coordinate_string(const SessionContext& ctx, int j) {
  const auto& v = ctx.valuation;
  Poly c = Poly::variable(v.nvars(), j);
  if (v.has_shift())
    c = c - Poly::constant(v.nvars(), (*v.shift())[static_cast<std::size_t>(j)]);
  return poly_to_string(c, ctx.config.variables);
}

std::string provenance_string(const SessionContext& ctx, const Provenance& p) {
  if (std::holds_alternative<BaseVariable>(p)) return "base variable";
  const auto& b = std::get<BlowUpAdjunction>(p);
  return "blow-up of (" + poly_to_string(b.numerator, ctx.config.variables) + ", " +
         poly_to_string(b.denominator, ctx.config.variables) + ")";
}

void render_chart_text(const SessionContext& ctx, const Chart& chart, std::string& out) {
  out += "chart generators:\n";
  for (std::size_t i = 0; i < chart.size(); ++i) {
    const auto& gen = chart.generators()[i];
    out += "  g" + std::to_string(i + 1) + " = " +
           ratfn_to_string(gen.fn, ctx.config.variables) + "  [" +
           provenance_string(ctx, gen.provenance) +
           "] [value: " + value_line(ctx.valuation.value_of(gen.fn)) + "]\n";
  }
}

ordered_json chart_json(const SessionContext& ctx, const Chart& chart) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < chart.size(); ++i) {
    const auto& gen = chart.generators()[i];
    ordered_json g;
    g["name"] = "g" + std::to_string(i + 1);
    g["fn"] = ratfn_to_string(gen.fn, ctx.config.variables);
    g["provenance"] = provenance_string(ctx, gen.provenance);
    g["value"] = value_line(ctx.valuation.value_of(gen.fn));
    arr.push_back(std::move(g));
  }
  return arr;
}

void render_certificate_text(const SessionContext& ctx, const Certificate& cert,
                             std::string& out) {
  if (cert.entries.empty()) {
    out += "certificate: empty (residue field is k)\n";
    return;
  }
  out += "certificate:\n";
  for (std::size_t i = 0; i < cert.entries.size(); ++i) {
    const auto& e = cert.entries[i];
    out += "  " + ctx.desc.generator_name(static_cast<int>(i)) + " = residue(g" +
           std::to_string(e.generator_index + 1) + ")  [" +
           (e.verified ? "verified" : "UNVERIFIED") + "]\n";
  }
}

ordered_json certificate_json(const SessionContext& ctx, const Certificate& cert) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < cert.entries.size(); ++i) {
    const auto& e = cert.entries[i];
    ordered_json c;
    c["generator"] = ctx.desc.generator_name(static_cast<int>(i));
    c["chart_generator"] = "g" + std::to_string(e.generator_index + 1);
    c["verified"] = e.verified;
    arr.push_back(std::move(c));
  }
  return arr;
}

std::string ideal_string(const SessionContext& ctx, const std::vector<int>& vars) {
  if (vars.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ", ";
    out += coordinate_string(ctx, vars[i]);
  }
  return out + ")";
}

std::string residue_field_string(const SessionContext& ctx, const std::vector<int>& vars) {
  if (vars.empty()) return "k";
  std::string out = "k(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ", ";
    out += ctx.config.variables[static_cast<std::size_t>(vars[i])];
  }
  return out + ")";
}

std::string induced_image_string(const SessionContext& ctx,
                                 const ResidueActionElement& sigma) {
  const int k = ctx.desc.generator_count();
  std::string out;
  for (int i = 0; i < k; ++i) {
    if (i) out += ", ";
    ResidueElement img = apply(sigma, ResidueElement::generator(k, i));
    out += ctx.desc.generator_name(i) + " -> " + residue_to_string(img);
  }
  return out;
}

std::string finish(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string command_value(const SessionContext& ctx, const std::string& expr_text,
                          const CommandOptions& opts) {
  ParsedExpr pe = parse_expr(expr_text, ctx.config.variables);
  Value val = ctx.valuation.value_of(pe.ratfn());
  std::string canonical = parsed_to_string(pe, ctx.config.variables);
  if (opts.json) {
    ordered_json j;
    j["command"] = "value";
    j["expr"] = canonical;
    j["value"] = value_line(val);
    j["approx"] = approx_line(val, opts.digits);
    return finish(j);
  }
  return "expr: " + canonical + "\nvalue: " + value_line(val) +
         "\napprox: " + approx_line(val, opts.digits) + "\n";
}

std::string command_residue(const SessionContext& ctx, const std::string& expr_text,
                            const CommandOptions& opts) {
  ParsedExpr pe = parse_expr(expr_text, ctx.config.variables);
  RatFn f = pe.ratfn();
  Value val = ctx.valuation.value_of(f);
  ResidueElement e = residue_of(ctx.desc, f);
  std::string canonical = parsed_to_string(pe, ctx.config.variables);
  if (opts.json) {
    ordered_json j;
    j["command"] = "residue";
    j["expr"] = canonical;
    j["value"] = value_line(val);
    j["residue"] = residue_to_string(e);
    return finish(j);
  }
  return "expr: " + canonical + "\nvalue: " + value_line(val) +
         "\nresidue: " + residue_to_string(e) + "\n";
}

std::string command_rank(const SessionContext& ctx, const CommandOptions& opts) {
  AbhyankarReport r = abhyankar_check(ctx.valuation);
  if (opts.json) {
    ordered_json j;
    j["command"] = "rank";
    j["variables"] = r.nvars;
    j["rational_rank"] = r.rational_rank;
    j["residue_trdeg"] = r.trdeg;
    j["abhyankar_equality"] = r.equality;
    return finish(j);
  }
  return "variables: " + std::to_string(r.nvars) +
         "\nrational rank: " + std::to_string(r.rational_rank) +
         "\nresidue trdeg: " + std::to_string(r.trdeg) +
         "\nabhyankar equality: " + std::string(r.equality ? "true" : "false") + "\n";
}

std::string command_kernel(const SessionContext& ctx, const CommandOptions& opts) {
  const auto& desc = ctx.desc;
  const int k = desc.generator_count();
  if (opts.json) {
    ordered_json j;
    j["command"] = "kernel";
    j["rank"] = k;
    ordered_json basis = ordered_json::array();
    ordered_json gens = ordered_json::array();
    for (int i = 0; i < k; ++i) {
      ordered_json vec = ordered_json::array();
      for (const auto& x : desc.kernel().vector(i)) vec.push_back(x.get_str());
      basis.push_back(std::move(vec));
      ordered_json g;
      g["name"] = desc.generator_name(i);
      g["lift"] = ratfn_to_string(lift(desc, ResidueElement::generator(k, i)),
                                  ctx.config.variables);
      gens.push_back(std::move(g));
    }
    j["basis"] = std::move(basis);
    j["generators"] = std::move(gens);
    return finish(j);
  }
  std::string out = "kernel rank: " + std::to_string(k) + "\n";
  for (int i = 0; i < k; ++i) {
    out += "B" + std::to_string(i + 1) + ": (";
    const auto vec = desc.kernel().vector(i);
    for (std::size_t j = 0; j < vec.size(); ++j) {
      if (j) out += ", ";
      out += vec[j].get_str();
    }
    out += ")\n" + desc.generator_name(i) + " = " +
           ratfn_to_string(lift(desc, ResidueElement::generator(k, i)),
                           ctx.config.variables) +
           "\n";
  }
  return out;
}

std::string command_center(const SessionContext& ctx, const CommandOptions& opts) {
  CenterDesc c = ctx.valuation.center();
  if (opts.json) {
    ordered_json j;
    j["command"] = "center";
    j["center_exists"] = true;
    ordered_json ideal = ordered_json::array();
    for (int v : c.ideal_vars) ideal.push_back(coordinate_string(ctx, v));
    j["ideal"] = std::move(ideal);
    j["residue_field"] = residue_field_string(ctx, c.residue_field_vars);
    return finish(j);
  }
  return "center exists: true\nideal: " + ideal_string(ctx, c.ideal_vars) +
         "\nresidue field of center: " +
         residue_field_string(ctx, c.residue_field_vars) + "\n";
}

std::string command_realize(const SessionContext& ctx, const CommandOptions& opts) {
  auto [chart, cert] = realize_residue_field(ctx.valuation);
  if (opts.json) {
    ordered_json j;
    j["command"] = "realize";
    j["chart"] = chart_json(ctx, chart);
    j["certificate"] = certificate_json(ctx, cert);
    return finish(j);
  }
  std::string out;
  render_chart_text(ctx, chart, out);
  render_certificate_text(ctx, cert, out);
  return out;
}

std::string command_adjoin(const SessionContext& ctx, const std::string& expr_text,
                           const CommandOptions& opts) {
  ParsedExpr pe = parse_expr(expr_text, ctx.config.variables);
  Chart chart = blowup_adjoin(ctx.valuation, base_chart(ctx.valuation), pe.num, pe.den);
  ChartCenter cc = chart_center(ctx.valuation, ctx.desc, chart);
  auto names = [](const std::vector<int>& idx) {
    if (idx.empty()) return std::string("none");
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) s += ", ";
      s += "g" + std::to_string(idx[i] + 1);
    }
    return s;
  };
  if (opts.json) {
    ordered_json j;
    j["command"] = "adjoin";
    j["chart"] = chart_json(ctx, chart);
    ordered_json part;
    part["below_one"] = names(cc.below_one);
    part["equal_one"] = names(cc.equal_one);
    ordered_json res = ordered_json::array();
    for (std::size_t i = 0; i < cc.residue_gens.size(); ++i) {
      ordered_json r;
      r["generator"] = "g" + std::to_string(cc.equal_one[i] + 1);
      r["residue"] = residue_to_string(cc.residue_gens[i]);
      res.push_back(std::move(r));
    }
    part["residues"] = std::move(res);
    j["center_partition"] = std::move(part);
    return finish(j);
  }
  std::string out;
  render_chart_text(ctx, chart, out);
  out += "center partition:\n";
  out += "  below one: " + names(cc.below_one) + "\n";
  out += "  equal one: " + names(cc.equal_one) + "\n";
  if (!cc.residue_gens.empty()) {
    out += "residues of value-one generators:\n";
    for (std::size_t i = 0; i < cc.residue_gens.size(); ++i)
      out += "  g" + std::to_string(cc.equal_one[i] + 1) + ": " +
             residue_to_string(cc.residue_gens[i]) + "\n";
  }
  return out;
}

std::string command_group_check(const SessionContext& ctx,
                                const std::optional<std::string>& expr_text,
                                const CommandOptions& opts) {
  if (!ctx.action) throw DomainError("session declares no group");
  const MonomialAction& g = *ctx.action;
  bool invariant = is_invariant_valuation(g, ctx.valuation);

  ordered_json j;
  std::string out;
  out += "group order: " + std::to_string(g.order()) + "\n";
  out += "valuation invariant: " + std::string(invariant ? "true" : "false") + "\n";
  if (opts.json) {
    j["command"] = "group-check";
    j["group_order"] = g.order();
    j["valuation_invariant"] = invariant;
  }

  if (invariant && !expr_text) {
    InducedResidueAction induced = induced_residue_action(g, ctx.valuation, ctx.desc);
    if (ctx.desc.generator_count() == 0) {
      out += "induced action: trivial (residue field is k)\n";
      if (opts.json) j["induced_action"] = "trivial";
    } else {
      out += "induced action:\n";
      ordered_json arr = ordered_json::array();
      for (std::size_t i = 0; i < g.order(); ++i) {
        std::string img = induced_image_string(ctx, induced.element(i));
        out += "  sigma_" + std::to_string(i + 1) + ": " + img + "\n";
        arr.push_back(img);
      }
      if (opts.json) j["induced_action"] = std::move(arr);
    }
  }

  if (expr_text) {
    ParsedExpr pe = parse_expr(*expr_text, ctx.config.variables);
    RatFn f = pe.ratfn();
    QuotientResidueReport report =
        quotient_residue_report(g, ctx.valuation, ctx.desc, {f});
    const auto& entry = report.entries.front();
    std::string canonical = parsed_to_string(pe, ctx.config.variables);
    out += "expr: " + canonical + "\n";
    out += "residue: " + residue_to_string(entry.residue) + "\n";
    out += "fixed by induced action: " +
           std::string(entry.fixed_by_action ? "true" : "false") + "\n";
    if (opts.json) {
      j["expr"] = canonical;
      j["residue"] = residue_to_string(entry.residue);
      j["fixed_by_induced_action"] = entry.fixed_by_action;
    }
  }
  return opts.json ? finish(j) : out;
}

std::string command_report(const SessionContext& ctx, const CommandOptions& opts) {
  const MonomialValuation& v = ctx.valuation;
  const int n = v.nvars();

  ordered_json j;
  std::string out;

  {
    std::string vars;
    for (std::size_t i = 0; i < ctx.config.variables.size(); ++i) {
      if (i) vars += ", ";
      vars += ctx.config.variables[i];
    }
    std::string primes;
    for (std::size_t i = 0; i < ctx.config.prime_basis.size(); ++i) {
      if (i) primes += ", ";
      primes += ctx.config.prime_basis[i].get_str();
    }
    out += "variables: " + vars + "\n";
    out += "prime basis: " + primes + "\n";
    if (opts.json) {
      j["command"] = "report";
      j["variables"] = vars;
      j["prime_basis"] = primes;
    }
  }

  out += "variable values:\n";
  ordered_json vals = ordered_json::array();
  for (int c = 0; c < n; ++c) {
    std::string line = "|" + coordinate_string(ctx, c) + "| = " +
                       value_line(v.variable_value(c)) + " (approx " +
                       approx_line(v.variable_value(c), opts.digits) + ")";
    out += "  " + line + "\n";
    vals.push_back(line);
  }
  if (opts.json) j["variable_values"] = std::move(vals);

  out += "center exists: " + std::string(v.center_exists() ? "true" : "false") + "\n";
  if (opts.json) j["center_exists"] = v.center_exists();
  if (v.center_exists()) {
    CenterDesc c = v.center();
    out += "center ideal: " + ideal_string(ctx, c.ideal_vars) + "\n";
    out += "residue field of center: " + residue_field_string(ctx, c.residue_field_vars) +
           "\n";
    if (opts.json) {
      j["center_ideal"] = ideal_string(ctx, c.ideal_vars);
      j["center_residue_field"] = residue_field_string(ctx, c.residue_field_vars);
    }
  }

  AbhyankarReport ab = abhyankar_check(v);
  out += "rational rank: " + std::to_string(ab.rational_rank) + "\n";
  out += "residue trdeg: " + std::to_string(ab.trdeg) + "\n";
  out += "abhyankar equality: " + std::string(ab.equality ? "true" : "false") + "\n";
  if (opts.json) {
    j["rational_rank"] = ab.rational_rank;
    j["residue_trdeg"] = ab.trdeg;
    j["abhyankar_equality"] = ab.equality;
  }

  const int k = ctx.desc.generator_count();
  ordered_json gens = ordered_json::array();
  if (k == 0) {
    out += "residue generators: none (residue field is k)\n";
  } else {
    out += "residue generators:\n";
    for (int i = 0; i < k; ++i) {
      std::string line =
          ctx.desc.generator_name(i) + " = " +
          ratfn_to_string(lift(ctx.desc, ResidueElement::generator(k, i)),
                          ctx.config.variables);
      out += "  " + line + "\n";
      gens.push_back(line);
    }
  }
  if (opts.json) j["residue_generators"] = std::move(gens);

  if (v.center_exists()) {
    auto [chart, cert] = realize_residue_field(v);
    out += "realization:\n";
    std::string chart_text;
    render_chart_text(ctx, chart, chart_text);
    // indent the block under "realization:"
    std::istringstream lines(chart_text);
    std::string line;
    while (std::getline(lines, line)) out += "  " + line + "\n";
    std::string cert_text;
    render_certificate_text(ctx, cert, cert_text);
    std::istringstream clines(cert_text);
    while (std::getline(clines, line)) out += "  " + line + "\n";
    if (opts.json) {
      j["realization"] = chart_json(ctx, chart);
      j["certificate"] = certificate_json(ctx, cert);
    }
  }

  if (ctx.action) {
    const MonomialAction& g = *ctx.action;
    bool invariant = is_invariant_valuation(g, v);
    out += "group:\n";
    out += "  order: " + std::to_string(g.order()) + "\n";
    out += "  valuation invariant: " + std::string(invariant ? "true" : "false") + "\n";
    ordered_json gj;
    gj["order"] = g.order();
    gj["valuation_invariant"] = invariant;
    if (invariant && !v.has_shift()) {
      InducedResidueAction induced = induced_residue_action(g, v, ctx.desc);
      if (k == 0) {
        out += "  induced action: trivial (residue field is k)\n";
        gj["induced_action"] = "trivial";
      } else {
        out += "  induced action:\n";
        ordered_json arr = ordered_json::array();
        for (std::size_t i = 0; i < g.order(); ++i) {
          std::string img = induced_image_string(ctx, induced.element(i));
          out += "    sigma_" + std::to_string(i + 1) + ": " + img + "\n";
          arr.push_back(img);
        }
        gj["induced_action"] = std::move(arr);
      }
    }
    if (opts.json) j["group"] = std::move(gj);
  }

  return opts.json ? finish(j) : out;
}

}  // namespace monoval
