#include "eulercf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "eulercf/brouncker.hpp"
#include "eulercf/derivation.hpp"
#include "eulercf/euler_transform.hpp"
#include "eulercf/oracle.hpp"

namespace eulercf {

namespace {

std::string dec(const Rational& v) { return v.to_decimal(17); }
std::string dec(double v) { return Rational::from_double(v).to_decimal(17); }
std::string bool_text(bool v) { return v ? "true" : "false"; }

Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::from_string(text);
  } catch (const PreconditionError& e) {
    throw PreconditionError("bad value for " + flag + ": " + e.what());
  }
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string token = text.substr(start, comma == std::string::npos ? comma : comma - start);
    out.push_back(parse_rational(token, "--r"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct ResolvedParams {
  SeriesParams series;
  Rational m, n, x;  // the (a, b) form maps to (a, b, 1)
};

ResolvedParams resolve_params(const RunConfig& c) {
  const bool has_mnx = c.m.has_value() || c.n.has_value() || c.x.has_value();
  const bool has_ab = c.a.has_value() || c.b.has_value();
  if (has_mnx == has_ab)
    throw PreconditionError("give exactly one of (--m --n --x) or (--a --b)");
  ResolvedParams out;
  if (has_mnx) {
    if (!(c.m && c.n && c.x)) throw PreconditionError("--m, --n, --x must all be given");
    out.m = parse_rational(*c.m, "--m");
    out.n = parse_rational(*c.n, "--n");
    out.x = parse_rational(*c.x, "--x");
    out.series = params_from_mnx(out.m, out.n, out.x);
  } else {
    if (!(c.a && c.b)) throw PreconditionError("--a and --b must both be given");
    out.m = parse_rational(*c.a, "--a");
    out.n = parse_rational(*c.b, "--b");
    out.x = Rational(1);
    out.series = SeriesParams{out.m, out.n};
  }
  return out;
}

// Everything a run needs to know about the config that is not caught by the
// flag parser itself; violations are usage errors.
void validate_config(const RunConfig& c) {
  if (c.depth < 1) throw PreconditionError("--depth must be >= 1");
  if (!(c.tol > 0.0)) throw PreconditionError("--tol must be positive");
  if (c.command == "sum" || c.command == "convergents" || c.command == "contract") {
    resolve_params(c);
  } else if (c.command == "brouncker") {
    if (c.preset.has_value() == c.r_list.has_value())
      throw PreconditionError("give exactly one of --preset or --r");
    if (c.r_list) parse_rational_list(*c.r_list);
  } else if (c.command == "verify") {
    if (c.term_cap < 2) throw PreconditionError("--cap must be >= 2");
  } else {
    throw PreconditionError("unknown command '" + c.command + "'");
  }
}

void echo_params(Report& rep, const RunConfig& c) {
  if (c.m) rep.inputs.emplace_back("m", *c.m);
  if (c.n) rep.inputs.emplace_back("n", *c.n);
  if (c.x) rep.inputs.emplace_back("x", *c.x);
  if (c.a) rep.inputs.emplace_back("a", *c.a);
  if (c.b) rep.inputs.emplace_back("b", *c.b);
}

void put_oracle(Report& rep, const OracleValue& value, const std::string& tol_text) {
  rep.oracle.emplace_back("method", std::string(to_string(value.method)));
  rep.oracle.emplace_back("value", value.decimal);
  rep.oracle.emplace_back("error_estimate", dec(value.error_estimate));
  rep.oracle.emplace_back("tol", tol_text);
}

// Exact rational the oracle value stands for: the closed form itself when
// exact, the binary double otherwise.
Rational oracle_exact(const OracleValue& value) {
  if (value.method == OracleMethod::quadrature) return Rational::from_double(value.approx);
  return Rational::from_decimal(value.decimal);
}

// Number of decimal places d (0..15) with |diff| < 0.5 * 10^-d.
unsigned agreement_digits(const Rational& diff) {
  if (diff.is_zero()) return 15;
  for (int d = 15; d >= 0; --d) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(d));
    if (diff < Rational(mpz_class(1), 2 * scale)) return static_cast<unsigned>(d);
  }
  return 0;
}

Report cmd_sum(const RunConfig& c) {
  auto params = resolve_params(c);
  Report rep;
  rep.command = "sum";
  echo_params(rep, c);
  rep.inputs.emplace_back("depth", std::to_string(c.depth));
  rep.inputs.emplace_back("tol", c.tol_text);

  ContinuedFraction cf = build_cf(params.series).cf;
  Bracket br = bracket(cf, c.depth);
  Rational mid = midpoint(cf, c.depth);
  OracleValue ov = borel_integral(params.m, params.n, params.x, c.tol);
  Rational target = oracle_exact(ov);
  Rational diff = (mid - target).abs();

  rep.columns = {"depth", "bracket_lo", "bracket_hi", "width",
                 "midpoint", "abs_error", "agreement_digits"};
  rep.rows.push_back({std::to_string(c.depth), br.lo.to_string(), br.hi.to_string(),
                      dec(br.width()), dec(mid), dec(diff),
                      std::to_string(agreement_digits(diff))});
  put_oracle(rep, ov, c.tol_text);
  rep.checks.push_back({"oracle_in_bracket", br.contains(target)});
  return rep;
}

Report cmd_convergents(const RunConfig& c) {
  auto params = resolve_params(c);
  Report rep;
  rep.command = "convergents";
  echo_params(rep, c);
  rep.inputs.emplace_back("depth", std::to_string(c.depth));
  rep.inputs.emplace_back("tol", c.tol_text);

  ContinuedFraction cf = build_cf(params.series).cf;
  auto conv = convergents(cf, c.depth);
  OracleValue ov = borel_integral(params.m, params.n, params.x, c.tol);
  Rational target = oracle_exact(ov);

  rep.columns = {"depth", "h", "k", "value", "decimal", "error"};
  for (unsigned d = 1; d <= c.depth; ++d) {
    const Convergent& cv = conv[d];
    rep.rows.push_back({std::to_string(d), cv.h.to_string(), cv.k.to_string(),
                        cv.value.to_string(), dec(cv.value), dec(cv.value - target)});
  }
  put_oracle(rep, ov, c.tol_text);
  if (c.depth >= 2) {
    try {
      rep.checks.push_back({"oracle_in_bracket", bracket(cf, c.depth).contains(target)});
    } catch (const PreconditionError&) {
      // sign-mixed fraction: no alternation enclosure to check
    }
  }
  return rep;
}

Report cmd_contract(const RunConfig& c) {
  auto params = resolve_params(c);
  Report rep;
  rep.command = "contract";
  echo_params(rep, c);
  rep.inputs.emplace_back("depth", std::to_string(c.depth));

  ContinuedFraction contracted = build_contracted(params.series);
  ContinuedFraction s_form = build_cf(params.series).cf;
  auto cconv = convergents(contracted, c.depth);
  auto sconv = convergents(s_form, 2 * c.depth + 2);

  rep.columns = {"k", "num", "den", "value", "decimal"};
  for (unsigned k = 1; k <= c.depth; ++k) {
    CFPair p = contracted.pair(k);
    rep.rows.push_back({std::to_string(k), p.num.to_string(), p.den.to_string(),
                        cconv[k].value.to_string(), dec(cconv[k].value)});
  }
  bool product_one = true;
  for (unsigned d = 0; d <= c.depth; ++d)
    product_one = product_one && cconv[d].value * sconv[2 * d + 2].value == Rational(1);
  rep.checks.push_back({"even_convergents_product_one", product_one});
  return rep;
}

Report cmd_brouncker(const RunConfig& c) {
  Report rep;
  rep.command = "brouncker";
  if (c.preset) rep.inputs.emplace_back("preset", *c.preset);
  if (c.r_list) rep.inputs.emplace_back("r", *c.r_list);
  rep.inputs.emplace_back("depth", std::to_string(c.depth));

  RSequence r = c.preset
                    ? (*c.preset == "odds" ? RSequence::odds() : RSequence::naturals())
                    : RSequence::from_list(parse_rational_list(*c.r_list));
  ContinuedFraction cf = cf_from_r(r);
  auto conv = convergents(cf, c.depth);
  auto sums = series_sum_from_r(r, c.depth);

  rep.columns = {"k", "num", "den", "convergent", "partial_sum", "equal"};
  bool all_equal = true;
  for (unsigned k = 1; k <= c.depth; ++k) {
    CFPair p = cf.pair(k);
    bool equal = conv[k].value == sums[k - 1];
    all_equal = all_equal && equal;
    rep.rows.push_back({std::to_string(k), p.num.to_string(), p.den.to_string(),
                        conv[k].value.to_string(), sums[k - 1].to_string(), bool_text(equal)});
  }
  rep.checks.push_back({"convergents_equal_partial_sums", all_equal});
  if (c.preset) {
    OracleValue limit = reference_value(*c.preset == "odds" ? "pi_over_4" : "ln2");
    put_oracle(rep, limit, c.tol_text);
    if (c.depth >= 2) {
      Rational target = Rational::from_decimal(limit.decimal);
      rep.checks.push_back({"bracket_contains_limit", bracket(cf, c.depth).contains(target)});
    }
  }
  return rep;
}

Report cmd_verify(const RunConfig& c) {
  Report rep;
  rep.command = "verify";
  rep.inputs.emplace_back("max_r", std::to_string(c.max_r));
  rep.inputs.emplace_back("cap", std::to_string(c.term_cap));

  rep.columns = {"kind", "r", "term_cap", "holds"};
  bool all_hold = true;
  for (unsigned r = 0; r <= c.max_r; ++r) {
    for (IdentityKind kind : {IdentityKind::I1, IdentityKind::I2}) {
      IdentityReport report = verify_identity(kind, r, c.term_cap);
      all_hold = all_hold && report.holds;
      rep.rows.push_back({kind == IdentityKind::I1 ? "I1" : "I2", std::to_string(r),
                          std::to_string(c.term_cap), bool_text(report.holds)});
    }
  }

  bool chain_ok = true;
  const unsigned chain_depth = 2 * c.max_r + 1;
  try {
    ChainTrace trace = verify_chain(chain_depth, c.term_cap);
    for (unsigned k = 1; k <= chain_depth; ++k)
      chain_ok = chain_ok &&
                 trace.emitted_numerators[k - 1] == euler_cf_coefficient_formal(k, 1);
  } catch (const IdentityError&) {
    chain_ok = false;
  }
  rep.checks.push_back({"identities_hold", all_hold});
  rep.checks.push_back({"chain_matches_cf_rule", chain_ok});
  return rep;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

Report run_command(const RunConfig& config) {
  validate_config(config);
  if (config.command == "sum") return cmd_sum(config);
  if (config.command == "convergents") return cmd_convergents(config);
  if (config.command == "contract") return cmd_contract(config);
  if (config.command == "brouncker") return cmd_brouncker(config);
  return cmd_verify(config);
}

int exit_code_for(const Report& report) {
  for (const auto& check : report.checks)
    if (!check.pass) return kExitVerifyFailed;
  return kExitOk;
}

std::string render_text(const Report& rep) {
  std::ostringstream os;
  os << "command: " << rep.command << "\n";
  if (!rep.inputs.empty()) {
    os << "inputs:\n";
    for (const auto& [key, value] : rep.inputs) os << "  " << key << " = " << value << "\n";
  }
  if (!rep.columns.empty()) {
    std::vector<std::size_t> width(rep.columns.size());
    for (std::size_t i = 0; i < rep.columns.size(); ++i) width[i] = rep.columns[i].size();
    for (const auto& row : rep.rows)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto emit = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << "  ";
        os << cells[i];
        if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size(), ' ');
      }
      os << "\n";
    };
    os << "\n";
    emit(rep.columns);
    std::size_t total = 0;
    for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i ? 2 : 0);
    os << std::string(total, '-') << "\n";
    for (const auto& row : rep.rows) emit(row);
  }
  if (!rep.oracle.empty()) {
    os << "\noracle:\n";
    for (const auto& [key, value] : rep.oracle) os << "  " << key << " = " << value << "\n";
  }
  if (!rep.checks.empty()) {
    os << "\nchecks:\n";
    for (const auto& check : rep.checks)
      os << "  [" << (check.pass ? "ok" : "FAIL") << "] " << check.name << "\n";
  }
  return os.str();
}

std::string render_csv(const Report& rep) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ",";
      os << csv_escape(cells[i]);
    }
    os << "\n";
  };
  emit(rep.columns);
  for (const auto& row : rep.rows) emit(row);
  os << "\nkey,value\n";
  emit({"command", rep.command});
  for (const auto& [key, value] : rep.inputs) emit({"input." + key, value});
  for (const auto& [key, value] : rep.oracle) emit({"oracle." + key, value});
  for (const auto& check : rep.checks) emit({"check." + check.name, bool_text(check.pass)});
  return os.str();
}

std::string render_json(const Report& rep) {
  nlohmann::ordered_json j;
  j["command"] = rep.command;
  auto& inputs = j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : rep.inputs) inputs[key] = value;
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rep.rows) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) jrow[rep.columns[i]] = row[i];
    rows.push_back(std::move(jrow));
  }
  auto& oracle = j["oracle"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : rep.oracle) oracle[key] = value;
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& check : rep.checks)
    checks.push_back(nlohmann::ordered_json{{"name", check.name}, {"pass", check.pass}});
  return j.dump(2) + "\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string format_text = "text";

  CLI::App app{"exact-rational summation of factorial-like alternating series via "
               "continued fractions"};
  app.name("eulercf");
  app.require_subcommand(1);

  std::string m, n, x, a, b, preset, r_list;
  auto add_series = [&](CLI::App* cmd) {
    cmd->add_option("--m", m, "series parameter m (rational, e.g. 1 or 3/7)");
    cmd->add_option("--n", n, "series parameter n (rational)");
    cmd->add_option("--x", x, "argument x (rational)");
    cmd->add_option("--a", a, "series parameter a = m*x (rational)");
    cmd->add_option("--b", b, "series parameter b = n*x (rational)");
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--depth", config.depth, "truncation depth");
    cmd->add_option("--tol", config.tol_text, "oracle tolerance (default 1e-10)");
    cmd->add_option("--format", format_text, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
  };

  CLI::App* sum = app.add_subcommand("sum", "bracket the series value and compare to the oracle");
  add_series(sum);
  add_common(sum);
  CLI::App* conv = app.add_subcommand("convergents", "exact convergent table with oracle errors");
  add_series(conv);
  add_common(conv);
  CLI::App* contract =
      app.add_subcommand("contract", "even contraction coefficients and equality check");
  add_series(contract);
  add_common(contract);
  CLI::App* brouncker =
      app.add_subcommand("brouncker", "telescoping fraction of an increasing sequence");
  brouncker->add_option("--preset", preset, "built-in sequence")
      ->check(CLI::IsMember({"odds", "naturals"}));
  brouncker->add_option("--r", r_list, "explicit sequence, e.g. \"1,3/2,2\"");
  add_common(brouncker);
  CLI::App* verify = app.add_subcommand("verify", "check the rewrite identities and the chain");
  verify->add_option("--max-r", config.max_r, "largest ladder index to check");
  verify->add_option("--cap", config.term_cap, "series terms per identity check");
  add_common(verify);

  std::vector<const char*> argv;
  argv.push_back("eulercf");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* parsed = app.get_subcommands().front();
  config.command = parsed->get_name();
  auto given = [&](const std::string& flag) {
    const CLI::Option* opt = parsed->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--m")) config.m = m;
  if (given("--n")) config.n = n;
  if (given("--x")) config.x = x;
  if (given("--a")) config.a = a;
  if (given("--b")) config.b = b;
  if (given("--preset")) config.preset = preset;
  if (given("--r")) config.r_list = r_list;
  if (format_text == "csv")
    config.format = OutputFormat::csv;
  else if (format_text == "json")
    config.format = OutputFormat::json;

  {
    char* end = nullptr;
    config.tol = std::strtod(config.tol_text.c_str(), &end);
    if (end != config.tol_text.c_str() + config.tol_text.size() || !(config.tol > 0.0)) {
      err << "error: --tol must be a positive number\n";
      return kExitUsage;
    }
  }
  try {
    validate_config(config);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Report report;
  try {
    report = run_command(config);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }

  switch (config.format) {
    case OutputFormat::text: out << render_text(report); break;
    case OutputFormat::csv: out << render_csv(report); break;
    case OutputFormat::json: out << render_json(report); break;
  }
  return exit_code_for(report);
}

}  // namespace eulercf
