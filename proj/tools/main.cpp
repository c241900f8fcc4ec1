#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tanint/engine.hpp"
#include "tanint/oracle.hpp"
#include "tanint/render.hpp"
#include "tanint/sequences.hpp"
#include "tanint/series.hpp"
#include "tanint/sym_value.hpp"
#include "tanint/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNetwork = 3;
constexpr int kExitInternal = 4;

using tanint::OutputFormat;

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out.push_back(c);
  }
  out += "\"";
  return out;
}

nlohmann::json value_json(const tanint::SymValue& v) {
  return nlohmann::json::parse(v.to_json());
}

void print_value(const tanint::SymValue& v, int n, int p, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text:
      std::cout << tanint::render_text(v) << "\n";
      break;
    case OutputFormat::Json:
      std::cout << value_json(v).dump(2) << "\n";
      break;
    case OutputFormat::Csv:
      std::cout << "n,p,value\n"
                << n << "," << p << "," << csv_quote(tanint::render_text(v)) << "\n";
      break;
    case OutputFormat::Latex:
      std::cout << tanint::render_latex(v) << "\n";
      break;
  }
}

int run_compute(int n, int p, OutputFormat format) {
  tanint::MemoTable memo;
  print_value(tanint::compute(n, p, memo), n, p, format);
  return kExitOk;
}

int run_table(int n_max, int p_max, OutputFormat format) {
  tanint::MemoTable memo;
  const auto rows = tanint::table(n_max, p_max, memo);
  switch (format) {
    case OutputFormat::Text:
      for (const auto& [id, v] : rows) {
        std::cout << "I(" << id.n << "," << id.p << ") = " << tanint::render_text(v) << "\n";
      }
      break;
    case OutputFormat::Json: {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& [id, v] : rows) {
        out.push_back({{"n", id.n}, {"p", id.p}, {"value", value_json(v)}});
      }
      std::cout << out.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      std::cout << "n,p,value\n";
      for (const auto& [id, v] : rows) {
        std::cout << id.n << "," << id.p << "," << csv_quote(tanint::render_text(v)) << "\n";
      }
      break;
    case OutputFormat::Latex:
      for (const auto& [id, v] : rows) {
        std::cout << "I_{" << id.n << "}^{(" << id.p << ")} &= " << tanint::render_latex(v)
                  << " \\\\\n";
      }
      break;
  }
  return kExitOk;
}

int run_eval(int n, int p, int digits, OutputFormat format) {
  tanint::MemoTable memo;
  tanint::NumericContext ctx(digits);
  const tanint::SymValue v = tanint::compute(n, p, memo);
  const std::string decimal = tanint::eval_numeric(v, ctx).str(digits);
  switch (format) {
    case OutputFormat::Json:
      std::cout << nlohmann::json{{"n", n}, {"p", p}, {"digits", digits}, {"value", decimal}}
                       .dump(2)
                << "\n";
      break;
    case OutputFormat::Csv:
      std::cout << "n,p,digits,value\n" << n << "," << p << "," << digits << "," << decimal
                << "\n";
      break;
    default:
      std::cout << decimal << "\n";
      break;
  }
  return kExitOk;
}

int run_jn(int n, const std::string& eps_str, int digits, OutputFormat format) {
  const tanint::Real eps = tanint::Real::from_str(eps_str, tanint::prec_for_digits(digits));
  const tanint::Enclosure enc = tanint::j_series(n, eps, digits);
  const std::string lo = enc.lo.str(digits);
  const std::string hi = enc.hi.str(digits);
  const std::string width = (enc.hi - enc.lo).str(3);
  switch (format) {
    case OutputFormat::Json:
      std::cout << nlohmann::json{{"n", n},
                                  {"eps", eps_str},
                                  {"lo", lo},
                                  {"hi", hi},
                                  {"width", width},
                                  {"terms_used", enc.terms_used}}
                       .dump(2)
                << "\n";
      break;
    case OutputFormat::Csv:
      std::cout << "n,eps,lo,hi,terms_used\n"
                << n << "," << eps_str << "," << lo << "," << hi << "," << enc.terms_used << "\n";
      break;
    default:
      std::cout << "J_" << n << " in [" << lo << ", " << hi << "] (width " << width
                << ", terms_used " << enc.terms_used << ")\n";
      break;
  }
  return kExitOk;
}

int run_ln(int n, OutputFormat format) {
  tanint::MemoTable memo;
  const tanint::SymValue v = tanint::l_integral(n, memo);
  switch (format) {
    case OutputFormat::Text:
      std::cout << tanint::render_text(v) << "\n";
      break;
    case OutputFormat::Json:
      std::cout << nlohmann::json{{"n", n}, {"value", value_json(v)}}.dump(2) << "\n";
      break;
    case OutputFormat::Csv:
      std::cout << "n,value\n" << n << "," << csv_quote(tanint::render_text(v)) << "\n";
      break;
    case OutputFormat::Latex:
      std::cout << tanint::render_latex(v) << "\n";
      break;
  }
  return kExitOk;
}

int run_verify(int n_max, int p_max, int digits, const std::string& tol_str,
               OutputFormat format) {
  tanint::NumericContext ctx(digits);
  const tanint::Real tol = tanint::Real::from_str(tol_str, ctx.prec());
  tanint::MemoTable memo;
  const auto reports = tanint::verify(n_max, p_max, ctx, tol, memo);

  size_t passed = 0;
  for (const auto& r : reports) {
    if (r.pass) ++passed;
  }
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& r : reports) {
        out.push_back({{"n", r.id.n},
                       {"p", r.id.p},
                       {"exact", r.exact_numeric.str(digits)},
                       {"quadrature", r.quadrature.str(digits)},
                       {"abs_diff", r.abs_diff.str(3)},
                       {"pass", r.pass}});
      }
      std::cout << out.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      std::cout << "n,p,exact,quadrature,abs_diff,pass\n";
      for (const auto& r : reports) {
        std::cout << r.id.n << "," << r.id.p << "," << r.exact_numeric.str(digits) << ","
                  << r.quadrature.str(digits) << "," << r.abs_diff.str(3) << ","
                  << (r.pass ? "true" : "false") << "\n";
      }
      break;
    default:
      for (const auto& r : reports) {
        std::cout << "n=" << r.id.n << " p=" << r.id.p << " abs_diff=" << r.abs_diff.str(3)
                  << " " << (r.pass ? "pass" : "FAIL") << "\n";
      }
      std::cout << "verify: " << passed << "/" << reports.size() << " passed (digits=" << digits
                << ", tol=" << tol_str << ")\n";
      break;
  }
  return passed == reports.size() ? kExitOk : kExitVerifyFailed;
}

std::vector<tanint::Integer> parse_terms_list(const std::string& csv) {
  std::vector<tanint::Integer> terms;
  std::string token;
  for (size_t i = 0; i <= csv.size(); ++i) {
    if (i == csv.size() || csv[i] == ',') {
      if (token.empty()) throw std::invalid_argument("oeis: empty term in --terms");
      terms.emplace_back(token);
      token.clear();
    } else if (csv[i] != ' ') {
      token.push_back(csv[i]);
    }
  }
  return terms;
}

int run_oeis(const std::string& terms_csv, const std::string& atom_name, int p,
             const std::string& parity_name, int n_max, const std::string& normalize_name,
             bool offline, OutputFormat format, bool quiet) {
  std::vector<tanint::Integer> terms;
  if (!terms_csv.empty()) {
    terms = parse_terms_list(terms_csv);
  } else {
    tanint::CoeffQuery q;
    if (atom_name != "rational") {
      const auto atom = tanint::ConstAtom::from_name(atom_name);
      if (!atom) {
        throw std::invalid_argument("oeis: unknown atom \"" + atom_name +
                                    "\" (expected pi^J, ln2, pi*ln2, catalan, seed_Q or "
                                    "rational)");
      }
      q.atom = *atom;
    }
    q.p = p;
    const auto parity = tanint::parity_from_name(parity_name);
    if (!parity) throw std::invalid_argument("oeis: bad parity \"" + parity_name + "\"");
    q.parity = *parity;
    q.n_max = n_max;
    const auto mode = tanint::normalize_mode_from_name(normalize_name);
    if (!mode || *mode == tanint::NormalizeMode::Raw) {
      throw std::invalid_argument("oeis: --normalize must be abs, numerators, denominators or "
                                  "scaled_lcm");
    }
    tanint::MemoTable memo;
    terms = tanint::normalize(tanint::coeff_sequence(q, memo), *mode);
  }

  const tanint::OeisResult result = tanint::oeis_lookup(terms, offline);
  if (!quiet) {
    std::fprintf(stderr, "oeis: source=%s\n", result.from_cache ? "cache" : "network");
  }

  std::string query;
  for (size_t i = 0; i < result.query_terms.size(); ++i) {
    if (i != 0) query.push_back(',');
    query += result.query_terms[i].str();
  }
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json matches = nlohmann::json::array();
      for (const auto& m : result.matches) {
        matches.push_back({{"id", m.id}, {"name", m.name}});
      }
      std::cout << nlohmann::json{{"query", query}, {"matches", matches}}.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      std::cout << "id,name\n";
      for (const auto& m : result.matches) {
        std::cout << m.id << "," << csv_quote(m.name) << "\n";
      }
      break;
    default:
      std::cout << "query: " << query << "\n";
      if (result.matches.empty()) {
        std::cout << "no matches\n";
      } else {
        for (const auto& m : result.matches) {
          std::cout << m.id << " " << m.name << "\n";
        }
      }
      break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric evaluation of the integrals of x^p tan^n x over [0, pi/4], "
               "with series enclosures, verification and OEIS lookups"};
  app.require_subcommand(1);

  std::string format_name = "text";
  int digits = 30;
  bool quiet = false;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}))
      ->capture_default_str();
  app.add_option("--digits", digits, "Working decimal precision")
      ->check(CLI::Range(15, 100000))
      ->capture_default_str();
  app.add_flag("--quiet", quiet, "Suppress the version banner and progress notes");
  app.set_version_flag("--version", std::string("tanint ") + tanint::kVersion);

  int n = 0, p = 0, n_max = 0, p_max = 0;
  std::string eps_str = "1e-10";
  std::string tol_str = "1e-20";
  std::string terms_csv;
  std::string atom_name = "rational";
  std::string parity = "all";
  std::string normalize_mode = "numerators";
  bool offline = false;

  CLI::App* compute = app.add_subcommand("compute", "Exact value of one integral");
  compute->fallthrough();
  compute->add_option("--n", n, "Tangent power")->required()->check(CLI::NonNegativeNumber);
  compute->add_option("--p", p, "Monomial power")->required()->check(CLI::NonNegativeNumber);

  CLI::App* table = app.add_subcommand("table", "Exact values for all n <= n-max, p <= p-max");
  table->fallthrough();
  table->add_option("--n-max", n_max, "Largest tangent power")
      ->required()
      ->check(CLI::NonNegativeNumber);
  table->add_option("--p-max", p_max, "Largest monomial power")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* eval = app.add_subcommand("eval", "Decimal value of one integral");
  eval->fallthrough();
  eval->add_option("--n", n, "Tangent power")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--p", p, "Monomial power")->required()->check(CLI::NonNegativeNumber);

  CLI::App* jn = app.add_subcommand("jn", "Enclosure of the integral of tan^n x/(1-x)");
  jn->fallthrough();
  jn->add_option("--n", n, "Tangent power")->required()->check(CLI::NonNegativeNumber);
  jn->add_option("--eps", eps_str, "Enclosure width bound")->capture_default_str();

  CLI::App* ln_cmd = app.add_subcommand("ln", "Exact value of the integral of arctan^n x");
  ln_cmd->fallthrough();
  ln_cmd->add_option("--n", n, "Arctangent power")->required()->check(CLI::NonNegativeNumber);

  CLI::App* verify = app.add_subcommand("verify", "Exact values against quadrature");
  verify->fallthrough();
  verify->add_option("--n-max", n_max, "Largest tangent power")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--p-max", p_max, "Largest monomial power")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--tol", tol_str, "Pass tolerance")->capture_default_str();

  CLI::App* oeis = app.add_subcommand("oeis", "Look up a coefficient stream in the OEIS");
  oeis->fallthrough();
  oeis->add_option("--terms", terms_csv, "Comma-separated integer terms to search directly");
  oeis->add_option("--atom", atom_name,
                   "Coefficient stream: atom name (pi^J, ln2, pi*ln2, catalan, seed_Q) or "
                   "'rational'")
      ->capture_default_str();
  oeis->add_option("--p", p, "Monomial power of the stream")->check(CLI::NonNegativeNumber);
  oeis->add_option("--parity", parity, "Filter n by parity: even, odd or all")
      ->check(CLI::IsMember({"even", "odd", "all"}))
      ->capture_default_str();
  oeis->add_option("--n-max", n_max, "Largest tangent power in the stream")
      ->check(CLI::NonNegativeNumber);
  oeis->add_option("--normalize", normalize_mode,
                   "Integer projection: abs, numerators, denominators or scaled_lcm")
      ->capture_default_str();
  oeis->add_flag("--offline", offline, "Serve only cached results; never touch the network");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!quiet) std::fprintf(stderr, "tanint %s\n", tanint::kVersion);
  const OutputFormat format = *tanint::format_from_name(format_name);

  try {
    if (*compute) return run_compute(n, p, format);
    if (*table) return run_table(n_max, p_max, format);
    if (*eval) return run_eval(n, p, digits, format);
    if (*jn) return run_jn(n, eps_str, digits, format);
    if (*ln_cmd) return run_ln(n, format);
    if (*verify) return run_verify(n_max, p_max, digits, tol_str, format);
    if (*oeis) return run_oeis(terms_csv, atom_name, p, parity, n_max, normalize_mode, offline,
                               format, quiet);
  } catch (const tanint::OeisNetworkError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNetwork;
  } catch (const tanint::OeisCacheMiss& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNetwork;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
