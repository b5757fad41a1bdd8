/*
   Copyright 2026 The wreath-eulerian Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/// \file
///
/// Front end for `wreath-eulerian <poly|table|verify|report> [flags]`.
///
/// Exit codes: 0 success or verified, 1 verification counterexample,
/// 2 usage error, 3 resource cap refusal. Output is deterministic: no
/// timestamps, identical for any worker count.

#ifndef WREATH_CLI_HPP
#define WREATH_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wreath/enumerate.hpp"

namespace wreath::cli {

enum ExitCode : int { kOk = 0, kCounterexample = 1, kUsage = 2, kCapRefused = 3 };

enum class Command { poly, table, verify, report };
enum class Format { text, json, csv };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::poly;
  std::string target;  ///< verify subtarget
  unsigned alpha = 1;
  std::size_t n = 0;
  std::size_t max_n = 0;
  std::size_t max_k = 0;
  Statistic statistic = Statistic::flag;
  Domain domain = Domain::quotient();
  Format format = Format::text;
  BigInt cap = kDefaultElementCap;
  unsigned threads = 1;
  std::string out;
};

namespace detail {

inline BigInt parse_cap(const std::string& text, const char* source) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(std::string(source) + " must be a nonnegative decimal integer, got '" + text + "'");
  }
  return BigInt(text);
}

struct RawOptions {
  std::optional<long long> alpha, n, max_n, max_k, beta, threads;
  std::optional<std::string> stat, domain, format, cap, out;
};

inline void add_common(CLI::App* sub, RawOptions& o) {
  sub->add_option("--alpha", o.alpha, "number of colors");
  sub->add_option("--n", o.n, "permutation size");
  sub->add_option("--max-n", o.max_n, "largest n in a sweep");
  sub->add_option("--max-k", o.max_k, "largest k for the odd-n product identity");
  sub->add_option("--beta", o.beta, "fixed last color");
  sub->add_option("--stat", o.stat, "descent | flag");
  sub->add_option("--domain", o.domain, "quotient | full | fixed:BETA");
  sub->add_option("--format", o.format, "text | json | csv");
  sub->add_option("--cap", o.cap, "maximum number of enumerated elements");
  sub->add_option("--threads", o.threads, "worker count, 0 = auto");
  sub->add_option("--out", o.out, "write output to this file");
}

inline std::size_t require_positive(const std::optional<long long>& v, const char* flag, const char* name) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  if (*v < 1) throw UsageError(std::string(name) + " must be ≥ 1");
  return static_cast<std::size_t>(*v);
}

inline RunConfig finish(Command command, std::string target, const RawOptions& o,
                        const std::optional<std::string>& env_cap) {
  RunConfig c;
  c.command = command;
  c.target = std::move(target);

  const bool fixed_alpha = command == Command::verify && (c.target == "product-identity" || c.target == "abr-identity");
  if (fixed_alpha) {
    if (o.alpha && *o.alpha != 2) throw UsageError(c.target + " is defined for alpha = 2 only");
    c.alpha = 2;
  } else {
    if (!o.alpha) throw UsageError("--alpha is required");
    if (*o.alpha < 1) throw UsageError("alpha must be ≥ 1");
    if (*o.alpha > 1000) throw UsageError("alpha must be ≤ 1000");
    c.alpha = static_cast<unsigned>(*o.alpha);
  }

  switch (command) {
    case Command::poly:
      c.n = require_positive(o.n, "--n", "n");
      break;
    case Command::table:
    case Command::report:
      c.max_n = require_positive(o.max_n, "--max-n", "max-n");
      break;
    case Command::verify:
      if (c.target == "product-identity") {
        c.max_k = require_positive(o.max_k, "--max-k", "max-k");
      } else if (c.target == "abr-identity") {
        c.max_n = require_positive(o.max_n, "--max-n", "max-n");
      } else {
        c.n = require_positive(o.n, "--n", "n");
      }
      break;
  }
  if (c.n > 64 || c.max_n > 64 || c.max_k > 31) throw UsageError("size parameter out of range");

  if (o.stat) {
    if (*o.stat == "flag") c.statistic = Statistic::flag;
    else if (*o.stat == "descent") c.statistic = Statistic::colored_descent;
    else throw UsageError("--stat must be descent or flag, got '" + *o.stat + "'");
  }

  std::optional<unsigned> beta;
  if (o.beta) {
    if (*o.beta < 0 || *o.beta >= static_cast<long long>(c.alpha)) {
      throw UsageError("beta must satisfy 0 ≤ beta < alpha");
    }
    beta = static_cast<unsigned>(*o.beta);
  }
  if (o.domain) {
    const std::string& d = *o.domain;
    if (d == "quotient") {
      c.domain = Domain::quotient();
    } else if (d == "full") {
      c.domain = Domain::full();
    } else if (d == "fixed" || d.rfind("fixed:", 0) == 0) {
      std::optional<unsigned> b = beta;
      if (d.size() > 6) {
        const std::string digits = d.substr(6);
        if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6) {
          throw UsageError("malformed domain '" + d + "'");
        }
        const unsigned parsed = static_cast<unsigned>(std::stoul(digits));
        if (b && *b != parsed) throw UsageError("--beta disagrees with --domain " + d);
        b = parsed;
      }
      if (!b) throw UsageError("domain fixed needs a last color, use fixed:BETA or --beta");
      if (*b >= c.alpha) throw UsageError("beta must satisfy 0 ≤ beta < alpha");
      c.domain = Domain::fixed_last_color(*b);
    } else {
      throw UsageError("--domain must be quotient, full or fixed:BETA, got '" + d + "'");
    }
    if (beta && c.domain.kind != Domain::Kind::fixed_last_color) {
      throw UsageError("--beta applies only to the fixed domain");
    }
  } else if (beta) {
    c.domain = Domain::fixed_last_color(*beta);
  }
  if ((command == Command::table || command == Command::report) &&
      (c.domain != Domain::quotient() || c.statistic != Statistic::flag)) {
    throw UsageError(std::string(command == Command::table ? "table" : "report") +
                     " covers the flag statistic over the quotient only");
  }

  if (o.format) {
    if (*o.format == "text") c.format = Format::text;
    else if (*o.format == "json") c.format = Format::json;
    else if (*o.format == "csv") c.format = Format::csv;
    else throw UsageError("--format must be text, json or csv, got '" + *o.format + "'");
  }

  if (env_cap) c.cap = parse_cap(*env_cap, "WREATH_CAP");
  if (o.cap) c.cap = parse_cap(*o.cap, "--cap");

  if (o.threads) {
    if (*o.threads < 0 || *o.threads > 1024) throw UsageError("threads must be in 0..1024");
    c.threads = static_cast<unsigned>(*o.threads);
  }
  if (o.out) c.out = *o.out;
  return c;
}

}  // namespace detail

/// Parses arguments (without the program name). An unset env_cap means the
/// WREATH_CAP variable is absent. Throws UsageError or CLI::ParseError.
inline RunConfig parse_arguments(const std::vector<std::string>& args, const std::optional<std::string>& env_cap) {
  CLI::App app{"Descent statistics on colored permutation groups", "wreath-eulerian"};
  app.require_subcommand(1);
  detail::RawOptions opts;
  std::string target;
  auto* poly = app.add_subcommand("poly", "generating polynomial of a statistic");
  auto* table = app.add_subcommand("table", "table of F(n, alpha, k)");
  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  auto* report = app.add_subcommand("report", "shape verdicts for F_n^alpha");
  for (auto* sub : {poly, table, verify, report}) detail::add_common(sub, opts);
  verify->add_option("target", target, "symmetry | product-identity | abr-identity | coset-invariance | involution")
      ->required()
      ->check(CLI::IsMember({"symmetry", "product-identity", "abr-identity", "coset-invariance", "involution"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);

  Command command = Command::poly;
  if (table->parsed()) command = Command::table;
  else if (verify->parsed()) command = Command::verify;
  else if (report->parsed()) command = Command::report;
  return detail::finish(command, target, opts, env_cap);
}

namespace detail {

using Json = nlohmann::ordered_json;

inline Json coefficients_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& s : p.coefficient_strings()) arr.push_back(s);
  return arr;
}

inline std::string join(const IntPolynomial& p, const char* sep = " ") {
  std::string out;
  for (const auto& s : p.coefficient_strings()) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

inline EnumerationOptions enumeration_options(const RunConfig& c) { return {c.cap, c.threads}; }

inline int cmd_poly(const RunConfig& c, std::ostream& out) {
  const StatReport r = statistic_report(c.alpha, c.n, c.domain, c.statistic, enumeration_options(c));
  switch (c.format) {
    case Format::json: {
      Json j;
      j["command"] = "poly";
      j["alpha"] = r.alpha;
      j["n"] = r.n;
      j["stat"] = to_string(r.statistic);
      j["domain"] = r.domain.name();
      j["degree"] = r.polynomial.nominal_degree();
      j["coefficients"] = coefficients_json(r.polynomial);
      j["cardinality"] = r.cardinality.str();
      j["palindromic"] = r.palindromic;
      j["unimodal"] = r.unimodal;
      j["real_rooted"] = r.real_rooted;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "k,count\n";
      for (std::size_t k = 0; k <= r.polynomial.nominal_degree(); ++k) {
        out << k << ',' << r.polynomial.coefficient(k) << '\n';
      }
      break;
    case Format::text:
      out << "stat=" << to_string(r.statistic) << " domain=" << r.domain.name() << " alpha=" << r.alpha
          << " n=" << r.n << '\n'
          << "degree: " << r.polynomial.nominal_degree() << '\n'
          << "coefficients: " << join(r.polynomial) << '\n'
          << "cardinality: " << r.cardinality << '\n'
          << "palindromic: " << yes_no(r.palindromic) << '\n'
          << "unimodal: " << yes_no(r.unimodal) << '\n'
          << "real_rooted: " << yes_no(r.real_rooted) << '\n';
      break;
  }
  return kOk;
}

inline int cmd_table(const RunConfig& c, std::ostream& out) {
  const FlagTable t = flag_table(c.alpha, c.max_n, enumeration_options(c));
  switch (c.format) {
    case Format::json: {
      Json j;
      j["command"] = "table";
      j["alpha"] = c.alpha;
      j["max_n"] = c.max_n;
      j["stat"] = "flag";
      j["domain"] = "quotient";
      Json rows = Json::array();
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        Json row;
        row["n"] = i + 1;
        row["degree"] = t.rows[i].nominal_degree();
        row["coefficients"] = coefficients_json(t.rows[i]);
        row["cardinality"] = evaluate(t.rows[i], 1).str();
        rows.push_back(std::move(row));
      }
      j["rows"] = std::move(rows);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "n,k,count\n";
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        for (std::size_t k = 0; k <= t.rows[i].nominal_degree(); ++k) {
          out << i + 1 << ',' << k << ',' << t.rows[i].coefficient(k) << '\n';
        }
      }
      break;
    case Format::text:
      out << "F(n, alpha=" << c.alpha << ", k) for k = 0..alpha(n-1)\n";
      for (std::size_t i = 0; i < t.rows.size(); ++i) out << "n=" << i + 1 << ": " << join(t.rows[i]) << '\n';
      break;
  }
  return kOk;
}

inline int cmd_report(const RunConfig& c, std::ostream& out) {
  const auto opts = enumeration_options(c);
  for (std::size_t n = 1; n <= c.max_n; ++n) check_cap(c.alpha, n, Domain::quotient(), c.cap);
  std::vector<StatReport> rows;
  for (std::size_t n = 1; n <= c.max_n; ++n) rows.push_back(flag_eulerian_quotient(c.alpha, n, opts));
  switch (c.format) {
    case Format::json: {
      Json j;
      j["command"] = "report";
      j["alpha"] = c.alpha;
      j["max_n"] = c.max_n;
      j["stat"] = "flag";
      j["domain"] = "quotient";
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json row;
        row["n"] = r.n;
        row["degree"] = r.polynomial.nominal_degree();
        row["coefficients"] = coefficients_json(r.polynomial);
        row["cardinality"] = r.cardinality.str();
        row["palindromic"] = r.palindromic;
        row["unimodal"] = r.unimodal;
        row["real_rooted"] = r.real_rooted;
        arr.push_back(std::move(row));
      }
      j["rows"] = std::move(arr);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "alpha,n,degree,cardinality,palindromic,unimodal,real_rooted\n";
      for (const auto& r : rows) {
        out << r.alpha << ',' << r.n << ',' << r.polynomial.nominal_degree() << ',' << r.cardinality << ','
            << yes_no(r.palindromic) << ',' << yes_no(r.unimodal) << ',' << yes_no(r.real_rooted) << '\n';
      }
      break;
    case Format::text:
      out << "flag Eulerian polynomials over the quotient, alpha=" << c.alpha << '\n';
      for (const auto& r : rows) {
        out << "n=" << r.n << " degree=" << r.polynomial.nominal_degree() << " palindromic=" << yes_no(r.palindromic)
            << " unimodal=" << yes_no(r.unimodal) << " real_rooted=" << yes_no(r.real_rooted) << '\n';
      }
      break;
  }
  return kOk;
}

inline int emit_pointwise(const RunConfig& c, const PointwiseVerdict& v, std::ostream& out,
                          std::optional<bool> palindromic = std::nullopt) {
  const bool passed = v.verified && palindromic.value_or(true);
  if (c.format == Format::json) {
    Json j;
    j["command"] = "verify";
    j["target"] = c.target;
    j["alpha"] = c.alpha;
    j["n"] = c.n;
    j["passed"] = passed;
    j["checked"] = v.checked.str();
    if (palindromic) j["palindromic"] = *palindromic;
    j["counterexample"] = v.counterexample ? Json(v.counterexample->to_string()) : Json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << c.target << " alpha=" << c.alpha << " n=" << c.n << ": " << (passed ? "verified" : "FAILED") << " ("
        << v.checked << " elements)\n";
    if (palindromic && !*palindromic) out << "polynomial is not palindromic\n";
    if (v.counterexample) out << "counterexample: " << v.counterexample->to_string() << '\n';
  }
  return passed ? kOk : kCounterexample;
}

inline int emit_identity(const RunConfig& c, const std::vector<IdentityCheck>& checks, std::ostream& out) {
  const bool product = c.target == "product-identity";
  bool passed = true;
  for (const auto& ch : checks) passed = passed && ch.holds;
  if (c.format == Format::json) {
    Json j;
    j["command"] = "verify";
    j["target"] = c.target;
    j["alpha"] = 2;
    j[product ? "max_k" : "max_n"] = product ? c.max_k : c.max_n;
    j["passed"] = passed;
    Json arr = Json::array();
    for (const auto& ch : checks) {
      Json row;
      if (product) row["k"] = ch.parameter;
      row["n"] = ch.n;
      row["holds"] = ch.holds;
      row["enumerated"] = coefficients_json(ch.enumerated);
      row["expected"] = coefficients_json(ch.expected);
      arr.push_back(std::move(row));
    }
    j["checks"] = std::move(arr);
    out << j.dump(2) << '\n';
  } else {
    for (const auto& ch : checks) {
      out << c.target << ' ';
      if (product) out << "k=" << ch.parameter << ' ';
      out << "n=" << ch.n << ": " << (ch.holds ? "holds" : "FAILED") << '\n';
      if (!ch.holds) {
        out << "  enumerated: " << join(ch.enumerated) << '\n' << "  expected:   " << join(ch.expected) << '\n';
      }
    }
  }
  return passed ? kOk : kCounterexample;
}

inline int cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto opts = enumeration_options(c);
  if (c.target == "symmetry") {
    const auto v = verify_symmetry(c.alpha, c.n, opts);
    return emit_pointwise(c, v.pointwise, out, v.palindromic);
  }
  if (c.target == "involution") return emit_pointwise(c, verify_involution(c.alpha, c.n, opts), out);
  if (c.target == "product-identity") return emit_identity(c, verify_product_identity(c.max_k, opts), out);
  if (c.target == "abr-identity") return emit_identity(c, verify_abr_identity(c.max_n, opts), out);

  const auto v = verify_coset_invariance(c.alpha, c.n, opts);
  if (c.format == Format::json) {
    Json j;
    j["command"] = "verify";
    j["target"] = c.target;
    j["alpha"] = c.alpha;
    j["n"] = c.n;
    j["passed"] = v.verified;
    j["cosets"] = v.coset_count;
    j["sizes_equal_alpha"] = v.sizes_equal_alpha;
    j["descent_constant"] = v.descent_constant;
    j["over_cosets"] = coefficients_json(v.over_cosets);
    j["over_fixed_zero"] = coefficients_json(v.over_fixed_zero);
    j["counterexample"] = v.counterexample ? Json(v.counterexample->to_string()) : Json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << c.target << " alpha=" << c.alpha << " n=" << c.n << ": " << (v.verified ? "verified" : "FAILED") << " ("
        << v.coset_count << " cosets)\n";
    if (v.counterexample) out << "counterexample: " << v.counterexample->to_string() << '\n';
  }
  return v.verified ? kOk : kCounterexample;
}

}  // namespace detail

inline constexpr const char* kUsageText =
    "usage: wreath-eulerian <poly|table|verify|report> [--alpha A] [--n N] [--max-n N] [--max-k K]\n"
    "       [--beta B] [--stat descent|flag] [--domain quotient|full|fixed:B]\n"
    "       [--format text|json|csv] [--cap C] [--threads T] [--out PATH]\n"
    "verify targets: symmetry product-identity abr-identity coset-invariance involution\n";

/// Runs a parsed configuration. Resource-cap refusals return 3.
inline int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.out.empty()) {
    file.open(c.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open '" << c.out << "' for writing\n";
      return kUsage;
    }
    sink = &file;
  }
  // Render into a buffer so a refusal never leaves partial output behind.
  std::ostringstream buffer;
  int code = kOk;
  try {
    switch (c.command) {
      case Command::poly: code = detail::cmd_poly(c, buffer); break;
      case Command::table: code = detail::cmd_table(c, buffer); break;
      case Command::verify: code = detail::cmd_verify(c, buffer); break;
      case Command::report: code = detail::cmd_report(c, buffer); break;
    }
  } catch (const ResourceCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapRefused;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  *sink << buffer.str();
  sink->flush();
  return code;
}

/// Full entry point: parse then execute. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const std::optional<std::string>& env_cap) {
  RunConfig config;
  try {
    config = parse_arguments(args, env_cap);
  } catch (const CLI::CallForHelp&) {
    out << kUsageText;
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << kUsageText;
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return execute(config, out, err);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_cap;
  if (const char* v = std::getenv("WREATH_CAP")) env_cap = std::string(v);
  return run(args, out, err, env_cap);
}

}  // namespace wreath::cli

#endif  // WREATH_CLI_HPP
