#include "ratrec/cli.hpp"

#include "ratrec/convert.hpp"
#include "ratrec/errors.hpp"
#include "ratrec/parser.hpp"
#include "ratrec/printer.hpp"
#include "ratrec/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ratrec {

namespace {

using nlohmann::json;

struct UsageError : Error {
  using Error::Error;
};

struct ViolationsFound : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

/// Equation text with '#' comment lines removed.
std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (trim(line).starts_with('#')) continue;
    out += line;
    out += '\n';
  }
  return trim(out);
}

HolonomicEq holonomic_input(const std::string& text) {
  const std::string body = strip_comments(text);
  if (body.starts_with('{')) {
    json doc;
    try {
      doc = json::parse(body);
    } catch (const json::exception& e) {
      throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    const AnyEquation any = equation_from_json(doc);
    if (auto* h = std::get_if<HolonomicEq>(&any)) return *h;
    if (auto* p = std::get_if<DiffPoly>(&any)) return holonomic_from_diffpoly(*p);
    throw UsageError("expected a holonomic equation, got a ratrec equation");
  }
  HolonomicEq h = holonomic_from_diffpoly(parse_equation(body));
  if (h.is_homogeneous() && h.order() == 0) {
    throw UsageError("equation of order 0 without inhomogeneous part has only the zero solution");
  }
  return h;
}

std::vector<Rational> parse_inits(const std::string& text) {
  std::vector<Rational> out;
  if (trim(text).empty()) return out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(parse_rational(trim(item)));
    } catch (const std::invalid_argument&) {
      throw UsageError("invalid initial value '" + trim(item) + "'");
    }
  }
  return out;
}

std::string terms_text(const SequenceTable& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size() && t.defined(i); ++i) {
    if (i) s += ", ";
    s += to_string(t.at(i));
  }
  return s;
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream s;
  s << "verify: n = " << r.range.first << ".." << r.range.last << ": " << r.hold_count << " hold, "
    << r.singular_indices.size() << " singular, " << r.violations.size() << " violations";
  for (std::size_t i = 0; i < std::min<std::size_t>(r.violations.size(), 5); ++i) {
    const auto& v = r.violations[i];
    s << "\n  n = " << v.index << ": lhs " << to_string(v.lhs) << ", rhs " << to_string(v.rhs);
  }
  return s.str();
}

json report_json(const VerificationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"index", x.index}, {"lhs", to_string(x.lhs)}, {"rhs", to_string(x.rhs)}});
  return {{"range", {r.range.first, r.range.last}},
          {"hold", r.hold_count},
          {"singular", r.singular_indices},
          {"violations", std::move(v)}};
}

std::vector<Method> parse_methods(const std::string& text) {
  std::vector<Method> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(parse_method(trim(item)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) throw UsageError("no method given");
  return out;
}

std::vector<BenchInput> parse_bench_inputs(const std::string& text) {
  std::vector<BenchInput> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.starts_with('#')) continue;
    const auto colon = t.find(':');
    std::string id = colon == std::string::npos ? "line" + std::to_string(lineno) : trim(t.substr(0, colon));
    std::string expr = colon == std::string::npos ? t : t.substr(colon + 1);
    out.push_back({std::move(id), holonomic_input(expr)});
  }
  return out;
}

json bench_json(const std::vector<BenchRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"input", r.id},
                   {"method", method_name(r.method)},
                   {"cpu_seconds", r.cpu_seconds ? json(*r.cpu_seconds) : json(nullptr)},
                   {"timeout", !r.cpu_seconds.has_value()},
                   {"order", r.order ? json(*r.order) : json(nullptr)},
                   {"degree", r.degree ? json(*r.degree) : json(nullptr)},
                   {"status", r.status}});
  }
  return out;
}

struct Inputs {
  std::string file;
  std::string expr;

  std::string text() const {
    if (!expr.empty() && !file.empty()) throw UsageError("give either an equation file or --expr, not both");
    if (!expr.empty()) return expr;
    if (!file.empty()) return read_file(file);
    throw UsageError("no equation given (EQFILE or --expr)");
  }
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convert holonomic recurrences into simple rational recurrences", "ratrec"};
  app.require_subcommand(1);

  Inputs conv_in;
  std::string method = "la", inits_text;
  std::optional<int> userbound;
  double timeout = 300;
  bool as_json = false, zero_form = false;
  std::size_t verify_terms = 0;
  auto* convert_cmd = app.add_subcommand("convert", "Convert a holonomic equation");
  convert_cmd->add_option("EQFILE", conv_in.file, "File holding the equation (text or JSON)");
  convert_cmd->add_option("--expr", conv_in.expr, "Equation text");
  convert_cmd->add_option("--method", method, "la or gb")->capture_default_str();
  convert_cmd->add_option("--userbound", userbound, "GB iteration bound")->check(CLI::PositiveNumber);
  convert_cmd->add_option("--timeout", timeout, "Seconds")->capture_default_str()->check(CLI::PositiveNumber);
  convert_cmd->add_flag("--json", as_json, "JSON output");
  convert_cmd->add_flag("--zero", zero_form, "Print as '... = 0'");
  convert_cmd->add_option("--verify-terms", verify_terms, "Check the result on this many terms");
  convert_cmd->add_option("--inits", inits_text, "Initial values a,b,... for --verify-terms");

  std::string v_eq, v_ratrec, v_inits;
  std::size_t v_terms = 100;
  auto* verify_cmd = app.add_subcommand("verify", "Check an equation against the terms of a holonomic sequence");
  verify_cmd->add_option("--eq", v_eq, "Holonomic equation defining the sequence")->required();
  verify_cmd->add_option("--ratrec", v_ratrec, "Equation to check, in '... = 0' form")->required();
  verify_cmd->add_option("--inits", v_inits, "Initial values a,b,...")->required();
  verify_cmd->add_option("--terms", v_terms, "Number of terms")->capture_default_str();
  verify_cmd->add_flag("--json", as_json, "JSON output");

  std::string b_file, b_methods = "la,gb";
  double b_timeout = 300;
  unsigned b_workers = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time both methods on lines 'id: equation'");
  bench_cmd->add_option("INPUTS", b_file, "Input file")->required();
  bench_cmd->add_option("--methods", b_methods, "Comma-separated methods")->capture_default_str();
  bench_cmd->add_option("--timeout", b_timeout, "Seconds per run")->capture_default_str()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--workers", b_workers, "Concurrent runs")->capture_default_str()->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--json", as_json, "JSON output");

  std::uint64_t r_seed = 0;
  int r_order = 10, r_degree = 5;
  std::vector<long> r_coeffs{-1, 0, 1};
  std::size_t r_count = 1;
  bool r_exact = false;
  auto* random_cmd = app.add_subcommand("random", "Generate random holonomic equations");
  random_cmd->add_option("--seed", r_seed, "Seed")->required();
  random_cmd->add_option("--max-order", r_order, "Largest order")->capture_default_str()->check(CLI::PositiveNumber);
  random_cmd->add_option("--max-degree", r_degree, "Largest degree")->capture_default_str()->check(CLI::NonNegativeNumber);
  random_cmd->add_option("--coeffs", r_coeffs, "Coefficient set")->delimiter(',')->capture_default_str();
  random_cmd->add_option("--count", r_count, "Number of equations")->capture_default_str();
  random_cmd->add_flag("--exact", r_exact, "Use exactly the maximal order and degree");
  random_cmd->add_flag("--json", as_json, "JSON output");

  std::string s_expr, s_inits;
  std::size_t s_terms = 20;
  auto* somos_cmd = app.add_subcommand("somos", "Integer sequence of a monic equation and its ratrec equation");
  somos_cmd->add_option("--expr", s_expr, "Monic holonomic equation")->required();
  somos_cmd->add_option("--inits", s_inits, "Integer initial values")->required();
  somos_cmd->add_option("--terms", s_terms, "Largest index")->capture_default_str();
  somos_cmd->add_option("--method", method, "la or gb")->capture_default_str();
  somos_cmd->add_flag("--json", as_json, "JSON output");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ratrec: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (convert_cmd->parsed()) {
      const HolonomicEq h = holonomic_input(conv_in.text());
      ConvertOptions opts;
      try {
        opts.method = parse_method(method);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      opts.userbound = userbound;
      opts.timeout = std::chrono::duration<double>(timeout);
      const RatRecEq r = convert(h, opts);
      std::optional<VerificationReport> rep;
      if (verify_terms > 0) {
        const auto inits = parse_inits(inits_text);
        const SequenceTable seq = unroll_holonomic(h, inits, std::max<std::size_t>(verify_terms, inits.size()));
        rep = check_annihilates(r, seq, full_range(seq, r.order));
      } else if (!inits_text.empty()) {
        throw UsageError("--inits needs --verify-terms");
      }
      if (as_json) {
        json doc = to_json(r);
        if (rep) doc["verification"] = report_json(*rep);
        out << doc.dump() << "\n";
      } else {
        out << print_equation(r, zero_form ? OutputFormat::Zero : OutputFormat::Solved) << "\n";
        if (rep) out << report_text(*rep) << "\n";
      }
      if (rep && !rep->passed()) throw ViolationsFound("verification found violations");
    } else if (verify_cmd->parsed()) {
      const HolonomicEq h = holonomic_input(v_eq);
      const DiffPoly p = parse_equation(v_ratrec);
      if (p.is_zero()) throw UsageError("equation to check is identically zero");
      const auto inits = parse_inits(v_inits);
      const SequenceTable seq = unroll_holonomic(h, inits, std::max<std::size_t>(v_terms, inits.size()));
      VerificationReport rep;
      if (is_simple_ratrec(p)) {
        const RatRecEq r = to_ratrec_form(p);
        rep = check_annihilates(r, seq, full_range(seq, r.order));
      } else {
        const auto top = p.body.max_shift();
        rep = check_annihilates(p, seq, full_range(seq, top ? static_cast<int>(*top) : 0));
      }
      out << (as_json ? report_json(rep).dump() : report_text(rep)) << "\n";
      if (!rep.passed()) throw ViolationsFound("verification found violations");
    } else if (bench_cmd->parsed()) {
      const auto inputs = parse_bench_inputs(read_file(b_file));
      const auto methods = parse_methods(b_methods);
      const std::chrono::duration<double> t(b_timeout);
      const auto rows = bench(inputs, methods, t, b_workers);
      out << (as_json ? bench_json(rows).dump(2) + "\n" : render_bench_table(rows, t));
    } else if (random_cmd->parsed()) {
      std::vector<Integer> coeffs;
      for (long c : r_coeffs) coeffs.emplace_back(c);
      json docs = json::array();
      for (std::size_t i = 0; i < r_count; ++i) {
        const HolonomicEq h = random_holonomic(r_seed + i, r_order, r_degree, coeffs, r_exact);
        if (as_json) {
          docs.push_back(to_json(h));
        } else {
          if (r_count > 1) out << "r" << (r_seed + i) << ": ";
          out << print_equation(h, OutputFormat::Zero) << "\n";
        }
      }
      if (as_json) out << (r_count == 1 ? docs[0] : docs).dump() << "\n";
    } else if (somos_cmd->parsed()) {
      const HolonomicEq h = holonomic_from_diffpoly(parse_equation(s_expr));
      std::vector<Integer> inits;
      for (const auto& q : parse_inits(s_inits)) {
        if (!is_integer(q)) throw NotSomosEligible("initial value " + to_string(q) + " is not an integer");
        inits.push_back(q.get_num());
      }
      Method m;
      try {
        m = parse_method(method);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const SomosResult res = somos_generate(h, inits, s_terms, m);
      if (as_json) {
        json terms = json::array();
        for (std::size_t i = 0; i < res.table.size(); ++i) terms.push_back(to_string(res.table.at(i)));
        out << json{{"terms", terms}, {"equation", to_json(res.equation)}, {"verification", report_json(res.report)}}.dump()
            << "\n";
      } else {
        out << terms_text(res.table) << "\n" << print_equation(res.equation, OutputFormat::Solved) << "\n"
            << report_text(res.report) << "\n";
      }
      if (!res.report.passed()) throw ViolationsFound("converted equation does not reproduce the sequence");
    }
  } catch (const ViolationsFound& e) {
    err << "ratrec: " << e.what() << "\n";
    return kExitViolations;
  } catch (const Timeout& e) {
    err << "ratrec: timeout: " << e.what() << "\n";
    return kExitTimeout;
  } catch (const NotFoundWithinBound& e) {
    err << "ratrec: " << e.what() << "\n";
    return kExitNotFound;
  } catch (const ParseError& e) {
    err << "ratrec: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "ratrec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotHolonomic& e) {
    err << "ratrec: not a holonomic equation: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ArityError& e) {
    err << "ratrec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotSomosEligible& e) {
    err << "ratrec: not Somos-eligible: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "ratrec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Unsupported& e) {
    err << "ratrec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "ratrec: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace ratrec
