#include "cycloknot/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <optional>
#include <stdexcept>

#include "cycloknot/ado.hpp"
#include "cycloknot/habiro.hpp"
#include "cycloknot/jones.hpp"
#include "cycloknot/knot_spec.hpp"
#include "cycloknot/serialize.hpp"
#include "cycloknot/suites.hpp"
#include "cycloknot/torus.hpp"
#include "cycloknot/wrt_cgp.hpp"

namespace cycloknot::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string knot;
  std::string n_range = "0..5";
  std::int64_t N = 1;
  std::optional<std::int64_t> p;
  std::string format = "text";
  bool normalized = false;
  bool exploratory = false;
  std::string suite = "all";
  bool quick = false;
};

std::int64_t parse_int(std::string_view s, std::string_view token) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("--n: bad token '" + std::string(token) + "'; expected A..B or A with integers 0 <= A <= B");
  }
  return v;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  std::int64_t lo = 0, hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_int(text, text);
  } else {
    lo = parse_int(std::string_view(text).substr(0, dots), text);
    hi = parse_int(std::string_view(text).substr(dots + 2), text);
  }
  if (lo < 0 || hi < lo) throw UsageError("--n: bad range '" + text + "'; expected A..B with 0 <= A <= B");
  return {lo, hi};
}

KnotSpec parse_knot(const std::string& text) {
  try {
    return KnotSpec::parse(text);
  } catch (const KnotParseError& e) {
    throw UsageError("--knot '" + text + "': " + e.what());
  }
}

std::int64_t require_p(const Args& a) {
  if (!a.p) throw UsageError("--p is required for this subcommand");
  return *a.p;
}

void emit(std::ostream& out, const Args& a, const json& j, const std::string& text) {
  if (a.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

int cmd_coeffs(const Args& a, std::ostream& out) {
  const KnotSpec k = parse_knot(a.knot);
  const auto [lo, hi] = parse_range(a.n_range);
  json list = json::array();
  std::string text;
  for (std::int64_t n = lo; n <= hi; ++n) {
    const IntPoly& c = habiro_a(k, n);
    list.push_back({{"n", n}, {"a", to_json(c)}});
    text += "a_" + std::to_string(n) + " = " + to_text(c) + "\n";
  }
  emit(out, a, {{"knot", k.to_string()}, {"coefficients", list}}, text);
  return kExitOk;
}

int cmd_jones(const Args& a, std::ostream& out) {
  const KnotSpec k = parse_knot(a.knot);
  if (a.N < 1) throw UsageError("--N must be >= 1");
  const IntPoly j = colored_jones(k, a.N);
  emit(out, a, {{"knot", k.to_string()}, {"N", a.N}, {"jones", to_json(j)}}, to_text(j) + "\n");
  return kExitOk;
}

int cmd_ado(const Args& a, std::ostream& out) {
  const KnotSpec k = parse_knot(a.knot);
  const std::int64_t p = require_p(a);
  const AdoPoly ado_k = ado(k, p);
  emit(out, a, {{"knot", k.to_string()}, {"p", p}, {"ado", to_json(ado_k.poly)}}, to_text(ado_k.poly) + "\n");
  return kExitOk;
}

int cmd_wrt(const Args& a, std::ostream& out, std::ostream& err) {
  const KnotSpec k = parse_knot(a.knot);
  const std::int64_t p = require_p(a);
  const CycNumber w = wrt_zero(k, p);
  json j{{"knot", k.to_string()}, {"p", p}, {"wrt", to_json(w)}};
  CycNumber shown = w;
  if (a.normalized) {
    const NormalizedWrt nw = normalize_wrt(w, p);
    j["normalized"] = {{"value", to_json(nw.value)}, {"brace1_sq", to_json(nw.brace1_sq)}, {"exact", nw.exact}};
    if (nw.exact) {
      shown = nw.value;
    } else {
      err << "note: WRT is not divisible by {1}^2 in Z[z" << 2 * p << "]; printing the unnormalized value\n";
    }
  }
  emit(out, a, j, to_text(shown) + "\n");
  return kExitOk;
}

int cmd_cgp(const Args& a, std::ostream& out) {
  const KnotSpec k = parse_knot(a.knot);
  const std::int64_t p = require_p(a);
  const bool torus = k.family() == KnotSpec::Family::TorusTwoStrand && !k.is_mirror();
  const CgpResult c = torus ? cgp_torus_direct(k.t(), p)
                     : k.family() == KnotSpec::Family::DoubleTwist ? cgp_zero(k, p)
                                                                     : cgp_from_ado(k, p);
  CycPoly numerator = c.numerator;
  std::int64_t prefactor = c.u_prefactor;
  if (a.normalized) {
    numerator = numerator.shifted(Exponent{2 * prefactor, 0});
    prefactor = 0;
  }
  const std::string denom = std::string("(u^") + std::to_string(p) + " - u^-" + std::to_string(p) + ")^2" +
                            (c.one_plus_u_minus_2p ? " (1 + u^-" + std::to_string(2 * p) + ")" : "");
  json j{{"knot", k.to_string()},
         {"p", p},
         {"numerator", to_json(numerator)},
         {"u_prefactor", prefactor},
         {"one_plus_u_minus_2p", c.one_plus_u_minus_2p}};
  std::string text = "numerator = " + to_text(numerator) + "\n" + "u_prefactor = " + std::to_string(prefactor) +
                     "\n" + "denominator = " + denom + "\n";
  if (a.normalized && torus) {
    try {
      const TExtraction x = extract_T(numerator, p);
      j["T"] = {{"residue", x.residue}, {"g", to_json(x.g)}};
      text += "T-residue = " + std::to_string(x.residue) + "\n" + "g(T) = " + to_text(x.g) + "\n";
    } catch (const MixedResidueError& e) {
      j["T"] = {{"error", e.what()}};
      text += std::string("g(T) unavailable: ") + e.what() + "\n";
    }
  }
  emit(out, a, j, text);
  return kExitOk;
}

int cmd_verify(const Args& a, std::ostream& out, std::ostream& err) {
  SuiteOptions opt;
  opt.quick = a.quick;
  opt.exploratory = a.exploratory;
  opt.p = a.p;
  if (!a.knot.empty()) opt.knot = parse_knot(a.knot);
  std::vector<SuiteRun> runs;
  try {
    runs = run_suites(a.suite, opt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--suite: ") + e.what());
  }

  bool all_pass = true;
  json suites = json::array();
  std::string text;
  for (const auto& run : runs) {
    const bool skipped = run.reports.empty();
    const bool pass = run.pass();
    all_pass = all_pass && pass;
    json reports = json::array();
    for (const auto& r : run.reports) reports.push_back(r.to_json());
    suites.push_back({{"suite", run.suite}, {"pass", pass}, {"skipped", skipped}, {"reports", reports}});
    if (skipped) {
      text += "[SKIP] " + run.suite + ": no checks match the --knot/--p filters\n";
      continue;
    }
    text += "== " + run.suite + ": " + (pass ? "PASS" : "FAIL") + " (" + std::to_string(run.reports.size()) +
            " checks)\n";
    for (const auto& r : run.reports) {
      text += r.summary();
      if (!r.note.empty()) text += "  # " + r.note;
      text += "\n";
      if (!r.pass && !r.exploratory) err << r.to_json().dump() << '\n';
    }
  }
  text += std::string("overall: ") + (all_pass ? "PASS" : "FAIL") + "\n";
  emit(out, a, {{"suites", suites}, {"pass", all_pass}}, text);
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Habiro, colored Jones, ADO, WRT and CGP computations for double twist and (2,2t+1) torus knots",
               "cyclo-knot"};
  app.require_subcommand(1, 1);
  Args a;

  const auto add_knot = [&a](CLI::App* s, bool required) {
    auto* o = s->add_option("--knot", a.knot, "knot spec: [!]dt:<l>,<m> or [!]t2:<t>");
    if (required) o->required();
  };
  const auto add_format = [&a](CLI::App* s) {
    s->add_option("--format", a.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* coeffs = app.add_subcommand("coeffs", "Habiro coefficients a_n(K;q)");
  add_knot(coeffs, true);
  coeffs->add_option("--n", a.n_range, "index range A..B (default 0..5)");
  add_format(coeffs);

  auto* jones = app.add_subcommand("jones", "colored Jones polynomial J_K(q^N, q)");
  add_knot(jones, true);
  jones->add_option("--N", a.N, "color N >= 1")->required();
  add_format(jones);

  auto* ado_cmd = app.add_subcommand("ado", "ADO invariant at a p-th root of unity");
  add_knot(ado_cmd, true);
  ado_cmd->add_option("--p", a.p, "root order p")->required();
  add_format(ado_cmd);

  auto* wrt = app.add_subcommand("wrt", "WRT invariant of the 0-surgery at odd p");
  add_knot(wrt, true);
  wrt->add_option("--p", a.p, "odd p >= 3")->required();
  wrt->add_flag("--normalized", a.normalized, "divide by {1}^2");
  add_format(wrt);

  auto* cgp = app.add_subcommand("cgp", "CGP numerator of the 0-surgery at odd p");
  add_knot(cgp, true);
  cgp->add_option("--p", a.p, "odd p >= 3")->required();
  cgp->add_flag("--normalized", a.normalized, "fold the u-prefactor into the numerator");
  add_format(cgp);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite_help = "suite name or all:";
  for (const auto& s : suite_names()) suite_help += " " + s;
  verify->add_option("--suite", a.suite, suite_help);
  add_knot(verify, false);
  verify->add_option("--p", a.p, "keep only checks at this p");
  verify->add_flag("--quick", a.quick, "smaller parameter grids");
  verify->add_flag("--exploratory", a.exploratory, "add report-only checks");
  add_format(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(a, out);
    if (jones->parsed()) return cmd_jones(a, out);
    if (ado_cmd->parsed()) return cmd_ado(a, out);
    if (wrt->parsed()) return cmd_wrt(a, out, err);
    if (cgp->parsed()) return cmd_cgp(a, out);
    return cmd_verify(a, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cycloknot::cli
