#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "circlehilb/cli/commands.hpp"

namespace circlehilb::cli {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split_list(text)) out.push_back(parse_rational(s));
  return out;
}

std::size_t parse_depth(const std::string& text) {
  if (text == "auto") return HilbertOptions::kAutoDepth;
  try {
    std::size_t used = 0;
    const long long d = std::stoll(text, &used);
    if (used != text.size() || d < 0) throw std::invalid_argument(text);
    return static_cast<std::size_t>(d);
  } catch (const std::logic_error&) {
    throw ParseError("--verify-depth expects a nonnegative integer or 'auto', got '" + text + "'");
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert series, Laurent coefficients and Gorenstein diagnosis for circle-invariant rings",
               "circlehilb"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string verify_depth = "50";
  std::string method = "auto";
  unsigned jobs = 1;
  std::int64_t max_den = HilbertOptions{}.max_denominator_degree;
  app.add_option("--verify-depth", verify_depth, "Oracle cross-check depth (0 disables, 'auto' = max(2 deg den, 50))")
      ->envname("CIRCLEHILB_VERIFY_DEPTH");
  app.add_option("--method", method, "Hilbert series method: auto, generic, degenerate, oracle")
      ->envname("CIRCLEHILB_METHOD");
  app.add_option("--jobs", jobs, "Worker threads for scan")->envname("CIRCLEHILB_JOBS")->check(CLI::PositiveNumber);
  app.add_option("--max-denominator-degree", max_den, "Ceiling on constructed denominator degrees")
      ->envname("CIRCLEHILB_MAX_DENOMINATOR_DEGREE");

  std::string weights_text;
  auto* hilb = app.add_subcommand("hilb", "Hilbert series of the invariant ring");
  hilb->add_option("weights", weights_text, "Comma-separated weights, e.g. -1,-2,1,14")->required();

  std::size_t upto = 3;
  std::string gamma_method = "schur";
  auto* gamma = app.add_subcommand("gamma", "Laurent coefficients at t = 1");
  gamma->add_option("weights", weights_text, "Comma-separated weights")->required();
  gamma->add_option("--upto", upto, "Last coefficient index");
  gamma->add_option("--method", gamma_method, "schur, generic, series or all")
      ->check(CLI::IsMember({"schur", "generic", "series", "all"}));

  bool full = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Gorenstein diagnosis");
  analyze_cmd->add_option("weights", weights_text, "Comma-separated weights")->required();
  analyze_cmd->add_flag("--full", full, "Always compute the series and run the Stanley test");

  std::int64_t u = 0;
  std::string xs_text, ys_text;
  auto* schur = app.add_subcommand("schur", "Partial Laurent-Schur value S_u(xs; ys) by all routes");
  schur->add_option("--u", u, "Top-row exponent")->required();
  schur->add_option("--xs", xs_text, "First block of variables (rationals)")->required();
  schur->add_option("--ys", ys_text, "Second block of variables (rationals)");

  std::string alphas_text, betas_text;
  std::size_t h_upto = 4;
  auto* hironaka = app.add_subcommand("hironaka", "Laurent coefficients from Hironaka decomposition degrees");
  hironaka->add_option("--alphas", alphas_text, "Parameter degrees")->required();
  hironaka->add_option("--betas", betas_text, "Generator degrees")->required();
  hironaka->add_option("--upto", h_upto, "Last coefficient index");

  ScanJob job;
  std::vector<std::string> filters;
  auto* scan = app.add_subcommand("scan", "Analyze every vector of a family, one JSON report per line");
  scan->add_option("--n", job.n, "Number of weights")->required();
  scan->add_option("--max-abs-weight,--max", job.max_abs_weight, "Bound on |a_i|")->required();
  scan->add_option("--filter", filters, "OnlyNonGorensteinIntegerRatio, OnlyGorenstein, OnlyDegenerate");
  scan->add_option("--output,-o", job.output_path, "Line-delimited JSON output file");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_json("ParseError", e.what()).dump() << '\n';
    return 2;
  }

  try {
    GlobalOptions g;
    g.verify_depth = parse_depth(verify_depth);
    g.method = parse_hilbert_method(method);
    g.jobs = jobs;
    g.max_denominator_degree = max_den;

    Json result;
    if (*hilb) {
      result = cmd_hilb(parse_weights(weights_text), g);
    } else if (*gamma) {
      result = cmd_gamma(parse_weights(weights_text), upto, gamma_method, g);
    } else if (*analyze_cmd) {
      result = cmd_analyze(parse_weights(weights_text), full, g);
    } else if (*schur) {
      result = cmd_schur(u, parse_rationals(xs_text), parse_rationals(ys_text));
    } else if (*hironaka) {
      HironakaData data;
      for (const auto& s : split_list(alphas_text)) data.alphas.push_back(std::stoll(s));
      for (const auto& s : split_list(betas_text)) data.betas.push_back(std::stoll(s));
      result = cmd_hironaka(data, h_upto);
    } else if (*scan) {
      for (const auto& f : filters) job.filters.insert(parse_scan_filter(f));
      job.parallelism = jobs;
      result = to_json(run_scan(job, g));
      result["output"] = job.output_path;
    }
    out << result.dump(2) << '\n';
    return 0;
  } catch (const ValidationError& e) {
    err << error_json(e.kind(), e.what()).dump() << '\n';
    return 2;
  } catch (const InternalError& e) {
    err << error_json(e.kind(), e.what()).dump() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << error_json("ParseError", e.what()).dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << error_json("Internal", e.what()).dump() << '\n';
    return 3;
  }
}

}  // namespace circlehilb::cli
