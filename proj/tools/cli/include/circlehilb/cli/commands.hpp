#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "circlehilb/cli/json_io.hpp"
#include "circlehilb/hilbert.hpp"
#include "circlehilb/hironaka.hpp"

namespace circlehilb::cli {

struct GlobalOptions {
  // 0 disables the oracle cross-check; kAutoDepth picks max(2 deg den, 50).
  std::size_t verify_depth = 50;
  HilbertMethod method = HilbertMethod::Auto;
  unsigned jobs = 1;
  std::int64_t max_denominator_degree = HilbertOptions{}.max_denominator_degree;

  HilbertOptions hilbert_options() const;
};

Json cmd_hilb(const std::vector<std::int64_t>& weights, const GlobalOptions& g);
// method: schur, generic, series or all.
Json cmd_gamma(const std::vector<std::int64_t>& weights, std::size_t upto, const std::string& method,
               const GlobalOptions& g);
Json cmd_analyze(const std::vector<std::int64_t>& weights, bool full, const GlobalOptions& g);
Json cmd_schur(std::int64_t u, const std::vector<Rational>& xs, const std::vector<Rational>& ys);
Json cmd_hironaka(const HironakaData& data, std::size_t upto);

enum class ScanFilter { OnlyNonGorensteinIntegerRatio, OnlyGorenstein, OnlyDegenerate };
ScanFilter parse_scan_filter(const std::string& name);
std::string to_string(ScanFilter f);

struct ScanJob {
  std::int64_t n = 3;
  std::int64_t max_abs_weight = 3;
  std::set<ScanFilter> filters;
  std::string output_path = "scan.jsonl";
  unsigned parallelism = 1;
};

struct ScanSummary {
  std::size_t candidates = 0;
  std::size_t gorenstein = 0;
  std::size_t not_gorenstein = 0;
  std::size_t integer_ratio_not_gorenstein = 0;
  std::size_t errors = 0;
  std::size_t written = 0;
};

// Of v and -v: fewer negative weights, then smaller negative magnitudes.
WeightVector scan_representative(const WeightVector& v);
// Faithful, stable vectors of n nonzero weights in [-max, max], one per
// {a, -a} class, ordered by canonical key.
std::vector<WeightVector> scan_candidates(std::int64_t n, std::int64_t max_abs_weight);
bool scan_keeps(const std::set<ScanFilter>& filters, const WeightVector& v, const GorensteinReport& r);
ScanSummary run_scan(const ScanJob& job, const GlobalOptions& g);
Json to_json(const ScanSummary& s);

// Full command line entry point; returns the process exit code
// (0 ok, 2 validation error, 3 internal error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circlehilb::cli
