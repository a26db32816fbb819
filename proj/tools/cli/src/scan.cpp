#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <numeric>
#include <thread>

#include "circlehilb/cli/commands.hpp"

namespace circlehilb::cli {

ScanFilter parse_scan_filter(const std::string& name) {
  if (name == "OnlyNonGorensteinIntegerRatio") return ScanFilter::OnlyNonGorensteinIntegerRatio;
  if (name == "OnlyGorenstein") return ScanFilter::OnlyGorenstein;
  if (name == "OnlyDegenerate") return ScanFilter::OnlyDegenerate;
  throw InvalidArgument("unknown scan filter '" + name + "'");
}

std::string to_string(ScanFilter f) {
  switch (f) {
    case ScanFilter::OnlyNonGorensteinIntegerRatio: return "OnlyNonGorensteinIntegerRatio";
    case ScanFilter::OnlyGorenstein: return "OnlyGorenstein";
    case ScanFilter::OnlyDegenerate: return "OnlyDegenerate";
  }
  return "";
}

WeightVector scan_representative(const WeightVector& v) {
  const WeightVector w = v.negated();
  if (v.k() != w.k()) return v.k() < w.k() ? v : w;
  auto magnitudes = [](const WeightVector& x) {
    std::vector<std::int64_t> m;
    for (auto a : x.negatives()) m.push_back(-a);
    std::sort(m.begin(), m.end());
    return m;
  };
  return magnitudes(w) < magnitudes(v) ? w : v;
}

std::vector<WeightVector> scan_candidates(std::int64_t n, std::int64_t max_abs_weight) {
  if (n < 2) throw InvalidArgument("scan needs n >= 2");
  if (max_abs_weight < 1) throw InvalidArgument("scan needs max_abs_weight >= 1");
  std::vector<std::int64_t> values;
  for (std::int64_t a = -max_abs_weight; a <= max_abs_weight; ++a) {
    if (a != 0) values.push_back(a);
  }
  std::map<std::vector<std::int64_t>, WeightVector> seen;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  // Nondecreasing index tuples enumerate multisets.
  while (true) {
    std::vector<std::int64_t> w;
    for (auto i : pick) w.push_back(values[i]);
    const bool both = w.front() < 0 && w.back() > 0;
    std::int64_t g = 0;
    for (auto a : w) g = std::gcd(g, a);
    if (both && g == 1) {
      auto v = scan_representative(WeightVector::validate(w));
      seen.try_emplace(canonical_key(v), v);
    }
    std::size_t pos = pick.size();
    while (pos > 0 && pick[pos - 1] == values.size() - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t i = pos; i < pick.size(); ++i) pick[i] = pick[pos - 1];
  }
  std::vector<WeightVector> out;
  for (auto& [key, v] : seen) out.push_back(v);
  return out;
}

bool scan_keeps(const std::set<ScanFilter>& filters, const WeightVector& v, const GorensteinReport& r) {
  for (auto f : filters) {
    switch (f) {
      case ScanFilter::OnlyNonGorensteinIntegerRatio:
        if (!(r.ratio_is_integer && r.classification == Classification::NotGorenstein)) return false;
        break;
      case ScanFilter::OnlyGorenstein:
        if (r.classification != Classification::Gorenstein) return false;
        break;
      case ScanFilter::OnlyDegenerate:
        if (v.is_generic() && v.positive_side_generic()) return false;
        break;
    }
  }
  return true;
}

ScanSummary run_scan(const ScanJob& job, const GlobalOptions& g) {
  const auto candidates = scan_candidates(job.n, job.max_abs_weight);
  std::vector<std::string> lines(candidates.size());
  std::vector<int> outcome(candidates.size(), 0);  // 1 Gorenstein, 2 not, 3 not with integer ratio, -1 error
  std::vector<char> keep(candidates.size(), 0);
  AnalyzeOptions options;
  options.hilbert = g.hilbert_options();

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      const auto& v = candidates[i];
      try {
        const GorensteinReport r = analyze(v, options);
        outcome[i] = r.classification == Classification::Gorenstein ? 1 : (r.ratio_is_integer ? 3 : 2);
        if (scan_keeps(job.filters, v, r)) {
          keep[i] = 1;
          lines[i] = to_json(r).dump();
        }
      } catch (const Error& e) {
        outcome[i] = -1;
        Json j = error_json(e.kind(), e.what());
        j["weights"] = weights_json(v);
        keep[i] = 1;
        lines[i] = j.dump();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(job.parallelism, static_cast<unsigned>(candidates.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ofstream file(job.output_path, std::ios::trunc);
  if (!file) throw InvalidArgument("cannot open scan output '" + job.output_path + "'");
  ScanSummary s;
  s.candidates = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    switch (outcome[i]) {
      case 1: ++s.gorenstein; break;
      case 2: ++s.not_gorenstein; break;
      case 3:
        ++s.not_gorenstein;
        ++s.integer_ratio_not_gorenstein;
        break;
      default: ++s.errors; break;
    }
    if (keep[i]) {
      file << lines[i] << '\n';
      ++s.written;
    }
  }
  return s;
}

Json to_json(const ScanSummary& s) {
  return {{"candidates", s.candidates},
          {"gorenstein", s.gorenstein},
          {"not_gorenstein", s.not_gorenstein},
          {"integer_ratio_not_gorenstein", s.integer_ratio_not_gorenstein},
          {"errors", s.errors},
          {"written", s.written}};
}

}  // namespace circlehilb::cli
