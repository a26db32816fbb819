#include "circlehilb/weights.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "circlehilb/error.hpp"

namespace circlehilb {

WeightVector WeightVector::validate(const std::vector<std::int64_t>& raw) {
  if (raw.empty()) throw Empty("weight vector is empty");
  WeightVector v;
  std::int64_t g = 0;
  for (auto a : raw) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw OutOfRange("weight out of range");
    if (a == 0) {
      ++v.zero_count_;
    } else {
      g = std::gcd(g, a);
      (a < 0 ? v.negatives_ : v.positives_).push_back(a);
    }
  }
  if (v.negatives_.empty() || v.positives_.empty()) {
    throw Unstable("weights need both signs (stable representation)");
  }
  v.faithful_scale_ = g;
  for (auto& a : v.negatives_) a /= g;
  for (auto& a : v.positives_) a /= g;
  std::sort(v.negatives_.begin(), v.negatives_.end());
  std::sort(v.positives_.begin(), v.positives_.end());
  return v;
}

std::vector<std::int64_t> WeightVector::weights() const {
  std::vector<std::int64_t> w = negatives_;
  w.insert(w.end(), positives_.begin(), positives_.end());
  return w;
}

std::vector<std::int64_t> WeightVector::all_weights() const {
  std::vector<std::int64_t> w = weights();
  w.insert(w.end(), static_cast<std::size_t>(zero_count_), 0);
  return w;
}

bool WeightVector::is_generic() const {
  return std::adjacent_find(negatives_.begin(), negatives_.end()) == negatives_.end();
}

bool WeightVector::positive_side_generic() const {
  return std::adjacent_find(positives_.begin(), positives_.end()) == positives_.end();
}

WeightVector WeightVector::negated() const {
  WeightVector v = *this;
  v.negatives_.clear();
  v.positives_.clear();
  for (auto a : positives_) v.negatives_.push_back(-a);
  for (auto a : negatives_) v.positives_.push_back(-a);
  std::sort(v.negatives_.begin(), v.negatives_.end());
  std::sort(v.positives_.begin(), v.positives_.end());
  return v;
}

std::vector<std::pair<std::int64_t, int>> WeightVector::negative_groups() const {
  std::vector<std::pair<std::int64_t, int>> groups;
  for (auto a : negatives_) {
    if (!groups.empty() && groups.back().first == a) {
      ++groups.back().second;
    } else {
      groups.emplace_back(a, 1);
    }
  }
  return groups;
}

ReducedWeights remove(const std::vector<std::int64_t>& weights, const std::vector<std::size_t>& indices) {
  std::set<std::size_t> drop(indices.begin(), indices.end());
  for (auto i : drop) {
    if (i >= weights.size()) throw OutOfRange("remove: index " + std::to_string(i) + " out of range");
  }
  ReducedWeights r;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!drop.count(i)) {
      r.weights.push_back(weights[i]);
      r.gcd = std::gcd(r.gcd, weights[i]);
    }
  }
  return r;
}

ReducedWeights remove(const WeightVector& v, const std::vector<std::size_t>& indices) {
  return remove(v.weights(), indices);
}

std::vector<std::int64_t> canonical_key(const WeightVector& v) {
  std::vector<std::int64_t> a = v.all_weights();
  std::vector<std::int64_t> b;
  for (auto x : a) b.push_back(-x);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return std::min(a, b);
}

std::vector<std::int64_t> parse_weights(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    std::string_view tok = text.substr(i, j - i);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("not an integer weight: '" + std::string(text.substr(i, j - i)) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace circlehilb
