#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace circlehilb {

class WeightVector {
 public:
  // Strips zeros, divides out the gcd, sorts; throws Empty or Unstable.
  static WeightVector validate(const std::vector<std::int64_t>& raw);

  const std::vector<std::int64_t>& negatives() const { return negatives_; }
  const std::vector<std::int64_t>& positives() const { return positives_; }
  int zero_count() const { return zero_count_; }
  std::int64_t faithful_scale() const { return faithful_scale_; }

  std::size_t k() const { return negatives_.size(); }
  std::size_t m() const { return positives_.size(); }
  // Number of nonzero weights.
  std::size_t n() const { return negatives_.size() + positives_.size(); }
  // Krull dimension of the invariant ring.
  std::int64_t dimension() const { return static_cast<std::int64_t>(n()) - 1 + zero_count_; }

  // Nonzero weights in ascending order (negatives first).
  std::vector<std::int64_t> weights() const;
  // weights() followed by zero_count zeros.
  std::vector<std::int64_t> all_weights() const;

  bool is_generic() const;
  bool positive_side_generic() const;
  WeightVector negated() const;
  // (value, multiplicity) for each distinct negative weight.
  std::vector<std::pair<std::int64_t, int>> negative_groups() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::int64_t> negatives_;
  std::vector<std::int64_t> positives_;
  int zero_count_ = 0;
  std::int64_t faithful_scale_ = 1;
};

struct ReducedWeights {
  std::vector<std::int64_t> weights;
  // gcd of the remaining weights; 0 when nothing remains.
  std::int64_t gcd = 0;
};

// Drops the given positions of v.weights(); no renormalization.
ReducedWeights remove(const WeightVector& v, const std::vector<std::size_t>& indices);
ReducedWeights remove(const std::vector<std::int64_t>& weights, const std::vector<std::size_t>& indices);

// Lexicographically smaller of sorted(v) and sorted(-v), zeros included.
std::vector<std::int64_t> canonical_key(const WeightVector& v);

// Comma- or whitespace-separated signed integers.
std::vector<std::int64_t> parse_weights(std::string_view text);

}  // namespace circlehilb
