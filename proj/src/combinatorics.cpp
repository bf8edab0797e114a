#include "pcurve/combinatorics.hpp"

#include <map>

#include "pcurve/error.hpp"

namespace pcurve {

BigInt binom(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

BoundedCompositionQuery BoundedCompositionQuery::uniform(std::size_t length, std::int64_t lo,
                                                         std::int64_t hi, std::int64_t total) {
  return {std::vector<std::int64_t>(length, lo), std::vector<std::int64_t>(length, hi), total};
}

namespace {

void validate(const BoundedCompositionQuery& q) {
  if (q.lower.size() != q.upper.size())
    throw Error(ErrorCode::InvalidArgument, "bound vectors differ in length");
  for (std::size_t j = 0; j < q.lower.size(); ++j)
    if (q.lower[j] > q.upper[j]) throw Error(ErrorCode::InvalidArgument, "lower bound exceeds upper bound");
}

BigInt count_inclusion_exclusion(const BoundedCompositionQuery& q) {
  const std::int64_t length = static_cast<std::int64_t>(q.length());
  std::int64_t rest = q.total;
  for (auto lo : q.lower) rest -= lo;
  if (length == 0) return rest == 0 ? 1 : 0;
  if (rest < 0) return 0;
  // Signed number of subsets J by the sum of (width_j + 1) over J.
  std::map<std::int64_t, BigInt> signed_subsets{{0, 1}};
  for (std::size_t j = 0; j < q.length(); ++j) {
    const std::int64_t step = q.upper[j] - q.lower[j] + 1;
    std::map<std::int64_t, BigInt> next = signed_subsets;
    for (const auto& [sum, count] : signed_subsets) {
      if (sum + step > rest) continue;
      next[sum + step] -= count;
    }
    signed_subsets = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [sum, count] : signed_subsets) total += count * binom(rest - sum + length - 1, length - 1);
  return total;
}

double search_space(const BoundedCompositionQuery& q) {
  double states = 1;
  for (std::size_t j = 0; j < q.length(); ++j) states *= static_cast<double>(q.upper[j] - q.lower[j] + 1);
  return states;
}

}  // namespace

void for_each_composition(const BoundedCompositionQuery& q,
                          const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  validate(q);
  if (search_space(q) > kMaxEnumerationStates)
    throw Error(ErrorCode::SearchSpaceTooLarge, "enumeration exceeds 1e8 states");
  const std::size_t length = q.length();
  if (length == 0) {
    if (q.total == 0) visit({});
    return;
  }
  // suffix_lo[j] / suffix_hi[j]: bounds on the sum of coordinates j..L-1.
  std::vector<std::int64_t> suffix_lo(length + 1, 0), suffix_hi(length + 1, 0);
  for (std::size_t j = length; j-- > 0;) {
    suffix_lo[j] = suffix_lo[j + 1] + q.lower[j];
    suffix_hi[j] = suffix_hi[j + 1] + q.upper[j];
  }
  std::vector<std::int64_t> current(length);
  std::function<void(std::size_t, std::int64_t)> recurse = [&](std::size_t j, std::int64_t remaining) {
    if (j == length) {
      if (remaining == 0) visit(current);
      return;
    }
    const std::int64_t lo = std::max(q.lower[j], remaining - suffix_hi[j + 1]);
    const std::int64_t hi = std::min(q.upper[j], remaining - suffix_lo[j + 1]);
    for (std::int64_t v = lo; v <= hi; ++v) {
      current[j] = v;
      recurse(j + 1, remaining - v);
    }
  };
  recurse(0, q.total);
}

BigInt count_compositions(const BoundedCompositionQuery& q, CountMethod method) {
  validate(q);
  if (method == CountMethod::inclusion_exclusion) return count_inclusion_exclusion(q);
  BigInt count = 0;
  for_each_composition(q, [&](const std::vector<std::int64_t>&) { ++count; });
  return count;
}

BigInt count_compositions(const BoundedCompositionQuery& q) {
  validate(q);
  BigInt ie = count_inclusion_exclusion(q);
  if (search_space(q) <= kMaxEnumerationStates) {
    BigInt direct = count_compositions(q, CountMethod::enumerate);
    if (direct != ie)
      throw Error(ErrorCode::InvalidArgument, "enumeration and inclusion-exclusion disagree");
  }
  return ie;
}

}  // namespace pcurve
