#ifndef PCURVE_COMBINATORICS_HPP
#define PCURVE_COMBINATORICS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pcurve {

using BigInt = boost::multiprecision::cpp_int;

// C(a, b) with the convention C(a, b) = 0 when b < 0, a < 0 or a < b.
BigInt binom(std::int64_t a, std::int64_t b);

// Integer vectors (a_0, ..., a_{L-1}) with lower[j] <= a_j <= upper[j] and
// sum a_j = total.
struct BoundedCompositionQuery {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
  std::int64_t total = 0;

  std::size_t length() const noexcept { return lower.size(); }
  // Same bounds [lo, hi] on every one of `length` coordinates.
  static BoundedCompositionQuery uniform(std::size_t length, std::int64_t lo, std::int64_t hi,
                                         std::int64_t total);
};

enum class CountMethod { enumerate, inclusion_exclusion };

// Largest search space (product of interval widths) the enumerator accepts.
inline constexpr double kMaxEnumerationStates = 1e8;

BigInt count_compositions(const BoundedCompositionQuery& q, CountMethod method);
// Inclusion-exclusion, cross-checked by enumeration whenever that is within
// the search-space guard.
BigInt count_compositions(const BoundedCompositionQuery& q);

// Visits every solution in lexicographic order. Throws SearchSpaceTooLarge
// past the guard.
void for_each_composition(const BoundedCompositionQuery& q,
                          const std::function<void(const std::vector<std::int64_t>&)>& visit);

}  // namespace pcurve

#endif  // PCURVE_COMBINATORICS_HPP
