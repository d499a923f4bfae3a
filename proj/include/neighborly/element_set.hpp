#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace neighborly {

/// Finite subset of the ground set {0, ..., n-1}, stored as a bit mask.
/// Numeric order on masks of equal cardinality is colexicographic order.
using ElementSet = std::uint32_t;

inline constexpr int kMaxElements = 24;

inline int cardinality(ElementSet s) { return std::popcount(s); }
inline bool contains(ElementSet s, int e) { return (s >> e) & 1U; }
inline ElementSet singleton(int e) { return ElementSet{1} << e; }
inline ElementSet full_set(int n) { return n >= 32 ? ~ElementSet{0} : (ElementSet{1} << n) - 1; }
inline int lowest_element(ElementSet s) { return std::countr_zero(s); }

ElementSet make_set(std::initializer_list<int> elements);
ElementSet make_set(std::span<const int> elements);
std::vector<int> elements_of(ElementSet s);

/// "0,2,5" style rendering, ascending.
std::string format_set(ElementSet s);

/// Next set of the same cardinality in colexicographic order (Gosper's hack).
inline ElementSet next_subset(ElementSet s) {
  const ElementSet low = s & (~s + 1);
  const ElementSet ripple = s + low;
  return ripple | (((s ^ ripple) >> 2) / low);
}

/// Calls fn(subset) for every k-subset of {0..n-1} in colexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(ElementSet{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
    fn(static_cast<ElementSet>(s));
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t ripple = s + low;
    s = ripple | (((s ^ ripple) >> 2) / low);
  }
}

/// Exact binomial coefficient for n, k <= 32.
std::uint64_t binomial(int n, int k);

/// Position of a subset in the colexicographic order of subsets of its size.
std::uint32_t colex_rank(ElementSet s);

/// Number of elements of s strictly greater than e.
inline int count_above(ElementSet s, int e) {
  return std::popcount(s & ~full_set(e + 1));
}

}  // namespace neighborly
