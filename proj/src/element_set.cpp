#include "neighborly/element_set.hpp"

#include <array>
#include <stdexcept>

namespace neighborly {

namespace {

constexpr int kTable = 33;

constexpr std::array<std::array<std::uint64_t, kTable>, kTable> make_binomials() {
  std::array<std::array<std::uint64_t, kTable>, kTable> t{};
  for (int n = 0; n < kTable; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
  }
  return t;
}

constexpr auto kBinomials = make_binomials();

}  // namespace

ElementSet make_set(std::initializer_list<int> elements) {
  return make_set(std::span<const int>(elements.begin(), elements.size()));
}

ElementSet make_set(std::span<const int> elements) {
  ElementSet s = 0;
  for (int e : elements) {
    if (e < 0 || e >= kMaxElements) throw std::out_of_range("element label out of range");
    s |= singleton(e);
  }
  return s;
}

std::vector<int> elements_of(ElementSet s) {
  std::vector<int> out;
  out.reserve(cardinality(s));
  while (s != 0) {
    out.push_back(lowest_element(s));
    s &= s - 1;
  }
  return out;
}

std::string format_set(ElementSet s) {
  std::string out;
  for (int e : elements_of(s)) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return kBinomials[n][k];
}

std::uint32_t colex_rank(ElementSet s) {
  std::uint32_t rank = 0;
  int i = 1;
  while (s != 0) {
    rank += static_cast<std::uint32_t>(kBinomials[lowest_element(s)][i]);
    s &= s - 1;
    ++i;
  }
  return rank;
}

}  // namespace neighborly
