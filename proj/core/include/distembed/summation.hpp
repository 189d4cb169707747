#pragma once

#include <cstddef>
#include <span>

namespace distembed {

/// Recursive pairwise (tree) summation. The reduction tree depends only on
/// the length of the input, so results are reproducible bit for bit.
template <typename T>
T pairwise_sum(std::span<const T> values) {
  constexpr std::size_t kLeaf = 8;
  if (values.size() <= kLeaf) {
    T acc{};
    for (const auto& v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace distembed
