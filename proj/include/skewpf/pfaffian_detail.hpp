#pragma once

#include <optional>
#include <vector>

#include "skewpf/error.hpp"

namespace skewpf::detail {

// Pfaffian of a skew grid over any commutative coefficient ring, by recursive
// expansion along the first remaining row. Only entries above the diagonal
// are read. T needs +, *, and unary -.
template <class T>
T pfaffian_rec(const std::vector<std::vector<T>>& g, const std::vector<int>& idx) {
  if (idx.size() == 2) return g[idx[0]][idx[1]];
  std::optional<T> acc;
  const int a = idx[0];
  std::vector<int> rest(idx.begin() + 1, idx.end());
  for (size_t p = 0; p < rest.size(); ++p) {
    std::vector<int> sub;
    sub.reserve(rest.size() - 1);
    for (size_t q = 0; q < rest.size(); ++q)
      if (q != p) sub.push_back(rest[q]);
    T term = g[a][rest[p]] * pfaffian_rec(g, sub);
    if (p % 2 == 1) term = -term;
    if (acc)
      acc = *acc + term;
    else
      acc = term;
  }
  return *acc;
}

template <class T>
T pfaffian_grid(const std::vector<std::vector<T>>& g) {
  const int n = static_cast<int>(g.size());
  if (n == 0 || n % 2 != 0) fail(Errc::OddSize, "pfaffian needs even positive size");
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return pfaffian_rec(g, idx);
}

// Pfaffian of the grid with rows and columns a, b erased (a < b).
template <class T>
T sub_pfaffian_grid(const std::vector<std::vector<T>>& g, int a, int b) {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(g.size()); ++i)
    if (i != a && i != b) idx.push_back(i);
  return pfaffian_rec(g, idx);
}

}  // namespace skewpf::detail
