#pragma once

// Independent brute-force references used only by the tests. Nothing here
// calls into the library's arithmetic or enumeration code.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Coeffs = std::vector<long long>;

// Euler's pentagonal-number recurrence for p(n).
inline std::vector<long long> partition_numbers(int max_n) {
  std::vector<long long> p(static_cast<std::size_t>(max_n) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    long long total = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > n) break;
      const long long sign = (j % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return p;
}

// Visits every weakly decreasing sequence with at most max_rows entries,
// each in [1, max_part], with sum at most max_size.
inline void for_each_bounded(int max_rows, int max_part, int max_size,
                             const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> seq;
  std::function<void(int, int)> rec = [&](int cap, int size) {
    visit(seq, size);
    if (static_cast<int>(seq.size()) == max_rows) return;
    for (int v = 1; v <= cap && size + v <= max_size; ++v) {
      seq.push_back(v);
      rec(v, size + v);
      seq.pop_back();
    }
  };
  rec(max_part, 0);
}

// Coefficient m counts partitions of m inside a rows x cols box.
inline Coeffs boxed_counts(int rows, int cols, int max_size) {
  Coeffs c(static_cast<std::size_t>(max_size) + 1, 0);
  for_each_bounded(rows, cols, max_size, [&](const std::vector<int>&, int size) { ++c[static_cast<std::size_t>(size)]; });
  return c;
}

// Coefficient n counts partitions of n whose part k+1 (1-based) is at most l,
// by generating every partition of n with a free-form recursion.
inline Coeffs hook_counts(int k, int l, int max_size) {
  Coeffs c(static_cast<std::size_t>(max_size) + 1, 0);
  for_each_bounded(max_size, max_size, max_size, [&](const std::vector<int>& seq, int size) {
    if (static_cast<int>(seq.size()) <= k || seq[static_cast<std::size_t>(k)] <= l) ++c[static_cast<std::size_t>(size)];
  });
  return c;
}

// Dense product of integer coefficient lists.
inline Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Number of (i, j) with i + j = n, i.e. the square of 1/(1-t).
inline Coeffs pair_counts(int max_n) {
  Coeffs c(static_cast<std::size_t>(max_n) + 1, 0);
  for (int i = 0; i <= max_n; ++i)
    for (int j = 0; i + j <= max_n; ++j) ++c[static_cast<std::size_t>(i + j)];
  return c;
}

// Content tally of all fillings of the skew shape outer/inner with entries
// 1..num_vars that are weakly increasing in rows and strictly increasing in
// columns. Tries every filling of the cells, then filters.
inline std::map<std::vector<int>, long long> skew_tableaux(const std::vector<int>& outer, const std::vector<int>& inner,
                                                           int num_vars) {
  auto in_inner = [&](std::size_t r, int c) { return r < inner.size() && c < inner[r]; };
  std::vector<std::pair<std::size_t, int>> cells;
  for (std::size_t r = 0; r < outer.size(); ++r)
    for (int c = 0; c < outer[r]; ++c)
      if (!in_inner(r, c)) cells.emplace_back(r, c);
  std::map<std::pair<std::size_t, int>, int> value;
  std::map<std::vector<int>, long long> tally;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      for (const auto& [cell, v] : value) {
        auto [r, c] = cell;
        auto left = value.find({r, c - 1});
        if (left != value.end() && left->second > v) return;
        if (r > 0) {
          auto up = value.find({r - 1, c});
          if (up != value.end() && up->second >= v) return;
        }
      }
      std::vector<int> w(static_cast<std::size_t>(num_vars), 0);
      for (const auto& [cell, v] : value) ++w[static_cast<std::size_t>(v - 1)];
      ++tally[w];
      return;
    }
    for (int v = 1; v <= num_vars; ++v) {
      value[cells[idx]] = v;
      rec(idx + 1);
    }
    value.erase(cells[idx]);
  };
  rec(0);
  return tally;
}

}  // namespace oracle
