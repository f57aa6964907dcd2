#pragma once

// Integer partitions, Young-diagram operations and the brute-force counting
// series that serve as oracles for the generating functions.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qseries.hpp"

namespace hookschur {

class Partition {
 public:
  Partition() = default;

  // Throws std::invalid_argument unless parts is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }

  // Number of nonzero rows.
  int rows() const { return static_cast<int>(parts_.size()); }

  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  // 0-based row access; rows past the end read as 0.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  if (!lambda.empty()) {
    cols.assign(static_cast<std::size_t>(lambda[0]), 0);
    for (int p : lambda.parts())
      for (int c = 0; c < p; ++c) ++cols[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(cols));
}

// Diagram containment: mu_i <= lambda_i for every row.
inline bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.rows() > lambda.rows()) return false;
  for (std::size_t i = 0; i < mu.parts().size(); ++i)
    if (mu[i] > lambda[i]) return false;
  return true;
}

// Every part below row k has length at most l.
inline bool in_hook(const Partition& lambda, int k, int l) {
  return lambda[static_cast<std::size_t>(k < 0 ? 0 : k)] <= l;
}

class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(outer_, inner_)) throw std::invalid_argument("skew shape: inner partition is not contained in outer");
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }

 private:
  Partition outer_;
  Partition inner_;
};

namespace detail {

inline void visit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                             const std::function<void(const std::vector<int>&)>& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    visit_partitions(remaining - p, p, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace detail

// Calls visit on the parts of every partition of n in reverse lexicographic
// order: (n) first, (1^n) last.
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_partition: n must be non-negative");
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  detail::visit_partitions(n, n, prefix, visit);
}

inline std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<int>& parts) { out.emplace_back(parts); });
  return out;
}

// H_n(k, l), in the same order as enumerate_partitions.
inline std::vector<Partition> enumerate_hook(int n, int k, int l) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n))
    if (in_hook(p, k, l)) out.push_back(std::move(p));
  return out;
}

namespace detail {

inline TruncSeries count_series(std::size_t order, const std::function<bool(const std::vector<int>&)>& keep) {
  std::vector<BigInt> v(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    long long count = 0;
    for_each_partition(static_cast<int>(n), [&](const std::vector<int>& parts) {
      if (keep(parts)) ++count;
    });
    v[n] = count;
  }
  return TruncSeries(order, std::move(v));
}

}  // namespace detail

// Coefficient n is |H_n(k, l)|, by enumeration.
inline TruncSeries hook_count_series(int k, int l, std::size_t order) {
  const auto row = static_cast<std::size_t>(k < 0 ? 0 : k);
  return detail::count_series(order, [&](const std::vector<int>& parts) {
    return row >= parts.size() || parts[row] <= l;
  });
}

// Partitions with at most k parts, by enumeration.
inline TruncSeries count_bounded_rows_series(int k, std::size_t order) {
  return detail::count_series(order, [&](const std::vector<int>& parts) {
    return static_cast<long>(parts.size()) <= k;
  });
}

// Partitions with at most k parts, each at most l, by enumeration.
inline TruncSeries count_boxed_series(int k, int l, std::size_t order) {
  return detail::count_series(order, [&](const std::vector<int>& parts) {
    return static_cast<long>(parts.size()) <= k && (parts.empty() || parts[0] <= l);
  });
}

// "[3,1,1]", "[]" for the empty partition.
inline std::string to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts()[i]);
  }
  return s + "]";
}

// Parses "3,1,1" (optionally bracketed). The empty string and "[]" give the
// empty partition. Throws std::invalid_argument on anything else, including
// increasing sequences; parts are never reordered.
inline Partition parse_partition(std::string_view text) {
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  std::vector<int> parts;
  if (text.empty()) return {};
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    if (field.empty() || field.size() > 9)
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    int value = 0;
    for (char c : field) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
      value = value * 10 + (c - '0');
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace hookschur
