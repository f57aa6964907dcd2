#pragma once

// Sparse polynomials over two alphabets x_1..x_k; y_1..y_l, and Schur, skew
// Schur and hook Schur polynomials by semistandard tableau enumeration.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partitions.hpp"
#include "qseries.hpp"

namespace hookschur {

enum class Block { x, y };

// Exponent vectors have num_x + num_y slots, x-block first. Zero
// coefficients are never stored, so equality is map equality.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, BigInt>;

  MultiPoly(int num_x, int num_y) : num_x_(num_x), num_y_(num_y) {
    if (num_x < 0 || num_y < 0) throw std::invalid_argument("MultiPoly: negative alphabet size");
  }

  static MultiPoly constant(int num_x, int num_y, const BigInt& c) {
    MultiPoly p(num_x, num_y);
    p.add_term(Exponents(static_cast<std::size_t>(num_x + num_y), 0), c);
    return p;
  }

  int num_x() const { return num_x_; }
  int num_y() const { return num_y_; }
  int num_vars() const { return num_x_ + num_y_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const BigInt& c) {
    if (static_cast<int>(e.size()) != num_vars())
      throw std::invalid_argument("MultiPoly: exponent vector has wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_alphabets(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_alphabets(b);
    MultiPoly r(a.num_x_, a.num_y_);
    Exponents e(static_cast<std::size_t>(a.num_vars()));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  // Same polynomial with the roles of the two alphabets exchanged: y_j
  // becomes x_j and x_i becomes y_i.
  MultiPoly swapped_alphabets() const {
    MultiPoly r(num_y_, num_x_);
    for (const auto& [e, c] : terms_) {
      Exponents s(e.begin() + num_x_, e.end());
      s.insert(s.end(), e.begin(), e.begin() + num_x_);
      r.terms_.emplace(std::move(s), c);
    }
    return r;
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void check_alphabets(const MultiPoly& o) const {
    if (o.num_x_ != num_x_ || o.num_y_ != num_y_)
      throw std::invalid_argument("MultiPoly: alphabet mismatch");
  }

  int num_x_;
  int num_y_;
  TermMap terms_;
};

// Places p's x-block and y-block into a larger (num_x, num_y) layout.
inline MultiPoly embed(const MultiPoly& p, int num_x, int num_y) {
  if (p.num_x() > num_x || p.num_y() > num_y) throw std::invalid_argument("embed: target alphabet too small");
  MultiPoly r(num_x, num_y);
  MultiPoly::Exponents e(static_cast<std::size_t>(num_x + num_y));
  for (const auto& [src, c] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    std::copy(src.begin(), src.begin() + p.num_x(), e.begin());
    std::copy(src.begin() + p.num_x(), src.end(), e.begin() + num_x);
    r.add_term(e, c);
  }
  return r;
}

namespace detail {

// Backtracking fill of the skew cells in row-major order. Rows weakly
// increase left to right; columns strictly increase downward. Each complete
// filling adds its content vector to the weight tally.
class SkewTableauCounter {
 public:
  SkewTableauCounter(const SkewShape& shape, int num_vars) : num_vars_(num_vars) {
    const Partition& outer = shape.outer();
    const Partition& inner = shape.inner();
    grid_.resize(static_cast<std::size_t>(outer.rows()));
    for (std::size_t r = 0; r < grid_.size(); ++r) {
      grid_[r].assign(static_cast<std::size_t>(outer[r]), 0);
      for (int c = inner[r]; c < outer[r]; ++c) {
        Cell cell{r, static_cast<std::size_t>(c), false, false};
        cell.has_left = c > inner[r];
        cell.has_above = r > 0 && c >= inner[r - 1];
        cells_.push_back(cell);
      }
    }
    weight_.assign(static_cast<std::size_t>(num_vars), 0);
  }

  std::map<std::vector<int>, BigInt> run() {
    tally_.clear();
    fill(0);
    return std::move(tally_);
  }

 private:
  struct Cell {
    std::size_t row;
    std::size_t col;
    bool has_left;
    bool has_above;
  };

  void fill(std::size_t idx) {
    if (idx == cells_.size()) {
      tally_[weight_] += 1;
      return;
    }
    const Cell& cell = cells_[idx];
    int lo = 1;
    if (cell.has_left) lo = std::max(lo, grid_[cell.row][cell.col - 1]);
    if (cell.has_above) lo = std::max(lo, grid_[cell.row - 1][cell.col] + 1);
    for (int v = lo; v <= num_vars_; ++v) {
      grid_[cell.row][cell.col] = v;
      ++weight_[static_cast<std::size_t>(v - 1)];
      fill(idx + 1);
      --weight_[static_cast<std::size_t>(v - 1)];
    }
    grid_[cell.row][cell.col] = 0;
  }

  int num_vars_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> weight_;
  std::map<std::vector<int>, BigInt> tally_;
};

inline MultiPoly from_weights(std::map<std::vector<int>, BigInt> tally, int num_vars, Block block) {
  MultiPoly p = block == Block::x ? MultiPoly(num_vars, 0) : MultiPoly(0, num_vars);
  for (const auto& [w, c] : tally) p.add_term(w, c);
  return p;
}

}  // namespace detail

// Skew Schur polynomial in num_vars variables of the given block, as the
// content generating function of semistandard tableaux of the skew shape.
inline MultiPoly skew_schur_poly(const SkewShape& shape, int num_vars, Block block = Block::y) {
  if (num_vars < 0) throw std::invalid_argument("skew_schur_poly: negative variable count");
  detail::SkewTableauCounter counter(shape, num_vars);
  return detail::from_weights(counter.run(), num_vars, block);
}

inline MultiPoly schur_poly(const Partition& lambda, int num_vars, Block block = Block::x) {
  if (num_vars < 0) throw std::invalid_argument("schur_poly: negative variable count");
  if (lambda.rows() > num_vars) return block == Block::x ? MultiPoly(num_vars, 0) : MultiPoly(0, num_vars);
  return skew_schur_poly(SkewShape(lambda, Partition{}), num_vars, block);
}

// Visits every partition mu with mu contained in lambda, including the empty
// partition and lambda itself.
inline void for_each_subpartition(const Partition& lambda, const std::function<void(const Partition&)>& visit) {
  std::vector<int> rows;
  std::function<void(std::size_t, int)> rec = [&](std::size_t r, int cap) {
    visit(Partition(rows));
    if (r >= lambda.parts().size()) return;
    for (int v = std::min(cap, lambda[r]); v >= 1; --v) {
      rows.push_back(v);
      rec(r + 1, v);
      rows.pop_back();
    }
  };
  rec(0, lambda.empty() ? 0 : lambda[0]);
}

// HS_lambda(x_1..x_k; y_1..y_l) = sum over mu in lambda of s_mu(x) s_{lambda'/mu'}(y).
inline MultiPoly hook_schur(const Partition& lambda, int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("hook_schur: negative alphabet size");
  const Partition lambda_conj = conjugate(lambda);
  MultiPoly result(k, l);
  for_each_subpartition(lambda, [&](const Partition& mu) {
    MultiPoly sx = schur_poly(mu, k, Block::x);
    if (sx.is_zero()) return;
    MultiPoly sy = skew_schur_poly(SkewShape(lambda_conj, conjugate(mu)), l, Block::y);
    if (sy.is_zero()) return;
    result += embed(sx, k, l) * embed(sy, k, l);
  });
  return result;
}

// Invariance under each adjacent transposition inside one alphabet.
inline bool is_symmetric_in_block(const MultiPoly& p, Block block) {
  const int first = block == Block::x ? 0 : p.num_x();
  const int count = block == Block::x ? p.num_x() : p.num_y();
  for (int i = first; i + 1 < first + count; ++i) {
    for (const auto& [e, c] : p.terms()) {
      MultiPoly::Exponents s = e;
      std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i + 1)]);
      auto it = p.terms().find(s);
      if (it == p.terms().end() || it->second != c) return false;
    }
  }
  return true;
}

inline bool is_homogeneous(const MultiPoly& p, int degree) {
  for (const auto& [e, c] : p.terms()) {
    int d = 0;
    for (int v : e) d += v;
    if (d != degree) return false;
  }
  return true;
}

// Terms in graded lexicographic order, highest first.
inline std::vector<std::pair<MultiPoly::Exponents, BigInt>> sorted_terms(const MultiPoly& p) {
  std::vector<std::pair<MultiPoly::Exponents, BigInt>> v(p.terms().begin(), p.terms().end());
  auto degree = [](const MultiPoly::Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
  };
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    const int da = degree(a.first), db = degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return v;
}

// "x1^2*y1 + 3*x1*y1^2"; "0" for the zero polynomial.
inline std::string to_string(const MultiPoly& p) {
  std::string out;
  for (const auto& [e, c] : sorted_terms(p)) {
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      const bool is_x = static_cast<int>(i) < p.num_x();
      mono += (is_x ? "x" : "y") + std::to_string(is_x ? i + 1 : i + 1 - static_cast<std::size_t>(p.num_x()));
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += mag.str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.str() + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace hookschur
