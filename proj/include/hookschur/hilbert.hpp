#pragma once

// Generating functions for partitions in a (k,l)-hook: the row-bounded
// series G_k, the hook recurrence, the numerator polynomial A^{k,l} by
// recurrence and in closed form, the resulting Hilbert series, and exact
// verifiers for the q-binomial identities that connect them.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partitions.hpp"
#include "qseries.hpp"

namespace hookschur {

struct HookParams {
  int k = 0;
  int l = 0;
  std::size_t order = kDefaultOrder;
};

// G_k(t) = prod_{i=1..k} 1/(1 - t^i)
inline TruncSeries g_rows(int k, std::size_t order) {
  if (k < 0) throw std::invalid_argument("g_rows: k must be non-negative");
  TruncSeries g = TruncSeries::one(order);
  for (int i = 1; i <= k; ++i) g *= inv_one_minus_tpow(i, order);
  return g;
}

// G_{k,l} = G_{k,l-1} + t^{l(k+1)} G_k G_l, from G_{k,0} = G_k.
inline TruncSeries g_hook_recurrence(int k, int l, std::size_t order) {
  if (k < 0 || l < 0) throw std::invalid_argument("g_hook_recurrence: k and l must be non-negative");
  const TruncSeries gk = g_rows(k, order);
  TruncSeries g = gk;
  TruncSeries gm = TruncSeries::one(order);
  for (int m = 1; m <= l; ++m) {
    gm *= inv_one_minus_tpow(m, order);
    g += (gk * gm).shifted(static_cast<std::size_t>(m) * static_cast<std::size_t>(k + 1));
  }
  return g;
}

// A^{k,l} = (1 - t^{k+l}) A^{k,l-1} + t^{l(k+1)} [k+l, l], with A^{k,0} = 1.
inline QPolynomial a_poly_recurrence(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("a_poly_recurrence: k and l must be non-negative");
  QPolynomial a = QPolynomial::one();
  for (int m = 1; m <= l; ++m) {
    const QPolynomial factor = QPolynomial::one() - QPolynomial::monomial(1, static_cast<std::size_t>(k + m));
    a = factor * a + gauss_binomial(k + m, m).shifted(static_cast<std::size_t>(m) * static_cast<std::size_t>(k + 1));
  }
  return a;
}

namespace detail {

// t^e * p. Terms with a zero q-binomial factor are skipped before this is
// reached, so a negative exponent here is a bug in the caller.
inline QPolynomial times_tpow(long e, const QPolynomial& p) {
  if (p.is_zero()) return {};
  if (e < 0) throw std::logic_error("negative power of t on a nonzero term");
  return p.shifted(static_cast<std::size_t>(e));
}

}  // namespace detail

// A^{k,l} = 1 + sum_{i=1..l} t^{i(k+l+1)} [k,i] sum_{j=0..l-i} t^{j(k-i+1)} [i+j-1, j]
inline QPolynomial a_poly_closed(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("a_poly_closed: k and l must be non-negative");
  QPolynomial a = QPolynomial::one();
  for (int i = 1; i <= l; ++i) {
    const QPolynomial outer = gauss_binomial(k, i);
    if (outer.is_zero()) continue;
    QPolynomial inner;
    for (int j = 0; j <= l - i; ++j)
      inner += detail::times_tpow(static_cast<long>(j) * (k - i + 1), gauss_binomial(i + j - 1, j));
    a += detail::times_tpow(static_cast<long>(i) * (k + l + 1), outer * inner);
  }
  return a;
}

// G_{k,l}(t) = A^{k,l}(t) * prod_{i=1..k+l} 1/(1 - t^i)
inline TruncSeries hilbert_series(int k, int l, std::size_t order) {
  if (k < 0 || l < 0) throw std::invalid_argument("hilbert_series: k and l must be non-negative");
  return series_from_poly(a_poly_closed(k, l), order) * g_rows(k + l, order);
}

inline TruncSeries hilbert_series(const HookParams& p) { return hilbert_series(p.k, p.l, p.order); }

// ---------------------------------------------------------------------------
// Verification reports

struct Mismatch {
  std::size_t exponent = 0;
  BigInt lhs;
  BigInt rhs;
};

struct Report {
  // A secondary comparison reported alongside the main one without
  // affecting pass.
  struct Check {
    bool pass = true;
    std::optional<Mismatch> first_mismatch;
  };

  std::string identity;
  std::vector<std::pair<std::string, long long>> params;
  bool pass = true;
  std::optional<Mismatch> first_mismatch;
  std::optional<Check> display;
};

// Lowest exponent at which the two sides differ.
inline std::optional<Mismatch> first_mismatch(const QPolynomial& lhs, const QPolynomial& rhs) {
  const std::size_t n = std::max(lhs.coeffs().size(), rhs.coeffs().size());
  for (std::size_t i = 0; i < n; ++i) {
    BigInt a = lhs.coeff(i), b = rhs.coeff(i);
    if (a != b) return Mismatch{i, std::move(a), std::move(b)};
  }
  return std::nullopt;
}

// Equality through the common order only.
inline std::optional<Mismatch> first_mismatch(const TruncSeries& lhs, const TruncSeries& rhs) {
  if (lhs.order() != rhs.order()) throw std::invalid_argument("first_mismatch: series orders differ");
  for (std::size_t i = 0; i <= lhs.order(); ++i)
    if (lhs[i] != rhs[i]) return Mismatch{i, lhs[i], rhs[i]};
  return std::nullopt;
}

namespace detail {

template <typename T>
Report make_report(std::string identity, std::vector<std::pair<std::string, long long>> params, const T& lhs,
                   const T& rhs) {
  Report r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.first_mismatch = first_mismatch(lhs, rhs);
  r.pass = !r.first_mismatch;
  return r;
}

}  // namespace detail

// (1 - t^i)[k,i] = (1 - t^{k-i+1})[k,i-1] for 1 <= i <= k <= max_k, then
// [a,b] = [a-1,b-1] + t^b [a-1,b] for 1 <= b <= a <= max_k.
inline std::vector<Report> verify_tbinomial_identities(int max_k) {
  if (max_k < 1) throw std::invalid_argument("verify_tbinomial_identities: max_k must be at least 1");
  std::vector<Report> out;
  const QPolynomial one = QPolynomial::one();
  for (int k = 1; k <= max_k; ++k) {
    for (int i = 1; i <= k; ++i) {
      const QPolynomial lhs = (one - QPolynomial::monomial(1, static_cast<std::size_t>(i))) * gauss_binomial(k, i);
      const QPolynomial rhs =
          (one - QPolynomial::monomial(1, static_cast<std::size_t>(k - i + 1))) * gauss_binomial(k, i - 1);
      out.push_back(detail::make_report("tbinomial-ratio", {{"k", k}, {"i", i}}, lhs, rhs));
    }
  }
  for (int a = 1; a <= max_k; ++a) {
    for (int b = 1; b <= a; ++b) {
      const QPolynomial lhs = gauss_binomial(a, b);
      const QPolynomial rhs = gauss_binomial(a - 1, b - 1) + gauss_binomial(a - 1, b).shifted(static_cast<std::size_t>(b));
      out.push_back(detail::make_report("tbinomial-pascal", {{"a", a}, {"b", b}}, lhs, rhs));
    }
  }
  return out;
}

// Closed form of A^{k,l} against its defining recurrence.
inline Report verify_lemma(int k, int l) {
  return detail::make_report("lemma", {{"k", k}, {"l", l}}, a_poly_closed(k, l), a_poly_recurrence(k, l));
}

// t^{l(k+1)} sum_{i=0..l} t^{i^2}[k,i][l,i] = t^{l(k+1)} [k+l,l]
inline Report verify_qvandermonde(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("verify_qvandermonde: k and l must be non-negative");
  const auto shift = static_cast<std::size_t>(l) * static_cast<std::size_t>(k + 1);
  QPolynomial sum;
  for (int i = 0; i <= l; ++i)
    sum += (gauss_binomial(k, i) * gauss_binomial(l, i)).shifted(static_cast<std::size_t>(i) * static_cast<std::size_t>(i));
  return detail::make_report("qvandermonde", {{"k", k}, {"l", l}}, sum.shifted(shift),
                             gauss_binomial(k + l, l).shifted(shift));
}

// The five summand groups of the expanded form of
// A^{k,l} - A^{k,l-1} + t^{k+l} A^{k,l-1}, evaluated term by term.
inline QPolynomial intermediate_display(int k, int l) {
  if (l < 2) throw std::out_of_range("intermediate_display: requires l >= 2, got l=" + std::to_string(l));
  if (k < 0) throw std::invalid_argument("intermediate_display: k must be non-negative");
  using detail::times_tpow;
  const long kl = k + l;
  QPolynomial total = QPolynomial::monomial(1, static_cast<std::size_t>(l * (k + 1)));

  for (int i = 1; i <= l - 2; ++i) {
    const QPolynomial outer = gauss_binomial(k, i);
    if (outer.is_zero()) continue;
    const long lead = (i + 1) * kl;

    QPolynomial g1;
    for (int j = 0; j <= l - i - 2; ++j)
      g1 += times_tpow(static_cast<long>(j + 1) * (k - i), gauss_binomial(i + j, j));

    QPolynomial g2;
    for (int j = 0; j <= l - 2 - i; ++j) {
      const QPolynomial diff =
          times_tpow(j, gauss_binomial(i + j - 1, j)) - gauss_binomial(i + j, j);
      g2 += times_tpow(static_cast<long>(j) * (k - i), diff);
    }

    const QPolynomial g3 =
        times_tpow(static_cast<long>(l - i - 1) * (k - i + 1), gauss_binomial(l - 2, l - 1 - i));

    total += times_tpow(lead, outer * (g1 + g2 + g3));
  }

  for (int i = 1; i <= l; ++i)
    total += times_tpow(static_cast<long>(l) * (k + 1) + static_cast<long>(i) * i,
                        gauss_binomial(k, i) * gauss_binomial(l - 1, l - i));
  total += times_tpow(static_cast<long>(l) * kl, gauss_binomial(k, l - 1) * gauss_binomial(l - 2, 0));
  return total;
}

// pass compares A^{k,l} - A^{k,l-1} + t^{k+l} A^{k,l-1} (from the recurrence)
// with t^{l(k+1)}[k+l,l]. The term-by-term expansion is compared against the
// same left-hand side and reported in display.
inline Report verify_intermediate_expression(int k, int l) {
  if (l < 2) throw std::out_of_range("verify_intermediate_expression: requires l >= 2, got l=" + std::to_string(l));
  if (k < 0) throw std::invalid_argument("verify_intermediate_expression: k must be non-negative");
  const QPolynomial a_l = a_poly_recurrence(k, l);
  const QPolynomial a_prev = a_poly_recurrence(k, l - 1);
  const QPolynomial lhs = a_l - a_prev + a_prev.shifted(static_cast<std::size_t>(k + l));
  const QPolynomial target = gauss_binomial(k + l, l).shifted(static_cast<std::size_t>(l) * static_cast<std::size_t>(k + 1));
  Report r = detail::make_report("intermediate", {{"k", k}, {"l", l}}, lhs, target);
  Report::Check display;
  display.first_mismatch = first_mismatch(intermediate_display(k, l), lhs);
  display.pass = !display.first_mismatch;
  r.display = std::move(display);
  return r;
}

// Closed form, hook recurrence and brute-force hook counts agree through
// t^order, and the closed form is symmetric in (k, l).
inline std::vector<Report> verify_theorem(int k, int l, std::size_t order) {
  if (k < 0 || l < 0) throw std::invalid_argument("verify_theorem: k and l must be non-negative");
  const TruncSeries closed = hilbert_series(k, l, order);
  const TruncSeries recurrence = g_hook_recurrence(k, l, order);
  const TruncSeries oracle = hook_count_series(k, l, order);
  const TruncSeries swapped = hilbert_series(l, k, order);
  const std::vector<std::pair<std::string, long long>> params{{"k", k}, {"l", l}, {"N", static_cast<long long>(order)}};
  return {
      detail::make_report("theorem-closed-vs-oracle", params, closed, oracle),
      detail::make_report("theorem-recurrence-vs-oracle", params, recurrence, oracle),
      detail::make_report("theorem-closed-vs-recurrence", params, closed, recurrence),
      detail::make_report("theorem-kl-symmetry", params, closed, swapped),
  };
}

}  // namespace hookschur
