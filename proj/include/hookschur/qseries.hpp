#pragma once

// Exact univariate arithmetic in t: dense integer polynomials, truncated
// power series, q-Pochhammer symbols and Gaussian binomial coefficients.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hookschur {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial in t with exact integer coefficients. coeffs()[i] is the
// coefficient of t^i; the top stored coefficient is never zero.
class QPolynomial {
 public:
  QPolynomial() = default;

  explicit QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  QPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }

  static QPolynomial one() { return QPolynomial({1}); }

  // c * t^exponent
  static QPolynomial monomial(const BigInt& c, std::size_t exponent) {
    std::vector<BigInt> v(exponent + 1);
    v[exponent] = c;
    return QPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
  }

  // Multiply by t^e.
  QPolynomial shifted(std::size_t e) const {
    if (is_zero()) return {};
    std::vector<BigInt> v(e + coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(e));
    return QPolynomial(std::move(v));
  }

  QPolynomial operator-() const {
    QPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }

  QPolynomial& operator-=(const QPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPolynomial(std::move(v));
  }

  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline QPolynomial poly_add(const QPolynomial& a, const QPolynomial& b) { return a + b; }
inline QPolynomial poly_mul(const QPolynomial& a, const QPolynomial& b) { return a * b; }

// Quotient and remainder of a / b over the integers. Throws std::domain_error
// for b == 0 and when a quotient coefficient would not be integral.
inline std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPolynomial{}, a};
  std::vector<BigInt> rem = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<BigInt> quot(rem.size() - db);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const BigInt& top = rem[i + db];
    if (top == 0) continue;
    if (top % d[db] != 0) throw std::domain_error("polynomial division leaves a non-integral quotient");
    BigInt q = top / d[db];
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * d[j];
    quot[i] = std::move(q);
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

// Power series in t known exactly through t^order.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}

  TruncSeries(std::size_t order, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order + 1)
      throw std::invalid_argument("TruncSeries: expected " + std::to_string(order + 1) +
                                  " coefficients, got " + std::to_string(coeffs_.size()));
  }

  static TruncSeries one(std::size_t order) {
    TruncSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }

  // Multiply by t^e, dropping everything past the order.
  TruncSeries shifted(std::size_t e) const {
    TruncSeries r(order());
    for (std::size_t i = 0; i + e <= order(); ++i) r.coeffs_[i + e] = coeffs_[i];
    return r;
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  TruncSeries& operator-=(const TruncSeries& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_order(b);
    const std::size_t n = a.order();
    TruncSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  void check_order(const TruncSeries& o) const {
    if (o.order() != order())
      throw std::invalid_argument("TruncSeries: order mismatch (" + std::to_string(order()) + " vs " +
                                  std::to_string(o.order()) + ")");
  }

  std::vector<BigInt> coeffs_;
};

inline constexpr std::size_t kDefaultOrder = 50;

inline TruncSeries series_from_poly(const QPolynomial& p, std::size_t order) {
  std::vector<BigInt> v(order + 1);
  for (std::size_t i = 0; i <= order && i < p.coeffs().size(); ++i) v[i] = p.coeffs()[i];
  return TruncSeries(order, std::move(v));
}

inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

// 1 / (1 - t^i)
inline TruncSeries inv_one_minus_tpow(int i, std::size_t order) {
  if (i <= 0) throw std::invalid_argument("inv_one_minus_tpow: exponent must be positive, got " + std::to_string(i));
  std::vector<BigInt> v(order + 1);
  for (std::size_t e = 0; e <= order; e += static_cast<std::size_t>(i)) v[e] = 1;
  return TruncSeries(order, std::move(v));
}

// (t^m; t)_n = (1 - t^m)(1 - t^{m+1}) ... (1 - t^{m+n-1})
inline QPolynomial qpochhammer(int m, int n) {
  if (m < 1 || n < 0)
    throw std::invalid_argument("qpochhammer: need m >= 1 and n >= 0, got m=" + std::to_string(m) +
                                " n=" + std::to_string(n));
  QPolynomial r = QPolynomial::one();
  for (int j = 0; j < n; ++j)
    r *= QPolynomial::one() - QPolynomial::monomial(1, static_cast<std::size_t>(m + j));
  return r;
}

namespace detail {

class GaussCache {
 public:
  const QPolynomial* find(int a, int b) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find({a, b});
    return it == table_.end() ? nullptr : &it->second;
  }

  // std::map nodes are stable, so returned pointers stay valid.
  const QPolynomial& insert(int a, int b, QPolynomial p) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace({a, b}, std::move(p)).first->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<int, int>, QPolynomial> table_;
};

inline GaussCache& gauss_cache() {
  static GaussCache cache;
  return cache;
}

}  // namespace detail

// Gaussian binomial [a over b] via [a,b] = [a-1,b-1] + t^b [a-1,b], memoized.
// Total: zero outside 0 <= b <= a.
inline QPolynomial gauss_binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return {};
  if (b == 0 || b == a) return QPolynomial::one();
  auto& cache = detail::gauss_cache();
  if (const QPolynomial* hit = cache.find(a, b)) return *hit;
  QPolynomial p = gauss_binomial(a - 1, b - 1) + gauss_binomial(a - 1, b).shifted(static_cast<std::size_t>(b));
  return cache.insert(a, b, std::move(p));
}

// Same coefficient computed as (t;t)_a / ((t;t)_b (t;t)_{a-b}). A nonzero
// remainder means the arithmetic is broken and throws std::logic_error.
inline QPolynomial gauss_binomial_quotient(int a, int b) {
  if (a < 0 || b < 0 || b > a) return {};
  auto [q, r] = divmod(qpochhammer(1, a), qpochhammer(1, b) * qpochhammer(1, a - b));
  if (!r.is_zero())
    throw std::logic_error("gauss_binomial_quotient: inexact division at a=" + std::to_string(a) +
                           " b=" + std::to_string(b));
  return q;
}

namespace detail {

inline std::string render_coeffs(const std::vector<BigInt>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const BigInt& c = coeffs[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (i == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

// Ascending powers: "1 - t - t^2 + t^3".
inline std::string to_string(const QPolynomial& p) { return detail::render_coeffs(p.coeffs()); }
inline std::string to_string(const TruncSeries& s) { return detail::render_coeffs(s.coeffs()); }

}  // namespace hookschur
