/*
   Copyright 2026 The wreath-eulerian Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/// \file
///
/// Dense integer polynomials with an explicit nominal degree, and the shape
/// predicates used on descent polynomials: palindromicity, unimodality and
/// exact real-rootedness.
///
/// Real roots are counted with Sturm chains over exact rationals. The chain
/// is built on the square-free part; multiplicities come from the sequence
/// p, gcd(p, p'), gcd(g, g'), ..., where a root of multiplicity m shows up
/// as a distinct root in exactly the first m members.

#ifndef WREATH_POLY_HPP
#define WREATH_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wreath/core.hpp"

namespace wreath {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class IntPolynomial {
 public:
  /// The constant 0 with nominal degree 0.
  IntPolynomial() : coeffs_(1) {}

  explicit IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw ParameterError("polynomial needs at least one coefficient");
  }

  IntPolynomial(std::initializer_list<long long> coefficients) {
    for (long long c : coefficients) coeffs_.emplace_back(c);
    if (coeffs_.empty()) throw ParameterError("polynomial needs at least one coefficient");
  }

  /// Zero polynomial padded to the given nominal degree.
  static IntPolynomial zero(std::size_t nominal_degree) {
    return IntPolynomial(std::vector<BigInt>(nominal_degree + 1));
  }

  static IntPolynomial monomial(std::size_t k, BigInt c = 1) {
    auto p = zero(k);
    p.coeffs_[k] = std::move(c);
    return p;
  }

  std::size_t nominal_degree() const { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  /// Coefficient of x^k; zero beyond the nominal degree.
  BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  void set_coefficient(std::size_t k, BigInt c) {
    if (k >= coeffs_.size()) coeffs_.resize(k + 1);
    coeffs_[k] = std::move(c);
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
  }

  /// Degree after dropping zero leading coefficients; nullopt for zero.
  std::optional<std::size_t> effective_degree() const {
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (coeffs_[k] != 0) return k;
    }
    return std::nullopt;
  }

  std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

inline IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) {
  const std::size_t d = std::max(p.nominal_degree(), q.nominal_degree());
  std::vector<BigInt> out(d + 1);
  for (std::size_t k = 0; k <= d; ++k) out[k] = p.coefficient(k) + q.coefficient(k);
  return IntPolynomial(std::move(out));
}

inline IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<BigInt> out(p.nominal_degree() + q.nominal_degree() + 1);
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return IntPolynomial(std::move(out));
}

inline IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) { return add(p, q); }
inline IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) { return multiply(p, q); }

/// Horner evaluation, exact.
inline BigInt evaluate(const IntPolynomial& p, const BigInt& x) {
  BigInt acc = 0;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

/// (1+x)^n by Pascal's rule.
inline IntPolynomial binomial_power(std::size_t n) {
  std::vector<BigInt> row{1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<BigInt> next(m + 1);
    next[0] = 1;
    next[m] = 1;
    for (std::size_t k = 1; k < m; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return IntPolynomial(std::move(row));
}

namespace detail {

inline void reject_zero(const IntPolynomial& p, const char* what) {
  if (p.is_zero()) throw ParameterError(std::string(what) + " is undefined for the zero polynomial");
}

}  // namespace detail

/// a_k == a_{D-k} against the nominal degree D.
inline bool is_palindromic(const IntPolynomial& p) {
  detail::reject_zero(p, "is_palindromic");
  const auto& c = p.coefficients();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

/// a_0 <= ... <= a_m >= ... >= a_D for some m.
inline bool is_unimodal(const IntPolynomial& p) {
  detail::reject_zero(p, "is_unimodal");
  const auto& c = p.coefficients();
  std::size_t k = 0;
  while (k + 1 < c.size() && c[k] <= c[k + 1]) ++k;
  while (k + 1 < c.size() && c[k] >= c[k + 1]) ++k;
  return k + 1 == c.size();
}

/// Dense polynomial over Q used by the Sturm machinery. Invariant: no zero
/// leading coefficient, except the zero polynomial which is empty.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> c) : c_(std::move(c)) { trim(); }
  explicit RationalPolynomial(const IntPolynomial& p) {
    for (const auto& a : p.coefficients()) c_.emplace_back(a);
    trim();
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const BigRational& leading() const { return c_.back(); }
  const std::vector<BigRational>& coefficients() const { return c_; }

  RationalPolynomial derivative() const {
    std::vector<BigRational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
    return RationalPolynomial(std::move(d));
  }

  /// Scales to leading coefficient +1.
  RationalPolynomial monic() const {
    if (is_zero()) return *this;
    RationalPolynomial out = *this;
    const BigRational lead = leading();
    for (auto& a : out.c_) a /= lead;
    return out;
  }

  RationalPolynomial negated() const {
    RationalPolynomial out = *this;
    for (auto& a : out.c_) a = -a;
    return out;
  }

  BigRational evaluate(const BigRational& x) const {
    BigRational acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  /// Euclidean division; returns {quotient, remainder}.
  std::pair<RationalPolynomial, RationalPolynomial> divide(const RationalPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<BigRational> rem = c_;
    const long dd = divisor.degree();
    std::vector<BigRational> quo(degree() >= dd ? static_cast<std::size_t>(degree() - dd + 1) : 0);
    for (long k = degree(); k >= dd; --k) {
      const BigRational factor = rem[static_cast<std::size_t>(k)] / divisor.leading();
      if (factor == 0) continue;
      quo[static_cast<std::size_t>(k - dd)] = factor;
      for (long j = 0; j <= dd; ++j) {
        rem[static_cast<std::size_t>(k - dd + j)] -= factor * divisor.c_[static_cast<std::size_t>(j)];
      }
    }
    return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigRational> c_;
};

/// Monic gcd over Q.
inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = a.divide(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Sturm chain p_0 = p, p_1 = p', p_{k+1} = -rem(p_{k-1}, p_k). Members are
/// rescaled by positive constants, which leaves sign variations unchanged.
class SturmChain {
 public:
  explicit SturmChain(const RationalPolynomial& p) {
    if (p.is_zero()) throw ParameterError("Sturm chain of the zero polynomial");
    chain_.push_back(scaled(p));
    auto d = p.derivative();
    if (d.is_zero()) return;
    chain_.push_back(scaled(d));
    while (true) {
      auto r = chain_[chain_.size() - 2].divide(chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(scaled(r.negated()));
    }
  }

  /// Sign variations at a finite point.
  std::size_t variations_at(const BigRational& x) const {
    std::vector<int> signs;
    for (const auto& q : chain_) {
      const BigRational v = q.evaluate(x);
      signs.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
    }
    return count(signs);
  }

  /// Sign variations at +infinity (positive = true) or -infinity.
  std::size_t variations_at_infinity(bool positive) const {
    std::vector<int> signs;
    for (const auto& q : chain_) {
      int s = q.leading() > 0 ? 1 : -1;
      if (!positive && q.degree() % 2 == 1) s = -s;
      signs.push_back(s);
    }
    return count(signs);
  }

  /// Distinct roots of p in the half-open interval (lo, hi]; an empty bound
  /// stands for the matching infinity.
  std::size_t roots_in(const std::optional<BigRational>& lo, const std::optional<BigRational>& hi) const {
    const std::size_t vlo = lo ? variations_at(*lo) : variations_at_infinity(false);
    const std::size_t vhi = hi ? variations_at(*hi) : variations_at_infinity(true);
    return vlo >= vhi ? vlo - vhi : 0;
  }

  std::size_t length() const { return chain_.size(); }

 private:
  static RationalPolynomial scaled(const RationalPolynomial& q) {
    // Divide by |leading|, keeping the sign of the leading coefficient.
    const BigRational lead = q.leading();
    auto m = q.monic();
    return lead < 0 ? m.negated() : m;
  }

  static std::size_t count(const std::vector<int>& signs) {
    std::size_t v = 0;
    int last = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  std::vector<RationalPolynomial> chain_;
};

/// Distinct real roots in (lo, hi]; the default bounds cover the real line.
inline std::size_t distinct_real_root_count(const IntPolynomial& p, const std::optional<BigRational>& lo = std::nullopt,
                                            const std::optional<BigRational>& hi = std::nullopt) {
  detail::reject_zero(p, "real root counting");
  RationalPolynomial rp(p);
  if (rp.degree() == 0) return 0;
  const auto square_free = rp.divide(gcd(rp, rp.derivative())).first;
  return SturmChain(square_free).roots_in(lo, hi);
}

/// Real roots counted with multiplicity, in (lo, hi].
inline std::size_t real_root_count(const IntPolynomial& p, const std::optional<BigRational>& lo = std::nullopt,
                                   const std::optional<BigRational>& hi = std::nullopt) {
  detail::reject_zero(p, "real root counting");
  std::size_t total = 0;
  RationalPolynomial g(p);
  while (g.degree() > 0) {
    const auto next = gcd(g, g.derivative());
    const auto square_free = g.divide(next).first;
    total += SturmChain(square_free).roots_in(lo, hi);
    g = next;
  }
  return total;
}

/// All roots real: the count with multiplicity equals the effective degree.
inline bool is_real_rooted(const IntPolynomial& p) {
  detail::reject_zero(p, "is_real_rooted");
  return real_root_count(p) == *p.effective_degree();
}

}  // namespace wreath

#endif  // WREATH_POLY_HPP
