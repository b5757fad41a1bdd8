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
/// Exhaustive enumeration of S_n, Z_alpha wr S_n, its fixed-last-color
/// slices and the quotient by H (represented by last color 0), with
/// statistic aggregation into polynomials and the identity verifiers.
///
/// Elements are produced in lexicographic order of (window, colors).
/// Parallel runs split the work into shards keyed by the first window value
/// and, when more shards are wanted, a prefix of the color vector. Shards
/// never talk to each other; their partial results are merged in shard
/// order, so the output does not depend on the worker count.

#ifndef WREATH_ENUMERATE_HPP
#define WREATH_ENUMERATE_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <iterator>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "wreath/core.hpp"
#include "wreath/poly.hpp"
#include "wreath/stats.hpp"

namespace wreath {

enum class Statistic { colored_descent, flag };

inline std::string to_string(Statistic s) { return s == Statistic::flag ? "flag" : "descent"; }

/// Which slice of Z_alpha wr S_n to enumerate.
struct Domain {
  enum class Kind { quotient, full, fixed_last_color };
  Kind kind = Kind::quotient;
  unsigned beta = 0;

  static Domain quotient() { return {Kind::quotient, 0}; }
  static Domain full() { return {Kind::full, 0}; }
  static Domain fixed_last_color(unsigned beta) { return {Kind::fixed_last_color, beta}; }

  std::string name() const {
    switch (kind) {
      case Kind::quotient: return "quotient";
      case Kind::full: return "full";
      case Kind::fixed_last_color: return "fixed:" + std::to_string(beta);
    }
    return "?";
  }

  friend bool operator==(const Domain&, const Domain&) = default;
};

inline constexpr std::uint64_t kDefaultElementCap = 1'000'000'000;

class ResourceCapExceeded : public std::runtime_error {
 public:
  ResourceCapExceeded(const BigInt& required, const BigInt& cap)
      : std::runtime_error("enumeration needs " + required.str() + " elements, exceeding the cap of " + cap.str()),
        required_(required),
        cap_(cap) {}

  const BigInt& required() const { return required_; }
  const BigInt& cap() const { return cap_; }

 private:
  BigInt required_;
  BigInt cap_;
};

struct EnumerationOptions {
  BigInt cap = kDefaultElementCap;
  unsigned threads = 1;  ///< 0 selects std::thread::hardware_concurrency()
};

inline BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

inline BigInt domain_cardinality(unsigned alpha, std::size_t n, const Domain& d) {
  const std::size_t free_colors = d.kind == Domain::Kind::full ? n : n - 1;
  return boost::multiprecision::pow(BigInt(alpha), static_cast<unsigned>(free_colors)) * factorial(n);
}

namespace detail {

inline void check_parameters(unsigned alpha, std::size_t n, const Domain& d) {
  if (alpha < 1) throw ParameterError("alpha must be >= 1");
  if (n < 1) throw ParameterError("n must be >= 1");
  if (n > 64) throw ParameterError("n must be <= 64");
  if (d.kind == Domain::Kind::fixed_last_color && d.beta >= alpha) {
    throw ParameterError("beta must satisfy 0 <= beta < alpha");
  }
}

}  // namespace detail

/// Pre-flight check: throws ResourceCapExceeded with the exact count.
inline void check_cap(unsigned alpha, std::size_t n, const Domain& d, const BigInt& cap) {
  detail::check_parameters(alpha, n, d);
  const BigInt required = domain_cardinality(alpha, n, d);
  if (required > cap) throw ResourceCapExceeded(required, cap);
}

/// Restricts enumeration to elements with w_1 = first_value (0 = any) whose
/// colors start with color_prefix.
struct Shard {
  unsigned first_value = 0;
  std::vector<unsigned> color_prefix;
};

/// Walks one shard of a domain in lexicographic order of (window, colors).
class ElementCursor {
 public:
  ElementCursor(unsigned alpha, std::size_t n, Domain domain, const Shard& shard = {})
      : alpha_(alpha), window_(n), colors_(n, 0) {
    detail::check_parameters(alpha, n, domain);
    free_end_ = domain.kind == Domain::Kind::full ? n : n - 1;
    if (domain.kind == Domain::Kind::fixed_last_color) colors_[n - 1] = domain.beta;
    if (shard.color_prefix.size() > free_end_) throw ParameterError("color prefix longer than the free colors");
    for (std::size_t i = 0; i < shard.color_prefix.size(); ++i) {
      if (shard.color_prefix[i] >= alpha) throw ParameterError("color prefix out of range");
      colors_[i] = shard.color_prefix[i];
    }
    free_begin_ = shard.color_prefix.size();
    if (shard.first_value != 0) {
      if (shard.first_value > n) throw ParameterError("shard first value out of range");
      window_[0] = shard.first_value;
      unsigned next = 1;
      for (std::size_t i = 1; i < n; ++i, ++next) {
        if (next == shard.first_value) ++next;
        window_[i] = next;
      }
      window_begin_ = 1;
    } else {
      for (std::size_t i = 0; i < n; ++i) window_[i] = static_cast<unsigned>(i + 1);
      window_begin_ = 0;
    }
  }

  ColoredView view() const { return {alpha_, window_, colors_}; }

  /// Steps to the next element; false once the shard is exhausted.
  bool advance() {
    for (std::size_t pos = free_end_; pos-- > free_begin_;) {
      if (++colors_[pos] < alpha_) return true;
      colors_[pos] = 0;
    }
    return std::next_permutation(window_.begin() + static_cast<std::ptrdiff_t>(window_begin_), window_.end());
  }

 private:
  unsigned alpha_;
  std::vector<unsigned> window_;
  std::vector<unsigned> colors_;
  std::size_t window_begin_ = 0;
  std::size_t free_begin_ = 0;
  std::size_t free_end_ = 0;
};

/// Input range over a domain that yields ColoredPermutation values.
class ElementRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ColoredPermutation;
    using difference_type = std::ptrdiff_t;
    using reference = ColoredPermutation;
    using pointer = void;

    iterator() = default;
    explicit iterator(ElementCursor cursor) : cursor_(std::move(cursor)) {}

    ColoredPermutation operator*() const { return ColoredPermutation::from_view(cursor_->view()); }
    iterator& operator++() {
      if (!cursor_->advance()) cursor_.reset();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.cursor_.has_value() == b.cursor_.has_value() && !a.cursor_;
    }

   private:
    std::optional<ElementCursor> cursor_;
  };

  ElementRange(unsigned alpha, std::size_t n, Domain domain) : alpha_(alpha), n_(n), domain_(domain) {
    detail::check_parameters(alpha, n, domain);
  }

  iterator begin() const { return iterator(ElementCursor(alpha_, n_, domain_)); }
  iterator end() const { return {}; }

 private:
  unsigned alpha_;
  std::size_t n_;
  Domain domain_;
};

inline ElementRange iterate_quotient_reps(unsigned alpha, std::size_t n, const BigInt& cap = kDefaultElementCap) {
  check_cap(alpha, n, Domain::quotient(), cap);
  return {alpha, n, Domain::quotient()};
}

inline ElementRange iterate_full_group(unsigned alpha, std::size_t n, const BigInt& cap = kDefaultElementCap) {
  check_cap(alpha, n, Domain::full(), cap);
  return {alpha, n, Domain::full()};
}

inline ElementRange iterate_fixed_last_color(unsigned alpha, std::size_t n, unsigned beta,
                                             const BigInt& cap = kDefaultElementCap) {
  check_cap(alpha, n, Domain::fixed_last_color(beta), cap);
  return {alpha, n, Domain::fixed_last_color(beta)};
}

/// Sequential visit of a whole domain (or one shard) in lexicographic order.
template <class Visitor>
void for_each_element(unsigned alpha, std::size_t n, const Domain& domain, Visitor&& visit, const Shard& shard = {}) {
  ElementCursor cursor(alpha, n, domain, shard);
  do {
    visit(cursor.view());
  } while (cursor.advance());
}

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Shard plan: one shard when single-threaded; otherwise one per first
/// window value, refined by color prefixes until there are at least
/// 4 shards per worker or the free colors run out.
inline std::vector<Shard> plan_shards(unsigned alpha, std::size_t n, const Domain& domain, unsigned threads) {
  if (threads <= 1) return {Shard{}};
  const std::size_t free_colors = domain.kind == Domain::Kind::full ? n : n - 1;
  std::size_t prefix = 0;
  std::uint64_t count = n;
  while (alpha > 1 && prefix < free_colors && count < 4ull * threads) {
    ++prefix;
    count *= alpha;
  }
  const std::uint64_t prefixes = count / n;
  std::vector<Shard> shards;
  shards.reserve(count);
  for (unsigned v = 1; v <= n; ++v) {
    for (std::uint64_t code = 0; code < prefixes; ++code) {
      std::vector<unsigned> colors(prefix);
      std::uint64_t rest = code;
      for (std::size_t pos = prefix; pos-- > 0;) {
        colors[pos] = static_cast<unsigned>(rest % alpha);
        rest /= alpha;
      }
      shards.push_back({v, std::move(colors)});
    }
  }
  return shards;
}

/// Runs one copy of `prototype` per shard (each worker visits the elements
/// of its shard) and returns the per-shard workers in shard order.
template <class Worker>
std::vector<Worker> run_sharded(unsigned alpha, std::size_t n, const Domain& domain, const EnumerationOptions& opts,
                                const Worker& prototype) {
  check_cap(alpha, n, domain, opts.cap);
  const unsigned threads = resolve_threads(opts.threads);
  const auto shards = plan_shards(alpha, n, domain, threads);
  std::vector<Worker> results(shards.size(), prototype);
  if (shards.size() == 1) {
    for_each_element(alpha, n, domain, results[0], shards[0]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < shards.size();) {
        for_each_element(alpha, n, domain, results[i], shards[i]);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  const unsigned spawn = std::min<std::size_t>(threads, shards.size());
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

/// Largest value the statistic takes on the domain; used as nominal degree.
inline std::size_t statistic_maximum(Statistic stat, unsigned alpha, std::size_t n, const Domain& domain) {
  if (stat == Statistic::colored_descent) return n - 1;
  switch (domain.kind) {
    case Domain::Kind::quotient: return alpha * (n - 1);
    case Domain::Kind::full: return alpha * n - 1;
    case Domain::Kind::fixed_last_color: return alpha * (n - 1) + domain.beta;
  }
  return 0;
}

namespace detail {

template <Statistic S>
struct CountingWorker {
  std::vector<std::uint64_t> counts;
  void operator()(const ColoredView& w) {
    if constexpr (S == Statistic::flag) {
      ++counts[flag_descent(w)];
    } else {
      ++counts[colored_descent_count(w)];
    }
  }
};

inline IntPolynomial merge_counts(const std::vector<std::vector<std::uint64_t>>& partials, std::size_t degree) {
  std::vector<std::uint64_t> total(degree + 1, 0);
  for (const auto& p : partials) {
    for (std::size_t k = 0; k <= degree; ++k) total[k] += p[k];
  }
  std::vector<BigInt> coeffs(total.begin(), total.end());
  return IntPolynomial(std::move(coeffs));
}

}  // namespace detail

/// Generating polynomial sum x^{stat(w)} over the domain.
inline IntPolynomial statistic_polynomial(unsigned alpha, std::size_t n, const Domain& domain, Statistic stat,
                                          const EnumerationOptions& opts = {}) {
  detail::check_parameters(alpha, n, domain);
  const std::size_t degree = statistic_maximum(stat, alpha, n, domain);
  std::vector<std::vector<std::uint64_t>> partials;
  auto collect = [&](auto prototype) {
    for (auto& w : run_sharded(alpha, n, domain, opts, prototype)) partials.push_back(std::move(w.counts));
  };
  if (stat == Statistic::flag) {
    collect(detail::CountingWorker<Statistic::flag>{std::vector<std::uint64_t>(degree + 1, 0)});
  } else {
    collect(detail::CountingWorker<Statistic::colored_descent>{std::vector<std::uint64_t>(degree + 1, 0)});
  }
  return detail::merge_counts(partials, degree);
}

struct StatReport {
  unsigned alpha = 1;
  std::size_t n = 1;
  Statistic statistic = Statistic::flag;
  Domain domain;
  IntPolynomial polynomial;
  BigInt cardinality;
  bool palindromic = false;
  bool unimodal = false;
  bool real_rooted = false;
};

inline StatReport make_report(unsigned alpha, std::size_t n, const Domain& domain, Statistic stat,
                              IntPolynomial polynomial) {
  StatReport r;
  r.alpha = alpha;
  r.n = n;
  r.statistic = stat;
  r.domain = domain;
  r.cardinality = evaluate(polynomial, 1);
  r.palindromic = is_palindromic(polynomial);
  r.unimodal = is_unimodal(polynomial);
  r.real_rooted = is_real_rooted(polynomial);
  r.polynomial = std::move(polynomial);
  return r;
}

inline StatReport statistic_report(unsigned alpha, std::size_t n, const Domain& domain, Statistic stat,
                                   const EnumerationOptions& opts = {}) {
  return make_report(alpha, n, domain, stat, statistic_polynomial(alpha, n, domain, stat, opts));
}

/// A_n^alpha over last-color-0 representatives.
inline StatReport colored_eulerian(unsigned alpha, std::size_t n, const EnumerationOptions& opts = {}) {
  return statistic_report(alpha, n, Domain::quotient(), Statistic::colored_descent, opts);
}

/// F_n^alpha over last-color-0 representatives.
inline StatReport flag_eulerian_quotient(unsigned alpha, std::size_t n, const EnumerationOptions& opts = {}) {
  return statistic_report(alpha, n, Domain::quotient(), Statistic::flag, opts);
}

/// W_n^alpha over the whole group.
inline StatReport flag_eulerian_full(unsigned alpha, std::size_t n, const EnumerationOptions& opts = {}) {
  return statistic_report(alpha, n, Domain::full(), Statistic::flag, opts);
}

/// A_n(x) from the triangle A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1).
/// No enumeration involved.
inline IntPolynomial classical_eulerian(std::size_t n) {
  if (n < 1) throw ParameterError("n must be >= 1");
  std::vector<BigInt> row{1};
  for (std::size_t m = 2; m <= n; ++m) {
    std::vector<BigInt> next(m, 0);
    for (std::size_t k = 0; k < m; ++k) {
      if (k < row.size()) next[k] += BigInt(k + 1) * row[k];
      if (k >= 1) next[k] += BigInt(m - k) * row[k - 1];
    }
    row = std::move(next);
  }
  return IntPolynomial(std::move(row));
}

/// Rows of F(n, alpha, k) for n = 1..n_max.
struct FlagTable {
  unsigned alpha = 1;
  std::vector<IntPolynomial> rows;  ///< rows[n-1] = F_n^alpha
};

inline FlagTable flag_table(unsigned alpha, std::size_t n_max, const EnumerationOptions& opts = {}) {
  if (n_max < 1) throw ParameterError("max-n must be >= 1");
  for (std::size_t n = 1; n <= n_max; ++n) check_cap(alpha, n, Domain::quotient(), opts.cap);
  FlagTable t{alpha, {}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    t.rows.push_back(statistic_polynomial(alpha, n, Domain::quotient(), Statistic::flag, opts));
  }
  return t;
}

/// Outcome of a pointwise check with the lexicographically first failure.
struct PointwiseVerdict {
  bool verified = true;
  BigInt checked = 0;
  std::optional<ColoredPermutation> counterexample;
};

namespace detail {

/// Wraps a predicate on views; records the count and the first failure
/// (lexicographically first within the shard, since shards walk in order).
template <class Predicate>
struct PredicateWorker {
  Predicate predicate;
  std::uint64_t checked = 0;
  std::optional<ColoredPermutation> first_failure;
  void operator()(const ColoredView& w) {
    ++checked;
    if (!first_failure && !predicate(w)) first_failure = ColoredPermutation::from_view(w);
  }
};

template <class Predicate>
PointwiseVerdict check_pointwise(unsigned alpha, std::size_t n, const Domain& domain, const EnumerationOptions& opts,
                                 Predicate predicate) {
  PointwiseVerdict v;
  for (auto& w : run_sharded(alpha, n, domain, opts, PredicateWorker<Predicate>{predicate})) {
    v.checked += w.checked;
    if (w.first_failure && (!v.counterexample || *w.first_failure < *v.counterexample)) {
      v.counterexample = std::move(w.first_failure);
    }
  }
  v.verified = !v.counterexample;
  return v;
}

// Per-worker scratch for the reversal so the hot loop never allocates.
struct ReversalCheck {
  std::vector<unsigned> window;
  std::vector<unsigned> colors;
  ColoredView reverse(const ColoredView& w) {
    window.resize(w.size());
    colors.resize(w.size());
    reversal_into(w, window, colors);
    return {w.alpha, window, colors};
  }
};

}  // namespace detail

struct SymmetryVerdict {
  bool verified = false;     ///< pointwise and polynomial checks both hold
  PointwiseVerdict pointwise;
  IntPolynomial polynomial;  ///< F_n^alpha
  bool palindromic = false;
};

/// flag(w) + flag(r(w)) = alpha(n-1) for every representative, and F_n^alpha
/// palindromic.
inline SymmetryVerdict verify_symmetry(unsigned alpha, std::size_t n, const EnumerationOptions& opts = {}) {
  const std::uint64_t target = std::uint64_t{alpha} * (n - 1);
  SymmetryVerdict v;
  v.pointwise = detail::check_pointwise(alpha, n, Domain::quotient(), opts,
                                        [target, scratch = detail::ReversalCheck{}](const ColoredView& w) mutable {
                                          return flag_descent(w) + flag_descent(scratch.reverse(w)) == target;
                                        });
  v.polynomial = statistic_polynomial(alpha, n, Domain::quotient(), Statistic::flag, opts);
  v.palindromic = is_palindromic(v.polynomial);
  v.verified = v.pointwise.verified && v.palindromic;
  return v;
}

/// r(r(w)) = w and r(w) has last color 0, for every representative.
inline PointwiseVerdict verify_involution(unsigned alpha, std::size_t n, const EnumerationOptions& opts = {}) {
  return detail::check_pointwise(
      alpha, n, Domain::quotient(), opts,
      [once = detail::ReversalCheck{}, twice = detail::ReversalCheck{}](const ColoredView& w) mutable {
        const ColoredView r = once.reverse(w);
        if (!is_quotient_rep(r)) return false;
        const ColoredView rr = twice.reverse(r);
        return std::equal(rr.window.begin(), rr.window.end(), w.window.begin()) &&
               std::equal(rr.colors.begin(), rr.colors.end(), w.colors.begin());
      });
}

/// One coefficient-exact comparison of an enumerated polynomial with a
/// closed-form product.
struct IdentityCheck {
  std::size_t parameter = 0;  ///< k for the odd-n identity, n for the full-group one
  std::size_t n = 0;
  IntPolynomial enumerated;
  IntPolynomial expected;
  bool holds = false;
};

/// F^2_{2k+1} = (1+x)^{2k} A_{2k+1} for k = 1..k_max.
inline std::vector<IdentityCheck> verify_product_identity(std::size_t k_max, const EnumerationOptions& opts = {}) {
  if (k_max < 1) throw ParameterError("max-k must be >= 1");
  for (std::size_t k = 1; k <= k_max; ++k) check_cap(2, 2 * k + 1, Domain::quotient(), opts.cap);
  std::vector<IdentityCheck> out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    IdentityCheck c;
    c.parameter = k;
    c.n = 2 * k + 1;
    c.enumerated = statistic_polynomial(2, c.n, Domain::quotient(), Statistic::flag, opts);
    c.expected = multiply(binomial_power(2 * k), classical_eulerian(c.n));
    c.holds = c.enumerated == c.expected;
    out.push_back(std::move(c));
  }
  return out;
}

/// W^2_n = (1+x)^n A_n for n = 1..n_max.
inline std::vector<IdentityCheck> verify_abr_identity(std::size_t n_max, const EnumerationOptions& opts = {}) {
  if (n_max < 1) throw ParameterError("max-n must be >= 1");
  for (std::size_t n = 1; n <= n_max; ++n) check_cap(2, n, Domain::full(), opts.cap);
  std::vector<IdentityCheck> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    IdentityCheck c;
    c.parameter = n;
    c.n = n;
    c.enumerated = statistic_polynomial(2, n, Domain::full(), Statistic::flag, opts);
    c.expected = multiply(binomial_power(n), classical_eulerian(n));
    c.holds = c.enumerated == c.expected;
    out.push_back(std::move(c));
  }
  return out;
}

struct CosetVerdict {
  bool verified = false;
  std::size_t coset_count = 0;
  bool sizes_equal_alpha = false;
  bool descent_constant = false;
  IntPolynomial over_cosets;      ///< sum over cosets of x^{d}
  IntPolynomial over_fixed_zero;  ///< sum over c_n = 0 of x^{d}
  std::optional<ColoredPermutation> counterexample;
};

/// Partitions the full group by canonical_rep and checks that each coset
/// has alpha members with a common descent count, and that summing x^d over
/// cosets matches summing it over the last-color-0 slice.
inline CosetVerdict verify_coset_invariance(unsigned alpha, std::size_t n, const EnumerationOptions& opts = {}) {
  check_cap(alpha, n, Domain::full(), opts.cap);
  struct Coset {
    std::size_t members = 0;
    std::size_t descents = 0;
    bool constant = true;
  };
  std::map<ColoredPermutation, Coset> cosets;
  CosetVerdict v;
  for (const auto& w : ElementRange(alpha, n, Domain::full())) {
    const std::size_t d = colored_descent_count(w);
    auto [it, inserted] = cosets.try_emplace(canonical_rep(w));
    Coset& c = it->second;
    if (inserted) {
      c.descents = d;
    } else if (c.descents != d) {
      c.constant = false;
      if (!v.counterexample) v.counterexample = w;
    }
    ++c.members;
  }
  v.coset_count = cosets.size();
  v.sizes_equal_alpha = true;
  v.descent_constant = true;
  v.over_cosets = IntPolynomial::zero(n - 1);
  for (const auto& [rep, c] : cosets) {
    if (c.members != alpha) {
      v.sizes_equal_alpha = false;
      if (!v.counterexample) v.counterexample = rep;
    }
    v.descent_constant = v.descent_constant && c.constant;
    v.over_cosets.set_coefficient(c.descents, v.over_cosets.coefficient(c.descents) + 1);
  }
  v.over_fixed_zero = statistic_polynomial(alpha, n, Domain::fixed_last_color(0), Statistic::colored_descent,
                                           {opts.cap, 1});
  v.verified = v.sizes_equal_alpha && v.descent_constant && v.over_cosets == v.over_fixed_zero;
  return v;
}

}  // namespace wreath

#endif  // WREATH_ENUMERATE_HPP
