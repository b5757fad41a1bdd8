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
/// Colored permutations: elements of the generalized symmetric group
/// Z_alpha wr S_n, written in one-line notation `w_1^c_1 ... w_n^c_n`.
///
/// Window values are 1-based (1..n). Colors live in {0, ..., alpha-1}.
/// The central subgroup H generated by 1^1 2^1 ... n^1 acts by a constant
/// shift of the color vector; cosets are handled through canonical_rep()
/// and same_coset() and H itself is never materialized.

#ifndef WREATH_CORE_HPP
#define WREATH_CORE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wreath {

/// Thrown for any violated precondition on caller-supplied parameters.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-owning read-only view of a colored permutation. Statistics operate on
/// views so enumeration can reuse scratch buffers.
struct ColoredView {
  unsigned alpha = 1;
  std::span<const unsigned> window;
  std::span<const unsigned> colors;

  std::size_t size() const { return window.size(); }
};

class ColoredPermutation {
 public:
  /// Checks every invariant and throws ParameterError on violation.
  static ColoredPermutation validate(unsigned alpha, std::vector<unsigned> window,
                                     std::vector<unsigned> colors) {
    if (alpha < 1) throw ParameterError("alpha must be >= 1");
    if (window.empty()) throw ParameterError("n must be >= 1");
    if (window.size() != colors.size()) {
      throw ParameterError("window has length " + std::to_string(window.size()) +
                           " but color vector has length " + std::to_string(colors.size()));
    }
    const std::size_t n = window.size();
    std::vector<bool> seen(n + 1, false);
    for (unsigned v : window) {
      if (v < 1 || v > n || seen[v]) {
        throw ParameterError("window is not a bijection on {1.." + std::to_string(n) + "}");
      }
      seen[v] = true;
    }
    for (unsigned c : colors) {
      if (c >= alpha) {
        throw ParameterError("color " + std::to_string(c) + " out of range for alpha=" +
                             std::to_string(alpha));
      }
    }
    return ColoredPermutation(alpha, std::move(window), std::move(colors));
  }

  static ColoredPermutation identity(unsigned alpha, std::size_t n) {
    if (alpha < 1) throw ParameterError("alpha must be >= 1");
    if (n < 1) throw ParameterError("n must be >= 1");
    std::vector<unsigned> window(n);
    for (std::size_t i = 0; i < n; ++i) window[i] = static_cast<unsigned>(i + 1);
    return ColoredPermutation(alpha, std::move(window), std::vector<unsigned>(n, 0));
  }

  /// The generator 1^1 2^1 ... n^1 of H (the scalar matrix zeta*I).
  static ColoredPermutation shift_generator(unsigned alpha, std::size_t n) {
    auto e = identity(alpha, n);
    for (auto& c : e.colors_) c = 1 % alpha;
    return e;
  }

  static ColoredPermutation from_view(const ColoredView& v) {
    return validate(v.alpha, {v.window.begin(), v.window.end()},
                    {v.colors.begin(), v.colors.end()});
  }

  /// Parses `4^1 1^1 3^2 2^0`. A token without `^c` has color 0.
  static ColoredPermutation parse(unsigned alpha, std::string_view text) {
    std::vector<unsigned> window;
    std::vector<unsigned> colors;
    std::size_t pos = 0;
    auto skip_space = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
    };
    auto read_number = [&](const char* what) -> unsigned {
      const std::size_t start = pos;
      unsigned long value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + static_cast<unsigned>(text[pos] - '0');
        if (value > 1000000) throw ParameterError(std::string(what) + " too large in '" + std::string(text) + "'");
        ++pos;
      }
      if (pos == start) {
        throw ParameterError("expected " + std::string(what) + " at offset " + std::to_string(start) +
                             " in '" + std::string(text) + "'");
      }
      return static_cast<unsigned>(value);
    };
    skip_space();
    while (pos < text.size()) {
      window.push_back(read_number("value"));
      unsigned color = 0;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        color = read_number("color");
      }
      colors.push_back(color);
      if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != ',') {
        throw ParameterError("unexpected character '" + std::string(1, text[pos]) + "' in '" +
                             std::string(text) + "'");
      }
      skip_space();
    }
    return validate(alpha, std::move(window), std::move(colors));
  }

  unsigned alpha() const { return alpha_; }
  std::size_t size() const { return window_.size(); }
  std::span<const unsigned> window() const { return window_; }
  std::span<const unsigned> colors() const { return colors_; }

  /// 1-based accessors matching w_i and c_i.
  unsigned value(std::size_t i) const { return window_.at(i - 1); }
  unsigned color(std::size_t i) const { return colors_.at(i - 1); }

  ColoredView view() const { return {alpha_, window_, colors_}; }
  operator ColoredView() const { return view(); }  // NOLINT(google-explicit-constructor)

  std::string to_string() const { return render(view()); }

  static std::string render(const ColoredView& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ' ';
      os << v.window[i] << '^' << v.colors[i];
    }
    return os.str();
  }

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
  friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;

 private:
  ColoredPermutation(unsigned alpha, std::vector<unsigned> window, std::vector<unsigned> colors)
      : alpha_(alpha), window_(std::move(window)), colors_(std::move(colors)) {}

  // Member order fixes the comparison order: alpha, then window, then colors.
  unsigned alpha_;
  std::vector<unsigned> window_;
  std::vector<unsigned> colors_;
};

inline std::ostream& operator<<(std::ostream& os, const ColoredPermutation& w) {
  return os << w.to_string();
}

namespace detail {

inline void require_compatible(unsigned alpha_a, std::size_t n_a, unsigned alpha_b, std::size_t n_b) {
  if (alpha_a != alpha_b) {
    throw ParameterError("mismatched alpha: " + std::to_string(alpha_a) + " vs " + std::to_string(alpha_b));
  }
  if (n_a != n_b) {
    throw ParameterError("mismatched n: " + std::to_string(n_a) + " vs " + std::to_string(n_b));
  }
}

inline unsigned mod_sub(unsigned a, unsigned b, unsigned alpha) {
  return (a + alpha - b % alpha) % alpha;
}

}  // namespace detail

/// Group law: (w*y)_i = w_{y_i} with color d_i + c_{y_i} mod alpha.
inline ColoredPermutation multiply(const ColoredPermutation& w, const ColoredPermutation& y) {
  detail::require_compatible(w.alpha(), w.size(), y.alpha(), y.size());
  const std::size_t n = w.size();
  const unsigned alpha = w.alpha();
  std::vector<unsigned> window(n);
  std::vector<unsigned> colors(n);
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned yi = y.window()[i];
    window[i] = w.window()[yi - 1];
    colors[i] = (y.colors()[i] + w.colors()[yi - 1]) % alpha;
  }
  return ColoredPermutation::validate(alpha, std::move(window), std::move(colors));
}

inline ColoredPermutation operator*(const ColoredPermutation& w, const ColoredPermutation& y) {
  return multiply(w, y);
}

inline ColoredPermutation identity(unsigned alpha, std::size_t n) {
  return ColoredPermutation::identity(alpha, n);
}

inline ColoredPermutation inverse(const ColoredPermutation& w) {
  // z = w^{-1} satisfies w_{z_i} = i and c_{z_i} + d_i = 0.
  const std::size_t n = w.size();
  std::vector<unsigned> window(n);
  std::vector<unsigned> colors(n);
  for (std::size_t j = 0; j < n; ++j) {
    const unsigned target = w.window()[j];
    window[target - 1] = static_cast<unsigned>(j + 1);
    colors[target - 1] = detail::mod_sub(0, w.colors()[j], w.alpha());
  }
  return ColoredPermutation::validate(w.alpha(), std::move(window), std::move(colors));
}

/// n x n monomial matrix with entries zeta^e, stored column-wise as
/// (row, exponent). Exponent arithmetic only; zeta is never evaluated.
class GenPermMatrix {
 public:
  struct Entry {
    unsigned row;       ///< 1-based
    unsigned exponent;  ///< in {0..alpha-1}
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  static GenPermMatrix from_columns(unsigned alpha, std::vector<Entry> columns) {
    if (alpha < 1) throw ParameterError("alpha must be >= 1");
    if (columns.empty()) throw ParameterError("matrix size must be >= 1");
    const std::size_t n = columns.size();
    std::vector<bool> row_used(n + 1, false);
    for (auto& e : columns) {
      if (e.row < 1 || e.row > n || row_used[e.row]) {
        throw ParameterError("matrix must have exactly one nonzero entry per row and column");
      }
      row_used[e.row] = true;
      e.exponent %= alpha;
    }
    return GenPermMatrix(alpha, std::move(columns));
  }

  static GenPermMatrix identity(unsigned alpha, std::size_t n) {
    std::vector<Entry> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = {static_cast<unsigned>(j + 1), 0};
    return from_columns(alpha, std::move(cols));
  }

  unsigned alpha() const { return alpha_; }
  std::size_t size() const { return columns_.size(); }
  const Entry& column(std::size_t j) const { return columns_.at(j - 1); }

  /// Exponent at (row, col), or nullopt for a zero entry. 1-based.
  std::optional<unsigned> at(std::size_t row, std::size_t col) const {
    const Entry& e = column(col);
    if (e.row == row) return e.exponent;
    return std::nullopt;
  }

  friend bool operator==(const GenPermMatrix&, const GenPermMatrix&) = default;

 private:
  GenPermMatrix(unsigned alpha, std::vector<Entry> columns) : alpha_(alpha), columns_(std::move(columns)) {}

  unsigned alpha_;
  std::vector<Entry> columns_;
};

/// Column j carries zeta^{c_j} at row w_j.
inline GenPermMatrix to_matrix(const ColoredPermutation& w) {
  std::vector<GenPermMatrix::Entry> cols(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) cols[j] = {w.window()[j], w.colors()[j]};
  return GenPermMatrix::from_columns(w.alpha(), std::move(cols));
}

/// Dense row-by-column product. A product of two monomial entries is
/// exponent addition; each result entry must receive at most one term.
inline GenPermMatrix matrix_multiply(const GenPermMatrix& a, const GenPermMatrix& b) {
  detail::require_compatible(a.alpha(), a.size(), b.alpha(), b.size());
  const std::size_t n = a.size();
  std::vector<GenPermMatrix::Entry> cols(n, GenPermMatrix::Entry{0, 0});
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i <= n; ++i) {
      std::optional<unsigned> sum;
      for (std::size_t k = 1; k <= n; ++k) {
        const auto aik = a.at(i, k);
        const auto bkj = b.at(k, j);
        if (!aik || !bkj) continue;
        if (sum) throw std::logic_error("product of generalized permutation matrices has a multi-term entry");
        sum = (*aik + *bkj) % a.alpha();
      }
      if (sum) {
        if (cols[j - 1].row != 0) throw std::logic_error("column with two nonzero entries");
        cols[j - 1] = {static_cast<unsigned>(i), *sum};
      }
    }
  }
  return GenPermMatrix::from_columns(a.alpha(), std::move(cols));
}

/// Coset representative with last color 0: subtract c_n from every color.
inline ColoredPermutation canonical_rep(const ColoredPermutation& w) {
  const unsigned shift = w.colors().back();
  std::vector<unsigned> colors(w.colors().begin(), w.colors().end());
  for (auto& c : colors) c = detail::mod_sub(c, shift, w.alpha());
  return ColoredPermutation::validate(w.alpha(), {w.window().begin(), w.window().end()}, std::move(colors));
}

inline bool same_coset(const ColoredPermutation& y, const ColoredPermutation& z) {
  detail::require_compatible(y.alpha(), y.size(), z.alpha(), z.size());
  if (!std::equal(y.window().begin(), y.window().end(), z.window().begin())) return false;
  const unsigned shift = detail::mod_sub(z.colors()[0], y.colors()[0], y.alpha());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if ((y.colors()[i] + shift) % y.alpha() != z.colors()[i]) return false;
  }
  return true;
}

inline bool is_quotient_rep(const ColoredView& w) { return w.colors.back() == 0; }

}  // namespace wreath

#endif  // WREATH_CORE_HPP
