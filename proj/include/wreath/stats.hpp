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
/// Descent statistics on colored permutations, the reversal map on
/// last-color-0 representatives, deletion of an equal-color descent, and
/// colored winding numbers of color sequences.
///
/// All positions in the public interface are 1-based.

#ifndef WREATH_STATS_HPP
#define WREATH_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wreath/core.hpp"

namespace wreath {

/// D(w) = { i : c_i != c_{i+1}, or c_i == c_{i+1} and w_i > w_{i+1} }.
inline std::vector<std::size_t> colored_descent_set(const ColoredView& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w.colors[i] != w.colors[i + 1] || w.window[i] > w.window[i + 1]) out.push_back(i + 1);
  }
  return out;
}

inline std::size_t colored_descent_count(const ColoredView& w) {
  std::size_t d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    d += (w.colors[i] != w.colors[i + 1]) | (w.window[i] > w.window[i + 1]);
  }
  return d;
}

/// Colors are ordered 0 < 1 < ... < alpha-1 and c_1 is added as an integer.
inline std::uint64_t flag_descent(const ColoredView& w) {
  std::uint64_t steps = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const unsigned a = w.colors[i];
    const unsigned b = w.colors[i + 1];
    steps += (a < b) | ((a == b) & (w.window[i] > w.window[i + 1]));
  }
  return std::uint64_t{w.alpha} * steps + w.colors[0];
}

/// r(w_1^c_1 ... w_n^c_n) = w_n^{c_n-c_1} ... w_1^0, written into caller
/// buffers. Requires c_n = 0 (not checked here).
inline void reversal_into(const ColoredView& w, std::span<unsigned> window_out,
                          std::span<unsigned> colors_out) {
  const std::size_t n = w.size();
  const unsigned shift = w.colors[0];
  for (std::size_t i = 0; i < n; ++i) {
    window_out[i] = w.window[n - 1 - i];
    colors_out[i] = detail::mod_sub(w.colors[n - 1 - i], shift, w.alpha);
  }
}

inline ColoredPermutation reversal_map(const ColoredPermutation& w) {
  if (!is_quotient_rep(w)) {
    throw ParameterError("reversal map is defined only on elements with last color 0, got " + w.to_string());
  }
  std::vector<unsigned> window(w.size());
  std::vector<unsigned> colors(w.size());
  reversal_into(w, window, colors);
  return ColoredPermutation::validate(w.alpha(), std::move(window), std::move(colors));
}

/// True when position i (1-based, i < n) has c_i = c_{i+1} and w_i > w_{i+1}.
inline bool is_equal_color_descent(const ColoredView& w, std::size_t i) {
  if (i < 1 || i >= w.size()) return false;
  return w.colors[i - 1] == w.colors[i] && w.window[i - 1] > w.window[i];
}

/// Removes w_i^{c_i} at an equal-color descent and relabels the remaining
/// window order-isomorphically onto {1..n-1}.
inline ColoredPermutation delete_equal_color_descent(const ColoredPermutation& w, std::size_t i) {
  if (!is_quotient_rep(w)) {
    throw ParameterError("deletion requires last color 0, got " + w.to_string());
  }
  if (w.size() < 2) throw ParameterError("deletion requires n >= 2");
  if (i < 1 || i >= w.size()) {
    throw ParameterError("position " + std::to_string(i) + " must satisfy 1 <= i < n=" + std::to_string(w.size()));
  }
  if (!is_equal_color_descent(w, i)) {
    throw ParameterError("position " + std::to_string(i) + " is not an equal-color descent of " + w.to_string());
  }
  const unsigned removed = w.value(i);
  std::vector<unsigned> window;
  std::vector<unsigned> colors;
  window.reserve(w.size() - 1);
  colors.reserve(w.size() - 1);
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j == i - 1) continue;
    const unsigned v = w.window()[j];
    window.push_back(v > removed ? v - 1 : v);
    colors.push_back(w.colors()[j]);
  }
  return ColoredPermutation::validate(w.alpha(), std::move(window), std::move(colors));
}

/// A bare color vector in (Z_alpha)^n.
class ColorSequence {
 public:
  ColorSequence(unsigned alpha, std::vector<unsigned> colors) : alpha_(alpha), colors_(std::move(colors)) {
    if (alpha_ < 1) throw ParameterError("alpha must be >= 1");
    if (colors_.empty()) throw ParameterError("color sequence must be nonempty");
    for (unsigned c : colors_) {
      if (c >= alpha_) {
        throw ParameterError("color " + std::to_string(c) + " out of range for alpha=" + std::to_string(alpha_));
      }
    }
  }

  explicit ColorSequence(const ColoredView& w) : ColorSequence(w.alpha, {w.colors.begin(), w.colors.end()}) {}

  unsigned alpha() const { return alpha_; }
  std::size_t size() const { return colors_.size(); }
  std::span<const unsigned> colors() const { return colors_; }

  bool has_equal_adjacent() const {
    for (std::size_t i = 0; i + 1 < colors_.size(); ++i) {
      if (colors_[i] == colors_[i + 1]) return true;
    }
    return false;
  }

  friend bool operator==(const ColorSequence&, const ColorSequence&) = default;

 private:
  unsigned alpha_;
  std::vector<unsigned> colors_;
};

namespace detail {

// The clock carries marks 0..alpha-1 placed clockwise. Moving the hand
// counterclockwise runs through decreasing labels; an arc from a to b visits
// the marks strictly after a up to and including b. Zero-length arcs visit
// nothing. The starting mark counts as one visit.
inline std::size_t count_visits(const ColorSequence& s, unsigned mark, bool clockwise) {
  if (mark >= s.alpha()) {
    throw ParameterError("mark " + std::to_string(mark) + " out of range for alpha=" + std::to_string(s.alpha()));
  }
  const unsigned alpha = s.alpha();
  const auto c = s.colors();
  std::size_t visits = c[0] == mark ? 1 : 0;
  for (std::size_t j = 0; j + 1 < c.size(); ++j) {
    const unsigned a = c[j];
    const unsigned b = c[j + 1];
    const unsigned offset = clockwise ? mod_sub(mark, a, alpha) : mod_sub(a, mark, alpha);
    const unsigned length = clockwise ? mod_sub(b, a, alpha) : mod_sub(a, b, alpha);
    if (offset >= 1 && offset <= length) ++visits;
  }
  return visits;
}

}  // namespace detail

/// W(s, i): counterclockwise visits to mark i, minus one. A mark the hand
/// never reaches gives -1; this cannot happen for i = c_1 or, when the
/// sequence ends in 0, for i = 0.
inline std::int64_t winding_number(const ColorSequence& s, unsigned mark) {
  return static_cast<std::int64_t>(detail::count_visits(s, mark, false)) - 1;
}

/// W'(s, i): clockwise visits to mark i, minus one.
inline std::int64_t reverse_winding_number(const ColorSequence& s, unsigned mark) {
  return static_cast<std::int64_t>(detail::count_visits(s, mark, true)) - 1;
}

/// |{ i : c_i < c_{i+1} }| under the linear order on colors.
inline std::size_t color_ascent_count(std::span<const unsigned> colors) {
  std::size_t k = 0;
  for (std::size_t i = 0; i + 1 < colors.size(); ++i) k += colors[i] < colors[i + 1];
  return k;
}

inline std::size_t color_descent_count(std::span<const unsigned> colors) {
  std::size_t k = 0;
  for (std::size_t i = 0; i + 1 < colors.size(); ++i) k += colors[i] > colors[i + 1];
  return k;
}

}  // namespace wreath

#endif  // WREATH_STATS_HPP
