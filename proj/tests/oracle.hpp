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

// Test-only brute force. Elements are decoded from an integer index
// (factorial number system for the window, base alpha for the colors) and
// the statistics are evaluated straight from their definitions. Nothing here
// calls into the enumeration or stats code it is used to check.

#ifndef WREATH_TESTS_ORACLE_HPP
#define WREATH_TESTS_ORACLE_HPP

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

struct Element {
  std::vector<unsigned> window;  // 1-based values
  std::vector<unsigned> colors;
};

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline std::uint64_t power(unsigned base, unsigned e) {
  std::uint64_t p = 1;
  while (e--) p *= base;
  return p;
}

// Lehmer-code decode of rank into a permutation of 1..n.
inline std::vector<unsigned> permutation(unsigned n, std::uint64_t rank) {
  std::vector<unsigned> pool;
  for (unsigned v = 1; v <= n; ++v) pool.push_back(v);
  std::vector<unsigned> out;
  for (unsigned i = n; i >= 1; --i) {
    const std::uint64_t f = factorial(i - 1);
    const std::uint64_t digit = rank / f;
    rank %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<long>(digit));
  }
  return out;
}

// Every element of Z_alpha wr S_n; when last_color >= 0 only those with
// c_n == last_color.
inline std::vector<Element> all_elements(unsigned alpha, unsigned n, int last_color = -1) {
  std::vector<Element> out;
  const std::uint64_t perms = factorial(n);
  const std::uint64_t colorings = power(alpha, n);
  for (std::uint64_t p = 0; p < perms; ++p) {
    const auto window = permutation(n, p);
    for (std::uint64_t code = 0; code < colorings; ++code) {
      std::vector<unsigned> colors(n);
      std::uint64_t rest = code;
      for (unsigned i = 0; i < n; ++i) {
        colors[i] = static_cast<unsigned>(rest % alpha);
        rest /= alpha;
      }
      if (last_color >= 0 && colors[n - 1] != static_cast<unsigned>(last_color)) continue;
      out.push_back({window, colors});
    }
  }
  return out;
}

inline unsigned descents(const Element& e) {
  unsigned d = 0;
  for (unsigned i = 0; i + 1 < e.window.size(); ++i) {
    const bool color_change = e.colors[i] != e.colors[i + 1];
    const bool same_color_drop = e.colors[i] == e.colors[i + 1] && e.window[i] > e.window[i + 1];
    if (color_change || same_color_drop) ++d;
  }
  return d;
}

inline unsigned flag(const Element& e, unsigned alpha) {
  unsigned equal_color_descents = 0;
  unsigned color_ascents = 0;
  for (unsigned i = 0; i + 1 < e.window.size(); ++i) {
    if (e.colors[i] == e.colors[i + 1] && e.window[i] > e.window[i + 1]) ++equal_color_descents;
    if (e.colors[i] < e.colors[i + 1]) ++color_ascents;
  }
  return alpha * equal_color_descents + alpha * color_ascents + e.colors[0];
}

// Coefficient list of sum x^{stat(e)}, sized to `degree + 1`.
template <class Stat>
std::vector<std::uint64_t> distribution(const std::vector<Element>& elements, unsigned degree, Stat stat) {
  std::vector<std::uint64_t> c(degree + 1, 0);
  for (const auto& e : elements) ++c.at(stat(e));
  return c;
}

// Hand on a clock with marks 0..alpha-1 placed clockwise, stepped one mark
// at a time. Counterclockwise steps decrease the label.
inline long winding_by_walking(const std::vector<unsigned>& colors, unsigned alpha, unsigned mark, bool clockwise) {
  long visits = colors[0] == mark ? 1 : 0;
  unsigned hand = colors[0];
  for (std::size_t j = 1; j < colors.size(); ++j) {
    while (hand != colors[j]) {
      hand = clockwise ? (hand + 1) % alpha : (hand + alpha - 1) % alpha;
      if (hand == mark) ++visits;
    }
  }
  return visits - 1;
}

}  // namespace oracle

#endif  // WREATH_TESTS_ORACLE_HPP
