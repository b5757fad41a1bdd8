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

// Walks the last-color-0 representatives of Z_3 wr S_3, pairs each with
// its reversal partner, and prints the resulting flag Eulerian polynomial.

#include <iostream>

#include "wreath/enumerate.hpp"

int main() {
  using namespace wreath;
  constexpr unsigned alpha = 3;
  constexpr std::size_t n = 3;

  for (const auto& w : iterate_quotient_reps(alpha, n)) {
    const auto r = reversal_map(w);
    std::cout << w << "  flag=" << flag_descent(w) << "   r(w)=" << r << "  flag=" << flag_descent(r) << '\n';
  }

  const StatReport report = flag_eulerian_quotient(alpha, n);
  std::cout << "\nF_3^3(x) coefficients:";
  for (const auto& c : report.polynomial.coefficient_strings()) std::cout << ' ' << c;
  std::cout << "\npalindromic=" << report.palindromic << " unimodal=" << report.unimodal
            << " real_rooted=" << report.real_rooted << '\n';
}
