#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "monlab/core.hpp"

namespace monlab {

// "x1*x2, x3" -> ideal in n variables. An empty string gives the zero ideal.
inline Ideal ideal_of(int n, const std::string& list) {
  std::vector<Monomial> gens;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    if (b == std::string::npos) continue;
    gens.push_back(parse_monomial(n, item.substr(b, item.find_last_not_of(' ') - b + 1)));
  }
  if (gens.empty()) return Ideal::zero(n);
  return minimal_generators(gens);
}

inline Monomial mono(int n, const std::string& text) { return parse_monomial(n, text); }

inline Mask random_mask(std::mt19937_64& rng, int n) { return rng() & full_mask(n); }

}  // namespace monlab
