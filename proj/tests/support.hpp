#pragma once

#include "brauer/typec.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace brauer::testing {

inline constexpr std::uint32_t kSeed = 20240611;

// Uniform perfect matching: shuffle the dots and pair neighbours.
inline Diagram random_diagram(std::mt19937& rng, int strands) {
  std::vector<std::uint8_t> order(2 * strands);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::uint8_t> mates(2 * strands);
  for (int k = 0; k < strands; ++k) {
    mates[order[2 * k]] = order[2 * k + 1];
    mates[order[2 * k + 1]] = order[2 * k];
  }
  return Diagram::from_mates(mates);
}

inline Monomial random_monomial(std::mt19937& rng, int strands) {
  std::uniform_int_distribution<int> exp(-3, 3);
  return {exp(rng), random_diagram(rng, strands)};
}

inline LaurentPoly random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4), exp(-4, 4), coeff(-9, 9);
  LaurentPoly p;
  for (int t = terms(rng); t > 0; --t) p += LaurentPoly::monomial(exp(rng), coeff(rng));
  return p;
}

inline AlgebraElement random_element(std::mt19937& rng, int strands) {
  std::uniform_int_distribution<int> terms(0, 3);
  AlgebraElement a(strands);
  for (int t = terms(rng); t > 0; --t) a.add_term(random_diagram(rng, strands), random_laurent(rng));
  return a;
}

// Letters R_1..R_{N-1}, E_1..E_{N-1} only.
inline WordA random_word_a(std::mt19937& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), idx(1, strands - 1), kind(0, 1);
  WordA w;
  for (int l = len(rng); l > 0; --l)
    w.letters.push_back({kind(rng) ? LetterKind::Quasi : LetterKind::Reflection, idx(rng)});
  return w;
}

inline WordC random_word_c(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), idx(0, n - 1), kind(0, 1);
  WordC w;
  for (int l = len(rng); l > 0; --l)
    w.letters.push_back({kind(rng) ? LetterKind::Quasi : LetterKind::Reflection, idx(rng)});
  return w;
}

}  // namespace brauer::testing
