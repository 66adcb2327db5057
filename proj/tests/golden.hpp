#pragma once

#include "brauer/typec.hpp"

namespace brauer::testing {

// The spanning monomials of the rank-2 algebra, grouped as: the Weyl group,
// the words through e_0 only, and the words through e_1.
inline std::vector<std::vector<WordC>> golden_rank_two_words() {
  auto w = [](const char* s) { return parse_word_c(s); };
  std::vector<std::vector<WordC>> groups(3);
  for (const char* s : {"", "r0", "r1", "r0,r1", "r1,r0", "r1,r0,r1", "r0,r1,r0,r1", "r0,r1,r0"})
    groups[0].push_back(w(s));
  for (const char* a : {"", "r1"})
    for (const char* b : {"", "r1,r0,r1"})
      for (const char* c : {"", "r1"}) groups[1].push_back(w(a) * word_e(0) * w(b) * w(c));
  for (const char* a : {"", "r0", "e0"})
    for (const char* b : {"", "r0", "e0"}) groups[2].push_back(w(a) * word_e(1) * w(b));
  return groups;
}

}  // namespace brauer::testing
