#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace loopex {

struct BraidLetter {
  int index;  // 1-based generator index
  int sign;   // +1 or -1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// "1 -2 1 -2" or "s=4; 1 2 -3". Without a prefix strands = max|i| + 1.
BraidWord parse_braid(std::string_view text);
// Always carries the strand prefix so that round trips are exact.
std::string render_braid(const BraidWord& b);
BraidWord make_braid(int strands, const std::vector<int>& signed_letters);
std::vector<int> signed_letters(const BraidWord& b);

std::int64_t writhe(const BraidWord& b);
// perm[p] = position reached by the strand starting at p after the whole word.
std::vector<int> braid_permutation(const BraidWord& b);
int closure_component_count(const BraidWord& b);
BraidWord mirror(const BraidWord& b);
// Reverse the word and invert every letter.
BraidWord inverse(const BraidWord& b);
// Adds a strand and a trailing positive letter on it (Markov stabilization).
BraidWord stabilize(const BraidWord& b);

}  // namespace loopex
