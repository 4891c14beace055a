#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twogroups/group.hpp"

namespace twogroups {

/// A word over generators 0..n-1: letter +(i+1) is generator i, -(i+1) its
/// inverse.
using Word = std::vector<int>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Tokens separated by spaces or '*', each a generator name optionally
/// followed by ^k (k may be negative). "1" or "" is the empty word.
Word parse_word(std::string_view text, const std::vector<std::string>& generators);
std::string format_word(const Word& w, const std::vector<std::string>& generators);

Word free_reduce(const Word& w);
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);

std::size_t evaluate(const Word& w, const Group& g, const std::vector<std::size_t>& images);

/// Coset table of the trivial subgroup: table[c][2i] = c·g_i,
/// table[c][2i+1] = c·g_i⁻¹. Coset 0 is the identity.
struct CosetTable {
  std::vector<std::vector<std::size_t>> table;
  std::size_t order() const { return table.size(); }
};

/// HLT coset enumeration with coincidence handling. Returns nothing when
/// more than `max_cosets` cosets would be defined.
std::optional<CosetTable> todd_coxeter(const Presentation& p, std::size_t max_cosets = 100000);

}  // namespace twogroups
