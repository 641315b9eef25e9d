#pragma once

#include <string>
#include <vector>

// Free group words over generators 0..ngens-1.
// A letter is a nonzero int: +(i+1) for generator i, -(i+1) for its inverse.

namespace dodec {

using Word = std::vector<int>;

inline int letter(int gen, bool inverse = false) { return inverse ? -(gen + 1) : gen + 1; }
inline int letter_gen(int l) { return (l > 0 ? l : -l) - 1; }

Word parse_word(const std::string& text, int ngens, const std::string& alphabet = "uvwxyz");
std::string format_word(const Word& w, const std::string& alphabet = "uvwxyz");

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse_word(const Word& w);

// Smallest rotation of w or of w^-1; equal for words that differ only by
// the starting point of the cycle or the direction conventions allow.
Word canonical_relator(const Word& w);

// Canonical form of a whole relator list, for set comparison.
std::vector<Word> canonical_relator_set(std::vector<Word> relators);

struct Presentation {
    int ngens = 0;
    std::vector<Word> relators;
};

// True if both present the same relator set up to rotation and inversion.
bool same_relators(const Presentation& a, const Presentation& b);

}  // namespace dodec
