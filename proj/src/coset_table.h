#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "words.h"

// Coset tables: the total action of group generators on the cosets of a
// finite-index subgroup. Coset 0 is the subgroup itself. Column layout is
// 2*g for generator g acting forward and 2*g+1 for its inverse.

namespace dodec {

struct CosetTable {
    int ngens = 0;
    int ncosets = 0;
    std::vector<int> tab;  // ncosets rows * 2*ngens columns, -1 = undefined

    static int column(int signed_letter) {
        int g = letter_gen(signed_letter);
        return signed_letter > 0 ? 2 * g : 2 * g + 1;
    }
    int at(int coset, int col) const { return tab[static_cast<size_t>(coset) * (2 * ngens) + col]; }
    int& at(int coset, int col) { return tab[static_cast<size_t>(coset) * (2 * ngens) + col]; }

    int apply(int coset, int signed_letter) const { return at(coset, column(signed_letter)); }
    int apply_word(int coset, const Word& w) const;

    bool complete() const;
    // True if w traces to its start from every coset (w is a relation of the action).
    bool satisfies(const Word& w) const;
    bool satisfies_all(const std::vector<Word>& rels) const;
    bool transitive() const;

    // Renumber cosets in order of first visit (BFS from 0 through columns in
    // order). Two tables of the same subgroup standardize identically.
    void standardize();

    // One permutation per generator, images of cosets (only valid if complete).
    std::vector<std::vector<int>> generator_permutations() const;

    // Build a complete table directly from generator permutations.
    static CosetTable from_permutations(const std::vector<std::vector<int>>& perms);
};

// HLT coset enumeration with coincidence handling. Returns the completed,
// standardized table, or nullopt if max_cosets was exceeded.
std::optional<CosetTable> todd_coxeter(const Presentation& pres,
                                       const std::vector<Word>& subgroup_gens,
                                       int max_cosets = 1 << 20);

// Kernel of the coset action: the normal core of the subgroup. Returns the
// core's coset table (degree = order of the permutation image). Enumerated by
// closing the image group; image_order_limit guards against runaways.
std::optional<CosetTable> normal_core(const CosetTable& table, long image_order_limit = 1L << 26);

// Order of the permutation group generated by the table's generator images.
long permutation_image_order(const CosetTable& table, long limit = 1L << 26);

// Stabilizer of a point as subgroup generator words is not needed; covers are
// built straight from tables.

}  // namespace dodec
