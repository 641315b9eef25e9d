#pragma once

#include <vector>

#include "abelian.h"
#include "coset_table.h"
#include "integer_smith.h"
#include "words.h"

namespace dodec {

// Schreier generators of the subgroup a coset table describes: a spanning
// tree of the coset graph is fixed, every non-tree edge (coset, generator)
// carries one generator.
struct SchreierSystem {
    int ncosets = 0;
    int ngens = 0;
    int nschreier = 0;
    std::vector<int> gen_index;  // (coset * ngens + g) -> column, -1 on tree edges

    explicit SchreierSystem(const CosetTable& table);

    int index(int coset, int gen) const { return gen_index[static_cast<size_t>(coset) * ngens + gen]; }

    // Abelianized rewriting of relator w traced from coset c: exponent sums
    // over the Schreier generators.
    std::vector<long long> rewrite_row(const CosetTable& table, int c, const Word& w) const;
};

// Relation matrix of the subgroup presentation: one row per (coset, relator),
// columns are Schreier generators, entries abelianized exponents.
IntMatrix relation_matrix(const CosetTable& table, const std::vector<Word>& relators);

// First homology of the cover: cokernel of the relation matrix.
AbelianGroup cover_homology(const CosetTable& table, const std::vector<Word>& relators);

}  // namespace dodec
