#pragma once
// Index-2 covers of a given cover. A double cover of the cover described by
// a coset table is a homomorphism from its subgroup to Z/2, i.e. a GF(2)
// cocycle: one bit per non-tree edge of the coset graph such that every
// relator traced from every coset has even bit sum. The family enumerates the
// nullspace of the mod-2 relation matrix; nonzero cocycles give connected
// degree-2n tables.
#include <cstdint>
#include <vector>

#include "coset_table.h"
#include "words.h"

namespace dodec {

class DoubleCoverFamily {
public:
    DoubleCoverFamily(const CosetTable& base, const std::vector<Word>& relators);

    int rank() const { return rank_; }
    uint64_t count() const { return (uint64_t(1) << rank_) - 1; }

    // cf in [1, 2^rank): coefficients in the cocycle basis.
    CosetTable table(uint64_t cf) const;

    // No generator glues a sheet to itself: every fixed point of the base
    // action must lift with bit 1. Covers of a fixed-point-free base are all
    // fixed-point-free.
    bool fixed_point_free(uint64_t cf) const;
    uint64_t count_fixed_point_free() const;

private:
    CosetTable base_;
    int n_ = 0, ngens_ = 0, nslots_ = 0, nwords_ = 0;
    int rank_ = 0;
    std::vector<uint64_t> basis_;  // rank_ rows, nwords_ words each; slot = coset*ngens+gen
    std::vector<int> loops_;       // slots with i.g == i

    std::vector<uint64_t> slot_mask(uint64_t cf) const;
};

}  // namespace dodec
