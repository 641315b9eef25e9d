#pragma once

#include <cstdint>
#include <vector>

#include "abelian.h"

namespace dodec {

// Dense integer matrix, row major. Entries are produced by presentation
// rewriting (small), but elimination can grow them, so the reduction works in
// int64 while safe and switches the stubborn core to arbitrary precision.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    static IntMatrix zero(int r, int c) { return {r, c, std::vector<long long>(static_cast<size_t>(r) * c, 0)}; }
};

// Invariant factors > 1, in divisor-chain order, plus the matrix rank.
struct SmithResult {
    std::vector<long long> divisors;
    int rank = 0;
};

SmithResult smith_normal_form(IntMatrix m);

// Cokernel of the column space acting on Z^cols: the abelian group presented
// by the matrix rows as relations among cols generators.
AbelianGroup cokernel(IntMatrix relation_matrix);

// Rank over GF(p); independent check against the Smith rank (and against the
// count of divisors not divisible by p).
int gfp_rank(const IntMatrix& m, long long p);

}  // namespace dodec
