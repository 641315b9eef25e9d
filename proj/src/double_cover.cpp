#include "double_cover.h"

#include <cassert>

#include "rewriting.h"

namespace dodec {

namespace {

// Nullspace basis of a GF(2) matrix given as bitset rows over ncols columns.
std::vector<std::vector<uint64_t>> gf2_nullspace(std::vector<std::vector<uint64_t>> rows,
                                                 int ncols) {
    int nw = (ncols + 63) / 64;
    auto get = [&](const std::vector<uint64_t>& r, int c) { return (r[c / 64] >> (c % 64)) & 1; };
    std::vector<int> pivot_row_of_col(ncols, -1);
    size_t done = 0;
    for (int c = 0; c < ncols && done < rows.size(); c++) {
        size_t p = done;
        while (p < rows.size() && !get(rows[p], c)) p++;
        if (p == rows.size()) continue;
        std::swap(rows[done], rows[p]);
        for (size_t r = 0; r < rows.size(); r++)
            if (r != done && get(rows[r], c))
                for (int w = 0; w < nw; w++) rows[r][w] ^= rows[done][w];
        pivot_row_of_col[c] = static_cast<int>(done);
        done++;
    }
    std::vector<std::vector<uint64_t>> basis;
    for (int f = 0; f < ncols; f++) {
        if (pivot_row_of_col[f] >= 0) continue;
        std::vector<uint64_t> x(nw, 0);
        x[f / 64] |= uint64_t(1) << (f % 64);
        // pivot columns take the value forced by column f of their row
        for (int c = 0; c < ncols; c++)
            if (pivot_row_of_col[c] >= 0 && get(rows[pivot_row_of_col[c]], f))
                x[c / 64] |= uint64_t(1) << (c % 64);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace

DoubleCoverFamily::DoubleCoverFamily(const CosetTable& base, const std::vector<Word>& relators)
    : base_(base), n_(base.ncosets), ngens_(base.ngens) {
    nslots_ = n_ * ngens_;
    nwords_ = (nslots_ + 63) / 64;
    assert(base_.complete());

    SchreierSystem sch(base_);
    int ncols = sch.nschreier;
    int cw = (ncols + 63) / 64;
    std::vector<std::vector<uint64_t>> rows;
    rows.reserve(static_cast<size_t>(n_) * relators.size());
    for (int c = 0; c < n_; c++) {
        for (const Word& w : relators) {
            std::vector<long long> exps = sch.rewrite_row(base_, c, w);
            std::vector<uint64_t> row(cw, 0);
            for (int k = 0; k < ncols; k++)
                if (exps[k] & 1) row[k / 64] |= uint64_t(1) << (k % 64);
            rows.push_back(std::move(row));
        }
    }
    std::vector<std::vector<uint64_t>> null = gf2_nullspace(std::move(rows), ncols);
    rank_ = static_cast<int>(null.size());

    // cocycle columns -> per-slot bit masks; tree edges carry bit 0
    basis_.assign(static_cast<size_t>(rank_) * nwords_, 0);
    for (int k = 0; k < rank_; k++) {
        for (int c = 0; c < n_; c++) {
            for (int g = 0; g < ngens_; g++) {
                int col = sch.index(c, g);
                if (col < 0) continue;
                if ((null[k][col / 64] >> (col % 64)) & 1) {
                    int slot = c * ngens_ + g;
                    basis_[static_cast<size_t>(k) * nwords_ + slot / 64] |= uint64_t(1)
                                                                            << (slot % 64);
                }
            }
        }
    }

    for (int c = 0; c < n_; c++)
        for (int g = 0; g < ngens_; g++)
            if (base_.at(c, 2 * g) == c) loops_.push_back(c * ngens_ + g);
}

std::vector<uint64_t> DoubleCoverFamily::slot_mask(uint64_t cf) const {
    std::vector<uint64_t> m(nwords_, 0);
    for (int k = 0; k < rank_; k++)
        if ((cf >> k) & 1)
            for (int w = 0; w < nwords_; w++) m[w] ^= basis_[static_cast<size_t>(k) * nwords_ + w];
    return m;
}

CosetTable DoubleCoverFamily::table(uint64_t cf) const {
    assert(cf >= 1 && cf < (uint64_t(1) << rank_));
    std::vector<uint64_t> m = slot_mask(cf);
    std::vector<std::vector<int>> perms(ngens_, std::vector<int>(2 * n_));
    for (int g = 0; g < ngens_; g++) {
        for (int i = 0; i < n_; i++) {
            int j = base_.at(i, 2 * g);
            int slot = i * ngens_ + g;
            int bit = (m[slot / 64] >> (slot % 64)) & 1;
            perms[g][i] = j + bit * n_;
            perms[g][i + n_] = j + (1 - bit) * n_;
        }
    }
    return CosetTable::from_permutations(perms);
}

bool DoubleCoverFamily::fixed_point_free(uint64_t cf) const {
    std::vector<uint64_t> m = slot_mask(cf);
    for (int slot : loops_)
        if (!((m[slot / 64] >> (slot % 64)) & 1)) return false;
    return true;
}

uint64_t DoubleCoverFamily::count_fixed_point_free() const {
    if (loops_.empty()) return count();
    // solve [basis bits at loops] * x = all-ones over GF(2)
    int nl = static_cast<int>(loops_.size());
    int cw = (rank_ + 1 + 63) / 64;  // augmented column rank_
    std::vector<std::vector<uint64_t>> rows(nl, std::vector<uint64_t>(cw, 0));
    for (int l = 0; l < nl; l++) {
        int slot = loops_[l];
        for (int k = 0; k < rank_; k++)
            if ((basis_[static_cast<size_t>(k) * nwords_ + slot / 64] >> (slot % 64)) & 1)
                rows[l][k / 64] |= uint64_t(1) << (k % 64);
        rows[l][rank_ / 64] |= uint64_t(1) << (rank_ % 64);  // rhs 1
    }
    auto get = [&](const std::vector<uint64_t>& r, int c) { return (r[c / 64] >> (c % 64)) & 1; };
    int done = 0, syst_rank = 0;
    for (int c = 0; c < rank_ && done < nl; c++) {
        int p = done;
        while (p < nl && !get(rows[p], c)) p++;
        if (p == nl) continue;
        std::swap(rows[done], rows[p]);
        for (int r = 0; r < nl; r++)
            if (r != done && get(rows[r], c))
                for (int w = 0; w < cw; w++) rows[r][w] ^= rows[done][w];
        done++;
        syst_rank++;
    }
    for (int r = done; r < nl; r++)
        if (get(rows[r], rank_)) return 0;  // inconsistent
    return uint64_t(1) << (rank_ - syst_rank);
}

}  // namespace dodec
