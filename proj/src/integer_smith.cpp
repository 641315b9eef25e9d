#include "integer_smith.h"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace dodec {

namespace {

// Phase 1: eliminate with +-1 pivots in int64. Division-free, and entry
// growth is additive products which we bound-check; anything left over goes
// to the arbitrary-precision phase.
struct Phase1 {
    IntMatrix& m;
    std::vector<char> row_done, col_done;
    int pivots = 0;
    bool overflow = false;
    static constexpr long long kLimit = 1LL << 62;

    explicit Phase1(IntMatrix& mat)
        : m(mat),
          row_done(static_cast<size_t>(mat.rows), 0),
          col_done(static_cast<size_t>(mat.cols), 0) {}

    bool find_unit(int& pr, int& pc) const {
        for (int r = 0; r < m.rows; ++r) {
            if (row_done[static_cast<size_t>(r)]) continue;
            for (int c = 0; c < m.cols; ++c)
                if (!col_done[static_cast<size_t>(c)] && (m.at(r, c) == 1 || m.at(r, c) == -1)) {
                    pr = r;
                    pc = c;
                    return true;
                }
        }
        return false;
    }

    void run() {
        int pr, pc;
        while (!overflow && find_unit(pr, pc)) {
            long long p = m.at(pr, pc);
            for (int r = 0; r < m.rows && !overflow; ++r) {
                if (r == pr || row_done[static_cast<size_t>(r)]) continue;
                long long v = m.at(r, pc);
                if (!v) continue;
                long long q = v * p;  // v / p for p = +-1
                for (int c = 0; c < m.cols; ++c) {
                    if (col_done[static_cast<size_t>(c)]) continue;
                    long long prod, res;
                    if (__builtin_mul_overflow(q, m.at(pr, c), &prod) ||
                        __builtin_sub_overflow(m.at(r, c), prod, &res) || std::llabs(res) > kLimit) {
                        overflow = true;
                        break;
                    }
                    m.at(r, c) = res;
                }
            }
            if (overflow) break;
            row_done[static_cast<size_t>(pr)] = 1;
            col_done[static_cast<size_t>(pc)] = 1;
            ++pivots;
        }
    }
};

// Full SNF over mpz with minimal-absolute-value pivoting. Quotients are
// rounded to nearest so remainders stay at most half the pivot; fdiv gives
// 0 <= r < |p| for p > 0 (pivot sign is irrelevant after the abs at the end).
std::vector<mpz_class> smith_mpz(std::vector<std::vector<mpz_class>> a) {
    size_t m = a.size();
    size_t n = m ? a[0].size() : 0;
    std::vector<mpz_class> divisors;
    std::vector<size_t> rows(m), cols(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    while (!rows.empty() && !cols.empty()) {
        size_t pr = 0, pc = 0;
        bool found = false;
        mpz_class best;
        for (size_t ri : rows)
            for (size_t ci : cols) {
                const mpz_class& v = a[ri][ci];
                if (v != 0 && (!found || mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) < 0)) {
                    best = v;
                    pr = ri;
                    pc = ci;
                    found = true;
                }
            }
        if (!found) break;
        // clear the pivot column by row operations, then the pivot row by
        // column operations; any leftover has at most half the pivot's
        // magnitude (nearest quotients), so re-picking the pivot terminates
        while (true) {
            mpz_class q, r;
            bool col_clear = true;
            for (size_t ri : rows) {
                if (ri == pr || a[ri][pc] == 0) continue;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a[ri][pc].get_mpz_t(),
                            a[pr][pc].get_mpz_t());
                if (2 * abs(r) > abs(a[pr][pc])) ++q;
                if (q != 0)
                    for (size_t ci : cols) a[ri][ci] -= q * a[pr][ci];
                if (a[ri][pc] != 0) col_clear = false;
            }
            if (!col_clear) {
                for (size_t ri : rows)
                    if (a[ri][pc] != 0 &&
                        mpz_cmpabs(a[ri][pc].get_mpz_t(), a[pr][pc].get_mpz_t()) < 0)
                        pr = ri;
                continue;
            }
            bool row_clear = true;
            for (size_t ci : cols) {
                if (ci == pc || a[pr][ci] == 0) continue;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a[pr][ci].get_mpz_t(),
                            a[pr][pc].get_mpz_t());
                if (2 * abs(r) > abs(a[pr][pc])) ++q;
                if (q != 0)
                    for (size_t ri : rows) a[ri][ci] -= q * a[ri][pc];
                if (a[pr][ci] != 0) row_clear = false;
            }
            if (row_clear) break;
            for (size_t ci : cols)
                if (a[pr][ci] != 0 && mpz_cmpabs(a[pr][ci].get_mpz_t(), a[pr][pc].get_mpz_t()) < 0)
                    pc = ci;
        }
        divisors.push_back(abs(a[pr][pc]));
        rows.erase(std::find(rows.begin(), rows.end(), pr));
        cols.erase(std::find(cols.begin(), cols.end(), pc));
    }
    return divisors;
}

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
    Phase1 p1(m);
    p1.run();

    std::vector<std::vector<mpz_class>> core;
    std::vector<int> live_rows, live_cols;
    for (int r = 0; r < m.rows; ++r)
        if (!p1.row_done[static_cast<size_t>(r)]) live_rows.push_back(r);
    for (int c = 0; c < m.cols; ++c)
        if (!p1.col_done[static_cast<size_t>(c)]) live_cols.push_back(c);
    core.reserve(live_rows.size());
    for (int r : live_rows) {
        std::vector<mpz_class> row;
        row.reserve(live_cols.size());
        for (int c : live_cols) row.emplace_back(static_cast<long>(m.at(r, c)));
        core.push_back(std::move(row));
    }
    std::vector<mpz_class> rest = smith_mpz(std::move(core));

    std::vector<mpz_class> all(static_cast<size_t>(p1.pivots), mpz_class(1));
    all.insert(all.end(), rest.begin(), rest.end());
    // enforce the divisor chain
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = i + 1; j < all.size(); ++j) {
                if (mpz_divisible_p(all[j].get_mpz_t(), all[i].get_mpz_t())) continue;
                mpz_class g = gcd(all[i], all[j]);
                all[j] = all[i] / g * all[j];
                all[i] = g;
                changed = true;
            }
    }
    SmithResult res;
    res.rank = static_cast<int>(all.size());
    for (const mpz_class& d : all) {
        if (d == 1) continue;
        if (!d.fits_slong_p()) throw std::overflow_error("invariant factor exceeds long");
        res.divisors.push_back(d.get_si());
    }
    return res;
}

AbelianGroup cokernel(IntMatrix relation_matrix) {
    int ngens = relation_matrix.cols;
    SmithResult s = smith_normal_form(std::move(relation_matrix));
    AbelianGroup g;
    g.rank = ngens - s.rank;
    g.torsion = s.divisors;
    return g;
}

int gfp_rank(const IntMatrix& m, long long p) {
    std::vector<std::vector<long long>> a(static_cast<size_t>(m.rows),
                                          std::vector<long long>(static_cast<size_t>(m.cols)));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) a[static_cast<size_t>(r)][static_cast<size_t>(c)] = ((m.at(r, c) % p) + p) % p;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows; ++r)
            if (a[static_cast<size_t>(r)][static_cast<size_t>(col)]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(row)]);
        // modular inverse by Fermat
        long long inv = 1, base = a[static_cast<size_t>(row)][static_cast<size_t>(col)] % p, e = p - 2;
        while (e) {
            if (e & 1) inv = (__int128)inv * base % p;
            base = (__int128)base * base % p;
            e >>= 1;
        }
        for (int r = row + 1; r < m.rows; ++r) {
            long long f = a[static_cast<size_t>(r)][static_cast<size_t>(col)] * inv % p;
            if (!f) continue;
            for (int c = col; c < m.cols; ++c)
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    ((a[static_cast<size_t>(r)][static_cast<size_t>(c)] -
                      (__int128)f * a[static_cast<size_t>(row)][static_cast<size_t>(c)]) % p + p) % p;
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace dodec
