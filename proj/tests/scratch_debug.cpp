#include <chrono>
#include <cstdio>
#include <map>

#include "cover.h"
#include "double_cover.h"
#include "fixtures.h"
#include "rewriting.h"
#include "surfaces.h"
#include "words.h"

using namespace dodec;
using Clock = std::chrono::steady_clock;

static double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main() {
    std::vector<Word> rels = walk_relators(Space::WS);
    CosetTable t6 = CosetTable::from_permutations(load_orbits("orbits_cover6.txt", 6));

    auto t0 = Clock::now();
    DoubleCoverFamily fam(t6, rels);
    printf("C family: rank=%d count=%llu fpf=%llu\n", fam.rank(),
           (unsigned long long)fam.count(), (unsigned long long)fam.count_fixed_point_free());

    // Table 2: H1 + comps of the fpf doubles
    std::map<std::string, int> h1_dist;
    for (uint64_t cf = 1; cf <= fam.count(); cf++) {
        if (!fam.fixed_point_free(cf)) continue;
        CosetTable d = fam.table(cf);
        AbelianGroup h1 = cover_homology(d, rels);
        int comps = count_surface_components(build_cover(Space::WS, d));
        h1_dist[h1.to_string() + " #" + std::to_string(comps)]++;
    }
    for (auto& [k, v] : h1_dist) printf("  %s : %d\n", k.c_str(), v);
    auto t1 = Clock::now();
    printf("table2 pass: %.2fs\n", secs(t0, t1));

    // towers: doubles of doubles
    uint64_t total = 0, fpf_total = 0;
    std::map<int, uint64_t> comp_dist;
    uint64_t e_cf = 0, e_outer = 0;
    for (uint64_t cf = 1; cf <= fam.count(); cf++) {
        CosetTable d = fam.table(cf);
        DoubleCoverFamily fam2(d, rels);
        total += fam2.count();
        for (uint64_t cg = 1; cg <= fam2.count(); cg++) {
            if (!fam2.fixed_point_free(cg)) continue;
            fpf_total++;
            CosetTable dd = fam2.table(cg);
            int comps = count_surface_components(build_cover(Space::WS, dd));
            comp_dist[comps]++;
            if (comps == 24) { e_cf = cg; e_outer = cf; }
        }
    }
    auto t2 = Clock::now();
    printf("towers: total=%llu fpf=%llu  (%.2fs)\n", (unsigned long long)total,
           (unsigned long long)fpf_total, secs(t1, t2));
    for (auto& [k, v] : comp_dist) printf("  comps %d : %llu\n", k, (unsigned long long)v);

    // the 24-component tower cover
    CosetTable e = DoubleCoverFamily(fam.table(e_outer), rels).table(e_cf);
    e.standardize();
    int fixed = 0;
    for (const Word& w : load_words("words_cover24.txt"))
        if (e.apply_word(0, w) == 0) fixed++;
    printf("E: degree %d, words fixing 0: %d/27\n", e.ncosets, fixed);
    DoubleCoverFamily famE(e, rels);
    printf("E family: rank=%d count=%llu fpf=%llu\n", famE.rank(),
           (unsigned long long)famE.count(),
           (unsigned long long)famE.count_fixed_point_free());
    auto t3 = Clock::now();

    std::map<int, uint64_t> e_dist;
    for (uint64_t cf = 1; cf <= famE.count(); cf++) {
        CosetTable dd = famE.table(cf);
        e_dist[count_surface_components(build_cover(Space::WS, dd))]++;
    }
    auto t4 = Clock::now();
    printf("E doubles scan: %.2fs\n", secs(t3, t4));
    for (auto& [k, v] : e_dist) printf("  comps %d : %llu\n", k, (unsigned long long)v);
    return 0;
}
