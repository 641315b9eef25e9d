#include "doctest.h"

#include <map>

#include "cover.h"
#include "fixtures.h"
#include "helpers.h"

using namespace dodec;

static CosetTable index1_table() {
    return CosetTable::from_permutations(std::vector<std::vector<int>>(kNG, std::vector<int>{0}));
}

TEST_CASE("disk naming round-trips") {
    for (int s = 0; s < 3; s++)
        for (int f = 0; f < kNF; f++) {
            DiskLabel l = name_disk(s, f);
            CHECK(disk_of_label(l) == s * kNF + f);
        }
    // a named disk formats with the 1-based sheet
    DiskLabel l = name_disk(0, 0);
    std::string txt = format_disk(l);
    CHECK(txt.find("_1") != std::string::npos);
}

TEST_CASE("base surface of each space") {
    CosetTable t = index1_table();

    SurfaceSet ws = analyze_surfaces(build_cover(Space::WS, t));
    CHECK(ws.comps.size() == 1);
    CHECK(ws.comps[0].ndisks == 12);
    CHECK_FALSE(ws.comps[0].embedded);

    SurfaceSet phs = analyze_surfaces(build_cover(Space::PHS, t));
    CHECK(phs.comps.size() == 1);
    CHECK(phs.comps[0].ndisks == 12);

    SurfaceSet rp3 = analyze_surfaces(build_cover(Space::RP3, t));
    CHECK(rp3.comps.size() == 6);
    for (const SurfaceComponent& c : rp3.comps) {
        CHECK(c.ndisks == 2);
        CHECK(c.embedded);
        CHECK(c.chi == 2);
        CHECK(c.orientable);
        CHECK(c.genus == 0);
    }
}

TEST_CASE("six embedded genus-4 components in the degree-6 cover") {
    CosetTable t = CosetTable::from_permutations(load_orbits("orbits_cover6.txt", 6));
    SurfaceSet s = analyze_surfaces(build_cover(Space::WS, t));

    REQUIRE(s.comps.size() == 6);
    CHECK(s.all_embedded);
    for (const SurfaceComponent& c : s.comps) {
        CHECK(c.ndisks == 12);
        CHECK(c.nsheets == 6);
        CHECK(c.max_per_sheet == 2);  // each sheet met exactly twice
        CHECK(c.embedded);
        CHECK(c.nverts == 12);
        CHECK(c.nsides == 30);
        CHECK(c.chi == -6);
        CHECK(c.orientable);
        CHECK(c.genus == 4);
        CHECK(c.two_sided);
        CHECK(c.self_osc_direct);
        CHECK(c.self_osc_lemma);
    }
    CHECK(s.any_self_osc);
    CHECK_FALSE(s.special);  // self-osculation rules it out

    // osculation shortcut agrees with the dual-edge scan
    for (const SurfaceComponent& c : s.comps) CHECK(c.self_osc_direct == c.self_osc_lemma);
    for (const CrossingPair& p : s.crossings) CHECK(p.inter_direct == p.inter_lemma);

    // Every component holds an antipodal disk pair (g,.)_k / opposite side in
    // one sheet k, and any other face of that sheet is adjacent to exactly one
    // of the two.  Since each component meets every sheet twice, all 15 pairs
    // cross: the crossing graph is K6 and needs six colors.
    REQUIRE(s.crossings.size() == 15);
    for (const CrossingPair& p : s.crossings) CHECK(p.disk_pairs == 12);
    CHECK(s.chromatic_exact);
    CHECK(s.chromatic == 6);
    REQUIRE(s.coloring.size() == 6);
    for (const CrossingPair& p : s.crossings) CHECK(s.coloring[p.a] != s.coloring[p.b]);
}

TEST_CASE("sixty special components in the degree-60 cover") {
    CosetTable t = CosetTable::from_permutations(load_orbits("orbits_special60.txt", 60));
    SurfaceSet s = analyze_surfaces(build_cover(Space::WS, t));

    REQUIRE(s.comps.size() == 60);
    CHECK(s.all_embedded);
    CHECK_FALSE(s.any_self_osc);
    CHECK_FALSE(s.any_inter_osc);
    CHECK(s.special);

    for (const SurfaceComponent& c : s.comps) {
        CHECK(c.ndisks == 12);
        CHECK(c.nsheets == 12);  // twelve disks over twelve distinct sheets
        CHECK(c.max_per_sheet == 1);
        CHECK(c.embedded);
        CHECK(c.two_sided);
        CHECK(c.genus == 4);
        CHECK(c.orientable);
        CHECK(static_cast<int>(c.near.size()) == 12);
        CHECK_FALSE(c.self_osc_direct);
        CHECK_FALSE(c.self_osc_lemma);
    }
    for (const CrossingPair& p : s.crossings) {
        CHECK(p.disk_pairs == 3);
        CHECK(p.near_union == 21);
        CHECK_FALSE(p.inter_direct);
        CHECK_FALSE(p.inter_lemma);
    }

    // computed listings equal the printed ones as sets, with no relabeling
    CHECK(surface_family(s) == fixture_family(load_surfaces("surfaces_special60.txt")));
}

TEST_CASE("double cover of the projective space splits into twelve spheres") {
    Presentation pres = presentation(Space::RP3);
    auto t = todd_coxeter(pres, {});
    REQUIRE(t.has_value());
    CHECK(t->ncosets == 2);
    SurfaceSet s = analyze_surfaces(build_cover(Space::RP3, *t));
    CHECK(s.comps.size() == 12);
    for (const SurfaceComponent& c : s.comps) {
        CHECK(c.ndisks == 2);
        CHECK(c.genus == 0);
    }
}
