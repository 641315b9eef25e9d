#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"

#include "cubulation.h"
#include "dodecahedron.h"
#include "fixtures.h"
#include "surfaces.h"

using namespace dodec;

static CosetTable index1_table() {
    return CosetTable::from_permutations(std::vector<std::vector<int>>(kNG, std::vector<int>{0}));
}

TEST_CASE("base cubulations: curvature verdicts per space") {
    Cubulation ws = cubulate(build_cover(Space::WS, index1_table()));
    CHECK(ws.cx.f_vector() == FVector{14, 54, 60, 20});
    CubeComplex::NpcReport r = ws.cx.npc_report();
    CHECK(r.pseudo);
    CHECK(r.min_edge_degree >= 4);
    CHECK(r.simplicial);
    CHECK(r.flag);
    CHECK(r.npc);

    Cubulation phs = cubulate(build_cover(Space::PHS, index1_table()));
    CubeComplex::NpcReport rp = phs.cx.npc_report();
    CHECK(rp.pseudo);
    CHECK(rp.min_edge_degree == 3);
    CHECK_FALSE(rp.npc);

    Cubulation rp3 = cubulate(build_cover(Space::RP3, index1_table()));
    CubeComplex::NpcReport rr = rp3.cx.npc_report();
    CHECK(rr.pseudo);
    CHECK(rr.min_edge_degree == 2);
    std::vector<int> degs = rp3.cx.edge_degrees();
    CHECK(std::count(degs.begin(), degs.end(), 2) > 0);
    CHECK_FALSE(rr.npc);
}

TEST_CASE("one-cube torus fixtures") {
    CubeComplex t3 = three_torus_complex();
    CubeComplex::NpcReport r = t3.npc_report();
    CHECK(r.pseudo);
    CHECK(r.npc);
    CubeComplex::HyperplaneReport h = t3.hyperplanes();
    REQUIRE(h.nhyp == 3);
    for (int i = 0; i < 3; i++) {
        CHECK(h.embedded[i]);
        CHECK(h.two_sided[i]);
        CHECK_FALSE(h.self_osc[i]);
    }
    CHECK(h.crossings.size() == 3);
    for (char c : h.inter_osc) CHECK_FALSE(c);
    CHECK(h.special);

    CubeComplex flip = flipped_torus_complex();
    CubeComplex::HyperplaneReport hf = flip.hyperplanes();
    REQUIRE(hf.nhyp >= 1);
    CHECK(std::count(hf.two_sided.begin(), hf.two_sided.end(), 0) == 1);
    CHECK_FALSE(hf.special);
}

// The cube complex recomputes hyperplanes from scratch (mid-square gluings,
// dual-edge scans); the disk model reads the same surfaces off pentagon
// adjacency. Both views must name the same partition and the same verdicts.
static void check_agreement(const CoverComplex& cover) {
    Cubulation cu = cubulate(cover);
    SurfaceSet ss = analyze_surfaces(cover);
    CubeComplex::HyperplaneReport h = cu.cx.hyperplanes();
    REQUIRE(h.nhyp == (int)ss.comps.size());

    const std::vector<int>& mid = cu.cx.midsquare_comp();
    REQUIRE(mid.size() == cu.disk_of_mid.size());
    std::vector<int> sigma(h.nhyp, -1);       // hyperplane id -> component id
    std::vector<int> per_disk(ss.disk_comp.size(), 0);
    for (size_t i = 0; i < mid.size(); i++) {
        int want = ss.disk_comp[cu.disk_of_mid[i]];
        if (sigma[mid[i]] == -1) sigma[mid[i]] = want;
        CHECK(sigma[mid[i]] == want);
        per_disk[cu.disk_of_mid[i]]++;
    }
    // sigma is a bijection and every pentagonal disk holds 5 mid-squares
    std::set<int> image(sigma.begin(), sigma.end());
    CHECK(image.size() == sigma.size());
    CHECK_FALSE(image.count(-1));
    for (int n : per_disk) CHECK(n == 5);

    for (int i = 0; i < h.nhyp; i++) {
        CHECK((bool)h.embedded[i] == ss.comps[sigma[i]].embedded);
        CHECK((bool)h.two_sided[i] == ss.comps[sigma[i]].two_sided);
        if (h.embedded[i] && h.two_sided[i])
            CHECK((bool)h.self_osc[i] == ss.comps[sigma[i]].self_osc_direct);
    }

    std::set<std::pair<int, int>> cube_cross, disk_cross;
    std::map<std::pair<int, int>, bool> cube_inter, disk_inter;
    for (size_t k = 0; k < h.crossings.size(); k++) {
        auto [a, b] = h.crossings[k];
        std::pair<int, int> p{std::min(sigma[a], sigma[b]), std::max(sigma[a], sigma[b])};
        cube_cross.insert(p);
        cube_inter[p] = h.inter_osc[k];
    }
    for (const CrossingPair& p : ss.crossings) {
        disk_cross.insert({p.a, p.b});
        disk_inter[{p.a, p.b}] = p.inter_direct;
    }
    CHECK(cube_cross == disk_cross);
    CHECK(cube_inter == disk_inter);
    CHECK(h.special == ss.special);
}

TEST_CASE("hyperplane extraction agrees with the disk model") {
    SUBCASE("degree-6 cover") {
        check_agreement(build_cover(
            Space::WS, CosetTable::from_permutations(load_orbits("orbits_cover6.txt", 6))));
    }
    SUBCASE("degree-60 cover") {
        CoverComplex c = build_cover(
            Space::WS, CosetTable::from_permutations(load_orbits("orbits_special60.txt", 60)));
        check_agreement(c);
        Cubulation cu = cubulate(c);
        CHECK(cu.cx.npc_report().npc);
        CHECK(cu.cx.hyperplanes().special);
    }
    SUBCASE("projective-space double cover") {
        auto t = todd_coxeter(presentation(Space::RP3), {});
        REQUIRE(t.has_value());
        check_agreement(build_cover(Space::RP3, *t));
    }
}
