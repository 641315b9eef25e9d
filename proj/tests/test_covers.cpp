#include "doctest.h"

#include "cover.h"
#include "fixtures.h"
#include "helpers.h"
#include "rewriting.h"

using namespace dodec;

TEST_CASE("degree-6 cover from its subgroup words") {
    Presentation pres = presentation(Space::WS);
    auto words = load_words("words_cover6.txt");
    REQUIRE(words.size() == 10);
    auto t = todd_coxeter(pres, words);
    REQUIRE(t.has_value());
    CHECK(t->ncosets == 6);

    CoverComplex c = build_cover(Space::WS, *t);
    CHECK(c.f_vector() == FVector{6, 36, 36, 6});
    CHECK(c.connected());
    CHECK(c.self_identification());
    CHECK(c.pairing_loops() == std::vector<int>(6, 1));
    CHECK(count_surface_components(c) == 6);
    CHECK(cover_homology(*t, pres.relators) == AbelianGroup::parse("Z^5+Z_2^2+Z_5^3"));
}

TEST_CASE("degree-6 cover from the printed orbits reproduces the printed disks") {
    auto perms = load_orbits("orbits_cover6.txt", 6);
    CosetTable t = CosetTable::from_permutations(perms);
    CHECK(t.satisfies_all(walk_relators(Space::WS)));
    for (const Word& w : load_words("words_cover6.txt")) CHECK(t.apply_word(0, w) == 0);

    CoverComplex c = build_cover(Space::WS, t);
    SurfaceSet s = analyze_surfaces(c);
    REQUIRE(s.comps.size() == 6);

    auto fix = load_surfaces("surfaces_cover6.txt");
    REQUIRE(fix.size() == 6);
    CHECK(surface_family(s) == fixture_family(fix));

    int typos = 0;
    for (const FixtureSurface& f : fix) typos += f.typo;
    CHECK(typos == 1);  // one listing carries a stray bracket; parsed, flagged
}

TEST_CASE("enumerated and printed degree-6 covers agree up to sheet relabeling") {
    Presentation pres = presentation(Space::WS);
    auto t = todd_coxeter(pres, load_words("words_cover6.txt"));
    REQUIRE(t.has_value());
    CoverComplex c = build_cover(Space::WS, *t);
    SurfaceSet s = analyze_surfaces(c);

    CosetTable printed = CosetTable::from_permutations(load_orbits("orbits_cover6.txt", 6));
    CHECK(surfaces_match_up_to_relabeling(*t, s, printed, load_surfaces("surfaces_cover6.txt")));
}

TEST_CASE("degree-60 cover from the printed orbits") {
    auto perms = load_orbits("orbits_special60.txt", 60);
    CosetTable t = CosetTable::from_permutations(perms);
    CHECK(t.satisfies_all(walk_relators(Space::WS)));
    CHECK(t.transitive());

    auto words = load_words("words_special60.txt");
    REQUIRE(words.size() == 65);
    for (const Word& w : words) CHECK(t.apply_word(0, w) == 0);

    // regular: the point stabilizer is normal, so the image order equals the degree
    CHECK(permutation_image_order(t) == 60);

    CoverComplex c = build_cover(Space::WS, t);
    CHECK(c.f_vector() == FVector{60, 360, 360, 60});
    CHECK_FALSE(c.self_identification());

    CHECK(cover_homology(t, walk_relators(Space::WS)) == AbelianGroup::parse("Z^41+Z_2^12"));
}

TEST_CASE("degree-60 cover equals the enumeration from its subgroup words") {
    Presentation pres = presentation(Space::WS);
    auto t = todd_coxeter(pres, load_words("words_special60.txt"));
    REQUIRE(t.has_value());
    CHECK(t->ncosets == 60);

    // same subgroup as the printed orbits: tables agree after standardizing
    CosetTable printed = CosetTable::from_permutations(load_orbits("orbits_special60.txt", 60));
    printed.standardize();
    CosetTable enumerated = *t;
    enumerated.standardize();
    CHECK(printed.tab == enumerated.tab);
}
