#include "cover.h"

#include <cassert>
#include <stdexcept>

#include "union_find.h"

namespace dodec {

#include "model_tables.inc"

int CoverComplex::transition(int sheet, int face) const {
    int l = crossing_letter(face);
    return action.apply(sheet, kSheetDir > 0 ? l : -l);
}

bool CoverComplex::self_identification() const {
    for (int s = 0; s < sheets; s++)
        for (int j = 0; j < kNF; j++)
            if (transition(s, j) == s) return true;
    return false;
}

std::vector<int> CoverComplex::pairing_loops() const {
    std::vector<int> loops(sheets, 0);
    const Model& m = Model::get();
    for (int s = 0; s < sheets; s++)
        for (int g = 0; g < kNG; g++)
            if (transition(s, m.tail_face[g]) == s) loops[s]++;
    return loops;
}

CoverComplex build_cover(Space space, const CosetTable& action) {
    if (!action.complete() || action.ngens != kNG) throw std::invalid_argument("cover action must be a complete 6-generator table");
    const Model& m = Model::get();
    const Pairing& p = Pairing::get(space);

    CoverComplex c;
    c.space = space;
    c.sheets = action.ncosets;
    c.action = action;

    for (const Word& w : walk_relators(space))
        if (!action.satisfies(w)) throw std::invalid_argument("action does not satisfy the edge-orbit relators");

    int k = c.sheets;
    UnionFind vu(k * kNV), eu(k * kNE), fu(k * kNF);
    for (int s = 0; s < k; s++) {
        for (int j = 0; j < kNF; j++) {
            int s2 = c.transition(s, j);
            fu.unite(s * kNF + j, s2 * kNF + m.partner[j]);
            for (int i = 0; i < 5; i++) {
                int v = m.face_cycle[j][i];
                vu.unite(s * kNV + v, s2 * kNV + p.vmap[j][v]);
                int e = m.face_edges[j][i];
                eu.unite(s * kNE + e, s2 * kNE + p.emap[j][e]);
            }
        }
    }
    c.nv = vu.flatten(c.vclass);
    c.ne = eu.flatten(c.eclass);
    c.nf = fu.flatten(c.fclass);
    assert(c.nv - c.ne + c.nf - c.sheets == 0);
    return c;
}

}  // namespace dodec
