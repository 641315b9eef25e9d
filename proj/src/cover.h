#pragma once
// Dodecahedral complexes: k sheets glued along the space's face pairing
// composed with a permutation action on sheets. Cell orbits, f-vectors,
// sheet transitions, and the face-pairing graph.
#include "coset_table.h"
#include "dodecahedron.h"

#include <array>
#include <vector>

namespace dodec {

using FVector = std::array<long, 4>;  // vertices, edges, pentagons, cells

struct CoverComplex {
    Space space = Space::WS;
    int sheets = 0;
    CosetTable action;  // complete table over the 6 generators

    // orbit class of each cell instance, indexed sheet*20+v / sheet*30+e / sheet*12+j;
    // classes are numbered 0..n-1 in order of smallest instance
    std::vector<int> vclass, eclass, fclass;
    int nv = 0, ne = 0, nf = 0;

    FVector f_vector() const { return {nv, ne, nf, sheets}; }

    // sheet reached when crossing out of the given face of the given sheet
    int transition(int sheet, int face) const;

    bool connected() const { return action.transitive(); }
    // any pentagon glued to a pentagon of the same sheet (loop in the pairing graph)
    bool self_identification() const;
    // loops per sheet in the pairing graph
    std::vector<int> pairing_loops() const;
};

// Build the cover complex of a space from a complete coset table.
// Validates edge-orbit closure (the action satisfies the walk relators).
CoverComplex build_cover(Space s, const CosetTable& action);

}  // namespace dodec
