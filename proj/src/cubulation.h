#pragma once
// 3-dimensional cube complexes built from explicit square-to-square gluings,
// with the checks that matter for nonpositive curvature: edge degrees, vertex
// links (simplicial + flag), and hyperplane geometry (mid-square components,
// sidedness, osculation). The dodecahedral cubulation (one cube per vertex of
// each sheet) is constructed on top of the generic builder.
#include "cover.h"

#include <array>
#include <utility>
#include <vector>

namespace dodec {

class CubeComplex {
public:
    explicit CubeComplex(int ncubes);

    // Identify face f1 of cube c1 with face f2 of cube c2. Faces are
    // face_id(axis, side); perm maps corner positions of f1 to corner
    // positions of f2, where position = (low in-face axis bit) | (high
    // in-face axis bit << 1). perm must preserve square adjacency. Each face
    // may be glued only once.
    void glue(int c1, int f1, int c2, int f2, const std::array<int, 4>& perm);
    void finish();

    static constexpr int face_id(int axis, int side) { return axis * 2 + side; }
    static int face_corner(int face, int idx);  // corner bits 0..7
    static int edge_slot(int dir, int corner);  // slot 0..11 within a cube

    int ncubes() const { return n; }
    FVector f_vector() const;
    std::vector<int> edge_degrees() const;  // per edge class, cube-slot count
    bool pseudo_manifold() const;           // every face slot glued exactly once

    struct NpcReport {
        int min_edge_degree = 0;
        bool simplicial = false;
        bool flag = false;
        bool pseudo = false;
        bool npc = false;
    };
    NpcReport npc_report() const;

    // mid-square hyperplanes
    int nhyperplanes() const { return nmid; }
    const std::vector<int>& midsquare_comp() const { return mid_cls; }
    struct HyperplaneReport {
        int nhyp = 0;
        std::vector<char> embedded, two_sided, self_osc;
        std::vector<std::pair<int, int>> crossings;
        std::vector<char> inter_osc;  // aligned with crossings
        bool special = false;
    };
    HyperplaneReport hyperplanes() const;

    // class labels, valid after finish()
    std::vector<int> corner_cls, edge_cls, face_cls;
    int nverts = 0, nedges = 0, nsquares = 0;

private:
    struct Gluing {
        int c1, f1, c2, f2;
        std::array<int, 4> perm;
    };
    int n;
    bool finished = false;
    std::vector<Gluing> gluings;
    std::vector<int> glued;    // per face slot: times glued
    std::vector<int> sqc_cls;  // square-corner classes, 24 per cube
    std::vector<int> dir_cls;  // directed-edge classes, 24 per cube
    std::vector<int> mid_cls;  // mid-square component, 3 per cube
    std::vector<char> mid_sign_ok;  // per component: co-orientation propagates
    std::vector<int> mid_sign;      // per mid-square, valid where component ok
    int nsqc = 0, ndir = 0, nmid = 0;
};

// Dodecahedral cubulation of a cover: cube ids are sheet*20 + vertex.
struct Cubulation {
    CubeComplex cx;
    std::vector<int> corner_role;  // per corner class: 0 vertex, 1 edge mid,
                                   // 2 face center, 3 cell center
    std::vector<int> disk_of_mid;  // per cube*3+axis: disk id sheet*12+face
};
Cubulation cubulate(const CoverComplex& cover);

// Fixtures: the one-cube 3-torus, and a variant with one gluing reflected so
// a hyperplane comes out 1-sided.
CubeComplex three_torus_complex();
CubeComplex flipped_torus_complex();

}  // namespace dodec
