#pragma once
// Canonical immersed surface of a dodecahedral complex, analyzed at the
// pentagonal-disk level: one disk per (sheet, pentagon), five mid-squares
// each. Components, Euler characteristic/genus, near-vertex sets, osculation
// (direct over dual edges, and the counting shortcut), crossings, coloring.
#include "cover.h"

#include <string>
#include <vector>

namespace dodec {

// Disk naming as printed: letter/side pass through the fixed renaming map.
struct DiskLabel {
    int letter;  // 0..5 into "uvwxyz"
    int side;    // 0 = ⊗ (tail glyph), 1 = ⊙ (head glyph)
    int sheet;   // 0-based
    bool operator==(const DiskLabel&) const = default;
    bool operator<(const DiskLabel& o) const {
        if (sheet != o.sheet) return sheet < o.sheet;
        if (letter != o.letter) return letter < o.letter;
        return side < o.side;
    }
};
DiskLabel name_disk(int sheet, int face);
int disk_of_label(const DiskLabel& l);  // inverse: disk id sheet*12+face
std::string format_disk(const DiskLabel& l);  // "(z,⊙)_1" style, 1-based sheet

struct SurfaceComponent {
    std::vector<int> disks;  // ids sheet*12+face, sorted by named label
    int ndisks = 0;
    int nsheets = 0;         // distinct sheets met
    int max_per_sheet = 0;
    bool embedded = false;
    int nverts = 0, nsides = 0;  // pentagon-level cells
    int chi = 0;
    bool orientable = false;
    int genus = 0;  // (2-chi)/2 when orientable, else 2-chi cross-caps
    std::vector<int> near;   // distinct cover vertex classes, sorted
    int near_incidence = 0;  // surface vertices (= dual edges at dodecahedral vertices)
    bool self_osc_direct = false, self_osc_lemma = false;
    bool two_sided = false;
};

struct CrossingPair {
    int a = 0, b = 0;        // component ids, a < b
    int disk_pairs = 0;      // intersecting disk pairs
    int near_union = 0;      // |near(a) ∪ near(b)|
    bool inter_direct = false, inter_lemma = false;
};

struct SurfaceSet {
    Space space = Space::WS;
    int sheets = 0;
    std::vector<int> disk_comp;  // component id per disk instance
    std::vector<SurfaceComponent> comps;
    std::vector<CrossingPair> crossings;
    bool all_embedded = false, any_embedded = false;
    bool any_self_osc = false, any_inter_osc = false;
    bool special = false;  // embedded, 2-sided, no self-/inter-osculation
    int chromatic = 0;     // crossing graph; exact for <= 20 nodes
    bool chromatic_exact = false;
    std::vector<int> coloring;  // per component
};

SurfaceSet analyze_surfaces(const CoverComplex& cover);

// Components only (cheap path for large batches): number of disk components.
int count_surface_components(const CoverComplex& cover);

}  // namespace dodec
