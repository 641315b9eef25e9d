#pragma once
// Combinatorial dodecahedron with the three opposite-face gluing schemes
// (r-step screw twists after the antipodal map), derived incidence tables,
// per-space face-pairing maps, and presentation derivation by edge-orbit
// traversal.
#include "words.h"
#include <array>
#include <string>
#include <vector>

namespace dodec {

enum class Space { WS, PHS, RP3 };

const char* space_name(Space s);
bool parse_space(const std::string& s, Space& out);

inline constexpr int kNV = 20, kNE = 30, kNF = 12, kNG = 6;

// Static incidence derived from the frozen face cycles.
struct Model {
  int face_cycle[12][5];   // vertex cycle of each pentagon, CCW from outside
  int iota[20];            // antipodal involution on vertices
  int partner[12];         // opposite face
  int face_gen[12];        // generator label 0..5
  int face_side[12];       // 0 = tail, 1 = head
  int tail_face[6], head_face[6];

  std::array<std::array<int, 2>, 30> edge_vs;  // sorted endpoint pair
  int edge_id[20][20];                         // -1 if not an edge
  int faces_at_edge[30][2];                    // increasing face index
  int face_edges[12][5];                       // edge (cyc[i], cyc[i+1])
  int vertex_pos[12][20];                      // position in face cycle, -1 if absent
  int vertex_faces[20][3];                     // faces at a vertex, increasing
  int vertex_edges[20][3];                     // edges at a vertex, increasing

  // third_edge[j][v]: the edge at v not contained in face j (v on face j)
  int third_edge[12][20];
  // other_face[e][j]: the face at edge e different from j
  int other_face_at_edge(int e, int j) const {
    return faces_at_edge[e][0] == j ? faces_at_edge[e][1] : faces_at_edge[e][0];
  }

  static const Model& get();
};

// Face-pairing maps of one space: phi[j] maps cells of face j onto partner(j).
struct Pairing {
  Space space;
  int twist;         // cycle steps after iota
  int vmap[12][20];  // vertex map, -1 off the face
  int emap[12][30];  // edge map, -1 off the face

  int map_vertex(int j, int v) const { return vmap[j][v]; }
  int map_edge(int j, int e) const { return emap[j][e]; }

  static const Pairing& get(Space s);
};

// Signed letter emitted when crossing out of face j (walk convention).
int crossing_letter(int face);

// Edge orbits of a pairing: each orbit is the cyclic walk (face, edge) list.
struct EdgeOrbit {
  std::vector<int> edges;  // edge visited at each step
  std::vector<int> faces;  // face crossed at each step
};
std::vector<EdgeOrbit> edge_orbits(const Pairing& p);

// Relators in walk order (what coset tables must satisfy).
std::vector<Word> walk_relators(Space s);
// Relators as printed (reversed walk words).
std::vector<Word> display_relators(Space s);

Presentation presentation(Space s);  // ngens 6, walk relators

}  // namespace dodec
