#include "dodecahedron.h"

#include <algorithm>
#include <cassert>
#include <cstring>

namespace dodec {

#include "model_tables.inc"

const char* space_name(Space s) {
    switch (s) {
        case Space::WS: return "ws";
        case Space::PHS: return "phs";
        case Space::RP3: return "rp3";
    }
    return "?";
}

bool parse_space(const std::string& s, Space& out) {
    if (s == "ws") out = Space::WS;
    else if (s == "phs") out = Space::PHS;
    else if (s == "rp3") out = Space::RP3;
    else return false;
    return true;
}

static Model build_model() {
    Model m;
    std::memcpy(m.face_cycle, kFaceCycle, sizeof kFaceCycle);
    std::memcpy(m.iota, kIota, sizeof kIota);
    std::memcpy(m.partner, kPartner, sizeof kPartner);
    std::memcpy(m.face_gen, kFaceGen, sizeof kFaceGen);
    std::memcpy(m.face_side, kFaceSide, sizeof kFaceSide);

    for (int v = 0; v < kNV; v++) assert(m.iota[v] != v && m.iota[m.iota[v]] == v);
    for (int j = 0; j < kNF; j++) assert(m.partner[j] != j && m.partner[m.partner[j]] == j);

    for (int g = 0; g < kNG; g++) m.tail_face[g] = m.head_face[g] = -1;
    for (int j = 0; j < kNF; j++) {
        int g = m.face_gen[j];
        (m.face_side[j] == 0 ? m.tail_face[g] : m.head_face[g]) = j;
    }
    for (int g = 0; g < kNG; g++) {
        assert(m.tail_face[g] >= 0 && m.head_face[g] >= 0);
        assert(m.partner[m.tail_face[g]] == m.head_face[g]);
    }

    for (int a = 0; a < kNV; a++)
        for (int b = 0; b < kNV; b++) m.edge_id[a][b] = -1;
    std::vector<std::array<int, 2>> es;
    for (int j = 0; j < kNF; j++)
        for (int i = 0; i < 5; i++) {
            int a = m.face_cycle[j][i], b = m.face_cycle[j][(i + 1) % 5];
            if (a > b) std::swap(a, b);
            es.push_back({a, b});
        }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    assert(es.size() == kNE);
    for (int e = 0; e < kNE; e++) {
        m.edge_vs[e] = es[e];
        m.edge_id[es[e][0]][es[e][1]] = m.edge_id[es[e][1]][es[e][0]] = e;
    }

    int deg[kNE] = {};
    for (int e = 0; e < kNE; e++) m.faces_at_edge[e][0] = m.faces_at_edge[e][1] = -1;
    for (int j = 0; j < kNF; j++)
        for (int i = 0; i < 5; i++) {
            int e = m.edge_id[m.face_cycle[j][i]][m.face_cycle[j][(i + 1) % 5]];
            m.face_edges[j][i] = e;
            assert(deg[e] < 2);
            m.faces_at_edge[e][deg[e]++] = j;  // j ascending, so entries increase
        }
    for (int e = 0; e < kNE; e++) assert(deg[e] == 2);

    for (int j = 0; j < kNF; j++)
        for (int v = 0; v < kNV; v++) m.vertex_pos[j][v] = -1;
    for (int j = 0; j < kNF; j++)
        for (int i = 0; i < 5; i++) m.vertex_pos[j][m.face_cycle[j][i]] = i;

    for (int v = 0; v < kNV; v++) {
        int nf = 0, ne = 0;
        for (int j = 0; j < kNF; j++)
            if (m.vertex_pos[j][v] >= 0) m.vertex_faces[v][nf++] = j;
        for (int e = 0; e < kNE; e++)
            if (m.edge_vs[e][0] == v || m.edge_vs[e][1] == v) m.vertex_edges[v][ne++] = e;
        assert(nf == 3 && ne == 3);
    }

    for (int j = 0; j < kNF; j++)
        for (int v = 0; v < kNV; v++) {
            m.third_edge[j][v] = -1;
            if (m.vertex_pos[j][v] < 0) continue;
            for (int t = 0; t < 3; t++) {
                int e = m.vertex_edges[v][t];
                if (m.faces_at_edge[e][0] != j && m.faces_at_edge[e][1] != j) m.third_edge[j][v] = e;
            }
            assert(m.third_edge[j][v] >= 0);
        }
    return m;
}

const Model& Model::get() {
    static const Model m = build_model();
    return m;
}

static int twist_step(Space s) {
    switch (s) {
        case Space::WS: return kTwistStepWs;
        case Space::PHS: return kTwistStepPhs;
        case Space::RP3: return kTwistStepRp3;
    }
    return 0;
}

static Pairing build_pairing(Space s) {
    const Model& m = Model::get();
    Pairing p;
    p.space = s;
    p.twist = twist_step(s);
    for (int j = 0; j < kNF; j++) {
        for (int v = 0; v < kNV; v++) p.vmap[j][v] = -1;
        for (int e = 0; e < kNE; e++) p.emap[j][e] = -1;
        int partner = m.partner[j];
        for (int i = 0; i < 5; i++) {
            int v = m.face_cycle[j][i];
            int base = m.iota[v];  // lands on the partner face
            int pos = m.vertex_pos[partner][base];
            assert(pos >= 0);
            p.vmap[j][v] = m.face_cycle[partner][(pos + p.twist) % 5];
        }
        for (int i = 0; i < 5; i++) {
            int e = m.face_edges[j][i];
            int a = p.vmap[j][m.edge_vs[e][0]], b = p.vmap[j][m.edge_vs[e][1]];
            p.emap[j][e] = m.edge_id[a][b];
            assert(p.emap[j][e] >= 0);
        }
    }
    // involutive pairing
    for (int j = 0; j < kNF; j++)
        for (int v = 0; v < kNV; v++)
            if (p.vmap[j][v] >= 0) assert(p.vmap[m.partner[j]][p.vmap[j][v]] == v);
    return p;
}

const Pairing& Pairing::get(Space s) {
    static const Pairing ws = build_pairing(Space::WS);
    static const Pairing phs = build_pairing(Space::PHS);
    static const Pairing rp3 = build_pairing(Space::RP3);
    switch (s) {
        case Space::PHS: return phs;
        case Space::RP3: return rp3;
        default: return ws;
    }
}

int crossing_letter(int face) {
    const Model& m = Model::get();
    bool pos = (m.face_side[face] == 0) != kEmitFlip;
    return letter(m.face_gen[face], !pos);
}

std::vector<EdgeOrbit> edge_orbits(const Pairing& p) {
    const Model& m = Model::get();
    // union-find over edges
    int par[kNE];
    for (int e = 0; e < kNE; e++) par[e] = e;
    auto find = [&](int a) {
        while (par[a] != a) a = par[a] = par[par[a]];
        return a;
    };
    for (int j = 0; j < kNF; j++)
        for (int i = 0; i < 5; i++) {
            int e = m.face_edges[j][i];
            par[find(e)] = find(p.emap[j][e]);
        }
    std::vector<int> orbit_min(kNE, kNE);
    for (int e = 0; e < kNE; e++) orbit_min[find(e)] = std::min(orbit_min[find(e)], e);
    std::vector<int> starts;
    for (int e = 0; e < kNE; e++)
        if (find(e) == e) starts.push_back(orbit_min[e]);
    std::sort(starts.begin(), starts.end());

    std::vector<EdgeOrbit> orbits;
    int seen = 0;
    for (int e0 : starts) {
        EdgeOrbit o;
        int q0 = m.faces_at_edge[e0][0];
        int q = q0, e = e0;
        do {
            o.edges.push_back(e);
            o.faces.push_back(q);
            int ehat = p.emap[q][e];
            int q2 = m.other_face_at_edge(ehat, m.partner[q]);
            q = q2;
            e = ehat;
        } while (!(q == q0 && e == e0));
        seen += (int)o.edges.size();
        orbits.push_back(std::move(o));
    }
    assert(seen == kNE);
    return orbits;
}

std::vector<Word> walk_relators(Space s) {
    std::vector<Word> rels;
    for (const EdgeOrbit& o : edge_orbits(Pairing::get(s))) {
        Word w;
        for (int q : o.faces) w.push_back(crossing_letter(q));
        rels.push_back(std::move(w));
    }
    return rels;
}

std::vector<Word> display_relators(Space s) {
    std::vector<Word> rels = walk_relators(s);
    if (kReverseDisplay)
        for (Word& w : rels) std::reverse(w.begin(), w.end());
    return rels;
}

Presentation presentation(Space s) {
    Presentation p;
    p.ngens = kNG;
    p.relators = walk_relators(s);
    return p;
}

}  // namespace dodec
