#include "cubulation.h"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "union_find.h"

namespace dodec {

#include "model_tables.inc"

namespace {

// the two in-face axes of face (axis, side), ascending
inline void other_axes(int axis, int& lo, int& hi) {
    lo = axis == 0 ? 1 : 0;
    hi = axis == 2 ? 1 : 2;
}

inline int bit_dir(int diff) {
    assert(diff == 1 || diff == 2 || diff == 4);
    return diff == 1 ? 0 : diff == 2 ? 1 : 2;
}

// face corner positions 0..3 in square-cycle order (adjacent differ in 1 bit)
constexpr int kSquareCycle[4] = {0, 1, 3, 2};

}  // namespace

int CubeComplex::face_corner(int face, int idx) {
    int axis = face / 2, side = face % 2, lo, hi;
    other_axes(axis, lo, hi);
    return (side << axis) | ((idx & 1) << lo) | (((idx >> 1) & 1) << hi);
}

int CubeComplex::edge_slot(int dir, int corner) {
    int lo, hi;
    other_axes(dir, lo, hi);
    return dir * 4 + (((corner >> lo) & 1) | (((corner >> hi) & 1) << 1));
}

CubeComplex::CubeComplex(int ncubes) : n(ncubes) { glued.assign(n * 6, 0); }

void CubeComplex::glue(int c1, int f1, int c2, int f2, const std::array<int, 4>& perm) {
    assert(!finished);
    assert(c1 >= 0 && c1 < n && c2 >= 0 && c2 < n);
    assert(f1 >= 0 && f1 < 6 && f2 >= 0 && f2 < 6);
    assert(c1 != c2 || f1 != f2);
    // perm must be an automorphism of the square's adjacency
    int seen = 0;
    for (int i = 0; i < 4; i++) {
        seen |= 1 << perm[i];
        assert((perm[i ^ 1] ^ perm[i]) == 1 || (perm[i ^ 1] ^ perm[i]) == 2);
        assert((perm[i ^ 2] ^ perm[i]) == 1 || (perm[i ^ 2] ^ perm[i]) == 2);
    }
    assert(seen == 15);
    if (++glued[c1 * 6 + f1] > 1 || ++glued[c2 * 6 + f2] > 1)
        throw std::invalid_argument("face glued twice");
    gluings.push_back({c1, f1, c2, f2, perm});
}

void CubeComplex::finish() {
    assert(!finished);
    finished = true;
    UnionFind cu(n * 8), eu(n * 12), fu(n * 6), sq(n * 24), dd(n * 24), mu(n * 3);
    // mid-square adjacency with a direction-reversal bit, for co-orientations
    std::vector<std::vector<std::array<int, 3>>> madj(n * 3);
    for (const Gluing& g : gluings) {
        fu.unite(g.c1 * 6 + g.f1, g.c2 * 6 + g.f2);
        int a1 = g.f1 / 2, a2 = g.f2 / 2;
        int lo1, hi1, lo2, hi2;
        other_axes(a1, lo1, hi1);
        other_axes(a2, lo2, hi2);
        for (int i = 0; i < 4; i++) {
            int b1 = face_corner(g.f1, i), b2 = face_corner(g.f2, g.perm[i]);
            cu.unite(g.c1 * 8 + b1, g.c2 * 8 + b2);
            sq.unite((g.c1 * 6 + g.f1) * 4 + i, (g.c2 * 6 + g.f2) * 4 + g.perm[i]);
        }
        // edges and directed edges of the square
        for (int i = 0; i < 4; i++)
            for (int p = 0; p < 2; p++) {
                int j = i ^ (1 << p);
                int b1 = face_corner(g.f1, i), b1j = face_corner(g.f1, j);
                int b2 = face_corner(g.f2, g.perm[i]), b2j = face_corner(g.f2, g.perm[j]);
                int d1 = bit_dir(b1 ^ b1j), d2 = bit_dir(b2 ^ b2j);
                int s1 = g.c1 * 12 + edge_slot(d1, b1), s2 = g.c2 * 12 + edge_slot(d2, b2);
                eu.unite(s1, s2);
                // tail of a directed slot sits at the corner whose axis bit
                // matches the direction index
                dd.unite(s1 * 2 + ((b1 >> d1) & 1), s2 * 2 + ((b2 >> d2) & 1));
            }
        // mid-square transport: in-face axis p1 of f1 maps to p2 of f2
        for (int p1 = 0; p1 < 2; p1++) {
            int delta = g.perm[1 << p1] ^ g.perm[0];
            int p2 = delta == 1 ? 0 : 1;
            for (int i = 0; i < 4; i++) assert((g.perm[i ^ (1 << p1)] ^ g.perm[i]) == (1 << p2));
            int d1 = p1 == 0 ? lo1 : hi1, d2 = p2 == 0 ? lo2 : hi2;
            int flip = (g.perm[0] >> p2) & 1;  // +d1 maps to -d2 when set
            mu.unite(g.c1 * 3 + d1, g.c2 * 3 + d2);
            madj[g.c1 * 3 + d1].push_back({g.c2 * 3 + d2, flip, 0});
            madj[g.c2 * 3 + d2].push_back({g.c1 * 3 + d1, flip, 0});
        }
    }
    nverts = cu.flatten(corner_cls);
    nedges = eu.flatten(edge_cls);
    nsquares = fu.flatten(face_cls);
    nsqc = sq.flatten(sqc_cls);
    ndir = dd.flatten(dir_cls);
    nmid = mu.flatten(mid_cls);

    // co-orientation propagation over each hyperplane
    mid_sign.assign(n * 3, -1);
    mid_sign_ok.assign(nmid, 1);
    for (int m0 = 0; m0 < n * 3; m0++) {
        if (mid_sign[m0] >= 0) continue;
        mid_sign[m0] = 0;
        std::vector<int> stack{m0};
        while (!stack.empty()) {
            int m = stack.back();
            stack.pop_back();
            for (auto& [m2, flip, _] : madj[m]) {
                int want = mid_sign[m] ^ flip;
                if (mid_sign[m2] < 0) {
                    mid_sign[m2] = want;
                    stack.push_back(m2);
                } else if (mid_sign[m2] != want)
                    mid_sign_ok[mid_cls[m]] = 0;
            }
        }
    }
}

FVector CubeComplex::f_vector() const {
    return {(long)nverts, (long)nedges, (long)nsquares, (long)n};
}

std::vector<int> CubeComplex::edge_degrees() const {
    std::vector<int> deg(nedges, 0);
    for (int s = 0; s < n * 12; s++) deg[edge_cls[s]]++;
    return deg;
}

bool CubeComplex::pseudo_manifold() const {
    for (int s = 0; s < n * 6; s++)
        if (glued[s] != 1) return false;
    return true;
}

CubeComplex::NpcReport CubeComplex::npc_report() const {
    NpcReport r;
    r.pseudo = pseudo_manifold();
    auto deg = edge_degrees();
    r.min_edge_degree = deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
    r.simplicial = true;
    r.flag = true;

    // link edges: square-corner classes with their two directed-edge ends
    std::vector<std::array<int, 3>> sqe(nsqc, {-1, -1, -1});  // vertex, node, node
    for (int inst = 0; inst < n * 24; inst++) {
        int fs = inst / 4, idx = inst % 4;
        int c = fs / 6, face = fs % 6, axis = face / 2;
        int b = face_corner(face, idx);
        int lo, hi;
        other_axes(axis, lo, hi);
        int s1 = c * 12 + edge_slot(lo, b), s2 = c * 12 + edge_slot(hi, b);
        int n1 = dir_cls[s1 * 2 + ((b >> lo) & 1)], n2 = dir_cls[s2 * 2 + ((b >> hi) & 1)];
        if (n1 > n2) std::swap(n1, n2);
        sqe[sqc_cls[inst]] = {corner_cls[c * 8 + b], n1, n2};
    }

    // group link edges and corner triangles per vertex
    std::map<std::array<int, 3>, int> edge_multiplicity;  // (vertex, n1, n2) -> #classes
    for (int q = 0; q < nsqc; q++) {
        if (sqe[q][1] == sqe[q][2]) r.simplicial = false;  // loop in a link
        edge_multiplicity[sqe[q]]++;
    }
    std::map<int, std::set<std::pair<int, int>>> adj_by_vertex;
    for (auto& [key, mult] : edge_multiplicity) {
        if (mult > 1) r.simplicial = false;  // doubled edge
        adj_by_vertex[key[0]].insert({key[1], key[2]});
    }

    std::map<std::array<int, 4>, int> tri_count;  // (vertex, nodes sorted) -> corners
    std::map<int, std::vector<int>> link_nodes;   // vertex -> node list
    for (int c = 0; c < n; c++)
        for (int b = 0; b < 8; b++) {
            int x = corner_cls[c * 8 + b];
            std::array<int, 3> t;
            for (int d = 0; d < 3; d++)
                t[d] = dir_cls[(c * 12 + edge_slot(d, b)) * 2 + ((b >> d) & 1)];
            std::sort(t.begin(), t.end());
            if (t[0] == t[1] || t[1] == t[2]) {
                r.simplicial = false;
                continue;
            }
            tri_count[{x, t[0], t[1], t[2]}]++;
            for (int d : t) link_nodes[x].push_back(d);
        }
    for (auto& [x, nodes] : link_nodes) {
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    }
    // flag: every 3-clique of a link graph is filled by exactly one corner
    for (auto& [x, nodes] : link_nodes) {
        const auto& adj = adj_by_vertex[x];
        int nn = (int)nodes.size();
        for (int i = 0; i < nn && r.flag; i++)
            for (int j = i + 1; j < nn && r.flag; j++) {
                if (!adj.count({std::min(nodes[i], nodes[j]), std::max(nodes[i], nodes[j])}))
                    continue;
                for (int l = j + 1; l < nn && r.flag; l++) {
                    if (!adj.count({std::min(nodes[i], nodes[l]), std::max(nodes[i], nodes[l])}))
                        continue;
                    if (!adj.count({std::min(nodes[j], nodes[l]), std::max(nodes[j], nodes[l])}))
                        continue;
                    auto it = tri_count.find({x, nodes[i], nodes[j], nodes[l]});
                    if (it == tri_count.end() || it->second != 1) r.flag = false;
                }
            }
    }
    r.npc = r.pseudo && r.min_edge_degree >= 4 && r.simplicial && r.flag;
    return r;
}

CubeComplex::HyperplaneReport CubeComplex::hyperplanes() const {
    HyperplaneReport rep;
    rep.nhyp = nmid;
    rep.embedded.assign(nmid, 1);
    rep.two_sided.assign(nmid, 1);
    rep.self_osc.assign(nmid, 0);

    std::set<std::pair<int, int>> crossing;
    for (int c = 0; c < n; c++) {
        int h[3] = {mid_cls[c * 3], mid_cls[c * 3 + 1], mid_cls[c * 3 + 2]};
        for (int a = 0; a < 3; a++)
            for (int b = a + 1; b < 3; b++) {
                if (h[a] == h[b])
                    rep.embedded[h[a]] = 0;
                else
                    crossing.insert({std::min(h[a], h[b]), std::max(h[a], h[b])});
            }
    }
    rep.crossings.assign(crossing.begin(), crossing.end());

    for (int h = 0; h < nmid; h++) rep.two_sided[h] = mid_sign_ok[h];

    // oriented dual edges per hyperplane; a hyperplane whose duals cannot be
    // consistently directed per edge class is 1-sided
    std::vector<std::map<int, int>> dual_dir(nmid);  // edge class -> parity
    for (int m = 0; m < n * 3; m++) {
        int h = mid_cls[m];
        if (!rep.two_sided[h]) continue;
        int c = m / 3, d = m % 3;
        for (int u = 0; u < 4; u++) {
            int slot = c * 12 + d * 4 + u;
            if (dir_cls[slot * 2] == dir_cls[slot * 2 + 1]) {
                rep.two_sided[h] = 0;
                break;
            }
            auto [it, fresh] = dual_dir[h].insert({edge_cls[slot], mid_sign[m]});
            if (!fresh && it->second != mid_sign[m]) {
                rep.two_sided[h] = 0;
                break;
            }
        }
    }

    // dual directed-edge classes with endpoints
    std::vector<int> dtail(ndir, -1), dhead(ndir, -1);
    for (int s = 0; s < n * 12; s++) {
        int c = s / 12, d = (s % 12) / 4, u = s % 4;
        int lo, hi;
        other_axes(d, lo, hi);
        int base = ((u & 1) << lo) | (((u >> 1) & 1) << hi);
        for (int t = 0; t < 2; t++) {
            dtail[dir_cls[s * 2 + t]] = corner_cls[c * 8 + (base | (t << d))];
            dhead[dir_cls[s * 2 + t]] = corner_cls[c * 8 + (base | ((1 - t) << d))];
        }
    }

    // pairs of edge classes sharing a square never witness osculation
    std::unordered_set<unsigned long long> cosq;
    for (int fs = 0; fs < n * 6; fs++) {
        int c = fs / 6, face = fs % 6;
        int ecl[4];
        for (int i = 0; i < 4; i++) {
            int b = face_corner(face, kSquareCycle[i]);
            int b2 = face_corner(face, kSquareCycle[(i + 1) % 4]);
            ecl[i] = edge_cls[c * 12 + edge_slot(bit_dir(b ^ b2), b)];
        }
        for (int a = 0; a < 4; a++)
            for (int b = a + 1; b < 4; b++) {
                unsigned long long x = std::min(ecl[a], ecl[b]), y = std::max(ecl[a], ecl[b]);
                cosq.insert((x << 32) | y);
            }
    }

    // collect per hyperplane the distinct directed duals, then scan vertices
    std::unordered_map<int, std::vector<std::array<int, 4>>> at_vertex;  // (h, dir, edge, arriving)
    for (int h = 0; h < nmid; h++) {
        if (!rep.two_sided[h]) continue;
        std::set<int> seen;
        for (int m = 0; m < n * 3; m++) {
            if (mid_cls[m] != h) continue;
            int c = m / 3, d = m % 3;
            for (int u = 0; u < 4; u++) {
                int slot = c * 12 + d * 4 + u;
                int dc = dir_cls[slot * 2 + mid_sign[m]];
                if (!seen.insert(dc).second) continue;
                at_vertex[dtail[dc]].push_back({h, dc, edge_cls[slot], 0});
                at_vertex[dhead[dc]].push_back({h, dc, edge_cls[slot], 1});
            }
        }
    }
    std::set<std::pair<int, int>> inter;
    for (auto& [x, lst] : at_vertex)
        for (size_t a = 0; a < lst.size(); a++)
            for (size_t b = a + 1; b < lst.size(); b++) {
                int ha = lst[a][0], hb = lst[b][0];
                if (lst[a][1] == lst[b][1]) continue;
                if (ha == hb && lst[a][3] != lst[b][3]) continue;
                unsigned long long x1 = std::min(lst[a][2], lst[b][2]),
                                   y1 = std::max(lst[a][2], lst[b][2]);
                if (cosq.count((x1 << 32) | y1)) continue;
                if (ha == hb)
                    rep.self_osc[ha] = 1;
                else if (crossing.count({std::min(ha, hb), std::max(ha, hb)}))
                    inter.insert({std::min(ha, hb), std::max(ha, hb)});
            }
    rep.inter_osc.assign(rep.crossings.size(), 0);
    for (size_t i = 0; i < rep.crossings.size(); i++)
        rep.inter_osc[i] = inter.count(rep.crossings[i]) ? 1 : 0;

    rep.special = true;
    for (int h = 0; h < nmid; h++)
        if (!rep.embedded[h] || !rep.two_sided[h] || rep.self_osc[h]) rep.special = false;
    for (char c : rep.inter_osc)
        if (c) rep.special = false;
    return rep;
}

Cubulation cubulate(const CoverComplex& cover) {
    const Model& m = Model::get();
    const Pairing& p = Pairing::get(cover.space);
    int k = cover.sheets;
    CubeComplex cx(k * kNV);

    auto axis_of = [&](int v, int e) {
        for (int a = 0; a < 3; a++)
            if (m.vertex_edges[v][a] == e) return a;
        assert(false);
        return -1;
    };
    // the face at v spanned by its local axes a and b
    auto face_span = [&](int v, int a, int b) {
        int ea = m.vertex_edges[v][a], eb = m.vertex_edges[v][b];
        for (int fi = 0; fi < 3; fi++) {
            int f = m.vertex_faces[v][fi];
            if (m.third_edge[f][v] != ea && m.third_edge[f][v] != eb) return f;
        }
        assert(false);
        return -1;
    };

    // interior gluings: across each half-edge pair, side-1 faces of the two
    // endpoint cubes; corners match by role (edge mid, face centers, center)
    for (int s = 0; s < k; s++)
        for (int e = 0; e < kNE; e++) {
            int va = m.edge_vs[e][0], vb = m.edge_vs[e][1];
            int a1 = axis_of(va, e), a2 = axis_of(vb, e);
            std::array<int, 4> perm{};
            int lo1, hi1, lo2, hi2;
            other_axes(a1, lo1, hi1);
            other_axes(a2, lo2, hi2);
            for (int idx = 0; idx < 4; idx++) {
                if (idx == 0) {
                    perm[idx] = 0;  // edge midpoint
                    continue;
                }
                if (idx == 3) {
                    perm[idx] = 3;  // cell center
                    continue;
                }
                // face-center corner: same dodecahedral face from both ends
                int ax1 = idx == 1 ? lo1 : hi1;
                int f = face_span(va, a1, ax1);
                int target = -1;
                for (int t2 = 0; t2 < 2; t2++) {
                    int ax2 = t2 == 0 ? lo2 : hi2;
                    if (face_span(vb, a2, ax2) == f) target = t2 == 0 ? 1 : 2;
                }
                assert(target > 0);
                perm[idx] = target;
            }
            cx.glue(s * kNV + va, CubeComplex::face_id(a1, 1), s * kNV + vb,
                    CubeComplex::face_id(a2, 1), perm);
        }

    // boundary gluings: pentagon pairings, one per face-class side
    for (int s = 0; s < k; s++)
        for (int f = 0; f < kNF; f++) {
            int s2 = cover.transition(s, f), fhat = m.partner[f];
            if (s > s2 || (s == s2 && f > fhat)) continue;
            for (int i = 0; i < 5; i++) {
                int v = m.face_cycle[f][i];
                int vh = p.vmap[f][v];
                int t = m.third_edge[f][v], th = m.third_edge[fhat][vh];
                int a1 = axis_of(v, t), a2 = axis_of(vh, th);
                int lo1, hi1, lo2, hi2;
                other_axes(a1, lo1, hi1);
                other_axes(a2, lo2, hi2);
                std::array<int, 4> perm{};
                perm[0] = 0;  // dodecahedral vertex
                perm[3] = 3;  // face center
                for (int t1 = 0; t1 < 2; t1++) {
                    int ax1 = t1 == 0 ? lo1 : hi1;
                    int e = m.vertex_edges[v][ax1];  // an edge of f at v
                    int eh = p.emap[f][e];
                    int ax2 = axis_of(vh, eh);
                    perm[t1 == 0 ? 1 : 2] = ax2 == lo2 ? 1 : 2;
                }
                cx.glue(s * kNV + v, CubeComplex::face_id(a1, 0), s2 * kNV + vh,
                        CubeComplex::face_id(a2, 0), perm);
            }
        }

    cx.finish();

    Cubulation cub{std::move(cx), {}, {}};
    cub.corner_role.assign(cub.cx.nverts, -1);
    for (int c = 0; c < k * kNV; c++)
        for (int b = 0; b < 8; b++) {
            int role = __builtin_popcount((unsigned)b);
            int& slot = cub.corner_role[cub.cx.corner_cls[c * 8 + b]];
            assert(slot < 0 || slot == role);
            slot = role;
        }
    cub.disk_of_mid.assign(k * kNV * 3, -1);
    for (int s = 0; s < k; s++)
        for (int v = 0; v < kNV; v++)
            for (int a = 0; a < 3; a++) {
                int e = m.vertex_edges[v][a];
                for (int fi = 0; fi < 3; fi++) {
                    int f = m.vertex_faces[v][fi];
                    if (m.third_edge[f][v] == e) cub.disk_of_mid[(s * kNV + v) * 3 + a] = s * kNF + f;
                }
                assert(cub.disk_of_mid[(s * kNV + v) * 3 + a] >= 0);
            }
    return cub;
}

CubeComplex three_torus_complex() {
    CubeComplex cx(1);
    for (int a = 0; a < 3; a++)
        cx.glue(0, CubeComplex::face_id(a, 0), 0, CubeComplex::face_id(a, 1), {0, 1, 2, 3});
    cx.finish();
    return cx;
}

CubeComplex flipped_torus_complex() {
    CubeComplex cx(1);
    cx.glue(0, CubeComplex::face_id(0, 0), 0, CubeComplex::face_id(0, 1), {1, 0, 3, 2});
    cx.glue(0, CubeComplex::face_id(1, 0), 0, CubeComplex::face_id(1, 1), {0, 1, 2, 3});
    cx.glue(0, CubeComplex::face_id(2, 0), 0, CubeComplex::face_id(2, 1), {0, 1, 2, 3});
    cx.finish();
    return cx;
}

}  // namespace dodec
