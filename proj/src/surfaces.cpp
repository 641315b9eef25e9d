#include "surfaces.h"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "union_find.h"

namespace dodec {

#include "model_tables.inc"

DiskLabel name_disk(int sheet, int face) {
    const Model& m = Model::get();
    int g = m.face_gen[face];
    DiskLabel l;
    l.letter = kDiskNameLetter[g];
    l.side = m.face_side[face] ^ (kSideGlyphFlip[g] ? 1 : 0);
    l.sheet = sheet;
    return l;
}

int disk_of_label(const DiskLabel& l) {
    const Model& m = Model::get();
    for (int g = 0; g < kNG; g++)
        if (kDiskNameLetter[g] == l.letter) {
            int side = l.side ^ (kSideGlyphFlip[g] ? 1 : 0);
            int face = side == 0 ? m.tail_face[g] : m.head_face[g];
            return l.sheet * kNF + face;
        }
    return -1;
}

std::string format_disk(const DiskLabel& l) {
    std::string s = "(";
    s += "uvwxyz"[l.letter];
    s += l.side == 0 ? ",⊗)_" : ",⊙)_";
    s += std::to_string(l.sheet + 1);
    return s;
}

namespace {

// typed vertex / dual-edge encodings (small ids; covers here stay <= 504 sheets)
inline long long typed_id(int type, long long id) {
    assert(id >= 0 && id < (1LL << 28));
    return ((long long)type << 28) | id;
}

struct DualRef {
    long long id;    // typed dual-edge class
    long long from;  // typed vertex: initial (boundary side)
    long long to;    // typed vertex: terminal (center side)
};

}  // namespace

int count_surface_components(const CoverComplex& cover) {
    const Model& m = Model::get();
    const Pairing& p = Pairing::get(cover.space);
    int k = cover.sheets;
    UnionFind du(k * kNF);
    for (int s = 0; s < k; s++)
        for (int j = 0; j < kNF; j++)
            for (int i = 0; i < 5; i++) {
                int e = m.face_edges[j][i];
                int g = m.other_face_at_edge(e, j);
                int s2 = cover.transition(s, g);
                int ehat = p.emap[g][e];
                int fhat = m.other_face_at_edge(ehat, m.partner[g]);
                du.unite(s * kNF + j, s2 * kNF + fhat);
            }
    std::vector<int> cls;
    return du.flatten(cls);
}

SurfaceSet analyze_surfaces(const CoverComplex& cover) {
    const Model& m = Model::get();
    const Pairing& p = Pairing::get(cover.space);
    int k = cover.sheets;

    SurfaceSet out;
    out.space = cover.space;
    out.sheets = k;

    // ---- disk components; pentagon-level corners/sides; orientation parity ----
    UnionFind du(k * kNF), cu(k * kNF * 5), su(k * kNF * 5);
    // disk adjacency with the direction bit of the image side, for orientability
    std::vector<std::vector<std::pair<int, int>>> adj(k * kNF);
    for (int s = 0; s < k; s++)
        for (int j = 0; j < kNF; j++) {
            int d = s * kNF + j;
            for (int i = 0; i < 5; i++) {
                int e = m.face_edges[j][i];
                int g = m.other_face_at_edge(e, j);
                int s2 = cover.transition(s, g);
                int ehat = p.emap[g][e];
                int fhat = m.other_face_at_edge(ehat, m.partner[g]);
                int d2 = s2 * kNF + fhat;
                du.unite(d, d2);
                int va = m.face_cycle[j][i], vb = m.face_cycle[j][(i + 1) % 5];
                int wa = p.vmap[g][va], wb = p.vmap[g][vb];
                int pa = m.vertex_pos[fhat][wa], pb = m.vertex_pos[fhat][wb];
                assert(pa >= 0 && pb >= 0);
                int ihat = -1;
                for (int t = 0; t < 5; t++)
                    if (m.face_edges[fhat][t] == ehat) ihat = t;
                assert(ihat >= 0);
                su.unite(d * 5 + i, d2 * 5 + ihat);
                cu.unite(d * 5 + i, d2 * 5 + pa);
                cu.unite(d * 5 + (i + 1) % 5, d2 * 5 + pb);
                // forward image side (pb follows pa) forces opposite orientations
                int parity = (pb == (pa + 1) % 5) ? 1 : 0;
                adj[d].push_back({d2, parity});
            }
        }

    std::vector<int> raw_comp;
    int ncomp = du.flatten(raw_comp);

    // order components by smallest named disk label
    std::vector<std::pair<DiskLabel, int>> comp_key(ncomp, {DiskLabel{99, 9, 1 << 30}, -1});
    for (int d = 0; d < k * kNF; d++) {
        DiskLabel l = name_disk(d / kNF, d % kNF);
        int c = raw_comp[d];
        if (comp_key[c].second < 0 || l < comp_key[c].first) comp_key[c] = {l, c};
    }
    std::sort(comp_key.begin(), comp_key.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> remap(ncomp);
    for (int i = 0; i < ncomp; i++) remap[comp_key[i].second] = i;

    out.disk_comp.assign(k * kNF, -1);
    out.comps.assign(ncomp, {});
    for (int d = 0; d < k * kNF; d++) {
        int c = remap[raw_comp[d]];
        out.disk_comp[d] = c;
        out.comps[c].disks.push_back(d);
    }
    for (auto& c : out.comps) {
        std::sort(c.disks.begin(), c.disks.end(), [&](int a, int b) {
            return name_disk(a / kNF, a % kNF) < name_disk(b / kNF, b % kNF);
        });
        c.ndisks = (int)c.disks.size();
        std::map<int, int> per_sheet;
        for (int d : c.disks) per_sheet[d / kNF]++;
        c.nsheets = (int)per_sheet.size();
        c.max_per_sheet = 0;
        for (auto& [s, n] : per_sheet) c.max_per_sheet = std::max(c.max_per_sheet, n);
        c.embedded = true;
        c.two_sided = true;  // pairings carry the pentagon side to the pentagon side;
                             // rechecked on mid-squares by the cubulation tests
    }

    // pentagon-level cell counts per component
    std::vector<int> corner_cls, side_cls;
    int ncorner = cu.flatten(corner_cls), nside = su.flatten(side_cls);
    {
        std::vector<char> seenc(ncorner, 0), seens(nside, 0);
        for (int inst = 0; inst < k * kNF * 5; inst++) {
            int c = out.disk_comp[inst / 5];
            if (!seenc[corner_cls[inst]]) {
                seenc[corner_cls[inst]] = 1;
                out.comps[c].nverts++;
            }
            if (!seens[side_cls[inst]]) {
                seens[side_cls[inst]] = 1;
                out.comps[c].nsides++;
            }
        }
    }
    for (auto& c : out.comps) c.chi = c.nverts - c.nsides + c.ndisks;

    // orientability: BFS 2-coloring; adjacent disks must differ iff the image
    // side runs forward
    {
        std::vector<int> color(k * kNF, -1);
        std::vector<char> ok(ncomp, 1);
        for (int d0 = 0; d0 < k * kNF; d0++) {
            if (color[d0] >= 0) continue;
            color[d0] = 0;
            std::vector<int> stack{d0};
            while (!stack.empty()) {
                int d = stack.back();
                stack.pop_back();
                for (auto [d2, parity] : adj[d]) {
                    int want = color[d] ^ parity;
                    if (color[d2] < 0) {
                        color[d2] = want;
                        stack.push_back(d2);
                    } else if (color[d2] != want)
                        ok[out.disk_comp[d]] = 0;
                }
            }
        }
        for (int c = 0; c < ncomp; c++) {
            out.comps[c].orientable = ok[c];
            out.comps[c].genus = ok[c] ? (2 - out.comps[c].chi) / 2 : 2 - out.comps[c].chi;
        }
    }

    // ---- dual-edge classes ----
    // vertex-to-edge-midpoint duals: instance (sheet, v, slot of e at v)
    UnionFind veu(k * kNV * 3);
    for (int s = 0; s < k; s++)
        for (int v = 0; v < kNV; v++)
            for (int t = 0; t < 3; t++) {
                int e = m.vertex_edges[v][t];
                for (int u = 0; u < 2; u++) {
                    int g = m.faces_at_edge[e][u];
                    int s2 = cover.transition(s, g);
                    int v2 = p.vmap[g][v], e2 = p.emap[g][e];
                    int t2 = -1;
                    for (int q = 0; q < 3; q++)
                        if (m.vertex_edges[v2][q] == e2) t2 = q;
                    assert(t2 >= 0);
                    veu.unite((s * kNV + v) * 3 + t, (s2 * kNV + v2) * 3 + t2);
                }
            }
    // edge-midpoint-to-face-center duals: instance (sheet, e, face slot)
    UnionFind efu(k * kNE * 2);
    for (int s = 0; s < k; s++)
        for (int e = 0; e < kNE; e++)
            for (int u = 0; u < 2; u++) {
                int g = m.faces_at_edge[e][u];
                int s2 = cover.transition(s, g);
                int e2 = p.emap[g][e];
                int g2 = m.partner[g];
                int u2 = m.faces_at_edge[e2][0] == g2 ? 0 : 1;
                assert(m.faces_at_edge[e2][u2] == g2);
                efu.unite((s * kNE + e) * 2 + u, (s2 * kNE + e2) * 2 + u2);
            }
    std::vector<int> ve_cls, ef_cls;
    veu.flatten(ve_cls);
    efu.flatten(ef_cls);

    auto ve_dual = [&](int s, int v, int e) {
        int t = -1;
        for (int q = 0; q < 3; q++)
            if (m.vertex_edges[v][q] == e) t = q;
        return typed_id(0, ve_cls[(s * kNV + v) * 3 + t]);
    };
    auto ef_dual = [&](int s, int e, int g) {
        int u = m.faces_at_edge[e][0] == g ? 0 : 1;
        return typed_id(1, ef_cls[(s * kNE + e) * 2 + u]);
    };
    auto fc_dual = [&](int s, int j) { return typed_id(2, s * kNF + j); };
    auto vert_v = [&](int s, int v) { return typed_id(0, cover.vclass[s * kNV + v]); };
    auto vert_e = [&](int s, int e) { return typed_id(1, cover.eclass[s * kNE + e]); };
    auto vert_f = [&](int s, int j) { return typed_id(2, cover.fclass[s * kNF + j]); };
    auto vert_c = [&](int s) { return typed_id(3, s); };

    // duals of each component, deduplicated
    std::vector<std::vector<DualRef>> duals(ncomp);
    {
        std::unordered_set<long long> seen;
        for (int d = 0; d < k * kNF; d++) {
            int s = d / kNF, j = d % kNF, c = out.disk_comp[d];
            auto add = [&](DualRef r) {
                if (seen.insert(r.id).second) duals[c].push_back(r);
            };
            for (int i = 0; i < 5; i++) {
                int v = m.face_cycle[j][i];
                int e3 = m.third_edge[j][v];
                add({ve_dual(s, v, e3), vert_v(s, v), vert_e(s, e3)});
                int e = m.face_edges[j][i];
                int g = m.other_face_at_edge(e, j);
                add({ef_dual(s, e, g), vert_e(s, e), vert_f(s, g)});
            }
            add({fc_dual(s, j), vert_f(s, j), vert_c(s)});
        }
    }

    // near sets and incidence
    for (int c = 0; c < ncomp; c++) {
        std::set<int> nearset;
        int incidence = 0;
        for (const DualRef& r : duals[c])
            if ((r.id >> 28) == 0) {  // vertex-to-edge dual
                nearset.insert((int)(r.from & ((1 << 28) - 1)));
                incidence++;
            }
        out.comps[c].near.assign(nearset.begin(), nearset.end());
        out.comps[c].near_incidence = incidence;
        assert(incidence == out.comps[c].nverts);
    }

    // ---- crossings and embeddedness ----
    std::map<std::pair<int, int>, int> crossing_count;
    for (int s = 0; s < k; s++)
        for (int e = 0; e < kNE; e++) {
            int ca = out.disk_comp[s * kNF + m.faces_at_edge[e][0]];
            int cb = out.disk_comp[s * kNF + m.faces_at_edge[e][1]];
            if (ca == cb)
                out.comps[ca].embedded = false;
            else
                crossing_count[{std::min(ca, cb), std::max(ca, cb)}]++;
        }

    // ---- osculation ----
    // dual pairs lying in a common square never witness osculation
    std::unordered_set<unsigned long long> cosquare;
    auto pair_key = [](long long a, long long b) {
        // typed ids are < 2^30, so the pair packs exactly
        unsigned long long x = (unsigned long long)std::min(a, b), y = (unsigned long long)std::max(a, b);
        return (x << 30) | y;
    };
    for (int s = 0; s < k; s++) {
        for (int v = 0; v < kNV; v++)
            for (int fi = 0; fi < 3; fi++) {  // corner square at (v, face)
                int j = m.vertex_faces[v][fi];
                int pos = m.vertex_pos[j][v];
                int e1 = m.face_edges[j][pos];            // edge leaving v along the cycle
                int e2 = m.face_edges[j][(pos + 4) % 5];  // edge arriving at v
                long long q[4] = {ve_dual(s, v, e1), ve_dual(s, v, e2), ef_dual(s, e1, j),
                                  ef_dual(s, e2, j)};
                for (int a = 0; a < 4; a++)
                    for (int b = a + 1; b < 4; b++) cosquare.insert(pair_key(q[a], q[b]));
            }
        for (int e = 0; e < kNE; e++) {  // interior square across an edge midpoint
            int g1 = m.faces_at_edge[e][0], g2 = m.faces_at_edge[e][1];
            long long q[4] = {ef_dual(s, e, g1), ef_dual(s, e, g2), fc_dual(s, g1), fc_dual(s, g2)};
            for (int a = 0; a < 4; a++)
                for (int b = a + 1; b < 4; b++) cosquare.insert(pair_key(q[a], q[b]));
        }
    }

    // per cubulation vertex: incident duals as (component, dual id, 0 = dual
    // leaves this vertex / 1 = arrives). Self-osculation respects the
    // co-orientation (shared initial or shared terminal); inter-osculation
    // only needs a shared vertex.
    std::unordered_map<long long, std::vector<std::array<long long, 3>>> at_vertex;
    for (int c = 0; c < ncomp; c++)
        for (const DualRef& r : duals[c]) {
            at_vertex[r.from].push_back({(long long)c, r.id, 0});
            at_vertex[r.to].push_back({(long long)c, r.id, 1});
        }
    for (int c = 0; c < ncomp; c++) {
        auto& comp = out.comps[c];
        comp.self_osc_lemma = comp.max_per_sheet >= 2 || (int)comp.near.size() < comp.ndisks;
    }
    std::set<std::pair<int, int>> inter_confirmed;
    for (auto& [vert, lst] : at_vertex) {
        if (lst.size() < 2) continue;
        for (size_t a = 0; a < lst.size(); a++)
            for (size_t b = a + 1; b < lst.size(); b++) {
                int ca = (int)lst[a][0], cb = (int)lst[b][0];
                if (ca == cb && lst[a][2] != lst[b][2]) continue;
                if (lst[a][1] == lst[b][1]) continue;
                if (cosquare.count(pair_key(lst[a][1], lst[b][1]))) continue;
                if (ca == cb)
                    out.comps[ca].self_osc_direct = true;
                else if (crossing_count.count({std::min(ca, cb), std::max(ca, cb)}))
                    inter_confirmed.insert({std::min(ca, cb), std::max(ca, cb)});
            }
    }

    // ---- crossing pair reports ----
    for (auto& [key, cnt] : crossing_count) {
        CrossingPair cp;
        cp.a = key.first;
        cp.b = key.second;
        cp.disk_pairs = cnt;
        const auto& na = out.comps[cp.a].near;
        const auto& nb = out.comps[cp.b].near;
        std::vector<int> un;
        std::set_union(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(un));
        cp.near_union = (int)un.size();
        cp.inter_direct = inter_confirmed.count(key) > 0;
        // counting form: disjoint disks in one sheet, or near-union too small
        bool disjoint_same_sheet = false;
        {
            std::map<int, std::vector<int>> sa, sb;
            for (int d : out.comps[cp.a].disks) sa[d / kNF].push_back(d % kNF);
            for (int d : out.comps[cp.b].disks) sb[d / kNF].push_back(d % kNF);
            for (auto& [s, fa] : sa) {
                auto it = sb.find(s);
                if (it == sb.end()) continue;
                for (int x : fa)
                    for (int y : it->second) {
                        int e = -1;
                        for (int i = 0; i < 5 && e < 0; i++)
                            if (m.other_face_at_edge(m.face_edges[x][i], x) == y)
                                e = m.face_edges[x][i];
                        if (e < 0) disjoint_same_sheet = true;
                    }
            }
        }
        cp.inter_lemma = disjoint_same_sheet ||
                         cp.near_union < out.comps[cp.a].ndisks + out.comps[cp.b].ndisks - cp.disk_pairs;
        out.crossings.push_back(cp);
    }

    out.all_embedded = true;
    out.any_embedded = false;
    for (auto& c : out.comps) {
        out.all_embedded = out.all_embedded && c.embedded;
        out.any_embedded = out.any_embedded || c.embedded;
        out.any_self_osc = out.any_self_osc || c.self_osc_direct;
    }
    for (auto& cp : out.crossings) out.any_inter_osc = out.any_inter_osc || cp.inter_direct;
    bool all_two_sided = true;
    for (auto& c : out.comps) all_two_sided = all_two_sided && c.two_sided;
    out.special = out.all_embedded && all_two_sided && !out.any_self_osc && !out.any_inter_osc;

    // ---- crossing graph coloring ----
    {
        int n = ncomp;
        std::vector<std::vector<char>> adjm(n, std::vector<char>(n, 0));
        for (auto& cp : out.crossings) adjm[cp.a][cp.b] = adjm[cp.b][cp.a] = 1;
        out.coloring.assign(n, -1);
        if (n == 0) {
            out.chromatic = 0;
            out.chromatic_exact = true;
        } else if (n <= 20) {
            out.chromatic_exact = true;
            for (int kcol = 1; kcol <= n; kcol++) {
                std::vector<int> col(n, -1);
                std::function<bool(int)> go = [&](int i) -> bool {
                    if (i == n) return true;
                    for (int c = 0; c < kcol; c++) {
                        bool ok = true;
                        for (int j2 = 0; j2 < i && ok; j2++)
                            if (adjm[i][j2] && col[j2] == c) ok = false;
                        if (!ok) continue;
                        col[i] = c;
                        if (go(i + 1)) return true;
                        col[i] = -1;
                    }
                    return false;
                };
                if (go(0)) {
                    out.chromatic = kcol;
                    out.coloring = col;
                    break;
                }
            }
        } else {
            // greedy on degree order; upper bound only
            out.chromatic_exact = false;
            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::vector<int> deg(n, 0);
            for (auto& cp : out.crossings) deg[cp.a]++, deg[cp.b]++;
            std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
            int used = 0;
            for (int i : order) {
                std::vector<char> busy(n + 1, 0);
                for (int j2 = 0; j2 < n; j2++)
                    if (adjm[i][j2] && out.coloring[j2] >= 0) busy[out.coloring[j2]] = 1;
                int c = 0;
                while (busy[c]) c++;
                out.coloring[i] = c;
                used = std::max(used, c + 1);
            }
            out.chromatic = used;
        }
    }
    return out;
}

}  // namespace dodec
