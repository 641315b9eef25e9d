#pragma once
// Shared helpers for tests: disk-set views of analyzed surfaces and
// comparison of surface listings up to a relabeling of sheets that commutes
// with the two coset actions.
#include <set>
#include <vector>

#include "cover.h"
#include "fixtures.h"
#include "surfaces.h"

namespace dodec {

inline std::set<DiskLabel> disk_set(const SurfaceComponent& c) {
    std::set<DiskLabel> out;
    for (int d : c.disks) out.insert(name_disk(d / kNF, d % kNF));
    return out;
}

inline std::set<std::set<DiskLabel>> surface_family(const SurfaceSet& s) {
    std::set<std::set<DiskLabel>> out;
    for (const SurfaceComponent& c : s.comps) out.insert(disk_set(c));
    return out;
}

inline std::set<std::set<DiskLabel>> fixture_family(const std::vector<FixtureSurface>& fs) {
    std::set<std::set<DiskLabel>> out;
    for (const FixtureSurface& f : fs) out.insert(std::set<DiskLabel>(f.disks.begin(), f.disks.end()));
    return out;
}

// Extend sheet0 -> s0 to a bijection commuting with the generator actions.
inline bool extend_relabeling(const CosetTable& a, const CosetTable& b, int s0,
                              std::vector<int>& sigma) {
    sigma.assign(static_cast<size_t>(a.ncosets), -1);
    std::vector<int> order;
    sigma[0] = s0;
    order.push_back(0);
    for (size_t q = 0; q < order.size(); q++) {
        int i = order[q];
        for (int col = 0; col < 2 * a.ngens; col++) {
            int j = a.at(i, col);
            int k = b.at(sigma[static_cast<size_t>(i)], col);
            if (sigma[static_cast<size_t>(j)] == -1) {
                sigma[static_cast<size_t>(j)] = k;
                order.push_back(j);
            } else if (sigma[static_cast<size_t>(j)] != k) {
                return false;
            }
        }
    }
    std::vector<char> hit(static_cast<size_t>(a.ncosets), 0);
    for (int v : sigma) {
        if (v < 0 || hit[static_cast<size_t>(v)]) return false;
        hit[static_cast<size_t>(v)] = 1;
    }
    return true;
}

// True if some relabeling of sheets carries the computed surface family onto
// the expected one. Both tables must present the same covering space.
inline bool surfaces_match_up_to_relabeling(const CosetTable& got_table, const SurfaceSet& got,
                                            const CosetTable& want_table,
                                            const std::vector<FixtureSurface>& want) {
    std::set<std::set<DiskLabel>> want_family = fixture_family(want);
    for (int s0 = 0; s0 < want_table.ncosets; s0++) {
        std::vector<int> sigma;
        if (!extend_relabeling(got_table, want_table, s0, sigma)) continue;
        std::set<std::set<DiskLabel>> mapped;
        for (const SurfaceComponent& c : got.comps) {
            std::set<DiskLabel> m;
            for (int d : c.disks) {
                DiskLabel l = name_disk(d / kNF, d % kNF);
                l.sheet = sigma[static_cast<size_t>(l.sheet)];
                m.insert(l);
            }
            mapped.insert(std::move(m));
        }
        if (mapped == want_family) return true;
    }
    return false;
}

}  // namespace dodec
