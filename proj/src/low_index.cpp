#include "low_index.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dodec {

namespace {

// Backtracking search over partial standardized coset tables (Sims). Slots
// are filled first-undefined-first and new cosets are numbered sequentially,
// so every complete table is standardized and every subgroup appears once.
struct Search {
    int ngens, ncols, max_index;
    std::vector<Word> rels;
    std::vector<int> tab;  // max_index rows, ncols columns
    int ncosets = 1;
    std::vector<CosetTable> out;

    Search(const Presentation& pres, int max_idx)
        : ngens(pres.ngens), ncols(2 * pres.ngens), max_index(max_idx) {
        for (const Word& r : pres.relators) {
            Word c = cyclic_reduce(r);
            if (!c.empty()) rels.push_back(c);
        }
        tab.assign(static_cast<size_t>(max_index) * ncols, -1);
    }

    int& at(int c, int col) { return tab[static_cast<size_t>(c) * ncols + col]; }
    int get(int c, int col) const { return tab[static_cast<size_t>(c) * ncols + col]; }

    struct Edge {
        int c, col;
    };

    // Set edge c --col--> d plus its reverse; record what was written so the
    // caller can undo. Fails on conflict.
    bool set_edge(int c, int col, int d, std::vector<Edge>& log) {
        int cur = get(c, col);
        if (cur >= 0) return cur == d;
        int back = get(d, col ^ 1);
        if (back >= 0 && back != c) return false;
        at(c, col) = d;
        log.push_back({c, col});
        if (back < 0) {
            at(d, col ^ 1) = c;
            log.push_back({d, col ^ 1});
        }
        return true;
    }

    // Scan relator w at coset c; deduce a forced edge when exactly one slot
    // is missing. Returns false on contradiction.
    bool scan(int c, const Word& w, std::vector<Edge>& log, bool& deduced) {
        int f = c;
        size_t i = 0;
        size_t n = w.size();
        while (i < n) {
            int d = get(f, CosetTable::column(w[i]));
            if (d < 0) break;
            f = d;
            ++i;
        }
        if (i == n) {
            deduced = false;
            return f == c;
        }
        int b = c;
        size_t j = n;
        while (j > i + 1) {
            int d = get(b, CosetTable::column(-w[j - 1]));
            if (d < 0) break;
            b = d;
            --j;
        }
        if (j > i + 1) {
            deduced = false;
            return true;  // more than one gap, nothing to conclude
        }
        deduced = true;
        return set_edge(f, CosetTable::column(w[i]), b, log);
    }

    // Re-scan relators everywhere until no deduction fires.
    bool propagate(std::vector<Edge>& log) {
        bool again = true;
        while (again) {
            again = false;
            for (int c = 0; c < ncosets; ++c)
                for (const Word& r : rels) {
                    bool deduced;
                    if (!scan(c, r, log, deduced)) return false;
                    if (deduced) again = true;
                }
        }
        return true;
    }

    void undo(std::vector<Edge>& log, size_t mark, int old_ncosets) {
        while (log.size() > mark) {
            Edge e = log.back();
            log.pop_back();
            at(e.c, e.col) = -1;
        }
        ncosets = old_ncosets;
    }

    bool find_slot(int& c, int& col) const {
        for (int cc = 0; cc < ncosets; ++cc)
            for (int k = 0; k < ncols; ++k)
                if (get(cc, k) < 0) {
                    c = cc;
                    col = k;
                    return true;
                }
        return false;
    }

    void emit() {
        CosetTable t;
        t.ngens = ngens;
        t.ncosets = ncosets;
        t.tab.assign(tab.begin(), tab.begin() + static_cast<long>(ncosets) * ncols);
        out.push_back(std::move(t));
    }

    void dfs(std::vector<Edge>& log) {
        int c, col;
        if (!find_slot(c, col)) {
            emit();
            return;
        }
        for (int d = 0; d <= ncosets; ++d) {
            bool fresh = d == ncosets;
            if (fresh && ncosets >= max_index) break;
            if (!fresh && get(d, col ^ 1) >= 0) continue;
            size_t mark = log.size();
            int old_n = ncosets;
            if (fresh) ++ncosets;
            if (set_edge(c, col, d, log) && propagate(log)) dfs(log);
            undo(log, mark, old_n);
        }
    }
};

}  // namespace

std::vector<CosetTable> low_index_subgroups(const Presentation& pres, int max_index) {
    if (max_index < 1) throw std::invalid_argument("max_index must be positive");
    Search s(pres, max_index);
    std::vector<Search::Edge> log;
    s.dfs(log);
    return std::move(s.out);
}

std::vector<int> conjugacy_canonical_form(const CosetTable& table) {
    // standardize from every base point, take the least flattening
    int n = table.ncosets;
    int ncols = 2 * table.ngens;
    std::vector<int> best;
    std::vector<int> to_new(static_cast<size_t>(n));
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    for (int base = 0; base < n; ++base) {
        std::fill(to_new.begin(), to_new.end(), -1);
        order.clear();
        to_new[static_cast<size_t>(base)] = 0;
        order.push_back(base);
        for (size_t head = 0; head < order.size(); ++head)
            for (int col = 0; col < ncols; ++col) {
                int d = table.at(order[head], col);
                if (to_new[static_cast<size_t>(d)] < 0) {
                    to_new[static_cast<size_t>(d)] = static_cast<int>(order.size());
                    order.push_back(d);
                }
            }
        std::vector<int> flat(static_cast<size_t>(n) * ncols);
        for (int c = 0; c < n; ++c)
            for (int col = 0; col < ncols; ++col)
                flat[static_cast<size_t>(to_new[static_cast<size_t>(c)]) * ncols + col] =
                    to_new[static_cast<size_t>(table.at(c, col))];
        if (best.empty() || flat < best) best = std::move(flat);
    }
    return best;
}

std::vector<CosetTable> low_index_classes(const Presentation& pres, int max_index,
                                          std::vector<int>* class_sizes) {
    std::vector<CosetTable> all = low_index_subgroups(pres, max_index);
    std::map<std::pair<int, std::vector<int>>, std::pair<CosetTable, int>> classes;
    for (CosetTable& t : all) {
        std::pair<int, std::vector<int>> key(t.ncosets, conjugacy_canonical_form(t));
        auto it = classes.find(key);
        if (it == classes.end())
            classes.emplace(std::move(key), std::make_pair(std::move(t), 1));
        else
            ++it->second.second;
    }
    std::vector<CosetTable> reps;
    if (class_sizes) class_sizes->clear();
    for (auto& [key, val] : classes) {
        reps.push_back(std::move(val.first));
        if (class_sizes) class_sizes->push_back(val.second);
    }
    return reps;
}

}  // namespace dodec
