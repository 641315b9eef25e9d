#include "coset_table.h"

#include <algorithm>
#include <cstring>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace dodec {

int CosetTable::apply_word(int coset, const Word& w) const {
    int c = coset;
    for (int l : w) {
        c = apply(c, l);
        if (c < 0) return -1;
    }
    return c;
}

bool CosetTable::complete() const {
    for (int v : tab)
        if (v < 0) return false;
    return true;
}

bool CosetTable::satisfies(const Word& w) const {
    for (int c = 0; c < ncosets; ++c)
        if (apply_word(c, w) != c) return false;
    return true;
}

bool CosetTable::satisfies_all(const std::vector<Word>& rels) const {
    for (const Word& w : rels)
        if (!satisfies(w)) return false;
    return true;
}

bool CosetTable::transitive() const {
    std::vector<char> seen(static_cast<size_t>(ncosets), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int col = 0; col < 2 * ngens; ++col) {
            int d = at(c, col);
            if (d >= 0 && !seen[d]) {
                seen[d] = 1;
                ++count;
                stack.push_back(d);
            }
        }
    }
    return count == ncosets;
}

void CosetTable::standardize() {
    std::vector<int> to_new(static_cast<size_t>(ncosets), -1);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(ncosets));
    to_new[0] = 0;
    order.push_back(0);
    for (size_t head = 0; head < order.size(); ++head) {
        int c = order[head];
        for (int col = 0; col < 2 * ngens; ++col) {
            int d = at(c, col);
            if (d >= 0 && to_new[d] < 0) {
                to_new[d] = static_cast<int>(order.size());
                order.push_back(d);
            }
        }
    }
    if (order.size() != static_cast<size_t>(ncosets))
        throw std::logic_error("standardize requires a transitive table");
    std::vector<int> out(tab.size(), -1);
    for (int c = 0; c < ncosets; ++c)
        for (int col = 0; col < 2 * ngens; ++col) {
            int d = at(c, col);
            out[static_cast<size_t>(to_new[c]) * (2 * ngens) + col] = d < 0 ? -1 : to_new[d];
        }
    tab = std::move(out);
}

std::vector<std::vector<int>> CosetTable::generator_permutations() const {
    std::vector<std::vector<int>> perms(static_cast<size_t>(ngens),
                                        std::vector<int>(static_cast<size_t>(ncosets)));
    for (int g = 0; g < ngens; ++g)
        for (int c = 0; c < ncosets; ++c) {
            int d = at(c, 2 * g);
            if (d < 0) throw std::logic_error("incomplete table has no permutations");
            perms[static_cast<size_t>(g)][static_cast<size_t>(c)] = d;
        }
    return perms;
}

CosetTable CosetTable::from_permutations(const std::vector<std::vector<int>>& perms) {
    CosetTable t;
    t.ngens = static_cast<int>(perms.size());
    t.ncosets = static_cast<int>(perms.at(0).size());
    t.tab.assign(static_cast<size_t>(t.ncosets) * 2 * t.ngens, -1);
    for (int g = 0; g < t.ngens; ++g) {
        const std::vector<int>& p = perms[static_cast<size_t>(g)];
        if (static_cast<int>(p.size()) != t.ncosets)
            throw std::invalid_argument("permutation degree mismatch");
        for (int c = 0; c < t.ncosets; ++c) {
            t.at(c, 2 * g) = p[static_cast<size_t>(c)];
            t.at(p[static_cast<size_t>(c)], 2 * g + 1) = c;
        }
    }
    for (int v : t.tab)
        if (v < 0) throw std::invalid_argument("not a permutation");
    return t;
}

namespace {

// HLT enumeration state. Dead cosets stay in the table; rep() resolves them.
struct Enumerator {
    int ncols;
    int max_cosets;
    std::vector<int> tab;
    std::vector<int> parent;
    std::deque<std::pair<int, int>> pending;
    int ncosets = 0;
    int nalive = 0;

    Enumerator(int ngens, int maxc) : ncols(2 * ngens), max_cosets(maxc) {}

    int& at(int c, int col) { return tab[static_cast<size_t>(c) * ncols + col]; }
    static int inv_col(int col) { return col ^ 1; }
    static int col_of(int l) { return CosetTable::column(l); }

    int rep(int c) {
        while (parent[c] != c) {
            parent[c] = parent[parent[c]];
            c = parent[c];
        }
        return c;
    }

    int lookup(int c, int col) {
        int d = at(c, col);
        return d < 0 ? -1 : rep(d);
    }

    bool new_coset(int& out) {
        if (ncosets >= max_cosets) return false;
        tab.insert(tab.end(), static_cast<size_t>(ncols), -1);
        parent.push_back(ncosets);
        out = ncosets++;
        ++nalive;
        return true;
    }

    void set_edge(int c, int col, int d) {
        at(c, col) = d;
        int back = lookup(d, inv_col(col));
        if (back < 0)
            at(d, inv_col(col)) = c;
        else if (back != c)
            pending.emplace_back(back, c);
    }

    void coincide(int a, int b) {
        pending.emplace_back(a, b);
        while (!pending.empty()) {
            auto [x, y] = pending.front();
            pending.pop_front();
            x = rep(x);
            y = rep(y);
            if (x == y) continue;
            if (y < x) std::swap(x, y);
            parent[y] = x;
            --nalive;
            for (int col = 0; col < ncols; ++col) {
                int d = at(y, col);
                if (d < 0) continue;
                int dr = rep(d);
                int e = lookup(x, col);
                if (e < 0)
                    set_edge(x, col, dr);
                else if (e != dr)
                    pending.emplace_back(e, dr);
            }
        }
    }

    // Scan word w from coset c, defining cosets as needed (HLT style).
    bool scan_and_fill(int c, const Word& w) {
        int f = c, i = 0;
        int b = c, j = static_cast<int>(w.size()) - 1;
        while (true) {
            while (i <= j) {
                int d = lookup(f, col_of(w[static_cast<size_t>(i)]));
                if (d < 0) break;
                f = d;
                ++i;
            }
            if (i > j) {
                if (f != b) coincide(f, b);
                return true;
            }
            while (j >= i) {
                int d = lookup(b, col_of(-w[static_cast<size_t>(j)]));
                if (d < 0) break;
                b = d;
                --j;
            }
            if (j < i) {
                coincide(f, b);
                return true;
            }
            if (i == j) {
                set_edge(f, col_of(w[static_cast<size_t>(i)]), b);
                return true;
            }
            int n;
            if (!new_coset(n)) return false;
            set_edge(f, col_of(w[static_cast<size_t>(i)]), n);
        }
    }
};

}  // namespace

std::optional<CosetTable> todd_coxeter(const Presentation& pres,
                                       const std::vector<Word>& subgroup_gens,
                                       int max_cosets) {
    std::vector<Word> rels;
    rels.reserve(pres.relators.size());
    for (const Word& r : pres.relators) rels.push_back(cyclic_reduce(r));

    Enumerator e(pres.ngens, max_cosets);
    int first;
    e.new_coset(first);
    for (const Word& w : subgroup_gens)
        if (!e.scan_and_fill(e.rep(0), free_reduce(w))) return std::nullopt;

    for (int c = 0; c < e.ncosets; ++c) {
        if (e.rep(c) != c) continue;
        for (const Word& r : rels) {
            if (!e.scan_and_fill(c, r)) return std::nullopt;
            if (e.rep(c) != c) break;
        }
        if (e.rep(c) != c) continue;
        for (int col = 0; col < e.ncols; ++col) {
            if (e.rep(c) != c) break;
            if (e.lookup(c, col) < 0) {
                int n;
                if (!e.new_coset(n)) return std::nullopt;
                e.set_edge(c, col, n);
            }
        }
    }

    // compress live cosets
    std::vector<int> to_new(static_cast<size_t>(e.ncosets), -1);
    int k = 0;
    for (int c = 0; c < e.ncosets; ++c)
        if (e.rep(c) == c) to_new[c] = k++;
    CosetTable t;
    t.ngens = pres.ngens;
    t.ncosets = k;
    t.tab.assign(static_cast<size_t>(k) * 2 * pres.ngens, -1);
    for (int c = 0; c < e.ncosets; ++c) {
        if (e.rep(c) != c) continue;
        for (int col = 0; col < e.ncols; ++col) {
            int d = e.lookup(c, col);
            t.at(to_new[c], col) = d < 0 ? -1 : to_new[d];
        }
    }
    t.standardize();
    return t;
}

namespace {

struct PermHash {
    size_t operator()(const std::vector<int>& p) const {
        size_t h = 1469598103934665603ull;
        for (int v : p) {
            h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// BFS closure of the generated permutation group; returns elements in
// discovery order (identity first), or empty if limit exceeded.
std::vector<std::vector<int>> close_group(const std::vector<std::vector<int>>& gens, long limit) {
    size_t n = gens.at(0).size();
    std::vector<int> id(n);
    for (size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
    std::vector<std::vector<int>> elems = {id};
    std::unordered_map<std::vector<int>, int, PermHash> index;
    index.emplace(id, 0);
    for (size_t head = 0; head < elems.size(); ++head) {
        std::vector<int> cur = elems[head];
        for (const std::vector<int>& g : gens) {
            std::vector<int> next(n);
            for (size_t i = 0; i < n; ++i) next[i] = g[static_cast<size_t>(cur[i])];
            if (index.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (static_cast<long>(elems.size()) > limit) return {};
            }
        }
    }
    return elems;
}

}  // namespace

long permutation_image_order(const CosetTable& table, long limit) {
    std::vector<std::vector<int>> elems = close_group(table.generator_permutations(), limit);
    return elems.empty() ? -1 : static_cast<long>(elems.size());
}

std::optional<CosetTable> normal_core(const CosetTable& table, long image_order_limit) {
    std::vector<std::vector<int>> gens = table.generator_permutations();
    std::vector<std::vector<int>> elems = close_group(gens, image_order_limit);
    if (elems.empty()) return std::nullopt;
    std::unordered_map<std::vector<int>, int, PermHash> index;
    for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));

    // cosets of the core are the image elements, generators act by right
    // multiplication
    size_t n = elems[0].size();
    CosetTable t;
    t.ngens = table.ngens;
    t.ncosets = static_cast<int>(elems.size());
    t.tab.assign(elems.size() * 2 * static_cast<size_t>(table.ngens), -1);
    for (size_t e = 0; e < elems.size(); ++e)
        for (int g = 0; g < table.ngens; ++g) {
            std::vector<int> prod(n);
            for (size_t i = 0; i < n; ++i)
                prod[i] = gens[static_cast<size_t>(g)][static_cast<size_t>(elems[e][i])];
            int j = index.at(prod);
            t.at(static_cast<int>(e), 2 * g) = j;
            t.at(j, 2 * g + 1) = static_cast<int>(e);
        }
    t.standardize();
    return t;
}

}  // namespace dodec
