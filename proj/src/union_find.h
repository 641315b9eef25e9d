#pragma once

#include <numeric>
#include <vector>

namespace dodec {

struct UnionFind {
    std::vector<int> par;
    explicit UnionFind(int n) : par(n) { std::iota(par.begin(), par.end(), 0); }
    int find(int a) {
        while (par[a] != a) a = par[a] = par[par[a]];
        return a;
    }
    void unite(int a, int b) { par[find(a)] = find(b); }
    // Relabel classes 0..n-1 in order of smallest member; fills class id per
    // element, returns the class count.
    int flatten(std::vector<int>& out) {
        int n = (int)par.size();
        out.assign(n, -1);
        int next = 0;
        for (int i = 0; i < n; i++)
            if (out[find(i)] == -1 && find(i) == i) out[i] = -2;
        for (int i = 0; i < n; i++) {
            int r = find(i);
            if (out[r] == -2) out[r] = next++;
        }
        for (int i = 0; i < n; i++) out[i] = out[find(i)];
        return next;
    }
};

}  // namespace dodec
