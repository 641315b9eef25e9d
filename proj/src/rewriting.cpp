#include "rewriting.h"

#include <stdexcept>

namespace dodec {

SchreierSystem::SchreierSystem(const CosetTable& table)
    : ncosets(table.ncosets), ngens(table.ngens) {
    gen_index.assign(static_cast<size_t>(ncosets) * ngens, 0);
    std::vector<char> visited(static_cast<size_t>(ncosets), 0);
    std::vector<int> queue = {0};
    visited[0] = 1;
    // BFS; tree edges are marked -1 in gen_index
    for (size_t head = 0; head < queue.size(); ++head) {
        int c = queue[head];
        for (int g = 0; g < ngens; ++g) {
            int fwd = table.at(c, 2 * g);
            if (fwd >= 0 && !visited[static_cast<size_t>(fwd)]) {
                visited[static_cast<size_t>(fwd)] = 1;
                gen_index[static_cast<size_t>(c) * ngens + g] = -1;
                queue.push_back(fwd);
            }
            int bwd = table.at(c, 2 * g + 1);
            if (bwd >= 0 && !visited[static_cast<size_t>(bwd)]) {
                visited[static_cast<size_t>(bwd)] = 1;
                gen_index[static_cast<size_t>(bwd) * ngens + g] = -1;
                queue.push_back(bwd);
            }
        }
    }
    if (queue.size() != static_cast<size_t>(ncosets))
        throw std::invalid_argument("rewriting requires a transitive table");
    for (int& v : gen_index)
        if (v == 0) v = nschreier++;
        else v = -1;
}

std::vector<long long> SchreierSystem::rewrite_row(const CosetTable& table, int c,
                                                   const Word& w) const {
    std::vector<long long> row(static_cast<size_t>(nschreier), 0);
    int pos = c;
    for (int l : w) {
        int g = letter_gen(l);
        if (l > 0) {
            int col = index(pos, g);
            if (col >= 0) ++row[static_cast<size_t>(col)];
            pos = table.at(pos, 2 * g);
        } else {
            int next = table.at(pos, 2 * g + 1);
            int col = index(next, g);
            if (col >= 0) --row[static_cast<size_t>(col)];
            pos = next;
        }
        if (pos < 0) throw std::invalid_argument("incomplete table in rewriting");
    }
    if (pos != c) throw std::invalid_argument("word is not a relation of the action");
    return row;
}

IntMatrix relation_matrix(const CosetTable& table, const std::vector<Word>& relators) {
    SchreierSystem sys(table);
    IntMatrix m = IntMatrix::zero(table.ncosets * static_cast<int>(relators.size()), sys.nschreier);
    int r = 0;
    for (const Word& w : relators)
        for (int c = 0; c < table.ncosets; ++c, ++r) {
            std::vector<long long> row = sys.rewrite_row(table, c, w);
            for (int j = 0; j < sys.nschreier; ++j) m.at(r, j) = row[static_cast<size_t>(j)];
        }
    return m;
}

AbelianGroup cover_homology(const CosetTable& table, const std::vector<Word>& relators) {
    return cokernel(relation_matrix(table, relators));
}

}  // namespace dodec
