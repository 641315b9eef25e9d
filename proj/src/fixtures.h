#pragma once
// Bundled reference data: printed relators, subgroup generator word lists,
// gluing-orbit permutations, disk listings of the canonical surfaces, and the
// expected result tables. Plain-text files under data/.
#include "surfaces.h"
#include "words.h"

#include <string>
#include <vector>

namespace dodec {

// Directory holding the bundled data files. Honours DODEC_DATA, then tries
// ./data and ../data. Throws if none exists.
std::string data_dir();

std::vector<Word> load_words(const std::string& filename);

// One permutation per generator (0-based images), from lines "u (1,2,3)(...)".
// Sheets in the files are 1-based; fixed points may be omitted from cycles.
std::vector<std::vector<int>> load_orbits(const std::string& filename, int degree);

struct FixtureSurface {
    std::string name;             // "S1"
    std::vector<DiskLabel> disks;  // sorted
    bool typo = false;             // listing carried a stray bracket
};
std::vector<FixtureSurface> load_surfaces(const std::string& filename);

// CSV helpers (double quotes shield separators inside a cell)
std::vector<std::vector<std::string>> load_csv(const std::string& filename);

struct Table1Row {
    int degree;
    std::string h1;
    int beta, comps;
    std::string embedded;  // no | one | all
    int covers;
};
std::vector<Table1Row> load_table1();

struct Table2Row {
    std::string h1;
    int comps, covers;
};
std::vector<Table2Row> load_table2();

struct Table3Row {
    int comps, covers;
};
std::vector<Table3Row> load_table3();

struct Table4Row {
    int degree;
    std::string toptype, subgroup;
    long v, e, f, c;
    bool embedded;
    int comps;
    bool regular;
    std::string deck;
};
std::vector<Table4Row> load_table4();

}  // namespace dodec
