#pragma once

#include <functional>
#include <vector>

#include "coset_table.h"
#include "words.h"

namespace dodec {

// All subgroups of index <= max_index as standardized coset tables, one per
// subgroup (not per conjugacy class). Index 1 (the whole group) is included.
std::vector<CosetTable> low_index_subgroups(const Presentation& pres, int max_index);

// One representative per conjugacy class, sorted by (index, canonical form).
// class_sizes, if given, receives the number of subgroups in each class.
std::vector<CosetTable> low_index_classes(const Presentation& pres, int max_index,
                                          std::vector<int>* class_sizes = nullptr);

// Lexicographically least flattening of the table over all base points; two
// tables are conjugate subgroups iff their canonical forms agree.
std::vector<int> conjugacy_canonical_form(const CosetTable& table);

}  // namespace dodec
