#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dodec {

// Finitely generated abelian group: free rank plus torsion divisor chain
// d1 | d2 | ... | dk with every di > 1.
struct AbelianGroup {
    int rank = 0;
    std::vector<long long> torsion;

    bool operator==(const AbelianGroup&) const = default;
    bool trivial() const { return rank == 0 && torsion.empty(); }

    // prime power -> multiplicity, e.g. Z_2^2 + Z_5^3 -> {{2,2},{5,3}} keyed
    // by the prime power itself (4 and 25 would be separate keys)
    std::map<long long, int> primary_decomposition() const;

    // "Z^5 + Z_2^2 + Z_5^3"; "0" for the trivial group
    std::string str() const;

    // parses the str() format (also accepts "Z", "Z_6", exponents in any order)
    static AbelianGroup parse(const std::string& text);

    // rebuild the divisor chain from primary parts (used by parse)
    static AbelianGroup from_primary(int rank, const std::map<long long, int>& parts);

    int betti() const { return rank; }
};

}  // namespace dodec
