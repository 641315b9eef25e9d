#include "abelian.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dodec {

static std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::map<long long, int> AbelianGroup::primary_decomposition() const {
    std::map<long long, int> parts;
    for (long long d : torsion)
        for (auto [p, e] : factorize(d)) {
            long long q = 1;
            for (int i = 0; i < e; ++i) q *= p;
            ++parts[q];
        }
    return parts;
}

std::string AbelianGroup::str() const {
    std::vector<std::string> terms;
    if (rank == 1)
        terms.push_back("Z");
    else if (rank > 1)
        terms.push_back("Z^" + std::to_string(rank));
    // order primary parts by prime, then by the power
    std::map<long long, int> parts = primary_decomposition();
    std::vector<std::pair<long long, long long>> keyed;  // (prime, prime power)
    for (auto& [q, mult] : parts) keyed.emplace_back(factorize(q)[0].first, q);
    std::sort(keyed.begin(), keyed.end());
    for (auto& [p, q] : keyed) {
        int mult = parts[q];
        std::string t = "Z_" + std::to_string(q);
        if (mult > 1) t += "^" + std::to_string(mult);
        terms.push_back(t);
    }
    if (terms.empty()) return "0";
    std::string s = terms[0];
    for (size_t i = 1; i < terms.size(); ++i) s += " + " + terms[i];
    return s;
}

AbelianGroup AbelianGroup::from_primary(int rank, const std::map<long long, int>& parts) {
    // group prime powers by prime, sorted descending within each prime
    std::map<long long, std::vector<long long>> by_prime;
    for (auto& [q, mult] : parts) {
        long long p = factorize(q)[0].first;
        for (int i = 0; i < mult; ++i) by_prime[p].push_back(q);
    }
    size_t slots = 0;
    for (auto& [p, qs] : by_prime) {
        std::sort(qs.rbegin(), qs.rend());
        slots = std::max(slots, qs.size());
    }
    // divisor chain: largest divisor collects the largest power of each prime
    std::vector<long long> chain(slots, 1);
    for (auto& [p, qs] : by_prime)
        for (size_t i = 0; i < qs.size(); ++i) chain[slots - 1 - i] *= qs[i];
    AbelianGroup g;
    g.rank = rank;
    g.torsion = std::move(chain);
    return g;
}

AbelianGroup AbelianGroup::parse(const std::string& text) {
    int rank = 0;
    std::map<long long, int> parts;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '+'))
            ++i;
    };
    auto read_int = [&]() -> long long {
        long long v = 0;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("bad abelian group: " + text);
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            v = v * 10 + (text[i++] - '0');
        return v;
    };
    skip_ws();
    if (i < text.size() && text[i] == '0') return {};
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != 'Z') throw std::invalid_argument("bad abelian group: " + text);
        ++i;
        long long modulus = 0;
        if (i < text.size() && text[i] == '_') {
            ++i;
            modulus = read_int();
        }
        long long exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            exp = read_int();
        }
        if (modulus == 0)
            rank += static_cast<int>(exp);
        else
            for (auto [p, e] : factorize(modulus)) {
                long long q = 1;
                for (int k = 0; k < e; ++k) q *= p;
                parts[q] += static_cast<int>(exp);
            }
        skip_ws();
    }
    return from_primary(rank, parts);
}

}  // namespace dodec
