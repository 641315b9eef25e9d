#include "words.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dodec {

Word parse_word(const std::string& text, int ngens, const std::string& alphabet) {
    Word out;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
            ++i;
            continue;
        }
        size_t gen = alphabet.find(c);
        if (gen == std::string::npos || static_cast<int>(gen) >= ngens)
            throw std::invalid_argument("unknown generator '" + std::string(1, c) + "' in " + text);
        ++i;
        bool inv = false;
        long exp = 1;
        if (i < text.size() && (text[i] == '\'' || text[i] == '-')) {
            inv = true;
            ++i;
            if (i < text.size() && text[i] == '1') ++i;  // tolerate "u-1"
        } else if (i < text.size() && text[i] == '^') {
            ++i;
            bool neg = false;
            if (i < text.size() && text[i] == '-') { neg = true; ++i; }
            long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            if (v == 0) throw std::invalid_argument("bad exponent in " + text);
            exp = v;
            inv = neg;
        } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            exp = v;
        }
        for (long k = 0; k < exp; ++k) out.push_back(letter(static_cast<int>(gen), inv));
    }
    return out;
}

std::string format_word(const Word& w, const std::string& alphabet) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        int g = letter_gen(w[i]);
        s += alphabet.at(static_cast<size_t>(g));
        if (w[i] < 0) s += '\'';
    }
    return s;
}

Word free_reduce(const Word& w) {
    Word out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    size_t a = 0, b = r.size();
    while (b - a >= 2 && r[a] == -r[b - 1]) {
        ++a;
        --b;
    }
    return Word(r.begin() + static_cast<long>(a), r.begin() + static_cast<long>(b));
}

Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

static Word min_rotation(const Word& w) {
    Word best = w;
    Word rot = w;
    for (size_t i = 1; i < w.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

Word canonical_relator(const Word& w) {
    Word r = cyclic_reduce(w);
    if (r.empty()) return r;
    Word a = min_rotation(r);
    Word b = min_rotation(inverse_word(r));
    return a < b ? a : b;
}

std::vector<Word> canonical_relator_set(std::vector<Word> relators) {
    for (Word& w : relators) w = canonical_relator(w);
    std::sort(relators.begin(), relators.end());
    return relators;
}

bool same_relators(const Presentation& a, const Presentation& b) {
    return a.ngens == b.ngens &&
           canonical_relator_set(a.relators) == canonical_relator_set(b.relators);
}

}  // namespace dodec
