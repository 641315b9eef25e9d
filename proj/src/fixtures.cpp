#include "fixtures.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dodec {

std::string data_dir() {
    if (const char* env = std::getenv("DODEC_DATA")) return env;
    for (const char* cand : {"data", "../data", "../../data"})
        if (std::filesystem::is_directory(cand)) return cand;
    throw std::runtime_error("data directory not found (set DODEC_DATA)");
}

static std::vector<std::string> data_lines(const std::string& filename) {
    std::string path = data_dir() + "/" + filename;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<Word> load_words(const std::string& filename) {
    std::vector<Word> out;
    for (const std::string& l : data_lines(filename)) out.push_back(parse_word(l, kNG));
    return out;
}

std::vector<std::vector<int>> load_orbits(const std::string& filename, int degree) {
    std::vector<std::vector<int>> perms(kNG);
    for (const std::string& l : data_lines(filename)) {
        size_t sp = l.find(' ');
        if (sp != 1) throw std::runtime_error("bad orbit line: " + l);
        size_t g = std::string("uvwxyz").find(l[0]);
        if (g == std::string::npos) throw std::runtime_error("bad orbit line: " + l);
        std::vector<int> p(static_cast<size_t>(degree));
        for (int i = 0; i < degree; i++) p[static_cast<size_t>(i)] = i;
        size_t i = sp;
        while (i < l.size()) {
            if (l[i] != '(') { i++; continue; }
            size_t close = l.find(')', i);
            std::vector<int> cyc;
            std::stringstream ss(l.substr(i + 1, close - i - 1));
            std::string tok;
            while (std::getline(ss, tok, ',')) cyc.push_back(std::stoi(tok) - 1);
            for (size_t k = 0; k < cyc.size(); k++) {
                int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
                if (a < 0 || a >= degree || b < 0) throw std::runtime_error("orbit out of range: " + l);
                p[static_cast<size_t>(a)] = b;
            }
            i = close + 1;
        }
        perms[g] = std::move(p);
    }
    for (const auto& p : perms)
        if (p.empty()) throw std::runtime_error("orbit file missing a generator: " + filename);
    return perms;
}

std::vector<FixtureSurface> load_surfaces(const std::string& filename) {
    std::vector<FixtureSurface> out;
    for (const std::string& l : data_lines(filename)) {
        std::stringstream ss(l);
        FixtureSurface s;
        ss >> s.name;
        std::string tok;
        while (ss >> tok) {
            // (z,h)_12 with an optional stray ']' before the underscore
            if (tok.size() < 7 || tok[0] != '(' || tok[2] != ',' || tok[4] != ')')
                throw std::runtime_error("bad disk token: " + tok);
            DiskLabel d;
            size_t g = std::string("uvwxyz").find(tok[1]);
            if (g == std::string::npos) throw std::runtime_error("bad disk token: " + tok);
            d.letter = static_cast<int>(g);
            if (tok[3] == 'h') d.side = 1;
            else if (tok[3] == 't') d.side = 0;
            else throw std::runtime_error("bad disk token: " + tok);
            size_t i = 5;
            if (tok[i] == ']') { s.typo = true; i++; }
            if (tok[i] != '_') throw std::runtime_error("bad disk token: " + tok);
            d.sheet = std::stoi(tok.substr(i + 1)) - 1;
            s.disks.push_back(d);
        }
        std::sort(s.disks.begin(), s.disks.end());
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<std::string>> load_csv(const std::string& filename) {
    std::vector<std::vector<std::string>> rows;
    for (const std::string& l : data_lines(filename)) {
        std::vector<std::string> cells;
        std::string cur;
        bool quoted = false;
        for (char c : l) {
            if (c == '"') quoted = !quoted;
            else if (c == ',' && !quoted) { cells.push_back(cur); cur.clear(); }
            else cur += c;
        }
        cells.push_back(cur);
        rows.push_back(std::move(cells));
    }
    return rows;
}

std::vector<Table1Row> load_table1() {
    std::vector<Table1Row> out;
    auto rows = load_csv("table1.csv");
    for (size_t i = 1; i < rows.size(); i++) {
        const auto& r = rows[i];
        out.push_back({std::stoi(r[0]), r[1], std::stoi(r[2]), std::stoi(r[3]), r[4], std::stoi(r[5])});
    }
    return out;
}

std::vector<Table2Row> load_table2() {
    std::vector<Table2Row> out;
    auto rows = load_csv("table2.csv");
    for (size_t i = 1; i < rows.size(); i++)
        out.push_back({rows[i][0], std::stoi(rows[i][1]), std::stoi(rows[i][2])});
    return out;
}

std::vector<Table3Row> load_table3() {
    std::vector<Table3Row> out;
    auto rows = load_csv("table3.csv");
    for (size_t i = 1; i < rows.size(); i++)
        out.push_back({std::stoi(rows[i][0]), std::stoi(rows[i][1])});
    return out;
}

std::vector<Table4Row> load_table4() {
    std::vector<Table4Row> out;
    auto rows = load_csv("table4.csv");
    for (size_t i = 1; i < rows.size(); i++) {
        const auto& r = rows[i];
        out.push_back({std::stoi(r[0]), r[1], r[2], std::stol(r[3]), std::stol(r[4]),
                       std::stol(r[5]), std::stol(r[6]), r[7] == "yes", std::stoi(r[8]),
                       r[9] == "yes", r[10]});
    }
    return out;
}

}  // namespace dodec
