#include "lscat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lscat {

SimplicialComplex read_facets(std::istream& in) {
    std::vector<std::vector<Label>> facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<Label> facet;
        Label tok;
        while (ls >> tok) facet.push_back(tok);
        if (facet.empty()) continue;
        auto sorted = facet;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error("line " + std::to_string(lineno) + ": repeated label in facet");
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex read_facets_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return read_facets(in);
}

SimplicialComplex parse_facets(const std::string& text) {
    std::istringstream in(text);
    return read_facets(in);
}

std::string format_facets(const SimplicialComplex& k) {
    std::ostringstream os;
    for (const auto& facet : k.facet_labels()) {
        for (size_t i = 0; i < facet.size(); ++i) {
            if (i) os << ' ';
            os << facet[i];
        }
        os << '\n';
    }
    return os.str();
}

void write_facets_file(const SimplicialComplex& k, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << format_facets(k);
}

} // namespace lscat
