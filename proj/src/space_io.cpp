#include "bmetric/space_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bmetric {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream stream(line);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

// Next non-blank line; returns false at EOF.
bool next_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!tokenize(line).empty()) return true;
    }
    return false;
}

}  // namespace

ParsedSpace parse_space(std::istream& in) {
    std::string line;
    int lineno = 0;

    if (!next_line(in, line, lineno)) throw ParseError(lineno, "expected 'points: <n>'");
    auto tokens = tokenize(line);
    if (tokens.size() != 2 || tokens[0] != "points:") {
        throw ParseError(lineno, "expected 'points: <n>'");
    }
    int n = 0;
    try {
        n = std::stoi(tokens[1]);
    } catch (const std::exception&) {
        throw ParseError(lineno, "point count is not an integer: " + tokens[1]);
    }
    if (n < 1) throw ParseError(lineno, "point count must be >= 1");

    if (!next_line(in, line, lineno)) throw ParseError(lineno, "expected 'labels:' or 'matrix:'");
    tokens = tokenize(line);

    ParsedSpace parsed;
    if (tokens[0] == "labels:") {
        if (static_cast<int>(tokens.size()) != n + 1) {
            throw ParseError(lineno, "expected " + std::to_string(n) + " labels");
        }
        parsed.labels.assign(tokens.begin() + 1, tokens.end());
        if (!next_line(in, line, lineno)) throw ParseError(lineno, "expected 'matrix:'");
        tokens = tokenize(line);
    } else {
        parsed.labels = default_labels(n);
    }

    if (tokens.size() != 1 || tokens[0] != "matrix:") throw ParseError(lineno, "expected 'matrix:'");

    for (int i = 0; i < n; ++i) {
        if (!next_line(in, line, lineno)) throw ParseError(lineno, "matrix row missing");
        tokens = tokenize(line);
        if (static_cast<int>(tokens.size()) != n) {
            throw ParseError(lineno, "expected " + std::to_string(n) + " entries in matrix row");
        }
        std::vector<Rational> row;
        for (const auto& t : tokens) {
            auto q = parse_rational(t);
            if (!q) throw ParseError(lineno, "malformed rational: " + t);
            row.push_back(*q);
        }
        parsed.matrix.push_back(std::move(row));
    }
    return parsed;
}

ParsedSpace parse_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return parse_space(in);
}

std::string write_space(const FiniteSpace& space) {
    std::ostringstream out;
    const int n = space.size();
    out << "points: " << n << "\n";
    out << "labels:";
    for (const auto& label : space.labels()) out << " " << label;
    out << "\nmatrix:\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << " ";
            out << format_rational(space.dist(i, j));
        }
        out << "\n";
    }
    return out.str();
}

int resolve_label(const std::vector<std::string>& labels, const std::string& name, int line) {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw ParseError(line, "unknown point: " + name);
    return static_cast<int>(it - labels.begin());
}

SetValuedMap parse_map(std::istream& in, const std::vector<std::string>& labels) {
    const int n = static_cast<int>(labels.size());
    std::string line;
    int lineno = 0;
    if (!next_line(in, line, lineno) || tokenize(line) != std::vector<std::string>{"map:"}) {
        throw ParseError(lineno, "expected 'map:'");
    }
    std::vector<std::vector<int>> targets(n);
    std::vector<bool> seen(n, false);
    while (next_line(in, line, lineno)) {
        auto tokens = tokenize(line);
        if (tokens.size() < 3 || tokens[1] != "->") {
            throw ParseError(lineno, "expected '<point> -> <p1> <p2> ...'");
        }
        int source = resolve_label(labels, tokens[0], lineno);
        if (seen[source]) throw ParseError(lineno, "duplicate map entry for " + tokens[0]);
        seen[source] = true;
        for (std::size_t t = 2; t < tokens.size(); ++t) {
            targets[source].push_back(resolve_label(labels, tokens[t], lineno));
        }
    }
    for (int x = 0; x < n; ++x) {
        if (!seen[x]) throw ParseError(lineno, "no map entry for point " + labels[x]);
    }
    return SetValuedMap(std::move(targets));
}

SetValuedMap parse_map_file(const std::string& path, const std::vector<std::string>& labels) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return parse_map(in, labels);
}

std::string write_map(const SetValuedMap& map, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "map:\n";
    for (int x = 0; x < map.size(); ++x) {
        out << labels[x] << " ->";
        for (int p : map.target(x)) out << " " << labels[p];
        out << "\n";
    }
    return out.str();
}

}  // namespace bmetric
