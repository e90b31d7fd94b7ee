#ifndef BMETRIC_SPACE_IO_HPP
#define BMETRIC_SPACE_IO_HPP

#include "bmetric/finite_space.hpp"
#include "bmetric/fixed_point.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmetric {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

// Raw parse result; axiom validation is a separate step so the CLI can
// report violations rather than syntax errors.
struct ParsedSpace {
    std::vector<std::string> labels;
    Matrix matrix;
};

// Space file:
//   points: <n>
//   labels: <name1> ... <namen>     (optional, defaults to 1..n)
//   matrix:
//   <n rows of n rationals, "p/q" or "p">
ParsedSpace parse_space(std::istream& in);
ParsedSpace parse_space_file(const std::string& path);

std::string write_space(const FiniteSpace& space);

// Map file:
//   map:
//   <point> -> <p1> <p2> ...
// Points are referenced by label.
SetValuedMap parse_map(std::istream& in, const std::vector<std::string>& labels);
SetValuedMap parse_map_file(const std::string& path, const std::vector<std::string>& labels);

std::string write_map(const SetValuedMap& map, const std::vector<std::string>& labels);

// Index of a label, or a ParseError naming the unknown point.
int resolve_label(const std::vector<std::string>& labels, const std::string& name, int line = 0);

}  // namespace bmetric

#endif
