#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "ecc/assignment.hpp"
#include "ecc/evaluate.hpp"
#include "ecc/hypergraph.hpp"

namespace ecc {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// Reads the hypergraph text format: `#` comment lines, a `n m k` header,
/// then m lines `c v1 v2 ... vj` (color first), all ids 1-based. Blank lines
/// are skipped; anything else malformed raises ParseError with the line
/// number.
EdgeColoredHypergraph read_hypergraph(std::istream& in);
EdgeColoredHypergraph read_hypergraph_file(const std::string& path);

void write_hypergraph(std::ostream& out, const EdgeColoredHypergraph& h);

/// Assignment as JSON: variant, budget, colors (node -> sorted color list,
/// deleted nodes omitted), deleted (sorted), mistakes, satisfied,
/// budget_used.
nlohmann::ordered_json assignment_json(const Variant& variant, const ColorAssignment& a,
                                       const EvaluationReport& report);

/// Inverse of assignment_json (colors and deleted only; counts are ignored).
ColorAssignment assignment_from_json(const nlohmann::json& j, int num_nodes);

}  // namespace ecc
