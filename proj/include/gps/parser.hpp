#pragma once

#include "gps/gseries.hpp"

#include <map>
#include <string>
#include <vector>

namespace gps {

struct Directive {
    std::string kind;      // solve | monomialize | present | verify
    std::string series;
    std::string respected; // exactly one respected variable
    std::map<std::string, std::string> options;
};

// Parsed problem: basis declarations, a variable signature, named series and
// directives. Series parse against the declared signature.
struct ProblemFile {
    BasisPtr basis;
    VarSignature signature;
    std::vector<std::string> series_order;
    std::map<std::string, GSeries> series;
    std::vector<Directive> directives;

    const GSeries& lookup(const std::string& name) const;
};

ProblemFile parse_problem(const std::string& text);

// Parses a single series expression against an existing signature.
GSeries parse_series(const std::string& text, const VarSignature& sig);

// Canonical text rendering; parse_series(render(F), F.signature()) == F.
std::string render(const GSeries& f);

} // namespace gps
