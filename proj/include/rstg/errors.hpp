#pragma once

#include <stdexcept>
#include <string>

namespace rstg {

// Raised when an argument lies outside the mathematical domain of an
// operation (e.g. log log n undefined, empty source set). The CLI maps it
// to exit code 2.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by the graph constructors and the tgf parser when input violates a
// TemporalGraph invariant.
class GraphFormatError : public std::invalid_argument {
public:
    explicit GraphFormatError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace rstg
