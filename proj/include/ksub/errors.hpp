#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ksub {

// Thrown when (k+1)^n exceeds the configured cell budget. Brute-force scans
// and dense relaxation storage are only run at desk scale; exceeding the
// guard is a hard error, never silent degradation.
class SizeGuardError : public std::runtime_error {
public:
    SizeGuardError(std::uint64_t requested, std::uint64_t limit)
        : std::runtime_error(requested
                                 ? "size guard: (k+1)^n = " + std::to_string(requested) +
                                       " exceeds the cell limit " + std::to_string(limit)
                                 : "size guard: (k+1)^n exceeds the cell limit " +
                                       std::to_string(limit)),
          requested_(requested), limit_(limit) {}

    std::uint64_t requested() const { return requested_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t requested_;
    std::uint64_t limit_;
};

// A relaxed value without a tight generating pair. Existence of such a pair
// is guaranteed for every successful relaxation, so this signals an
// implementation bug, not a bad input.
class NoTightPair : public std::logic_error {
public:
    explicit NoTightPair(const std::string& labeling)
        : std::logic_error("no tight generating pair for relaxed value at " + labeling) {}
};

// Raised by persistency checking when g does not restrict to f.
class RestrictionMismatch : public std::invalid_argument {
public:
    explicit RestrictionMismatch(const std::string& what)
        : std::invalid_argument(what) {}
};

// Raised by gap computation when the crisp instance has no finite assignment.
class InfeasibleInstance : public std::runtime_error {
public:
    InfeasibleInstance() : std::runtime_error("instance is infeasible: OPT(I) = +inf") {}
};

// Text-format errors carry the 1-based line number of the offending row.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace ksub
