#pragma once

#include <stdexcept>
#include <string>

namespace gog {

// Base class for all library errors so callers can catch one type.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Exact arithmetic left the representable 64-bit range.
struct overflow_error : error {
    explicit overflow_error(const std::string& what) : error(what) {}
};

// A precondition on an operation's arguments failed (bad index, non-divisor
// edge order, negative genus, ...).
struct domain_error : error {
    explicit domain_error(const std::string& what) : error(what) {}
};

// An invariant was requested that the input does not define (for example a
// custom vertex that never declared omega).
struct undefined_error : error {
    explicit undefined_error(const std::string& what) : error(what) {}
};

// A brute-force enumeration would exceed its explicit budget.  Never silently
// truncated; the caller must raise the budget knowingly.
struct budget_error : error {
    explicit budget_error(const std::string& what) : error(what) {}
};

// Text input could not be parsed.  `line` is 1-based, 0 when unknown.
struct parse_error : error {
    int line;
    parse_error(int line_, const std::string& what)
        : error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what : what),
          line(line_) {}
};

}  // namespace gog
