#pragma once

#include <stdexcept>
#include <string>

namespace pcf {

// Input file could not be parsed (bad header, malformed line, id out of range, ...).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A choice set that the constructive arguments guarantee to be nonempty came up
// empty (or a structural fact they guarantee failed to hold).  Seeing this on a
// valid input means a bug, so it is surfaced loudly instead of being papered over.
class InternalContradictionError : public std::logic_error {
public:
    explicit InternalContradictionError(const std::string& what) : std::logic_error(what) {}
};

// An exhaustive search hit its node budget before reaching a verdict.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pcf
