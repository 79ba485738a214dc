#ifndef TILING_ERROR_HPP
#define TILING_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tiling {

// Base for all library errors surfaced to callers.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent textual input (JSON diagrams, vertex sets).
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

// Enumeration exceeded its node budget. Carries the number of top-level
// search subtrees that finished before the budget ran out, so a caller can
// tell how much of the tree was certified complete.
struct budget_error : error {
    budget_error(const std::string& what, int done, int total)
        : error(what), subtrees_completed(done), subtrees_total(total) {}
    int subtrees_completed;
    int subtrees_total;
};

}  // namespace tiling

#endif
