#pragma once

#include <stdexcept>
#include <string>

namespace cordial {

// Malformed input data (bad edge, bad id, unparsable text). Maps to CLI exit 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg, int edge_index = 0)
        : std::runtime_error(msg), edge_index_(edge_index) {}
    // 1-based index of the offending edge, 0 if not edge-related.
    int edge_index() const { return edge_index_; }

private:
    int edge_index_;
};

// A caller broke a documented precondition. Maps to CLI exit 3.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A search that is guaranteed to succeed came up empty. Maps to CLI exit 3.
class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal invariant failed; indicates a bug. Maps to CLI exit 3.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cordial
