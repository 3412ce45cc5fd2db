#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace skelcat {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input (JSON, group tables, tensor shapes).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Unknown label or other failed lookup.
struct LookupError : Error {
    explicit LookupError(const std::string& msg) : Error(msg) {}
};

// Operation called outside its domain (missing channel, non-modular input, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

// Exact dims were required but the category data only carries numeric ones.
struct MissingExactDimsError : Error {
    explicit MissingExactDimsError(const std::string& msg) : Error(msg) {}
};

// Input data contradicts itself (failed certificate, impossible fusion solve, ...).
struct DataInconsistencyError : Error {
    explicit DataInconsistencyError(const std::string& msg) : Error(msg) {}
};

// Requested subcategory is not central: carries the witness channel.
struct DegeneracyError : Error {
    std::size_t label;      // the non-degenerate label
    std::size_t against;    // b in the witness channel
    std::size_t channel;    // c in the witness channel
    std::string phase;      // display form of the offending monodromy phase
    DegeneracyError(const std::string& msg, std::size_t label_, std::size_t against_,
                    std::size_t channel_, std::string phase_)
        : Error(msg), label(label_), against(against_), channel(channel_), phase(std::move(phase_)) {}
};

// Stabilizer cocycle class cannot be inferred; lists the candidate class ids.
struct NeedsCocycleError : Error {
    std::size_t orbit_representative;
    std::vector<std::size_t> candidate_classes;
    NeedsCocycleError(const std::string& msg, std::size_t rep, std::vector<std::size_t> candidates)
        : Error(msg), orbit_representative(rep), candidate_classes(std::move(candidates)) {}
};

// Reconstruction admits zero or several solutions.
struct AmbiguityError : Error {
    std::size_t solution_count;
    AmbiguityError(const std::string& msg, std::size_t count) : Error(msg), solution_count(count) {}
};

// Input exceeds a configured bound (group order, search nodes).
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

struct GroupMismatchError : Error {
    explicit GroupMismatchError(const std::string& msg) : Error(msg) {}
};

}  // namespace skelcat
