#pragma once

#include <stdexcept>
#include <string>

namespace ptc {

/// A query that is well-formed but violates a mathematical precondition.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (term grammar, table files, structure specs).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration request above the configured cap.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ptc
