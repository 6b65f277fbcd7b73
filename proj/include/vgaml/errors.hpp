#pragma once

#include <stdexcept>
#include <string>

namespace vgaml {

/// Error categories; the CLI maps each to a distinct exit code.
enum class ErrorKind {
    Parse = 2,       ///< malformed input text
    Schema = 3,      ///< well-formed input that violates a column/attribute/key contract
    Infeasible = 4,  ///< a request that cannot be satisfied (bad layout spec, k > n, ...)
    Numeric = 5,     ///< a quantity that is undefined for the given input
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};
struct SchemaError : Error {
    explicit SchemaError(const std::string& what) : Error(ErrorKind::Schema, what) {}
};
struct InfeasibleError : Error {
    explicit InfeasibleError(const std::string& what) : Error(ErrorKind::Infeasible, what) {}
};
struct NumericError : Error {
    explicit NumericError(const std::string& what) : Error(ErrorKind::Numeric, what) {}
};

}  // namespace vgaml
