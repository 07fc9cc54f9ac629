#pragma once

#include <stdexcept>
#include <string>

namespace wfusion {

/// Domain error carrying a machine-readable kind tag ("GenericWeight",
/// "NotInSector", "NotProjectiveClass", "Infinite", "OutOfRange",
/// "UnknownLiteratureLabel", "NonRationalExponent", "DivisionByZero",
/// "BadLabel").
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

/// Malformed input text (labels, weights, algebra specifiers, CLI values).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

} // namespace wfusion
