#ifndef AUTOFORM_ERRORS_HPP
#define AUTOFORM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace autoform {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Expression or literal text does not conform to the grammar.
/// Carries the byte offset of the failure and the expected-token set.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset, std::string expected)
        : Error(what), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

/// Comprehension unrolling failed: unresolved iterable, non-integer range
/// bound, or an index outside a parameter's declared extent.
class GroundError : public Error {
public:
    using Error::Error;
};

/// A non-affine form was encountered during coefficient extraction.
/// Carries the offending subexpression rendered as text.
class NonLinearError : public Error {
public:
    NonLinearError(const std::string& what, std::string subexpr)
        : Error(what), subexpr_(std::move(subexpr)) {}

    const std::string& subexpression() const { return subexpr_; }

private:
    std::string subexpr_;
};

/// Arithmetic evaluation failed (missing binding, division by zero).
class EvalError : public Error {
public:
    using Error::Error;
};

/// Structured input (JSON document, dataset line) violates its schema.
/// Carries a JSON-pointer-like path, or a line number for line-oriented input.
class SchemaError : public Error {
public:
    SchemaError(const std::string& what, std::string path, long line = -1)
        : Error(what), path_(std::move(path)), line_(line) {}

    const std::string& path() const { return path_; }
    long line() const { return line_; }

private:
    std::string path_;
    long line_;
};

/// A formulation could not be turned into a computational model.
/// Wraps the underlying parse/ground/linearize failure and names the entry.
class LoweringError : public Error {
public:
    LoweringError(const std::string& what, std::string entry)
        : Error(what), entry_(std::move(entry)) {}

    const std::string& entry() const { return entry_; }

private:
    std::string entry_;
};

/// Generator backend transport failure after bounded retries.
class BackendError : public Error {
public:
    using Error::Error;
};

/// Two systems were compared over different variable tables.
class DomainMismatch : public Error {
public:
    using Error::Error;
};

/// Node expansion produced zero parseable candidates.
class ExpansionEmpty : public Error {
public:
    using Error::Error;
};

} // namespace autoform

#endif // AUTOFORM_ERRORS_HPP
