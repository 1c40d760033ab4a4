#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rmg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structural validation failure of a hypergraph or partite hypergraph.
class ValidationError : public Error {
public:
    enum class Kind {
        UnknownVertex,
        DuplicateVertex,
        EdgeTooSmall,
        DuplicateEdge,
        RepeatedVertexInEdge,
        PartsNotDisjoint,
        PartsNotCovering,
        EdgeHitsPartTwice,
        NotUniform,
        NotPartite,
    };

    ValidationError(Kind kind, const std::string & what) : Error(what), kind_(kind) {}

    auto kind() const -> Kind { return kind_; }

private:
    Kind kind_;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Raised by enumerations that refuse to exceed their candidate budget.
class BudgetExhausted : public Error {
public:
    BudgetExhausted(const std::string & what, std::uint64_t explored) : Error(what), explored_(explored) {}

    auto explored() const -> std::uint64_t { return explored_; }

private:
    std::uint64_t explored_;
};

class SupplierFailure : public Error {
public:
    using Error::Error;
};

class RetryLimitReached : public Error {
public:
    RetryLimitReached(const std::string & what, std::size_t achieved_edges) :
        Error(what), achieved_edges_(achieved_edges) {}

    auto achieved_edges() const -> std::size_t { return achieved_edges_; }

private:
    std::size_t achieved_edges_;
};

/// JSON input that is syntactically or schematically malformed.
class ParseError : public Error {
public:
    ParseError(const std::string & what, std::size_t line, std::size_t column) :
        Error(what), line_(line), column_(column) {}

    auto line() const -> std::size_t { return line_; }
    auto column() const -> std::size_t { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}
