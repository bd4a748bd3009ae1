#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zimt {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense integer vectors/matrices in the ambient coordinate lattice.
using Vec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid (type, rank) combination or otherwise unconstructible object.
struct ConstructionError : Error {
    using Error::Error;
};

// Argument outside the operation's domain (not a root, index out of range, ...).
struct DomainError : Error {
    using Error::Error;
};

// Catalogue file violates the documented schema; `path` points at the field.
struct SchemaError : Error {
    std::string path;
    SchemaError(std::string p, const std::string& what)
        : Error(p + ": " + what), path(std::move(p)) {}
};

// Group-spec string rejected; carries byte offset and expected-token list.
struct SpecParseError : Error {
    enum class Kind { Syntax, UnknownFamily, ArityMismatch, RangeViolation };
    Kind kind;
    std::size_t offset;
    std::vector<std::string> expected;
    SpecParseError(Kind k, std::size_t off, std::vector<std::string> exp, const std::string& what)
        : Error(what), kind(k), offset(off), expected(std::move(exp)) {}
};

// A restricted-subsystem signature with no known real form behind it.
struct IdentificationError : Error {
    std::string signature;
    IdentificationError(std::string sig)
        : Error("no real form matches restricted signature " + sig), signature(std::move(sig)) {}
};

inline bool lex_less(const Vec& a, const Vec& b) {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

struct LexLess {
    bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

}  // namespace zimt
