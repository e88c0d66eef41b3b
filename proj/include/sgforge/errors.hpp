#pragma once

#include <stdexcept>
#include <string>

namespace sgforge {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyGenerators : public Error {
public:
    EmptyGenerators() : Error("generator list is empty") {}
};

/// The input does not describe a numerical semigroup (gcd of generators > 1),
/// or a coprimality precondition failed.
class NotCoprime : public Error {
public:
    explicit NotCoprime(long long g)
        : Error("generators are not coprime (gcd " + std::to_string(g) + ")") {}
};

class NotInSemigroup : public Error {
public:
    explicit NotInSemigroup(long long x)
        : Error(std::to_string(x) + " is not an element of the semigroup") {}
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch() : Error("monomial variable counts disagree") {}
};

/// A binomial whose two monomials have different weighted degrees was passed
/// where a graded input is required.
class NotHomogeneous : public Error {
public:
    explicit NotHomogeneous(const std::string& what_binomial)
        : Error("binomial is not homogeneous under the given weights: " + what_binomial) {}
};

/// A candidate generating set failed certification against the defining ideal.
class NotCertified : public Error {
public:
    using Error::Error;
};

/// A configurable work budget (S-pair count, enumeration nodes) was exhausted.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// A closed-form evaluator was invoked for an embedding dimension it does not cover.
class WrongE : public Error {
public:
    explicit WrongE(int e, int expected)
        : Error("closed form requires e = " + std::to_string(expected) +
                ", got e = " + std::to_string(e)) {}
};

class UnsupportedE : public Error {
public:
    explicit UnsupportedE(int e)
        : Error("no closed forms available for e = " + std::to_string(e) +
                " (supported: 4, 5)") {}
};

}  // namespace sgforge
