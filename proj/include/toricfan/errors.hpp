#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toricfan {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic left the exactly-representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Input data could not be parsed or fails schema validation.
class IoError : public Error {
public:
    using Error::Error;
};

/// A search or enumeration exceeded its step budget.  Callers may resume
/// from a checkpoint where one is supported.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

// -- building sets ----------------------------------------------------------

class BuildingSetError : public Error {
public:
    using Error::Error;
};

/// Def: a building set must contain every singleton of its ground set.
class MissingSingleton : public BuildingSetError {
public:
    explicit MissingSingleton(int element1)
        : BuildingSetError("building set is missing singleton {" +
                           std::to_string(element1) + "}"),
          element(element1) {}
    int element;  // 1-based
};

/// Two members intersect but their union is absent.
class NotUnionClosed : public BuildingSetError {
public:
    NotUnionClosed(std::uint64_t i1, std::uint64_t j1, const std::string& what1)
        : BuildingSetError(what1), i(i1), j(j1) {}
    std::uint64_t i;
    std::uint64_t j;
};

class EmptyMember : public BuildingSetError {
public:
    EmptyMember() : BuildingSetError("building set members must be nonempty") {}
};

class GroundSetTooLarge : public BuildingSetError {
public:
    explicit GroundSetTooLarge(const std::string& what1) : BuildingSetError(what1) {}
};

/// Nested-set queries only accept members of B \ B_max.
class MemberNotInB : public BuildingSetError {
public:
    explicit MemberNotInB(const std::string& what1) : BuildingSetError(what1) {}
};

class MemberIsBMax : public BuildingSetError {
public:
    explicit MemberIsBMax(const std::string& what1) : BuildingSetError(what1) {}
};

// -- fans --------------------------------------------------------------------

class FanError : public Error {
public:
    using Error::Error;
};

class NotSmooth : public FanError {
public:
    explicit NotSmooth(const std::string& what1) : FanError(what1) {}
};

class NotComplete : public FanError {
public:
    explicit NotComplete(const std::string& what1) : FanError(what1) {}
};

/// A listed maximal cone has fewer rays than the ambient dimension.
class NonMaximalDimensionCone : public FanError {
public:
    explicit NonMaximalDimensionCone(const std::string& what1) : FanError(what1) {}
};

/// The (nested set, I1, I2) triple does not describe a wall.
class NotAWallConfiguration : public FanError {
public:
    explicit NotAWallConfiguration(const std::string& what1) : FanError(what1) {}
};

// -- root systems -------------------------------------------------------------

class InvalidCartanMatrix : public Error {
public:
    explicit InvalidCartanMatrix(const std::string& what1) : Error(what1) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what1) : Error(what1) {}
};

class OrbitTooLarge : public Error {
public:
    explicit OrbitTooLarge(const std::string& what1) : Error(what1) {}
};

// -- polytopes ----------------------------------------------------------------

class PolytopeError : public Error {
public:
    using Error::Error;
};

class NotFullDimensional : public PolytopeError {
public:
    explicit NotFullDimensional(const std::string& what1) : PolytopeError(what1) {}
};

class NotWeakFano : public PolytopeError {
public:
    explicit NotWeakFano(const std::string& what1) : PolytopeError(what1) {}
};

class NotSmoothFano : public PolytopeError {
public:
    explicit NotSmoothFano(const std::string& what1) : PolytopeError(what1) {}
};

class NotConnected : public PolytopeError {
public:
    explicit NotConnected(const std::string& what1) : PolytopeError(what1) {}
};

class SearchBudgetExceeded : public BudgetExceededError {
public:
    explicit SearchBudgetExceeded(const std::string& what1)
        : BudgetExceededError(what1) {}
};

// -- chern character -----------------------------------------------------------

class NotACone : public FanError {
public:
    explicit NotACone(const std::string& what1) : FanError(what1) {}
};

class UnsupportedStar : public Error {
public:
    explicit UnsupportedStar(const std::string& what1) : Error(what1) {}
};

class NotFano : public Error {
public:
    explicit NotFano(const std::string& what1) : Error(what1) {}
};

class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& what1) : Error(what1) {}
};

}  // namespace toricfan
