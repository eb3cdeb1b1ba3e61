#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weilk3 {

enum class ErrorKind {
    NonExactDivision,
    DivisionByZero,
    ZeroConstantTerm,
    BoundaryRoot,
    NotPrime,
    OrderTooLarge,
    WrongDegree,
    BadConstantTerm,
    NotSelfInversive,
    NotSquarefree,
    RootAtUnity,
    BoundTooLarge,
    HypothesesNotMet,
    TooLarge,
    JTooSmall,
    ModelTooLarge,
    OutOfRange,
    NoFixtureFound,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::NonExactDivision: return "NonExactDivision";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::BoundaryRoot: return "BoundaryRoot";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::NotSelfInversive: return "NotSelfInversive";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::RootAtUnity: return "RootAtUnity";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::HypothesesNotMet: return "HypothesesNotMet";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::JTooSmall: return "JTooSmall";
    case ErrorKind::ModelTooLarge: return "ModelTooLarge";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NoFixtureFound: return "NoFixtureFound";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library. `stage()` is non-empty when the
/// error escaped from a labelled step of the analysis pipeline.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::string stage = {})
        : std::runtime_error(what), kind_(kind), stage_(std::move(stage)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& stage() const noexcept { return stage_; }

private:
    ErrorKind kind_;
    std::string stage_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

} // namespace weilk3
