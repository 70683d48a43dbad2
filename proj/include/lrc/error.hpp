#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrc {

enum class Errc {
    NonPrime,
    ReducibleModulus,
    NoDefaultModulus,
    BadParameters,
    RingMismatch,
    NotAUnit,
    NotASimpleRoot,
    IndexOutOfRange,
    DuplicatePoints,
    OrderDoesNotDivide,
    NotASubgroup,
    NotWellConditioned,
    PartitionNotCosets,
    NotConstantOnBlock,
    WrongDegree,
    NotMonic,
    BlockSizeMismatch,
    BadGoodPolynomial,
    DivisibilityViolation,
    TooManyBlocksRequested,
    LengthMismatch,
    TooManyErasuresInBlock,
    PositionNotErased,
    MapNotAvailable,
    DegreeTooHigh,
    KindMismatch,
    InstanceTooLarge,
    BadErasureModel,
    ParseError,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
        case Errc::NonPrime: return "NonPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::NoDefaultModulus: return "NoDefaultModulus";
        case Errc::BadParameters: return "BadParameters";
        case Errc::RingMismatch: return "RingMismatch";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::NotASimpleRoot: return "NotASimpleRoot";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::DuplicatePoints: return "DuplicatePoints";
        case Errc::OrderDoesNotDivide: return "OrderDoesNotDivide";
        case Errc::NotASubgroup: return "NotASubgroup";
        case Errc::NotWellConditioned: return "NotWellConditioned";
        case Errc::PartitionNotCosets: return "PartitionNotCosets";
        case Errc::NotConstantOnBlock: return "NotConstantOnBlock";
        case Errc::WrongDegree: return "WrongDegree";
        case Errc::NotMonic: return "NotMonic";
        case Errc::BlockSizeMismatch: return "BlockSizeMismatch";
        case Errc::BadGoodPolynomial: return "BadGoodPolynomial";
        case Errc::DivisibilityViolation: return "DivisibilityViolation";
        case Errc::TooManyBlocksRequested: return "TooManyBlocksRequested";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::TooManyErasuresInBlock: return "TooManyErasuresInBlock";
        case Errc::PositionNotErased: return "PositionNotErased";
        case Errc::MapNotAvailable: return "MapNotAvailable";
        case Errc::DegreeTooHigh: return "DegreeTooHigh";
        case Errc::KindMismatch: return "KindMismatch";
        case Errc::InstanceTooLarge: return "InstanceTooLarge";
        case Errc::BadErasureModel: return "BadErasureModel";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// All library failures are reported as lrc::Error; code() identifies the condition.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lrc
