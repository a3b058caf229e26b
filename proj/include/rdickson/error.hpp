#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdickson {

enum class Errc {
    NotPrime,
    EvenCharacteristic,
    OrderOverflow,
    DivisionByZero,
    CharacteristicMismatch,
    NoRoot,
    KindOutOfRange,
    DegreeBoundExceeded,
    StructureOverflow,
    IndexTooSmall,
    BadParity,
    WrongCharacteristic,
    InternalError,
    FieldTooLarge,
    UnknownClaim,
    InvalidArgument,
};

constexpr std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::OrderOverflow: return "OrderOverflow";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::CharacteristicMismatch: return "CharacteristicMismatch";
    case Errc::NoRoot: return "NoRoot";
    case Errc::KindOutOfRange: return "KindOutOfRange";
    case Errc::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case Errc::StructureOverflow: return "StructureOverflow";
    case Errc::IndexTooSmall: return "IndexTooSmall";
    case Errc::BadParity: return "BadParity";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::InternalError: return "InternalError";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::UnknownClaim: return "UnknownClaim";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can map it without parsing messages.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace rdickson
