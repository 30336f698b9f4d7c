#pragma once

#include <stdexcept>
#include <string>

namespace g2abv {

enum class Errc {
    Parse,
    InvalidRoot,
    NotEmbeddable,
    DivisionByZero,
    NoStandardMatch,
    UnknownLabel,
    InvalidParameter,
    UnsupportedSubCase,
    NotInPacket,
    NotArthurType,
    UnsupportedFamily,
    SingularSystem,
    AmbiguousOrbit,
    NotRelevant,
    NotSConormal,
    UnsupportedRestriction,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Parse failure with the offending byte offset into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : Error(Errc::Parse, what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

}  // namespace g2abv
