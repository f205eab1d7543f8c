#pragma once

#include <string>
#include <string_view>

namespace hyptile {

/// An angle as typed by the user together with its value in radians.
struct AngleExpr {
    std::string source;
    double radians = 0.0;
};

/// Parses `decimal | pi | pi/N | M*pi/N` (M, N nonzero integers; whitespace
/// ignored). Throws ParseError on malformed text and DomainError when the
/// value is not in (0, pi).
AngleExpr parse_angle(std::string_view text);

/// Parses a plain decimal number. Throws ParseError on malformed text.
double parse_real(std::string_view text);

}  // namespace hyptile
