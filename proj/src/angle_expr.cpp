#include "hyptile/angle_expr.hpp"

#include "hyptile/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace hyptile {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() {
        skip_space();
        return pos_ == text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char ch) {
        if (peek() == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_pi() {
        skip_space();
        if (text_.substr(pos_, 2) != "pi") {
            throw ParseError("expected 'pi'", pos_);
        }
        pos_ += 2;
    }

    double number() {
        skip_space();
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || !std::isfinite(value)) {
            throw ParseError("expected a number", pos_);
        }
        last_start_ = pos_;
        pos_ += static_cast<std::size_t>(ptr - begin);
        last_end_ = pos_;
        return value;
    }

    std::int64_t nonzero_integer() {
        skip_space();
        const std::size_t start = pos_;
        const char* begin = text_.data() + pos_;
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
        if (ec != std::errc()) {
            throw ParseError("expected an integer", start);
        }
        if (value == 0) {
            throw ParseError("integer must be nonzero", start);
        }
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    /// True when the most recent number() consumed only an optional sign and digits.
    bool last_was_integer() const {
        for (std::size_t i = last_start_; i < last_end_; ++i) {
            const char ch = text_[i];
            if (!std::isdigit(static_cast<unsigned char>(ch)) && !(i == last_start_ && ch == '-')) {
                return false;
            }
        }
        return true;
    }

    std::size_t position() const { return pos_; }
    std::size_t last_start() const { return last_start_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t last_start_ = 0;
    std::size_t last_end_ = 0;
};

double pi_fraction(Cursor& cur, double multiplier) {
    cur.expect_pi();
    double value = multiplier * std::numbers::pi;
    if (cur.accept('/')) {
        value /= static_cast<double>(cur.nonzero_integer());
    }
    return value;
}

}  // namespace

AngleExpr parse_angle(std::string_view text) {
    Cursor cur(text);
    if (cur.at_end()) {
        throw ParseError("empty angle", 0);
    }
    double value = 0.0;
    if (cur.peek() == 'p') {
        value = pi_fraction(cur, 1.0);
    } else {
        value = cur.number();
        if (cur.accept('*')) {
            if (!cur.last_was_integer() || value == 0.0) {
                throw ParseError("multiplier must be a nonzero integer", cur.last_start());
            }
            value = pi_fraction(cur, value);
        }
    }
    if (!cur.at_end()) {
        throw ParseError("unexpected character", cur.position());
    }
    if (!(value > 0.0 && value < std::numbers::pi)) {
        throw DomainError("angle " + std::string(text) + " is not in (0, pi)");
    }
    return {std::string(text), value};
}

double parse_real(std::string_view text) {
    Cursor cur(text);
    const double value = cur.number();
    if (!cur.at_end()) {
        throw ParseError("unexpected character", cur.position());
    }
    return value;
}

}  // namespace hyptile
