// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "mcsc/decimal.hpp"

#include "mcsc/errors.hpp"

#include <cctype>
#include <limits>

namespace mcsc {

namespace {

std::int64_t round_half_even(__int128 numerator, std::int64_t denominator) {
    __int128 q = numerator / denominator;
    __int128 r = numerator % denominator;
    if (r * 2 > denominator || (r * 2 == denominator && (q & 1) != 0))
        ++q;
    return static_cast<std::int64_t>(q);
}

std::string format_micros(std::int64_t micros, bool force_fraction) {
    std::string out = std::to_string(micros / Dec6::scale);
    std::int64_t frac = micros % Dec6::scale;
    if (frac == 0) {
        if (force_fraction)
            out += ".0";
        return out;
    }
    char digits[8];
    std::snprintf(digits, sizeof digits, "%06lld", static_cast<long long>(frac));
    std::string f(digits);
    while (f.size() > 1 && f.back() == '0')
        f.pop_back();
    return out + "." + f;
}

} // namespace

Dec6 Dec6::from_micros(std::int64_t micros) {
    if (micros < 0)
        fail(Errc::degree_out_of_range, "negative value");
    Dec6 d;
    d.micros_ = micros;
    return d;
}

Dec6 Dec6::from_int(std::int64_t units) {
    return from_micros(units * scale);
}

Dec6 Dec6::parse(std::string_view text) {
    std::size_t i = 0;
    std::int64_t whole = 0;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        fail(Errc::parse_error, "malformed decimal '" + std::string(text) + "'");
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        whole = whole * 10 + (text[i] - '0');
        if (whole > std::numeric_limits<std::int64_t>::max() / scale)
            fail(Errc::parse_error, "decimal too large '" + std::string(text) + "'");
    }
    std::int64_t frac = 0;
    if (i < text.size()) {
        if (text[i] != '.')
            fail(Errc::parse_error, "malformed decimal '" + std::string(text) + "'");
        ++i;
        int digits = 0;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            if (++digits > 6)
                fail(Errc::parse_error,
                     "more than six fractional digits in '" + std::string(text) + "'");
            frac = frac * 10 + (text[i] - '0');
        }
        if (digits == 0 || i != text.size())
            fail(Errc::parse_error, "malformed decimal '" + std::string(text) + "'");
        for (; digits < 6; ++digits)
            frac *= 10;
    } else if (i != text.size()) {
        fail(Errc::parse_error, "malformed decimal '" + std::string(text) + "'");
    }
    return from_micros(whole * scale + frac);
}

Dec6 Dec6::operator+(Dec6 other) const {
    return from_micros(micros_ + other.micros_);
}

Dec6 Dec6::operator-(Dec6 other) const {
    if (other.micros_ > micros_)
        fail(Errc::degree_out_of_range, "negative difference");
    return from_micros(micros_ - other.micros_);
}

Dec6 Dec6::times(Dec6 other) const {
    __int128 product = static_cast<__int128>(micros_) * other.micros_;
    return from_micros(round_half_even(product, scale));
}

std::string Dec6::str() const {
    return format_micros(micros_, false);
}

std::string Dec6::str_decimal() const {
    return format_micros(micros_, true);
}

Degree::Degree(Dec6 value) : micros_(value.micros()) {
    if (micros_ > Dec6::scale)
        fail(Errc::degree_out_of_range, "degree " + value.str() + " exceeds 1");
}

Degree Degree::one() {
    return Degree(Dec6::from_micros(Dec6::scale));
}

Degree Degree::from_micros(std::int64_t micros) {
    return Degree(Dec6::from_micros(micros));
}

Degree Degree::parse(std::string_view text) {
    return Degree(Dec6::parse(text));
}

Degree Degree::one_minus() const {
    return from_micros(Dec6::scale - micros_);
}

Degree Degree::times(Degree other) const {
    return Degree(dec().times(other.dec()));
}

} // namespace mcsc
