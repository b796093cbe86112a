// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mcsc {

/// Exact nonnegative fixed-point number with six fractional digits.
/// Sums and differences are exact; products round half-even to six digits,
/// so decimal constants like 0.968 or 0.96775 reproduce bit-exactly.
class Dec6 {
public:
    static constexpr std::int64_t scale = 1'000'000;

    constexpr Dec6() = default;

    static Dec6 from_micros(std::int64_t micros);
    static Dec6 from_int(std::int64_t units);
    /// Parses "12", "0.5", "0.968". Rejects signs, exponents, and more than
    /// six fractional digits.
    static Dec6 parse(std::string_view text);

    std::int64_t micros() const { return micros_; }
    bool is_integral() const { return micros_ % scale == 0; }
    bool is_zero() const { return micros_ == 0; }

    Dec6 operator+(Dec6 other) const;
    Dec6 operator-(Dec6 other) const; // underflow below zero is an error
    Dec6 times(Dec6 other) const;     // rounds half-even to six digits
    auto operator<=>(const Dec6&) const = default;

    /// Shortest form: "81", "0.5".
    std::string str() const;
    /// Trailing zeros trimmed but at least one fractional digit: "81.0", "0.968".
    std::string str_decimal() const;

private:
    std::int64_t micros_ = 0;
};

/// A necessity/possibility degree: a Dec6 confined to [0, 1].
class Degree {
public:
    constexpr Degree() = default;
    explicit Degree(Dec6 value); // throws DegreeOutOfRange above 1

    static Degree zero() { return Degree(); }
    static Degree one();
    static Degree from_micros(std::int64_t micros);
    static Degree parse(std::string_view text);

    Dec6 dec() const { return Dec6::from_micros(micros_); }
    std::int64_t micros() const { return micros_; }
    bool is_zero() const { return micros_ == 0; }
    bool is_one() const { return micros_ == Dec6::scale; }

    Degree one_minus() const;
    Degree times(Degree other) const; // rounds half-even, stays in range
    auto operator<=>(const Degree&) const = default;

    std::string str() const { return dec().str_decimal(); }

private:
    std::int64_t micros_ = 0;
};

inline Degree deg_min(Degree a, Degree b) { return a < b ? a : b; }
inline Degree deg_max(Degree a, Degree b) { return a < b ? b : a; }

} // namespace mcsc
