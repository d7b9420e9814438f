// marked_value.hpp — a real number that may instead be "infinite" or "undefined"

#pragma once

#include <cmath>
#include <limits>

namespace qbt {

/// Temperatures and heat capacities are total functions of the state: where
/// the closed forms diverge or are meaningless the result is a marker, not an
/// exception.
class MarkedValue {
public:
    enum class Kind { finite, infinite, undefined };

    static MarkedValue finite(double x) { return MarkedValue(Kind::finite, x); }
    /// Signed infinity; sign < 0 gives -inf, otherwise +inf.
    static MarkedValue infinite(double sign = 1.0) {
        return MarkedValue(Kind::infinite, sign < 0.0 ? -std::numeric_limits<double>::infinity()
                                                      : std::numeric_limits<double>::infinity());
    }
    static MarkedValue undefined() { return MarkedValue(Kind::undefined, std::numeric_limits<double>::quiet_NaN()); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_infinite() const { return kind_ == Kind::infinite; }
    bool is_undefined() const { return kind_ == Kind::undefined; }
    /// Finite value, +/-infinity, or NaN for undefined.
    double value() const { return value_; }
    /// True only for finite, nonzero values.
    bool is_regular() const { return kind_ == Kind::finite && value_ != 0.0; }

private:
    MarkedValue(Kind k, double v) : kind_(k), value_(v) {}
    Kind kind_;
    double value_;
};

} // namespace qbt
