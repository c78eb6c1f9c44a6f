#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace projkit {

// Extended nonnegative integer: a finite value or infinity.
// Addition absorbs infinity; inf == inf compares true.
class ExtInt {
public:
    constexpr ExtInt() = default;
    constexpr ExtInt(long long v) : v_(v) {
        if (v < 0) throw std::invalid_argument("ExtInt: negative value");
    }

    static constexpr ExtInt inf() {
        ExtInt e;
        e.v_ = kInf;
        return e;
    }

    constexpr bool is_inf() const { return v_ == kInf; }
    constexpr bool is_finite() const { return v_ != kInf; }

    constexpr long long value() const {
        if (is_inf()) throw std::logic_error("ExtInt: value() on infinity");
        return v_;
    }

    friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
        if (a.is_inf() || b.is_inf()) return inf();
        if (a.v_ > kInf - b.v_) return inf();  // saturate
        return ExtInt(a.v_ + b.v_);
    }
    ExtInt& operator+=(ExtInt o) { return *this = *this + o; }

    friend constexpr ExtInt operator*(ExtInt a, long long s) {
        if (s < 0) throw std::invalid_argument("ExtInt: negative scale");
        if (a.is_inf()) return inf();
        if (s != 0 && a.v_ > kInf / s) return inf();
        return ExtInt(a.v_ * s);
    }

    friend constexpr bool operator==(ExtInt a, ExtInt b) { return a.v_ == b.v_; }
    friend constexpr auto operator<=>(ExtInt a, ExtInt b) { return a.v_ <=> b.v_; }

    friend constexpr ExtInt min(ExtInt a, ExtInt b) { return a < b ? a : b; }
    friend constexpr ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

    std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }

private:
    static constexpr long long kInf = std::numeric_limits<long long>::max();
    long long v_ = 0;
};

inline std::string to_string(ExtInt e) { return e.str(); }

}  // namespace projkit
