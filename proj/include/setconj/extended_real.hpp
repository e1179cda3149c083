#pragma once

#include <compare>
#include <string>

#include "setconj/rational.hpp"

namespace setconj {

// Element of the order-complete lattice of rationals extended by -inf/+inf.
// Two additions live on this lattice: inf_add (dominated by +inf) and
// sup_add (dominated by -inf), each with its own residual.
class ExtReal {
public:
    enum class Tag { NegInf, Finite, PosInf };

    ExtReal() : tag_(Tag::Finite), value_(0) {}
    ExtReal(Rat v) : tag_(Tag::Finite), value_(std::move(v)) {}
    ExtReal(int v) : tag_(Tag::Finite), value_(v) {}

    static ExtReal neg_inf() { return ExtReal(Tag::NegInf); }
    static ExtReal pos_inf() { return ExtReal(Tag::PosInf); }

    bool is_neg_inf() const { return tag_ == Tag::NegInf; }
    bool is_pos_inf() const { return tag_ == Tag::PosInf; }
    bool is_finite() const { return tag_ == Tag::Finite; }

    // Finite part; only meaningful when is_finite().
    const Rat& value() const {
        if (!is_finite()) throw ContractViolation("ExtReal::value on infinite element");
        return value_;
    }

    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        return a.tag_ == b.tag_ && (a.tag_ != Tag::Finite || a.value_ == b.value_);
    }

    friend bool operator<(const ExtReal& a, const ExtReal& b) {
        if (a.tag_ != b.tag_) return rank(a.tag_) < rank(b.tag_);
        return a.tag_ == Tag::Finite && a.value_ < b.value_;
    }
    friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a < b || a == b; }
    friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
    friend bool operator>=(const ExtReal& a, const ExtReal& b) { return b <= a; }

private:
    explicit ExtReal(Tag t) : tag_(t), value_(0) {}
    static int rank(Tag t) { return t == Tag::NegInf ? -1 : t == Tag::PosInf ? 1 : 0; }

    Tag tag_;
    Rat value_;
};

// r (+) s, the extension of + whose unit-breaking cases resolve toward +inf:
// (+inf) (+) r = +inf for every r, including r = -inf.
inline ExtReal inf_add(const ExtReal& r, const ExtReal& s) {
    if (r.is_pos_inf() || s.is_pos_inf()) return ExtReal::pos_inf();
    if (r.is_neg_inf() || s.is_neg_inf()) return ExtReal::neg_inf();
    return ExtReal(r.value() + s.value());
}

// r (#) s, resolving toward -inf: (-inf) (#) r = -inf for every r.
inline ExtReal sup_add(const ExtReal& r, const ExtReal& s) {
    if (r.is_neg_inf() || s.is_neg_inf()) return ExtReal::neg_inf();
    if (r.is_pos_inf() || s.is_pos_inf()) return ExtReal::pos_inf();
    return ExtReal(r.value() + s.value());
}

// Case table for inf{t : r <= inf_add(s, t)}.
inline ExtReal inf_residual(const ExtReal& r, const ExtReal& s) {
    if (r.is_neg_inf() || s.is_pos_inf()) return ExtReal::neg_inf();
    if (r.is_pos_inf() || s.is_neg_inf()) return ExtReal::pos_inf();
    return ExtReal(r.value() - s.value());
}

// Case table for sup{t : sup_add(s, t) <= r}.
inline ExtReal sup_residual(const ExtReal& r, const ExtReal& s) {
    if (r.is_pos_inf() || s.is_neg_inf()) return ExtReal::pos_inf();
    if (r.is_neg_inf() || s.is_pos_inf()) return ExtReal::neg_inf();
    return ExtReal(r.value() - s.value());
}

// Order-reversing involution exchanging the two additions.
inline ExtReal negate(const ExtReal& r) {
    if (r.is_pos_inf()) return ExtReal::neg_inf();
    if (r.is_neg_inf()) return ExtReal::pos_inf();
    return ExtReal(-r.value());
}

// t * r with t*(+-inf) = +-inf for t > 0 and 0*(+-inf) = 0.
inline ExtReal scale(const Rat& t, const ExtReal& r) {
    if (t == 0) return ExtReal(Rat(0));
    if (t < 0) return negate(scale(-t, r));
    if (!r.is_finite()) return r;
    return ExtReal(t * r.value());
}

inline std::string to_string(const ExtReal& r) {
    if (r.is_neg_inf()) return "-inf";
    if (r.is_pos_inf()) return "+inf";
    return to_string(r.value());
}

inline ExtReal parse_ext_real(const std::string& text) {
    if (text == "-inf") return ExtReal::neg_inf();
    if (text == "+inf") return ExtReal::pos_inf();
    return ExtReal(parse_rat(text));
}

} // namespace setconj
