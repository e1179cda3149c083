#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <string>
#include <vector>

#include "setconj/errors.hpp"

namespace setconj {

namespace mp = boost::multiprecision;

// Exact rational scalar.  Expression templates are disabled so values behave
// like ordinary regular types (auto, vectors, comparisons).
using Int = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rat = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

using RatVec = std::vector<Rat>;

// Dense row-major matrix, sized rows x cols.  Deliberately minimal: the
// dimensions here never exceed desk scale.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> data;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Rat& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    RatVec row(std::size_t r) const {
        return RatVec(data.begin() + static_cast<std::ptrdiff_t>(r * cols),
                      data.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
    }

    // y = M x
    RatVec apply(const RatVec& x) const {
        if (x.size() != cols) throw ContractViolation("matrix/vector shape mismatch");
        RatVec y(rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) y[i] += at(i, j) * x[j];
        return y;
    }

    // y = M^T x  (the adjoint; used for dual operators)
    RatVec apply_transposed(const RatVec& x) const {
        if (x.size() != rows) throw ContractViolation("matrix/vector shape mismatch");
        RatVec y(cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) y[j] += at(i, j) * x[i];
        return y;
    }

    RatMatrix transposed() const {
        RatMatrix t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const RatMatrix&) const = default;
};

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw ContractViolation("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero_vec(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw ContractViolation("vec_add: length mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw ContractViolation("vec_sub: length mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec vec_scale(const Rat& t, const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
}

inline RatVec vec_neg(const RatVec& a) { return vec_scale(Rat(-1), a); }

// -1 / 0 / +1 three-way comparison in lexicographic order.
inline int lex_compare(const RatVec& a, const RatVec& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    if (a.size() < b.size()) return -1;
    if (a.size() > b.size()) return 1;
    return 0;
}

// Scales v by the unique positive rational that makes all entries integer and
// coprime.  The zero vector is returned unchanged.  Orientation (the sign of
// each entry) is preserved since the factor is positive.
inline RatVec scale_to_coprime(const RatVec& v) {
    Int den_lcm = 1;
    for (const Rat& x : v) den_lcm = lcm(den_lcm, denominator(x));
    Int num_gcd = 0;
    for (const Rat& x : v) num_gcd = gcd(num_gcd, numerator(x) * (den_lcm / denominator(x)));
    if (num_gcd == 0) return v;
    RatVec r(v.size());
    Rat factor(den_lcm, num_gcd);
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * factor;
    return r;
}

inline std::string to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

// Parses "p", "-p" or "p/q".  Rejects zero denominators and garbage instead
// of silently truncating.
inline Rat parse_rat(const std::string& text) {
    auto bad = [&]() -> ParseError { return ParseError("malformed rational '" + text + "'", text); };
    if (text.empty()) throw bad();
    std::size_t slash = text.find('/');
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!is_int(num) || !is_int(den)) throw bad();
    Int n(num), d(den);
    if (d == 0) throw bad();
    return Rat(n, d);
}

} // namespace setconj
