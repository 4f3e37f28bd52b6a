#pragma once

// Exact arithmetic in Z[zeta], zeta = e^(2*pi*i/2^t), represented on the
// integral basis {1, zeta, ..., zeta^(2^(t-1)-1)} with zeta^(2^(t-1)) = -1.
// Coordinates are checked 64-bit integers; overflow is a hard error.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbent/errors.hpp"

namespace gbent {

inline constexpr unsigned kMaxExponent = 6; // q = 2^t <= 64

namespace detail {

inline int64_t add_checked(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("cyclotomic coordinate overflow in addition");
    return r;
}

inline int64_t sub_checked(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow("cyclotomic coordinate overflow in subtraction");
    return r;
}

inline int64_t mul_checked(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("cyclotomic coordinate overflow in multiplication");
    return r;
}

} // namespace detail

class CycInt {
public:
    // Zero element of Z[zeta_{2^t}].
    explicit CycInt(unsigned t) : t_(check_t(t)), coords_(size_t{1} << (t - 1), 0) {}

    CycInt(unsigned t, std::vector<int64_t> coords) : t_(check_t(t)), coords_(std::move(coords)) {
        if (coords_.size() != (size_t{1} << (t_ - 1)))
            throw ExponentMismatch("coordinate vector has wrong length for exponent " +
                                   std::to_string(t_));
    }

    // The rational constant r.
    static CycInt rational(unsigned t, int64_t r) {
        CycInt v(t);
        v.coords_[0] = r;
        return v;
    }

    // zeta^k, k taken mod 2^t, reduced by zeta^(2^(t-1)) = -1.
    static CycInt root_power(unsigned t, int64_t k) {
        CycInt v(t);
        const int64_t q = int64_t{1} << t;
        const int64_t half = q / 2;
        int64_t r = ((k % q) + q) % q;
        v.coords_[static_cast<size_t>(r % half)] = (r >= half) ? -1 : 1;
        return v;
    }

    unsigned t() const { return t_; }
    size_t degree() const { return coords_.size(); } // 2^(t-1)
    const std::vector<int64_t>& coords() const { return coords_; }
    int64_t operator[](size_t k) const { return coords_[k]; }

    bool is_zero() const {
        for (int64_t c : coords_)
            if (c != 0)
                return false;
        return true;
    }

    // Rational elements have all basis coordinates at positions >= 1 equal to zero.
    bool is_rational() const {
        for (size_t k = 1; k < coords_.size(); ++k)
            if (coords_[k] != 0)
                return false;
        return true;
    }

    CycInt& operator+=(const CycInt& o) {
        match(o);
        for (size_t k = 0; k < coords_.size(); ++k)
            coords_[k] = detail::add_checked(coords_[k], o.coords_[k]);
        return *this;
    }

    CycInt& operator-=(const CycInt& o) {
        match(o);
        for (size_t k = 0; k < coords_.size(); ++k)
            coords_[k] = detail::sub_checked(coords_[k], o.coords_[k]);
        return *this;
    }

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }

    CycInt operator-() const {
        CycInt r(*this);
        for (int64_t& c : r.coords_)
            c = detail::sub_checked(0, c);
        return r;
    }

    // Convolution with wraparound sign flip from zeta^(2^(t-1)) = -1.
    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        a.match(b);
        const size_t d = a.coords_.size();
        CycInt r(a.t_);
        for (size_t i = 0; i < d; ++i) {
            if (a.coords_[i] == 0)
                continue;
            for (size_t j = 0; j < d; ++j) {
                if (b.coords_[j] == 0)
                    continue;
                int64_t term = detail::mul_checked(a.coords_[i], b.coords_[j]);
                size_t k = i + j;
                if (k >= d) {
                    k -= d;
                    term = detail::sub_checked(0, term);
                }
                r.coords_[k] = detail::add_checked(r.coords_[k], term);
            }
        }
        return r;
    }

    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

    // Complex conjugation zeta -> zeta^(-1); an involution.
    CycInt conj() const {
        const size_t d = coords_.size();
        CycInt r(t_);
        r.coords_[0] = coords_[0];
        for (size_t k = 1; k < d; ++k)
            r.coords_[d - k] = detail::sub_checked(0, coords_[k]); // conj(zeta^k) = -zeta^(d-k)
        return r;
    }

    friend bool operator==(const CycInt& a, const CycInt& b) {
        return a.t_ == b.t_ && a.coords_ == b.coords_;
    }

    std::string to_string() const {
        std::string s = "(";
        for (size_t k = 0; k < coords_.size(); ++k) {
            if (k)
                s += ",";
            s += std::to_string(coords_[k]);
        }
        return s + ")";
    }

private:
    static unsigned check_t(unsigned t) {
        if (t < 1 || t > kMaxExponent)
            throw ExponentMismatch("exponent t must be in [1, 6], got " + std::to_string(t));
        return t;
    }

    void match(const CycInt& o) const {
        if (t_ != o.t_)
            throw ExponentMismatch("mixed exponents " + std::to_string(t_) + " and " +
                                   std::to_string(o.t_));
    }

    unsigned t_;
    std::vector<int64_t> coords_;
};

inline CycInt conj(const CycInt& a) { return a.conj(); }

// a * conj(a) when it is a nonnegative rational constant; errors otherwise.
// Intended for spectra and character sums whose squared modulus is known to be
// an ordinary integer; a non-rational result indicates misuse.
inline int64_t norm_squared(const CycInt& a) {
    const CycInt p = a * a.conj();
    if (!p.is_rational() || p[0] < 0)
        throw NotRational("squared modulus " + p.to_string() + " is not a nonnegative integer");
    return p[0];
}

// Tests whether a = 2^half_n * zeta^j for some j, returning j in [0, 2^t).
inline std::optional<unsigned> as_regular_value(const CycInt& a, unsigned half_n) {
    const int64_t mag = int64_t{1} << half_n;
    std::optional<unsigned> j;
    for (size_t k = 0; k < a.degree(); ++k) {
        const int64_t c = a[k];
        if (c == 0)
            continue;
        if (j.has_value() || (c != mag && c != -mag))
            return std::nullopt;
        j = static_cast<unsigned>(k) + (c < 0 ? static_cast<unsigned>(a.degree()) : 0u);
    }
    return j;
}

// Integer weights indexed by Z_q, q = 2^t, t > 1. Returns whether
// sum_k w[k] * zeta^k is rational, which holds exactly when
// w[j] = w[2^(t-1)+j] for 1 <= j <= 2^(t-1)-1. Both tests are evaluated
// and must agree.
inline bool rational_symmetry_holds(const std::vector<int64_t>& weights, unsigned t) {
    if (t < 2 || t > kMaxExponent)
        throw ExponentMismatch("rationality symmetry requires 2 <= t <= 6");
    const size_t q = size_t{1} << t;
    if (weights.size() != q)
        throw ExponentMismatch("weight vector must have length 2^t = " + std::to_string(q));

    CycInt sum(t);
    for (size_t k = 0; k < q; ++k)
        sum += CycInt::root_power(t, static_cast<int64_t>(k)) *
               CycInt::rational(t, weights[k]);
    const bool by_basis = sum.is_rational();

    bool by_symmetry = true;
    const size_t half = q / 2;
    for (size_t j = 1; j < half; ++j)
        by_symmetry = by_symmetry && (weights[j] == weights[half + j]);

    if (by_basis != by_symmetry)
        throw Error("rationality test and coordinate symmetry disagree"); // unreachable
    return by_basis;
}

} // namespace gbent
