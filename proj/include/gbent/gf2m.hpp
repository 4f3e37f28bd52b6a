#pragma once

// Exact arithmetic in GF(2^m), 1 <= m <= 16. Elements are bit-packed
// polynomial-basis coordinates: bit i of the value is the coefficient of X^i.

#include <cstdint>
#include <string>

#include "gbent/errors.hpp"

namespace gbent {

inline constexpr unsigned kMaxFieldDegree = 16;

struct FieldElem {
    uint32_t coeffs = 0; // bit i = coefficient of X^i, no bits at positions >= m
    uint16_t m = 0;

    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

namespace detail {

// Degree of a nonzero F_2[X] polynomial given as a bitmask; -1 for the zero polynomial.
inline int poly_degree(uint64_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

// Remainder of a mod b in F_2[X], b != 0.
inline uint64_t poly_mod(uint64_t a, uint64_t b) {
    const int db = poly_degree(b);
    int da = poly_degree(a);
    while (da >= db) {
        a ^= b << (da - db);
        da = poly_degree(a);
    }
    return a;
}

} // namespace detail

// True iff p is irreducible over F_2, by trial division against every
// polynomial of degree 1..deg(p)/2.
inline bool poly_irreducible(uint32_t p) {
    const int d = detail::poly_degree(p);
    if (d <= 0)
        return false;
    for (int e = 1; 2 * e <= d; ++e) {
        for (uint64_t q = uint64_t{1} << e; q < (uint64_t{2} << e); ++q) {
            if (detail::poly_mod(p, q) == 0)
                return false;
        }
    }
    return true;
}

// Smallest irreducible polynomial of degree m under the integer encoding.
inline uint32_t default_modulus(unsigned m) {
    for (uint32_t p = uint32_t{1} << m; p < (uint32_t{2} << m); ++p) {
        if (poly_irreducible(p))
            return p;
    }
    throw BadModulus("no irreducible polynomial of degree " + std::to_string(m));
}

class FieldCtx {
public:
    explicit FieldCtx(unsigned m) : FieldCtx(m, default_modulus(m)) {}

    FieldCtx(unsigned m, uint32_t modulus) : m_(m), modulus_(modulus) {
        if (m < 1 || m > kMaxFieldDegree)
            throw BadModulus("extension degree must be in [1, 16], got " + std::to_string(m));
        if (detail::poly_degree(modulus) != static_cast<int>(m))
            throw BadModulus("modulus degree does not match extension degree");
        if (!poly_irreducible(modulus))
            throw BadModulus("modulus is reducible over F_2");
    }

    unsigned m() const { return m_; }
    uint32_t modulus() const { return modulus_; }
    uint32_t order() const { return uint32_t{1} << m_; }

    FieldElem elem(uint32_t coeffs) const {
        if (coeffs >> m_)
            throw DegreeMismatch("element value out of range for GF(2^" + std::to_string(m_) + ")");
        return FieldElem{coeffs, static_cast<uint16_t>(m_)};
    }

    FieldElem zero() const { return elem(0); }
    FieldElem one() const { return elem(1); }

    FieldElem add(FieldElem a, FieldElem b) const {
        check(a);
        check(b);
        return FieldElem{a.coeffs ^ b.coeffs, static_cast<uint16_t>(m_)};
    }

    FieldElem mul(FieldElem a, FieldElem b) const {
        check(a);
        check(b);
        // carryless multiply, then reduce
        uint64_t acc = 0;
        uint64_t x = a.coeffs;
        uint32_t y = b.coeffs;
        while (y) {
            if (y & 1)
                acc ^= x;
            x <<= 1;
            y >>= 1;
        }
        return FieldElem{static_cast<uint32_t>(detail::poly_mod(acc, modulus_)),
                         static_cast<uint16_t>(m_)};
    }

    // inv(0) = 0 by the 1/0 = 0 convention; otherwise the multiplicative inverse.
    FieldElem inv(FieldElem a) const {
        check(a);
        if (a.coeffs == 0)
            return a;
        // a^(2^m - 2) by square-and-multiply
        FieldElem result = one();
        FieldElem base = a;
        uint32_t e = order() - 2;
        while (e) {
            if (e & 1)
                result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

    // Tr(a) = a + a^2 + ... + a^(2^(m-1)), valued in {0, 1}.
    unsigned trace(FieldElem a) const {
        check(a);
        FieldElem sum = a;
        FieldElem p = a;
        for (unsigned i = 1; i < m_; ++i) {
            p = mul(p, p);
            sum = add(sum, p);
        }
        return sum.coeffs; // the trace lies in the prime field
    }

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

private:
    void check(FieldElem a) const {
        if (a.m != m_)
            throw DegreeMismatch("field element of degree " + std::to_string(a.m) +
                                 " used in GF(2^" + std::to_string(m_) + ")");
    }

    unsigned m_;
    uint32_t modulus_;
};

} // namespace gbent
