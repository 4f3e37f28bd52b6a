#pragma once

// Generalized Boolean functions V_n -> Z_q, q = 2^t, their exact generalized
// Walsh-Hadamard spectra over Z[zeta], and the verification battery: gbent,
// dual, inversion identity, value distribution.

#include <cstdint>
#include <string>
#include <vector>

#include "gbent/cyclotomic.hpp"
#include "gbent/errors.hpp"
#include "gbent/space.hpp"

namespace gbent {

class GBFunc {
public:
    GBFunc(unsigned t, InnerForm form, std::vector<uint8_t> table)
        : t_(t), form_(std::move(form)), table_(std::move(table)) {
        if (t < 1 || t > kMaxExponent)
            throw ExponentMismatch("exponent t must be in [1, 6], got " + std::to_string(t));
        if (table_.size() != size_t{1} << form_.n())
            throw DimensionError("value table must have 2^n entries");
        for (uint8_t v : table_)
            if (v >> t)
                throw DimensionError("table entry " + std::to_string(v) + " is not a residue mod 2^" +
                                     std::to_string(t));
    }

    unsigned n() const { return form_.n(); }
    unsigned t() const { return t_; }
    unsigned q() const { return 1u << t_; }
    const InnerForm& form() const { return form_; }
    const std::vector<uint8_t>& table() const { return table_; }
    uint8_t operator()(Point x) const { return table_[x]; }

    friend bool operator==(const GBFunc& a, const GBFunc& b) {
        return a.t_ == b.t_ && a.form_ == b.form_ && a.table_ == b.table_;
    }

private:
    unsigned t_;
    InnerForm form_;
    std::vector<uint8_t> table_;
};

// In-place unnormalized Walsh-Hadamard butterfly:
// a[u] <- sum_x (-1)^(dot(u, x)) a[x].
inline void fwht(std::vector<int64_t>& a) {
    const size_t n_points = a.size();
    for (size_t h = 1; h < n_points; h <<= 1) {
        for (size_t i = 0; i < n_points; i += h << 1) {
            for (size_t j = i; j < i + h; ++j) {
                const int64_t x = a[j];
                const int64_t y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
        }
    }
}

namespace detail {

// Signed level-set planes of f: plane r holds the dot-form Walsh transform of
// g_r(x) = [f(x) = r] - [f(x) = r + 2^(t-1)], so that the spectrum value at u
// is sum_r plane[r][G*u] * zeta^r. Only 2^(t-1) planes are needed because
// zeta^(2^(t-1)) = -1 folds the upper residues in with a sign.
inline std::vector<std::vector<int64_t>> level_planes(const GBFunc& f) {
    const size_t size = size_t{1} << f.n();
    const unsigned half_q = f.q() / 2;
    std::vector<std::vector<int64_t>> planes(half_q, std::vector<int64_t>(size, 0));
    for (size_t x = 0; x < size; ++x) {
        const unsigned v = f(static_cast<Point>(x));
        planes[v % half_q][x] += (v >= half_q) ? -1 : 1;
    }
    for (auto& plane : planes)
        fwht(plane);
    return planes;
}

inline CycInt spectrum_value(const std::vector<std::vector<int64_t>>& planes, unsigned t,
                             Point mapped_u) {
    std::vector<int64_t> coords(planes.size());
    for (size_t r = 0; r < planes.size(); ++r)
        coords[r] = planes[r][mapped_u];
    return CycInt(t, std::move(coords));
}

} // namespace detail

struct Spectrum {
    unsigned n = 0;
    unsigned t = 0;
    std::vector<CycInt> values; // indexed by u

    const CycInt& operator[](Point u) const { return values[u]; }
};

// Exact spectrum H(u) = sum_x zeta^f(x) * (-1)^<u,x> under the function's
// inner-product form, via one integer butterfly per signed level set.
// Cost O(q/2 * n * 2^n). The Parseval mass sum_u |H(u)|^2 = 2^(2n) is
// asserted on every computed spectrum.
inline Spectrum walsh_transform(const GBFunc& f) {
    const auto planes = detail::level_planes(f);
    const auto gram = f.form().gram_rows();
    const size_t size = size_t{1} << f.n();

    Spectrum spec;
    spec.n = f.n();
    spec.t = f.t();
    spec.values.reserve(size);
    for (size_t u = 0; u < size; ++u)
        spec.values.push_back(detail::spectrum_value(
            planes, f.t(), f.form().gram_map(static_cast<Point>(u), gram)));

    // sum_u |H(u)|^2 = 2^(2n); the individual terms live in the real subfield,
    // only their sum is an ordinary integer
    std::vector<__int128> mass(size_t{1} << (f.t() - 1), 0);
    for (const CycInt& v : spec.values) {
        const CycInt p = v * v.conj();
        for (size_t k = 0; k < p.degree(); ++k)
            mass[k] += p[k];
    }
    bool ok = mass[0] == static_cast<__int128>(1) << (2 * f.n());
    for (size_t k = 1; k < mass.size(); ++k)
        ok = ok && mass[k] == 0;
    if (!ok)
        throw Error("Parseval mass violated; transform is inconsistent");
    return spec;
}

// True iff |H(u)|^2 = 2^n exactly for every u. Works on flat transform planes
// and never materializes a Spectrum.
inline bool is_gbent(const GBFunc& f) {
    const auto planes = detail::level_planes(f);
    const auto gram = f.form().gram_rows();
    const size_t size = size_t{1} << f.n();
    const CycInt target = CycInt::rational(f.t(), int64_t{1} << f.n());
    for (size_t u = 0; u < size; ++u) {
        const CycInt h = detail::spectrum_value(
            planes, f.t(), f.form().gram_map(static_cast<Point>(u), gram));
        if (!(h * h.conj() == target))
            return false;
    }
    return true;
}

// The dual f* with 2^(n/2) * zeta^(f*(u)) = H(u). Total for every gbent f
// with q = 2^t; a regularity failure past the gbent check indicates a library
// bug and raises RegularityViolation.
inline GBFunc dual(const GBFunc& f) {
    if (f.n() % 2)
        throw OddDimension("dual requires even n, got " + std::to_string(f.n()));
    const auto planes = detail::level_planes(f);
    const auto gram = f.form().gram_rows();
    const size_t size = size_t{1} << f.n();
    const CycInt target = CycInt::rational(f.t(), int64_t{1} << f.n());

    std::vector<uint8_t> table(size);
    for (size_t u = 0; u < size; ++u) {
        const CycInt h = detail::spectrum_value(
            planes, f.t(), f.form().gram_map(static_cast<Point>(u), gram));
        if (!(h * h.conj() == target))
            throw NotGbent("dual undefined: |H(u)|^2 != 2^n at u = " + std::to_string(u));
        const auto j = as_regular_value(h, f.n() / 2);
        if (!j)
            throw RegularityViolation("Walsh value " + h.to_string() + " at u = " +
                                      std::to_string(u) + " is not 2^(n/2) * zeta^j");
        table[u] = static_cast<uint8_t>(*j);
    }
    return GBFunc(f.t(), f.form(), std::move(table));
}

// Fourier inversion: sum_u (-1)^<u,y> H(u) = 2^n * zeta^f(y) for every y,
// gbent or not. Checked exactly.
inline bool inversion_identity_holds(const GBFunc& f) {
    // The spectrum planes indexed by u (already form-mapped), transformed once
    // more, evaluate the left side at G*y.
    const auto planes = detail::level_planes(f);
    const auto gram = f.form().gram_rows();
    const size_t size = size_t{1} << f.n();

    std::vector<std::vector<int64_t>> lhs(planes.size(), std::vector<int64_t>(size));
    for (size_t r = 0; r < planes.size(); ++r) {
        for (size_t u = 0; u < size; ++u)
            lhs[r][u] = planes[r][f.form().gram_map(static_cast<Point>(u), gram)];
        fwht(lhs[r]);
    }

    const int64_t scale = int64_t{1} << f.n();
    for (size_t y = 0; y < size; ++y) {
        const Point gy = f.form().gram_map(static_cast<Point>(y), gram);
        CycInt expect = CycInt::root_power(f.t(), f(static_cast<Point>(y))) *
                        CycInt::rational(f.t(), scale);
        if (!(detail::spectrum_value(lhs, f.t(), gy) == expect))
            return false;
    }
    return true;
}

// b_j = |f^{-1}(j)| for j in Z_q.
inline std::vector<uint64_t> value_distribution(const GBFunc& f) {
    std::vector<uint64_t> counts(f.q(), 0);
    for (uint8_t v : f.table())
        ++counts[v];
    return counts;
}

// The gbent value-distribution pattern: exactly one k in [0, 2^(t-1)) with
// b_(2^(t-1)+k) = b_k +- 2^(n/2), and b_(2^(t-1)+j) = b_j for every other j.
inline bool distribution_pattern_holds(const std::vector<uint64_t>& counts, unsigned n,
                                       unsigned t) {
    if (n % 2)
        throw OddDimension("distribution pattern requires even n");
    if (counts.size() != size_t{1} << t)
        throw ExponentMismatch("distribution must have 2^t entries");
    const size_t half = counts.size() / 2;
    const int64_t step = int64_t{1} << (n / 2);
    size_t jumps = 0;
    for (size_t k = 0; k < half; ++k) {
        const int64_t diff = static_cast<int64_t>(counts[half + k]) -
                             static_cast<int64_t>(counts[k]);
        if (diff == step || diff == -step)
            ++jumps;
        else if (diff != 0)
            return false;
    }
    return jumps == 1;
}

} // namespace gbent
