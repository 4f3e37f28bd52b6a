#pragma once

// Vectorial gbent functions F: V_n -> Z_q^m: component combinations, the
// all-components-gbent test, the m <= n/(2t) dimension gate, and the
// spread-bijection construction that attains it.

#include <cstdint>
#include <string>
#include <vector>

#include "gbent/constructions.hpp"
#include "gbent/cyclotomic.hpp"
#include "gbent/errors.hpp"
#include "gbent/gbfunc.hpp"
#include "gbent/parallel.hpp"
#include "gbent/space.hpp"

namespace gbent {

// A tuple c in Z_q^m, least-significant coordinate first in the flat index.
using ZqVec = std::vector<uint8_t>;

inline size_t zq_vec_index(const ZqVec& c, unsigned q) {
    size_t idx = 0;
    for (size_t j = c.size(); j-- > 0;)
        idx = idx * q + c[j];
    return idx;
}

inline ZqVec zq_vec_from_index(size_t idx, unsigned q, unsigned m) {
    ZqVec c(m);
    for (unsigned j = 0; j < m; ++j) {
        c[j] = static_cast<uint8_t>(idx % q);
        idx /= q;
    }
    return c;
}

class VecGBFunc {
public:
    explicit VecGBFunc(std::vector<GBFunc> components) : components_(std::move(components)) {
        if (components_.empty())
            throw BadParameters("need at least one component function");
        for (const GBFunc& f : components_)
            if (f.n() != components_[0].n() || f.t() != components_[0].t() ||
                !(f.form() == components_[0].form()))
                throw FormMismatch("components must share n, t and inner-product form");
    }

    unsigned n() const { return components_[0].n(); }
    unsigned t() const { return components_[0].t(); }
    unsigned q() const { return components_[0].q(); }
    unsigned m() const { return static_cast<unsigned>(components_.size()); }
    const InnerForm& form() const { return components_[0].form(); }
    const std::vector<GBFunc>& components() const { return components_; }

    ZqVec operator()(Point x) const {
        ZqVec v(m());
        for (unsigned j = 0; j < m(); ++j)
            v[j] = components_[j](x);
        return v;
    }

private:
    std::vector<GBFunc> components_;
};

// The component function c.F = c_1 f_1 + ... + c_m f_m mod q, c != 0.
inline GBFunc component(const VecGBFunc& f, const ZqVec& c) {
    if (c.size() != f.m())
        throw BadParameters("coefficient vector must have m entries");
    bool all_zero = true;
    for (uint8_t cj : c)
        all_zero = all_zero && cj == 0;
    if (all_zero)
        throw ZeroCoefficientVector("component requires a nonzero coefficient vector");

    const unsigned mask = f.q() - 1;
    std::vector<uint8_t> table(size_t{1} << f.n(), 0);
    for (unsigned j = 0; j < f.m(); ++j) {
        if (c[j] > mask)
            throw BadParameters("coefficient is not a residue mod q");
        const auto& comp = f.components()[j].table();
        for (size_t x = 0; x < table.size(); ++x)
            table[x] = static_cast<uint8_t>((table[x] + c[j] * comp[x]) & mask);
    }
    return GBFunc(f.t(), f.form(), std::move(table));
}

// True iff all q^m - 1 nonzero component functions are gbent. Component
// checks may run on several worker threads; the verdict is their conjunction.
inline bool is_vectorial_gbent(const VecGBFunc& f, unsigned threads = 1) {
    const size_t total = [&] {
        size_t p = 1;
        for (unsigned j = 0; j < f.m(); ++j)
            p *= f.q();
        return p;
    }();
    return parallel_all_of(total - 1, threads, [&](size_t i) {
        return is_gbent(component(f, zq_vec_from_index(i + 1, f.q(), f.m())));
    });
}

// The dimension gate m <= n/(2t) for vectorial gbent functions on V_n, n even,
// n > 2.
inline bool nyberg_gate(unsigned n, unsigned t, unsigned m) {
    if (n % 2 || n <= 2)
        throw OddDimension("the bound applies to even n > 2, got n = " + std::to_string(n));
    return 2 * t * m <= n;
}

// Spread-bijection construction: f_j = phi_j(s) on U_s \ {0} for s >= 1 and 0
// on the first member U_0; phi must be a bijection onto Z_q^m, which forces
// m = n/(2t) exactly.
inline VecGBFunc spread_bijection_vectorial(unsigned t, const InnerForm& form,
                                            const PartialSpread& spread,
                                            const std::vector<ZqVec>& phi, unsigned m) {
    const unsigned n = spread.n;
    if (form.n() != n)
        throw DimensionError("form and spread dimensions differ");
    if (!nyberg_gate(n, t, m))
        throw BoundViolated("m = " + std::to_string(m) + " exceeds the bound n/(2t) = " +
                            std::to_string(n) + "/" + std::to_string(2 * t));
    if (2 * t * m != n)
        throw BadParameters("a bijection onto Z_q^m needs m = n/(2t) exactly");
    if (!is_complete_spread(spread))
        throw IncompleteSpread("need a complete spread with 2^(n/2)+1 members");

    const unsigned q = 1u << t;
    const size_t half_count = size_t{1} << (n / 2); // = q^m
    if (phi.size() != half_count)
        throw NotABijection("phi must have exactly 2^(n/2) entries");
    std::vector<bool> seen(half_count, false);
    for (const ZqVec& v : phi) {
        if (v.size() != m)
            throw NotABijection("phi values must lie in Z_q^m");
        for (uint8_t c : v)
            if (c >= q)
                throw NotABijection("phi value coordinate out of range");
        const size_t idx = zq_vec_index(v, q);
        if (seen[idx])
            throw NotABijection("phi repeats the value with index " + std::to_string(idx));
        seen[idx] = true;
    }

    std::vector<GBFunc> components;
    components.reserve(m);
    for (unsigned j = 0; j < m; ++j) {
        std::vector<uint8_t> values(phi.size());
        for (size_t s = 0; s < phi.size(); ++s)
            values[s] = phi[s][j];
        // member 0 carries the zero value; phi(s) sits on member s, 1-based
        std::vector<uint8_t> table(size_t{1} << n, 0);
        for (size_t s = 0; s < phi.size(); ++s)
            for (Point x : spread.members[s + 1].points())
                if (x != 0)
                    table[x] = values[s];
        components.emplace_back(t, form, std::move(table));
    }
    return VecGBFunc(std::move(components));
}

// The vanishing-sum identity behind the spread-bijection construction:
// sum_s zeta^(c . phi(s)) = 0 for every nonzero c.
inline bool bijection_character_sums_vanish(unsigned t, const std::vector<ZqVec>& phi,
                                            unsigned m) {
    const unsigned q = 1u << t;
    size_t total = 1;
    for (unsigned j = 0; j < m; ++j)
        total *= q;
    for (size_t idx = 1; idx < total; ++idx) {
        const ZqVec c = zq_vec_from_index(idx, q, m);
        CycInt sum(t);
        for (const ZqVec& v : phi) {
            unsigned dot = 0;
            for (unsigned j = 0; j < m; ++j)
                dot += c[j] * v[j];
            sum += CycInt::root_power(t, dot);
        }
        if (!sum.is_zero())
            return false;
    }
    return true;
}

} // namespace gbent
