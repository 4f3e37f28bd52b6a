#pragma once

// Relative-difference-set certification for subsets of V_n x Z_q^m relative
// to N = {0} x Z_q^m, by two independent routes: brute-force difference
// counting and exact character sums.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbent/cyclotomic.hpp"
#include "gbent/errors.hpp"
#include "gbent/space.hpp"
#include "gbent/vectorial.hpp"

namespace gbent {

struct RDSParams {
    uint64_t mu = 0;     // index of N in G
    uint64_t nu = 0;     // |N|
    uint64_t k = 0;      // |R|
    uint64_t lambda = 0; // difference multiplicity off N
};

// A subset of the group V_n x Z_q^m. The graph_of factory produces the graph
// {(x, F(x))} of a vectorial function, whose first coordinates exhaust V_n.
struct GraphSet {
    unsigned n = 0;
    unsigned t = 0;
    unsigned m = 0;
    InnerForm form = InnerForm::dot(1);
    std::vector<std::pair<Point, ZqVec>> elements;

    unsigned q() const { return 1u << t; }
    uint64_t zq_count() const {
        uint64_t p = 1;
        for (unsigned j = 0; j < m; ++j)
            p *= q();
        return p;
    }
    uint64_t group_order() const { return (uint64_t{1} << n) * zq_count(); }
};

inline GraphSet graph_of(const VecGBFunc& f) {
    GraphSet r;
    r.n = f.n();
    r.t = f.t();
    r.m = f.m();
    r.form = f.form();
    r.elements.reserve(size_t{1} << f.n());
    for (size_t x = 0; x < size_t{1} << f.n(); ++x)
        r.elements.emplace_back(static_cast<Point>(x), f(static_cast<Point>(x)));
    return r;
}

inline GraphSet graph_of(const GBFunc& f) {
    return graph_of(VecGBFunc({f}));
}

namespace detail {

inline std::vector<size_t> flat_indices(const GraphSet& r) {
    std::vector<size_t> flat;
    flat.reserve(r.elements.size());
    for (const auto& [x, z] : r.elements) {
        if (x >> r.n)
            throw BadParameters("set element outside V_" + std::to_string(r.n));
        if (z.size() != r.m)
            throw BadParameters("set element outside Z_q^" + std::to_string(r.m));
        flat.push_back(size_t{x} * r.zq_count() + zq_vec_index(z, r.q()));
    }
    std::vector<size_t> sorted = flat;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw BadParameters("set contains a repeated element");
    return flat;
}

inline void check_params(const GraphSet& r, const RDSParams& p) {
    if (p.mu != uint64_t{1} << r.n || p.nu != r.zq_count())
        throw BadParameters("parameters do not match the group V_n x Z_q^m");
    if (p.k != r.elements.size())
        throw BadParameters("k must equal the set size");
}

} // namespace detail

// Difference counting: every g outside N = {0} x Z_q^m has exactly lambda
// representations r1 - r2 with r1, r2 in R, and no nonzero g in N has any.
// O(|R|^2); group order capped at 2^16.
inline bool check_rds_counting(const GraphSet& r, const RDSParams& params) {
    detail::check_params(r, params);
    if (r.group_order() > (uint64_t{1} << 16))
        throw BadParameters("group order exceeds the 2^16 counting cap");
    detail::flat_indices(r); // element validation

    const unsigned q = r.q();
    const uint64_t zqc = r.zq_count();
    std::vector<uint64_t> reps(r.group_order(), 0);
    for (const auto& [x1, z1] : r.elements) {
        for (const auto& [x2, z2] : r.elements) {
            const Point dx = x1 ^ x2;
            size_t dz = 0;
            for (size_t j = z1.size(); j-- > 0;)
                dz = dz * q + ((z1[j] + q - z2[j]) & (q - 1));
            ++reps[size_t{dx} * zqc + dz];
        }
    }

    for (size_t g = 0; g < reps.size(); ++g) {
        const bool in_n = g < zqc; // dx = 0
        if (in_n) {
            if (g != 0 && reps[g] != 0)
                return false;
        } else if (reps[g] != params.lambda) {
            return false;
        }
    }
    return true;
}

struct CharacterFailure {
    Point u = 0;
    ZqVec c;          // the failing character's Z_q^m part
    CycInt chi;       // the character sum
    int64_t expected; // the required |chi|^2
};

// Character criterion: |chi(R)|^2 must be k^2 for the principal character,
// k - lambda*nu for the nonprincipal characters trivial on N (c = 0, u != 0),
// and k otherwise. Returns the first failing character, or nullopt if the set
// is certified. All sums are exact.
inline std::optional<CharacterFailure> rds_character_failure(const GraphSet& r,
                                                             const RDSParams& params) {
    detail::check_params(r, params);
    detail::flat_indices(r); // element validation

    const auto gram = r.form.gram_rows();
    const uint64_t points = uint64_t{1} << r.n;
    const uint64_t zqc = r.zq_count();
    for (uint64_t u = 0; u < points; ++u) {
        for (uint64_t ci = 0; ci < zqc; ++ci) {
            const ZqVec c = zq_vec_from_index(ci, r.q(), r.m);
            CycInt chi(r.t);
            for (const auto& [x, z] : r.elements) {
                unsigned e = 0;
                for (unsigned j = 0; j < r.m; ++j)
                    e += c[j] * z[j];
                const unsigned sign =
                    r.form.ip(static_cast<Point>(u), x) ? r.q() / 2 : 0; // (-1) = zeta^(q/2)
                chi += CycInt::root_power(r.t, e + sign);
            }
            int64_t expected;
            if (u == 0 && ci == 0)
                expected = static_cast<int64_t>(params.k * params.k);
            else if (ci == 0)
                expected = static_cast<int64_t>(params.k) -
                           static_cast<int64_t>(params.lambda * params.nu);
            else
                expected = static_cast<int64_t>(params.k);
            if (!(chi * chi.conj() == CycInt::rational(r.t, expected)))
                return CharacterFailure{static_cast<Point>(u), c, chi, expected};
        }
    }
    return std::nullopt;
}

inline bool check_rds_characters(const GraphSet& r, const RDSParams& params) {
    return !rds_character_failure(r, params).has_value();
}

} // namespace gbent
