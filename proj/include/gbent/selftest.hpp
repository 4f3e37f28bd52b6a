#pragma once

// The acceptance battery: ten exact, seeded, desk-scale checks covering the
// whole library. Used by the standalone acceptance runner and by the CLI
// selftest subcommand; each criterion prints one pass/fail line.

#include <chrono>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gbent/constructions.hpp"
#include "gbent/cyclotomic.hpp"
#include "gbent/gbfunc.hpp"
#include "gbent/gf2m.hpp"
#include "gbent/rds.hpp"
#include "gbent/space.hpp"
#include "gbent/vectorial.hpp"

namespace gbent::selftest {

inline constexpr uint32_t kDefaultSeed = 20160607;

struct CriterionResult {
    CriterionResult(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

    int id;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

namespace detail {

// O(4^n) double-sum evaluation straight from the definition, independent of
// the butterfly path: exponent counting per u, then one basis combination.
inline CycInt naive_walsh_value(const GBFunc& f, Point u) {
    std::vector<int64_t> exponent_counts(f.q(), 0);
    for (Point x = 0; x < (uint32_t{1} << f.n()); ++x)
        ++exponent_counts[(f(x) + (f.form().ip(u, x) ? f.q() / 2 : 0)) % f.q()];
    CycInt sum(f.t());
    for (unsigned e = 0; e < f.q(); ++e)
        sum += CycInt::rational(f.t(), exponent_counts[e]) * CycInt::root_power(f.t(), e);
    return sum;
}

inline std::vector<ZqVec> random_bijection(std::mt19937& rng, unsigned t, unsigned m) {
    const unsigned q = 1u << t;
    size_t total = 1;
    for (unsigned j = 0; j < m; ++j)
        total *= q;
    std::vector<ZqVec> phi(total);
    for (size_t i = 0; i < total; ++i)
        phi[i] = zq_vec_from_index(i, q, m);
    for (size_t i = total - 1; i > 0; --i) {
        const size_t j = rng() % (i + 1);
        std::swap(phi[i], phi[j]);
    }
    return phi;
}

// Enumerates every value assignment (all subsets of the complete V_4 spread,
// all nonzero values, all rho) and hands each to the visitor.
template <typename Visitor>
void enumerate_v4_assignments(Visitor&& visit) {
    FieldCtx ctx(2);
    const InnerForm form = InnerForm::dot(4);
    const PartialSpread full = desarguesian_spread(ctx);

    for (uint32_t subset = 0; subset < 32; ++subset) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < 5; ++i)
            if ((subset >> i) & 1)
                idx.push_back(i);
        const size_t a = idx.size();

        std::vector<uint8_t> values(a, 1);
        bool more = true;
        while (more) {
            for (uint8_t rho = 0; rho < 4; ++rho) {
                std::vector<uint8_t> table(16, 0);
                for (size_t i = 0; i < a; ++i)
                    for (Point x : full.members[idx[i]].points())
                        if (x != 0)
                            table[x] = values[i];
                table[0] = rho;
                visit(GBFunc(2, form, table), values, rho);
            }
            more = false;
            for (size_t i = 0; i < a; ++i) {
                if (values[i] < 3) {
                    ++values[i];
                    more = true;
                    break;
                }
                values[i] = 1;
            }
        }
    }
}

} // namespace detail

// 1. Every trace pair over m in {2, 3} is gbent with exact flat spectrum.
inline CriterionResult check_psap_soundness(uint32_t) {
    CriterionResult r{1, "trace-pair family is gbent with exact flat spectra"};
    size_t checked = 0;
    bool ok = true;
    for (unsigned m : {2u, 3u}) {
        FieldCtx ctx(m);
        const CycInt target = CycInt::rational(2, int64_t{1} << (2 * m));
        for (uint32_t a = 1; a < ctx.order() && ok; ++a) {
            for (uint32_t b = 1; b < ctx.order() && ok; ++b) {
                if (a == b)
                    continue;
                const GBFunc f = psap_trace_pair(ctx, ctx.elem(a), ctx.elem(b));
                const Spectrum spec = walsh_transform(f);
                for (const CycInt& v : spec.values)
                    ok = ok && v * v.conj() == target;
                ++checked;
            }
        }
    }
    r.pass = ok;
    r.detail = std::to_string(checked) + " ordered pairs";
    return r;
}

// 2. The dual of a trace pair is the swapped-argument table, and an involution.
inline CriterionResult check_psap_dual(uint32_t) {
    CriterionResult r{2, "trace-pair duals swap the arguments and are involutive"};
    size_t checked = 0;
    bool ok = true;
    for (unsigned m : {2u, 3u}) {
        FieldCtx ctx(m);
        const uint32_t mask = ctx.order() - 1;
        for (uint32_t a = 1; a < ctx.order() && ok; ++a) {
            for (uint32_t b = 1; b < ctx.order() && ok; ++b) {
                if (a == b)
                    continue;
                const GBFunc f = psap_trace_pair(ctx, ctx.elem(a), ctx.elem(b));
                const GBFunc fd = dual(f);
                for (Point p = 0; p < (uint32_t{1} << (2 * m)) && ok; ++p) {
                    const FieldElem x = ctx.elem(p & mask), y = ctx.elem(p >> m);
                    const FieldElem yx = ctx.div(y, x);
                    const unsigned direct = ctx.trace(ctx.mul(ctx.elem(a), yx)) +
                                            2 * ctx.trace(ctx.mul(ctx.elem(b), yx));
                    ok = fd(p) == direct;
                }
                ok = ok && dual(fd) == f;
                ++checked;
            }
        }
    }
    r.pass = ok;
    r.detail = std::to_string(checked) + " ordered pairs";
    return r;
}

// 3. Exhaustive three-way equivalence on V_4 over Z_4: gbent by spectrum ==
// profile classified == value condition.
inline CriterionResult check_characterization(uint32_t) {
    CriterionResult r{3, "partial-spread characterization, both directions, exhaustive"};
    size_t n_gbent = 0, n_classified = 0, n_condition = 0, total = 0;
    bool pointwise = true;
    detail::enumerate_v4_assignments([&](const GBFunc& f, const std::vector<uint8_t>& values,
                                         uint8_t rho) {
        const bool gb = is_gbent(f);
        const bool cond = spread_value_condition_holds(2, 2, rho, values);
        const bool cls =
            classify_profile(ClassProfile::of_assignment(2, rho, values), 2) !=
            SpreadClass::None;
        pointwise = pointwise && gb == cond && cls == cond;
        n_gbent += gb;
        n_classified += cls;
        n_condition += cond;
        ++total;
    });
    r.pass = pointwise && n_gbent == n_classified && n_gbent == n_condition;
    r.detail = "counts " + std::to_string(n_gbent) + "/" + std::to_string(n_classified) + "/" +
               std::to_string(n_condition) + " over " + std::to_string(total) +
               " assignments";
    return r;
}

// 4. At t=1 the accepted profiles are exactly A = 2^(m-1) with rho = 0 and
// A = 2^(m-1)+1 with rho = 1.
inline CriterionResult check_boolean_specialization(uint32_t) {
    CriterionResult r{4, "t=1 specialization accepts exactly the two classical patterns"};
    bool ok = true;
    for (unsigned m : {2u, 3u}) {
        const int64_t half = int64_t{1} << (m - 1);
        const auto profiles = generate_profiles(1, m, 0, (int64_t{1} << m) + 1);
        ok = ok && profiles.size() == 2;
        if (ok) {
            ok = profiles[0].rho() == 0 && profiles[0].members_total() == half &&
                 profiles[1].rho() == 1 && profiles[1].members_total() == half + 1;
        }
        for (int64_t a = 0; a <= (int64_t{1} << m) + 1 && ok; ++a) {
            for (uint8_t rho = 0; rho < 2; ++rho) {
                const ClassProfile p(1, rho, {static_cast<uint32_t>(a)});
                const bool expect = (rho == 0 && a == half) || (rho == 1 && a == half + 1);
                ok = ok && (classify_profile(p, m) != SpreadClass::None) == expect;
            }
        }
    }
    r.pass = ok;
    r.detail = "m in {2, 3}";
    return r;
}

// 5. Every gbent assignment from criterion 3 has a total dual and the
// one-jump value distribution.
inline CriterionResult check_regularity_and_distribution(uint32_t) {
    CriterionResult r{5, "all gbent instances have total duals and one-jump distributions"};
    size_t checked = 0;
    bool ok = true;
    detail::enumerate_v4_assignments([&](const GBFunc& f, const std::vector<uint8_t>&,
                                         uint8_t) {
        if (!ok || !is_gbent(f))
            return;
        try {
            const GBFunc fd = dual(f);
            ok = dual(fd) == f;
        } catch (const Error&) {
            ok = false;
        }
        ok = ok && distribution_pattern_holds(value_distribution(f), f.n(), f.t());
        ++checked;
    });
    r.pass = ok && checked > 0;
    r.detail = std::to_string(checked) + " gbent instances";
    return r;
}

// 6. Rationality of weighted root-of-unity sums is equivalent to coordinate
// symmetry, on seeded random weight vectors.
inline CriterionResult check_rationality_symmetry(uint32_t seed) {
    CriterionResult r{6, "rationality coincides with coordinate symmetry"};
    std::mt19937 rng(seed);
    size_t agreements = 0, total = 0;
    for (unsigned t : {2u, 3u, 4u}) {
        const size_t q = size_t{1} << t;
        for (int i = 0; i < 1000; ++i) {
            std::vector<int64_t> w(q);
            for (auto& x : w)
                x = static_cast<int64_t>(rng() % 11) - 5;
            if (rng() & 1)
                for (size_t j = 1; j < q / 2; ++j)
                    w[q / 2 + j] = w[j]; // half the samples forced symmetric
            CycInt sum(t);
            for (size_t k = 0; k < q; ++k)
                sum += CycInt::rational(t, w[k]) *
                       CycInt::root_power(t, static_cast<int64_t>(k));
            agreements += rational_symmetry_holds(w, t) == sum.is_rational();
            ++total;
        }
    }
    r.pass = agreements == total;
    r.detail = std::to_string(agreements) + "/" + std::to_string(total) + " agreements";
    return r;
}

// 7. The spread-bijection construction is vectorial gbent at the bound and the
// gate rejects one dimension above it.
inline CriterionResult check_vectorial_construction(uint32_t seed) {
    CriterionResult r{7, "vectorial construction works exactly at the dimension bound"};
    std::mt19937 rng(seed);
    bool ok = true;
    size_t built = 0;

    const auto run_family = [&](unsigned m_field, unsigned t, unsigned m) {
        FieldCtx ctx(m_field);
        const InnerForm form = InnerForm::dot(2 * m_field);
        const PartialSpread spread = desarguesian_spread(ctx);
        for (int trial = 0; trial < 20 && ok; ++trial) {
            const auto phi = detail::random_bijection(rng, t, m);
            ok = ok && bijection_character_sums_vanish(t, phi, m);
            const VecGBFunc f = spread_bijection_vectorial(t, form, spread, phi, m);
            ok = ok && is_vectorial_gbent(f);
            ++built;
        }
        ok = ok && !nyberg_gate(2 * m_field, t, m + 1);
    };
    run_family(2, 1, 2); // n=4, t=1, m=2
    run_family(4, 2, 2); // n=8, t=2, m=2

    r.pass = ok;
    r.detail = std::to_string(built) + " seeded bijections";
    return r;
}

// 8. Graphs of the criterion-7 functions are certified relative difference
// sets by both routes, and the routes agree on random subsets.
inline CriterionResult check_rds_certification(uint32_t seed) {
    CriterionResult r{8, "graphs are relative difference sets by counting and characters"};
    std::mt19937 rng(seed);
    bool ok = true;
    size_t certified = 0;

    const auto run_family = [&](unsigned m_field, unsigned t, unsigned m) {
        FieldCtx ctx(m_field);
        const unsigned n = 2 * m_field;
        const InnerForm form = InnerForm::dot(n);
        const PartialSpread spread = desarguesian_spread(ctx);
        const RDSParams params{uint64_t{1} << n, uint64_t{1} << (n / 2), uint64_t{1} << n,
                               uint64_t{1} << (n / 2)};
        for (int trial = 0; trial < 20 && ok; ++trial) {
            const auto phi = detail::random_bijection(rng, t, m);
            const GraphSet graph =
                graph_of(spread_bijection_vectorial(t, form, spread, phi, m));
            ok = ok && check_rds_counting(graph, params) &&
                 check_rds_characters(graph, params);
            ++certified;
        }
    };
    run_family(2, 1, 2);
    run_family(4, 2, 2);

    // method agreement on 50 seeded random 16-element subsets of V_4 x Z_2^2
    size_t agreements = 0, positives = 0;
    const RDSParams small{16, 4, 16, 4};
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<unsigned> idx(64);
        for (unsigned i = 0; i < 64; ++i)
            idx[i] = i;
        for (unsigned i = 63; i > 0; --i)
            std::swap(idx[i], idx[rng() % (i + 1)]);
        GraphSet subset;
        subset.n = 4;
        subset.t = 1;
        subset.m = 2;
        subset.form = InnerForm::dot(4);
        for (unsigned i = 0; i < 16; ++i)
            subset.elements.emplace_back(static_cast<Point>(idx[i] >> 2),
                                         zq_vec_from_index(idx[i] & 3, 2, 2));
        const bool c1 = check_rds_counting(subset, small);
        const bool c2 = check_rds_characters(subset, small);
        agreements += c1 == c2;
        positives += c1;
    }
    ok = ok && agreements == 50 && positives == 0;

    r.pass = ok;
    r.detail = std::to_string(certified) + " graphs certified, " + std::to_string(agreements) +
               "/50 method agreements on random subsets";
    return r;
}

// 9. A gbent function with an annihilating multiple is not a relative
// difference set; the failing character is reported.
inline CriterionResult check_degenerate_negative_control(uint32_t) {
    CriterionResult r{9, "doubled bent function fails certification at the annihilator"};
    std::vector<uint8_t> table(16);
    for (Point x = 0; x < 16; ++x) {
        const unsigned g = ((x & 1) & (x >> 1 & 1)) ^ ((x >> 2 & 1) & (x >> 3 & 1));
        table[x] = static_cast<uint8_t>(2 * g);
    }
    const GBFunc f(2, InnerForm::dot(4), std::move(table));
    const RDSParams params{16, 4, 16, 4};
    const GraphSet graph = graph_of(f);

    bool ok = is_gbent(f);
    ok = ok && !check_rds_counting(graph, params);
    const auto failure = rds_character_failure(graph, params);
    ok = ok && failure.has_value() && failure->c == ZqVec{2};
    r.pass = ok;
    if (failure)
        r.detail = "failing character at u=" + std::to_string(failure->u) +
                   ", c=" + std::to_string(unsigned{failure->c[0]}) +
                   ", |chi|^2=" + std::to_string(norm_squared(failure->chi)) + " needed " +
                   std::to_string(failure->expected);
    return r;
}

// 10. The butterfly spectrum equals the naive double sum on seeded random
// functions, and the Parseval mass is exact.
inline CriterionResult check_transform_engineering(uint32_t seed) {
    CriterionResult r{10, "butterfly equals the naive double sum with exact Parseval mass"};
    std::mt19937 rng(seed);
    bool ok = true;
    size_t checked = 0;
    for (int i = 0; i < 100 && ok; ++i) {
        const unsigned n = 1 + rng() % 8;
        const unsigned t = 1 + rng() % 3;
        InnerForm form = InnerForm::dot(n);
        if (n % 2 == 0 && (rng() & 1))
            form = InnerForm::trace(FieldCtx(n / 2));
        std::vector<uint8_t> table(size_t{1} << n);
        for (auto& v : table)
            v = static_cast<uint8_t>(rng() & ((1u << t) - 1));
        const GBFunc f(t, form, std::move(table));

        const Spectrum spec = walsh_transform(f); // asserts the Parseval mass
        CycInt mass(t);
        for (Point u = 0; u < (uint32_t{1} << n) && ok; ++u) {
            ok = spec[u] == detail::naive_walsh_value(f, u);
            mass += spec[u] * spec[u].conj();
        }
        ok = ok && mass == CycInt::rational(t, int64_t{1} << (2 * n));
        ++checked;
    }
    r.pass = ok;
    r.detail = std::to_string(checked) + " random functions";
    return r;
}

inline std::vector<CriterionResult> run_all(std::ostream& os, uint32_t seed = kDefaultSeed,
                                            const std::set<int>& only = {}) {
    using Clock = std::chrono::steady_clock;
    const std::vector<std::function<CriterionResult(uint32_t)>> criteria = {
        check_psap_soundness,          check_psap_dual,
        check_characterization,        check_boolean_specialization,
        check_regularity_and_distribution, check_rationality_symmetry,
        check_vectorial_construction,  check_rds_certification,
        check_degenerate_negative_control, check_transform_engineering,
    };
    std::vector<CriterionResult> results;
    for (size_t i = 0; i < criteria.size(); ++i) {
        if (!only.empty() && !only.count(static_cast<int>(i) + 1))
            continue;
        const auto start = Clock::now();
        CriterionResult res = criteria[i](seed);
        res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        os << (res.pass ? "PASS" : "FAIL") << " criterion " << res.id << ": " << res.name
           << " (" << res.detail << ", " << res.seconds << "s)\n";
        results.push_back(std::move(res));
    }
    return results;
}

inline bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass)
            return false;
    return !results.empty();
}

} // namespace gbent::selftest
