#pragma once

// The (partial-)spread gbent constructions: generalized Dillon on a complete
// spread, the explicit PS_ap family in bivariate coordinates, partial-spread
// gbent functions with the exact root-of-unity value condition, and the
// I-IV profile classifier with its generator.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbent/cyclotomic.hpp"
#include "gbent/errors.hpp"
#include "gbent/gbfunc.hpp"
#include "gbent/gf2m.hpp"
#include "gbent/space.hpp"

namespace gbent {

// A value assignment on a partial spread: k_i on the nonzero points of member
// i, rho at 0, and 0 off the spread union.
struct SpreadAssignment {
    PartialSpread spread;
    std::vector<uint8_t> values; // one residue per member
    uint8_t rho = 0;
};

// Residue counts of a spread assignment: c_j = number of members assigned
// value j, for 1 <= j <= q-1. A, Delta and cbar are always recomputed.
class ClassProfile {
public:
    ClassProfile(unsigned t, uint8_t rho, std::vector<uint32_t> counts)
        : t_(t), rho_(rho), counts_(std::move(counts)) {
        if (t < 1 || t > kMaxExponent)
            throw ExponentMismatch("exponent t must be in [1, 6]");
        if (counts_.size() != (size_t{1} << t) - 1)
            throw BadParameters("profile needs q-1 counts, got " + std::to_string(counts_.size()));
        if (rho_ >> t)
            throw BadParameters("rho is not a residue mod 2^" + std::to_string(t));
    }

    unsigned t() const { return t_; }
    unsigned q() const { return 1u << t_; }
    uint8_t rho() const { return rho_; }
    const std::vector<uint32_t>& counts() const { return counts_; }
    uint32_t c(unsigned j) const { return counts_[j - 1]; } // 1 <= j <= q-1

    int64_t members_total() const { // A
        int64_t a = 0;
        for (uint32_t cj : counts_)
            a += cj;
        return a;
    }
    int64_t delta() const { // sum of c_j over 1 <= j <= 2^(t-1)-1
        int64_t d = 0;
        for (unsigned j = 1; j < q() / 2; ++j)
            d += c(j);
        return d;
    }
    int64_t cbar() const { return c(q() / 2); }

    static ClassProfile of_assignment(unsigned t, uint8_t rho,
                                      const std::vector<uint8_t>& values) {
        std::vector<uint32_t> counts((size_t{1} << t) - 1, 0);
        for (uint8_t v : values) {
            if (v == 0 || (v >> t))
                throw BadParameters("assignment values must be nonzero residues mod 2^" +
                                    std::to_string(t));
            ++counts[v - 1];
        }
        return ClassProfile(t, rho, std::move(counts));
    }

private:
    unsigned t_;
    uint8_t rho_;
    std::vector<uint32_t> counts_;
};

enum class SpreadClass { I, II, III, IV, None };

inline const char* to_string(SpreadClass c) {
    switch (c) {
    case SpreadClass::I: return "I";
    case SpreadClass::II: return "II";
    case SpreadClass::III: return "III";
    case SpreadClass::IV: return "IV";
    default: return "None";
    }
}

// The exact value condition for a partial-spread assignment:
// sum_i zeta^(k_i) = A - (2^m + 1) + zeta^rho.
inline bool spread_value_condition_holds(unsigned t, unsigned m, uint8_t rho,
                                         const std::vector<uint8_t>& values) {
    CycInt lhs(t);
    for (uint8_t k : values)
        lhs += CycInt::root_power(t, k);
    const int64_t a = static_cast<int64_t>(values.size());
    const CycInt rhs = CycInt::rational(t, a - ((int64_t{1} << m) + 1)) +
                       CycInt::root_power(t, rho);
    return lhs == rhs;
}

inline bool spread_value_condition_holds(unsigned m, const ClassProfile& p) {
    CycInt lhs(p.t());
    for (unsigned j = 1; j < p.q(); ++j)
        lhs += CycInt::rational(p.t(), p.c(j)) * CycInt::root_power(p.t(), j);
    const CycInt rhs = CycInt::rational(p.t(), p.members_total() - ((int64_t{1} << m) + 1)) +
                       CycInt::root_power(p.t(), p.rho());
    return lhs == rhs;
}

// Decides which of the four count patterns the profile satisfies. A profile
// matches some pattern exactly when the value condition above holds.
inline SpreadClass classify_profile(const ClassProfile& p, unsigned m) {
    if (m < 1 || m > kMaxDimension / 2)
        throw BadParameters("half dimension m must be in [1, 12]");
    const unsigned half = p.q() / 2;
    const int64_t pow_half = int64_t{1} << (m - 1);
    const int64_t a = p.members_total();
    const int64_t d = p.delta();
    const uint8_t rho = p.rho();

    // Mirror symmetry c_(2^(t-1)+j) = c_j on the lower indices, optionally
    // skipping one paired index.
    const auto symmetric_except = [&](int skip) {
        for (unsigned j = 1; j < half; ++j)
            if (static_cast<int>(j) != skip && p.c(half + j) != p.c(j))
                return false;
        return true;
    };

    if (rho == 0 && symmetric_except(-1) && a == pow_half + d && p.cbar() == pow_half - d)
        return SpreadClass::I;
    if (rho >= 1 && rho < half && symmetric_except(rho) &&
        p.c(half + rho) + 1 == p.c(rho) && // c_(2^(t-1)+rho) = c_rho - 1
        a == pow_half + d && p.cbar() == pow_half + 1 - d)
        return SpreadClass::II;
    if (rho == half && symmetric_except(-1) && a == pow_half + 1 + d &&
        p.cbar() == pow_half + 1 - d)
        return SpreadClass::III;
    if (rho > half && symmetric_except(rho - half) &&
        p.c(rho) == p.c(rho - half) + 1 && // the pair at rho breaks upward
        a == pow_half + 1 + d && p.cbar() == pow_half - d)
        return SpreadClass::IV;
    return SpreadClass::None;
}

namespace detail {

inline GBFunc assemble_spread_function(unsigned t, const InnerForm& form,
                                       const PartialSpread& spread,
                                       const std::vector<uint8_t>& values, uint8_t at_zero) {
    std::vector<uint8_t> table(size_t{1} << form.n(), 0);
    for (size_t i = 0; i < spread.members.size(); ++i)
        for (Point x : spread.members[i].points())
            if (x != 0)
                table[x] = values[i];
    table[0] = at_zero;
    return GBFunc(t, form, std::move(table));
}

} // namespace detail

// Generalized Dillon function on a complete spread: f = k_i on U_i \ {0},
// f(0) = r, requiring sum_i zeta^(k_i) = zeta^r.
inline GBFunc dillon_full_spread(unsigned t, const InnerForm& form, const PartialSpread& spread,
                                 const std::vector<uint8_t>& k, uint8_t r) {
    if (form.n() != spread.n)
        throw DimensionError("form and spread dimensions differ");
    if (!is_complete_spread(spread))
        throw IncompleteSpread("need a complete spread with 2^(n/2)+1 members");
    if (k.size() != spread.members.size())
        throw BadParameters("need one value per spread member");

    CycInt sum(t);
    for (uint8_t ki : k) {
        if (ki >> t)
            throw BadParameters("value " + std::to_string(ki) + " is not a residue mod 2^" +
                                std::to_string(t));
        sum += CycInt::root_power(t, ki);
    }
    if (!(sum == CycInt::root_power(t, r)))
        throw ConditionViolated("sum of zeta^(k_i) must equal zeta^r; got " + sum.to_string());
    return detail::assemble_spread_function(t, form, spread, k, r);
}

// Explicit PS_ap-style function f(x, y) = sum_j 2^j G_j(x/y) on
// GF(2^m) x GF(2^m) with the 1/0 = 0 convention, carrying the trace form.
// Each G_j is a {0,1} table of length 2^m.
inline GBFunc psap_explicit(const FieldCtx& ctx, const std::vector<std::vector<uint8_t>>& g) {
    const unsigned t = static_cast<unsigned>(g.size());
    if (t < 1 || t > kMaxExponent)
        throw BadParameters("need between 1 and 6 component functions");
    const size_t order = ctx.order();
    for (const auto& gj : g) {
        if (gj.size() != order)
            throw BadParameters("component table must have 2^m entries");
        for (uint8_t v : gj)
            if (v > 1)
                throw BadParameters("component tables must be Boolean");
    }

    const auto combined = [&](uint32_t s) {
        unsigned v = 0;
        for (unsigned j = 0; j < t; ++j)
            v |= static_cast<unsigned>(g[j][s]) << j;
        return v;
    };

    for (unsigned j = 0; j < t; ++j)
        if (g[j][0] != 0)
            throw HypothesisViolated("G_" + std::to_string(j) + "(0) must be 0");
    CycInt char_sum(t);
    for (uint32_t s = 0; s < order; ++s)
        char_sum += CycInt::root_power(t, combined(s));
    if (!char_sum.is_zero())
        throw HypothesisViolated("character sum over GF(2^m) must vanish; got " +
                                 char_sum.to_string());

    const unsigned m = ctx.m();
    const InnerForm form = InnerForm::trace(ctx);
    std::vector<uint8_t> table(size_t{1} << (2 * m));
    const uint32_t mask = (uint32_t{1} << m) - 1;
    for (uint32_t p = 0; p < table.size(); ++p) {
        const FieldElem x = ctx.elem(p & mask);
        const FieldElem y = ctx.elem(p >> m);
        table[p] = static_cast<uint8_t>(combined(ctx.div(x, y).coeffs));
    }
    return GBFunc(t, form, std::move(table));
}

// The Z_4-valued pair f(x, y) = Tr(ax/y) + 2 Tr(bx/y) for distinct nonzero
// a, b; its hypothesis sum always vanishes, so construction cannot fail.
inline GBFunc psap_trace_pair(const FieldCtx& ctx, FieldElem a, FieldElem b) {
    if (a.coeffs == 0 || b.coeffs == 0 || a == b)
        throw BadParameters("need distinct nonzero a and b");
    std::vector<std::vector<uint8_t>> g(2, std::vector<uint8_t>(ctx.order()));
    for (uint32_t s = 0; s < ctx.order(); ++s) {
        const FieldElem se = ctx.elem(s);
        g[0][s] = static_cast<uint8_t>(ctx.trace(ctx.mul(a, se)));
        g[1][s] = static_cast<uint8_t>(ctx.trace(ctx.mul(b, se)));
    }
    return psap_explicit(ctx, g);
}

// Partial-spread gbent function: nonzero constants k_i on the members, rho at
// 0, zero elsewhere; valid exactly when the value condition holds.
inline GBFunc partial_spread_gbent(unsigned t, const InnerForm& form,
                                   const SpreadAssignment& assign) {
    if (form.n() != assign.spread.n)
        throw DimensionError("form and spread dimensions differ");
    if (!verify_partial_spread(assign.spread))
        throw BadParameters("members do not form a partial spread");
    if (assign.values.size() != assign.spread.members.size())
        throw BadParameters("need one value per spread member");
    if (assign.rho >> t)
        throw BadParameters("rho is not a residue mod 2^" + std::to_string(t));
    for (uint8_t k : assign.values) {
        if (k >> t)
            throw BadParameters("value " + std::to_string(k) + " is not a residue mod 2^" +
                                std::to_string(t));
        if (k == 0)
            throw ZeroValueOnSpread("spread members must carry nonzero values");
    }
    if (!spread_value_condition_holds(t, assign.spread.n / 2, assign.rho, assign.values))
        throw ConditionViolated(
            "sum of zeta^(k_i) must equal A - (2^m + 1) + zeta^rho for this assignment");
    return detail::assemble_spread_function(t, form, assign.spread, assign.values, assign.rho);
}

// Every profile with A in [a_min, a_max] matching one of the four patterns,
// ordered by (A, rho, counts) ascending.
inline std::vector<ClassProfile> generate_profiles(unsigned t, unsigned m, int64_t a_min,
                                                   int64_t a_max) {
    if (m < 1 || m > kMaxDimension / 2)
        throw BadParameters("half dimension m must be in [1, 12]");
    std::vector<ClassProfile> out;
    const unsigned q = 1u << t;
    const unsigned half = q / 2;

    // Emit one profile per composition of delta over the free lower counts.
    const auto emit_for = [&](uint8_t rho, int64_t delta, int64_t cbar,
                              std::optional<unsigned> bump_pair, bool lower_pair_min_one) {
        if (delta < 0 || cbar < 0)
            return;
        std::vector<uint32_t> lower(half >= 1 ? half - 1 : 0, 0);
        const auto flush = [&]() {
            std::vector<uint32_t> counts(q - 1, 0);
            for (unsigned j = 1; j < half; ++j)
                counts[j - 1] = lower[j - 1];
            counts[half - 1] = static_cast<uint32_t>(cbar);
            for (unsigned j = 1; j < half; ++j)
                counts[half + j - 1] = lower[j - 1];
            if (bump_pair) {
                if (*bump_pair < half) // pattern II: c_(half+rho) = c_rho - 1
                    counts[half + *bump_pair - 1] -= 1;
                else // pattern IV: c_rho = c_(rho-half) + 1
                    counts[*bump_pair - 1] += 1;
            }
            out.emplace_back(t, rho, std::move(counts));
        };
        // lexicographic compositions of delta into half-1 parts
        const auto rec = [&](auto&& self, unsigned idx, int64_t remaining) -> void {
            if (idx == lower.size()) {
                if (remaining == 0 && (!lower_pair_min_one || lower[*bump_pair - 1] >= 1))
                    flush();
                return;
            }
            for (int64_t v = 0; v <= remaining; ++v) {
                lower[idx] = static_cast<uint32_t>(v);
                self(self, idx + 1, remaining - v);
            }
        };
        if (lower.empty()) {
            if (delta == 0)
                flush();
        } else {
            rec(rec, 0, delta);
        }
    };

    const int64_t pow_half = int64_t{1} << (m - 1);
    for (int64_t a = std::max<int64_t>(a_min, 0); a <= a_max; ++a) {
        for (unsigned rho = 0; rho < q; ++rho) {
            if (rho == 0)
                emit_for(0, a - pow_half, pow_half - (a - pow_half), std::nullopt, false);
            else if (rho < half)
                emit_for(static_cast<uint8_t>(rho), a - pow_half,
                         pow_half + 1 - (a - pow_half), rho, true);
            else if (rho == half)
                emit_for(static_cast<uint8_t>(rho), a - pow_half - 1,
                         pow_half + 1 - (a - pow_half - 1), std::nullopt, false);
            else
                emit_for(static_cast<uint8_t>(rho), a - pow_half - 1,
                         pow_half - (a - pow_half - 1), rho, false);
        }
    }
    return out;
}

} // namespace gbent
