#pragma once

// The ambient space V_n as bit vectors (n <= 24), n/2-dimensional subspaces
// with membership bitsets, partial spreads, inner products and orthogonal
// complements.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbent/errors.hpp"
#include "gbent/gf2m.hpp"

namespace gbent {

inline constexpr unsigned kMaxDimension = 24;

using Point = uint32_t; // bit vector of length n, bit i = coordinate i

namespace detail {

inline unsigned parity(uint32_t x) { return static_cast<unsigned>(__builtin_popcount(x)) & 1u; }

} // namespace detail

// Fixed-size bitset over all 2^n points.
class PointSet {
public:
    explicit PointSet(unsigned n) : n_(n), words_((size_t{1} << n) / 64 + 1, 0) {}

    unsigned n() const { return n_; }

    bool test(Point p) const { return (words_[p >> 6] >> (p & 63)) & 1; }
    void set(Point p) { words_[p >> 6] |= uint64_t{1} << (p & 63); }

    size_t count() const {
        size_t c = 0;
        for (uint64_t w : words_)
            c += static_cast<size_t>(__builtin_popcountll(w));
        return c;
    }

    size_t intersection_count(const PointSet& o) const {
        size_t c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += static_cast<size_t>(__builtin_popcountll(words_[i] & o.words_[i]));
        return c;
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    unsigned n_;
    std::vector<uint64_t> words_;
};

// Nondegenerate symmetric inner product on V_n: either the plain dot product
// or, in bivariate GF(2^m) x GF(2^m) coordinates (low m bits = x, high m bits
// = y), the trace form Tr_m(x1*x2 + y1*y2).
class InnerForm {
public:
    enum class Kind { Dot, Trace };

    static InnerForm dot(unsigned n) {
        if (n < 1 || n > kMaxDimension)
            throw DimensionError("dimension must be in [1, 24], got " + std::to_string(n));
        return InnerForm(Kind::Dot, n, std::nullopt);
    }

    static InnerForm trace(const FieldCtx& ctx) {
        const unsigned n = 2 * ctx.m();
        if (n > kMaxDimension)
            throw DimensionError("bivariate dimension 2m exceeds 24");
        return InnerForm(Kind::Trace, n, ctx);
    }

    Kind kind() const { return kind_; }
    unsigned n() const { return n_; }
    const FieldCtx& field() const { return *ctx_; }

    unsigned ip(Point a, Point b) const {
        if ((a >> n_) || (b >> n_))
            throw DimensionError("point out of range for V_" + std::to_string(n_));
        if (kind_ == Kind::Dot)
            return detail::parity(a & b);
        const unsigned m = ctx_->m();
        const uint32_t mask = (uint32_t{1} << m) - 1;
        const FieldElem x1 = ctx_->elem(a & mask), y1 = ctx_->elem(a >> m);
        const FieldElem x2 = ctx_->elem(b & mask), y2 = ctx_->elem(b >> m);
        return ctx_->trace(ctx_->add(ctx_->mul(x1, x2), ctx_->mul(y1, y2)));
    }

    // Row j of the Gram matrix as a bitmask over k: bit k = <e_j, e_k>.
    std::vector<uint32_t> gram_rows() const {
        std::vector<uint32_t> rows(n_, 0);
        for (unsigned j = 0; j < n_; ++j)
            for (unsigned k = 0; k < n_; ++k)
                rows[j] |= static_cast<uint32_t>(ip(uint32_t{1} << j, uint32_t{1} << k)) << k;
        return rows;
    }

    // u -> G*u for the Gram matrix G; the identity for the dot form.
    Point gram_map(Point u, const std::vector<uint32_t>& rows) const {
        if (kind_ == Kind::Dot)
            return u;
        Point v = 0;
        for (unsigned j = 0; j < n_; ++j)
            v |= static_cast<uint32_t>(detail::parity(rows[j] & u)) << j;
        return v;
    }

    friend bool operator==(const InnerForm& a, const InnerForm& b) {
        if (a.kind_ != b.kind_ || a.n_ != b.n_)
            return false;
        return a.kind_ == Kind::Dot || *a.ctx_ == *b.ctx_;
    }

private:
    InnerForm(Kind kind, unsigned n, std::optional<FieldCtx> ctx)
        : kind_(kind), n_(n), ctx_(std::move(ctx)) {}

    Kind kind_;
    unsigned n_;
    std::optional<FieldCtx> ctx_;
};

// A linear subspace of V_n, kept both as a reduced basis and as a membership
// bitset closed under XOR.
class Subspace {
public:
    // Spans the given generators; the stored basis is the row-reduced one.
    static Subspace span(unsigned n, const std::vector<Point>& generators) {
        return Subspace(n, reduce(n, generators));
    }

    // Requires the given points to be linearly independent.
    static Subspace from_basis(unsigned n, const std::vector<Point>& basis) {
        Subspace s(n, reduce(n, basis));
        if (s.dim() != basis.size())
            throw DimensionError("basis points are linearly dependent");
        s.basis_ = basis;
        return s;
    }

    unsigned n() const { return n_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<Point>& basis() const { return basis_; }
    const std::vector<Point>& points() const { return points_; }
    const PointSet& membership() const { return membership_; }
    bool contains(Point p) const { return membership_.test(p); }

private:
    Subspace(unsigned n, std::vector<Point> reduced_basis)
        : n_(n), basis_(std::move(reduced_basis)), membership_(n) {
        if (n < 1 || n > kMaxDimension)
            throw DimensionError("dimension must be in [1, 24], got " + std::to_string(n));
        points_.reserve(size_t{1} << basis_.size());
        points_.push_back(0);
        for (Point b : basis_) {
            const size_t sz = points_.size();
            for (size_t i = 0; i < sz; ++i)
                points_.push_back(points_[i] ^ b);
        }
        for (Point p : points_)
            membership_.set(p);
    }

    // Gaussian basis keyed by leading bit.
    static std::vector<Point> reduce(unsigned n, const std::vector<Point>& rows) {
        std::vector<Point> by_msb(n, 0);
        for (Point r : rows) {
            if (r >> n)
                throw DimensionError("basis point out of range for V_" + std::to_string(n));
            while (r) {
                const unsigned h = 31u - static_cast<unsigned>(__builtin_clz(r));
                if (!by_msb[h]) {
                    by_msb[h] = r;
                    break;
                }
                r ^= by_msb[h];
            }
        }
        std::vector<Point> basis;
        for (Point b : by_msb)
            if (b)
                basis.push_back(b);
        return basis;
    }

    unsigned n_;
    std::vector<Point> basis_;
    std::vector<Point> points_;
    PointSet membership_;
};

struct PartialSpread {
    unsigned n = 0;
    std::vector<Subspace> members;
};

// True iff every member has dimension n/2 and every pairwise intersection is
// exactly {0}. Vacuously true for an empty member list.
inline bool verify_partial_spread(const PartialSpread& s) {
    if (s.n % 2)
        return false;
    for (const Subspace& u : s.members)
        if (u.n() != s.n || u.dim() != s.n / 2)
            return false;
    for (size_t i = 0; i < s.members.size(); ++i)
        for (size_t j = i + 1; j < s.members.size(); ++j)
            if (s.members[i].membership().intersection_count(s.members[j].membership()) != 1)
                return false;
    return true;
}

inline bool is_complete_spread(const PartialSpread& s) {
    return verify_partial_spread(s) && s.members.size() == (size_t{1} << (s.n / 2)) + 1;
}

// The 2^m + 1 subspaces {(0, y)} and {(x, s*x)} for s in GF(2^m), in bivariate
// coordinates over ctx. The {(0, y)} member comes first.
inline PartialSpread desarguesian_spread(const FieldCtx& ctx) {
    const unsigned m = ctx.m();
    const unsigned n = 2 * m;
    if (n > kMaxDimension)
        throw DimensionError("bivariate dimension 2m exceeds 24");
    PartialSpread spread;
    spread.n = n;

    std::vector<Point> basis(m);
    for (unsigned i = 0; i < m; ++i)
        basis[i] = uint32_t{1} << (m + i); // (0, e_i)
    spread.members.push_back(Subspace::from_basis(n, basis));

    for (uint32_t s = 0; s < ctx.order(); ++s) {
        const FieldElem se = ctx.elem(s);
        for (unsigned i = 0; i < m; ++i) {
            const uint32_t x = uint32_t{1} << i;
            const uint32_t y = ctx.mul(se, ctx.elem(x)).coeffs;
            basis[i] = x | (y << m); // (e_i, s*e_i)
        }
        spread.members.push_back(Subspace::from_basis(n, basis));
    }
    return spread;
}

// U^perp = {v : <v, u> = 0 for all u in U} with respect to the given form.
inline Subspace orthogonal_complement(const Subspace& u, const InnerForm& form) {
    const unsigned n = u.n();
    if (form.n() != n)
        throw DimensionError("form dimension does not match subspace");

    // One linear constraint per basis vector: row bit k = <e_k, b>.
    std::vector<uint32_t> rows;
    rows.reserve(u.dim());
    for (Point b : u.basis()) {
        uint32_t row = 0;
        for (unsigned k = 0; k < n; ++k)
            row |= static_cast<uint32_t>(form.ip(uint32_t{1} << k, b)) << k;
        rows.push_back(row);
    }

    // Gaussian elimination to reduced row echelon form.
    std::vector<int> pivot_of_row;
    size_t rank = 0;
    for (unsigned col = 0; col < n && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && !((rows[sel] >> col) & 1))
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[rank], rows[sel]);
        for (size_t r = 0; r < rows.size(); ++r)
            if (r != rank && ((rows[r] >> col) & 1))
                rows[r] ^= rows[rank];
        pivot_of_row.push_back(static_cast<int>(col));
        ++rank;
    }

    // Null space basis: one vector per free column.
    std::vector<bool> is_pivot(n, false);
    for (int p : pivot_of_row)
        is_pivot[static_cast<size_t>(p)] = true;
    std::vector<Point> basis;
    for (unsigned f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        Point v = uint32_t{1} << f;
        for (size_t r = 0; r < rank; ++r)
            if ((rows[r] >> f) & 1)
                v |= uint32_t{1} << pivot_of_row[r];
        basis.push_back(v);
    }
    return Subspace::from_basis(n, basis);
}

// Orthogonal complement of every member; for a (partial) spread this is again
// a (partial) spread.
inline PartialSpread orthogonal_spread(const PartialSpread& s, const InnerForm& form) {
    PartialSpread dual;
    dual.n = s.n;
    dual.members.reserve(s.members.size());
    for (const Subspace& u : s.members)
        dual.members.push_back(orthogonal_complement(u, form));
    return dual;
}

} // namespace gbent
