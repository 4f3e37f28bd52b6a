#include <doctest.h>

#include <random>
#include <vector>

#include "gbent/gf2m.hpp"
#include "gbent/space.hpp"

using namespace gbent;

namespace {

// Point-enumeration oracle for the orthogonal complement.
std::vector<Point> complement_points(const Subspace& u, const InnerForm& form) {
    std::vector<Point> pts;
    for (Point v = 0; v < (uint32_t{1} << u.n()); ++v) {
        bool orthogonal = true;
        for (Point b : u.basis())
            orthogonal = orthogonal && form.ip(v, b) == 0;
        if (orthogonal)
            pts.push_back(v);
    }
    return pts;
}

Subspace random_subspace(std::mt19937& rng, unsigned n, unsigned dim) {
    while (true) {
        std::vector<Point> gens;
        for (unsigned i = 0; i < dim; ++i)
            gens.push_back(rng() & ((uint32_t{1} << n) - 1));
        Subspace s = Subspace::span(n, gens);
        if (s.dim() == dim)
            return s;
    }
}

} // namespace

TEST_CASE("inner products") {
    const InnerForm dot = InnerForm::dot(2);
    CHECK(dot.ip(0, 0) == 0);
    CHECK(dot.ip(0b01, 0b11) == 1);
    CHECK(dot.ip(0b11, 0b11) == 0);

    FieldCtx ctx(2);
    const InnerForm tf = InnerForm::trace(ctx);
    // <(1,0),(alpha,0)> = Tr(alpha) = 1
    CHECK(tf.ip(0b0001, 0b0010) == ctx.trace(ctx.elem(0b10)));
    CHECK(tf.ip(0b0001, 0b0010) == 1);
    CHECK(tf.ip(0, 0b1010) == 0);
    CHECK_THROWS_AS(tf.ip(0b10000, 0), DimensionError);

    // symmetry and nondegeneracy of both forms on V_4
    for (const InnerForm& form : {InnerForm::dot(4), tf}) {
        for (Point a = 0; a < 16; ++a) {
            unsigned hits = 0;
            for (Point b = 0; b < 16; ++b) {
                CHECK(form.ip(a, b) == form.ip(b, a));
                hits += form.ip(a, b);
            }
            if (a != 0)
                CHECK(hits == 8); // <a, .> is balanced, hence nonzero
        }
    }
}

TEST_CASE("subspace span and membership") {
    Subspace s = Subspace::span(4, {0b0001, 0b0010, 0b0011});
    CHECK(s.dim() == 2);
    CHECK(s.points().size() == 4);
    CHECK(s.contains(0));
    CHECK(s.contains(0b0011));
    CHECK_FALSE(s.contains(0b0100));
    CHECK(s.membership().count() == 4);

    CHECK_THROWS_AS(Subspace::from_basis(4, {0b0001, 0b0010, 0b0011}), DimensionError);
    const Subspace ok = Subspace::from_basis(4, {0b0101, 0b0010});
    CHECK(ok.dim() == 2);

    // closure under XOR
    for (Point a : s.points())
        for (Point b : s.points())
            CHECK(s.contains(a ^ b));
}

TEST_CASE("desarguesian spread counts and coverage") {
    for (unsigned m : {1u, 2u, 3u, 4u}) {
        FieldCtx ctx(m);
        const PartialSpread spread = desarguesian_spread(ctx);
        CHECK(spread.members.size() == (size_t{1} << m) + 1);
        CHECK(verify_partial_spread(spread));
        CHECK(is_complete_spread(spread));
        for (const Subspace& u : spread.members)
            CHECK(u.dim() == m);

        // every nonzero point lies in exactly one member
        const uint32_t size = uint32_t{1} << (2 * m);
        for (Point p = 1; p < size; ++p) {
            unsigned owners = 0;
            for (const Subspace& u : spread.members)
                owners += u.contains(p);
            REQUIRE(owners == 1);
        }
    }
}

TEST_CASE("verify_partial_spread rejects bad collections") {
    FieldCtx ctx(2);
    PartialSpread spread = desarguesian_spread(ctx);
    CHECK(verify_partial_spread(spread));

    PartialSpread dup;
    dup.n = 4;
    dup.members = {spread.members[1], spread.members[1]};
    CHECK_FALSE(verify_partial_spread(dup));

    PartialSpread empty;
    empty.n = 4;
    CHECK(verify_partial_spread(empty));

    PartialSpread wrong_dim;
    wrong_dim.n = 4;
    wrong_dim.members = {Subspace::from_basis(4, {0b0001})};
    CHECK_FALSE(verify_partial_spread(wrong_dim));
}

TEST_CASE("orthogonal complement") {
    const InnerForm dot = InnerForm::dot(4);
    const Subspace zero = Subspace::span(4, {});
    CHECK(orthogonal_complement(zero, dot).dim() == 4);
    const Subspace all = Subspace::span(4, {1, 2, 4, 8});
    CHECK(orthogonal_complement(all, dot).dim() == 0);

    const Subspace u = Subspace::from_basis(4, {0b0001, 0b0010});
    const Subspace perp = orthogonal_complement(u, dot);
    CHECK(perp.dim() == 2);
    CHECK(perp.contains(0b0100));
    CHECK(perp.contains(0b1000));
    CHECK_FALSE(perp.contains(0b0001));
}

TEST_CASE("complement matches the point-enumeration oracle") {
    std::mt19937 rng(5);
    FieldCtx ctx(3);
    const InnerForm forms[] = {InnerForm::dot(6), InnerForm::trace(ctx)};
    for (const InnerForm& form : forms) {
        for (int i = 0; i < 20; ++i) {
            const Subspace u = random_subspace(rng, 6, rng() % 4);
            const Subspace perp = orthogonal_complement(u, form);
            const auto oracle = complement_points(u, form);
            REQUIRE(perp.points().size() == oracle.size());
            for (Point p : oracle)
                REQUIRE(perp.contains(p));
        }
    }
}

TEST_CASE("complement is an involution") {
    std::mt19937 rng(9);
    for (unsigned n : {4u, 8u, 12u}) {
        const InnerForm dot = InnerForm::dot(n);
        for (int i = 0; i < 10; ++i) {
            const Subspace u = random_subspace(rng, n, rng() % (n + 1));
            const Subspace back = orthogonal_complement(orthogonal_complement(u, dot), dot);
            REQUIRE(back.dim() == u.dim());
            for (Point p : u.points())
                REQUIRE(back.contains(p));
        }
    }
}

TEST_CASE("orthogonal spread of a spread is a spread") {
    for (unsigned m : {1u, 2u, 3u}) {
        FieldCtx ctx(m);
        const PartialSpread spread = desarguesian_spread(ctx);
        for (const InnerForm& form : {InnerForm::dot(2 * m), InnerForm::trace(ctx)}) {
            const PartialSpread dual = orthogonal_spread(spread, form);
            CHECK(verify_partial_spread(dual));
            CHECK(is_complete_spread(dual));
        }
    }
}
