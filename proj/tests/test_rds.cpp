#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "gbent/constructions.hpp"
#include "gbent/rds.hpp"
#include "gbent/vectorial.hpp"

using namespace gbent;

namespace {

std::vector<ZqVec> random_bijection(std::mt19937& rng, unsigned t, unsigned m) {
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

// x1*x2 + x3*x4, the standard bent function on V_4.
GBFunc quadratic_bent() {
    std::vector<uint8_t> table(16);
    for (Point x = 0; x < 16; ++x)
        table[x] = static_cast<uint8_t>(((x & 1) & (x >> 1 & 1)) ^ ((x >> 2 & 1) & (x >> 3 & 1)));
    return GBFunc(1, InnerForm::dot(4), std::move(table));
}

} // namespace

TEST_CASE("vectorial bent graph is a (16,4,16,4) relative difference set") {
    FieldCtx ctx(2);
    std::mt19937 rng(6);
    const VecGBFunc f = spread_bijection_vectorial(1, InnerForm::dot(4),
                                                   desarguesian_spread(ctx),
                                                   random_bijection(rng, 1, 2), 2);
    REQUIRE(is_vectorial_gbent(f));
    const GraphSet r = graph_of(f);
    const RDSParams params{16, 4, 16, 4};
    CHECK(check_rds_counting(r, params));
    CHECK(check_rds_characters(r, params));
}

TEST_CASE("constant functions fail") {
    GraphSet r;
    r.n = 4;
    r.t = 1;
    r.m = 2;
    r.form = InnerForm::dot(4);
    for (Point x = 0; x < 16; ++x)
        r.elements.emplace_back(x, ZqVec{0, 0});
    const RDSParams params{16, 4, 16, 4};
    CHECK_FALSE(check_rds_counting(r, params));
    CHECK_FALSE(check_rds_characters(r, params));
}

TEST_CASE("a single gbent function with a vanishing multiple fails") {
    // f = 2g for bent g: gbent over Z_4, but 2f = 0, so the graph cannot be a
    // relative difference set
    const GBFunc g = quadratic_bent();
    REQUIRE(is_gbent(g));
    std::vector<uint8_t> doubled(16);
    for (Point x = 0; x < 16; ++x)
        doubled[x] = static_cast<uint8_t>(2 * g(x));
    const GBFunc f(2, InnerForm::dot(4), std::move(doubled));
    REQUIRE(is_gbent(f));

    const GraphSet r = graph_of(f);
    const RDSParams params{16, 4, 16, 4};
    CHECK_FALSE(check_rds_counting(r, params));

    const auto failure = rds_character_failure(r, params);
    REQUIRE(failure.has_value());
    CHECK(failure->c == ZqVec{2}); // the annihilating coefficient
    CHECK(failure->u == 0);
    CHECK(failure->chi == CycInt::rational(2, 16)); // |chi|^2 = 256, needed 16
    CHECK(failure->expected == 16);
}

TEST_CASE("counting and character methods agree on random subsets") {
    std::mt19937 rng(8);
    const RDSParams params{16, 4, 16, 4};
    unsigned certified = 0;
    for (int trial = 0; trial < 50; ++trial) {
        // a random 16-element subset of V_4 x Z_2^2
        std::vector<unsigned> indices(64);
        for (unsigned i = 0; i < 64; ++i)
            indices[i] = i;
        for (unsigned i = 63; i > 0; --i)
            std::swap(indices[i], indices[rng() % (i + 1)]);

        GraphSet r;
        r.n = 4;
        r.t = 1;
        r.m = 2;
        r.form = InnerForm::dot(4);
        for (unsigned i = 0; i < 16; ++i)
            r.elements.emplace_back(static_cast<Point>(indices[i] >> 2),
                                    zq_vec_from_index(indices[i] & 3, 2, 2));
        const bool by_counting = check_rds_counting(r, params);
        const bool by_characters = check_rds_characters(r, params);
        REQUIRE(by_counting == by_characters);
        certified += by_counting;
    }
    CHECK(certified == 0); // random subsets essentially never qualify
}

TEST_CASE("parameter validation") {
    FieldCtx ctx(2);
    std::mt19937 rng(10);
    const VecGBFunc f = spread_bijection_vectorial(1, InnerForm::dot(4),
                                                   desarguesian_spread(ctx),
                                                   random_bijection(rng, 1, 2), 2);
    const GraphSet r = graph_of(f);
    CHECK_THROWS_AS(check_rds_counting(r, RDSParams{16, 4, 15, 4}), BadParameters);
    CHECK_THROWS_AS(check_rds_counting(r, RDSParams{8, 4, 16, 4}), BadParameters);
    CHECK_THROWS_AS(check_rds_characters(r, RDSParams{16, 2, 16, 4}), BadParameters);

    GraphSet dup = r;
    dup.elements[1] = dup.elements[0];
    CHECK_THROWS_AS(check_rds_counting(dup, RDSParams{16, 4, 16, 4}), BadParameters);
}

TEST_CASE("counting cap") {
    GraphSet r;
    r.n = 12;
    r.t = 2;
    r.m = 3;
    r.form = InnerForm::dot(12);
    r.elements.emplace_back(0, ZqVec{0, 0, 0});
    CHECK_THROWS_AS(check_rds_counting(r, RDSParams{4096, 64, 1, 0}), BadParameters);
}
