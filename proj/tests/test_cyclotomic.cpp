#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "gbent/cyclotomic.hpp"

using namespace gbent;

namespace {

CycInt random_element(std::mt19937& rng, unsigned t, int64_t bound) {
    std::vector<int64_t> coords(size_t{1} << (t - 1));
    for (auto& c : coords)
        c = static_cast<int64_t>(rng() % (2 * bound + 1)) - bound;
    return CycInt(t, std::move(coords));
}

// A sum of count random signed root powers.
CycInt random_root_sum(std::mt19937& rng, unsigned t, unsigned count) {
    CycInt sum(t);
    for (unsigned i = 0; i < count; ++i) {
        const CycInt r = CycInt::root_power(t, static_cast<int64_t>(rng() % (1u << t)));
        sum += (rng() & 1) ? -r : r;
    }
    return sum;
}

} // namespace

TEST_CASE("root powers reduce by zeta^(2^(t-1)) = -1") {
    CHECK(CycInt::root_power(2, 0) == CycInt(2, {1, 0}));
    CHECK(CycInt::root_power(2, 2) == CycInt(2, {-1, 0}));
    CHECK(CycInt::root_power(3, 5) == CycInt(3, {0, -1, 0, 0}));
    for (unsigned t : {1u, 2u, 3u, 4u}) {
        const int64_t half = int64_t{1} << (t - 1);
        for (int64_t k = -10; k < 40; ++k)
            CHECK(CycInt::root_power(t, k + half) == -CycInt::root_power(t, k));
    }
}

TEST_CASE("ring multiplication basics") {
    CHECK(CycInt(2, {1, 1}) * CycInt(2, {1, -1}) == CycInt(2, {2, 0}));
    CHECK(CycInt::root_power(3, 1) * CycInt::root_power(3, 3) == CycInt(3, {-1, 0, 0, 0}));
    std::mt19937 rng(11);
    for (unsigned t : {1u, 2u, 3u, 4u}) {
        const CycInt one = CycInt::rational(t, 1);
        for (int i = 0; i < 50; ++i) {
            const CycInt a = random_element(rng, t, 100);
            CHECK(a * one == a);
        }
    }
}

TEST_CASE("ring laws, randomized") {
    std::mt19937 rng(17);
    for (unsigned t : {1u, 2u, 3u, 4u}) {
        for (int i = 0; i < 100; ++i) {
            const CycInt a = random_element(rng, t, 50);
            const CycInt b = random_element(rng, t, 50);
            const CycInt c = random_element(rng, t, 50);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("conjugation") {
    CHECK(conj(CycInt(2, {0, 1})) == CycInt(2, {0, -1}));
    CHECK(conj(CycInt(2, {7, 0})) == CycInt(2, {7, 0}));
    CHECK(conj(CycInt(3, {1, 1, 0, 0})) == CycInt(3, {1, 0, 0, -1}));
    std::mt19937 rng(23);
    for (unsigned t : {1u, 2u, 3u, 4u}) {
        for (int i = 0; i < 50; ++i) {
            const CycInt a = random_element(rng, t, 50);
            CHECK(conj(conj(a)) == a);
        }
        // conj(zeta^k) = zeta^(2^t - k)
        for (int64_t k = 0; k < (int64_t{1} << t); ++k)
            CHECK(conj(CycInt::root_power(t, k)) ==
                  CycInt::root_power(t, (int64_t{1} << t) - k));
    }
}

TEST_CASE("squared modulus of root-power sums") {
    std::mt19937 rng(29);
    // For t <= 2 the product with the conjugate is a nonnegative ordinary
    // integer. For t >= 3 the real subfield is larger than Q, so only
    // conj-invariance can be asserted for general sums: e.g. 1 + zeta at t=3
    // has |.|^2 = 2 + sqrt(2).
    for (unsigned t : {1u, 2u}) {
        for (int i = 0; i < 200; ++i) {
            const CycInt a = random_root_sum(rng, t, rng() % 64);
            const CycInt p = a * conj(a);
            CHECK(p.is_rational());
            CHECK(p[0] >= 0);
            CHECK(norm_squared(a) == p[0]);
        }
    }
    for (unsigned t : {3u, 4u}) {
        for (int i = 0; i < 200; ++i) {
            const CycInt a = random_root_sum(rng, t, rng() % 64);
            const CycInt p = a * conj(a);
            CHECK(conj(p) == p);
            CHECK(p[0] >= 0); // rational part of |a|^2
        }
    }
    const CycInt one_plus_zeta = CycInt(3, {1, 1, 0, 0});
    CHECK_FALSE((one_plus_zeta * conj(one_plus_zeta)).is_rational());
    CHECK_THROWS_AS(norm_squared(one_plus_zeta), NotRational);
}

TEST_CASE("as_regular_value") {
    CHECK(as_regular_value(CycInt(2, {0, -4}), 2) == 3u);
    CHECK_FALSE(as_regular_value(CycInt(2, {4, 4}), 2).has_value());
    CHECK(as_regular_value(CycInt(1, {-2}), 1) == 1u);
    CHECK(as_regular_value(CycInt(3, {0, 0, 8, 0}), 3) == 2u);
    CHECK_FALSE(as_regular_value(CycInt(2, {0, 3}), 2).has_value());
    CHECK_FALSE(as_regular_value(CycInt(2, {0, 0}), 2).has_value());
    for (unsigned t : {1u, 2u, 3u}) {
        for (unsigned half_n : {0u, 1u, 3u}) {
            for (int64_t j = 0; j < (int64_t{1} << t); ++j) {
                const CycInt v = CycInt::rational(t, int64_t{1} << half_n) *
                                 CycInt::root_power(t, j);
                CHECK(as_regular_value(v, half_n) == static_cast<unsigned>(j));
            }
        }
    }
}

TEST_CASE("rationality is equivalent to coordinate symmetry") {
    CHECK(rational_symmetry_holds({5, 1, 0, 1}, 2));
    CHECK_FALSE(rational_symmetry_holds({0, 1, 0, 2}, 2));
    CHECK(rational_symmetry_holds({1, 2, 3, 4, 0, 2, 3, 4}, 3));
    CHECK_THROWS_AS(rational_symmetry_holds({1, 2, 3}, 2), ExponentMismatch);

    std::mt19937 rng(31);
    for (unsigned t : {2u, 3u, 4u}) {
        const size_t q = size_t{1} << t;
        for (int i = 0; i < 500; ++i) {
            std::vector<int64_t> w(q);
            for (auto& x : w)
                x = static_cast<int64_t>(rng() % 7) - 3;
            if (rng() & 1) { // force the symmetric case half of the time
                for (size_t j = 1; j < q / 2; ++j)
                    w[q / 2 + j] = w[j];
            }
            // direct basis evaluation as the oracle
            CycInt sum(t);
            for (size_t k = 0; k < q; ++k)
                sum += CycInt::rational(t, w[k]) * CycInt::root_power(t, static_cast<int64_t>(k));
            CHECK(rational_symmetry_holds(w, t) == sum.is_rational());
        }
    }
}

TEST_CASE("coordinate overflow is a hard error") {
    const int64_t big = int64_t{1} << 62;
    CHECK_THROWS_AS(CycInt(2, {big, 0}) + CycInt(2, {big, 0}), ArithmeticOverflow);
    CHECK_THROWS_AS(CycInt(2, {big, 0}) * CycInt::rational(2, 4), ArithmeticOverflow);
}

TEST_CASE("exponent mismatches are rejected") {
    CHECK_THROWS_AS(CycInt(2, {1, 0}) + CycInt(3, {1, 0, 0, 0}), ExponentMismatch);
    CHECK_THROWS_AS(CycInt(2, {1, 0, 0}), ExponentMismatch);
    CHECK_THROWS_AS(CycInt(7), ExponentMismatch);
}
