#include <doctest.h>

#include <random>
#include <sstream>

#include "gbent/constructions.hpp"
#include "gbent/io.hpp"

using namespace gbent;

TEST_CASE("hex encoding") {
    CHECK(to_hex(0) == "0");
    CHECK(to_hex(0x1b) == "1b");
    CHECK(parse_hex("1b") == 0x1b);
    CHECK(parse_hex("0") == 0);
    CHECK_THROWS_AS(parse_hex("zz"), FormatError);
    CHECK_THROWS_AS(parse_hex(""), FormatError);
}

TEST_CASE("function tables round-trip") {
    std::mt19937 rng(12);
    for (int i = 0; i < 10; ++i) {
        const unsigned n = 1 + rng() % 6;
        const unsigned t = 1 + rng() % 3;
        InnerForm form = InnerForm::dot(n);
        if (n % 2 == 0 && (rng() & 1))
            form = InnerForm::trace(FieldCtx(n / 2));
        std::vector<uint8_t> table(size_t{1} << n);
        for (auto& v : table)
            v = static_cast<uint8_t>(rng() & ((1u << t) - 1));
        const GBFunc f(t, form, table);

        std::stringstream ss;
        write_function(ss, f);
        CHECK(read_function(ss) == f);
    }
}

TEST_CASE("function header carries a non-default modulus") {
    FieldCtx ctx(3, 0b1101); // X^3 + X^2 + 1
    const GBFunc f = psap_trace_pair(ctx, ctx.elem(1), ctx.elem(2));
    std::stringstream ss;
    write_function(ss, f);
    CHECK(ss.str().find("modulus=d") != std::string::npos);
    const GBFunc g = read_function(ss);
    CHECK(g == f);
    CHECK(g.form().field().modulus() == 0b1101);
}

TEST_CASE("function parsing errors") {
    std::stringstream missing("n=4 t=2 form=dot\n0\n1\n");
    CHECK_THROWS_AS(read_function(missing), FormatError);
    std::stringstream range("n=2 t=1 form=dot\n0\n2\n0\n0\n");
    CHECK_THROWS_AS(read_function(range), FormatError);
    std::stringstream form("n=2 t=1 form=weird\n0\n0\n0\n0\n");
    CHECK_THROWS_AS(read_function(form), FormatError);
    std::stringstream odd("n=3 t=1 form=trace\n");
    CHECK_THROWS_AS(read_function(odd), FormatError);
}

TEST_CASE("spread files round-trip and are gatekept") {
    FieldCtx ctx(2);
    const PartialSpread spread = desarguesian_spread(ctx);
    std::stringstream ss;
    write_spread(ss, spread);
    const PartialSpread back = read_spread(ss);
    REQUIRE(back.members.size() == spread.members.size());
    for (size_t i = 0; i < back.members.size(); ++i)
        CHECK(back.members[i].membership() == spread.members[i].membership());

    std::stringstream bad("n=4\n1,2\n1,2\n");
    CHECK_THROWS_AS(read_spread(bad), FormatError);
    std::stringstream dep("n=4\n1,2,3\n");
    CHECK_THROWS_AS(read_spread(dep), DimensionError);
    std::stringstream comments("n=4\n# a comment\n1,2\n\n4,8\n");
    CHECK(read_spread(comments).members.size() == 2);
}

TEST_CASE("vectorial files round-trip") {
    FieldCtx ctx(2);
    const PartialSpread spread = desarguesian_spread(ctx);
    std::vector<ZqVec> phi;
    for (size_t i = 0; i < 4; ++i)
        phi.push_back(zq_vec_from_index(3 - i, 2, 2));
    const VecGBFunc f = spread_bijection_vectorial(1, InnerForm::dot(4), spread, phi, 2);

    std::stringstream ss;
    write_vectorial(ss, f);
    const VecGBFunc back = read_vectorial(ss);
    REQUIRE(back.m() == 2);
    CHECK(back.components()[0] == f.components()[0]);
    CHECK(back.components()[1] == f.components()[1]);
}

TEST_CASE("bijection files round-trip") {
    std::vector<ZqVec> phi;
    for (size_t i = 0; i < 16; ++i)
        phi.push_back(zq_vec_from_index(15 - i, 4, 2));
    std::stringstream ss;
    write_bijection(ss, phi);
    CHECK(read_bijection(ss, 16, 2) == phi);

    std::stringstream bad("1 -> (0)\n1 -> (1)\n");
    CHECK_THROWS_AS(read_bijection(bad, 2, 1), FormatError);
    std::stringstream short_line("1 -> (0,1)\nnonsense\n");
    CHECK_THROWS_AS(read_bijection(short_line, 2, 2), FormatError);
}

TEST_CASE("spectrum output shape") {
    GBFunc f(2, InnerForm::dot(2), {0, 1, 2, 3});
    std::stringstream ss;
    write_spectrum(ss, walsh_transform(f));
    std::string line;
    std::getline(ss, line);
    CHECK(line == "n=2 t=2");
    size_t rows = 0;
    while (std::getline(ss, line))
        rows += !line.empty();
    CHECK(rows == 4);
}
