#include <doctest.h>

#include <random>
#include <set>

#include "cmds/error.hpp"
#include "cmds/field.hpp"

using namespace cmds;

namespace {

// reduction oracle: multiply coordinate vectors as polynomials over GF(p),
// then reduce by the modulus via schoolbook long division
FieldElem mul_oracle(const FieldCtx& F, const FieldElem& a, const FieldElem& b) {
    const auto p = F.p();
    std::vector<std::uint64_t> prod(2 * F.e(), 0);
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        for (std::size_t j = 0; j < b.coords.size(); ++j)
            prod[i + j] = (prod[i + j] + std::uint64_t(a.coords[i]) * b.coords[j]) % p;
    const auto& m = F.modulus();
    for (std::size_t d = prod.size(); d-- > F.e();) {
        std::uint64_t lead = prod[d];
        if (lead == 0) continue;
        prod[d] = 0;
        for (std::size_t i = 0; i < m.size() - 1; ++i) {
            std::size_t pos = d - (m.size() - 1) + i;
            prod[pos] = (prod[pos] + p - lead * m[i] % p) % p;
        }
    }
    FieldElem r = F.zero();
    for (std::uint32_t i = 0; i < F.e(); ++i) r.coords[i] = static_cast<std::uint32_t>(prod[i]);
    return r;
}

} // namespace

TEST_SUITE("field") {

TEST_CASE("prime field construction") {
    FieldCtx F = FieldCtx::make(7);
    CHECK(F.p() == 7);
    CHECK(F.e() == 1);
    CHECK(F.q() == 7);
    CHECK(F.modulus().empty());
}

TEST_CASE("GF(4) modulus is the unique irreducible quadratic") {
    // oracle: a monic quadratic over GF(2) is irreducible iff it has no root
    std::vector<std::vector<std::uint32_t>> irreducible;
    for (std::uint32_t c0 = 0; c0 < 2; ++c0)
        for (std::uint32_t c1 = 0; c1 < 2; ++c1) {
            auto value = [&](std::uint32_t x) { return (c0 + c1 * x + x * x) % 2; };
            if (value(0) != 0 && value(1) != 0) irreducible.push_back({c0, c1, 1});
        }
    REQUIRE(irreducible.size() == 1);
    CHECK(irreducible[0] == std::vector<std::uint32_t>{1, 1, 1}); // x^2 + x + 1

    FieldCtx F = FieldCtx::make(4);
    CHECK(F.p() == 2);
    CHECK(F.e() == 2);
    CHECK(F.modulus() == irreducible[0]);
}

TEST_CASE("non prime powers are rejected") {
    CHECK_THROWS_WITH_AS(FieldCtx::make(6), doctest::Contains("NotPrimePower"), Error);
    CHECK_THROWS_AS(FieldCtx::make(1), Error);
    CHECK_THROWS_AS(FieldCtx::make(12), Error);
    CHECK_THROWS_AS(FieldCtx::make(0), Error);
}

TEST_CASE("construction is deterministic") {
    for (std::uint64_t q : {4, 8, 9, 16, 27, 25}) {
        FieldCtx a = FieldCtx::make(q), b = FieldCtx::make(q);
        CHECK(a.modulus() == b.modulus());
    }
    CHECK(FieldCtx::make(8).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1}); // x^3 + x + 1
}

TEST_CASE("arithmetic in GF(7)") {
    FieldCtx F = FieldCtx::make(7);
    CHECK(F.mul(F.from_int(3), F.from_int(5)) == F.from_int(1)); // 15 mod 7

    // brute-force inverse of 3
    FieldElem expected = F.zero();
    for (std::uint64_t b = 1; b < 7; ++b)
        if (3 * b % 7 == 1) expected = F.element(b);
    CHECK(expected == F.from_int(5));
    CHECK(F.div(F.from_int(1), F.from_int(3)) == expected);

    CHECK_THROWS_WITH_AS(F.div(F.one(), F.zero()), doctest::Contains("DivisionByZero"), Error);
}

TEST_CASE("arithmetic in GF(4)") {
    FieldCtx F = FieldCtx::make(4);
    FieldElem t = F.element(2); // coords (0,1)
    CHECK(F.mul(t, t) == mul_oracle(F, t, t));
    FieldElem t_plus_1 = F.element(3);
    CHECK(F.mul(t, t) == t_plus_1); // t^2 = t + 1 under x^2 + x + 1
}

TEST_CASE("canonical enumeration") {
    FieldCtx F7 = FieldCtx::make(7);
    auto first3 = F7.enumerate(3);
    CHECK(first3 == std::vector<FieldElem>{F7.element(0), F7.element(1), F7.element(2)});
    CHECK(first3[2].coords == std::vector<std::uint32_t>{2});
    CHECK_THROWS_WITH_AS(F7.enumerate(8), doctest::Contains("TooMany"), Error);

    FieldCtx F4 = FieldCtx::make(4);
    auto all = F4.enumerate(4);
    CHECK(all[0].coords == std::vector<std::uint32_t>{0, 0});
    CHECK(all[1].coords == std::vector<std::uint32_t>{1, 0});
    CHECK(all[2].coords == std::vector<std::uint32_t>{0, 1}); // t
    CHECK(all[3].coords == std::vector<std::uint32_t>{1, 1}); // t + 1
}

TEST_CASE("enumeration yields q distinct elements") {
    for (std::uint64_t q : {7, 8, 9, 16, 25}) {
        FieldCtx F = FieldCtx::make(q);
        auto all = F.enumerate(q);
        std::set<std::uint64_t> seen;
        for (const auto& a : all) {
            CHECK(F.valid(a));
            seen.insert(F.index_of(a));
        }
        CHECK(seen.size() == q);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(20240811);
    for (std::uint64_t q : {7, 8, 9, 16, 27}) {
        FieldCtx F = FieldCtx::make(q);
        std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
        for (int trial = 0; trial < 200; ++trial) {
            FieldElem a = F.element(pick(rng)), b = F.element(pick(rng)), c = F.element(pick(rng));
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
            if (!F.is_zero(a)) {
                CHECK(F.mul(a, F.inv(a)) == F.one());
                CHECK(F.mul(F.div(b, a), a) == b);
            }
            if (F.e() > 1) CHECK(F.mul(a, b) == mul_oracle(F, a, b));
        }
    }
}

TEST_CASE("field spec strings") {
    CHECK(parse_field_spec("q=7").q() == 7);
    CHECK(parse_field_spec("9").q() == 9);
    CHECK_THROWS_AS(parse_field_spec("q=6"), Error);
    CHECK_THROWS_AS(parse_field_spec("seven"), Error);
    CHECK_THROWS_AS(parse_field_spec(""), Error);
}

TEST_CASE("order cap") {
    CHECK_THROWS_WITH_AS(FieldCtx::make(std::uint64_t(1) << 21), doctest::Contains("TooLarge"), Error);
}

} // TEST_SUITE
