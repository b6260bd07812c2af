#include <doctest.h>

#include <random>

#include "ohrns/rns.hpp"

using namespace ohrns;

namespace {

// Independent CRT oracle: scan [0, range) for the value matching all digits.
i64 crt_bruteforce(const std::vector<i64>& digits, const std::vector<i64>& moduli) {
    i64 range = 1;
    for (i64 m : moduli) range *= m;
    for (i64 x = 0; x < range; ++x) {
        bool ok = true;
        for (std::size_t i = 0; i < moduli.size(); ++i)
            if (x % moduli[i] != digits[i]) {
                ok = false;
                break;
            }
        if (ok) return x;
    }
    return -1;
}

const std::vector<i64> kModuli{11, 19, 23};

} // namespace

TEST_CASE("validate_moduli accepts coprime sets and computes the range") {
    ModuliSet m = validate_moduli(kModuli);
    CHECK(m.range() == 4807); // 11*19*23
    CHECK(validate_moduli({2}).range() == 2);
    // Composite but pairwise coprime is allowed.
    CHECK(validate_moduli({4, 9, 25}).range() == 900);
}

TEST_CASE("validate_moduli rejects bad inputs") {
    CHECK_THROWS_WITH_AS(validate_moduli({4, 6}), doctest::Contains("moduli[0]=4"), Error);
    try {
        validate_moduli({3, 5, 10});
    } catch (const Error& e) {
        CHECK(e.name() == "NonCoprime");
        CHECK(std::string(e.what()) == "NonCoprime: moduli[1]=5 and moduli[2]=10 share a common factor");
    }
    CHECK_THROWS_AS(validate_moduli({}), Error);
    CHECK_THROWS_AS(validate_moduli({1, 3}), Error);
    CHECK_THROWS_AS(validate_moduli({7, 7}), Error);
}

TEST_CASE("encode matches the worked residues") {
    ModuliSet m = validate_moduli(kModuli);
    CHECK(encode(96, m) == ResidueVector{{8, 1, 4}});
    CHECK(encode(32, m) == ResidueVector{{10, 13, 9}});
    CHECK(encode(0, m) == ResidueVector{{0, 0, 0}});
    CHECK_THROWS_AS(encode(4807, m), Error);
    CHECK_THROWS_AS(encode(-1, m), Error);
}

TEST_CASE("decode reconstructs exactly") {
    ModuliSet m = validate_moduli(kModuli);
    CHECK(crt_bruteforce({7, 14, 13}, kModuli) == 128);
    CHECK(decode(ResidueVector{{7, 14, 13}}, m) == 128);
    CHECK(decode(ResidueVector{{0, 0, 0}}, m) == 0);
    CHECK(decode(ResidueVector{{8, 1, 4}}, m) == 96);
    CHECK_THROWS_AS(decode(ResidueVector{{11, 0, 0}}, m), Error);
    CHECK_THROWS_AS(decode(ResidueVector{{1, 2}}, m), Error);
}

TEST_CASE("round-trip is exhaustive over the full range") {
    ModuliSet m = validate_moduli(kModuli);
    for (i64 x = 0; x < m.range(); ++x) CHECK(decode(encode(x, m), m) == x);
}

TEST_CASE("round-trip samples a large range") {
    ModuliSet m = validate_moduli({1009, 1013, 1019, 1021});
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> dist(0, m.range() - 1);
    for (int i = 0; i < 2000; ++i) {
        i64 x = dist(rng);
        CHECK(decode(encode(x, m), m) == x);
    }
}

TEST_CASE("digit operations stay within [0, M)") {
    CHECK(digit_add(8, 10, 11) == 7);
    CHECK(digit_add(2, 4, 5) == 1);
    CHECK(digit_mul(2, 4, 5) == 3);
    CHECK(digit_sub(0, 1, 5) == 4);
    for (i64 m : {2, 3, 5, 7, 11}) {
        for (i64 a = 0; a < m; ++a)
            for (i64 b = 0; b < m; ++b) {
                for (i64 r : {digit_add(a, b, m), digit_sub(a, b, m), digit_mul(a, b, m)}) {
                    CHECK(r >= 0);
                    CHECK(r < m);
                }
                CHECK(digit_add(digit_sub(a, b, m), b, m) == a);
            }
    }
    CHECK_THROWS_AS(digit_add(5, 0, 5), Error);
    CHECK_THROWS_AS(digit_add(0, -1, 5), Error);
}

TEST_CASE("digit-wise vector operations") {
    ModuliSet m = validate_moduli(kModuli);
    ResidueVector x{{8, 1, 4}};
    ResidueVector y{{10, 13, 9}};
    CHECK(rns_add(x, y, m) == ResidueVector{{7, 14, 13}});
    // 96*32 = 3072; residues of 3072 are the mul oracle.
    CHECK(rns_mul(x, y, m) == ResidueVector{{3072 % 11, 3072 % 19, 3072 % 23}});
    CHECK(rns_mul(x, y, m) == ResidueVector{{3, 13, 13}});
    CHECK(rns_add(x, encode(0, m), m) == x);
    CHECK_THROWS_AS(rns_add(x, ResidueVector{{1, 2}}, m), Error);
}

TEST_CASE("arithmetic is a homomorphism modulo the range") {
    ModuliSet m = validate_moduli(kModuli);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<i64> dist(0, m.range() - 1);
    for (int i = 0; i < 500; ++i) {
        i64 x = dist(rng), y = dist(rng);
        CHECK(decode(rns_add(encode(x, m), encode(y, m), m), m) == (x + y) % m.range());
        CHECK(decode(rns_sub(encode(x, m), encode(y, m), m), m) ==
              ((x - y) % m.range() + m.range()) % m.range());
        CHECK(decode(rns_mul(encode(x, m), encode(y, m), m), m) == x * y % m.range());
    }
}

TEST_CASE("one-hot codec") {
    OneHot v = to_onehot(2, 5);
    CHECK(v.lane() == 2);
    CHECK(v.width() == 5);
    CHECK(from_onehot(to_onehot(4, 5)) == 4);
    CHECK_THROWS_AS(to_onehot(5, 5), Error);
    CHECK_THROWS_AS(to_onehot(-1, 5), Error);
    CHECK_THROWS_AS(to_onehot(0, 1), Error);
    CHECK(OneHot::from_lanes({0, 0, 1, 0}).lane() == 2);
    CHECK_THROWS_AS(OneHot::from_lanes({0, 0, 0}), Error);
    CHECK_THROWS_AS(OneHot::from_lanes({1, 0, 1}), Error);
    try {
        OneHot::from_lanes({0, 0});
    } catch (const Error& e) {
        CHECK(e.name() == "MalformedOneHot");
    }
}
