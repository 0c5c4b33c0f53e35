#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "maxdet/constructions.hpp"
#include "maxdet/witnesses.hpp"

using namespace maxdet;

namespace {

ExactInt pow_exact(long base, unsigned long e) {
    ExactInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

}  // namespace

TEST_CASE("maximize_excess finds the switching-class maximum for small orders") {
    const SignMatrix s4 = sylvester(2);
    CHECK(switching_excess_max(s4) == 8);
    const SignMatrix m4 = maximize_excess(s4);
    CHECK(excess(m4) == 8);
    CHECK(is_hadamard(m4));

    const SignMatrix s8 = sylvester(3);
    CHECK(switching_excess_max(s8) == 20);
    CHECK(excess(maximize_excess(s8)) == 20);

    CHECK_THROWS_AS(switching_excess_max(SignMatrix(32)), precondition_error);
}

TEST_CASE("maximize_excess never decreases the excess") {
    const SignMatrix h12 = paley_one(11);
    const SignMatrix best = maximize_excess(h12, {.restarts = 8, .seed = 3});
    CHECK(is_hadamard(best));
    CHECK(excess(best) >= excess(h12));
    // Already-optimal input stays optimal.
    CHECK(excess(maximize_excess(best, {.restarts = 2, .seed = 1})) >=
          excess(best));
}

TEST_CASE("maximize_excess is deterministic for a fixed seed") {
    const SignMatrix h12 = paley_one(11);
    const SearchParams p{.restarts = 4, .seed = 17};
    CHECK(maximize_excess(h12, p) == maximize_excess(h12, p));
}

TEST_CASE("witness_minor") {
    const auto w3 = witness_minor(sylvester(2), 3);
    CHECK(w3.verified);
    CHECK(w3.n == 3);
    CHECK(w3.matrix.order() == 3);
    CHECK(w3.det_abs == 4);
    CHECK(w3.det_abs == abs(det_exact(w3.matrix)));
    CHECK(w3.construction.kind == Construction::Kind::minor);

    const auto w11 = witness_minor(paley_one(11), 11);
    CHECK(w11.verified);
    CHECK(w11.det_abs == 248832);  // 12^5, a 1x1 minor is always unimodular

    const auto w4 = witness_minor(sylvester(3), 4);
    CHECK(w4.verified);
    CHECK(w4.det_abs >= 8);
    CHECK(w4.ln_det >= w4.claimed_bound - 1e-9);

    CHECK_THROWS_AS(witness_minor(sylvester(2), 4), precondition_error);
    CHECK_THROWS_AS(witness_minor(SignMatrix(3, +1), 2), error);
}

TEST_CASE("witness_major") {
    const auto w3 = witness_major(sylvester(1), 3);
    CHECK(w3.verified);
    CHECK(w3.det_abs == 4);  // 2^{3-2} * 2^1 exactly

    const auto w6 = witness_major(sylvester(2), 6);
    CHECK(w6.verified);
    CHECK(w6.det_abs == 64);  // 2^2 * 4^2

    const auto w2 = witness_major(SignMatrix(1), 2);
    CHECK(w2.verified);
    CHECK(w2.det_abs == 2);

    // The claim is an equality for this construction.
    const auto w14 = witness_major(paley_one(11), 14);
    CHECK(w14.verified);
    CHECK(w14.det_abs == 4 * pow_exact(12, 6));

    CHECK_THROWS_AS(witness_major(sylvester(2), 4), precondition_error);
}

TEST_CASE("witness_excess_border") {
    const auto w5 = witness_excess_border(sylvester(2));
    CHECK(w5.verified);
    CHECK(w5.n == 5);
    REQUIRE(w5.sigma_achieved.has_value());
    CHECK(*w5.sigma_achieved == 8);
    CHECK(w5.det_abs == 48);  // 4^1 * (4 + 8)

    const auto w9 = witness_excess_border(sylvester(3));
    CHECK(w9.verified);
    REQUIRE(w9.sigma_achieved.has_value());
    CHECK(*w9.sigma_achieved == 20);
    CHECK(w9.det_abs == 14336);  // 8^3 * (8 + 20)
}

TEST_CASE("witness_double_border") {
    const auto w6 = witness_double_border(sylvester(2));
    CHECK(w6.verified);
    CHECK(w6.n == 6);
    CHECK(w6.det_abs == 96);  // 2 * 48

    const auto w10 = witness_double_border(sylvester(3));
    CHECK(w10.verified);
    CHECK(w10.det_abs == 28672);  // 2 * 14336
}

TEST_CASE("best_witness") {
    const auto reg = OrderRegistry::build(64, RegistryMode::constructive);
    const SearchParams p{.restarts = 8, .seed = 1};

    const auto w3 = best_witness(3, reg, p);
    CHECK(w3.verified);
    CHECK(w3.det_abs == 4);  // exhaustive D(3)

    const auto w5 = best_witness(5, reg, p);
    CHECK(w5.verified);
    CHECK(w5.det_abs == 48);  // exhaustive D(5), excess border on order 4

    const auto w12 = best_witness(12, reg, p);
    CHECK(w12.verified);
    CHECK(w12.construction.kind == Construction::Kind::hadamard);
    CHECK(w12.det_abs == pow_exact(12, 6));

    const auto w6 = best_witness(6, reg, p);
    CHECK(w6.verified);
    CHECK(w6.det_abs >= 96);
}

TEST_CASE("best_witness matches the unconditional bound near Hadamard orders") {
    const auto reg = OrderRegistry::build(64, RegistryMode::constructive);
    const SearchParams p{.restarts = 8, .seed = 1};
    for (int n : {7, 11, 13, 15, 17, 23}) {
        const auto u = unconditional_bound(n, reg);
        const auto w = best_witness(n, reg, p);
        CHECK(w.verified);
        CHECK(w.ln_det >= u.ln_d - 1e-9);
    }
}

TEST_CASE("best_witness degrades to a border witness under a tiny registry") {
    const auto reg = OrderRegistry::build(4, RegistryMode::constructive);
    const auto w = best_witness(9, reg, {});
    CHECK(w.verified);
    CHECK(w.construction.kind == Construction::Kind::major);
    CHECK(w.det_abs == 512);  // 2^5 * 4^2 from the order-4 base
}

TEST_CASE("verify_block_identity") {
    const SignMatrix s4 = sylvester(2);
    CHECK(verify_block_identity(s4, {0}, {0}));
    CHECK(verify_block_identity(s4, {3}, {3}));
    CHECK(verify_block_identity(s4, {0, 1}, {0, 1}));
    // Both complementary minors singular: the identity still holds (0 = 0).
    CHECK(verify_block_identity(s4, {0, 1}, {0, 2}));

    std::mt19937_64 rng(11);
    for (const int h : {8, 12, 16}) {
        const auto reg = OrderRegistry::build(16, RegistryMode::constructive);
        const SignMatrix m = *reg.materialize(h);
        for (int trial = 0; trial < 50; ++trial) {
            const int d = 1 + int(rng() % (h - 1));
            std::vector<int> idx(h);
            for (int i = 0; i < h; ++i) idx[i] = i;
            std::shuffle(idx.begin(), idx.end(), rng);
            std::vector<int> rows(idx.begin(), idx.begin() + d);
            std::shuffle(idx.begin(), idx.end(), rng);
            std::vector<int> cols(idx.begin(), idx.begin() + d);
            std::sort(rows.begin(), rows.end());
            std::sort(cols.begin(), cols.end());
            CHECK(verify_block_identity(m, rows, cols));
        }
    }

    CHECK_FALSE(verify_block_identity(SignMatrix(4, +1), {0}, {0}));
}

TEST_CASE("reverify accepts genuine certificates and rejects tampering") {
    const auto reg = OrderRegistry::build(32, RegistryMode::constructive);
    for (int n : {3, 5, 6, 11, 12, 13}) {
        auto w = best_witness(n, reg, {.restarts = 4, .seed = 2});
        CHECK(reverify(w));
        auto bad = w;
        bad.det_abs += 1;
        CHECK_FALSE(reverify(bad));
        auto worse = w;
        worse.claimed_bound = w.ln_det + 1.0;
        CHECK_FALSE(reverify(worse));
    }
}

TEST_CASE("construction tags round-trip") {
    CHECK(parse_construction_kind("minor") == Construction::Kind::minor);
    CHECK(parse_construction_kind("excess-border") ==
          Construction::Kind::excess_border);
    CHECK(parse_construction_kind("double-border") ==
          Construction::Kind::double_border);
    CHECK(parse_construction_kind("sylvester-double") ==
          Construction::Kind::sylvester_double);
    CHECK_THROWS_AS(parse_construction_kind("nonsense"), parse_error);
}
