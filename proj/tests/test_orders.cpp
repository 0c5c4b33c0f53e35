#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "maxdet/constructions.hpp"
#include "maxdet/orders.hpp"

using namespace maxdet;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = (std::filesystem::temp_directory_path() /
                ("maxdet_orders_" + std::to_string(++counter) + ".matrix"))
                   .string();
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::set<int> order_set(const OrderRegistry& reg) {
    return {reg.orders().begin(), reg.orders().end()};
}

}  // namespace

TEST_CASE("registry mode parsing") {
    CHECK(parse_mode("constructive") == RegistryMode::constructive);
    CHECK(parse_mode("known-orders") == RegistryMode::known_orders);
    CHECK(parse_mode("conjecture") == RegistryMode::conjecture);
    CHECK(to_string(RegistryMode::known_orders) == "known-orders");
    CHECK_THROWS_AS(parse_mode("bogus"), parse_error);
}

TEST_CASE("constructive registry contents") {
    const auto reg = OrderRegistry::build(16, RegistryMode::constructive);
    CHECK(order_set(reg) == std::set<int>{1, 2, 4, 8, 12, 16});
    CHECK(reg.realization(12).kind == Realization::Kind::paley1);
    CHECK(reg.realization(8).kind == Realization::Kind::sylvester);

    const auto reg28 = OrderRegistry::build(28, RegistryMode::constructive);
    CHECK(reg28.contains(28));  // second Paley construction, p = 13
    CHECK(reg28.realization(28).kind == Realization::Kind::paley2);
    CHECK(reg28.contains(24));  // Kronecker 2 x 12
}

TEST_CASE("conjecture registry contents") {
    const auto reg = OrderRegistry::build(12, RegistryMode::conjecture);
    CHECK(order_set(reg) == std::set<int>{1, 2, 4, 8, 12});

    // Constructive realizations are kept in conjecture mode.
    const auto reg20 = OrderRegistry::build(20, RegistryMode::conjecture);
    CHECK(reg20.realization(20).kind == Realization::Kind::paley1);
}

TEST_CASE("registry modes are nested") {
    const int cap = 120;
    const auto c = OrderRegistry::build(cap, RegistryMode::constructive);
    const auto k = OrderRegistry::build(cap, RegistryMode::known_orders);
    const auto j = OrderRegistry::build(cap, RegistryMode::conjecture);
    const auto cs = order_set(c), ks = order_set(k), js = order_set(j);
    CHECK(std::includes(ks.begin(), ks.end(), cs.begin(), cs.end()));
    CHECK(std::includes(js.begin(), js.end(), ks.begin(), ks.end()));
    // Conjecture mode has every multiple of 4 up to the cap.
    for (int n = 4; n <= cap; n += 4) CHECK(js.count(n) == 1);
}

TEST_CASE("every constructive order materializes to a Hadamard matrix") {
    const auto reg = OrderRegistry::build(64, RegistryMode::constructive);
    for (int n : reg.orders()) {
        const auto m = reg.materialize(n);
        REQUIRE(m.has_value());
        CHECK(m->order() == n);
        CHECK(is_hadamard(*m));
    }
}

TEST_CASE("assumed orders do not materialize") {
    const auto reg = OrderRegistry::build(60, RegistryMode::conjecture);
    REQUIRE(reg.contains(52));
    CHECK(reg.realization(52).kind == Realization::Kind::assumed);
    CHECK_FALSE(reg.materialize(52).has_value());
    const auto mat = reg.materializable_orders();
    CHECK(std::find(mat.begin(), mat.end(), 52) == mat.end());
    CHECK(std::find(mat.begin(), mat.end(), 48) != mat.end());
}

TEST_CASE("load_matrix accepts a valid Hadamard file") {
    std::ostringstream text;
    write_matrix(text, paley_one(19));
    TempFile f(text.str());

    auto reg = OrderRegistry::build(40, RegistryMode::constructive);
    reg.load_matrix(f.path);
    CHECK(reg.contains(20));
    const auto m = reg.materialize(20);
    REQUIRE(m.has_value());
    CHECK(is_hadamard(*m));
}

TEST_CASE("load_matrix rejects bad input and leaves the registry unchanged") {
    auto reg = OrderRegistry::build(16, RegistryMode::constructive);
    const auto before = order_set(reg);

    TempFile not_hadamard("3\n+++\n+++\n+++\n");
    CHECK_THROWS_AS(reg.load_matrix(not_hadamard.path), error);
    TempFile malformed("2\n+*\n++\n");
    CHECK_THROWS_AS(reg.load_matrix(malformed.path), parse_error);
    CHECK_THROWS_AS(reg.load_matrix("/nonexistent/file"), error);

    CHECK(order_set(reg) == before);
}

TEST_CASE("delta") {
    const auto reg = OrderRegistry::build(64, RegistryMode::constructive);

    const DeltaResult d12 = reg.delta(12);
    CHECK(d12.delta == 0);
    CHECK(d12.h_primary == 12);
    CHECK_FALSE(d12.h_secondary.has_value());

    const DeltaResult d5 = reg.delta(5);
    CHECK(d5.delta == 1);
    CHECK(d5.h_primary == 4);

    const DeltaResult d6 = reg.delta(6);
    CHECK(d6.delta == 2);
    CHECK(d6.h_primary == 4);  // tie broken below n
    REQUIRE(d6.h_secondary.has_value());
    CHECK(*d6.h_secondary == 8);

    CHECK_THROWS_AS(reg.delta(60), error_registry_too_small);
}

TEST_CASE("delta never exceeds half the spacing in conjecture mode") {
    const auto reg = OrderRegistry::build(600, RegistryMode::conjecture);
    for (int n = 4; n <= 300; ++n) CHECK(reg.delta(n).delta <= 2);
}

TEST_CASE("gamma") {
    const auto reg = OrderRegistry::build(64, RegistryMode::constructive);
    CHECK(reg.gamma(0.5) == 0);
    CHECK(reg.gamma(2) == 2);   // orders 1, 2, 4: max gap 2
    CHECK(reg.gamma(8) == 4);   // gap 8 -> 12
    CHECK(reg.gamma(13) == 4);
    CHECK_THROWS_AS(reg.gamma(64), error_registry_too_small);
}

TEST_CASE("prime gap table") {
    const GapTable gt(200);
    const auto& p = gt.primes();
    REQUIRE(p.size() >= 10);
    CHECK(p[0] == 2);
    CHECK(p[4] == 11);
    CHECK(std::find(p.begin(), p.end(), 199) != p.end());

    CHECK(gt.lambda(1.5) == 0);
    CHECK(gt.lambda(2) == 1);    // gap 2 -> 3
    CHECK(gt.lambda(10) == 4);   // gap 7 -> 11
    CHECK(gt.lambda(100) == 8);  // gap 89 -> 97
    CHECK_THROWS_AS(gt.lambda(200), error);  // successor of 199 not sieved
}
