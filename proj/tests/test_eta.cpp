#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "moonshine/chartable.hpp"
#include "moonshine/etaproducts.hpp"

using namespace moonshine;

TEST_CASE("eta_product: leading structure and character-predicted coefficients") {
    Frac T(4);
    EtaProduct p1 = eta_product(CycleShape::parse("1^12"), T);
    CHECK(p1.weight2 == 12);
    CHECK(p1.series.lowest_q_exponent() == Frac(1, 2));
    CHECK(p1.series.coeff(Frac(1, 2)) == 1);
    // q^2 coefficient (relative) is 54 = -1 + chi9(1A)
    CHECK(p1.series.coeff(Frac(5, 2)) == 54);
    CHECK(BigInt(-1) + m12_table().value("chi9", "1A").as_integer() == 54);

    EtaProduct p2 = eta_product(CycleShape::parse("1^4.2^4"), T);
    CHECK(p2.series.coeff(Frac(3, 2)) == -4);
    CHECK(-(BigInt(1) + m12_table().value("chi2", "2B").as_integer()) == -4);

    EtaProduct p3 = eta_product(CycleShape::parse("2^6"), T);
    CHECK(p3.series.lowest_q_exponent() == Frac(1, 2));
    CHECK(p3.series.coeff(Frac(3, 2)) == 0);
    CHECK(p3.series.coeff(Frac(5, 2)) == -6);
}

TEST_CASE("balance classification: witnesses and the two unbalanced classes") {
    CHECK(balance_witness(CycleShape::parse("1^12")) == 1);
    CHECK(balance_witness(CycleShape::parse("1.2.3.6")) == 6);
    CHECK(balance_witness(CycleShape::parse("4.8")) == 32);
    CHECK(balance_witness(CycleShape::parse("2.10")) == 20);
    CHECK(balance_witness(CycleShape::parse("2^2.4^2")) == 8);
    CHECK(!balance_witness(CycleShape::parse("1^4.4^2")).has_value());
    CHECK(!balance_witness(CycleShape::parse("1^2.2.8")).has_value());
    // over all 15 classes, exactly 4B and 8B are unbalanced
    for (const auto& c : m12_table().classes()) {
        bool balanced = is_balanced(*c.shape);
        CHECK(balanced == (c.label != "4B" && c.label != "8B"));
    }
}

TEST_CASE("multiplicativity: class shapes reproduce the bundled classification") {
    const long bound = 12;  // the acceptance suite runs the full bound-20 sweep
    for (const auto& c : m12_table().classes()) {
        auto res = is_multiplicative(*c.shape, bound);
        bool expect = (c.label != "4B" && c.label != "8B");
        INFO(c.label, " first counterexample ", res.n, ",", res.m);
        CHECK(res.multiplicative == expect);
    }
    for (const auto& s : multiplicative_non_class_shapes())
        CHECK(is_multiplicative(s, bound).multiplicative);
}

TEST_CASE("multiplicativity counterexample details for 1^4.4^2") {
    auto res = is_multiplicative(CycleShape::parse("1^4.4^2"), 12);
    REQUIRE(!res.multiplicative);
    CHECK(gcd_long(res.n, res.m) == 1);
}

TEST_CASE("eta splitting: g_rho = g_rhohat * g_phi(rhohat) on the bundled rows") {
    for (const auto& row : m24_split_rows()) {
        if (!row.m12_pair) {
            CHECK_THROWS_AS(split_check(row.m24_class, Frac(6)), std::domain_error);
            continue;
        }
        INFO(row.m24_class);
        CHECK(split_check(row.m24_class, Frac(6)));
    }
}

TEST_CASE("weight additivity across the splitting") {
    for (const auto& row : m24_split_rows()) {
        if (!row.m12_pair) continue;
        Frac T(3);
        EtaProduct whole = eta_product(row.m24_shape, T);
        EtaProduct a = eta_product(*m12_table().class_id(row.m12_pair->first).shape, T);
        EtaProduct b = eta_product(*m12_table().class_id(row.m12_pair->second).shape, T);
        CHECK(whole.weight2 == a.weight2 + b.weight2);
    }
}

TEST_CASE("Fock-trace expansions for the twelve balanced shapes") {
    for (const auto& [label, shape] : balanced_shape_classes()) {
        FockExpansion fe = fock_expansions(label, Frac(3));
        for (const auto& chk : fe.checks) {
            INFO(label, " ", chk.id, " got ", to_decimal(chk.got), " want ", to_decimal(chk.expected));
            CHECK(chk.ok());
        }
    }
    CHECK(balanced_shape_classes().size() == 12);
    CHECK_THROWS_AS(fock_expansions("4B", Frac(3)), std::domain_error);
    CHECK_THROWS_AS(fock_expansions("8B", Frac(3)), std::domain_error);
}

TEST_CASE("Fock-trace spot values: 1A gives (12, 90) and (-12, 54)") {
    FockExpansion fe = fock_expansions("1A", Frac(3));
    CHECK(fe.checks[0].got == 12);
    CHECK(fe.checks[1].got == 90);
    CHECK(fe.checks[2].got == -12);
    CHECK(fe.checks[3].got == 54);
    FockExpansion f2 = fock_expansions("2B", Frac(3));
    CHECK(f2.checks[0].got == 4);
    FockExpansion f3 = fock_expansions("3A", Frac(3));
    CHECK(f3.checks[0].got == 3);
}

TEST_CASE("generalized eta products: leading exponent 1/(2N)") {
    FSeries g2 = generalized_eta("2B", 2, Frac(3));
    CHECK(g2.lowest_q_exponent() == Frac(1, 4));
    FSeries g3 = generalized_eta("3A", 3, Frac(3));
    CHECK(g3.lowest_q_exponent() == Frac(1, 6));
    FSeries g1 = generalized_eta("1A", 1, Frac(3));
    CHECK(g1 == eta_product(CycleShape::parse("1^12"), Frac(3)).series);
    CHECK_THROWS_AS(generalized_eta("4B", 4, Frac(3)), std::domain_error);
    CHECK_THROWS_AS(generalized_eta("2B", 3, Frac(3)), std::domain_error);
}

TEST_CASE("commuting-pair classification table") {
    CHECK(classify_gh(2, 2) == "2A");
    CHECK(classify_gh(2, 4) == "4A");
    CHECK(classify_gh(4, 2) == "4A");
    CHECK(classify_gh(3, 3) == "3B");
    CHECK_THROWS_AS(classify_gh(5, 5), std::domain_error);
    // shapes behind the labels
    CHECK(m12_table().class_id("2A").shape->str() == "2^6");
    CHECK(m12_table().class_id("4A").shape->str() == "2^2.4^2");
    CHECK(m12_table().class_id("3B").shape->str() == "3^4");
}
