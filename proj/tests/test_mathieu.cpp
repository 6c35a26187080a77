#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "moonshine/chartable.hpp"

using namespace moonshine;

TEST_CASE("table integrity: sum of squared dimensions equals group order") {
    CHECK(m12_table().sum_of_dim_squares() == BigInt(95040));
    CHECK(m12_table().group_order() == BigInt(95040));
    CHECK(m12_2_table().sum_of_dim_squares() == BigInt(190080));
    CHECK(m12_2_table().group_order() == BigInt(190080));
    CHECK(m12_table().classes().size() == 15);
    CHECK(m12_2_table().classes().size() == 21);
    CHECK(m12_2_table().inner_class_count() == 12);
}

TEST_CASE("character values: spot entries") {
    const CharTable& t = m12_table();
    CHECK(t.value("chi2", "1A").as_integer() == 11);
    CHECK(t.value("chi6", "2B").as_integer() == -3);
    CHECK(t.value("chi4", "11A") == CycValue::parse("cyc(11;1:1,3:1,4:1,5:1,9:1)"));
    CHECK(t.value("chi4", "11B") == t.value("chi4", "11A").conjugate());
    CHECK_THROWS_AS(t.value("chi99", "1A"), std::domain_error);
    CHECK_THROWS_AS(t.value("chi1", "9Z"), std::domain_error);
}

TEST_CASE("cyclotomic arithmetic: alpha + alpha* = -1 at conductor 11") {
    CycValue alpha = m12_table().value("chi4", "11A");
    CHECK(alpha + alpha.conjugate() == CycValue(-1));
    CHECK(!alpha.is_integer());
    CycValue b = CycValue::parse("cyc(12;7:-1,11:1)");
    CHECK(b * b == CycValue(3));  // the 12th-root combination squares to 3
    CycValue a5 = CycValue::parse("cyc(5;1:1,2:-1,3:-1,4:1)");
    CHECK(a5 * a5 == CycValue(5));
}

TEST_CASE("outer involution: swaps, fixed points, involution, order preserved") {
    CHECK(outer_involution("4A") == "4B");
    CHECK(outer_involution("8A") == "8B");
    CHECK(outer_involution("11B") == "11A");
    CHECK(outer_involution("1A") == "1A");
    CHECK(outer_involution("6B") == "6B");
    for (const auto& c : m12_table().classes()) {
        CHECK(outer_involution(outer_involution(c.label)) == c.label);
        std::string img = outer_involution(c.label);
        CHECK(img.substr(0, img.size() - 1) == c.label.substr(0, c.label.size() - 1));
    }
    CHECK_THROWS_AS(outer_involution("7A"), std::domain_error);
}

TEST_CASE("irrep pairing under the involution: chi_i(c) = chi_sigma(i)(phi(c))") {
    const CharTable& t = m12_table();
    auto sigma = [](const std::string& irrep) -> std::string {
        if (irrep == "chi2") return "chi3";
        if (irrep == "chi3") return "chi2";
        if (irrep == "chi4") return "chi5";
        if (irrep == "chi5") return "chi4";
        if (irrep == "chi9") return "chi10";
        if (irrep == "chi10") return "chi9";
        return irrep;
    };
    for (const auto& irrep : t.irreps())
        for (const auto& cls : t.classes())
            CHECK(t.value(irrep, cls.label) == t.value(sigma(irrep), outer_involution(cls.label)));
}

TEST_CASE("m24_split: pairs, shape concatenation, 7A not reducible") {
    auto p2a = m24_split("2A");
    REQUIRE(p2a.has_value());
    CHECK(p2a->first == "2B");
    CHECK(p2a->second == "2B");

    auto p4b = m24_split("4B");
    REQUIRE(p4b.has_value());
    CHECK(p4b->first == "4B");
    CHECK(p4b->second == "4A");

    CHECK(!m24_split("7A").has_value());
    CHECK_THROWS_AS(m24_split("12B"), std::domain_error);

    const CharTable& t = m12_table();
    for (const auto& row : m24_split_rows()) {
        if (!row.m12_pair) continue;
        const auto& [a, b] = *row.m12_pair;
        CHECK(outer_involution(a) == b);
        CHECK(concatenate(*t.class_id(a).shape, *t.class_id(b).shape) == row.m24_shape);
        CHECK(row.m24_shape.points() == 24);
    }
}

TEST_CASE("fusion onto the index-two extension: image size 12, fused pairs") {
    CHECK(fusion_m12_to_m12_2("4A") == "4A");
    CHECK(fusion_m12_to_m12_2("4B") == "4A");
    CHECK(fusion_m12_to_m12_2("2B") == "2B");
    CHECK(fusion_m12_to_m12_2("11B") == "11A");
    std::set<std::string> image;
    for (const auto& c : m12_table().classes()) {
        std::string f = fusion_m12_to_m12_2(c.label);
        image.insert(f);
        CHECK(m12_2_table().class_index(f) < m12_2_table().inner_class_count());
    }
    CHECK(image.size() == 12);
}

TEST_CASE("bundled irrep decompositions hold as exact class functions") {
    auto checks = verify_decompositions();
    REQUIRE(checks.size() == 4);
    for (const auto& c : checks) {
        INFO(c.id, ": ", c.detail);
        CHECK(c.ok);
    }
    const CharTable& big = m12_2_table();
    const CharTable& small = m12_table();
    CHECK(big.value("chi3", "4A").as_integer() == 2);
    CHECK(small.value("chi2", "4A").as_integer() + small.value("chi3", "4A").as_integer() == 2);
    CHECK(big.dimension("chi12") + big.dimension("chi16") + big.dimension("chi17") +
              big.dimension("chi18") + big.dimension("chi19") + big.dimension("chi20") ==
          BigInt(770));
    CHECK(small.value("chi6", "1A").as_integer() == 45);
}

TEST_CASE("m24 partial data: alpha identity cross-check against hatted sums") {
    const CharTable& m24 = m24_partial_table();
    const CharTable& m12 = m12_table();
    for (const auto& row : m24_split_rows()) {
        if (!row.m12_pair) continue;
        BigInt alpha_m24 = m24.value("chi1", row.m24_class).as_integer() +
                           m24.value("chi23", row.m24_class).as_integer();
        BigInt alpha_hats = 2 + m12.value("chi2", row.m12_pair->first).as_integer() +
                            m12.value("chi2", row.m12_pair->second).as_integer();
        CHECK(alpha_m24 == alpha_hats);
    }
}

TEST_CASE("chartable text round trip and json shape") {
    const CharTable& t = m12_table();
    CharTable reloaded = CharTable::load(t.to_text());
    CHECK(reloaded.to_text() == t.to_text());
    CHECK(reloaded.checksum() == t.checksum());
    std::string js = t.json();
    CHECK(js.find("\"group\":\"m12\"") != std::string::npos);
    CHECK(js.find("1^4.2^4") != std::string::npos);
}
