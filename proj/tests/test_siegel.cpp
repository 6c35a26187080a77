#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "moonshine/cache.hpp"
#include "moonshine/chartable.hpp"
#include "moonshine/siegel.hpp"

using namespace moonshine;

TEST_CASE("additive seeds: weights, levels, leading structure") {
    JacobiForm s1 = additive_seed_phi("1A", Frac(3));
    CHECK(s1.weight == 10);
    CHECK(s1.level == 1);
    CHECK(s1.series.coeff(Frac(1), Frac(1)) == 1);
    CHECK(s1.series.coeff(Frac(1), Frac(0)) == -2);

    CHECK(additive_seed_phi("2A", Frac(2)).weight == 6);
    CHECK(additive_seed_phi("3A", Frac(2)).weight == 4);
    CHECK(additive_seed_phi("5A", Frac(2)).weight == 2);
    JacobiForm s4b = additive_seed_phi("4B", Frac(3));
    CHECK(s4b.weight == 3);
    CHECK(s4b.level == 4);

    JacobiForm d1 = additive_seed_delta("1A", Frac(3));
    CHECK(d1.weight == 5);
    CHECK(d1.index2 == 1);
    CHECK(d1.series.lowest_q_exponent() == Frac(1, 2));
    CHECK(d1.series.coeff(Frac(1, 2), Frac(1, 2)) == 1);
    CHECK(d1.series.coeff(Frac(1, 2), Frac(-1, 2)) == -1);

    CHECK(additive_seed_delta("2B", Frac(2)).weight == 3);
    CHECK(additive_seed_delta("3A", Frac(2)).weight == 2);
    CHECK(additive_seed_delta("5A", Frac(2)).weight == 1);
    CHECK(additive_seed_delta("4A", Frac(2)).weight == 1);
    CHECK_THROWS_AS(additive_seed_delta("4B", Frac(2)), std::domain_error);
    CHECK_THROWS_AS(additive_seed_delta("2A", Frac(2)), std::domain_error);
}

TEST_CASE("lift structure: first Fourier-Jacobi coefficient equals the seed") {
    for (const char* cls : {"1A", "2A"}) {
        LiftSpec spec = phi_lift_spec(cls, Frac(3));
        SiegelForm phi = additive_lift(spec, Frac(3));
        FSeries fj1 = phi.series.fj_coefficient(Frac(1));
        CHECK(equal_to_order(fj1, spec.seed.series, Frac(3)));
    }
    LiftSpec dspec = delta_lift_spec("1A", Frac(3));
    SiegelForm d5 = additive_lift(dspec, Frac(3));
    FSeries fjhalf = d5.series.fj_coefficient(Frac(1, 2));
    CHECK(equal_to_order(fjhalf, dspec.seed.series, Frac(3)));
}

TEST_CASE("Hecke two-oracle agreement for m <= 4 on every integer-index seed") {
    for (const char* cls : {"1A", "2A", "3A", "5A", "4B"}) {
        LiftSpec spec = phi_lift_spec(cls, Frac(5));
        for (long m = 1; m <= 4; ++m) {
            JacobiForm a = hecke_image_divisor_sum(spec, m);
            JacobiForm b = hecke_image_direct(spec, m);
            INFO(cls, " m=", m);
            CHECK(equal_to_order(a.series, b.series, Frac(4)));
            CHECK(!a.series.is_zero() == !b.series.is_zero());
        }
    }
}

TEST_CASE("weight-ten form coefficients: c(1,1,1) = 1 and the q r s block") {
    SiegelForm phi10 = additive_lift(phi_lift_spec("1A", Frac(3)), Frac(3));
    CHECK(phi10.weight2 == 20);
    CHECK(phi10.series.coeff(Frac(1), Frac(1), Frac(1)) == 1);
    CHECK(phi10.series.coeff(Frac(1), Frac(0), Frac(1)) == -2);

    SiegelForm d5 = additive_lift(delta_lift_spec("1A", Frac(3)), Frac(3));
    CHECK(d5.weight2 == 10);
    // lowest term at (1/2, 1/2, 1/2) with unit coefficient, odd in r
    CHECK(d5.series.coeff(Frac(1, 2), Frac(1, 2), Frac(1, 2)) == 1);
    CHECK(d5.series.coeff(Frac(1, 2), Frac(-1, 2), Frac(1, 2)) == -1);
}

TEST_CASE("exchange symmetry c(n,l,m) = c(m,l,n) for every computed lift") {
    for (const char* name : {"phi10", "phi6", "phi3_4b", "delta5", "delta3", "delta1_4a"}) {
        SiegelForm f = siegel_form_by_name(name, Frac(3));
        for (const auto& [e, c] : f.series.terms()) {
            INFO(name, " at ", e.q, " ", e.r, " ", e.s);
            CHECK(f.series.coeff(Frac(e.s, f.series.den()), Frac(e.r, f.series.denr()),
                                 Frac(e.q, f.series.den())) == c);
        }
    }
}

TEST_CASE("r-parity: Phi-type lifts even in l, Delta-type lifts odd") {
    for (const char* name : {"phi10", "phi6"}) {
        SiegelForm f = siegel_form_by_name(name, Frac(3));
        for (const auto& [e, c] : f.series.terms())
            CHECK(f.series.coeff(Frac(e.q, f.series.den()), Frac(-e.r, f.series.denr()),
                                 Frac(e.s, f.series.den())) == c);
    }
    for (const char* name : {"delta5", "delta3"}) {
        SiegelForm f = siegel_form_by_name(name, Frac(3));
        for (const auto& [e, c] : f.series.terms())
            CHECK(f.series.coeff(Frac(e.q, f.series.den()), Frac(-e.r, f.series.denr()),
                                 Frac(e.s, f.series.den())) == -c);
    }
}

TEST_CASE("square splitting: Phi = Delta^2 through the s^3 corner") {
    // order 7/2 exercises the first Fourier-Jacobi level where the lift
    // characters matter (the level-3 images at doubled index 5)
    for (const char* cls : {"1A", "2A", "3A", "5A"}) {
        SquareSplitResult res = square_split_check(cls, Frac(7, 2));
        INFO(cls, ": ", res.first_mismatch);
        CHECK(res.ok);
    }
}

TEST_CASE("lift characters: trivial for even-weight integer-index lifts only") {
    CHECK(phi_lift_spec("1A", Frac(2)).chi(3) == 1);
    CHECK(phi_lift_spec("3A", Frac(2)).chi(2) == 1);
    CHECK(phi_lift_spec("4B", Frac(2)).chi(3) == -1);  // odd weight, level 4
    CHECK(delta_lift_spec("3A", Frac(2)).chi(5) == -1);
    CHECK(delta_lift_spec("3A", Frac(2)).chi(7) == 1);
    CHECK(delta_lift_spec("4A", Frac(2)).chi(3) == -1);
    CHECK(delta_lift_spec("5A", Frac(2)).chi(3) == 1);
    CHECK(delta_lift_spec("2B", Frac(2)).chi(3) == 1);
}

TEST_CASE("genus-two theta constants: hand-enumerated leading terms") {
    FSeries t = theta_genus2({1, 1}, {1, 1}, 1, Frac(2));
    // four lattice points contribute 2 q^(1/8) s^(1/8) (r^(1/4) - r^(-1/4))
    CHECK(t.coeff(Frac(1, 8), Frac(1, 4), Frac(1, 8)) == 2);
    CHECK(t.coeff(Frac(1, 8), Frac(-1, 4), Frac(1, 8)) == -2);
    FSeries t00 = theta_genus2({0, 0}, {0, 0}, 1, Frac(2));
    CHECK(t00.coeff(Frac(0), Frac(0), Frac(0)) == 1);
    CHECK(t00.coeff(Frac(1, 2), Frac(0), Frac(0)) == 2);
    CHECK_THROWS_AS(theta_genus2({2, 0}, {0, 0}, 1, Frac(2)), std::domain_error);
}

TEST_CASE("theta identities: prefactors clear, parity census, product matches lift") {
    ThetaIdentityReport rep = theta_identity_checks(Frac(3));
    INFO(rep.detail);
    CHECK(rep.prefactors_clear);
    CHECK(rep.square_integral);
    CHECK(rep.even_count_ok);
    CHECK(rep.parity_split_ok);
    CHECK(rep.product_matches_lift);
}

TEST_CASE("quotient: weight-3 theta form divides by the weight-1 lift exactly") {
    QuotientReport rep = quotient_check(Frac(3));
    INFO(rep.detail);
    CHECK(rep.ok);
    CHECK(rep.quotient_weight2 == 4);
}

TEST_CASE("catalog and export") {
    CHECK(bkm_form_catalog().size() == 10);
    CHECK(bkm_cartan_matrix()[0][1] == -2);
    SiegelForm d5 = siegel_form_by_name("delta5", Frac(2));
    std::string csv = bkm_root_data_csv(d5);
    CHECK(csv.find("algebra=G1(1)") != std::string::npos);
    CHECK(csv.find("# cartan=[[2,-2,-2],[-2,2,-2],[-2,-2,2]]") != std::string::npos);
    CHECK_THROWS_AS(siegel_form_by_name("nope", Frac(2)), std::domain_error);

    // experimental scaled seeds exist but their lifts are refused cleanly
    JacobiForm sc = scaled_delta_seed("2B", 2, Frac(2));
    CHECK(sc.series.lowest_q_exponent() == Frac(1, 4));
    LiftSpec bad{sc, 2, sc.weight, LiftCharacter::trivial(2), "experimental"};
    CHECK_THROWS_AS(additive_lift(bad, Frac(2)), std::domain_error);
}

TEST_CASE("cache: stored and reloaded series are byte-identical; corruption rebuilds") {
    std::string dir = (std::filesystem::temp_directory_path() / "moonshine-cache-test").string();
    std::filesystem::remove_all(dir);
    SeriesCache cache(dir);
    REQUIRE(cache.enabled());

    SiegelForm cold = cached_siegel_form("delta3", Frac(2), cache);
    SiegelForm warm = cached_siegel_form("delta3", Frac(2), cache);
    CHECK(cold.series == warm.series);
    CHECK(cold.series.serialize() == warm.series.serialize());
    CHECK(std::filesystem::exists(cache.path_for("delta3", Frac(2))));

    // corrupt entry: treated as absent, recomputed and rewritten
    {
        std::ofstream out(cache.path_for("delta3", Frac(2)), std::ios::trunc);
        out << "{not json";
    }
    SiegelForm rebuilt = cached_siegel_form("delta3", Frac(2), cache);
    CHECK(rebuilt.series == cold.series);
    SeriesCache disabled;
    CHECK(!disabled.enabled());
    CHECK(!disabled.load("delta3", Frac(2)).has_value());
    std::filesystem::remove_all(dir);
}
