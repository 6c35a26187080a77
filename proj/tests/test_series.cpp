#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "moonshine/fseries.hpp"

using namespace moonshine;

namespace {

// Independent dense-coefficient oracle, deliberately separate from FSeries:
// truncated polynomials with int64 coefficients, exponent = vector index.
struct Dense {
    std::vector<long long> c;
    explicit Dense(std::size_t n) : c(n, 0) {}
};

Dense dense_mul(const Dense& a, const Dense& b) {
    Dense out(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j + i < b.c.size() && j < b.c.size(); ++j)
            if (b.c[j] != 0 && i + j < out.c.size()) out.c[i + j] += a.c[i] * b.c[j];
    }
    return out;
}

// prod_{n>=1} (1 - q^(jn))^e truncated to len coefficients
Dense dense_euler_pow(long j, long e, std::size_t len) {
    Dense acc(len);
    acc.c[0] = 1;
    for (long n = 1; static_cast<std::size_t>(j * n) < len; ++n) {
        Dense f(len);
        f.c[0] = 1;
        f.c[static_cast<std::size_t>(j * n)] = -1;
        for (long k = 0; k < e; ++k) acc = dense_mul(acc, f);
    }
    return acc;
}

struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long pick(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

FSeries random_series(Rng& rng, bool with_r, long den, long trunc_units) {
    FSeries f(with_r ? VarSet::QR() : VarSet::Q(), den, 2, trunc_units);
    long nterms = rng.pick(0, 6);
    for (long k = 0; k < nterms; ++k) {
        Expo e{rng.pick(0, trunc_units - 1), with_r ? rng.pick(-3, 3) : 0, 0};
        f.set_term(e, rng.pick(-9, 9));
    }
    f.canonicalize();
    return f;
}

}  // namespace

TEST_CASE("addition: cancellation, identity, denominator reconciliation") {
    Frac T(8);
    FSeries one_plus_q = FSeries::constant(1, T) + FSeries::monomial(1, Frac(1), Frac(0), Frac(0), T);
    FSeries q_minus_1 = FSeries::monomial(1, Frac(1), Frac(0), Frac(0), T) - FSeries::constant(1, T);
    FSeries sum = one_plus_q + q_minus_1;
    CHECK(sum.coeff(Frac(1)) == 2);
    CHECK(sum.size() == 1);

    FSeries zero = FSeries::zero(VarSet::Q(), 1, 1, T);
    CHECK(one_plus_q + zero == one_plus_q);

    FSeries a = FSeries::monomial(1, Frac(1, 2), Frac(0), Frac(0), T);
    FSeries b = FSeries::monomial(1, Frac(1, 3), Frac(0), Frac(0), T);
    FSeries c = a + b;
    CHECK(c.den() == 6);
    CHECK(c.coeff(Frac(1, 2)) == 1);
    CHECK(c.coeff(Frac(1, 3)) == 1);

    FSeries rz = FSeries::monomial(1, Frac(0), Frac(1), Frac(0), T);
    FSeries sz = FSeries::monomial(1, Frac(0), Frac(0), Frac(1), T);
    CHECK_THROWS_AS(add(rz, sz), std::domain_error);  // {r} vs {s}: incompatible
}

TEST_CASE("multiplication: geometric inverse, monomial shift") {
    Frac T(10);
    FSeries one_minus_q = FSeries::constant(1, T) - FSeries::monomial(1, Frac(1), Frac(0), Frac(0), T);
    FSeries inv = one_minus_q.invert_unit(Frac(9));
    for (long n = 0; n < 9; ++n) CHECK(inv.coeff(Frac(n)) == 1);
    FSeries prod = mul(one_minus_q, inv);
    CHECK(prod == FSeries::constant(1, Frac(9)));

    FSeries shifted = inv.shifted(Frac(1, 2), Frac(0), Frac(0));
    CHECK(shifted.coeff(Frac(3, 2)) == 1);
    CHECK(shifted.den() == 2);
}

TEST_CASE("eta series basics and eta(tau)^24 against the dense oracle") {
    Frac T(6);
    FSeries eta = eta_series(1, T);
    CHECK(eta.lowest_q_exponent() == Frac(1, 24));
    CHECK(eta.coeff(Frac(1, 24)) == 1);
    CHECK(eta.coeff(Frac(1, 24) + Frac(1)) == -1);

    Dense oracle = dense_euler_pow(1, 24, 5);
    FSeries e24 = eta_series(1, T).pow_int(24, T);
    CHECK(e24.lowest_q_exponent() == Frac(1));
    for (long n = 0; n < 5; ++n)
        CHECK(e24.coeff(Frac(1) + Frac(n)) == BigInt(static_cast<long>(oracle.c[static_cast<std::size_t>(n)])));
    // Ramanujan tau values pin the expansion: 1, -24, 252
    CHECK(e24.coeff(Frac(1)) == 1);
    CHECK(e24.coeff(Frac(2)) == -24);
    CHECK(e24.coeff(Frac(3)) == 252);
}

TEST_CASE("eta(tau)^4 eta(2tau)^4 q^2 coefficient (relative) is -2") {
    Dense oracle = dense_mul(dense_euler_pow(1, 4, 4), dense_euler_pow(2, 4, 4));
    CHECK(oracle.c[2] == -2LL);
    Frac T(5);
    FSeries g = mul(eta_series(1, T).pow_int(4, T), eta_series(2, T).pow_int(4, T));
    CHECK(g.lowest_q_exponent() == Frac(1, 2));
    CHECK(g.coeff(Frac(1, 2) + Frac(2)) == -2);
}

TEST_CASE("eta(2tau)^6: leading exponent 1/2, next nonzero exponent 5/2") {
    Dense oracle = dense_euler_pow(2, 6, 5);
    CHECK(oracle.c[1] == 0);
    CHECK(oracle.c[2] == -6);
    Frac T(4);
    FSeries g = eta_series(2, T).pow_int(6, T);
    CHECK(g.lowest_q_exponent() == Frac(1, 2));
    CHECK(g.coeff(Frac(3, 2)) == 0);
    CHECK(g.coeff(Frac(5, 2)) == -6);
}

TEST_CASE("invert_unit on eta(tau)^12: Fock-trace coefficients 12 and 90") {
    Frac T(4);
    FSeries g = eta_series(1, Frac(5)).pow_int(12, Frac(5));
    FSeries inv = g.invert_unit(T);
    CHECK(inv.lowest_q_exponent() == Frac(-1, 2));
    CHECK(inv.coeff(Frac(1, 2)) == 12);
    CHECK(inv.coeff(Frac(3, 2)) == 90);
    CHECK(g.coeff(Frac(3, 2)) == -12);
    CHECK(g.coeff(Frac(5, 2)) == 54);
    CHECK(mul(g, inv).truncated(Frac(3)) == FSeries::constant(1, Frac(3)));

    FSeries two = FSeries::constant(2, Frac(4));
    CHECK_THROWS_WITH_AS(two.invert_unit(Frac(2)), doctest::Contains("2"), std::domain_error);
}

TEST_CASE("scale_q: eta(tau/2) leading exponent, identity scaling") {
    FSeries eta = eta_series(1, Frac(3));
    FSeries half = eta.scale_q(1, 2);
    CHECK(half.lowest_q_exponent() == Frac(1, 48));
    CHECK(eta.scale_q(1, 1) == eta);

    FSeries g2a = eta_series(2, Frac(3)).pow_int(6, Frac(3));
    CHECK(g2a.scale_q(1, 2).lowest_q_exponent() == Frac(1, 4));
}

TEST_CASE("coeff contract: beyond-truncation exponents are errors, not zero") {
    Frac T(3);
    FSeries f = FSeries::constant(1, T) + FSeries::monomial(2, Frac(1), Frac(0), Frac(0), T);
    CHECK(f.coeff(Frac(1)) == 2);
    CHECK(f.coeff(Frac(2)) == 0);
    CHECK_THROWS_AS(f.coeff(Frac(3)), std::domain_error);
    CHECK_THROWS_AS(f.coeff(Frac(7, 2)), std::domain_error);
    CHECK(f.pow_int(0, T) == FSeries::constant(1, T));
}

TEST_CASE("serialization: canonical bytes and exact round trip") {
    Frac T(4);
    FSeries a = FSeries::monomial(3, Frac(1, 2), Frac(-1, 2), Frac(0), T) +
                FSeries::monomial(-5, Frac(3, 2), Frac(1, 2), Frac(0), T);
    FSeries b = FSeries::monomial(-5, Frac(3, 2), Frac(1, 2), Frac(0), T) +
                FSeries::monomial(3, Frac(1, 2), Frac(-1, 2), Frac(0), T);
    CHECK(a == b);
    CHECK(a.serialize() == b.serialize());
    CHECK(FSeries::deserialize(a.serialize()) == a);

    FSeries e = eta_series(1, Frac(5));
    CHECK(FSeries::deserialize(e.serialize()) == e);
    CHECK(e.serialize().find("\"den\":24") != std::string::npos);
}

TEST_CASE("property: ring axioms on random sparse series") {
    Rng rng(0x5eed5eed1234ULL);
    for (int iter = 0; iter < 60; ++iter) {
        long den = rng.pick(1, 4);
        long tu = den * rng.pick(2, 5);
        bool with_r = iter % 2 == 1;
        FSeries a = random_series(rng, with_r, den, tu);
        FSeries b = random_series(rng, with_r, den, tu);
        FSeries c = random_series(rng, with_r, den, tu);
        CHECK(add(a, b) == add(b, a));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    }
}

TEST_CASE("property: truncation coherence trunc(a*b,T) = trunc(trunc(a,T)*trunc(b,T),T)") {
    Rng rng(0xabcdef987ULL);
    for (int iter = 0; iter < 40; ++iter) {
        long den = rng.pick(1, 3);
        long tu = den * rng.pick(3, 6);
        FSeries a = random_series(rng, iter % 2 == 0, den, tu);
        FSeries b = random_series(rng, iter % 2 == 0, den, tu);
        Frac T(rng.pick(1, 4));
        FSeries lhs = mul(a, b).truncated(T);
        FSeries rhs = mul(a.truncated(T), b.truncated(T)).truncated(T);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("property: invert_unit is a two-sided inverse up to O(q^T)") {
    Rng rng(0x77aa77aa1ULL);
    for (int iter = 0; iter < 25; ++iter) {
        long tu = rng.pick(6, 10);
        FSeries u = FSeries::constant(1, Frac(tu));
        long nterms = rng.pick(1, 5);
        for (long k = 0; k < nterms; ++k)
            u = u + FSeries::monomial(rng.pick(-4, 4), Frac(rng.pick(1, tu - 1)), Frac(0), Frac(0), Frac(tu));
        Frac T(tu / 2);
        FSeries inv = u.invert_unit(T);
        CHECK(mul(u, inv).truncated(T) == FSeries::constant(1, T));
        CHECK(mul(inv, u).truncated(T) == FSeries::constant(1, T));
    }
}

TEST_CASE("negative powers: (eta^12)^-2 equals the inverse of eta^24") {
    Frac T(3);
    FSeries e12 = eta_series(1, Frac(8)).pow_int(12, Frac(8));
    FSeries direct = e12.pow_int(-2, T);
    FSeries via24 = eta_series(1, Frac(8)).pow_int(24, Frac(8)).invert_unit(T);
    CHECK(direct == via24);
    CHECK(direct.lowest_q_exponent() == Frac(-1));
}

TEST_CASE("divide_exact_qr: round trips and remainder detection") {
    Frac T(6);
    FSeries r_minus_1 = FSeries::monomial(1, Frac(0), Frac(1), Frac(0), T) - FSeries::constant(1, T);
    FSeries d = r_minus_1 + FSeries::monomial(2, Frac(1), Frac(2), Frac(0), T);
    Rng rng(0x1357997531ULL);
    for (int iter = 0; iter < 20; ++iter) {
        FSeries y = random_series(rng, true, 1, 6);
        FSeries x = mul(y, d);
        CHECK(divide_exact_qr(x, d) == y.truncated(Frac(6)));
    }
    FSeries bad = FSeries::constant(1, T);
    CHECK_THROWS_AS(divide_exact_qr(bad, r_minus_1), std::domain_error);
}
