#include "moonshine/jacobi.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "moonshine/chartable.hpp"

namespace moonshine {

FSeries theta_genus1(int i, TruncOrder T) {
    int a, b;
    switch (i) {
        case 1: a = 1; b = 1; break;
        case 2: a = 1; b = 0; break;
        case 3: a = 0; b = 0; break;
        case 4: a = 0; b = 1; break;
        default: throw std::domain_error("theta_genus1: index must be 1..4");
    }
    long den = lcm_long(8, T.den);
    long tu = T.num * den / T.den;
    FSeries f(VarSet::QR(), den, 2, tu);
    // q-exponent (2l+a)^2/8, r-exponent (2l+a)/2, sign (-1)^(l*b)
    for (long l = -1;; --l) {
        long m = 2 * l + a;
        if (m * m * (den / 8) >= tu) break;
        f.set_term(Expo{m * m * (den / 8), m, 0}, (b && (l & 1)) ? -1 : 1);
    }
    for (long l = 0;; ++l) {
        long m = 2 * l + a;
        if (m * m * (den / 8) >= tu) break;
        f.set_term(Expo{m * m * (den / 8), m, 0}, (b && (l & 1)) ? -1 : 1);
    }
    f.canonicalize();
    return f;
}

// prod_{n>=1} (1 - q^(jn)): the eta factor without its q^(j/24) prefactor.
static FSeries euler_product(long j, TruncOrder T) {
    FSeries f = FSeries::constant(1, T);
    for (long n = 1; Frac(j * n).num * T.den < T.num; ++n)
        f = mul(f, FSeries::constant(1, T) - FSeries::monomial(1, Frac(j * n), Frac(0), Frac(0), T));
    return f;
}

// q d/dq of an integer-exponent pure-q series.
static FSeries q_derivative(const FSeries& f) {
    if (f.den() != 1 || f.vars().r || f.vars().s)
        throw std::logic_error("q_derivative: needs an integer-exponent pure-q series");
    FSeries out(f.vars(), 1, 1, f.trunc_units());
    for (const auto& [e, c] : f.terms()) out.set_term(e, c * BigInt(e.q));
    out.canonicalize();
    return out;
}

FSeries eisenstein_level(long N, TruncOrder T) {
    if (N < 2 || 24 % (N - 1) != 0)
        throw std::domain_error("eisenstein_level: level " + std::to_string(N) + " unsupported");
    TruncOrder Ti = T + Frac(1);
    FSeries F = mul(euler_product(1, Ti), euler_product(N, Ti).invert_unit(Ti));
    FSeries logderiv = mul(q_derivative(F), F.invert_unit(T)).truncated(T);
    return FSeries::constant(1, T) - logderiv.scaled(24 / (N - 1));
}

FSeries ez_phi_m2_1(TruncOrder T) {
    FSeries t1 = theta_genus1(1, T + Frac(1));
    FSeries eta6 = eta_series(1, T + Frac(1)).pow_int(6, T + Frac(1));
    return mul(mul(t1, t1), eta6.invert_unit(T)).truncated(T);
}

FSeries ez_phi_0_1(TruncOrder T) {
    TruncOrder Ti = T + Frac(1);
    FSeries acc = FSeries::zero(VarSet::QR(), T.den, 2, T);
    for (int i = 2; i <= 4; ++i) {
        FSeries th = theta_genus1(i, Ti);
        FSeries sq = mul(th, th);
        FSeries sq0 = sq.eval_r1();
        FSeries numer, unit;
        if (i == 2) {
            // theta_2(tau,0)^2 = 4 q^(1/4) * (unit), so the 4 and the
            // prefactor cancel against the numerator's q^(1/4)
            numer = sq.shifted(Frac(-1, 4), Frac(0), Frac(0));
            unit = sq0.shifted(Frac(-1, 4), Frac(0), Frac(0)).divexact(4);
        } else {
            numer = sq.scaled(4);
            unit = sq0;
        }
        acc = add(acc, mul(numer, unit.invert_unit(T)));
    }
    return acc.truncated(T);
}

// Massless-character assembly: C = -u * P where u = (r^(1/2) theta_1 /
// eta^3) / (r - 1) and P is the telescoped Appell sum
//   (r-1) * sum_n (-1)^n q^(n(n+1)/2) r^n / (1 - q^n r)
// expanded radially (non-negative r-powers for n >= 0, negative for n < 0);
// the n = 0 term telescopes to the exact constant -1.
static FSeries massless_character_series(TruncOrder T) {
    TruncOrder Ti = T + Frac(1);
    FSeries x = mul(theta_genus1(1, Ti).shifted(Frac(0), Frac(1, 2), Frac(0)),
                    eta_series(1, Ti).pow_int(3, Ti).invert_unit(T));
    FSeries r_minus_1 =
        FSeries::monomial(1, Frac(0), Frac(1), Frac(0), T) - FSeries::constant(1, T);
    FSeries u = divide_exact_qr(x, r_minus_1);

    long den = T.den;
    long tu = T.num;  // q-units over T.den
    FSeries p(VarSet::QR(), den, 1, tu);
    p.set_term(Expo{0, 0, 0}, -1);
    for (long n = 1;; ++n) {  // positive modes: r-expansion in r^m, m >= 0
        long tri = n * (n + 1) / 2;
        if (tri * den >= tu) break;
        long sign = (n & 1) ? -1 : 1;
        for (long m = 0; (tri + n * m) * den < tu; ++m) {
            p.set_term(Expo{(tri + n * m) * den, n + m + 1, 0}, sign);
            p.set_term(Expo{(tri + n * m) * den, n + m, 0}, -sign);
        }
    }
    for (long n = -1;; --n) {  // negative modes: r-expansion in r^(-m), m >= 1
        long tri = n * (n + 1) / 2;
        if (tri * den >= tu) break;
        long sign = (n & 1) ? -1 : 1;
        for (long m = 1; (tri - n * m) * den < tu; ++m) {
            p.set_term(Expo{(tri - n * m) * den, n - m + 1, 0}, -sign);
            p.set_term(Expo{(tri - n * m) * den, n - m, 0}, sign);
        }
    }
    p.canonicalize();
    FSeries c = mul(u, p).scaled(-1).truncated(T);
    FSeries at0 = c.eval_r1();
    if (!(at0 == FSeries::constant(1, Frac(c.trunc_units(), c.den()))))
        throw std::logic_error("massless character convention violation: C(tau,0) != 1");
    return c;
}

static FSeries massive_character_series(TruncOrder T) {
    TruncOrder Ti = T + Frac(1);
    FSeries t1 = theta_genus1(1, Ti);
    // sign chosen so that Sigma^{1A} = -2 + 90q + ...; equivalently the K3
    // genus has q^0 term 2r + 20 + 2/r
    FSeries b = mul(mul(t1, t1), eta_series(1, Ti).pow_int(3, Ti).invert_unit(T)).scaled(-1).truncated(T);
    if (!b.eval_r1().is_zero())
        throw std::logic_error("massive character convention violation: B(tau,0) != 0");
    return b;
}

N4Characters n4_characters(TruncOrder T) {
    N4Characters out;
    out.massless = JacobiForm{0, 2, 1, "C", massless_character_series(T)};
    out.massive = JacobiForm{0, 2, 1, "B", massive_character_series(T)};
    return out;
}

static long insertion_level(const std::string& m24_class) {
    if (m24_class == "1A") return 1;
    if (m24_class == "2A") return 2;
    if (m24_class == "3A") return 3;
    if (m24_class == "5A") return 5;
    throw std::domain_error("twisted_elliptic_genus: class " + m24_class +
                            " is outside the supported set {1A,2A,3A,5A}");
}

JacobiForm twisted_elliptic_genus(const std::string& m24_class, TruncOrder T) {
    long N = insertion_level(m24_class);
    FSeries phi01 = ez_phi_0_1(T);
    FSeries series;
    if (N == 1) {
        series = phi01.scaled(2);
    } else {
        FSeries part = add(phi01.scaled(2),
                           mul(eisenstein_level(N, T), ez_phi_m2_1(T)).scaled(2 * N));
        series = part.divexact(N + 1);
    }
    return JacobiForm{0, 2, static_cast<int>(N), "psi[" + m24_class + "]", series};
}

std::string sigma_kind_name(SigmaKind k) {
    return k == SigmaKind::Insertion ? "insertion" : "twisted_sector";
}

std::string SigmaSeries::json() const {
    std::ostringstream os;
    os << "{\"kind\":\"" << sigma_kind_name(kind) << "\",\"class\":\"" << cls << "\",\"alpha\":\""
       << to_decimal(alpha) << "\",\"offset\":\"" << offset.str() << "\",\"series\":" << series.serialize()
       << "}";
    return os.str();
}

AlphaSigma extract_alpha_sigma(const JacobiForm& psi) {
    FSeries at0 = psi.series.eval_r1();
    BigInt alpha = 0;
    for (const auto& [e, c] : at0.terms()) {
        if (e.q != 0)
            throw std::domain_error("extract_alpha_sigma: psi(tau,0) is not constant (term at q-order " +
                                    Frac(e.q, at0.den()).str() + ")");
        alpha = c;
    }
    TruncOrder T = psi.series.trunc();
    // quarter-order margin so the q^(-1/8) shift does not clip the window
    N4Characters cb = n4_characters(T + Frac(1, 4));
    FSeries numer = sub(psi.series, cb.massless.series.scaled(alpha).truncated(T));
    FSeries w = cb.massive.series.shifted(Frac(-1, 8), Frac(0), Frac(0));
    FSeries sigma = divide_exact_qr(numer, w);
    if (sigma.vars().r)
        throw std::domain_error("extract_alpha_sigma: residual r-dependence; input is not an "
                                "alpha*C + q^(-1/8)*Sigma*B combination");
    return AlphaSigma{alpha, sigma};
}

SigmaSeries sigma_insertion_m24(const std::string& m24_class, TruncOrder T) {
    JacobiForm psi = twisted_elliptic_genus(m24_class, T);
    AlphaSigma as = extract_alpha_sigma(psi);
    return SigmaSeries{SigmaKind::Insertion, m24_class, as.alpha, Frac(-1, 8), as.sigma};
}

static std::string m12_to_m24_invariant(const std::string& m12_class) {
    if (m12_class == "1A") return "1A";
    if (m12_class == "2B") return "2A";
    if (m12_class == "3A") return "3A";
    if (m12_class == "5A") return "5A";
    throw std::domain_error("class " + m12_class + " is not in the invariant set {1A,2B,3A,5A}");
}

SigmaSeries sigma_insertion_m12(const std::string& m12_class, TruncOrder T) {
    SigmaSeries full = sigma_insertion_m24(m12_to_m24_invariant(m12_class), T);
    SigmaSeries half;
    half.kind = SigmaKind::Insertion;
    half.cls = m12_class;
    half.alpha = full.alpha / 2;
    half.offset = full.offset;
    half.series = full.series.divexact(2);
    return half;
}

SigmaSeries twisted_sector_sigma(const std::string& m12_class, TruncOrder T) {
    long N;
    if (m12_class == "2B")
        N = 2;
    else if (m12_class == "3A")
        N = 3;
    else if (m12_class == "5A")
        N = 5;
    else
        throw std::domain_error("twisted_sector_sigma: class " + m12_class +
                                " is not of prime order 2, 3 or 5");
    // S-transform of the insertion genus: the phi_{0,1} part is modular on
    // the full group, E_N(-1/tau) = -(tau^2/N) E_N(tau/N), and the halved
    // normalization matches the hatted (M12) objects.
    FSeries psi_tw = sub(ez_phi_0_1(T), mul(eisenstein_level(N, Frac(T.num * N, T.den)).scale_q(1, N),
                                            ez_phi_m2_1(T)))
                         .divexact(N + 1);
    JacobiForm form{0, 2, static_cast<int>(N), "psi_twisted[" + m12_class + "]", psi_tw};
    AlphaSigma as = extract_alpha_sigma(form);
    return SigmaSeries{SigmaKind::TwistedSector, m12_class, as.alpha, Frac(-1, 8), as.sigma};
}

JacobiSplitCheck split_jacobi_check(const std::string& m24_class, TruncOrder T) {
    JacobiSplitCheck out;
    auto fail = [&](const std::string& msg) {
        out.ok = false;
        out.failures.push_back(msg);
    };
    JacobiForm psi = twisted_elliptic_genus(m24_class, T);
    AlphaSigma as = extract_alpha_sigma(psi);
    std::string m12_class = m24_class == "2A" ? "2B" : m24_class;

    BigInt alpha_hat = as.alpha / 2;
    if (alpha_hat * 2 != as.alpha) fail("alpha is odd; cannot halve");
    FSeries sigma_hat = as.sigma.divexact(2);

    // reassembly: 2*(alphahat C + q^(-1/8) Sigmahat B) must reproduce psi
    N4Characters cb = n4_characters(T);
    FSeries w = cb.massive.series.shifted(Frac(-1, 8), Frac(0), Frac(0));
    FSeries rebuilt = add(cb.massless.series.scaled(alpha_hat), mul(sigma_hat, w)).scaled(2);
    if (!equal_to_order(rebuilt, psi.series, T)) fail("psi != 2*psihat as series");

    const CharTable& t = m12_table();
    auto chi = [&](const char* irrep) { return t.value(irrep, m12_class).as_integer(); };
    if (alpha_hat != 1 + chi("chi2"))
        fail("alphahat != 1 + chi2(" + m12_class + ")");
    struct Want {
        long order;
        BigInt value;
        const char* what;
    };
    std::vector<Want> wants = {
        {1, chi("chi6"), "q1: chi6"},
        {2, chi("chi8") + chi("chi15"), "q2: chi8+chi15"},
        {3, chi("chi11") + 2 * chi("chi13") + 2 * chi("chi14") + chi("chi15"), "q3: chi11+2chi13+2chi14+chi15"},
    };
    for (const auto& wnt : wants) {
        BigInt got = sigma_hat.coeff(Frac(wnt.order));
        if (got != wnt.value)
            fail(std::string("Sigmahat ") + wnt.what + ": got " + to_decimal(got) + ", want " +
                 to_decimal(wnt.value));
    }
    if (sigma_hat.coeff(Frac(0)) != -1) fail("Sigmahat constant term != -1");
    return out;
}

}  // namespace moonshine
