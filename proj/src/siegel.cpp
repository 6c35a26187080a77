#include "moonshine/siegel.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "moonshine/chartable.hpp"
#include "moonshine/cyclotomic.hpp"
#include "moonshine/etaproducts.hpp"

namespace moonshine {

LiftCharacter LiftCharacter::trivial(long level) {
    return LiftCharacter(level, std::vector<int>(static_cast<std::size_t>(level), 1));
}

LiftCharacter::LiftCharacter(long level, std::vector<int> values)
    : level_(level), values_(std::move(values)) {
    if (level_ < 1 || values_.size() != static_cast<std::size_t>(level_))
        throw std::domain_error("LiftCharacter: values must cover all residues mod level");
    for (long a = 1; a < level_; ++a)
        for (long b = 1; b < level_; ++b) {
            if (gcd_long(a, level_) != 1 || gcd_long(b, level_) != 1) continue;
            if ((*this)(a * b) != (*this)(a) * (*this)(b))
                throw std::domain_error("LiftCharacter: values are not multiplicative");
        }
}

int LiftCharacter::operator()(long a) const {
    long r = a % level_;
    if (r < 0) r += level_;
    int v = values_[static_cast<std::size_t>(r)];
    if (v != 1 && v != -1) throw std::domain_error("LiftCharacter: values must be +-1");
    return v;
}

static const M24SplitRow& split_row(const std::string& m24_class) {
    for (const auto& r : m24_split_rows())
        if (r.m24_class == m24_class) return r;
    throw std::domain_error("unknown bundled class " + m24_class);
}

JacobiForm additive_seed_phi(const std::string& m24_class, TruncOrder T) {
    const M24SplitRow& row = split_row(m24_class);
    const CycleShape& shape = row.m24_shape;
    JacobiForm out;
    out.weight = static_cast<int>(shape.part_count() / 2 - 2);
    out.index2 = 2;
    out.level = static_cast<int>(shape.order());
    out.label = "phi_seed[" + m24_class + "]";
    out.series = mul(ez_phi_m2_1(T), eta_product(shape, T).series);
    return out;
}

JacobiForm additive_seed_delta(const std::string& m12_class, TruncOrder T) {
    static const std::set<std::string> allowed = {"1A", "2B", "3A", "5A", "4A"};
    if (!allowed.count(m12_class))
        throw std::domain_error("additive_seed_delta: class " + m12_class +
                                " is outside the lifted family {1A,2B,3A,5A,4A}");
    const CycleShape& shape = *m12_table().class_id(m12_class).shape;
    if (!is_balanced(shape))
        throw std::domain_error("additive_seed_delta: class " + m12_class + " is not balanced");
    FSeries eta3inv = eta_series(1, T + Frac(1)).pow_int(3, T + Frac(1)).invert_unit(T);
    JacobiForm out;
    out.weight = static_cast<int>(shape.part_count() / 2 - 1);
    out.index2 = 1;
    out.level = static_cast<int>(shape.order());
    out.label = "delta_seed[" + m12_class + "]";
    out.series = mul(mul(theta_genus1(1, T), eta3inv), eta_product(shape, T).series);
    return out;
}

JacobiForm scaled_delta_seed(const std::string& m12_class, long N, TruncOrder T) {
    FSeries g = generalized_eta(m12_class, N, T);
    FSeries eta3inv = eta_series(1, T + Frac(1)).pow_int(3, T + Frac(1)).invert_unit(T);
    const CycleShape& shape = *m12_table().class_id(m12_class).shape;
    JacobiForm out;
    out.weight = static_cast<int>(shape.part_count() / 2 - 1);
    out.index2 = 1;
    out.level = static_cast<int>(N);
    out.label = "delta_seed[" + m12_class + ",tau/" + std::to_string(N) + "]";
    out.series = mul(mul(theta_genus1(1, T), eta3inv), g);
    return out;
}

// The m-th image reads seed coefficients up to lattice index n*m, so a lift
// to order T needs the seed through (T_units - 1)^2 in its own units.
static Frac seed_depth_for(TruncOrder T, long u) {
    long tu = (T.num * u + T.den - 1) / T.den;
    return Frac((tu - 1) * (tu - 1) + 1, u);
}

// The odd real character mod N, when one exists: the Legendre symbol (a|N)
// for N = 3 mod 4, and a -> (-1)^((a-1)/2) when 4 | N.
static LiftCharacter odd_quadratic_character(long level) {
    std::vector<int> values(static_cast<std::size_t>(level), 1);
    for (long a = 0; a < level; ++a) {
        if (gcd_long(a, level) != 1) continue;
        int v;
        if (level % 4 == 0) {
            v = (a % 4 == 1) ? 1 : -1;
        } else {
            v = -1;  // quadratic residue test mod the odd level
            for (long x = 1; x < level; ++x)
                if ((x * x) % level == a % level) {
                    v = 1;
                    break;
                }
        }
        values[static_cast<std::size_t>(a)] = v;
    }
    return LiftCharacter(level, values);
}

// Characters of the Hecke sums, fixed by the square/theta identities:
// the half-integral (square-root) family carries the odd real character
// mod N whenever one exists (levels 3 and 4 here); the integer-index
// family needs it exactly when its weight is odd (the level-4 seed).
static LiftCharacter default_character(long level, int index2, int weight) {
    bool has_odd_char = (level % 4 == 0) || (level % 4 == 3);
    if (!has_odd_char) return LiftCharacter::trivial(level);
    bool wants = (index2 == 1) || (weight % 2 == 1);
    return wants ? odd_quadratic_character(level) : LiftCharacter::trivial(level);
}

LiftSpec phi_lift_spec(const std::string& m24_class, TruncOrder T) {
    JacobiForm probe = additive_seed_phi(m24_class, Frac(2));
    JacobiForm seed = additive_seed_phi(m24_class, seed_depth_for(T, probe.series.den()));
    return LiftSpec{seed, seed.level, seed.weight,
                    default_character(seed.level, seed.index2, seed.weight),
                    "Phi" + std::to_string(seed.weight) + "[" + m24_class + "]"};
}

LiftSpec delta_lift_spec(const std::string& m12_class, TruncOrder T) {
    JacobiForm probe = additive_seed_delta(m12_class, Frac(2));
    JacobiForm seed = additive_seed_delta(m12_class, seed_depth_for(T, probe.series.den()));
    return LiftSpec{seed, seed.level, seed.weight,
                    default_character(seed.level, seed.index2, seed.weight),
                    "Delta" + std::to_string(seed.weight) + "[" + m12_class + "]"};
}

static BigInt ipow(long base, long exp) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return out;
}

static long validate_lift_units(const LiftSpec& spec) {
    long u = spec.seed.series.den();
    if (spec.seed.index2 != 1 && spec.seed.index2 != 2)
        throw std::domain_error("additive_lift: seed index2 must be 1 or 2");
    if (u != 1 && u != 2)
        throw std::domain_error("additive_lift: seed lattice denominator " + std::to_string(u) +
                                " unsupported (only integral and half-integral index-one gradings)");
    if (spec.seed.series.denr() > u)
        throw std::domain_error("additive_lift: seed r-denominator exceeds its q-lattice");
    if (spec.weight < 1) throw std::domain_error("additive_lift: weight must be positive");
    return u;
}

SiegelForm additive_lift(const LiftSpec& spec, TruncOrder T) {
    long u = validate_lift_units(spec);
    long tu = (T.num * u + T.den - 1) / T.den;  // smallest lattice bound covering T
    long seed_tu = spec.seed.series.trunc_units() * (u / spec.seed.series.den());
    if (seed_tu < (tu - 1) * (tu - 1) + 1)
        throw std::domain_error("additive_lift: seed truncation insufficient for order " + T.str());

    FSeries out(VarSet::QRS(), u, u, tu);
    long rscale = u / spec.seed.series.denr();
    long mstep = (u == 2) ? 2 : 1;  // half-integral gradings run over odd doubled indices
    for (long m = 1; m < tu; m += mstep) {
        for (long a = 1; a <= m; ++a) {
            if (m % a != 0 || gcd_long(a, spec.level) != 1) continue;
            long d = m / a;
            BigInt factor = ipow(a, spec.weight - 1) * spec.chi(a);
            for (const auto& [e, c] : spec.seed.series.terms()) {
                if (e.q % d != 0) continue;
                long n_target = e.q / d * a;
                if (n_target >= tu) break;  // terms are q-sorted
                out.set_term(Expo{n_target, e.r * a * rscale, m}, factor * c);
            }
        }
    }
    out.canonicalize();
    return SiegelForm{2 * spec.weight, static_cast<int>(spec.level), spec.label, out};
}

JacobiForm hecke_image_divisor_sum(const LiftSpec& spec, long m) {
    long u = validate_lift_units(spec);
    if (u == 2 && m % 2 == 0)
        throw std::domain_error("hecke_image_divisor_sum: even doubled index on a half-integral grading");
    long out_tu = spec.seed.series.trunc_units() / m;
    FSeries out(VarSet::QR(), u, spec.seed.series.denr(), out_tu);
    long rscale = u / spec.seed.series.denr();
    for (long a = 1; a <= m; ++a) {
        if (m % a != 0 || gcd_long(a, spec.level) != 1) continue;
        long d = m / a;
        BigInt factor = ipow(a, spec.weight - 1) * spec.chi(a);
        for (const auto& [e, c] : spec.seed.series.terms()) {
            if (e.q % d != 0) continue;
            long n_target = e.q / d * a;
            if (n_target >= out_tu) break;
            out.set_term(Expo{n_target, e.r * a * rscale, 0}, factor * c);
        }
    }
    out.canonicalize();
    return JacobiForm{spec.weight, static_cast<int>(m * spec.seed.index2), static_cast<int>(spec.level),
                      spec.label + ":fj" + std::to_string(m), out};
}

JacobiForm hecke_image_direct(const LiftSpec& spec, long m) {
    long u = validate_lift_units(spec);
    if (u != 1)
        throw std::domain_error(
            "hecke_image_direct: only integer-index seeds carry the plain double-coset sum");
    long out_tu = spec.seed.series.trunc_units() / m;
    // accumulate exact root-of-unity sums per target (q-exponent over den m, ell)
    std::map<std::pair<long, long>, CycValue> acc;
    for (long a = 1; a <= m; ++a) {
        if (m % a != 0 || gcd_long(a, spec.level) != 1) continue;
        long d = m / a;
        BigInt factor = ipow(a, spec.weight) * spec.chi(a);
        for (long b = 0; b < d; ++b) {
            for (const auto& [e, c] : spec.seed.series.terms()) {
                long exp_m = e.q * a * (m / d);  // q-exponent n*a/d in 1/m units
                if (exp_m >= out_tu * m) break;
                long root = ((e.q * b) % d) * (m / d);
                acc[{exp_m, e.r * a}] += CycValue::root_of_unity(m, root, factor * c);
            }
        }
    }
    FSeries out(VarSet::QR(), m, spec.seed.series.denr(), out_tu * m);
    for (const auto& [key, v] : acc) {
        BigInt total = v.as_integer();  // throws if a root-of-unity sum failed to collapse
        if (total == 0) continue;
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), total.get_mpz_t(), BigInt(m).get_mpz_t());
        if (r != 0)
            throw std::domain_error("hecke_image_direct: coefficient sum " + to_decimal(total) +
                                    " not divisible by m=" + std::to_string(m));
        out.set_term(Expo{key.first, key.second, 0}, q);
    }
    out.canonicalize();
    return JacobiForm{spec.weight, static_cast<int>(m * spec.seed.index2), static_cast<int>(spec.level),
                      spec.label + ":fj" + std::to_string(m) + ":direct", out};
}

static std::string invariant_m12_partner(const std::string& m24_class) {
    auto pair = m24_split(m24_class);
    if (!pair || pair->first != pair->second)
        throw std::domain_error("square_split_check: class " + m24_class +
                                " does not split into two equal factors");
    return pair->first;
}

SquareSplitResult square_split_check(const std::string& m24_class, TruncOrder T) {
    SquareSplitResult res;
    SiegelForm phi = additive_lift(phi_lift_spec(m24_class, T), T);
    SiegelForm delta = additive_lift(delta_lift_spec(invariant_m12_partner(m24_class), T), T);
    FSeries square = mul(delta.series, delta.series);
    if (equal_to_order(phi.series, square, T)) {
        res.ok = true;
        return res;
    }
    FSeries diff = sub(phi.series.truncated(T), square.truncated(T));
    const auto& [e, c] = *diff.terms().begin();
    std::ostringstream os;
    os << "first mismatch at q^" << Frac(e.q, diff.den()).str() << " r^" << Frac(e.r, diff.denr()).str()
       << " s^" << Frac(e.s, diff.den()).str() << ": difference " << to_decimal(c);
    res.first_mismatch = os.str();
    return res;
}

FSeries theta_genus2(const std::array<int, 2>& a, const std::array<int, 2>& b, long scale,
                     TruncOrder T) {
    for (int v : {a[0], a[1], b[0], b[1]})
        if (v != 0 && v != 1) throw std::domain_error("theta_genus2: characteristics are 0/1");
    if (scale < 1) throw std::domain_error("theta_genus2: scale must be positive");
    long den = lcm_long(8, T.den);
    long tu = T.num * den / T.den;
    FSeries f(VarSet::QRS(), den, 4, tu);
    // q-exponent scale*(2l1+a1)^2/8, s-exponent scale*(2l2+a2)^2/8,
    // r-exponent scale*(2l1+a1)(2l2+a2)/4, sign (-1)^(l1 b1 + l2 b2)
    auto half_indices = [&](int ai) {
        std::vector<long> ms;
        for (long l = 0;; ++l) {
            long mm = 2 * l + ai;
            if (scale * mm * mm * (den / 8) >= tu) break;
            ms.push_back(l);
        }
        for (long l = -1;; --l) {
            long mm = 2 * l + ai;
            if (scale * mm * mm * (den / 8) >= tu) break;
            ms.push_back(l);
        }
        return ms;
    };
    for (long l1 : half_indices(a[0]))
        for (long l2 : half_indices(a[1])) {
            long m1 = 2 * l1 + a[0];
            long m2 = 2 * l2 + a[1];
            long sign = ((l1 * b[0] + l2 * b[1]) % 2 + 2) % 2;
            f.set_term(Expo{scale * m1 * m1 * (den / 8), scale * m1 * m2, scale * m2 * m2 * (den / 8)},
                       sign ? -1 : 1);
        }
    f.canonicalize();
    return f;
}

static FSeries phi3_4b_theta(TruncOrder T) {
    FSeries d32 = mul(mul(theta_genus2({1, 0}, {0, 1}, 2, T), theta_genus2({0, 1}, {1, 0}, 2, T)),
                      theta_genus2({1, 1}, {1, 1}, 2, T))
                      .divexact(8);
    return mul(d32, d32);
}

ThetaIdentityReport theta_identity_checks(TruncOrder T) {
    ThetaIdentityReport rep;
    std::ostringstream detail;
    FSeries t1 = theta_genus2({1, 0}, {0, 1}, 2, T);
    FSeries t2 = theta_genus2({0, 1}, {1, 0}, 2, T);
    FSeries t3 = theta_genus2({1, 1}, {1, 1}, 2, T);
    try {
        FSeries delta32 = mul(mul(t1, t2), t3).divexact(8);
        FSeries delta1_4b = mul(t2, t3).divexact(4);
        rep.prefactors_clear = true;
        rep.square_integral = true;  // exact integers once the 1/8 clears
        FSeries square = mul(delta32, delta32);
        SiegelForm lift = additive_lift(phi_lift_spec("4B", T), T);
        rep.product_matches_lift = equal_to_order(square, lift.series, T);
        if (!rep.product_matches_lift) {
            FSeries diff = sub(square.truncated(T), lift.series.truncated(T));
            if (!diff.is_zero()) {
                const auto& [e, c] = *diff.terms().begin();
                detail << "theta-product vs lift mismatch at q^" << Frac(e.q, diff.den()).str() << " s^"
                       << Frac(e.s, diff.den()).str() << " (difference " << to_decimal(c) << "); ";
            }
        }
    } catch (const std::exception& e) {
        detail << "prefactor failed to clear: " << e.what() << "; ";
    }

    int even_count = 0, all_even_a_nonzero = 0, integral_a_zero = 0;
    for (int a1 : {0, 1})
        for (int a2 : {0, 1})
            for (int b1 : {0, 1})
                for (int b2 : {0, 1}) {
                    if ((a1 * b1 + a2 * b2) % 2 != 0) continue;
                    ++even_count;
                    FSeries th = theta_genus2({a1, a2}, {b1, b2}, 1, Frac(2));
                    bool all_even = true;
                    for (const auto& [e, c] : th.terms())
                        if (c % 2 != 0) all_even = false;
                    if (a1 == 0 && a2 == 0) {
                        if (!all_even && th.coeff(Frac(0), Frac(0), Frac(0)) == 1) ++integral_a_zero;
                    } else if (all_even) {
                        ++all_even_a_nonzero;
                    }
                }
    rep.even_count_ok = (even_count == 10);
    rep.parity_split_ok = (all_even_a_nonzero == 6 && integral_a_zero == 4);
    if (!rep.even_count_ok) detail << "even characteristic count " << even_count << " != 10; ";
    if (!rep.parity_split_ok)
        detail << "parity split " << all_even_a_nonzero << "/" << integral_a_zero << " != 6/4; ";
    rep.detail = detail.str();
    return rep;
}

QuotientReport quotient_check(TruncOrder T) {
    QuotientReport rep;
    FSeries phi = phi3_4b_theta(T);
    SiegelForm delta = additive_lift(delta_lift_spec("4A", T), T);

    std::vector<Frac> dsup = delta.series.s_support();
    if (dsup.empty()) throw std::logic_error("quotient_check: divisor has no Fourier-Jacobi data");
    Frac smin = dsup.front();
    FSeries d0 = delta.series.fj_coefficient(smin);

    auto frac_lt = [](Frac x, Frac y) { return x.num * y.den < y.num * x.den; };
    Frac swindow = T - smin;
    std::map<long, FSeries> qblocks;  // quotient FJ levels in half-integer units
    try {
        for (long su = 1; frac_lt(Frac(su, 2), swindow); ++su) {
            Frac sigma(su, 2);
            FSeries num = phi.fj_coefficient(sigma + smin);
            for (const auto& [tu2, qb] : qblocks) {
                FSeries dval = delta.series.fj_coefficient(sigma + smin - Frac(tu2, 2));
                if (dval.is_zero()) continue;
                num = sub(num, mul(qb, dval));
            }
            if (num.is_zero()) continue;
            qblocks.emplace(su, divide_exact_qr(num, d0));
        }
    } catch (const std::exception& e) {
        rep.ok = false;
        rep.detail = std::string("division left a remainder: ") + e.what();
        return rep;
    }

    FSeries quotient = FSeries::zero(VarSet::QRS(), 2, 2, T - smin);
    for (const auto& [su, qb] : qblocks)
        quotient = add(quotient, qb.shifted(Frac(0), Frac(0), Frac(su, 2)));

    FSeries rebuilt = mul(quotient, delta.series);
    if (!equal_to_order(rebuilt, phi, T - smin)) {
        rep.ok = false;
        rep.detail = "quotient times divisor does not reproduce the numerator";
        return rep;
    }
    rep.ok = true;
    rep.quotient_weight2 = 6 - delta.weight2;
    rep.detail = "zero remainder at all Fourier-Jacobi levels";
    return rep;
}

const std::vector<BkmFormInfo>& bkm_form_catalog() {
    static const std::vector<BkmFormInfo> v = {
        {"delta5", "1A", "G1(1)"},      {"delta3", "2B", "G1(2)"},
        {"delta2", "3A", "G1(3)"},      {"delta1", "5A", "G1(5)"},
        {"delta3(2,1)", "2B", "G2(1)"}, {"delta2(3,1)", "3A", "G3(1)"},
        {"delta2(2,2)", "2A", "G2(2)"}, {"delta1(3,3)", "3B", "G3(3)"},
        {"delta1(2,4)", "4A", "G2(4)"}, {"delta1(4,2)", "4A'", "G4(2)"},
    };
    return v;
}

const std::array<std::array<int, 3>, 3>& bkm_cartan_matrix() {
    static const std::array<std::array<int, 3>, 3> m = {{{2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}}};
    return m;
}

SiegelForm siegel_form_by_name(const std::string& name, TruncOrder T) {
    if (name == "delta5") return additive_lift(delta_lift_spec("1A", T), T);
    if (name == "delta3" || name == "delta3(2,1)") return additive_lift(delta_lift_spec("2B", T), T);
    if (name == "delta2" || name == "delta2(3,1)") return additive_lift(delta_lift_spec("3A", T), T);
    if (name == "delta1") return additive_lift(delta_lift_spec("5A", T), T);
    if (name == "delta1_4a") return additive_lift(delta_lift_spec("4A", T), T);
    if (name == "phi10") return additive_lift(phi_lift_spec("1A", T), T);
    if (name == "phi6") return additive_lift(phi_lift_spec("2A", T), T);
    if (name == "phi4") return additive_lift(phi_lift_spec("3A", T), T);
    if (name == "phi2") return additive_lift(phi_lift_spec("5A", T), T);
    if (name == "phi3_4b") return additive_lift(phi_lift_spec("4B", T), T);
    if (name == "delta32") {
        FSeries s = mul(mul(theta_genus2({1, 0}, {0, 1}, 2, T), theta_genus2({0, 1}, {1, 0}, 2, T)),
                        theta_genus2({1, 1}, {1, 1}, 2, T))
                        .divexact(8);
        return SiegelForm{3, 4, "Delta3/2", s};
    }
    if (name == "delta1_4b") {
        FSeries s =
            mul(theta_genus2({0, 1}, {1, 0}, 2, T), theta_genus2({1, 1}, {1, 1}, 2, T)).divexact(4);
        return SiegelForm{2, 4, "Delta1[4B]", s};
    }
    throw std::domain_error("unknown form name " + name);
}

std::string bkm_root_data_csv(const SiegelForm& f) {
    std::ostringstream os;
    os << "# form=" << f.label << " weight2=" << f.weight2 << " level=" << f.level << "\n";
    for (const auto& info : bkm_form_catalog()) {
        if (f.label.find("[" + info.cls + "]") == std::string::npos) continue;
        os << "# class=" << info.cls << " algebra=" << info.algebra << "\n";
        break;
    }
    const auto& cm = bkm_cartan_matrix();
    os << "# cartan=[[" << cm[0][0] << "," << cm[0][1] << "," << cm[0][2] << "],[" << cm[1][0] << ","
       << cm[1][1] << "," << cm[1][2] << "],[" << cm[2][0] << "," << cm[2][1] << "," << cm[2][2]
       << "]]\n";
    os << f.series.to_csv();
    return os.str();
}

}  // namespace moonshine
