#include "moonshine/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

#include "moonshine/cache.hpp"
#include "moonshine/chartable.hpp"
#include "moonshine/etaproducts.hpp"
#include "moonshine/jacobi.hpp"
#include "moonshine/siegel.hpp"

namespace moonshine {

std::size_t VerifyReport::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) ++n;
    return n;
}

std::size_t VerifyReport::skipped() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (c.status == CheckStatus::Skipped) ++n;
    return n;
}

static const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

static std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string VerifyReport::json() const {
    std::ostringstream os;
    os << "{\"suite\":\"" << suite << "\",\"truncation\":\"" << truncation.str()
       << "\",\"wall_seconds\":" << wall_seconds << ",\"checks\":[";
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto& c = checks[i];
        if (i) os << ",";
        os << "{\"id\":\"" << json_escape(c.id) << "\",\"anchor\":\"" << json_escape(c.anchor)
           << "\",\"status\":\"" << status_name(c.status) << "\"";
        if (!c.first_mismatch.empty())
            os << ",\"first_mismatch\":\"" << json_escape(c.first_mismatch) << "\"";
        os << "}";
    }
    os << "],\"failures\":" << failures() << ",\"skipped\":" << skipped() << "}";
    return os.str();
}

std::string VerifyReport::text() const {
    std::ostringstream os;
    os << "suite " << suite << " (order " << truncation.str() << ")\n";
    for (const auto& c : checks) {
        os << "  [" << status_name(c.status) << "] " << c.id;
        if (c.status == CheckStatus::Fail && !c.first_mismatch.empty()) os << " -- " << c.first_mismatch;
        os << "\n";
    }
    os << checks.size() << " checks, " << failures() << " failures, " << skipped() << " skipped ("
       << wall_seconds << "s)\n";
    return os.str();
}

namespace {

struct Check {
    std::string id;
    std::string anchor;
    std::function<CheckResult()> run;
};

CheckResult outcome(bool ok, const std::string& detail = "") {
    CheckResult r;
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    if (!ok) r.first_mismatch = detail.empty() ? "mismatch" : detail;
    return r;
}

CheckResult skipped_outcome(const std::string& why) {
    CheckResult r;
    r.status = CheckStatus::Skipped;
    r.first_mismatch = why;
    return r;
}

void add(std::vector<Check>& v, std::string id, std::string anchor, std::function<CheckResult()> f) {
    v.push_back(Check{std::move(id), std::move(anchor), std::move(f)});
}

std::vector<Check> eta_suite(TruncOrder T) {
    std::vector<Check> checks;
    for (const auto& row : m24_split_rows()) {
        std::string cls = row.m24_class;
        bool reducible = row.m12_pair.has_value();
        add(checks, "eta-split:" + cls, "g_rho(tau) = g_rhohat(tau) * g_phi(rhohat)(tau)",
            [cls, reducible, T]() {
                if (!reducible) return skipped_outcome("class does not reduce through the subgroup");
                return outcome(split_check(cls, T));
            });
    }
    for (const auto& [label, shape] : balanced_shape_classes()) {
        std::string cls = label;
        add(checks, "fock:" + cls,
            "q^(1/2)/g = 1+(1+chi2)q+(3+3chi2+chi7)q^2+...; q^(-1/2)g = 1-(1+chi2)q+(-1+chi9)q^2+...",
            [cls]() {
                FockExpansion fe = fock_expansions(cls, Frac(3));
                for (const auto& c : fe.checks)
                    if (!c.ok())
                        return outcome(false, c.id + ": got " + to_decimal(c.got) + ", want " +
                                                  to_decimal(c.expected));
                return outcome(true);
            });
    }
    for (const auto& c : m12_table().classes()) {
        std::string cls = c.label;
        CycleShape shape = *c.shape;
        bool expect = (cls != "4B" && cls != "8B");
        add(checks, "multiplicative:" + shape.str() + ":" + cls,
            "a_{nm} = a_n a_m for coprime n,m <= 20", [shape, expect]() {
                auto res = is_multiplicative(shape, 20);
                if (res.multiplicative == expect) return outcome(true);
                std::ostringstream os;
                os << "classification flipped";
                if (!res.multiplicative) os << " (counterexample n=" << res.n << ", m=" << res.m << ")";
                return outcome(false, os.str());
            });
    }
    for (const auto& shape : multiplicative_non_class_shapes()) {
        CycleShape s = shape;
        add(checks, "multiplicative:" + s.str() + ":non-class",
            "multiplicative eta-product whose shape is not a conjugacy class",
            [s]() { return outcome(is_multiplicative(s, 20).multiplicative); });
    }
    for (const auto& c : m12_table().classes()) {
        std::string cls = c.label;
        CycleShape shape = *c.shape;
        bool expect = (cls != "4B" && cls != "8B");
        add(checks, "balanced:" + cls, "shape invariant under j -> M/j for some positive integer M",
            [shape, expect]() { return outcome(is_balanced(shape) == expect); });
    }
    add(checks, "classify-gh", "(2,2)->2A, (2,4)->4A, (4,2)->4A, (3,3)->3B", []() {
        bool ok = classify_gh(2, 2) == "2A" && classify_gh(2, 4) == "4A" &&
                  classify_gh(4, 2) == "4A" && classify_gh(3, 3) == "3B";
        return outcome(ok);
    });
    for (const auto& row : m24_split_rows()) {
        if (!row.m12_pair) continue;
        std::string cls = row.m24_class;
        auto pair = *row.m12_pair;
        CycleShape whole = row.m24_shape;
        add(checks, "weight-additivity:" + cls,
            "weight(g_rho) = weight(g_rhohat) + weight(g_phi(rhohat))", [whole, pair]() {
                const CharTable& t = m12_table();
                long w = whole.part_count();
                long wa = t.class_id(pair.first).shape->part_count();
                long wb = t.class_id(pair.second).shape->part_count();
                return outcome(w == wa + wb);
            });
    }
    return checks;
}

std::vector<Check> groups_suite() {
    std::vector<Check> checks;
    add(checks, "dim-squares:m12", "sum dim^2 = 95040",
        []() { return outcome(m12_table().sum_of_dim_squares() == BigInt(95040)); });
    add(checks, "dim-squares:m12.2", "sum dim^2 = 190080",
        []() { return outcome(m12_2_table().sum_of_dim_squares() == BigInt(190080)); });
    for (const auto& d : verify_decompositions()) {
        auto dd = d;
        add(checks, "decomposition:" + d.id, d.anchor, [dd]() { return outcome(dd.ok, dd.detail); });
    }
    add(checks, "involution", "4A<->4B, 8A<->8B, 11A<->11B; involutive; order-preserving", []() {
        for (const auto& c : m12_table().classes()) {
            std::string img = outer_involution(c.label);
            if (outer_involution(img) != c.label) return outcome(false, "not involutive at " + c.label);
            if (img.substr(0, img.size() - 1) != c.label.substr(0, c.label.size() - 1))
                return outcome(false, "order changed at " + c.label);
        }
        return outcome(true);
    });
    add(checks, "fusion:image-size", "the 15 classes surject onto the 12 inner classes", []() {
        std::vector<std::string> image;
        for (const auto& c : m12_table().classes()) {
            std::string f = fusion_m12_to_m12_2(c.label);
            if (std::find(image.begin(), image.end(), f) == image.end()) image.push_back(f);
            if (m12_2_table().class_index(f) >= m12_2_table().inner_class_count())
                return outcome(false, "image not inner at " + c.label);
        }
        return outcome(image.size() == 12);
    });
    add(checks, "sigma-pairing",
        "chi_i(c) = chi_sigma(i)(phi(c)) with sigma swapping {2,3},{4,5},{9,10}", []() {
            const CharTable& t = m12_table();
            auto sigma = [](const std::string& s) -> std::string {
                if (s == "chi2") return "chi3";
                if (s == "chi3") return "chi2";
                if (s == "chi4") return "chi5";
                if (s == "chi5") return "chi4";
                if (s == "chi9") return "chi10";
                if (s == "chi10") return "chi9";
                return s;
            };
            for (const auto& irrep : t.irreps())
                for (const auto& cls : t.classes())
                    if (!(t.value(irrep, cls.label) ==
                          t.value(sigma(irrep), outer_involution(cls.label))))
                        return outcome(false, irrep + " at " + cls.label);
            return outcome(true);
        });
    add(checks, "alpha-conjugate-sum", "alpha + alpha* = -1 for the 11th-root combination", []() {
        CycValue a = m12_table().value("chi4", "11A");
        return outcome(a + a.conjugate() == CycValue(-1));
    });
    for (const auto& row : m24_split_rows()) {
        std::string cls = row.m24_class;
        bool reducible = row.m12_pair.has_value();
        add(checks, "table1:" + cls,
            "24-point shape = shape(rhohat) cup shape(phi(rhohat)); 1+chi23 = sum of (1+chi2)",
            [cls, reducible]() {
                if (!reducible) return skipped_outcome("class does not reduce");
                const M24SplitRow* r = nullptr;
                for (const auto& x : m24_split_rows())
                    if (x.m24_class == cls) r = &x;
                const CharTable& t = m12_table();
                CycleShape cat = concatenate(*t.class_id(r->m12_pair->first).shape,
                                             *t.class_id(r->m12_pair->second).shape);
                if (!(cat == r->m24_shape)) return outcome(false, "shape concatenation");
                BigInt a24 = m24_partial_table().value("chi1", cls).as_integer() +
                             m24_partial_table().value("chi23", cls).as_integer();
                BigInt ahat = 2 + t.value("chi2", r->m12_pair->first).as_integer() +
                              t.value("chi2", r->m12_pair->second).as_integer();
                return outcome(a24 == ahat,
                               "alpha identity: " + to_decimal(a24) + " vs " + to_decimal(ahat));
            });
    }
    return checks;
}

std::vector<Check> jacobi_suite(TruncOrder T) {
    std::vector<Check> checks;
    add(checks, "normalization:massless", "C(tau,0) = 1 order by order", [T]() {
        N4Characters cb = n4_characters(T);
        FSeries at0 = cb.massless.series.eval_r1();
        return outcome(at0 == FSeries::constant(1, at0.trunc()));
    });
    add(checks, "normalization:massive", "B(tau,0) = 0 order by order",
        [T]() { return outcome(n4_characters(T).massive.series.eval_r1().is_zero()); });
    add(checks, "sigma:1A", "Sigma = -2 + 90q + 462q^2 + 1540q^3 + 4554q^4 + ...", [T]() {
        SigmaSeries s = sigma_insertion_m24("1A", T);
        const long want[] = {90, 462, 1540, 4554};
        if (s.series.coeff(Frac(0)) != -2) return outcome(false, "constant term");
        for (long n = 1; n <= 4; ++n)
            if (s.series.coeff(Frac(n)) != want[n - 1])
                return outcome(false,
                               "A(" + std::to_string(n) + ") = " + to_decimal(s.series.coeff(Frac(n))));
        return outcome(true);
    });
    for (const char* cls : {"1A", "2B", "3A", "5A"}) {
        std::string c = cls;
        add(checks, "sigma-hat:" + c,
            "Sigmahat = -1 + chi6 q + (chi8+chi15) q^2 + (chi11+2chi13+2chi14+chi15) q^3 + ...",
            [c, T]() {
                SigmaSeries s = sigma_insertion_m12(c, T);
                const CharTable& t = m12_table();
                auto chi = [&](const char* i) { return t.value(i, c).as_integer(); };
                if (s.series.coeff(Frac(0)) != -1) return outcome(false, "constant");
                if (s.series.coeff(Frac(1)) != chi("chi6")) return outcome(false, "q^1");
                if (s.series.coeff(Frac(2)) != chi("chi8") + chi("chi15")) return outcome(false, "q^2");
                if (s.series.coeff(Frac(3)) !=
                    chi("chi11") + 2 * chi("chi13") + 2 * chi("chi14") + chi("chi15"))
                    return outcome(false, "q^3");
                if (s.alpha != 1 + chi("chi2")) return outcome(false, "alphahat");
                return outcome(true);
            });
    }
    for (const char* cls : {"1A", "2A", "3A", "5A"}) {
        std::string c = cls;
        add(checks, "jacobi-split:" + c, "psi = psihat + psihat(phi) = 2 psihat for invariant classes",
            [c, T]() {
                JacobiSplitCheck chk = split_jacobi_check(c, T);
                std::string detail;
                for (const auto& f : chk.failures) detail += f + "; ";
                return outcome(chk.ok, detail);
            });
    }
    struct Tw {
        const char* cls;
        long den;
        std::vector<long> printed;
    };
    const Tw twisted[] = {Tw{"2B", 2, {8, 24, 56, 112}}, Tw{"3A", 3, {3, 9, 15, 30, 45}},
                          Tw{"5A", 5, {1, 3, 4, 7, 9}}};
    for (const Tw& tw : twisted) {
        std::string c = tw.cls;
        long den = tw.den;
        std::vector<long> printed = tw.printed;
        add(checks, "twisted-sigma:" + c,
            "Sigmahat(1,h) expands in integral coefficients of q^(n/N) with the printed values",
            [c, den, printed]() {
                SigmaSeries s = twisted_sector_sigma(c, Frac(4));
                if (s.series.coeff(Frac(0)) != 0) return outcome(false, "constant term not 0");
                for (std::size_t i = 0; i < printed.size(); ++i) {
                    Frac e(static_cast<long>(i) + 1, den);
                    if (s.series.coeff(e) != printed[i])
                        return outcome(false, "coefficient of q^" + e.str() + " = " +
                                                  to_decimal(s.series.coeff(e)));
                }
                return outcome(true);
            });
    }
    add(checks, "index-one-structure:1A", "c(n,l) depends only on (4n-l^2, l mod 2)", [T]() {
        JacobiForm psi = twisted_elliptic_genus("1A", T);
        std::map<std::pair<long, long>, BigInt> seen;
        for (const auto& [e, c] : psi.series.terms()) {
            auto key = std::make_pair(4 * e.q - e.r * e.r, ((e.r % 2) + 2) % 2);
            auto it = seen.find(key);
            if (it == seen.end())
                seen.emplace(key, c);
            else if (it->second != c)
                return outcome(false, "discriminant class (4n-l^2)=" + std::to_string(key.first));
        }
        return outcome(true);
    });
    add(checks, "round-trip:extraction",
        "alpha*C + q^(-1/8)*Sigma*B reproduces each genus exactly", [T]() {
            for (const char* cls : {"1A", "2A", "3A", "5A"}) {
                JacobiForm psi = twisted_elliptic_genus(cls, T);
                AlphaSigma as = extract_alpha_sigma(psi);
                N4Characters cb = n4_characters(T);
                FSeries rebuilt =
                    add(cb.massless.series.scaled(as.alpha),
                        mul(as.sigma, cb.massive.series.shifted(Frac(-1, 8), Frac(0), Frac(0))));
                if (!equal_to_order(rebuilt, psi.series, T))
                    return outcome(false, std::string("class ") + cls);
            }
            return outcome(true);
        });
    return checks;
}

std::vector<Check> siegel_suite(TruncOrder T) {
    std::vector<Check> checks;
    for (const char* cls : {"1A", "2A", "3A", "5A"}) {
        std::string c = cls;
        add(checks, "siegel-square:" + c, "Phi(Z) = Delta(Z) * Delta(Z) coefficient-exact", [c, T]() {
            SquareSplitResult res = square_split_check(c, T);
            return outcome(res.ok, res.first_mismatch);
        });
    }
    add(checks, "theta-identities",
        "(1/8 theta[1001] theta[0110] theta[1111](2Z))^2 = additive lift of the weight-3 seed",
        [T]() {
            ThetaIdentityReport rep = theta_identity_checks(T);
            return outcome(rep.ok(), rep.detail);
        });
    add(checks, "quotient",
        "FJ division of the weight-3 theta form by the lifted weight-1 form has zero remainder",
        [T]() {
            QuotientReport rep = quotient_check(T);
            return outcome(rep.ok && rep.quotient_weight2 == 4, rep.detail);
        });
    for (const char* name : {"phi10", "phi6", "phi4", "phi2", "phi3_4b", "delta5", "delta3", "delta2",
                             "delta1", "delta1_4a"}) {
        std::string n = name;
        add(checks, "exchange-symmetry:" + n, "c(n,l,m) = c(m,l,n) on every computed coefficient",
            [n, T]() {
                SiegelForm f = cached_siegel_form(n, T, SeriesCache::configure(""));
                for (const auto& [e, c] : f.series.terms())
                    if (f.series.coeff(Frac(e.s, f.series.den()), Frac(e.r, f.series.denr()),
                                       Frac(e.q, f.series.den())) != c)
                        return outcome(false, "transpose differs at a stored index");
                return outcome(true);
            });
        bool phi_type = n[0] == 'p';
        add(checks, "r-parity:" + n,
            phi_type ? "coefficients even under l -> -l" : "coefficients odd under l -> -l",
            [n, T, phi_type]() {
                SiegelForm f = cached_siegel_form(n, T, SeriesCache::configure(""));
                for (const auto& [e, c] : f.series.terms()) {
                    BigInt mirror =
                        f.series.coeff(Frac(e.q, f.series.den()), Frac(-e.r, f.series.denr()),
                                       Frac(e.s, f.series.den()));
                    if (mirror != (phi_type ? c : -c)) return outcome(false, "parity violated");
                }
                return outcome(true);
            });
    }
    for (const char* cls : {"1A", "2A", "3A", "5A", "4B"}) {
        std::string c = cls;
        add(checks, "hecke-oracle:" + c,
            "divisor-sum coefficients equal the direct double-coset sum for m <= 4", [c]() {
                LiftSpec spec = phi_lift_spec(c, Frac(5));
                for (long m = 1; m <= 4; ++m) {
                    JacobiForm a = hecke_image_divisor_sum(spec, m);
                    JacobiForm b = hecke_image_direct(spec, m);
                    if (!equal_to_order(a.series, b.series, Frac(4)))
                        return outcome(false, "m=" + std::to_string(m));
                }
                return outcome(true);
            });
    }
    add(checks, "delta5:lowest-term",
        "no term below total order one; the (1/2,+-1/2,1/2) pair has unit coefficients", [T]() {
            SiegelForm d5 = cached_siegel_form("delta5", T, SeriesCache::configure(""));
            const FSeries& s = d5.series;
            for (const auto& [e, c] : s.terms())
                if (e.q + e.s < s.den()) return outcome(false, "term below total order one");
            return outcome(s.coeff(Frac(1, 2), Frac(1, 2), Frac(1, 2)) == 1 &&
                               s.coeff(Frac(1, 2), Frac(-1, 2), Frac(1, 2)) == -1,
                           "corner coefficients are not the unit pair");
        });
    return checks;
}

void run_checks(std::vector<Check>& checks, VerifyReport& report, int jobs) {
    report.checks.resize(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= checks.size()) return;
            CheckResult r;
            try {
                r = checks[i].run();
            } catch (const std::exception& e) {
                r.status = CheckStatus::Fail;
                r.first_mismatch = std::string("exception: ") + e.what();
            }
            r.id = checks[i].id;
            r.anchor = checks[i].anchor;
            report.checks[i] = std::move(r);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
}

}  // namespace

VerifyReport run_suite(const std::string& name, TruncOrder T, int jobs) {
    // focused verbs select a slice of their parent suite by check id
    static const std::map<std::string, std::pair<const char*, const char*>> slices = {
        {"eta-split", {"eta", "eta-split:"}},
        {"multiplicative", {"eta", "multiplicative:"}},
        {"fock", {"eta", "fock:"}},
        {"siegel-square", {"siegel", "siegel-square:"}},
        {"theta-identities", {"siegel", "theta-identities"}},
        {"quotient", {"siegel", "quotient"}},
    };
    if (auto it = slices.find(name); it != slices.end()) {
        VerifyReport parent = run_suite(it->second.first, T, jobs);
        VerifyReport out;
        out.suite = name;
        out.truncation = parent.truncation;
        out.wall_seconds = parent.wall_seconds;
        for (auto& c : parent.checks)
            if (c.id.rfind(it->second.second, 0) == 0) out.checks.push_back(std::move(c));
        return out;
    }

    auto t0 = std::chrono::steady_clock::now();
    VerifyReport report;
    report.suite = name;
    std::vector<Check> checks;
    if (name == "eta") {
        report.truncation = (T.num > 0) ? T : Frac(12);
        checks = eta_suite(report.truncation);
    } else if (name == "groups") {
        report.truncation = Frac(0);
        checks = groups_suite();
    } else if (name == "jacobi") {
        report.truncation = (T.num > 0) ? T : Frac(8);
        checks = jacobi_suite(report.truncation);
    } else if (name == "siegel") {
        report.truncation = (T.num > 0) ? T : Frac(3);
        checks = siegel_suite(report.truncation);
    } else if (name == "all") {
        for (const char* sub : {"groups", "eta", "jacobi", "siegel"}) {
            VerifyReport part = run_suite(sub, T, jobs);
            for (auto& c : part.checks) {
                c.id = std::string(sub) + "/" + c.id;
                report.checks.push_back(std::move(c));
            }
        }
        report.truncation = T;
        report.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return report;
    } else {
        throw std::domain_error("run_suite: unknown suite " + name +
                                " (expected eta, groups, jacobi, siegel, all, or a focused verb: "
                                "eta-split, multiplicative, fock, siegel-square, theta-identities, "
                                "quotient)");
    }
    run_checks(checks, report, jobs);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace moonshine
