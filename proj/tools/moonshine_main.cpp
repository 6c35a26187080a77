#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "moonshine/cache.hpp"
#include "moonshine/chartable.hpp"
#include "moonshine/etaproducts.hpp"
#include "moonshine/jacobi.hpp"
#include "moonshine/siegel.hpp"
#include "moonshine/verify.hpp"

using namespace moonshine;

namespace {

Frac parse_order(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Frac(std::stol(s));
    return Frac(std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1)));
}

void print_series_text(const FSeries& f, std::ostream& os) {
    if (f.is_zero()) {
        os << "0 + O(q^" << f.trunc().str() << ")\n";
        return;
    }
    std::size_t shown = 0;
    for (const auto& [e, c] : f.terms()) {
        if (shown++ > 60) {
            os << "  ... (" << f.size() << " terms total)\n";
            break;
        }
        os << "  ";
        os << to_decimal(c);
        if (e.q != 0) os << " q^" << Frac(e.q, f.den()).str();
        if (e.r != 0) os << " r^" << Frac(e.r, f.denr()).str();
        if (e.s != 0) os << " s^" << Frac(e.s, f.den()).str();
        os << "\n";
    }
    os << "+ O(q^" << f.trunc().str() << "), " << f.size() << " terms\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for the modular objects of sporadic-group moonshine"};
    app.require_subcommand(1);

    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir,
                   "directory for cached lift series (MOONSHINE_CACHE also works)");

    // ---- eta ----------------------------------------------------------
    auto* eta_cmd = app.add_subcommand("eta", "eta product of a cycle shape");
    std::string eta_shape, eta_class, eta_order = "12";
    bool eta_json = false;
    eta_cmd->add_option("--shape", eta_shape, "cycle shape, e.g. 1^4.2^4");
    eta_cmd->add_option("--class", eta_class, "M12 class label instead of a shape, e.g. 2B");
    eta_cmd->add_option("--order", eta_order, "q-order of the expansion");
    eta_cmd->add_flag("--json", eta_json, "canonical JSON output");

    // ---- chartable ----------------------------------------------------
    auto* table_cmd = app.add_subcommand("chartable", "print a bundled character table");
    std::string table_group = "m12";
    bool table_json = false;
    table_cmd->add_option("--group", table_group, "m12, m12.2 or m24partial");
    table_cmd->add_flag("--json", table_json, "JSON output instead of the text format");

    // ---- jacobi -------------------------------------------------------
    auto* jac_cmd = app.add_subcommand("jacobi", "twisted elliptic genera and their decompositions");
    auto* genus_cmd = jac_cmd->add_subcommand("genus", "twisted elliptic genus of a class");
    std::string genus_class = "1A", genus_order = "8";
    bool genus_json = false;
    genus_cmd->add_option("--class", genus_class, "insertion class: 1A, 2A, 3A or 5A");
    genus_cmd->add_option("--order", genus_order, "q-order");
    genus_cmd->add_flag("--json", genus_json, "canonical JSON output");

    auto* sigma_cmd = jac_cmd->add_subcommand("sigma", "massive-character multiplicity series");
    std::string sigma_class = "1A", sigma_sector = "insertion", sigma_order = "4";
    bool sigma_json = false;
    sigma_cmd->add_option("--class", sigma_class, "class label (M12 for twisted/hatted, M24 for insertion)");
    sigma_cmd->add_option("--sector", sigma_sector, "insertion or twisted");
    sigma_cmd->add_option("--order", sigma_order, "q-order");
    sigma_cmd->add_flag("--json", sigma_json, "JSON output with {kind, class, alpha, offset} header");

    // ---- lift ---------------------------------------------------------
    auto* lift_cmd = app.add_subcommand("lift", "additive lift of a Jacobi seed");
    std::string lift_seed = "phi", lift_class = "1A", lift_order = "3";
    long lift_scale = 1;
    bool lift_json = false, lift_csv = false;
    lift_cmd->add_option("--seed", lift_seed, "phi (weight-k index-1) or delta (index-1/2)");
    lift_cmd->add_option("--class", lift_class, "conjugacy class of the eta-product factor");
    lift_cmd->add_option("--order", lift_order, "q,s-order of the lift");
    lift_cmd->add_option("--scale", lift_scale, "experimental: seed from g(tau/N) (delta only)");
    lift_cmd->add_flag("--json", lift_json, "canonical JSON output");
    lift_cmd->add_flag("--csv", lift_csv, "CSV rows (exponents, coefficient)");

    // ---- theta2 -------------------------------------------------------
    auto* th_cmd = app.add_subcommand("theta2", "genus-two theta constant");
    std::string th_a = "0,0", th_b = "0,0", th_order = "3";
    long th_scale = 1;
    bool th_json = false, th_csv = false;
    th_cmd->add_option("--a", th_a, "upper characteristic, e.g. 1,1");
    th_cmd->add_option("--b", th_b, "lower characteristic, e.g. 1,0");
    th_cmd->add_option("--scale", th_scale, "evaluate at scale*Z");
    th_cmd->add_option("--order", th_order, "q,s-order");
    th_cmd->add_flag("--json", th_json, "canonical JSON output");
    th_cmd->add_flag("--csv", th_csv, "CSV rows");

    // ---- export -------------------------------------------------------
    auto* exp_cmd = app.add_subcommand("export", "machine-readable form data");
    auto* bkm_cmd = exp_cmd->add_subcommand("bkm", "denominator-formula Fourier data of a lift");
    std::string bkm_form = "delta5", bkm_order = "3";
    bool bkm_csv = false, bkm_json = false;
    bkm_cmd->add_option("--form", bkm_form,
                        "delta5, delta3, delta2, delta1, delta1_4a, phi10, phi6, phi4, phi2, "
                        "phi3_4b, delta32, delta1_4b");
    bkm_cmd->add_option("--order", bkm_order, "q,s-order");
    bkm_cmd->add_flag("--csv", bkm_csv, "CSV output (default)");
    bkm_cmd->add_flag("--json", bkm_json, "canonical JSON series");

    // ---- verify -------------------------------------------------------
    auto* ver_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string ver_suite = "all", ver_order = "0", ver_class = "all";
    long ver_bound = 20;
    int ver_jobs = 1;
    bool ver_json = false, ver_all = false;
    ver_cmd->add_option("suite", ver_suite,
                        "eta, groups, jacobi, siegel, all, or a focused verb (eta-split, "
                        "multiplicative, fock, siegel-square, theta-identities, quotient)");
    ver_cmd->add_option("--order", ver_order, "override the suite truncation order");
    ver_cmd->add_option("--jobs", ver_jobs, "number of worker threads");
    ver_cmd->add_option("--class", ver_class, "restrict a focused verb to one class label");
    ver_cmd->add_option("--bound", ver_bound, "coprime bound for the multiplicative sweep");
    ver_cmd->add_flag("--all", ver_all, "run every check of the verb (the default)");
    ver_cmd->add_flag("--json", ver_json, "emit the report as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        SeriesCache cache = SeriesCache::configure(cache_dir);

        if (eta_cmd->parsed()) {
            CycleShape shape = eta_class.empty() ? CycleShape::parse(eta_shape)
                                                 : *m12_table().class_id(eta_class).shape;
            EtaProduct p = eta_product(shape, parse_order(eta_order));
            if (eta_json) {
                std::cout << "{\"shape\":\"" << p.shape.str() << "\",\"weight2\":" << p.weight2
                          << ",\"series\":" << p.series.serialize() << "}\n";
            } else {
                std::cout << "eta product for " << p.shape.str() << " (doubled weight " << p.weight2
                          << ")\n";
                print_series_text(p.series, std::cout);
            }
        } else if (table_cmd->parsed()) {
            const CharTable& t = table_group == "m12"        ? m12_table()
                                 : table_group == "m12.2"    ? m12_2_table()
                                 : table_group == "m24partial" ? m24_partial_table()
                                                               : throw std::domain_error(
                                                                     "unknown group " + table_group);
            std::cout << (table_json ? t.json() + "\n" : t.to_text());
        } else if (genus_cmd->parsed()) {
            JacobiForm psi = twisted_elliptic_genus(genus_class, parse_order(genus_order));
            if (genus_json) {
                std::cout << "{\"label\":\"" << psi.label << "\",\"weight\":" << psi.weight
                          << ",\"index2\":" << psi.index2 << ",\"level\":" << psi.level
                          << ",\"series\":" << psi.series.serialize() << "}\n";
            } else {
                std::cout << psi.label << " (weight 0, index 1, level " << psi.level << ")\n";
                print_series_text(psi.series, std::cout);
            }
        } else if (sigma_cmd->parsed()) {
            SigmaSeries s = sigma_sector == "twisted"
                                ? twisted_sector_sigma(sigma_class, parse_order(sigma_order))
                                : sigma_insertion_m24(sigma_class, parse_order(sigma_order));
            if (sigma_json) {
                std::cout << s.json() << "\n";
            } else {
                std::cout << "Sigma[" << s.cls << "] (" << sigma_kind_name(s.kind)
                          << "), alpha = " << to_decimal(s.alpha) << ", offset q^" << s.offset.str()
                          << "\n";
                print_series_text(s.series, std::cout);
            }
        } else if (lift_cmd->parsed()) {
            Frac T = parse_order(lift_order);
            SiegelForm f;
            if (lift_seed == "phi") {
                f = additive_lift(phi_lift_spec(lift_class, T), T);
            } else if (lift_seed == "delta" && lift_scale == 1) {
                f = additive_lift(delta_lift_spec(lift_class, T), T);
            } else if (lift_seed == "delta") {
                Frac seed_depth = (T + Frac(1)) * (T + Frac(1));
                JacobiForm seed = scaled_delta_seed(lift_class, lift_scale, seed_depth);
                LiftSpec spec{seed, lift_scale, seed.weight, LiftCharacter::trivial(lift_scale),
                              "Delta[" + lift_class + ",tau/" + std::to_string(lift_scale) + "]"};
                f = additive_lift(spec, T);  // refused for off-lattice gradings
            } else {
                throw std::domain_error("--seed must be phi or delta");
            }
            if (lift_json)
                std::cout << "{\"label\":\"" << f.label << "\",\"weight2\":" << f.weight2
                          << ",\"level\":" << f.level << ",\"series\":" << f.series.serialize() << "}\n";
            else if (lift_csv)
                std::cout << f.series.to_csv();
            else {
                std::cout << f.label << " (doubled weight " << f.weight2 << ", level " << f.level << ")\n";
                print_series_text(f.series, std::cout);
            }
        } else if (th_cmd->parsed()) {
            auto parse_char = [](const std::string& s) -> std::array<int, 2> {
                auto comma = s.find(',');
                if (comma == std::string::npos)
                    throw std::domain_error("characteristic must look like 0,1");
                return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
            };
            FSeries f = theta_genus2(parse_char(th_a), parse_char(th_b), th_scale, parse_order(th_order));
            if (th_json)
                std::cout << f.serialize() << "\n";
            else if (th_csv)
                std::cout << f.to_csv();
            else
                print_series_text(f, std::cout);
        } else if (bkm_cmd->parsed()) {
            SiegelForm f = cached_siegel_form(bkm_form, parse_order(bkm_order), cache);
            if (bkm_json)
                std::cout << f.series.serialize() << "\n";
            else
                std::cout << bkm_root_data_csv(f);
        } else if (ver_cmd->parsed()) {
            if (ver_suite == "multiplicative" && ver_bound != 20) {
                // non-default bound: run the classification sweep directly
                bool ok = true;
                for (const auto& c : m12_table().classes()) {
                    auto res = is_multiplicative(*c.shape, ver_bound);
                    bool expect = (c.label != "4B" && c.label != "8B");
                    std::cout << "  [" << (res.multiplicative == expect ? "pass" : "fail") << "] "
                              << c.shape->str() << " (" << c.label << ")\n";
                    ok = ok && res.multiplicative == expect;
                }
                std::cout << "bound " << ver_bound << "\n";
                return ok ? 0 : 1;
            }
            VerifyReport rep = run_suite(ver_suite, parse_order(ver_order), ver_jobs);
            if (ver_class != "all") {
                std::vector<CheckResult> kept;
                for (auto& c : rep.checks)
                    if (c.id.find(":" + ver_class) != std::string::npos) kept.push_back(std::move(c));
                rep.checks = std::move(kept);
                if (rep.checks.empty()) throw std::domain_error("no checks match class " + ver_class);
            }
            std::cout << (ver_json ? rep.json() + "\n" : rep.text());
            return rep.all_passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
