#include "moonshine/etaproducts.hpp"

#include <map>
#include <stdexcept>

#include "moonshine/chartable.hpp"

namespace moonshine {

EtaProduct eta_product(const CycleShape& shape, TruncOrder T) {
    EtaProduct out;
    out.shape = shape;
    out.weight2 = shape.part_count();
    FSeries acc = FSeries::constant(1, T);
    for (const auto& [j, a] : shape.parts()) acc = mul(acc, eta_series(j, T).pow_int(a, T));
    out.series = acc;
    return out;
}

std::optional<long> balance_witness(const CycleShape& shape) {
    long jmax = shape.parts().back().first;
    long jmin = shape.parts().front().first;
    for (long M = 1; M <= jmax * jmin; ++M) {
        bool ok = true;
        std::vector<std::pair<long, long>> mirrored;
        for (const auto& [j, a] : shape.parts()) {
            if (M % j != 0) {
                ok = false;
                break;
            }
            mirrored.emplace_back(M / j, a);
        }
        if (ok && CycleShape(std::move(mirrored)) == shape) return M;
    }
    return std::nullopt;
}

MultiplicativityResult is_multiplicative(const CycleShape& shape, long bound) {
    if (shape.points() != 12)
        throw std::domain_error("is_multiplicative: shape " + shape.str() + " is not on 12 points");
    // coefficients a_n of g = sum a_n q^(n/2); need n up to bound^2 - bound
    long nmax = bound * (bound - 1);
    FSeries g = eta_product(shape, Frac(nmax + 1, 2) + Frac(1, 2)).series;
    if (g.trunc().num * 2 < (nmax + 1) * g.trunc().den)
        throw std::domain_error("is_multiplicative: insufficient truncation");
    std::vector<BigInt> a(static_cast<std::size_t>(nmax) + 1);
    for (const auto& [e, c] : g.terms()) {
        // exponent e/den = n/2
        long num = e.q * 2;
        if (num % g.den() != 0) continue;
        long n = num / g.den();
        if (n >= 1 && n <= nmax) a[static_cast<std::size_t>(n)] = c;
    }
    MultiplicativityResult res;
    for (long n = 2; n <= bound; ++n)
        for (long m = n + 1; m <= bound; ++m) {
            if (gcd_long(n, m) != 1) continue;
            if (a[static_cast<std::size_t>(n * m)] !=
                a[static_cast<std::size_t>(n)] * a[static_cast<std::size_t>(m)]) {
                res.multiplicative = false;
                res.n = n;
                res.m = m;
                return res;
            }
        }
    return res;
}

bool split_check(const std::string& m24_class, TruncOrder T) {
    const M24SplitRow* row = nullptr;
    for (const auto& r : m24_split_rows())
        if (r.m24_class == m24_class) row = &r;
    if (!row) throw std::domain_error("split_check: unknown row " + m24_class);
    if (!row->m12_pair)
        throw std::domain_error("split_check: class " + m24_class + " does not reduce");
    const CharTable& t = m12_table();
    const CycleShape& sa = *t.class_id(row->m12_pair->first).shape;
    const CycleShape& sb = *t.class_id(row->m12_pair->second).shape;
    if (!(concatenate(sa, sb) == row->m24_shape)) return false;
    FSeries lhs = eta_product(row->m24_shape, T).series;
    FSeries rhs = mul(eta_product(sa, T).series, eta_product(sb, T).series);
    return lhs == rhs;
}

FockExpansion fock_expansions(const std::string& m12_class, TruncOrder T) {
    const CharTable& t = m12_table();
    const CycleShape& shape = *t.class_id(m12_class).shape;
    if (!is_balanced(shape))
        throw std::domain_error("fock_expansions: class " + m12_class + " (" + shape.str() +
                                ") is not balanced");
    if (T.num < 3 * T.den) T = Frac(3);
    FockExpansion out;
    out.direct = eta_product(shape, T + Frac(1)).series;
    out.inverse = out.direct.invert_unit(T);
    BigInt chi2 = t.value("chi2", m12_class).as_integer();
    BigInt chi7 = t.value("chi7", m12_class).as_integer();
    BigInt chi9 = t.value("chi9", m12_class).as_integer();
    // exponents are offset by the q^(+-1/2) prefactor
    out.checks.push_back({"1/g:q1", out.inverse.coeff(Frac(1, 2)), 1 + chi2});
    out.checks.push_back({"1/g:q2", out.inverse.coeff(Frac(3, 2)), 3 + 3 * chi2 + chi7});
    out.checks.push_back({"g:q1", out.direct.coeff(Frac(3, 2)), -(1 + chi2)});
    out.checks.push_back({"g:q2", out.direct.coeff(Frac(5, 2)), -1 + chi9});
    return out;
}

FSeries generalized_eta(const std::string& m12_class, long N, TruncOrder T) {
    const CharTable& t = m12_table();
    const CycleShape& shape = *t.class_id(m12_class).shape;
    if (!is_balanced(shape))
        throw std::domain_error("generalized_eta: class " + m12_class + " is not balanced");
    if (N != shape.order())
        throw std::domain_error("generalized_eta: class " + m12_class + " has order " +
                                std::to_string(shape.order()) + ", not " + std::to_string(N));
    return eta_product(shape, Frac(T.num * N, T.den)).series.scale_q(1, N);
}

std::string classify_gh(long M, long N) {
    if (M == 2 && N == 2) return "2A";
    if ((M == 2 && N == 4) || (M == 4 && N == 2)) return "4A";
    if (M == 3 && N == 3) return "3B";
    throw std::domain_error("classify_gh: unsupported pair (" + std::to_string(M) + "," +
                            std::to_string(N) + ")");
}

const std::vector<std::pair<std::string, CycleShape>>& balanced_shape_classes() {
    static const std::vector<std::pair<std::string, CycleShape>> v = [] {
        std::vector<std::pair<std::string, CycleShape>> out;
        const char* labels[] = {"1A", "2A", "2B", "3A", "3B", "4A", "5A", "6A", "6B", "8A", "10A", "11A"};
        for (const char* l : labels) out.emplace_back(l, *m12_table().class_id(l).shape);
        return out;
    }();
    return v;
}

const std::vector<CycleShape>& multiplicative_non_class_shapes() {
    static const std::vector<CycleShape> v = {CycleShape::parse("4^3"), CycleShape::parse("3.9"),
                                              CycleShape::parse("12")};
    return v;
}

}  // namespace moonshine
