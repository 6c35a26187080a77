#include "moonshine/fseries.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace moonshine {

Frac::Frac(long n, long d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Frac: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long g = gcd_long(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }

std::string Frac::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

static long frac_in_units(Frac f, long den, const char* what) {
    if ((f.num * den) % f.den != 0)
        throw std::domain_error(std::string(what) + " " + f.str() +
                                " not representable over denominator " + std::to_string(den));
    return f.num * den / f.den;
}

FSeries::FSeries(VarSet vars, long den, long denr, long trunc_units)
    : vars_(vars), den_(den), denr_(denr), trunc_(trunc_units) {
    if (den_ < 1 || denr_ < 1) throw std::domain_error("FSeries: denominators must be positive");
}

FSeries FSeries::zero(VarSet vars, long den, long denr, TruncOrder T) {
    FSeries f(vars, den, denr, 0);
    f.trunc_ = frac_in_units(T, den, "truncation order");
    return f;
}

FSeries FSeries::constant(const BigInt& c, TruncOrder T) {
    FSeries f = zero(VarSet::Q(), T.den, 1, T);
    if (c != 0 && f.trunc_ > 0) f.terms_[Expo{0, 0, 0}] = c;
    f.canonicalize();
    return f;
}

FSeries FSeries::monomial(const BigInt& c, Frac eq, Frac er, Frac es, TruncOrder T) {
    VarSet v{true, er.num != 0, es.num != 0};
    long den = lcm_long(lcm_long(eq.den, es.den), T.den);
    long denr = er.num != 0 ? er.den : 1;
    FSeries f = zero(v, den, denr, T);
    Expo e{frac_in_units(eq, den, "q-exponent"), frac_in_units(er, denr, "r-exponent"),
           frac_in_units(es, den, "s-exponent")};
    if (c != 0 && e.q < f.trunc_ && (!v.s || e.s < f.trunc_)) f.terms_[e] = c;
    f.canonicalize();
    return f;
}

void FSeries::set_term(Expo e, BigInt c) {
    if (c == 0) return;
    if (e.q >= trunc_ || (vars_.s && e.s >= trunc_)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void FSeries::canonicalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0 || it->first.q >= trunc_ || (vars_.s && it->first.s >= trunc_))
            it = terms_.erase(it);
        else
            ++it;
    }
    bool use_r = false, use_s = false;
    long gq = den_, gr = denr_;
    for (const auto& [e, c] : terms_) {
        use_r = use_r || e.r != 0;
        use_s = use_s || e.s != 0;
        gq = gcd_long(gq, gcd_long(e.q, e.s));
        gr = gcd_long(gr, e.r);
    }
    gq = gcd_long(gq, trunc_);
    if (gq > 1) {
        std::map<Expo, BigInt> out;
        for (auto& [e, c] : terms_) out.emplace(Expo{e.q / gq, e.r, e.s / gq}, std::move(c));
        terms_ = std::move(out);
        den_ /= gq;
        trunc_ /= gq;
    }
    if (!use_r) {
        denr_ = 1;
    } else if (gr > 1) {
        std::map<Expo, BigInt> out;
        for (auto& [e, c] : terms_) out.emplace(Expo{e.q, e.r / gr, e.s}, std::move(c));
        terms_ = std::move(out);
        denr_ /= gr;
    }
    // q is the universal grading variable and is always kept, so that pure
    // r-blocks stay composable with q-series
    vars_ = VarSet{true, use_r, use_s};
}

void FSeries::rescale_to(long den, long denr) {
    if (den % den_ != 0 || denr % denr_ != 0)
        throw std::logic_error("FSeries::rescale_to: target not a multiple");
    long fq = den / den_, fr = denr / denr_;
    if (fq == 1 && fr == 1) return;
    std::map<Expo, BigInt> out;
    for (auto& [e, c] : terms_) out.emplace(Expo{e.q * fq, e.r * fr, e.s * fq}, std::move(c));
    terms_ = std::move(out);
    trunc_ *= fq;
    den_ = den;
    denr_ = denr;
}

void FSeries::reconcile(FSeries& a, FSeries& b) {
    if (!a.vars_.subset_of(b.vars_) && !b.vars_.subset_of(a.vars_))
        throw std::domain_error("FSeries: incompatible variable sets");
    VarSet v{a.vars_.q || b.vars_.q, a.vars_.r || b.vars_.r, a.vars_.s || b.vars_.s};
    long den = lcm_long(a.den_, b.den_);
    long denr = lcm_long(a.denr_, b.denr_);
    a.vars_ = v;
    b.vars_ = v;
    a.rescale_to(den, denr);
    b.rescale_to(den, denr);
}

FSeries add(const FSeries& a, const FSeries& b) {
    FSeries x = a, y = b;
    FSeries::reconcile(x, y);
    x.trunc_ = std::min(x.trunc_, y.trunc_);
    for (auto& [e, c] : y.terms_) {
        auto [it, fresh] = x.terms_.emplace(e, c);
        if (!fresh) it->second += c;
    }
    x.canonicalize();
    return x;
}

FSeries sub(const FSeries& a, const FSeries& b) { return add(a, -b); }

FSeries FSeries::operator-() const {
    FSeries f = *this;
    for (auto& [e, c] : f.terms_) c = -c;
    return f;
}

FSeries mul(const FSeries& a, const FSeries& b) {
    FSeries x = a, y = b;
    FSeries::reconcile(x, y);
    FSeries out(x.vars_, x.den_, x.denr_, std::min(x.trunc_, y.trunc_));
    if (x.terms_.empty() || y.terms_.empty()) {
        out.canonicalize();
        return out;
    }
    long bq0 = y.terms_.begin()->first.q;
    long bs0 = 0;
    if (out.vars_.s) {
        bs0 = y.terms_.begin()->first.s;
        for (const auto& [e, c] : y.terms_) bs0 = std::min(bs0, e.s);
    }
    for (const auto& [ea, ca] : x.terms_) {
        if (ea.q + bq0 >= out.trunc_) break;  // map is q-major sorted
        if (out.vars_.s && ea.s + bs0 >= out.trunc_) continue;
        for (const auto& [eb, cb] : y.terms_) {
            if (ea.q + eb.q >= out.trunc_) break;
            if (out.vars_.s && ea.s + eb.s >= out.trunc_) continue;
            Expo e{ea.q + eb.q, ea.r + eb.r, ea.s + eb.s};
            auto [it, fresh] = out.terms_.emplace(e, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    }
    out.canonicalize();
    return out;
}

FSeries FSeries::scaled(const BigInt& c) const {
    FSeries f = *this;
    if (c == 0) {
        f.terms_.clear();
    } else {
        for (auto& [e, v] : f.terms_) v *= c;
    }
    f.canonicalize();
    return f;
}

FSeries FSeries::divexact(const BigInt& c) const {
    if (c == 0) throw std::domain_error("FSeries::divexact: division by zero");
    FSeries f = *this;
    for (auto& [e, v] : f.terms_) {
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
        if (r != 0)
            throw std::domain_error("FSeries::divexact: coefficient " + to_decimal(v) +
                                    " not divisible by " + to_decimal(c));
        v = q;
    }
    return f;
}

FSeries FSeries::shifted(Frac dq, Frac dr, Frac ds) const {
    FSeries f = *this;
    long den = lcm_long(den_, lcm_long(dq.den, ds.den));
    long denr = lcm_long(denr_, dr.den);
    f.vars_.q = f.vars_.q || dq.num != 0;
    f.vars_.r = f.vars_.r || dr.num != 0;
    f.vars_.s = f.vars_.s || ds.num != 0;
    f.rescale_to(den, denr);
    long uq = frac_in_units(dq, den, "q-shift");
    long ur = frac_in_units(dr, denr, "r-shift");
    long us = frac_in_units(ds, den, "s-shift");
    std::map<Expo, BigInt> out;
    for (auto& [e, c] : f.terms_) out.emplace(Expo{e.q + uq, e.r + ur, e.s + us}, std::move(c));
    f.terms_ = std::move(out);
    f.trunc_ += uq;  // the window moves with the monomial
    f.canonicalize();
    return f;
}

FSeries FSeries::invert_unit(TruncOrder T) const {
    if (vars_.r || vars_.s)
        throw std::domain_error("FSeries::invert_unit: only pure-q series are invertible");
    if (terms_.empty()) throw std::domain_error("FSeries::invert_unit: zero series");
    const auto& [e0, c0] = *terms_.begin();
    if (c0 != 1 && c0 != -1)
        throw std::domain_error(
            "FSeries::invert_unit: leading coefficient " + to_decimal(c0) +
            " is not a unit in the integer coefficient ring");
    long den = lcm_long(den_, T.den);
    long tu = frac_in_units(T, den, "truncation order");
    long f = den / den_;
    long lead = e0.q * f;
    // the inverse is determined to absolute order (own window) - 2*lead
    if (trunc_ * f - 2 * lead < tu)
        throw std::domain_error("FSeries::invert_unit: input truncation " + trunc().str() +
                                " insufficient for requested order " + T.str());
    // relative window: exponents of the result run in [-lead, tu)
    long width = tu + lead;
    if (width <= 0) return FSeries::zero(VarSet::Q(), den, 1, T);
    // u = +-q^(-e0) * this = 1 + x with x supported on (0, width)
    std::vector<BigInt> u(static_cast<std::size_t>(width));
    for (const auto& [e, c] : terms_) {
        long rel = e.q * f - lead;
        if (rel < width) u[static_cast<std::size_t>(rel)] = (c0 == 1) ? c : -c;
    }
    std::vector<BigInt> inv(static_cast<std::size_t>(width));
    inv[0] = 1;
    for (long n = 1; n < width; ++n) {
        BigInt acc = 0;
        for (long k = 1; k <= n; ++k)
            if (u[static_cast<std::size_t>(k)] != 0)
                acc -= u[static_cast<std::size_t>(k)] * inv[static_cast<std::size_t>(n - k)];
        inv[static_cast<std::size_t>(n)] = acc;
    }
    FSeries out(VarSet::Q(), den, 1, tu);
    for (long n = 0; n < width; ++n)
        if (inv[static_cast<std::size_t>(n)] != 0)
            out.terms_[Expo{n - lead, 0, 0}] =
                (c0 == 1) ? inv[static_cast<std::size_t>(n)] : -inv[static_cast<std::size_t>(n)];
    out.canonicalize();
    return out;
}

FSeries FSeries::scale_q(long num, long denom) const {
    if (num <= 0 || denom <= 0) throw std::domain_error("FSeries::scale_q: factors must be positive");
    FSeries f = *this;
    f.den_ = den_ * denom;
    f.trunc_ = trunc_ * num;
    std::map<Expo, BigInt> out;
    for (auto& [e, c] : f.terms_) out.emplace(Expo{e.q * num, e.r, e.s * num}, std::move(c));
    f.terms_ = std::move(out);
    f.canonicalize();
    return f;
}

FSeries FSeries::pow_int(long n, TruncOrder T) const {
    if (n < 0) {
        // the inverse has a negative leading exponent, so powering it at a
        // fixed window loses the tail; widen by the compounded pole order
        Frac e0 = lowest_q_exponent();
        Frac margin = (e0.num > 0) ? Frac(-n - 1) * e0 : Frac(0);
        return invert_unit(T + margin).pow_int(-n, T + margin).truncated(T);
    }
    FSeries acc = FSeries::constant(1, T);
    if (n == 0) return acc;
    FSeries base = truncated(T);
    while (true) {
        if (n & 1) acc = mul(acc, base);
        n >>= 1;
        if (n == 0) break;
        base = mul(base, base);
    }
    return acc;
}

FSeries FSeries::truncated(TruncOrder T) const {
    FSeries f = *this;
    long den = lcm_long(den_, T.den);
    f.rescale_to(den, denr_);
    f.trunc_ = std::min(f.trunc_, frac_in_units(T, den, "truncation order"));
    f.canonicalize();
    return f;
}

BigInt FSeries::coeff(Frac eq, Frac er, Frac es) const {
    auto beyond = [&](Frac x) { return x.num * den_ >= trunc_ * x.den; };
    if (beyond(eq) || (vars_.s && beyond(es)))
        throw std::domain_error("FSeries::coeff: exponent " + eq.str() + "," + es.str() +
                                " is beyond the truncation bound " + trunc().str());
    if ((eq.num * den_) % eq.den != 0 || (es.num * den_) % es.den != 0 ||
        (er.num * denr_) % er.den != 0)
        return 0;  // off the stored exponent lattice
    Expo e{eq.num * den_ / eq.den, er.num * denr_ / er.den, es.num * den_ / es.den};
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

FSeries FSeries::eval_r1() const {
    FSeries f(VarSet{vars_.q, false, vars_.s}, den_, 1, trunc_);
    for (const auto& [e, c] : terms_) {
        auto [it, fresh] = f.terms_.emplace(Expo{e.q, 0, e.s}, c);
        if (!fresh) it->second += c;
    }
    f.canonicalize();
    return f;
}

FSeries FSeries::fj_coefficient(Frac es) const {
    FSeries f(VarSet{vars_.q, vars_.r, false}, den_, denr_, trunc_);
    if ((es.num * den_) % es.den != 0) return f;
    long target = es.num * den_ / es.den;
    for (const auto& [e, c] : terms_)
        if (e.s == target) f.terms_.emplace(Expo{e.q, e.r, 0}, c);
    f.canonicalize();
    return f;
}

std::vector<Frac> FSeries::s_support() const {
    std::vector<long> seen;
    for (const auto& [e, c] : terms_)
        if (std::find(seen.begin(), seen.end(), e.s) == seen.end()) seen.push_back(e.s);
    std::sort(seen.begin(), seen.end());
    std::vector<Frac> out;
    for (long v : seen) out.push_back(Frac(v, den_));
    return out;
}

Frac FSeries::lowest_q_exponent() const {
    if (terms_.empty()) throw std::domain_error("FSeries::lowest_q_exponent: zero series");
    return Frac(terms_.begin()->first.q, den_);
}

std::string FSeries::serialize() const {
    std::ostringstream os;
    os << "{\"vars\":[";
    bool first = true;
    for (const char* v : {"q", "r", "s"}) {
        bool present = (v[0] == 'q') ? vars_.q : (v[0] == 'r') ? vars_.r : vars_.s;
        if (!present) continue;
        if (!first) os << ",";
        os << "\"" << v << "\"";
        first = false;
    }
    os << "],\"den\":" << den_;
    if (vars_.r) os << ",\"denr\":" << denr_;
    os << ",\"trunc\":" << trunc_ << ",\"terms\":[";
    first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << ",";
        os << "[";
        if (vars_.q) os << e.q << ",";
        if (vars_.r) os << e.r << ",";
        if (vars_.s) os << e.s << ",";
        os << "\"" << to_decimal(c) << "\"]";
        first = false;
    }
    os << "]}";
    return os.str();
}

FSeries FSeries::deserialize(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    VarSet v;
    for (const auto& name : j.at("vars")) {
        std::string s = name.get<std::string>();
        if (s == "q")
            v.q = true;
        else if (s == "r")
            v.r = true;
        else if (s == "s")
            v.s = true;
        else
            throw std::domain_error("FSeries::deserialize: unknown variable " + s);
    }
    long den = j.at("den").get<long>();
    long denr = j.contains("denr") ? j.at("denr").get<long>() : (v.r ? 2 : 1);
    FSeries f(v, den, denr, j.at("trunc").get<long>());
    for (const auto& row : j.at("terms")) {
        std::size_t i = 0;
        Expo e;
        if (v.q) e.q = row.at(i++).get<long>();
        if (v.r) e.r = row.at(i++).get<long>();
        if (v.s) e.s = row.at(i++).get<long>();
        BigInt c = bigint_from_decimal(row.at(i).get<std::string>());
        if (c == 0) throw std::domain_error("FSeries::deserialize: explicit zero coefficient");
        if (!f.terms_.emplace(e, c).second)
            throw std::domain_error("FSeries::deserialize: duplicate exponent vector");
    }
    f.canonicalize();
    return f;
}

std::string FSeries::to_csv() const {
    std::ostringstream os;
    os << "# vars=";
    if (vars_.q) os << "q";
    if (vars_.r) os << "r";
    if (vars_.s) os << "s";
    os << " den=" << den_ << " denr=" << denr_ << " trunc=" << trunc_ << "\n";
    for (const auto& [e, c] : terms_) {
        if (vars_.q) os << e.q << ",";
        if (vars_.r) os << e.r << ",";
        if (vars_.s) os << e.s << ",";
        os << to_decimal(c) << "\n";
    }
    return os.str();
}

bool equal_to_order(const FSeries& a, const FSeries& b, TruncOrder T) {
    // compare through the smaller of T and the two stored windows
    auto lt = [](Frac x, Frac y) { return x.num * y.den < y.num * x.den; };
    Frac Te = T;
    if (lt(a.trunc(), Te)) Te = a.trunc();
    if (lt(b.trunc(), Te)) Te = b.trunc();
    FSeries x = a.truncated(Te), y = b.truncated(Te);
    return x.vars() == y.vars() && x.den() == y.den() && x.denr() == y.denr() &&
           x.terms() == y.terms();
}

// One q-order block of a series as a dense r-Laurent polynomial.
namespace {
struct RPoly {
    long lo = 0;                 // r-exponent of coeffs[0]
    std::vector<BigInt> coeffs;  // dense, may be empty (zero poly)

    bool zero() const {
        for (const auto& c : coeffs)
            if (c != 0) return false;
        return true;
    }
};

RPoly rpoly_divide_exact(const RPoly& num, const RPoly& den) {
    if (den.coeffs.empty() || den.coeffs.back() == 0)
        throw std::logic_error("rpoly_divide_exact: unnormalized divisor");
    const BigInt& top = den.coeffs.back();
    if (top != 1 && top != -1)
        throw std::domain_error("rpoly_divide_exact: divisor top coefficient " + to_decimal(top) +
                                " is not a unit");
    RPoly rem = num;
    long dtop = den.lo + static_cast<long>(den.coeffs.size()) - 1;
    RPoly quot;
    if (rem.coeffs.size() < den.coeffs.size()) {
        if (!rem.zero()) throw std::domain_error("rpoly_divide_exact: nonzero remainder");
        return quot;
    }
    quot.lo = rem.lo - den.lo;
    quot.coeffs.assign(rem.coeffs.size() - den.coeffs.size() + 1, BigInt(0));
    for (long i = static_cast<long>(quot.coeffs.size()) - 1; i >= 0; --i) {
        long rtop = quot.lo + i + dtop;  // r-exponent this step eliminates
        BigInt c = rem.coeffs[static_cast<std::size_t>(rtop - rem.lo)];
        if (c == 0) continue;
        BigInt f = (top == 1) ? c : -c;
        quot.coeffs[static_cast<std::size_t>(i)] = f;
        for (std::size_t k = 0; k < den.coeffs.size(); ++k)
            rem.coeffs[static_cast<std::size_t>(quot.lo + i + den.lo + static_cast<long>(k) - rem.lo)] -=
                f * den.coeffs[k];
    }
    if (!rem.zero()) throw std::domain_error("rpoly_divide_exact: nonzero remainder");
    return quot;
}

}  // namespace

namespace {
RPoly rpoly_from_sparse(const std::map<long, BigInt>& row) {
    RPoly p;
    std::map<long, BigInt> nz;
    for (const auto& [r, c] : row)
        if (c != 0) nz.emplace(r, c);
    if (nz.empty()) return p;
    p.lo = nz.begin()->first;
    long hi = nz.rbegin()->first;
    p.coeffs.assign(static_cast<std::size_t>(hi - p.lo) + 1, BigInt(0));
    for (const auto& [r, c] : nz) p.coeffs[static_cast<std::size_t>(r - p.lo)] = c;
    return p;
}
}  // namespace

FSeries divide_exact_qr(const FSeries& X, const FSeries& D) {
    if (X.vars().s || D.vars().s)
        throw std::domain_error("divide_exact_qr: series must not involve s");
    if (D.is_zero()) throw std::domain_error("divide_exact_qr: division by zero series");
    FSeries x = X, d = D;
    FSeries::reconcile(x, d);
    const long den = x.den(), denr = x.denr();
    const long e0 = d.terms().begin()->first.q;
    const long tmin = std::min(x.trunc_units(), d.trunc_units());

    std::map<long, std::map<long, BigInt>> rem;  // q-units -> (r-units -> coeff)
    for (const auto& [e, c] : x.terms()) rem[e.q][e.r] = c;
    std::map<long, std::map<long, BigInt>> db;
    for (const auto& [e, c] : d.terms()) db[e.q][e.r] = c;
    RPoly d0 = rpoly_from_sparse(db.begin()->second);

    FSeries quot(x.vars(), den, denr, tmin - e0);
    while (!rem.empty()) {
        auto it = rem.begin();
        RPoly block = rpoly_from_sparse(it->second);
        if (block.zero()) {
            rem.erase(it);
            continue;
        }
        long n = it->first;
        if (n >= tmin) break;  // beyond the window both inputs support
        RPoly y = rpoly_divide_exact(block, d0);  // throws on remainder
        for (std::size_t k = 0; k < y.coeffs.size(); ++k)
            if (y.coeffs[k] != 0)
                quot.set_term(Expo{n - e0, y.lo + static_cast<long>(k), 0}, y.coeffs[k]);
        for (const auto& [m, drow] : db) {
            long tq = n - e0 + m;
            if (tq >= tmin) break;
            auto& target = rem[tq];
            for (std::size_t k = 0; k < y.coeffs.size(); ++k) {
                if (y.coeffs[k] == 0) continue;
                for (const auto& [r, c] : drow) target[y.lo + static_cast<long>(k) + r] -= y.coeffs[k] * c;
            }
        }
        // the lowest block cancels by construction
        rem.erase(n);
    }
    quot.canonicalize();
    return quot;
}

FSeries eta_series(long j, TruncOrder T) {
    if (j < 1) throw std::domain_error("eta_series: multiplier must be positive");
    long den = lcm_long(24, T.den);
    long tu = frac_in_units(T, den, "truncation order");
    Frac Tf(tu, den);
    FSeries f = FSeries::monomial(1, Frac(j, 24), Frac(0), Frac(0), Tf);
    // factor (1 - q^(jn)) contributes only while j/24 + jn stays inside the window
    for (long n = 1; j * den / 24 + j * n * den < tu; ++n)
        f = mul(f, FSeries::constant(1, Tf) - FSeries::monomial(1, Frac(j * n), Frac(0), Frac(0), Tf));
    return f;
}

}  // namespace moonshine
