#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "moonshine/bigint.hpp"

namespace moonshine {

// Exact rational with small numerator/denominator, used for exponents,
// truncation orders and prefactor offsets.
struct Frac {
    long num = 0;
    long den = 1;

    Frac() = default;
    Frac(long n) : num(n), den(1) {}
    Frac(long n, long d);

    friend Frac operator+(Frac a, Frac b);
    friend Frac operator-(Frac a, Frac b);
    friend Frac operator*(Frac a, Frac b);
    friend bool operator==(const Frac& a, const Frac& b) = default;
    std::string str() const;
};

using TruncOrder = Frac;

// Which of the formal variables q, r, s a series uses. q and s share the
// global exponent denominator `den`; r has its own denominator `denr`.
struct VarSet {
    bool q = false;
    bool r = false;
    bool s = false;

    friend bool operator==(const VarSet&, const VarSet&) = default;
    bool subset_of(const VarSet& o) const {
        return (!q || o.q) && (!r || o.r) && (!s || o.s);
    }
    static VarSet Q() { return {true, false, false}; }
    static VarSet QR() { return {true, true, false}; }
    static VarSet QRS() { return {true, true, true}; }
    static VarSet none() { return {}; }
};

struct Expo {
    long q = 0;
    long r = 0;
    long s = 0;
    friend auto operator<=>(const Expo&, const Expo&) = default;
};

// Truncated sparse Puiseux series in up to three variables (q, r, s) over
// arbitrary-precision integers. Exponents of q and s are stored as integers
// over a per-series denominator `den`; r-exponents over `denr`. `trunc`
// bounds the q-exponent (and the s-exponent when s is present), measured in
// den-units, exclusive. q and s exponents may be negative (finite pole
// order); r is Laurent in both directions.
//
// Invariants: no stored coefficient is zero; every stored q/s-exponent is
// < trunc; den, denr and the variable list are minimal (canonical), so equal
// series serialize to byte-identical text.
class FSeries {
public:
    FSeries() = default;
    FSeries(VarSet vars, long den, long denr, long trunc_units);

    static FSeries zero(VarSet vars, long den, long denr, TruncOrder T);
    // Constant c with unbounded-looking truncation window T.
    static FSeries constant(const BigInt& c, TruncOrder T);
    // c * q^eq * r^er * s^es
    static FSeries monomial(const BigInt& c, Frac eq, Frac er, Frac es, TruncOrder T);

    const VarSet& vars() const { return vars_; }
    long den() const { return den_; }
    long denr() const { return denr_; }
    long trunc_units() const { return trunc_; }
    Frac trunc() const { return Frac(trunc_, den_); }
    const std::map<Expo, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Used by builders that fill `terms` directly; restores all invariants.
    void set_term(Expo e, BigInt c);
    void canonicalize();

    friend FSeries add(const FSeries& a, const FSeries& b);
    friend FSeries sub(const FSeries& a, const FSeries& b);
    friend FSeries mul(const FSeries& a, const FSeries& b);
    FSeries operator-() const;
    friend FSeries operator+(const FSeries& a, const FSeries& b) { return add(a, b); }
    friend FSeries operator-(const FSeries& a, const FSeries& b) { return sub(a, b); }
    friend FSeries operator*(const FSeries& a, const FSeries& b) { return mul(a, b); }

    FSeries scaled(const BigInt& c) const;
    // Divides every coefficient by c, throwing if any division is inexact.
    FSeries divexact(const BigInt& c) const;
    FSeries shifted(Frac dq, Frac dr, Frac ds) const;

    // Multiplicative inverse of a series whose unique lowest term has
    // coefficient +-1 (a unit once the leading monomial is factored out).
    // Only pure-q series are invertible here; result is exact to q^T.
    FSeries invert_unit(TruncOrder T) const;

    // q^e -> q^(e*num/denom) on every term; truncation rescales with it.
    FSeries scale_q(long num, long denom) const;

    FSeries pow_int(long n, TruncOrder T) const;
    FSeries truncated(TruncOrder T) const;

    BigInt coeff(Frac eq, Frac er = Frac(0), Frac es = Frac(0)) const;
    // Substitute r -> 1 (sum r-coefficients per (q,s) monomial).
    FSeries eval_r1() const;
    // Coefficient of s^es as a series in the remaining variables.
    FSeries fj_coefficient(Frac es) const;
    std::vector<Frac> s_support() const;
    Frac lowest_q_exponent() const;

    std::string serialize() const;
    static FSeries deserialize(const std::string& json_text);
    std::string to_csv() const;

    friend bool operator==(const FSeries& a, const FSeries& b) = default;
    // Equality of all coefficients with q (and s) exponent < T.
    friend bool equal_to_order(const FSeries& a, const FSeries& b, TruncOrder T);
    friend FSeries divide_exact_qr(const FSeries& X, const FSeries& D);

private:
    VarSet vars_;
    long den_ = 1;
    long denr_ = 1;
    long trunc_ = 0;
    std::map<Expo, BigInt> terms_;

    void rescale_to(long den, long denr);
    static void reconcile(FSeries& a, FSeries& b);
};

// Dedekind eta factor: q^(j/24) * prod_{n>=1} (1 - q^(jn)), truncated at T.
FSeries eta_series(long j, TruncOrder T);

// Exact division X / D of series without s. D's lowest q-order block must
// be a Laurent polynomial in r whose highest r-coefficient is +-1; every
// stage must leave zero remainder or the division throws.
FSeries divide_exact_qr(const FSeries& X, const FSeries& D);

}  // namespace moonshine
