#pragma once

#include <map>
#include <string>
#include <vector>

#include "moonshine/bigint.hpp"

namespace moonshine {

// Coefficients of the n-th cyclotomic polynomial, ascending degree.
std::vector<BigInt> cyclotomic_polynomial(long n);

// Exact element of Z[e^(2*pi*i/cond)], kept reduced modulo the cyclotomic
// polynomial of the conductor (power basis, degree < phi(cond)). Rational
// values canonicalize to conductor 1.
class CycValue {
public:
    CycValue() = default;
    CycValue(long v) : CycValue(BigInt(v)) {}
    CycValue(const BigInt& v);
    static CycValue root_of_unity(long cond, long k, const BigInt& coeff = 1);

    long conductor() const { return cond_; }
    const std::map<long, BigInt>& coeffs() const { return coeffs_; }

    friend CycValue operator+(const CycValue& a, const CycValue& b);
    friend CycValue operator-(const CycValue& a, const CycValue& b);
    friend CycValue operator*(const CycValue& a, const CycValue& b);
    CycValue operator-() const;
    CycValue& operator+=(const CycValue& o) { return *this = *this + o; }

    CycValue conjugate() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_integer() const;
    BigInt as_integer() const;  // throws if not rational

    friend bool operator==(const CycValue& a, const CycValue& b);

    // "5", "-3" or "cyc(11;1:1,3:1,4:1,5:1,9:1)"
    std::string str() const;
    static CycValue parse(const std::string& text);

private:
    long cond_ = 1;
    std::map<long, BigInt> coeffs_;  // exponent -> coefficient, reduced

    void reduce();
    void fold();
    CycValue lifted(long target_cond) const;
};

}  // namespace moonshine
