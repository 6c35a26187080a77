#include "moonshine/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace moonshine {

// (x^n - 1) divided by the product of all lower cyclotomic factors.
std::vector<BigInt> cyclotomic_polynomial(long n) {
    if (n < 1) throw std::domain_error("cyclotomic_polynomial: n must be positive");
    std::vector<BigInt> num(static_cast<std::size_t>(n) + 1);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<BigInt> phi_d = cyclotomic_polynomial(d);
        // exact division num /= phi_d (phi_d is monic)
        std::vector<BigInt> quot(num.size() - phi_d.size() + 1);
        for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
            BigInt c = num[static_cast<std::size_t>(i) + phi_d.size() - 1];
            quot[static_cast<std::size_t>(i)] = c;
            if (c == 0) continue;
            for (std::size_t k = 0; k < phi_d.size(); ++k)
                num[static_cast<std::size_t>(i) + k] -= c * phi_d[k];
        }
        num = std::move(quot);
    }
    return num;
}

CycValue::CycValue(const BigInt& v) {
    if (v != 0) coeffs_[0] = v;
}

CycValue CycValue::root_of_unity(long cond, long k, const BigInt& coeff) {
    if (cond < 1) throw std::domain_error("CycValue: conductor must be positive");
    CycValue out;
    out.cond_ = cond;
    k %= cond;
    if (k < 0) k += cond;
    if (coeff != 0) out.coeffs_[k] = coeff;
    out.reduce();
    return out;
}

void CycValue::reduce() {
    fold();
    if (coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0)) cond_ = 1;
}

// Reduce exponents modulo the cyclotomic polynomial without touching the
// conductor, so values stay on a common lattice during arithmetic.
void CycValue::fold() {
    if (cond_ == 1) {
        // x = 1: all exponents collapse onto the constant
        BigInt total = 0;
        for (const auto& [e, c] : coeffs_) total += c;
        coeffs_.clear();
        if (total != 0) coeffs_[0] = total;
        return;
    }
    std::vector<BigInt> phi = cyclotomic_polynomial(cond_);
    long deg = static_cast<long>(phi.size()) - 1;
    // fold exponents >= deg down using x^deg = -(phi[0] + ... + phi[deg-1] x^(deg-1))
    while (!coeffs_.empty()) {
        auto it = std::prev(coeffs_.end());
        long e = it->first;
        if (e < deg) break;
        BigInt c = it->second;
        coeffs_.erase(it);
        for (long k = 0; k < deg; ++k) {
            if (phi[static_cast<std::size_t>(k)] == 0) continue;
            long t = e - deg + k;
            auto jt = coeffs_.find(t);
            if (jt == coeffs_.end()) {
                BigInt v = -c * phi[static_cast<std::size_t>(k)];
                if (v != 0) coeffs_[t] = std::move(v);
            } else {
                jt->second -= c * phi[static_cast<std::size_t>(k)];
                if (jt->second == 0) coeffs_.erase(jt);
            }
        }
    }
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
}

CycValue CycValue::lifted(long target) const {
    if (target % cond_ != 0) throw std::logic_error("CycValue::lifted: not a multiple");
    CycValue out;
    out.cond_ = target;
    long f = target / cond_;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e * f] = c;
    out.fold();
    return out;
}

CycValue operator+(const CycValue& a, const CycValue& b) {
    long L = lcm_long(a.cond_, b.cond_);
    CycValue x = a.lifted(L), y = b.lifted(L);
    for (const auto& [e, c] : y.coeffs_) {
        auto it = x.coeffs_.find(e);
        if (it == x.coeffs_.end())
            x.coeffs_[e] = c;
        else {
            it->second += c;
            if (it->second == 0) x.coeffs_.erase(it);
        }
    }
    x.reduce();
    return x;
}

CycValue CycValue::operator-() const {
    CycValue out = *this;
    for (auto& [e, c] : out.coeffs_) c = -c;
    return out;
}

CycValue operator-(const CycValue& a, const CycValue& b) { return a + (-b); }

CycValue operator*(const CycValue& a, const CycValue& b) {
    long L = lcm_long(a.cond_, b.cond_);
    CycValue x = a.lifted(L), y = b.lifted(L);
    CycValue out;
    out.cond_ = L;
    for (const auto& [ea, ca] : x.coeffs_)
        for (const auto& [eb, cb] : y.coeffs_) {
            long e = ea + eb;
            auto it = out.coeffs_.find(e);
            if (it == out.coeffs_.end())
                out.coeffs_[e] = ca * cb;
            else {
                it->second += ca * cb;
                if (it->second == 0) out.coeffs_.erase(it);
            }
        }
    out.reduce();
    return out;
}

CycValue CycValue::conjugate() const {
    CycValue out;
    out.cond_ = cond_;
    for (const auto& [e, c] : coeffs_) {
        long k = (cond_ - e) % cond_;
        out.coeffs_[k] = c;  // exponents distinct => negation keeps them distinct
    }
    out.reduce();
    return out;
}

bool CycValue::is_integer() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

BigInt CycValue::as_integer() const {
    if (coeffs_.empty()) return 0;
    if (!is_integer()) throw std::domain_error("CycValue::as_integer: value " + str() + " is irrational");
    return coeffs_.begin()->second;
}

bool operator==(const CycValue& a, const CycValue& b) {
    long L = lcm_long(a.cond_, b.cond_);
    CycValue x = a.lifted(L), y = b.lifted(L);
    return x.coeffs_ == y.coeffs_;
}

std::string CycValue::str() const {
    if (is_integer()) return to_decimal(as_integer());
    std::ostringstream os;
    os << "cyc(" << cond_ << ";";
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << ",";
        os << e << ":" << to_decimal(c);
        first = false;
    }
    os << ")";
    return os.str();
}

CycValue CycValue::parse(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.rfind("cyc(", 0) != 0) return CycValue(bigint_from_decimal(t));
    if (t.back() != ')') throw std::domain_error("CycValue::parse: malformed " + text);
    std::string body = t.substr(4, t.size() - 5);
    auto semi = body.find(';');
    if (semi == std::string::npos) throw std::domain_error("CycValue::parse: malformed " + text);
    long cond = std::stol(body.substr(0, semi));
    CycValue out;
    out.cond_ = cond;
    std::stringstream ss(body.substr(semi + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw std::domain_error("CycValue::parse: malformed " + text);
        long e = std::stol(item.substr(0, colon));
        e %= cond;
        if (e < 0) e += cond;
        BigInt c = bigint_from_decimal(item.substr(colon + 1));
        auto it = out.coeffs_.find(e);
        if (it == out.coeffs_.end())
            out.coeffs_[e] = c;
        else
            it->second += c;
    }
    out.reduce();
    return out;
}

}  // namespace moonshine
