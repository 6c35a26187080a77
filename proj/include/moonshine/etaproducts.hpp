#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moonshine/bigint.hpp"
#include "moonshine/cycle_shape.hpp"
#include "moonshine/fseries.hpp"

namespace moonshine {

// g(tau) = prod_j eta(j*tau)^(a_j) attached to a cycle shape. For a shape on
// p points the series starts at q^(p/24) with coefficient 1, and the doubled
// weight is the number of parts.
struct EtaProduct {
    CycleShape shape;
    long weight2 = 0;  // doubled weight = sum of multiplicities
    FSeries series;
};

EtaProduct eta_product(const CycleShape& shape, TruncOrder T);

// Smallest positive M with {M/j : multiplicities a_j} equal to the shape
// itself, if any.
std::optional<long> balance_witness(const CycleShape& shape);
inline bool is_balanced(const CycleShape& shape) { return balance_witness(shape).has_value(); }

struct MultiplicativityResult {
    bool multiplicative = true;
    long n = 0, m = 0;  // first coprime counterexample when not multiplicative
};

// Writes g = sum a_n q^(n/2) and checks a_{nm} = a_n * a_m for coprime
// n, m <= bound. Requires a 12-point shape.
MultiplicativityResult is_multiplicative(const CycleShape& shape, long bound);

// g_rho = g_rhohat * g_phi(rhohat), coefficient-exact through T, for a
// bundled 24-point split row. Throws for the row with no reduction (7A).
bool split_check(const std::string& m24_class, TruncOrder T);

struct FockCheck {
    std::string id;
    BigInt got;
    BigInt expected;
    bool ok() const { return got == expected; }
};

struct FockExpansion {
    FSeries inverse;  // 1/g
    FSeries direct;   // g
    std::vector<FockCheck> checks;  // q^1/q^2 of both against character data
};

// Character expansions of the boson Fock-space trace for a balanced class:
//   q^(1/2)/g = 1 + (1+chi2) q + (3+3 chi2+chi7) q^2 + ...
//   q^(-1/2) g = 1 - (1+chi2) q + (-1+chi9) q^2 + ...
FockExpansion fock_expansions(const std::string& m12_class, TruncOrder T);

// g_rhohat(tau/N) for a balanced class of order N; leading exponent 1/(2N).
FSeries generalized_eta(const std::string& m12_class, long N, TruncOrder T);

// Commuting-pair moonshine classes: (2,2)->2A, (2,4)/(4,2)->4A, (3,3)->3B.
std::string classify_gh(long M, long N);

// The twelve balanced shapes with their class labels (11A/11B share 1.11),
// in table order.
const std::vector<std::pair<std::string, CycleShape>>& balanced_shape_classes();

// Shapes that are multiplicative but not conjugacy classes: 4^3, 3.9, 12.
const std::vector<CycleShape>& multiplicative_non_class_shapes();

}  // namespace moonshine
