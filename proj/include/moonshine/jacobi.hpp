#pragma once

#include <string>
#include <vector>

#include "moonshine/bigint.hpp"
#include "moonshine/fseries.hpp"

namespace moonshine {

// Two-variable modular object expanded in (q, r); `index2` is the doubled
// index, so index one is index2 = 2.
struct JacobiForm {
    int weight = 0;
    int index2 = 2;
    int level = 1;
    std::string label;
    FSeries series;
};

// Genus-one theta functions from the characteristic sum
//   theta[a;b](tau,z) = sum_l q^((l+a/2)^2/2) r^(l+a/2) (-1)^(l b),
// with the dictionary 1 -> [1;1], 2 -> [1;0], 3 -> [0;0], 4 -> [0;1].
// theta1 is odd under r -> 1/r, theta3/theta4 even.
FSeries theta_genus1(int i, TruncOrder T);

// Weight-2 level-N Eisenstein series, normalized to 1 + O(q), built from the
// logarithmic q-derivative of eta(tau)/eta(N tau). Needs (N-1) | 24.
FSeries eisenstein_level(long N, TruncOrder T);

// Eichler-Zagier weak Jacobi generators used by the twisted genera:
// phi_{0,1} = 4 sum_{i=2,3,4} theta_i(tau,z)^2/theta_i(tau,0)^2  and
// phi_{-2,1} = theta_1(tau,z)^2/eta(tau)^6.
FSeries ez_phi_0_1(TruncOrder T);
FSeries ez_phi_m2_1(TruncOrder T);

// Massless (C) and massive (B) superconformal characters at level one,
// normalized so that C(tau,0) = 1 and B(tau,0) = 0  (both enforced).
struct N4Characters {
    JacobiForm massless;  // C
    JacobiForm massive;   // B
};
N4Characters n4_characters(TruncOrder T);

// Twisted elliptic genera for the insertion classes 1A, 2A, 3A, 5A
// (order N = 1, 2, 3, 5); psi(tau,0) equals the twisted Euler characteristic.
JacobiForm twisted_elliptic_genus(const std::string& m24_class, TruncOrder T);

enum class SigmaKind { Insertion, TwistedSector };

std::string sigma_kind_name(SigmaKind k);

// The q-series multiplying the massive character, with the q^(-1/8)
// prefactor carried as a declared offset rather than stored exponents.
struct SigmaSeries {
    SigmaKind kind = SigmaKind::Insertion;
    std::string cls;
    BigInt alpha = 0;
    Frac offset = Frac(-1, 8);
    FSeries series;

    std::string json() const;
};

struct AlphaSigma {
    BigInt alpha;
    FSeries sigma;
};

// Solves psi = alpha*C + q^(-1/8)*Sigma*B exactly; alpha = psi(tau,0); any
// residual term is an inconsistency and throws.
AlphaSigma extract_alpha_sigma(const JacobiForm& psi);

// Full Sigma of an insertion genus (M24 class), and the halved hatted
// version attached to the corresponding M12 class.
SigmaSeries sigma_insertion_m24(const std::string& m24_class, TruncOrder T);
SigmaSeries sigma_insertion_m12(const std::string& m12_class, TruncOrder T);

// Twisted-sector object for an M12 class of prime order N in {2,3,5},
// obtained from the insertion genus by the exact S-transformation of its
// closed-form building blocks; Sigma expands in powers q^(n/N) and all
// coefficients must be integers.
SigmaSeries twisted_sector_sigma(const std::string& m12_class, TruncOrder T);

struct JacobiSplitCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

// psi^rho = 2 psihat^rhohat for the invariant classes, alphahat = 1 + chi2,
// and the Sigma-hat character identities at q^1..q^3.
JacobiSplitCheck split_jacobi_check(const std::string& m24_class, TruncOrder T);

}  // namespace moonshine
