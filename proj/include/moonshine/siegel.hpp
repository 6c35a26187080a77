#pragma once

#include <array>
#include <string>
#include <vector>

#include "moonshine/fseries.hpp"
#include "moonshine/jacobi.hpp"

namespace moonshine {

// Genus-two object expanded in (q, r, s); weight2 is the doubled weight
// (20 for the weight-ten form, 10 for its square root, 3 for the theta
// product of weight 3/2).
struct SiegelForm {
    int weight2 = 0;
    int level = 1;
    std::string label;
    FSeries series;
};

// Multiplicative +-1 character on residues coprime to the level.
class LiftCharacter {
public:
    static LiftCharacter trivial(long level);
    LiftCharacter(long level, std::vector<int> values);
    long level() const { return level_; }
    int operator()(long a) const;

private:
    long level_ = 1;
    std::vector<int> values_;
};

struct LiftSpec {
    JacobiForm seed;     // index2 = 2 (integer index 1) or 1 (index 1/2)
    long level = 1;      // divisors a in the Hecke sum are coprime to this
    int weight = 0;      // k: the divisor sum carries a^(k-1)
    LiftCharacter chi = LiftCharacter::trivial(1);
    std::string label;
};

// Seed phi_{k,1} = theta1^2/eta^6 * g_rho for a bundled 24-point class;
// k = (number of parts)/2 - 2.
JacobiForm additive_seed_phi(const std::string& m24_class, TruncOrder T);
// Seed theta1/eta^3 * g_rhohat, index 1/2, for a balanced M12 class in
// {1A, 2B, 3A, 5A, 4A}; weight = (number of parts)/2 - 1.
JacobiForm additive_seed_delta(const std::string& m12_class, TruncOrder T);

// Seeds plus lift parameters, built deep enough to lift to order T.
LiftSpec phi_lift_spec(const std::string& m24_class, TruncOrder T);
LiftSpec delta_lift_spec(const std::string& m12_class, TruncOrder T);

// Experimental scaled seed theta1/eta^3 * g_rhohat(tau/N) for the
// generalized families; carries no verified lift claims.
JacobiForm scaled_delta_seed(const std::string& m12_class, long N, TruncOrder T);

// Coefficient-level additive (Maass/Hecke) lift:
//   c_m(n, l) = sum_{a | (n,l,m), gcd(a,level)=1} chi(a) a^(k-1) c_1(nm/a^2, l/a)
// run over integer Fourier indices for integer-index seeds and over odd
// doubled indices for index-1/2 seeds.
SiegelForm additive_lift(const LiftSpec& spec, TruncOrder T);

// Single Fourier-Jacobi image by the divisor-sum formula above.
JacobiForm hecke_image_divisor_sum(const LiftSpec& spec, long m);
// Independent direct evaluation of the defining Hecke sum
//   (1/m) sum_{ad=m, (a,level)=1} sum_{b mod d} chi(a) a^k phi((a tau + b)/d, a z)
// with exact root-of-unity bookkeeping; integer-index seeds only.
JacobiForm hecke_image_direct(const LiftSpec& spec, long m);

struct SquareSplitResult {
    bool ok = false;
    std::string first_mismatch;
};

// Phi^rho = (Delta^rhohat)^2 coefficient-for-coefficient through T.
SquareSplitResult square_split_check(const std::string& m24_class, TruncOrder T);

// Genus-two theta constant theta[a;b](scale*Z) from the lattice sum.
FSeries theta_genus2(const std::array<int, 2>& a, const std::array<int, 2>& b, long scale,
                     TruncOrder T);

struct ThetaIdentityReport {
    bool prefactors_clear = false;       // 1/8 and 1/4 clear to integers
    bool product_matches_lift = false;   // theta-product square == additive lift of the 4B seed
    bool square_integral = false;        // the squared weight-3/2 object is integral
    bool even_count_ok = false;          // exactly 10 even characteristics
    bool parity_split_ok = false;        // 6 all-even (a != 0) + 4 integral (a = 0)
    std::string detail;
    bool ok() const {
        return prefactors_clear && product_matches_lift && square_integral && even_count_ok &&
               parity_split_ok;
    }
};

ThetaIdentityReport theta_identity_checks(TruncOrder T);

struct QuotientReport {
    bool ok = false;
    int quotient_weight2 = 0;
    std::string detail;
};

// Fourier-Jacobi division of the theta-form weight-3 object by the lifted
// weight-1 form: zero remainder at every stage and an exact round trip.
QuotientReport quotient_check(TruncOrder T);

struct BkmFormInfo {
    std::string form;     // e.g. "delta5" or "delta1(4,2)"
    std::string cls;      // conjugacy class label, e.g. "4A'"
    std::string algebra;  // bundled algebra tag, e.g. "G4(2)"
};

const std::vector<BkmFormInfo>& bkm_form_catalog();
const std::array<std::array<int, 3>, 3>& bkm_cartan_matrix();

// Builds a named form for export ("delta5", "delta3", "delta2", "delta1",
// "delta1_4a", "phi10", "phi6", "phi4", "phi2", "phi3_4b", "delta32",
// "delta1_4b").
SiegelForm siegel_form_by_name(const std::string& name, TruncOrder T);

// Fourier data of a form as CSV rows tagged with its algebra label.
std::string bkm_root_data_csv(const SiegelForm& f);

}  // namespace moonshine
