#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "galcov/artal.hpp"
#include "galcov/group.hpp"
#include "galcov/polynomial.hpp"

namespace galcov {

// Homogeneous coordinates with the largest-modulus coordinate scaled to 1.
struct ProjectivePoint {
    std::complex<double> x, y, z;

    // Normalizes; throws invalid_argument when all coordinates vanish.
    static ProjectivePoint of(std::complex<double> x, std::complex<double> y,
                              std::complex<double> z);
};

// The corners of the line triangle: P1 = (0:1:0), P2 = (0:0:1), P3 = (1:0:0).
ProjectivePoint corner_P1();
ProjectivePoint corner_P2();
ProjectivePoint corner_P3();

// exp(2 pi i k / n)
std::complex<double> root_of_unity(int n, int k);

// Principal n-th root: |z|^(1/n) exp(i arg(z)/n) with arg(z) in (-pi, pi].
std::complex<double> principal_root(std::complex<double> z, int n);

// Coefficient data for the degree-d normal form: c[i-1][j] = c_{i,j} with
// list lengths matching the partition part counts, and the free homogeneous
// degree d-3 correction g0 in variables (x, y, z).
struct ArtalCoefficients {
    ArtalType type;
    int beta = 0;
    std::vector<std::vector<std::complex<double>>> c;
    CPolynomial g0{3};
};

// The defining polynomial
//   prod_j (y + c_{1,j} z)^{e_{1,j}} + prod_j (z + c_{2,j} x)^{e_{2,j}}
//   + prod_j (x + c_{3,j} y)^{e_{3,j}} - x^d - y^d - z^d + x y z g0
// expanded in variables (x, y, z).  The coefficients must satisfy the
// product constraints (families 1 and 2 multiply to 1, family 3 to
// zeta_d^(beta mu3), exponents mu_{i,j}) and be pairwise distinct within
// each family; violations beyond tol throw invalid_argument naming the
// offending product.  Smoothness of the resulting curve is a genericity
// assumption on g0, not certified here.
CPolynomial build_FP(const ArtalType& type, int beta,
                     const std::vector<std::vector<std::complex<double>>>& c,
                     const CPolynomial& g0, double tol = 1e-6);

// The six corner evaluations of h_x = prod (y + c_{1,j} z)^{mu_{1,j}} / (x+y+z)^{mu_1}
// and its cyclic analogues h_y, h_z.  For valid coefficient data the pattern
// is (1, 1, 1, 1, 1, zeta_d^(beta mu3)).
struct ArtalHValues {
    std::complex<double> hx_P1, hx_P2, hy_P2, hy_P3, hz_P3, hz_P1;
};

ArtalHValues h_values_for_artal(const ArtalType& type, int beta,
                                const std::vector<std::vector<std::complex<double>>>& c,
                                double tol = 1e-6);

// One crossing of the triangle walk: the h value at the far corner, the
// chosen mu-th root of the h value at the near corner, and the crossing's
// exponent mu = m/s and splitting number s.
struct HEvaluation {
    std::complex<double> h;
    std::complex<double> d;
    int mu = 1;
    int s = 1;
};

struct OffsetExtraction {
    int alpha = 0;      // in [0, s)
    double residual = 0;  // distance from h/d^mu to the matched root of unity
    double margin = 0;    // second-best distance minus residual; infinite for s = 1
};

class extraction_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Matches each ratio h/d^mu against the s-th roots of unity.  An extraction
// succeeds when the best match has residual < tol and beats the runner-up by
// more than 10*tol; otherwise extraction_error with diagnostics.
std::vector<OffsetExtraction> extract_offsets(const std::vector<HEvaluation>& evals,
                                              int m, double tol);

// Net voltage coset predicted for a walk crossing components with splitting
// numbers s_list and per-crossing offsets alpha_list:
// [sum alpha_i] + gcd(s_1..s_n) Z_m.  Every s_i must divide m; empty input
// gives the trivial coset {[0]}.
CycloCoset theorem_net_voltage(const std::vector<int>& s_list,
                               const std::vector<int>& alpha_list, int m);

}  // namespace galcov
