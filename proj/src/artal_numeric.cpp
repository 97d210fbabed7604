#include "galcov/artal_numeric.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

namespace galcov {

namespace {

using cd = std::complex<double>;

std::string fmt(cd z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

cd ipow(cd base, int e) {
    cd out = 1.0;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

// Validates list shapes, pairwise distinctness within each family, and the
// three product constraints.  Shared by build_FP and h_values_for_artal.
void check_coefficients(const ArtalType& type, int beta,
                        const std::vector<std::vector<cd>>& c, double tol) {
    if (c.size() != 3)
        throw std::invalid_argument("coefficients: expected three families");
    for (int i = 1; i <= 3; ++i) {
        const auto& ci = c[i - 1];
        if (static_cast<int>(ci.size()) != type.partition(i).count())
            throw std::invalid_argument(
                "coefficients: family " + std::to_string(i) +
                " size does not match the partition");
        for (std::size_t j = 0; j < ci.size(); ++j)
            for (std::size_t k = j + 1; k < ci.size(); ++k)
                if (std::abs(ci[j] - ci[k]) <= tol)
                    throw std::invalid_argument(
                        "coefficients: family " + std::to_string(i) +
                        " entries " + std::to_string(j) + " and " +
                        std::to_string(k) + " coincide");
    }
    for (int i = 1; i <= 3; ++i) {
        const auto mu_ij = type.mu_parts(i);
        cd prod = 1.0;
        for (std::size_t j = 0; j < mu_ij.size(); ++j)
            prod *= ipow(c[i - 1][j], mu_ij[j]);
        const cd target =
            i == 3 ? root_of_unity(type.degree(), beta * type.mu(3)) : cd(1.0);
        if (std::abs(prod - target) > tol)
            throw std::invalid_argument(
                "coefficients: product over family " + std::to_string(i) + " is " +
                fmt(prod) + ", expected " + fmt(target));
    }
}

// prod_j (u + c_j v)^{e_j} for the coordinate pair of family i:
// family 1 uses (y, z), family 2 (z, x), family 3 (x, y).
cd family_product(int i, const std::vector<cd>& ci, const std::vector<int>& exps,
                  cd x, cd y, cd z) {
    cd u = i == 1 ? y : i == 2 ? z : x;
    cd v = i == 1 ? z : i == 2 ? x : y;
    cd prod = 1.0;
    for (std::size_t j = 0; j < ci.size(); ++j) prod *= ipow(u + ci[j] * v, exps[j]);
    return prod;
}

cd h_value(const ArtalType& type, const std::vector<std::vector<cd>>& c, int i,
           const ProjectivePoint& p) {
    const cd denom_base = p.x + p.y + p.z;
    if (std::abs(denom_base) < 1e-12)
        throw std::invalid_argument("h_value: point lies on the line x+y+z=0");
    return family_product(i, c[i - 1], type.mu_parts(i), p.x, p.y, p.z) /
           ipow(denom_base, type.mu(i));
}

}  // namespace

ProjectivePoint ProjectivePoint::of(cd x, cd y, cd z) {
    double ax = std::abs(x), ay = std::abs(y), az = std::abs(z);
    double m = std::max({ax, ay, az});
    if (m == 0.0)
        throw std::invalid_argument("ProjectivePoint: all coordinates are zero");
    cd top = ax >= ay && ax >= az ? x : ay >= az ? y : z;
    return ProjectivePoint{x / top, y / top, z / top};
}

ProjectivePoint corner_P1() { return ProjectivePoint{0.0, 1.0, 0.0}; }
ProjectivePoint corner_P2() { return ProjectivePoint{0.0, 0.0, 1.0}; }
ProjectivePoint corner_P3() { return ProjectivePoint{1.0, 0.0, 0.0}; }

cd root_of_unity(int n, int k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: n must be >= 1");
    // Reduce first so the angle stays small.
    int r = ((k % n) + n) % n;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / n;
    return cd(std::cos(angle), std::sin(angle));
}

cd principal_root(cd z, int n) {
    if (n < 1) throw std::invalid_argument("principal_root: n must be >= 1");
    if (z == cd(0.0)) return 0.0;
    double r = std::pow(std::abs(z), 1.0 / n);
    double angle = std::arg(z) / n;  // arg in (-pi, pi]
    return cd(r * std::cos(angle), r * std::sin(angle));
}

CPolynomial build_FP(const ArtalType& type,
                     int beta, const std::vector<std::vector<cd>>& c,
                     const CPolynomial& g0, double tol) {
    check_coefficients(type, beta, c, tol);
    const int d = type.degree();
    if (g0.nvars() != 3)
        throw std::invalid_argument("build_FP: g0 must be in the variables x, y, z");
    for (const auto& [exp, coeff] : g0.terms())
        if (exp[0] + exp[1] + exp[2] != d - 3)
            throw std::invalid_argument(
                "build_FP: g0 must be homogeneous of degree d - 3 (or zero)");

    const auto X = CPolynomial::variable(3, 0);
    const auto Y = CPolynomial::variable(3, 1);
    const auto Z = CPolynomial::variable(3, 2);

    auto family = [&](int i) {
        const CPolynomial& u = i == 1 ? Y : i == 2 ? Z : X;
        const CPolynomial& v = i == 1 ? Z : i == 2 ? X : Y;
        const auto& parts = type.partition(i).parts();
        CPolynomial prod = CPolynomial::constant(3, 1.0);
        for (std::size_t j = 0; j < parts.size(); ++j)
            prod = prod * (u + v * c[i - 1][j]).pow(parts[j]);
        return prod;
    };

    return family(1) + family(2) + family(3) - X.pow(d) - Y.pow(d) - Z.pow(d) +
           X * Y * Z * g0;
}

ArtalHValues h_values_for_artal(const ArtalType& type, int beta,
                                const std::vector<std::vector<cd>>& c, double tol) {
    check_coefficients(type, beta, c, tol);
    ArtalHValues out;
    out.hx_P1 = h_value(type, c, 1, corner_P1());
    out.hx_P2 = h_value(type, c, 1, corner_P2());
    out.hy_P2 = h_value(type, c, 2, corner_P2());
    out.hy_P3 = h_value(type, c, 2, corner_P3());
    out.hz_P3 = h_value(type, c, 3, corner_P3());
    out.hz_P1 = h_value(type, c, 3, corner_P1());
    return out;
}

std::vector<OffsetExtraction> extract_offsets(const std::vector<HEvaluation>& evals,
                                              int m, double tol) {
    std::vector<OffsetExtraction> out;
    for (std::size_t i = 0; i < evals.size(); ++i) {
        const auto& ev = evals[i];
        if (ev.s < 1 || ev.mu < 1 || ev.s * ev.mu != m)
            throw std::invalid_argument("extract_offsets: need s*mu = m");
        const cd denom = ipow(ev.d, ev.mu);
        if (std::abs(denom) < 1e-12)
            throw extraction_error("extract_offsets: entry " + std::to_string(i) +
                                   " has a vanishing d^mu");
        const cd ratio = ev.h / denom;
        int best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        double second = std::numeric_limits<double>::infinity();
        for (int k = 0; k < ev.s; ++k) {
            double dist = std::abs(ratio - root_of_unity(ev.s, k));
            if (dist < best_dist) {
                second = best_dist;
                best_dist = dist;
                best = k;
            } else if (dist < second) {
                second = dist;
            }
        }
        OffsetExtraction ex;
        ex.alpha = best;
        ex.residual = best_dist;
        ex.margin = second - best_dist;  // infinity when s = 1
        if (ex.residual >= tol)
            throw extraction_error("extract_offsets: entry " + std::to_string(i) +
                                   " ratio " + fmt(ratio) + " matches no root of unity within " +
                                   std::to_string(tol) + " (best residual " +
                                   std::to_string(ex.residual) + ")");
        if (ex.margin <= 10 * tol)
            throw extraction_error("extract_offsets: entry " + std::to_string(i) +
                                   " is ambiguous (margin " + std::to_string(ex.margin) + ")");
        out.push_back(ex);
    }
    return out;
}

CycloCoset theorem_net_voltage(const std::vector<int>& s_list,
                               const std::vector<int>& alpha_list, int m) {
    if (m < 1) throw std::invalid_argument("theorem_net_voltage: m must be >= 1");
    if (s_list.size() != alpha_list.size())
        throw std::invalid_argument("theorem_net_voltage: list lengths differ");
    int step = 0;
    for (int s : s_list) {
        if (s < 1 || m % s != 0)
            throw std::invalid_argument("theorem_net_voltage: each s must divide m");
        step = std::gcd(step, s);
    }
    if (step == 0) step = m;  // no crossings: the trivial coset {[0]}
    long long total = 0;
    for (int a : alpha_list) total += a;
    int offset = static_cast<int>(((total % m) + m) % m);
    return make_coset(m, step, offset);
}

}  // namespace galcov
