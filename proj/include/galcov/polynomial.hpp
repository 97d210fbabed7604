#pragma once

#include <complex>
#include <map>
#include <vector>

namespace galcov {

// Sparse multivariate polynomial over complex doubles.  Terms are keyed by
// exponent vectors; only exactly-zero coefficients are dropped, no epsilon
// pruning.  Evaluation walks the terms in key order, so results are
// deterministic for identical inputs.
class CPolynomial {
public:
    explicit CPolynomial(int nvars) : nvars_(nvars) {}

    static CPolynomial constant(int nvars, std::complex<double> c);
    static CPolynomial variable(int nvars, int index);

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, std::complex<double>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial

    void add_term(std::vector<int> exponents, std::complex<double> coeff);

    CPolynomial operator+(const CPolynomial& rhs) const;
    CPolynomial operator-(const CPolynomial& rhs) const;
    CPolynomial operator*(const CPolynomial& rhs) const;
    CPolynomial operator*(std::complex<double> c) const;
    CPolynomial pow(int k) const;

    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

    bool operator==(const CPolynomial&) const = default;

private:
    int nvars_;
    std::map<std::vector<int>, std::complex<double>> terms_;
};

}  // namespace galcov
