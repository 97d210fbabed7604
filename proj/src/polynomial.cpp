#include "galcov/polynomial.hpp"

#include <stdexcept>

namespace galcov {

CPolynomial CPolynomial::constant(int nvars, std::complex<double> c) {
    CPolynomial p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

CPolynomial CPolynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars)
        throw std::invalid_argument("CPolynomial::variable: index out of range");
    CPolynomial p(nvars);
    std::vector<int> exp(nvars, 0);
    exp[index] = 1;
    p.add_term(std::move(exp), 1.0);
    return p;
}

int CPolynomial::total_degree() const {
    int deg = -1;
    for (const auto& [exp, _] : terms_) {
        int d = 0;
        for (int e : exp) d += e;
        if (d > deg) deg = d;
    }
    return deg;
}

void CPolynomial::add_term(std::vector<int> exponents, std::complex<double> coeff) {
    if (static_cast<int>(exponents.size()) != nvars_)
        throw std::invalid_argument("CPolynomial: exponent vector has wrong length");
    for (int e : exponents)
        if (e < 0) throw std::invalid_argument("CPolynomial: negative exponent");
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        if (coeff != std::complex<double>(0.0))
            terms_.emplace(std::move(exponents), coeff);
    } else {
        it->second += coeff;
        if (it->second == std::complex<double>(0.0)) terms_.erase(it);
    }
}

CPolynomial CPolynomial::operator+(const CPolynomial& rhs) const {
    if (nvars_ != rhs.nvars_)
        throw std::invalid_argument("CPolynomial: variable count mismatch");
    CPolynomial out = *this;
    for (const auto& [exp, c] : rhs.terms_) out.add_term(exp, c);
    return out;
}

CPolynomial CPolynomial::operator-(const CPolynomial& rhs) const {
    if (nvars_ != rhs.nvars_)
        throw std::invalid_argument("CPolynomial: variable count mismatch");
    CPolynomial out = *this;
    for (const auto& [exp, c] : rhs.terms_) out.add_term(exp, -c);
    return out;
}

CPolynomial CPolynomial::operator*(const CPolynomial& rhs) const {
    if (nvars_ != rhs.nvars_)
        throw std::invalid_argument("CPolynomial: variable count mismatch");
    CPolynomial out(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            std::vector<int> exp(nvars_);
            for (int i = 0; i < nvars_; ++i) exp[i] = ea[i] + eb[i];
            out.add_term(std::move(exp), ca * cb);
        }
    }
    return out;
}

CPolynomial CPolynomial::operator*(std::complex<double> c) const {
    CPolynomial out(nvars_);
    for (const auto& [exp, coeff] : terms_) out.add_term(exp, coeff * c);
    return out;
}

CPolynomial CPolynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("CPolynomial::pow: negative exponent");
    CPolynomial out = constant(nvars_, 1.0);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

std::complex<double> CPolynomial::eval(const std::vector<std::complex<double>>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("CPolynomial::eval: point has wrong dimension");
    std::complex<double> acc = 0.0;
    for (const auto& [exp, coeff] : terms_) {
        std::complex<double> t = coeff;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < exp[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

}  // namespace galcov
