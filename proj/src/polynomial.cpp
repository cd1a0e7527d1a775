#include "sostiae/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace sostiae {

namespace {

// Drop exact leading zeros; the zero polynomial collapses to [0].
std::vector<double> trimmed(std::vector<double> c) {
    if (c.empty()) {
        throw std::invalid_argument("polynomial needs at least one coefficient");
    }
    auto first = std::find_if(c.begin(), c.end(), [](double x) { return x != 0.0; });
    if (first == c.end()) {
        return {0.0};
    }
    return {first, c.end()};
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(trimmed(std::move(coeffs))) {}

double Polynomial::eval(double s) const {
    double acc = 0.0;
    for (double c : coeffs_) {
        acc = acc * s + c;
    }
    return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> s) const {
    std::complex<double> acc = 0.0;
    for (double c : coeffs_) {
        acc = acc * s + c;
    }
    return acc;
}

Polynomial Polynomial::scaled(double k) const {
    std::vector<double> c = coeffs_;
    for (double& x : c) {
        x *= k;
    }
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::size_t n = std::max(ca.size(), cb.size());
    std::vector<double> out(n, 0.0);
    // Align on the constant term (last entry).
    for (std::size_t i = 0; i < ca.size(); ++i) {
        out[n - ca.size() + i] += ca[i];
    }
    for (std::size_t i = 0; i < cb.size(); ++i) {
        out[n - cb.size() + i] += cb[i];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return Polynomial::zero();
    }
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<double> out(ca.size() + cb.size() - 1, 0.0);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        for (std::size_t j = 0; j < cb.size(); ++j) {
            out[i + j] += ca[i] * cb[j];
        }
    }
    return Polynomial(std::move(out));
}

}  // namespace sostiae
