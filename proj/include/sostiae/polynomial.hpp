#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace sostiae {

/// Real polynomial in s, coefficients stored in descending powers
/// (coeffs[0] is the leading coefficient). The zero polynomial is [0].
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    Polynomial(std::initializer_list<double> coeffs)
        : Polynomial(std::vector<double>(coeffs)) {}
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial zero() { return Polynomial{}; }

    const std::vector<double>& coeffs() const { return coeffs_; }
    double operator[](std::size_t i) const { return coeffs_[i]; }
    std::size_t size() const { return coeffs_.size(); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
    double leading() const { return coeffs_.front(); }

    double eval(double s) const;
    std::complex<double> eval(std::complex<double> s) const;

    Polynomial scaled(double k) const;

    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

private:
    std::vector<double> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

}  // namespace sostiae
