#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace treepat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with exact integer coefficients.
/// coeff(i) is the coefficient of x^i; the highest stored coefficient is
/// nonzero (the zero polynomial stores nothing).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<long long> coeffs);
    explicit Polynomial(std::vector<Int> coeffs);

    static Polynomial x();
    static Polynomial constant(Int c);

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    Int coeff(int i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;

    Int content() const;
    Polynomial primitive_part() const;
    Polynomial derivative() const;
    Rat eval(const Rat& at) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    bool operator==(const Polynomial&) const = default;

    std::string str() const;

private:
    void trim();
    std::vector<Int> c_;
};

// Primitive gcd with positive leading coefficient; gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
// Exact division; throws std::domain_error if b is zero or does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

Int binomial(long long n, long long k);

/// Fully reduced ratio of two integer polynomials, used for every avoidance
/// generating function. Normal form: gcd(num, den) is a unit, num and den
/// share no integer content, and the lowest nonzero coefficient of den is
/// positive. Equality of normal forms is semantic equality.
class RationalGF {
public:
    RationalGF() : den_{1} {}  // zero
    RationalGF(Polynomial num, Polynomial den);

    static RationalGF zero() { return RationalGF(); }
    static RationalGF x() { return RationalGF(Polynomial::x(), Polynomial{1}); }
    static RationalGF constant(Int c);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalGF operator-() const;
    friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator-(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator*(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator/(const RationalGF& a, const RationalGF& b);
    bool operator==(const RationalGF&) const = default;

    /// Taylor coefficients [x^0..x^nmax] at 0, exact. Requires den(0) != 0
    /// and an integral expansion; throws std::domain_error otherwise.
    std::vector<Int> series(int nmax) const;

    /// 1/r where r is the smallest positive real root of den; 0 when den is
    /// constant. Throws std::domain_error if den is nonconstant with no
    /// positive real root. Root located to 1e-12.
    double growth_rate() const;

    std::string str() const;

private:
    Polynomial num_, den_;
};

}  // namespace treepat
