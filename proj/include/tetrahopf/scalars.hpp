#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "tetrahopf/error.hpp"

namespace tetrahopf {

/// The field Q(zeta_N): order N and the N-th cyclotomic polynomial Phi_N,
/// shared by all scalars of a session. Instances are cached by order.
class CycField {
public:
    static std::shared_ptr<const CycField> get(int order);

    int order() const { return order_; }
    /// deg Phi_N = phi(N); canonical representatives have degree < this.
    int degree() const { return static_cast<int>(phi_.size()) - 1; }
    const std::vector<mpz_class>& modulus() const { return phi_; }

    /// Remainder of an arbitrary-degree polynomial in zeta modulo Phi_N.
    std::vector<mpq_class> reduce(std::vector<mpq_class> poly) const;

private:
    explicit CycField(int order);
    int order_;
    std::vector<mpz_class> phi_; // Phi_N, monic, index = degree
};

/// An exact element of Q(zeta_N), stored as the canonical representative
/// of degree < phi(N) modulo the N-th cyclotomic polynomial. Immutable
/// value semantics; all arithmetic is exact.
class Cyclotomic {
public:
    Cyclotomic(); // 0 in Q(zeta_1) = Q
    Cyclotomic(long v);
    Cyclotomic(const mpq_class& v);

    static Cyclotomic zero(int order);
    static Cyclotomic one(int order);
    static Cyclotomic rational(const mpq_class& v, int order);
    /// zeta_N^k in Q(zeta_N).
    static Cyclotomic root_of_unity(long k, int order);

    int order() const { return field_->order(); }
    bool is_zero() const;
    bool is_rational() const;
    /// Value as a rational; requires is_rational().
    mpq_class rational_value() const;

    /// Image under zeta_M -> zeta_N^{N/M}; requires order() | N.
    Cyclotomic promoted(int order) const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Multiplicative order if the value is a root of unity, else 0.
    long root_of_unity_order() const;

    /// "a0 + a1*z^1 + ..." with exact rationals "p/q".
    std::string to_string() const;

    const std::vector<mpq_class>& coeffs() const { return c_; }

private:
    Cyclotomic(std::shared_ptr<const CycField> f, std::vector<mpq_class> c);
    static void align(Cyclotomic& a, Cyclotomic& b);

    std::shared_ptr<const CycField> field_;
    std::vector<mpq_class> c_; // size = field_->degree()
};

/// A polynomial in the central parameter F with coefficients in Q(zeta_N).
/// Trailing zero coefficients are never stored; the zero polynomial has an
/// empty coefficient vector.
class FPoly {
public:
    FPoly() = default;
    FPoly(const Cyclotomic& constant);
    static FPoly zero() { return FPoly(); }
    static FPoly constant(const Cyclotomic& c) { return FPoly(c); }
    /// The monomial c * F^d.
    static FPoly monomial(const Cyclotomic& c, int d);
    static FPoly F(int order);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
    const Cyclotomic& coeff(int d) const;
    bool is_constant() const { return c_.size() <= 1; }

    /// Exact Horner evaluation at F = value.
    Cyclotomic eval(const Cyclotomic& value) const;

    FPoly operator-() const;
    FPoly operator+(const FPoly& o) const;
    FPoly operator-(const FPoly& o) const;
    FPoly operator*(const FPoly& o) const;
    FPoly operator*(const Cyclotomic& s) const;
    /// Division by a nonzero constant polynomial; anything else throws.
    FPoly div_unit(const FPoly& unit) const;
    bool operator==(const FPoly& o) const;
    bool operator!=(const FPoly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void trim();
    std::vector<Cyclotomic> c_; // c_[d] is the coefficient of F^d
};

} // namespace tetrahopf
