#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace specht {

int euler_phi(int r);

// Monic r-th cyclotomic polynomial, coefficients in ascending degree
// (length euler_phi(r) + 1), computed by exact division of x^r - 1 by the
// cyclotomic polynomials of the proper divisors of r.
std::vector<long long> cyclotomic_polynomial(int r);

// An element of Z[w], w = exp(2*pi*i/r), stored in canonical form: the
// coordinate vector in the power basis {1, w, ..., w^(phi(r)-1)} of the ring
// Z[x]/(Phi_r).  Equality of values is equality of coordinate vectors.
// Coefficients are machine integers with checked overflow; entries at desk
// scale stay tiny, so an overflow aborts loudly rather than growing digits.
class CycloInt {
public:
    CycloInt() : CycloInt(1, 0) {}
    CycloInt(int r, long long value);  // the rational integer `value`
    static CycloInt root_power(int r, long long k);  // w^(k mod r)
    static CycloInt from_coeffs(int r, std::vector<long long> coeffs);

    int order() const { return r_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_integer() const;
    long long integer_value() const;  // requires is_integer()

    // Image under w -> w^(r-1), i.e. complex conjugation.
    CycloInt conjugate() const;

    CycloInt& operator+=(const CycloInt& o);
    CycloInt& operator-=(const CycloInt& o);
    CycloInt& operator*=(const CycloInt& o);
    friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
    friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
    friend CycloInt operator*(CycloInt a, const CycloInt& b) { return a *= b; }
    CycloInt operator-() const;

    friend bool operator==(const CycloInt&, const CycloInt&) = default;

    // "w^2-w+1" style, descending powers; plain integer when r <= 2 or the
    // value is rational.
    std::string to_string() const;

private:
    int r_;
    std::vector<long long> coeffs_;  // length euler_phi(r_)

    void check_same_order(const CycloInt& o) const;
};

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

}  // namespace specht
