#include "specht/cyclo.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace specht {

long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("cyclotomic coefficient overflow in addition");
    return out;
}

long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("cyclotomic coefficient overflow in multiplication");
    return out;
}

int euler_phi(int r) {
    if (r < 1) throw std::invalid_argument("euler_phi: r must be >= 1");
    int result = r;
    int m = r;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact division of polynomials with integer coefficients, ascending-degree
// coefficient vectors.  The divisor must be monic and divide evenly.
std::vector<long long> exact_poly_division(std::vector<long long> num,
                                           const std::vector<long long>& den) {
    if (den.empty() || den.back() != 1)
        throw std::invalid_argument("divisor must be monic");
    if (num.size() < den.size())
        throw std::invalid_argument("degree of numerator too small");
    std::vector<long long> quot(num.size() - den.size() + 1, 0);
    for (int d = static_cast<int>(quot.size()) - 1; d >= 0; --d) {
        long long c = num[d + den.size() - 1];
        quot[d] = c;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[d + i] = checked_add(num[d + i], -checked_mul(c, den[i]));
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("polynomial division not exact");
    return quot;
}

std::vector<long long> cyclotomic_uncached(int r) {
    std::map<int, std::vector<long long>> table;  // Phi_d for divisors d of r
    for (int d = 1; d <= r; ++d) {
        if (r % d != 0) continue;
        if (d == 1) {
            table[1] = {-1, 1};  // x - 1
            continue;
        }
        std::vector<long long> num(d + 1, 0);  // x^d - 1
        num[0] = -1;
        num[d] = 1;
        for (int e = 1; e < d; ++e)
            if (d % e == 0) num = exact_poly_division(std::move(num), table.at(e));
        table[d] = std::move(num);
    }
    return table.at(r);
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int r) {
    if (r < 1) throw std::invalid_argument("cyclotomic_polynomial: r must be >= 1");
    static std::mutex mu;
    static std::map<int, std::vector<long long>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, cyclotomic_uncached(r)).first;
    return it->second;
}

CycloInt::CycloInt(int r, long long value)
    : r_(r), coeffs_(euler_phi(r), 0) {
    coeffs_[0] = value;
}

CycloInt CycloInt::root_power(int r, long long k) {
    int phi = euler_phi(r);
    long long kk = ((k % r) + r) % r;
    CycloInt out(r, 0);
    if (kk < phi) {
        out.coeffs_[kk] = 1;
        return out;
    }
    // Reduce x^kk modulo Phi_r by repeated use of the monic head relation.
    std::vector<long long> poly(kk + 1, 0);
    poly[kk] = 1;
    auto phi_poly = cyclotomic_polynomial(r);
    for (int d = static_cast<int>(poly.size()) - 1; d >= phi; --d) {
        long long c = poly[d];
        if (c == 0) continue;
        poly[d] = 0;
        for (int i = 0; i < phi; ++i)
            poly[d - phi + i] = checked_add(poly[d - phi + i], -checked_mul(c, phi_poly[i]));
    }
    for (int i = 0; i < phi; ++i) out.coeffs_[i] = poly[i];
    return out;
}

CycloInt CycloInt::from_coeffs(int r, std::vector<long long> coeffs) {
    if (static_cast<int>(coeffs.size()) != euler_phi(r))
        throw std::invalid_argument("coefficient vector must have length phi(r)");
    CycloInt out(r, 0);
    out.coeffs_ = std::move(coeffs);
    return out;
}

bool CycloInt::is_zero() const {
    for (long long c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloInt::is_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

long long CycloInt::integer_value() const {
    if (!is_integer())
        throw std::logic_error("cyclotomic value is not a rational integer: " + to_string());
    return coeffs_[0];
}

void CycloInt::check_same_order(const CycloInt& o) const {
    if (r_ != o.r_)
        throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(r_) +
                                    " vs " + std::to_string(o.r_));
}

CycloInt& CycloInt::operator+=(const CycloInt& o) {
    check_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& o) {
    check_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] = checked_add(coeffs_[i], -o.coeffs_[i]);
    return *this;
}

CycloInt CycloInt::operator-() const {
    CycloInt out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycloInt& CycloInt::operator*=(const CycloInt& o) {
    check_same_order(o);
    int phi = static_cast<int>(coeffs_.size());
    std::vector<long long> prod(2 * phi - 1, 0);
    for (int i = 0; i < phi; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; j < phi; ++j)
            prod[i + j] = checked_add(prod[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
    }
    auto phi_poly = cyclotomic_polynomial(r_);
    for (int d = static_cast<int>(prod.size()) - 1; d >= phi; --d) {
        long long c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < phi; ++i)
            prod[d - phi + i] = checked_add(prod[d - phi + i], -checked_mul(c, phi_poly[i]));
    }
    prod.resize(phi);
    coeffs_ = std::move(prod);
    return *this;
}

CycloInt CycloInt::conjugate() const {
    CycloInt out(r_, 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        CycloInt term = root_power(r_, static_cast<long long>((r_ - 1)) * k);
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
            out.coeffs_[i] = checked_add(out.coeffs_[i],
                                         checked_mul(coeffs_[k], term.coeffs_[i]));
    }
    return out;
}

std::string CycloInt::to_string() const {
    if (is_integer()) return std::to_string(coeffs_[0]);
    std::string s;
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
        long long c = coeffs_[k];
        if (c == 0) continue;
        if (!s.empty()) s += (c > 0) ? "+" : "-";
        else if (c < 0) s += "-";
        long long a = c > 0 ? c : -c;
        if (k == 0) {
            s += std::to_string(a);
        } else {
            if (a != 1) s += std::to_string(a);
            s += "w";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace specht
