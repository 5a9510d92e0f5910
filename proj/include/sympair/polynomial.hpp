#pragma once

#include <climits>
#include <cstdint>
#include <utility>
#include <vector>

#include "sympair/field.hpp"

namespace sympair {

// Univariate polynomial over a shared Field. Coefficients are stored
// c_0..c_deg with the leading coefficient nonzero; the zero polynomial
// stores an empty vector and reports degree kZeroDegree, which behaves
// as -infinity under <= comparisons against real degrees.
class Polynomial {
  public:
    static constexpr int kZeroDegree = INT_MIN;

    explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}

    // Coefficients c_0..c_k; trailing zeros are trimmed.
    Polynomial(FieldPtr field, std::vector<elem_t> coeffs);

    // c * x^k
    static Polynomial monomial(FieldPtr field, elem_t c, int k);

    // lead * (x - r_1) * ... * (x - r_s). Throws ZeroLeading for lead == 0.
    static Polynomial from_roots(FieldPtr field, elem_t lead,
                                 const std::vector<elem_t>& roots);

    const FieldPtr& field() const { return field_; }
    const std::vector<elem_t>& coeffs() const { return coeffs_; }

    int degree() const {
        return coeffs_.empty() ? kZeroDegree : int(coeffs_.size()) - 1;
    }
    bool is_zero() const { return coeffs_.empty(); }

    // c_k, 0 beyond the stored degree.
    elem_t coeff(int k) const {
        return (k >= 0 && std::size_t(k) < coeffs_.size()) ? coeffs_[std::size_t(k)] : 0;
    }

    elem_t eval(elem_t x) const;
    FieldElement eval(const FieldElement& x) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(elem_t c) const;

    // (quotient, remainder) with deg r < deg b. Throws DivisionByZero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& b) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  private:
    void trim();
    static void same_field(const Polynomial& a, const Polynomial& b);

    FieldPtr field_;
    std::vector<elem_t> coeffs_;
};

// Irreducibility over the coefficient field. Degrees 2 and 3 reduce to root
// absence; higher degrees trial-divide by every monic polynomial of degree
// up to deg/2. Throws DegreeTooSmall for degree < 2 (units and linears are
// conventionally excluded from the question).
bool is_irreducible(const Polynomial& f);

// Number of monic irreducible polynomials of degree n over GF(q):
//   (1/n) * sum over d|n of mu(d) * q^(n/d).
BigInt count_monic_irreducible(std::uint64_t q, int n);

}  // namespace sympair
