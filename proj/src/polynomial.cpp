#include "sympair/polynomial.hpp"

#include <numeric>

namespace sympair {

Polynomial::Polynomial(FieldPtr field, std::vector<elem_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (elem_t c : coeffs_) field_->check_element(c);
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::same_field(const Polynomial& a, const Polynomial& b) {
    if (a.field_.get() != b.field_.get()) {
        throw FieldMismatch("polynomials over " + a.field_->label() + " and " +
                            b.field_->label() + " cannot be combined");
    }
}

Polynomial Polynomial::monomial(FieldPtr field, elem_t c, int k) {
    if (k < 0) throw Error("monomial: negative exponent");
    std::vector<elem_t> coeffs(std::size_t(k) + 1, 0);
    coeffs.back() = c;
    return Polynomial(std::move(field), std::move(coeffs));
}

Polynomial Polynomial::from_roots(FieldPtr field, elem_t lead,
                                  const std::vector<elem_t>& roots) {
    field->check_element(lead);
    if (lead == 0) throw ZeroLeading("from_roots: leading coefficient must be nonzero");
    const Field& F = *field;
    std::vector<elem_t> c{lead};
    for (elem_t r : roots) {
        F.check_element(r);
        // multiply by (x - r)
        std::vector<elem_t> next(c.size() + 1, 0);
        elem_t nr = F.neg(r);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] = F.add(next[i + 1], c[i]);
            next[i] = F.add(next[i], F.mul(c[i], nr));
        }
        c = std::move(next);
    }
    return Polynomial(std::move(field), std::move(c));
}

elem_t Polynomial::eval(elem_t x) const {
    field_->check_element(x);
    const Field& F = *field_;
    elem_t acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = F.add(F.mul(acc, x), coeffs_[i]);
    }
    return acc;
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    if (x.field().get() != field_.get()) {
        throw FieldMismatch("evaluation point lives in " + x.field()->label() +
                            ", polynomial over " + field_->label());
    }
    return FieldElement(field_, eval(x.value()));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial::same_field(a, b);
    const Field& F = *a.field_;
    std::vector<elem_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = F.add(i < a.coeffs_.size() ? a.coeffs_[i] : elem_t(0),
                     i < b.coeffs_.size() ? b.coeffs_[i] : elem_t(0));
    }
    return Polynomial(a.field_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial::same_field(a, b);
    const Field& F = *a.field_;
    std::vector<elem_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = F.sub(i < a.coeffs_.size() ? a.coeffs_[i] : elem_t(0),
                     i < b.coeffs_.size() ? b.coeffs_[i] : elem_t(0));
    }
    return Polynomial(a.field_, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial::same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    const Field& F = *a.field_;
    std::vector<elem_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] = F.add(c[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return Polynomial(a.field_, std::move(c));
}

Polynomial Polynomial::scaled(elem_t c) const {
    field_->check_element(c);
    if (c == 0) return Polynomial(field_);
    std::vector<elem_t> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
    return Polynomial(field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& b) const {
    same_field(*this, b);
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const Field& F = *field_;
    std::vector<elem_t> r = coeffs_;
    int db = b.degree();
    if (degree() < db) return {Polynomial(field_), *this};
    std::vector<elem_t> q(coeffs_.size() - b.coeffs_.size() + 1, 0);
    elem_t lead_inv = F.inv(b.coeffs_.back());
    for (std::size_t i = r.size(); i-- >= b.coeffs_.size();) {
        if (r[i] == 0) continue;
        elem_t factor = F.mul(r[i], lead_inv);
        std::size_t shift = i - (b.coeffs_.size() - 1);
        q[shift] = factor;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            r[shift + j] = F.sub(r[shift + j], F.mul(factor, b.coeffs_[j]));
        }
    }
    return {Polynomial(field_, std::move(q)), Polynomial(field_, std::move(r))};
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    Polynomial::same_field(a, b);
    return a.coeffs_ == b.coeffs_;
}

bool is_irreducible(const Polynomial& f) {
    int d = f.degree();
    if (d < 2) {
        throw DegreeTooSmall("irreducibility is asked of degree >= 2, got degree " +
                             (f.is_zero() ? std::string("-inf") : std::to_string(d)));
    }
    const Field& F = *f.field();
    // A root gives a linear factor; for degree 2 and 3 that is the only way
    // to be reducible.
    for (elem_t x : F.elements()) {
        if (f.eval(x) == 0) return false;
    }
    if (d <= 3) return true;

    // Trial division by every monic polynomial of degree 2..d/2.
    FieldPtr fp = f.field();
    for (int dd = 2; dd <= d / 2; ++dd) {
        std::vector<elem_t> c(std::size_t(dd) + 1, 0);
        c.back() = 1;
        while (true) {
            Polynomial divisor(fp, c);
            if (f.divmod(divisor).second.is_zero()) return false;
            // odometer over the dd low coefficients
            int pos = 0;
            while (pos < dd) {
                if (c[std::size_t(pos)] + 1u < F.q()) {
                    c[std::size_t(pos)] = elem_t(c[std::size_t(pos)] + 1);
                    break;
                }
                c[std::size_t(pos)] = 0;
                ++pos;
            }
            if (pos == dd) break;
        }
    }
    return true;
}

BigInt count_monic_irreducible(std::uint64_t q, int n) {
    if (q < 2) throw BadParams("count_monic_irreducible: order must be at least 2");
    if (n < 1) throw DegreeTooSmall("count_monic_irreducible: degree must be at least 1");

    auto mobius = [](std::uint64_t m) -> int {
        int mu = 1;
        for (std::uint64_t d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                m /= d;
                if (m % d == 0) return 0;  // square factor
                mu = -mu;
            }
        }
        if (m > 1) mu = -mu;
        return mu;
    };
    auto big_pow = [](std::uint64_t base, std::uint64_t exp) {
        BigInt acc = 1, b = base;
        while (exp) {
            if (exp & 1) acc *= b;
            b *= b;
            exp >>= 1;
        }
        return acc;
    };

    BigInt sum = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = mobius(std::uint64_t(d));
        if (mu == 0) continue;
        BigInt term = big_pow(q, std::uint64_t(n / d));
        sum += mu > 0 ? term : -term;
    }
    return sum / n;
}

}  // namespace sympair
