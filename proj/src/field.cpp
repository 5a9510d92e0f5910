#include "sympair/field.hpp"

#include <algorithm>

#include "sympair/polynomial.hpp"

namespace sympair {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<elem_t> digits_of(std::uint32_t v, std::uint32_t p, std::uint32_t e) {
    std::vector<elem_t> d(e);
    for (std::uint32_t i = 0; i < e; ++i) {
        d[i] = elem_t(v % p);
        v /= p;
    }
    return d;
}

std::uint32_t digits_to_value(const std::vector<elem_t>& d, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

}  // namespace

elem_t Field::add_digitwise(elem_t a, elem_t b) const {
    std::uint32_t v = 0, scale = 1;
    std::uint32_t ua = a, ub = b;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t da = ua % p_, db = ub % p_;
        ua /= p_;
        ub /= p_;
        std::uint32_t s = da + db;
        if (s >= p_) s -= p_;
        v += s * scale;
        scale *= p_;
    }
    return elem_t(v);
}

elem_t Field::neg_digitwise(elem_t a) const {
    std::uint32_t v = 0, scale = 1;
    std::uint32_t ua = a;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t da = ua % p_;
        ua /= p_;
        v += (da == 0 ? 0 : p_ - da) * scale;
        scale *= p_;
    }
    return elem_t(v);
}

void Field::build_tables() {
    // Raw multiplication (no tables yet): residues for e = 1, polynomial
    // product reduced by the monic modulus otherwise.
    auto mul_raw = [this](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        if (e_ == 1) return (a * b) % p_;
        std::vector<elem_t> da = digits_of(a, p_, e_), db = digits_of(b, p_, e_);
        std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
        for (std::uint32_t i = 0; i < e_; ++i) {
            for (std::uint32_t j = 0; j < e_; ++j) {
                prod[i + j] = (prod[i + j] + std::uint32_t(da[i]) * db[j]) % p_;
            }
        }
        for (std::size_t i = prod.size(); i-- > e_;) {
            std::uint32_t c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (std::uint32_t j = 0; j < e_; ++j) {
                std::uint32_t sub = (c * modulus_[j]) % p_;
                prod[i - e_ + j] = (prod[i - e_ + j] + p_ - sub) % p_;
            }
        }
        std::vector<elem_t> low(prod.begin(), prod.begin() + e_);
        return digits_to_value(low, p_);
    };
    auto pow_raw = [&](std::uint32_t a, std::uint32_t n) -> std::uint32_t {
        std::uint32_t acc = 1;
        while (n) {
            if (n & 1) acc = mul_raw(acc, a);
            a = mul_raw(a, a);
            n >>= 1;
        }
        return acc;
    };

    std::uint32_t g = 1;
    if (q_ > 2) {
        auto rs = prime_factors(q_ - 1);
        for (std::uint32_t cand = 2; cand < q_; ++cand) {
            bool ok = true;
            for (std::uint32_t r : rs) {
                if (pow_raw(cand, (q_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                g = cand;
                break;
            }
        }
    }

    log_.assign(q_, 0);
    exp_.assign(2 * (q_ - 1), 0);
    std::uint32_t acc = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = elem_t(acc);
        exp_[i + (q_ - 1)] = elem_t(acc);
        log_[acc] = std::uint16_t(i);
        acc = mul_raw(acc, g);
    }

    elements_.resize(q_);
    for (std::uint32_t v = 0; v < q_; ++v) elements_[v] = elem_t(v);
}

FieldPtr field_new(std::uint32_t p, std::uint32_t e, std::uint32_t ceiling) {
    if (!is_prime(p)) {
        throw NotPrime("field characteristic " + std::to_string(p) + " is not prime");
    }
    if (e < 1) throw Error("field: extension degree must be at least 1");

    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (q > ceiling / p) {
            throw TooLarge("field order " + std::to_string(p) + "^" + std::to_string(e) +
                           " exceeds the table ceiling " + std::to_string(ceiling));
        }
        q *= p;
    }
    if (q > ceiling) {
        throw TooLarge("field order exceeds the table ceiling " + std::to_string(ceiling));
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->e_ = e;
    f->q_ = q;
    f->label_ = e == 1 ? "GF(" + std::to_string(p) + ")"
                       : "GF(" + std::to_string(p) + "^" + std::to_string(e) + ")";

    if (e > 1) {
        // Smallest monic irreducible of degree e over GF(p), candidates
        // ordered lexicographically with the constant coefficient compared
        // first: x^2+x+1 for GF(4), x^2+1 for GF(9), and so on.
        FieldPtr base = field_new(p, 1, ceiling);
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < e; ++i) total *= p;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<elem_t> c(e + 1);
            std::uint64_t rest = idx;
            for (std::size_t i = e; i-- > 0;) {  // c_0 varies slowest
                c[i] = elem_t(rest % p);
                rest /= p;
            }
            c[e] = 1;
            Polynomial cand(base, c);
            if (is_irreducible(cand)) {
                f->modulus_ = c;
                break;
            }
        }
    }

    f->build_tables();
    return f;
}

FieldPtr field_from_order(std::uint32_t q, std::uint32_t ceiling) {
    if (q < 2) throw NotPrimePower("field order must be at least 2");
    std::uint32_t p = q;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t e = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) {
        throw NotPrimePower(std::to_string(q) + " is not a prime power");
    }
    return field_new(p, e, ceiling);
}

}  // namespace sympair
