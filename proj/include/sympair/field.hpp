#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sympair/errors.hpp"

namespace sympair {

// Field elements travel as plain integers in 0..q-1. For a prime field this
// is the residue itself; for GF(p^e) it is the base-p digit string of the
// coefficient vector, least significant digit = constant coefficient.
using elem_t = std::uint16_t;

using BigInt = boost::multiprecision::cpp_int;

// GF(p^e) with multiplication through log/antilog tables and addition done
// digitwise mod p (plain XOR when p = 2, plain modular add when e = 1).
// Instances are immutable; share them via FieldPtr.
class Field {
  public:
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }

    // Monic irreducible modulus as coefficients c_0..c_e (c_e = 1).
    // Empty for prime fields, which need no modulus.
    const std::vector<elem_t>& modulus() const { return modulus_; }

    // All q elements, 0, 1, 2, ... in canonical integer encoding.
    const std::vector<elem_t>& elements() const { return elements_; }

    // "GF(7)", "GF(2^3)", ...
    const std::string& label() const { return label_; }

    elem_t add(elem_t a, elem_t b) const {
        if (e_ == 1) {
            std::uint32_t s = std::uint32_t(a) + b;
            if (s >= q_) s -= q_;
            return elem_t(s);
        }
        if (p_ == 2) return elem_t(a ^ b);
        return add_digitwise(a, b);
    }

    elem_t neg(elem_t a) const {
        if (e_ == 1) return a == 0 ? 0 : elem_t(q_ - a);
        if (p_ == 2) return a;
        return neg_digitwise(a);
    }

    elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

    elem_t mul(elem_t a, elem_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[std::uint32_t(log_[a]) + log_[b]];
    }

    elem_t inv(elem_t a) const {
        if (a == 0) throw DivisionByZero(label_ + ": inverse of 0");
        return exp_[(q_ - 1) - log_[a]];
    }

    elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }

    // a^n for n >= 0 (0^0 = 1).
    elem_t pow(elem_t a, std::uint64_t n) const {
        if (n == 0) return 1;
        if (a == 0) return 0;
        std::uint64_t ln = (std::uint64_t(log_[a]) * (n % (q_ - 1))) % (q_ - 1);
        return exp_[ln];
    }

    void check_element(elem_t a) const {
        if (a >= q_) {
            throw FieldMismatch(label_ + ": value " + std::to_string(a) +
                                " is not an element (need 0.." +
                                std::to_string(q_ - 1) + ")");
        }
    }

  private:
    Field() = default;
    friend std::shared_ptr<const Field> field_new(std::uint32_t p, std::uint32_t e,
                                                  std::uint32_t ceiling);

    elem_t add_digitwise(elem_t a, elem_t b) const;
    elem_t neg_digitwise(elem_t a) const;
    void build_tables();

    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint32_t q_ = 0;
    std::vector<elem_t> modulus_;   // c_0..c_e, empty when e == 1
    std::vector<elem_t> elements_;
    std::string label_;
    // log_[a] = n with g^n = a (a != 0); exp_ holds g^0..g^{2(q-1)-1} so that
    // mul can index log_[a]+log_[b] without a reduction.
    std::vector<std::uint16_t> log_;
    std::vector<elem_t> exp_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Build GF(p^e). Throws NotPrime for composite p, TooLarge when p^e exceeds
// `ceiling` (tables are O(q)). For e > 1 the modulus is the lexicographically
// smallest monic irreducible of degree e, comparing constant term first.
FieldPtr field_new(std::uint32_t p, std::uint32_t e, std::uint32_t ceiling = 65536);

// Build GF(q) from the order alone; throws NotPrimePower when q has more
// than one prime factor.
FieldPtr field_from_order(std::uint32_t q, std::uint32_t ceiling = 65536);

// A field element that knows its field: checked arithmetic for code that
// favors safety over the raw elem_t fast path.
class FieldElement {
  public:
    FieldElement(FieldPtr field, elem_t value) : field_(std::move(field)), v_(value) {
        field_->check_element(v_);
    }

    elem_t value() const { return v_; }
    const FieldPtr& field() const { return field_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.same_field(b);
        return FieldElement(a.field_, a.field_->add(a.v_, b.v_));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.same_field(b);
        return FieldElement(a.field_, a.field_->sub(a.v_, b.v_));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.same_field(b);
        return FieldElement(a.field_, a.field_->mul(a.v_, b.v_));
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        a.same_field(b);
        return FieldElement(a.field_, a.field_->div(a.v_, b.v_));
    }
    FieldElement operator-() const { return FieldElement(field_, field_->neg(v_)); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.same_field(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) {
        return !(a == b);
    }

  private:
    void same_field(const FieldElement& other) const {
        if (field_.get() != other.field_.get()) {
            throw FieldMismatch("elements of " + field_->label() + " and " +
                                other.field_->label() + " cannot be combined");
        }
    }

    FieldPtr field_;
    elem_t v_;
};

}  // namespace sympair
