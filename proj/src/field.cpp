#include "hopfchw/field.hpp"

namespace hopfchw {

namespace {

Integer mod_positive(const Integer& n, std::uint32_t p) {
    Integer r = n % p;
    if (r < 0) r += p;
    return r;
}

// Extended Euclid; p prime, a not divisible by p.
Integer mod_inverse(const Integer& a, std::uint32_t p) {
    Integer t = 0, new_t = 1;
    Integer r = p, new_r = mod_positive(a, p);
    while (new_r != 0) {
        Integer q = r / new_r;
        Integer tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw FieldError("element has no inverse mod " + std::to_string(p));
    return mod_positive(t, p);
}

}  // namespace

Scalar::Scalar(Rational v, FieldSpec field) : v_(std::move(v)), field_(field) {
    reduce();
}

void Scalar::reduce() {
    if (field_.p == 0) return;
    Integer num = numerator(v_);
    Integer den = denominator(v_);
    Integer den_mod = mod_positive(den, field_.p);
    if (den_mod == 0)
        throw FieldError("denominator vanishes in F_" + std::to_string(field_.p));
    Integer r = mod_positive(num, field_.p) * mod_inverse(den_mod, field_.p);
    v_ = Rational(mod_positive(r, field_.p));
}

FieldSpec Scalar::unify(FieldSpec a, FieldSpec b) {
    if (a.p == b.p) return a;
    if (a.p == 0) return b;
    if (b.p == 0) return a;
    throw FieldError("mixing F_" + std::to_string(a.p) + " with F_" + std::to_string(b.p));
}

Scalar Scalar::parse(const std::string& text, FieldSpec field) {
    try {
        return Scalar(Rational(text), field);
    } catch (const std::exception&) {
        throw FieldError("cannot parse scalar '" + text + "'");
    }
}

Scalar Scalar::operator-() const { return Scalar(-v_, field_); }

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(Rational(v_ + o.v_), unify(field_, o.field_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(Rational(v_ - o.v_), unify(field_, o.field_));
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(Rational(v_ * o.v_), unify(field_, o.field_));
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw FieldError("division by zero");
    FieldSpec f = unify(field_, o.field_);
    if (f.p == 0) return Scalar(Rational(v_ / o.v_), f);
    return *this * o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("zero has no inverse");
    if (field_.p == 0) return Scalar(Rational(1 / v_), field_);
    return Scalar(Rational(mod_inverse(numerator(v_), field_.p)), field_);
}

bool Scalar::operator==(const Scalar& o) const {
    FieldSpec f = unify(field_, o.field_);
    if (f.p == 0) return v_ == o.v_;
    return Scalar(v_, f).v_ == Scalar(o.v_, f).v_;
}

std::string Scalar::str() const { return v_.str(); }

}  // namespace hopfchw
