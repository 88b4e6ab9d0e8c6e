// Exact field arithmetic: arbitrary-precision rationals and prime fields.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfchw {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Field configuration for a computation: p == 0 selects the rationals,
/// a prime p selects F_p. Fixed when a fixture is loaded.
struct FieldSpec {
    std::uint32_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const FieldSpec&) const = default;
};

/// An exact field element. Values constructed from integer literals are
/// field-agnostic (tagged rational) and adopt the field of the other
/// operand; combining elements of two distinct prime fields throws.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : v_(n) {}
    explicit Scalar(Rational v) : v_(std::move(v)) {}
    Scalar(Rational v, FieldSpec field);

    static Scalar parse(const std::string& text, FieldSpec field = {});

    const Rational& value() const { return v_; }
    FieldSpec field() const { return field_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text form: "n" or "n/d" over Q, the residue over F_p.
    std::string str() const;

private:
    static FieldSpec unify(FieldSpec a, FieldSpec b);
    void reduce();

    Rational v_ = 0;
    FieldSpec field_;
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

}  // namespace hopfchw
