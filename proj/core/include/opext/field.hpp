#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace opext {

// Ground-field descriptor: the rationals, or a prime field F_p.
struct Field {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    unsigned long p = 0;  // modulus, meaningful only for PrimeField

    static Field rationals() { return Field{Kind::Rationals, 0}; }
    static Field prime(unsigned long p);

    bool is_rational() const { return kind == Kind::Rationals; }
    bool operator==(const Field&) const = default;

    std::string str() const;
};

// Field scalars are carried uniformly as mpq_class values; over F_p the
// canonical form is an integer in [0, p).
class FieldOps {
public:
    explicit FieldOps(Field f) : f_(f) {}

    const Field& field() const { return f_; }

    mpq_class canon(const mpq_class& x) const;
    mpq_class add(const mpq_class& a, const mpq_class& b) const { return canon(a + b); }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return canon(a - b); }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return canon(a * b); }
    mpq_class neg(const mpq_class& a) const { return canon(-a); }
    mpq_class inv(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

private:
    Field f_;
};

bool is_prime(unsigned long n);

}  // namespace opext
