#include "opext/field.hpp"

namespace opext {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("field modulus must be prime, got " + std::to_string(p));
    return Field{Kind::PrimeField, p};
}

std::string Field::str() const {
    return is_rational() ? "Q" : "F" + std::to_string(p);
}

mpq_class FieldOps::canon(const mpq_class& x) const {
    mpq_class y = x;
    y.canonicalize();
    if (f_.is_rational()) return y;
    // F_p: the denominator is invertible mod p; reduce to [0, p).
    mpz_class p(static_cast<unsigned long>(f_.p));
    mpz_class den = y.get_den();
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("denominator not invertible mod p");
    mpz_class r = (y.get_num() % p) * dinv % p;
    if (r < 0) r += p;
    return mpq_class(r);
}

mpq_class FieldOps::inv(const mpq_class& a) const {
    mpq_class c = canon(a);
    if (c == 0) throw std::domain_error("division by zero");
    if (f_.is_rational()) return 1 / c;
    mpz_class p(static_cast<unsigned long>(f_.p));
    mpz_class r;
    mpz_class num = c.get_num();
    mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    if (r < 0) r += p;
    return mpq_class(r);
}

}  // namespace opext
