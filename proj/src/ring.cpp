#include "ainf/ring.hpp"

#include "ainf/errors.hpp"

namespace ainf {

Ring Ring::prime_field(long p) {
    bool prime = p >= 2;
    for (long d = 2; prime && d * d <= p; ++d)
        if (p % d == 0) prime = false;
    if (!prime) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    Ring r;
    r.kind_ = Kind::PrimeField;
    r.p_ = p;
    r.pz_ = p;
    return r;
}

void Ring::reduce(Scalar& x) const {
    if (kind_ == Kind::PrimeField) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), pz_.get_mpz_t());
}

bool Ring::is_unit(const Scalar& x) const {
    if (kind_ == Kind::PrimeField) return reduced(x) != 0;
    return x == 1 || x == -1;
}

Scalar Ring::inverse(const Scalar& x) const {
    if (kind_ == Kind::Integers) return x;  // only called on units
    Scalar r;
    mpz_invert(r.get_mpz_t(), reduced(x).get_mpz_t(), pz_.get_mpz_t());
    return r;
}

Scalar Ring::quotient(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::PrimeField) return reduced(a * inverse(b));
    Scalar q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::string Ring::describe() const {
    return kind_ == Kind::Integers ? "Z" : "Z/" + std::to_string(p_);
}

}  // namespace ainf
