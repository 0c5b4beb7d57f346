#pragma once

#include <gmpxx.h>

#include <string>

namespace ainf {

using Scalar = mpz_class;

// Z or Z/p.  Elements of Z/p are kept in [0, p).
class Ring {
public:
    enum class Kind { Integers, PrimeField };

    Ring() = default;
    static Ring integers() { return Ring(); }
    static Ring prime_field(long p);

    Kind kind() const { return kind_; }
    bool is_field() const { return kind_ == Kind::PrimeField; }
    long characteristic() const { return p_; }

    void reduce(Scalar& x) const;
    Scalar reduced(Scalar x) const {
        reduce(x);
        return x;
    }
    bool is_unit(const Scalar& x) const;
    Scalar inverse(const Scalar& x) const;
    // Euclidean step: a = q*b + r with |r| < |b| over Z, r = 0 over a field.
    Scalar quotient(const Scalar& a, const Scalar& b) const;

    std::string describe() const;
    bool operator==(const Ring& o) const { return kind_ == o.kind_ && p_ == o.p_; }

private:
    Kind kind_ = Kind::Integers;
    long p_ = 0;
    Scalar pz_;
};

inline bool odd(long e) { return (e % 2) != 0; }
inline int sign_of(long e) { return odd(e) ? -1 : 1; }

}  // namespace ainf
