#pragma once

#include <vector>

#include "icm/semigroup.hpp"

namespace icm {

// A normalized relative ideal of a fixed semigroup S: min(I) = 0, I + S = I.
// Dual representation: Kunz coordinates (x_1,...,x_{m-1}) plus a membership
// mask over [0, C(S)); everything at or past the conductor is a member.
class NormalizedIdeal {
  public:
    // normalized copy of X + S
    static NormalizedIdeal from_generators(const NumericalSemigroup& S, std::vector<long long> X);

    // validates the Kunz inequalities; throws KunzViolation on failure
    static NormalizedIdeal from_kunz(const NumericalSemigroup& S, KunzVector x);

    // S as an ideal of itself
    static NormalizedIdeal whole(const NumericalSemigroup& S);

    // N as an ideal of S (zero vector)
    static NormalizedIdeal full(const NumericalSemigroup& S);

    const NumericalSemigroup& ambient() const { return amb_; }
    const KunzVector& kunz() const { return x_; }

    long long genus() const; // sum of coordinates = |N \ I|
    bool is_full() const;    // I == N

    bool contains(long long n) const {
        if (n < 0) return false;
        long long m = amb_.multiplicity();
        long long r = n % m;
        return n / m >= (r == 0 ? 0 : x_[static_cast<std::size_t>(r - 1)]);
    }

    // w_i = m x_i + i, the least member congruent to i (w_0 = 0)
    long long apery(long long i) const {
        return i == 0 ? 0 : amb_.multiplicity() * x_[static_cast<std::size_t>(i - 1)] + i;
    }

    bool subset_of(const NormalizedIdeal& J) const;

    NormalizedIdeal unite(const NormalizedIdeal& J) const;     // coordinatewise min
    NormalizedIdeal intersect(const NormalizedIdeal& J) const; // coordinatewise max

    // largest non-member; -1 when I = N
    long long frobenius() const;

    // I with its Frobenius number adjoined; throws IsFullIdeal when I = N
    NormalizedIdeal adjoin_frobenius() const;

    // Minimals_{<=_S}(I), ascending, always contains 0
    std::vector<long long> minimal_generators() const;

    std::vector<long long> members_upto(long long bound) const;

    bool operator==(const NormalizedIdeal& o) const { return amb_ == o.amb_ && x_ == o.x_; }
    bool operator!=(const NormalizedIdeal& o) const { return !(*this == o); }
    bool operator<(const NormalizedIdeal& o) const { return x_ < o.x_; } // lex, same ambient

  private:
    NormalizedIdeal(NumericalSemigroup amb, KunzVector x);

    NumericalSemigroup amb_;
    KunzVector x_;
    Bitset members_; // [0, C(S))

    friend NormalizedIdeal add(const NormalizedIdeal&, const NormalizedIdeal&);
};

// throws AmbientMismatch unless both ideals live over the same semigroup
void require_same_ambient(const NormalizedIdeal& a, const NormalizedIdeal& b);

// I + J via the coordinate formula
// z_i = min { x_{i1} + y_{i2} + floor((i1+i2)/m) : i1 + i2 == i (mod m) }
NormalizedIdeal add(const NormalizedIdeal& I, const NormalizedIdeal& J);
inline NormalizedIdeal operator+(const NormalizedIdeal& I, const NormalizedIdeal& J) { return add(I, J); }

// the simplified sum for ordinary ambients: z_i = min { x_{i1} + y_{i2} : i1 + i2 = i };
// throws PreconditionViolated when the ambient is not ordinary
NormalizedIdeal add_ordinary(const NormalizedIdeal& I, const NormalizedIdeal& J);

// (J - I) = { z : z + I subseteq J }; an ideal of S with min >= 0,
// represented as offset + normalized ideal
struct Residual {
    long long offset = 0;
    NormalizedIdeal ideal;
    bool contains(long long z) const { return ideal.contains(z - offset); }
};
Residual residual(const NormalizedIdeal& J, const NormalizedIdeal& I);

// I precedes J iff I + K = J for some K in I0(S); decided via the residual:
// I subseteq J and I + (J - I) = J
bool preceq(const NormalizedIdeal& I, const NormalizedIdeal& J);

} // namespace icm
