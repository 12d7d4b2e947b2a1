#pragma once

#include <memory>
#include <vector>

#include "icm/bitset.hpp"
#include "icm/errors.hpp"

namespace icm {

using Coord = long long;
using KunzVector = std::vector<Coord>;

// A numerical semigroup, i.e. a co-finite submonoid of N.  Immutable; cheap
// to copy (shared representation).  Carries minimal generators, Kunz
// coordinates and a membership mask up to 2*conductor + multiplicity, so
// Apery scans of its ideals never leave the mask.
class NumericalSemigroup {
  public:
    // semigroup generated by gens; throws NotCoFinite unless gcd == 1
    static NumericalSemigroup from_generators(const std::vector<long long>& gens);

    // H_m = N \ {1, ..., m-1}
    static NumericalSemigroup ordinary(long long m);

    static NumericalSemigroup naturals() { return ordinary(1); }

    long long multiplicity() const { return d_->m; }
    long long frobenius() const { return d_->frob; } // -1 for N
    long long conductor() const { return d_->frob + 1; }
    long long genus() const { return static_cast<long long>(d_->gaps.size()); }
    const std::vector<long long>& gaps() const { return d_->gaps; }
    const std::vector<long long>& minimal_generators() const { return d_->min_gens; }
    const KunzVector& kunz() const { return d_->kunz; } // length m-1
    bool is_ordinary() const { return conductor() <= multiplicity(); }

    bool contains(long long n) const {
        if (n < 0) return false;
        if (n >= conductor()) return true;
        return d_->small.test(static_cast<std::size_t>(n));
    }

    // a <=_S b  iff  b - a in S
    bool leq_S(long long a, long long b) const { return contains(b - a); }

    bool is_minimal_generator(long long a) const;

    // S \ {a}; throws NotMinimalGenerator unless a is a minimal generator
    NumericalSemigroup remove_generator(long long a) const;

    // structural equality (same member set)
    bool operator==(const NumericalSemigroup& o) const {
        return d_ == o.d_ || (d_->m == o.d_->m && d_->kunz == o.d_->kunz);
    }
    bool operator!=(const NumericalSemigroup& o) const { return !(*this == o); }

    // membership mask bound; contains() is mask-free beyond conductor anyway
    long long mask_bound() const { return static_cast<long long>(d_->small.size()); }

  private:
    struct Data {
        long long m = 1;
        long long frob = -1;
        std::vector<long long> gaps;
        std::vector<long long> min_gens;
        KunzVector kunz;
        Bitset small;
    };

    static NumericalSemigroup from_gaps(std::vector<long long> gaps);
    std::shared_ptr<const Data> d_;

    friend std::vector<NumericalSemigroup> enumerate_by_genus(long long g_max);
};

// All numerical semigroups of genus <= g_max, each once.  Depth-first over
// the tree whose children are S \ {a} for minimal generators a > F(S),
// children by increasing removed generator.
std::vector<NumericalSemigroup> enumerate_by_genus(long long g_max);

} // namespace icm
