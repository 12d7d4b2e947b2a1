#pragma once

#include <map>
#include <vector>

#include "icm/ideal.hpp"

namespace icm {

// All of I0(S) in canonical order (lexicographic by Kunz vector), with an
// index for vector -> position lookups.  Immutable once built.
class IdealFamily {
  public:
    IdealFamily(NumericalSemigroup amb, std::vector<NormalizedIdeal> ideals);

    const NumericalSemigroup& ambient() const { return amb_; }
    std::size_t size() const { return ideals_.size(); }
    const NormalizedIdeal& operator[](std::size_t i) const { return ideals_[i]; }
    std::vector<NormalizedIdeal>::const_iterator begin() const { return ideals_.begin(); }
    std::vector<NormalizedIdeal>::const_iterator end() const { return ideals_.end(); }

    bool contains(const NormalizedIdeal& I) const;

    // position in canonical order; throws Error when the vector is not in the family
    std::size_t index_of(const KunzVector& x) const;
    std::size_t index_of(const NormalizedIdeal& I) const;

  private:
    NumericalSemigroup amb_;
    std::vector<NormalizedIdeal> ideals_;
    std::map<KunzVector, std::size_t> index_;
};

// Backtracking over x_1..x_{m-1} with incremental feasibility bounds,
// partitioned on x_1 across threads.  Canonical order.
IdealFamily enumerate_normalized_ideals(const NumericalSemigroup& S);

// single-threaded reference enumeration, same output
IdealFamily enumerate_normalized_ideals_serial(const NumericalSemigroup& S);

// antichains of the gap poset (G(S), <=_S), empty antichain included;
// throws Error past 63 gaps
long long antichain_count(const NumericalSemigroup& S);

// P0(S): the ideals {0,g}+S for gaps g, deduplicated, canonical order
std::vector<NormalizedIdeal> principal_family(const NumericalSemigroup& S);

} // namespace icm
