#pragma once

#include <string>

#include "icm/irreducible.hpp"

namespace icm {

// One executed claim check: what ran, over which range, and how it ended.
// A failed report carries a witness with enough data to replay the refutation
// through the order module by hand.
struct VerificationReport {
    std::string claim_id;
    std::string parameters;
    bool passed = true;
    long long checked = 0;  // instances examined
    long long skipped = 0;  // out-of-scope instances, counted rather than failed
    std::string witness;    // empty unless passed is false
};

// Removing a minimal generator a > max(m, F) grows the family by exactly the
// ideals missing a; each of those reaches its old self by adding S, one cover
// step up.  Checks all of that by double enumeration.
// Throws PreconditionViolated when a is not such a generator.
VerificationReport verify_unitary_extension(const NumericalSemigroup& S, long long a);

// The ordinary families nest: crossing from multiplicity m+1 down to m is
// governed by the last Kunz coordinate, and adding the smaller ordinary
// semigroup projects onto it.  Checked over all 2^m ideals.
VerificationReport verify_ordinary_extension(long long m);

// When a sum lands on an ideal that still needs a as a generator, the whole
// identity survives deleting a from every term.  Exhaustive over sums in
// I0(S).  Throws PreconditionViolated unless a != m is minimal and a > F(S).
VerificationReport verify_downward_lemma(const NumericalSemigroup& S, long long a);

// (I0(S), preceq) is a lattice exactly for multiplicity at most four; swept
// over every numerical semigroup of genus <= g_max.
VerificationReport verify_lattice_threshold(long long g_max);

// Irreducibility relations, swept over genus <= g_max with multiplicity <= 4
// (larger multiplicities are counted as skipped): +-irr implies join-irr;
// cap-irr implies meet-irr; cup-irr = principal or S; at multiplicity three
// +-irr, join-irr off S, cup-irr off S and principal all coincide, and every
// ideal other than S is +-irreducible or a join of two +-irreducibles.
VerificationReport verify_irreducibility(long long g_max);

} // namespace icm
