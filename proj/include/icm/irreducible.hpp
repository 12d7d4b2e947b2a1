#pragma once

#include <optional>
#include <vector>

#include "icm/order.hpp"

namespace icm {

// The five operations an element of I0(S) can be irreducible for.  cup and
// cap are union and intersection, the lattice operations of (I0(S), subseteq);
// join and meet belong to (I0(S), preceq).
enum class IrreducibleKind { plus, join, meet, cup, cap };

// order carrying the cover characterization; nothing for plus
std::optional<OrderKind> order_of(IrreducibleKind k);

// Cover-count path: join-irreducible iff at most one lower cover, dually for
// meet.  O.kind() has to match order_of(k) (PreconditionViolated otherwise),
// and join/meet demand that the preceq order is a lattice (NotALattice).
// plus has no order; it falls back to the pair scan.  Ascending indices.
std::vector<std::size_t> irreducible_indices(const OrderStructure& O, IrreducibleKind k);

// Definition-level scan: combine every pair, mark results distinct from both
// operands as reducible, keep the rest.  For plus the monoid identity S is
// dropped from the result.  join/meet build the preceq order internally and
// throw NotALattice when some pair has no join or meet.
std::vector<std::size_t> irreducible_indices_scan(const IdealFamily& F, IrreducibleKind k);

// cover path on a freshly built order (scan for plus), as ideals
std::vector<NormalizedIdeal> irreducibles(const IdealFamily& F, IrreducibleKind k);

} // namespace icm
