#pragma once

#include <set>
#include <vector>

// Slow set-based reimplementations used only to cross-check the library.
// Everything here works on explicit member sets truncated at a bound the
// caller picks large enough (past the conductor of whatever is involved).
namespace oracle {

using Set = std::set<long long>;

// members of <gens> in [0, bound]
Set semigroup_members(const std::vector<long long>& gens, long long bound);

// X shifted so min(X) == 0
Set normalize(const Set& X);

// { a + b : a in A, b in B } capped at bound
Set set_add(const Set& A, const Set& B, long long bound);

// Kunz coordinates of X (0 in X, truncated at some bound > max gap + m)
std::vector<long long> kunz_of_set(const Set& X, long long m);

// all normalized ideals of S as member sets in [0, bound]:
// subsets of the gaps glued onto S and closed under adding members
std::vector<Set> all_normalized_ideals(const Set& members, const std::vector<long long>& gaps,
                                       long long frobenius, long long bound);

// semigroups of genus g, counted by brute force over gap subsets of [1, 2g-1]
long long count_semigroups_of_genus(int g);

// antichains of a poset given by its comparability relation, empty set included
long long antichain_count_naive(const std::vector<std::vector<bool>>& comparable);

} // namespace oracle
