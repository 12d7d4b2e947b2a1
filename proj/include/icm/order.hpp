#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "icm/family.hpp"

namespace icm {

enum class OrderKind { preceq, subset };
enum class BoundDirection { upper, lower };

// A partial order on a family: full relation as bit rows plus the
// transitive reduction.  Index space is the family's canonical order.
class OrderStructure {
  public:
    const IdealFamily& family() const { return fam_; }
    OrderKind kind() const { return kind_; }
    std::size_t size() const { return fam_.size(); }

    bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
    const Bitset& up_set(std::size_t i) const { return up_[i]; }     // {j : i <= j}
    const Bitset& down_set(std::size_t i) const { return down_[i]; } // {j : j <= i}

    // transitive reduction, both directions, ascending indices
    const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_[i]; }
    const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_[i]; }
    std::size_t cover_edge_count() const;

    std::size_t bottom() const; // index of S
    std::size_t top() const;    // index of N

  private:
    OrderStructure(IdealFamily fam, OrderKind kind) : fam_(std::move(fam)), kind_(kind) {}

    IdealFamily fam_;
    OrderKind kind_;
    std::vector<Bitset> up_, down_;             // full relation, reflexive
    std::vector<std::vector<std::size_t>> lower_, upper_;

    friend OrderStructure build_order_impl(IdealFamily, OrderKind, bool);
};

// relation + reduction; row construction parallelized
OrderStructure build_order(IdealFamily F, OrderKind kind);
// single-threaded reference, same output
OrderStructure build_order_serial(IdealFamily F, OrderKind kind);

// minimal common upper bounds (or maximal common lower bounds), ascending
std::vector<std::size_t> minimal_bound_indices(const OrderStructure& O, std::size_t a, std::size_t b,
                                               BoundDirection dir);
std::vector<NormalizedIdeal> minimal_bounds(const OrderStructure& O, const NormalizedIdeal& I,
                                            const NormalizedIdeal& J, BoundDirection dir);

// unique minimal upper / maximal lower bound; absent when not unique
std::optional<std::size_t> join_index(const OrderStructure& O, std::size_t a, std::size_t b);
std::optional<std::size_t> meet_index(const OrderStructure& O, std::size_t a, std::size_t b);
std::optional<NormalizedIdeal> join(const OrderStructure& O, const NormalizedIdeal& I, const NormalizedIdeal& J);
std::optional<NormalizedIdeal> meet(const OrderStructure& O, const NormalizedIdeal& I, const NormalizedIdeal& J);

struct LatticeWitness {
    std::size_t a = 0, b = 0;         // lexicographically first failing pair
    bool upper = true;                // true: no join; false: no meet
    std::vector<std::size_t> bounds;  // the offending minimal-bound antichain
};
struct LatticeResult {
    bool lattice = true;
    std::optional<LatticeWitness> witness;
};
LatticeResult is_lattice(const OrderStructure& O);

enum class SublatticeKind { none, pentagon, diamond };

// 5 distinct elements closed under join/meet: N5 or M3 by shape, else none
SublatticeKind classify_sublattice(const OrderStructure& O, const std::vector<std::size_t>& elems);

struct DistributivityResult {
    bool distributive = true;
    std::optional<std::array<std::size_t, 3>> failing_triple; // first (x,y,z) with x^(yvz) != (x^y)v(x^z)
    SublatticeKind found = SublatticeKind::none;
    std::vector<std::size_t> sublattice; // the 5 witnesses when found != none
};
// throws NotALattice
DistributivityResult is_distributive(const OrderStructure& O);

// Graphviz digraph of the reduction, edges covered -> covering, rankdir BT
std::string to_dot(const OrderStructure& O);

} // namespace icm
