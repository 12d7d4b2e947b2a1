#include "icm/order.hpp"

#include <algorithm>
#include <set>

namespace icm {

std::size_t OrderStructure::cover_edge_count() const {
    std::size_t c = 0;
    for (const auto& v : upper_) c += v.size();
    return c;
}

std::size_t OrderStructure::bottom() const { return fam_.index_of(fam_.ambient().kunz()); }

std::size_t OrderStructure::top() const { return fam_.index_of(KunzVector(fam_.ambient().kunz().size(), 0)); }

OrderStructure build_order_impl(IdealFamily F, OrderKind kind, bool parallel) {
    OrderStructure O(std::move(F), kind);
    const IdealFamily& fam = O.fam_;
    std::size_t n = fam.size();
    auto row = [&](std::size_t i) {
        Bitset r(n);
        for (std::size_t j = 0; j < n; ++j) {
            bool le;
            if (kind == OrderKind::subset)
                le = fam[i].subset_of(fam[j]);
            else
                le = preceq(fam[i], fam[j]);
            if (le) r.set(j);
        }
        return r;
    };
    O.up_.assign(n, Bitset{});
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) O.up_[static_cast<std::size_t>(i)] = row(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) O.up_[i] = row(i);
    }

    O.down_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = O.up_[i].next(0); j < n; j = O.up_[i].next(j + 1)) O.down_[j].set(i);

    // strict copies for the reduction
    std::vector<Bitset> up_strict(O.up_), down_strict(O.down_);
    for (std::size_t i = 0; i < n; ++i) {
        up_strict[i].reset(i);
        down_strict[i].reset(i);
    }

    O.upper_.assign(n, {});
    O.lower_.assign(n, {});
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
            std::size_t i = static_cast<std::size_t>(ii);
            for (std::size_t j = up_strict[i].next(0); j < n; j = up_strict[i].next(j + 1))
                if (!up_strict[i].any_and(down_strict[j])) O.upper_[i].push_back(j);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = up_strict[i].next(0); j < n; j = up_strict[i].next(j + 1))
                if (!up_strict[i].any_and(down_strict[j])) O.upper_[i].push_back(j);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : O.upper_[i]) O.lower_[j].push_back(i);
    return O;
}

OrderStructure build_order(IdealFamily F, OrderKind kind) { return build_order_impl(std::move(F), kind, true); }

OrderStructure build_order_serial(IdealFamily F, OrderKind kind) {
    return build_order_impl(std::move(F), kind, false);
}

std::vector<std::size_t> minimal_bound_indices(const OrderStructure& O, std::size_t a, std::size_t b,
                                               BoundDirection dir) {
    std::size_t n = O.size();
    bool up = dir == BoundDirection::upper;
    Bitset bounds = up ? (O.up_set(a) & O.up_set(b)) : (O.down_set(a) & O.down_set(b));
    std::vector<std::size_t> out;
    for (std::size_t j = bounds.next(0); j < n; j = bounds.next(j + 1)) {
        // minimal (resp. maximal) within the bound set
        Bitset others = up ? (bounds & O.down_set(j)) : (bounds & O.up_set(j));
        others.reset(j);
        if (others.next(0) >= n) out.push_back(j);
    }
    return out;
}

std::vector<NormalizedIdeal> minimal_bounds(const OrderStructure& O, const NormalizedIdeal& I,
                                            const NormalizedIdeal& J, BoundDirection dir) {
    auto idx = minimal_bound_indices(O, O.family().index_of(I), O.family().index_of(J), dir);
    std::vector<NormalizedIdeal> out;
    for (std::size_t i : idx) out.push_back(O.family()[i]);
    return out;
}

std::optional<std::size_t> join_index(const OrderStructure& O, std::size_t a, std::size_t b) {
    auto m = minimal_bound_indices(O, a, b, BoundDirection::upper);
    if (m.size() == 1) return m[0];
    return std::nullopt;
}

std::optional<std::size_t> meet_index(const OrderStructure& O, std::size_t a, std::size_t b) {
    auto m = minimal_bound_indices(O, a, b, BoundDirection::lower);
    if (m.size() == 1) return m[0];
    return std::nullopt;
}

std::optional<NormalizedIdeal> join(const OrderStructure& O, const NormalizedIdeal& I, const NormalizedIdeal& J) {
    auto r = join_index(O, O.family().index_of(I), O.family().index_of(J));
    if (r) return O.family()[*r];
    return std::nullopt;
}

std::optional<NormalizedIdeal> meet(const OrderStructure& O, const NormalizedIdeal& I, const NormalizedIdeal& J) {
    auto r = meet_index(O, O.family().index_of(I), O.family().index_of(J));
    if (r) return O.family()[*r];
    return std::nullopt;
}

LatticeResult is_lattice(const OrderStructure& O) {
    std::size_t n = O.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            auto ub = minimal_bound_indices(O, a, b, BoundDirection::upper);
            if (ub.size() != 1) return {false, LatticeWitness{a, b, true, std::move(ub)}};
            auto lb = minimal_bound_indices(O, a, b, BoundDirection::lower);
            if (lb.size() != 1) return {false, LatticeWitness{a, b, false, std::move(lb)}};
        }
    return {true, std::nullopt};
}

SublatticeKind classify_sublattice(const OrderStructure& O, const std::vector<std::size_t>& elems) {
    if (elems.size() != 5) return SublatticeKind::none;
    std::set<std::size_t> s(elems.begin(), elems.end());
    if (s.size() != 5) return SublatticeKind::none;
    for (std::size_t a : s)
        for (std::size_t b : s) {
            auto j = join_index(O, a, b);
            auto m = meet_index(O, a, b);
            if (!j || !m || !s.count(*j) || !s.count(*m)) return SublatticeKind::none;
        }
    std::size_t bot = 0, top = 0;
    bool have_bot = false, have_top = false;
    for (std::size_t e : s) {
        if (std::all_of(s.begin(), s.end(), [&](std::size_t f) { return O.leq(e, f); })) {
            bot = e;
            have_bot = true;
        }
        if (std::all_of(s.begin(), s.end(), [&](std::size_t f) { return O.leq(f, e); })) {
            top = e;
            have_top = true;
        }
    }
    if (!have_bot || !have_top) return SublatticeKind::none;
    std::vector<std::size_t> mid;
    for (std::size_t e : s)
        if (e != bot && e != top) mid.push_back(e);
    if (mid.size() != 3) return SublatticeKind::none;
    int comparable = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (O.leq(mid[i], mid[j]) || O.leq(mid[j], mid[i])) ++comparable;
    if (comparable == 1) return SublatticeKind::pentagon;
    if (comparable == 0) return SublatticeKind::diamond;
    return SublatticeKind::none;
}

namespace {

// join/meet closure of a seed set; empty result signals a blow-up past cap
std::vector<std::size_t> closure(const OrderStructure& O, std::vector<std::size_t> seed, std::size_t cap) {
    std::set<std::size_t> s(seed.begin(), seed.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::size_t> cur(s.begin(), s.end());
        for (std::size_t a : cur)
            for (std::size_t b : cur) {
                for (auto r : {join_index(O, a, b), meet_index(O, a, b)})
                    if (r && s.insert(*r).second) grew = true;
                if (s.size() > cap) return {};
            }
    }
    return std::vector<std::size_t>(s.begin(), s.end());
}

} // namespace

DistributivityResult is_distributive(const OrderStructure& O) {
    auto lat = is_lattice(O);
    if (!lat.lattice) throw NotALattice("order is not a lattice");
    std::size_t n = O.size();
    std::vector<std::vector<std::size_t>> J(n, std::vector<std::size_t>(n)), M(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            J[a][b] = *join_index(O, a, b);
            M[a][b] = *meet_index(O, a, b);
        }
    DistributivityResult res;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (M[x][J[y][z]] == J[M[x][y]][M[x][z]]) continue;
                if (res.distributive) {
                    res.distributive = false;
                    res.failing_triple = {x, y, z};
                }
                // hunt a 5-element witness inside this triple's sublattice
                auto cl = closure(O, {x, y, z}, 32);
                std::vector<std::size_t> pick(5);
                std::vector<bool> sel(cl.size(), false);
                std::fill(sel.end() - std::min<std::size_t>(5, sel.size()), sel.end(), true);
                if (cl.size() >= 5) {
                    std::sort(sel.begin(), sel.end());
                    do {
                        std::size_t t = 0;
                        for (std::size_t i = 0; i < cl.size(); ++i)
                            if (sel[i]) pick[t++] = cl[i];
                        auto kind = classify_sublattice(O, pick);
                        if (kind != SublatticeKind::none) {
                            res.found = kind;
                            res.sublattice = pick;
                            return res;
                        }
                    } while (std::next_permutation(sel.begin(), sel.end()));
                }
            }
    return res;
}

std::string to_dot(const OrderStructure& O) {
    std::string out = "digraph ideals {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < O.size(); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"(";
        const auto& x = O.family()[i].kunz();
        for (std::size_t t = 0; t < x.size(); ++t) {
            if (t) out += ",";
            out += std::to_string(x[t]);
        }
        out += ")\"];\n";
    }
    for (std::size_t i = 0; i < O.size(); ++i)
        for (std::size_t j : O.upper_covers(i))
            out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

} // namespace icm
