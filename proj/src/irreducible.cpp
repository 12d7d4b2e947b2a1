#include "icm/irreducible.hpp"

#include "icm/errors.hpp"

namespace icm {

std::optional<OrderKind> order_of(IrreducibleKind k) {
    switch (k) {
        case IrreducibleKind::join:
        case IrreducibleKind::meet: return OrderKind::preceq;
        case IrreducibleKind::cup:
        case IrreducibleKind::cap: return OrderKind::subset;
        default: return std::nullopt;
    }
}

namespace {

// mark c = op(a, b) reducible whenever c is a genuinely new element
template <typename Op>
std::vector<char> scan_marks(std::size_t n, Op&& op) {
    std::vector<char> red(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            std::size_t c = op(a, b);
            if (c != a && c != b) red[c] = 1;
        }
    return red;
}

std::vector<std::size_t> keep_unmarked(const std::vector<char>& red, std::optional<std::size_t> drop) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < red.size(); ++i)
        if (!red[i] && i != drop) out.push_back(i);
    return out;
}

// S = S + S only, so the scan never marks it; drop the identity explicitly
std::vector<std::size_t> scan_plus(const IdealFamily& F) {
    auto red = scan_marks(F.size(), [&](std::size_t a, std::size_t b) { return F.index_of(F[a] + F[b]); });
    return keep_unmarked(red, F.index_of(NormalizedIdeal::whole(F.ambient())));
}

} // namespace

std::vector<std::size_t> irreducible_indices(const OrderStructure& O, IrreducibleKind k) {
    const auto need = order_of(k);
    if (!need) return scan_plus(O.family());
    if (O.kind() != *need) throw PreconditionViolated("order kind does not match the irreducibility kind");
    if (*need == OrderKind::preceq && !is_lattice(O).lattice)
        throw NotALattice("join and meet irreducibles need a lattice");
    const bool lower = k == IrreducibleKind::join || k == IrreducibleKind::cup;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < O.size(); ++i) {
        const auto& cov = lower ? O.lower_covers(i) : O.upper_covers(i);
        if (cov.size() <= 1) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> irreducible_indices_scan(const IdealFamily& F, IrreducibleKind k) {
    const std::size_t n = F.size();
    switch (k) {
        case IrreducibleKind::plus:
            return scan_plus(F);
        case IrreducibleKind::cup:
            return keep_unmarked(
                scan_marks(n, [&](std::size_t a, std::size_t b) { return F.index_of(F[a].unite(F[b])); }),
                std::nullopt);
        case IrreducibleKind::cap:
            return keep_unmarked(
                scan_marks(n, [&](std::size_t a, std::size_t b) { return F.index_of(F[a].intersect(F[b])); }),
                std::nullopt);
        default:
            break;
    }
    OrderStructure O = build_order(F, OrderKind::preceq);
    const bool up = k == IrreducibleKind::join;
    auto red = scan_marks(n, [&](std::size_t a, std::size_t b) {
        auto c = up ? join_index(O, a, b) : meet_index(O, a, b);
        if (!c) throw NotALattice(up ? "pair with no join" : "pair with no meet");
        return *c;
    });
    return keep_unmarked(red, std::nullopt);
}

std::vector<NormalizedIdeal> irreducibles(const IdealFamily& F, IrreducibleKind k) {
    std::vector<std::size_t> idx;
    if (auto need = order_of(k)) idx = irreducible_indices(build_order(F, *need), k);
    else idx = irreducible_indices_scan(F, k);
    std::vector<NormalizedIdeal> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(F[i]);
    return out;
}

} // namespace icm
