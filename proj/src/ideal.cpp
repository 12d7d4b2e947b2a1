#include "icm/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace icm {

namespace {

// returns {i, j} of the first violated inequality, {0,0} if none;
// j == -1 encodes the box bound
struct Violation {
    bool ok;
    int i;
    int j;
};

Violation check_kunz(const NumericalSemigroup& S, const KunzVector& x) {
    long long m = S.multiplicity();
    const KunzVector& k = S.kunz();
    for (long long i = 1; i < m; ++i) {
        if (x[static_cast<std::size_t>(i - 1)] < 0 || x[static_cast<std::size_t>(i - 1)] > k[static_cast<std::size_t>(i - 1)])
            return {false, static_cast<int>(i), -1};
    }
    for (long long i = 1; i < m; ++i)
        for (long long j = 1; j < m; ++j) {
            long long t = (i + j) % m;
            if (t == 0) continue;
            long long lhs = x[static_cast<std::size_t>(i - 1)] + k[static_cast<std::size_t>(j - 1)] + (i + j) / m;
            if (lhs < x[static_cast<std::size_t>(t - 1)]) return {false, static_cast<int>(i), static_cast<int>(j)};
        }
    return {true, 0, 0};
}

} // namespace

NormalizedIdeal::NormalizedIdeal(NumericalSemigroup amb, KunzVector x)
    : amb_(std::move(amb)), x_(std::move(x)), members_(static_cast<std::size_t>(amb_.conductor())) {
    long long m = amb_.multiplicity();
    for (long long n = 0; n < amb_.conductor(); ++n) {
        long long r = n % m;
        if (n / m >= (r == 0 ? 0 : x_[static_cast<std::size_t>(r - 1)])) members_.set(static_cast<std::size_t>(n));
    }
}

NormalizedIdeal NormalizedIdeal::from_kunz(const NumericalSemigroup& S, KunzVector x) {
    if (static_cast<long long>(x.size()) != S.multiplicity() - 1)
        throw KunzViolation("kunz vector has length " + std::to_string(x.size()) + ", expected " +
                                std::to_string(S.multiplicity() - 1),
                            -1, -1);
    Violation v = check_kunz(S, x);
    if (!v.ok) {
        std::string msg = v.j < 0 ? "coordinate x_" + std::to_string(v.i) + " outside [0, k_" + std::to_string(v.i) + "]"
                                  : "inequality x_" + std::to_string(v.i) + " + k_" + std::to_string(v.j) +
                                        " + carry >= x_(i+j) violated";
        throw KunzViolation(std::move(msg), v.i, v.j);
    }
    return NormalizedIdeal(S, std::move(x));
}

NormalizedIdeal NormalizedIdeal::whole(const NumericalSemigroup& S) { return NormalizedIdeal(S, S.kunz()); }

NormalizedIdeal NormalizedIdeal::full(const NumericalSemigroup& S) {
    return NormalizedIdeal(S, KunzVector(static_cast<std::size_t>(S.multiplicity() - 1), 0));
}

NormalizedIdeal NormalizedIdeal::from_generators(const NumericalSemigroup& S, std::vector<long long> X) {
    if (X.empty()) throw Error("ideal generator set is empty");
    long long lo = *std::min_element(X.begin(), X.end());
    long long m = S.multiplicity();
    const KunzVector& k = S.kunz();
    // w_i(X + S) = min over x in X of x + w_{(i - x) mod m}(S)
    KunzVector z(static_cast<std::size_t>(m - 1));
    for (long long i = 1; i < m; ++i) {
        long long best = -1;
        for (long long x : X) {
            long long xs = x - lo;
            long long r = ((i - xs) % m + m) % m;
            long long w = xs + (r == 0 ? 0 : m * k[static_cast<std::size_t>(r - 1)] + r);
            if (best < 0 || w < best) best = w;
        }
        z[static_cast<std::size_t>(i - 1)] = (best - i) / m;
    }
#ifndef NDEBUG
    assert(check_kunz(S, z).ok);
#endif
    return NormalizedIdeal(S, std::move(z));
}

long long NormalizedIdeal::genus() const {
    long long g = 0;
    for (Coord c : x_) g += c;
    return g;
}

bool NormalizedIdeal::is_full() const {
    for (Coord c : x_)
        if (c != 0) return false;
    return true;
}

bool NormalizedIdeal::subset_of(const NormalizedIdeal& J) const {
    require_same_ambient(*this, J);
    for (std::size_t i = 0; i < x_.size(); ++i)
        if (J.x_[i] > x_[i]) return false;
    return true;
}

NormalizedIdeal NormalizedIdeal::unite(const NormalizedIdeal& J) const {
    require_same_ambient(*this, J);
    KunzVector z(x_.size());
    for (std::size_t i = 0; i < x_.size(); ++i) z[i] = std::min(x_[i], J.x_[i]);
    return from_kunz(amb_, std::move(z));
}

NormalizedIdeal NormalizedIdeal::intersect(const NormalizedIdeal& J) const {
    require_same_ambient(*this, J);
    KunzVector z(x_.size());
    for (std::size_t i = 0; i < x_.size(); ++i) z[i] = std::max(x_[i], J.x_[i]);
    return from_kunz(amb_, std::move(z));
}

long long NormalizedIdeal::frobenius() const {
    long long m = amb_.multiplicity();
    long long f = -1;
    for (long long i = 1; i < m; ++i) {
        Coord x = x_[static_cast<std::size_t>(i - 1)];
        if (x > 0) f = std::max(f, m * (x - 1) + i);
    }
    return f;
}

NormalizedIdeal NormalizedIdeal::adjoin_frobenius() const {
    if (is_full()) throw IsFullIdeal("N has no Frobenius number to adjoin");
    long long m = amb_.multiplicity();
    long long f = frobenius();
    KunzVector z(x_);
    z[static_cast<std::size_t>(f % m - 1)] -= 1;
    return from_kunz(amb_, std::move(z));
}

std::vector<long long> NormalizedIdeal::minimal_generators() const {
    long long m = amb_.multiplicity();
    // candidates are the Apery elements; w_i is minimal iff no w_j with
    // w_i - w_j in S \ {0}
    std::vector<long long> out;
    for (long long i = 0; i < m; ++i) {
        long long wi = apery(i);
        bool minimal = true;
        for (long long j = 0; j < m && minimal; ++j) {
            if (j == i) continue;
            long long d = wi - apery(j);
            if (d > 0 && amb_.contains(d)) minimal = false;
        }
        if (minimal) out.push_back(wi);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> NormalizedIdeal::members_upto(long long bound) const {
    std::vector<long long> out;
    for (long long n = 0; n <= bound; ++n)
        if (contains(n)) out.push_back(n);
    return out;
}

void require_same_ambient(const NormalizedIdeal& a, const NormalizedIdeal& b) {
    if (a.ambient() != b.ambient()) throw AmbientMismatch("ideals live over different semigroups");
}

NormalizedIdeal add(const NormalizedIdeal& I, const NormalizedIdeal& J) {
    require_same_ambient(I, J);
    long long m = I.ambient().multiplicity();
    KunzVector z(static_cast<std::size_t>(m - 1));
    for (long long t = 1; t < m; ++t) {
        long long best = -1;
        for (long long i1 = 0; i1 < m; ++i1) {
            long long i2 = (t - i1 % m + m) % m;
            long long cand = (i1 == 0 ? 0 : I.kunz()[static_cast<std::size_t>(i1 - 1)]) +
                             (i2 == 0 ? 0 : J.kunz()[static_cast<std::size_t>(i2 - 1)]) + (i1 + i2) / m;
            if (best < 0 || cand < best) best = cand;
        }
        z[static_cast<std::size_t>(t - 1)] = best;
    }
    return NormalizedIdeal::from_kunz(I.ambient(), std::move(z));
}

NormalizedIdeal add_ordinary(const NormalizedIdeal& I, const NormalizedIdeal& J) {
    require_same_ambient(I, J);
    if (!I.ambient().is_ordinary()) throw PreconditionViolated("simplified sum needs an ordinary ambient");
    long long m = I.ambient().multiplicity();
    KunzVector z(static_cast<std::size_t>(m - 1));
    for (long long t = 1; t < m; ++t) {
        long long best = -1;
        for (long long i1 = 0; i1 <= t; ++i1) {
            long long i2 = t - i1;
            long long cand = (i1 == 0 ? 0 : I.kunz()[static_cast<std::size_t>(i1 - 1)]) +
                             (i2 == 0 ? 0 : J.kunz()[static_cast<std::size_t>(i2 - 1)]);
            if (best < 0 || cand < best) best = cand;
        }
        z[static_cast<std::size_t>(t - 1)] = best;
    }
    return NormalizedIdeal::from_kunz(I.ambient(), std::move(z));
}

Residual residual(const NormalizedIdeal& J, const NormalizedIdeal& I) {
    require_same_ambient(J, I);
    const NumericalSemigroup& S = J.ambient();
    long long m = S.multiplicity();
    long long cj = J.frobenius() + 1; // conductor of J as a set
    // z + I subseteq J  iff  z + w_i(I) >= w_{(i+z) mod m}(J) for all i;
    // every z >= cj qualifies
    auto fits = [&](long long z) {
        for (long long i = 0; i < m; ++i)
            if (z + I.apery(i) < J.apery((i + z) % m)) return false;
        return true;
    };
    long long offset = cj;
    for (long long z = 0; z < cj; ++z)
        if (fits(z)) {
            offset = z;
            break;
        }
    // coordinates of the shifted set: per residue class of z - offset,
    // smallest qualifying z
    KunzVector x(static_cast<std::size_t>(m - 1));
    for (long long r = 1; r < m; ++r) {
        long long z = offset + r;
        while (z < cj && !fits(z)) z += m;
        x[static_cast<std::size_t>(r - 1)] = (z - offset - r) / m;
    }
    return Residual{offset, NormalizedIdeal::from_kunz(S, std::move(x))};
}

bool preceq(const NormalizedIdeal& I, const NormalizedIdeal& J) {
    require_same_ambient(I, J);
    if (!I.subset_of(J)) return false;
    Residual r = residual(J, I);
    assert(r.offset == 0);
    return add(I, r.ideal) == J;
}

} // namespace icm
