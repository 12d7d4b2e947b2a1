#include "icm/verify.hpp"

#include <algorithm>
#include <set>

#include "icm/errors.hpp"
#include "icm/format.hpp"

namespace icm {

namespace {

// keeps the first failure only
struct Failure {
    bool hit = false;
    std::string what;
    void note(const std::string& s) {
        if (!hit) {
            hit = true;
            what = s;
        }
    }
};

void seal(VerificationReport& rep, const Failure& fail) {
    rep.passed = !fail.hit;
    rep.witness = fail.what;
}

std::vector<std::size_t> without(std::vector<std::size_t> v, std::size_t e) {
    v.erase(std::remove(v.begin(), v.end(), e), v.end());
    return v;
}

} // namespace

VerificationReport verify_unitary_extension(const NumericalSemigroup& S, long long a) {
    VerificationReport rep;
    rep.claim_id = "unitary-extension";
    rep.parameters = "S = " + generator_str(S) + ", a = " + std::to_string(a);
    if (!S.is_minimal_generator(a)) throw PreconditionViolated("a must be a minimal generator");
    if (a <= std::max(S.multiplicity(), S.frobenius()))
        throw PreconditionViolated("a must exceed the multiplicity and the Frobenius number");

    const long long m = S.multiplicity();
    const auto Sp = S.remove_generator(a);
    const auto FS = enumerate_normalized_ideals(S);
    const auto FSp = enumerate_normalized_ideals(Sp);
    const auto O = build_order(FSp, OrderKind::preceq);
    const std::size_t cls = static_cast<std::size_t>(a % m);
    const long long ki = S.kunz()[cls - 1];
    const auto Sideal = NormalizedIdeal::from_kunz(Sp, S.kunz());

    std::set<KunzVector> old;
    for (const auto& I : FS) old.insert(I.kunz());
    std::set<KunzVector> fresh;
    for (const auto& I : FSp) fresh.insert(I.kunz());

    Failure fail;
    if (FSp.size() <= FS.size()) fail.note("the family does not grow");
    for (const auto& x : old)
        if (!fresh.count(x)) fail.note("ideal " + kunz_str(x) + " lost after removing the generator");

    for (const auto& I : FSp) {
        const bool kept = old.count(I.kunz()) != 0;
        const bool has_a = I.contains(a);
        const bool bumped = I.kunz()[cls - 1] == ki + 1;
        if (kept != has_a)
            fail.note("ideal " + kunz_str(I.kunz()) + ": membership of a disagrees with the family split");
        if (kept == bumped)
            fail.note("ideal " + kunz_str(I.kunz()) + ": coordinate " + std::to_string(cls) +
                      " disagrees with the family split");
        if (!kept) {
            KunzVector want = I.kunz();
            want[cls - 1] = ki;
            const auto sum = I + Sideal;
            if (sum.kunz() != want)
                fail.note("ideal " + kunz_str(I.kunz()) + ": I+S is " + kunz_str(sum.kunz()) + ", expected " +
                          kunz_str(want));
            const auto& up = O.upper_covers(FSp.index_of(I.kunz()));
            if (std::find(up.begin(), up.end(), FSp.index_of(want)) == up.end())
                fail.note("ideal " + kunz_str(I.kunz()) + ": I+S is not a cover of I");
        }
        ++rep.checked;
    }
    seal(rep, fail);
    return rep;
}

VerificationReport verify_ordinary_extension(long long m) {
    VerificationReport rep;
    rep.claim_id = "ordinary-extension";
    rep.parameters = "m = " + std::to_string(m);
    if (m < 1) throw PreconditionViolated("m must be positive");

    const auto H = NumericalSemigroup::ordinary(m);
    const auto Hp = NumericalSemigroup::ordinary(m + 1);
    const auto FH = enumerate_normalized_ideals(H);
    const auto FHp = enumerate_normalized_ideals(Hp);

    Failure fail;
    if (FH.size() != (std::size_t{1} << (m - 1)) || FHp.size() != (std::size_t{1} << m))
        fail.note("family sizes are not 2^(m-1) and 2^m");

    KunzVector hk(static_cast<std::size_t>(m), 1);
    hk[static_cast<std::size_t>(m - 1)] = 0;
    const auto K = NormalizedIdeal::from_kunz(Hp, hk);

    long long zeros = 0;
    for (const auto& I : FHp) {
        const bool tail_zero = I.kunz()[static_cast<std::size_t>(m - 1)] == 0;
        if (tail_zero) ++zeros;
        bool closed = true; // an ideal of the smaller ordinary semigroup iff I+m stays inside
        for (long long t = 0; t <= I.frobenius() && closed; ++t)
            if (I.contains(t) && !I.contains(t + m)) closed = false;
        if (tail_zero != closed)
            fail.note("ideal " + kunz_str(I.kunz()) + ": last coordinate disagrees with membership");
        KunzVector want = I.kunz();
        want[static_cast<std::size_t>(m - 1)] = 0;
        const auto sum = I + K;
        if (sum.kunz() != want)
            fail.note("ideal " + kunz_str(I.kunz()) + ": adding the smaller semigroup gives " +
                      kunz_str(sum.kunz()) + ", expected " + kunz_str(want));
        ++rep.checked;
    }
    if (zeros != static_cast<long long>(FH.size())) fail.note("family split is not 2^(m-1) / 2^(m-1)");
    seal(rep, fail);
    return rep;
}

VerificationReport verify_downward_lemma(const NumericalSemigroup& S, long long a) {
    VerificationReport rep;
    rep.claim_id = "downward";
    rep.parameters = "S = " + generator_str(S) + ", a = " + std::to_string(a);
    if (!S.is_minimal_generator(a)) throw PreconditionViolated("a must be a minimal generator");
    if (a == S.multiplicity()) throw PreconditionViolated("a must differ from the multiplicity");
    if (a <= S.frobenius()) throw PreconditionViolated("a must exceed the Frobenius number");

    const long long m = S.multiplicity();
    const auto Sp = S.remove_generator(a);
    const auto F = enumerate_normalized_ideals(S);
    const std::size_t n = F.size();
    const std::size_t cls = static_cast<std::size_t>(a % m);

    // which ideals keep a as a minimal generator once seen over S minus a
    std::vector<char> needs_a(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto mg = NormalizedIdeal::from_kunz(Sp, F[i].kunz()).minimal_generators();
        needs_a[i] = std::binary_search(mg.begin(), mg.end(), a) ? 1 : 0;
    }

    auto deleted = [&](std::size_t i) {
        KunzVector x = F[i].kunz();
        x[cls - 1] += 1;
        return NormalizedIdeal::from_kunz(Sp, x);
    };

    Failure fail;
    for (std::size_t i = 0; i < n; ++i) {
        if (!needs_a[i]) continue;
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t j = F.index_of(F[i] + F[k]);
            if (!needs_a[j]) continue;
            ++rep.checked;
            if (!needs_a[k]) {
                fail.note("I = " + kunz_str(F[i].kunz()) + ", K = " + kunz_str(F[k].kunz()) +
                          ": a is not a minimal generator of K");
                continue;
            }
            try {
                const auto lhs = deleted(i) + deleted(k);
                if (lhs.kunz() != deleted(j).kunz())
                    fail.note("I = " + kunz_str(F[i].kunz()) + ", K = " + kunz_str(F[k].kunz()) +
                              ": deleted sum is " + kunz_str(lhs.kunz()));
            } catch (const Error& e) {
                fail.note("I = " + kunz_str(F[i].kunz()) + ", K = " + kunz_str(F[k].kunz()) +
                          ": deletion failed: " + e.what());
            }
        }
    }
    seal(rep, fail);
    return rep;
}

VerificationReport verify_lattice_threshold(long long g_max) {
    VerificationReport rep;
    rep.claim_id = "lattice-threshold";
    rep.parameters = "genus <= " + std::to_string(g_max);
    if (g_max < 0) throw PreconditionViolated("genus bound must be nonnegative");

    const auto all = enumerate_by_genus(g_max);
    std::vector<std::string> wit(all.size());

#pragma omp parallel for schedule(dynamic)
    for (long long t = 0; t < static_cast<long long>(all.size()); ++t) {
        const auto& S = all[static_cast<std::size_t>(t)];
        std::string& w = wit[static_cast<std::size_t>(t)];
        try {
            const auto F = enumerate_normalized_ideals(S);
            const auto O = build_order(F, OrderKind::preceq);
            const auto lat = is_lattice(O);
            const bool expect = S.multiplicity() <= 4;
            if (lat.lattice != expect) {
                w = "S = " + generator_str(S) + ": lattice " + (lat.lattice ? "true" : "false") +
                    " at multiplicity " + std::to_string(S.multiplicity());
                if (lat.witness)
                    w += ", pair " + kunz_str(F[lat.witness->a].kunz()) + " " + kunz_str(F[lat.witness->b].kunz());
            }
        } catch (const Error& e) {
            w = "S = " + generator_str(S) + ": unexpected error: " + std::string(e.what());
        }
    }

    rep.checked = static_cast<long long>(all.size());
    Failure fail;
    for (const auto& w : wit)
        if (!w.empty()) fail.note(w);
    seal(rep, fail);
    return rep;
}

VerificationReport verify_irreducibility(long long g_max) {
    VerificationReport rep;
    rep.claim_id = "irreducibility";
    rep.parameters = "genus <= " + std::to_string(g_max) + ", multiplicity <= 4";
    if (g_max < 0) throw PreconditionViolated("genus bound must be nonnegative");

    const auto all = enumerate_by_genus(g_max);
    std::vector<std::string> wit(all.size());
    std::vector<char> skip(all.size(), 0);

#pragma omp parallel for schedule(dynamic)
    for (long long t = 0; t < static_cast<long long>(all.size()); ++t) {
        const auto& S = all[static_cast<std::size_t>(t)];
        std::string& w = wit[static_cast<std::size_t>(t)];
        if (S.multiplicity() > 4) {
            skip[static_cast<std::size_t>(t)] = 1;
            continue;
        }
        try {
            const auto F = enumerate_normalized_ideals(S);
            const auto OP = build_order(F, OrderKind::preceq);
            const auto OC = build_order(F, OrderKind::subset);
            const auto plus = irreducible_indices(OP, IrreducibleKind::plus);
            const auto join = irreducible_indices(OP, IrreducibleKind::join);
            const auto meet = irreducible_indices(OP, IrreducibleKind::meet);
            const auto cup = irreducible_indices(OC, IrreducibleKind::cup);
            const auto cap = irreducible_indices(OC, IrreducibleKind::cap);
            const std::size_t bottom = OP.bottom();

            if (!std::includes(join.begin(), join.end(), plus.begin(), plus.end()))
                w = "S = " + generator_str(S) + ": some +-irreducible is not join-irreducible";
            else if (!std::includes(meet.begin(), meet.end(), cap.begin(), cap.end()))
                w = "S = " + generator_str(S) + ": some cap-irreducible is not meet-irreducible";

            std::vector<std::size_t> pr;
            for (const auto& P : principal_family(S)) pr.push_back(F.index_of(P));
            auto pr_s = pr;
            pr_s.push_back(bottom);
            std::sort(pr_s.begin(), pr_s.end());
            if (w.empty() && cup != pr_s)
                w = "S = " + generator_str(S) + ": cup-irreducibles are not the principal ideals plus S";

            if (w.empty() && S.multiplicity() == 3) {
                if (without(join, bottom) != plus || without(cup, bottom) != plus || pr != plus)
                    w = "S = " + generator_str(S) + ": the multiplicity-three equivalence breaks";
                for (std::size_t i = 0; w.empty() && i < F.size(); ++i) {
                    if (i == bottom || std::binary_search(plus.begin(), plus.end(), i)) continue;
                    bool decomposed = false;
                    for (std::size_t p = 0; p < plus.size() && !decomposed; ++p)
                        for (std::size_t q = p + 1; q < plus.size() && !decomposed; ++q)
                            if (join_index(OP, plus[p], plus[q]) == i) decomposed = true;
                    if (!decomposed)
                        w = "S = " + generator_str(S) + ": " + kunz_str(F[i].kunz()) +
                            " is not a join of two +-irreducibles";
                }
            }
        } catch (const Error& e) {
            w = "S = " + generator_str(S) + ": unexpected error: " + std::string(e.what());
        }
    }

    Failure fail;
    for (std::size_t t = 0; t < all.size(); ++t) {
        rep.skipped += skip[t];
        if (!wit[t].empty()) fail.note(wit[t]);
    }
    rep.checked = static_cast<long long>(all.size()) - rep.skipped;
    seal(rep, fail);
    return rep;
}

} // namespace icm
