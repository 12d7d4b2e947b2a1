#include "icm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "icm/errors.hpp"
#include "icm/format.hpp"
#include "icm/verify.hpp"

namespace icm {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json semigroup_json(const NumericalSemigroup& S) {
    ordered_json j;
    j["generators"] = S.minimal_generators();
    j["multiplicity"] = S.multiplicity();
    j["frobenius"] = S.frobenius();
    j["conductor"] = S.conductor();
    j["genus"] = S.genus();
    j["gaps"] = S.gaps();
    j["kunz"] = S.kunz();
    return j;
}

ordered_json ideal_json(const NormalizedIdeal& I) {
    ordered_json j;
    j["kunz"] = I.kunz();
    j["genus"] = I.genus();
    j["minimal_generators"] = I.minimal_generators();
    return j;
}

void print_list(std::ostream& out, const char* label, const std::vector<long long>& v) {
    out << label << ":";
    for (auto x : v) out << ' ' << x;
    out << '\n';
}

KunzVector parse_kunz(const std::string& text) {
    std::string body;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ') body += c;
    KunzVector x;
    if (body.empty()) return x;
    std::stringstream ss(body);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(piece, &used);
        } catch (const std::exception&) {
            throw Error("bad Kunz vector: " + text);
        }
        if (used != piece.size()) throw Error("bad Kunz vector: " + text);
        x.push_back(v);
    }
    return x;
}

void cmd_info(const CliConfig& cfg, std::ostream& out) {
    const auto S = NumericalSemigroup::from_generators(cfg.generators);
    if (cfg.format == "json") {
        ordered_json j;
        j["semigroup"] = semigroup_json(S);
        out << j.dump(2) << '\n';
        return;
    }
    out << "semigroup: " << generator_str(S) << '\n';
    out << "multiplicity: " << S.multiplicity() << '\n';
    out << "frobenius: " << S.frobenius() << '\n';
    out << "conductor: " << S.conductor() << '\n';
    out << "genus: " << S.genus() << '\n';
    print_list(out, "gaps", S.gaps());
    print_list(out, "minimal generators", S.minimal_generators());
    out << "kunz: " << kunz_str(S.kunz()) << '\n';
}

void cmd_ideals(const CliConfig& cfg, std::ostream& out) {
    const auto S = NumericalSemigroup::from_generators(cfg.generators);
    if (!cfg.ideal.empty()) {
        const auto I = NormalizedIdeal::from_kunz(S, parse_kunz(cfg.ideal));
        if (cfg.format == "json") {
            ordered_json j;
            j["semigroup"] = semigroup_json(S);
            j["ideals"] = ordered_json::array({ideal_json(I)});
            out << j.dump(2) << '\n';
            return;
        }
        out << kunz_str(I.kunz()) << '\n';
        out << "genus: " << I.genus() << '\n';
        print_list(out, "minimal generators", I.minimal_generators());
        return;
    }
    const auto F = enumerate_normalized_ideals(S);
    if (cfg.format == "json") {
        ordered_json j;
        j["semigroup"] = semigroup_json(S);
        auto arr = ordered_json::array();
        for (const auto& I : F) arr.push_back(ideal_json(I));
        j["ideals"] = arr;
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& I : F) out << kunz_str(I.kunz()) << '\n';
}

void cmd_poset(const CliConfig& cfg, std::ostream& out) {
    const auto S = NumericalSemigroup::from_generators(cfg.generators);
    const auto F = enumerate_normalized_ideals(S);
    const auto kind = cfg.kind == "subset" ? OrderKind::subset : OrderKind::preceq;
    const auto O = build_order(F, kind);
    if (cfg.format == "dot") {
        out << to_dot(O);
        return;
    }
    const auto lat = is_lattice(O);
    DistributivityResult dist;
    if (lat.lattice) dist = is_distributive(O);

    if (cfg.format == "json") {
        ordered_json j;
        j["semigroup"] = semigroup_json(S);
        ordered_json ord;
        ord["kind"] = cfg.kind;
        ord["size"] = O.size();
        ord["cover_edges"] = O.cover_edge_count();
        ord["lattice"] = lat.lattice;
        if (lat.witness) {
            ordered_json w;
            w["pair"] = ordered_json::array({F[lat.witness->a].kunz(), F[lat.witness->b].kunz()});
            w["direction"] = lat.witness->upper ? "join" : "meet";
            auto bounds = ordered_json::array();
            for (auto b : lat.witness->bounds) bounds.push_back(F[b].kunz());
            w["bounds"] = bounds;
            ord["witness"] = w;
        }
        if (lat.lattice) {
            ord["distributive"] = dist.distributive;
            if (!dist.distributive) {
                auto triple = ordered_json::array();
                for (auto t : *dist.failing_triple) triple.push_back(F[t].kunz());
                ord["failing_triple"] = triple;
                ord["sublattice"] = dist.found == SublatticeKind::pentagon ? "pentagon" : "diamond";
                auto five = ordered_json::array();
                for (auto t : dist.sublattice) five.push_back(F[t].kunz());
                ord["sublattice_ideals"] = five;
            }
        }
        j["order"] = ord;
        out << j.dump(2) << '\n';
        return;
    }

    out << "semigroup: " << generator_str(S) << '\n';
    out << "order: " << cfg.kind << '\n';
    out << "ideals: " << O.size() << '\n';
    out << "cover edges: " << O.cover_edge_count() << '\n';
    out << "lattice: " << (lat.lattice ? "yes" : "no") << '\n';
    if (lat.witness) {
        out << "no " << (lat.witness->upper ? "join" : "meet") << ": " << kunz_str(F[lat.witness->a].kunz())
            << ' ' << kunz_str(F[lat.witness->b].kunz()) << '\n';
        out << (lat.witness->upper ? "minimal bounds:" : "maximal bounds:");
        for (auto b : lat.witness->bounds) out << ' ' << kunz_str(F[b].kunz());
        out << '\n';
    }
    if (lat.lattice) {
        out << "distributive: " << (dist.distributive ? "yes" : "no") << '\n';
        if (!dist.distributive) {
            out << "failing triple:";
            for (auto t : *dist.failing_triple) out << ' ' << kunz_str(F[t].kunz());
            out << '\n';
            out << (dist.found == SublatticeKind::pentagon ? "pentagon:" : "diamond:");
            for (auto t : dist.sublattice) out << ' ' << kunz_str(F[t].kunz());
            out << '\n';
        }
    }
}

IrreducibleKind parse_irr_kind(const std::string& kind) {
    if (kind == "plus") return IrreducibleKind::plus;
    if (kind == "join") return IrreducibleKind::join;
    if (kind == "meet") return IrreducibleKind::meet;
    if (kind == "union") return IrreducibleKind::cup;
    return IrreducibleKind::cap;
}

void cmd_irreducibles(const CliConfig& cfg, std::ostream& out) {
    const auto S = NumericalSemigroup::from_generators(cfg.generators);
    const auto F = enumerate_normalized_ideals(S);
    const auto list = irreducibles(F, parse_irr_kind(cfg.kind));
    if (cfg.format == "json") {
        ordered_json j;
        j["semigroup"] = semigroup_json(S);
        auto arr = ordered_json::array();
        for (const auto& I : list) arr.push_back(ideal_json(I));
        j["ideals"] = arr;
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& I : list) out << kunz_str(I.kunz()) << '\n';
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    VerificationReport rep;
    if (cfg.claim == "unitary-extension" || cfg.claim == "downward") {
        if (cfg.generators.empty() || cfg.gen <= 0) {
            err << "usage error: " << cfg.claim << " needs --sg and --gen\n";
            return 2;
        }
        const auto S = NumericalSemigroup::from_generators(cfg.generators);
        rep = cfg.claim == "unitary-extension" ? verify_unitary_extension(S, cfg.gen)
                                               : verify_downward_lemma(S, cfg.gen);
    } else if (cfg.claim == "ordinary-extension") {
        rep = verify_ordinary_extension(cfg.mult);
    } else if (cfg.claim == "lattice-threshold") {
        rep = verify_lattice_threshold(cfg.genus);
    } else {
        rep = verify_irreducibility(cfg.genus);
    }

    if (cfg.format == "json") {
        ordered_json v;
        v["claim"] = rep.claim_id;
        v["parameters"] = rep.parameters;
        v["passed"] = rep.passed;
        v["checked"] = rep.checked;
        v["skipped"] = rep.skipped;
        if (!rep.passed) v["witness"] = rep.witness;
        ordered_json j;
        j["verdicts"] = ordered_json::array({v});
        out << j.dump(2) << '\n';
    } else {
        out << "claim: " << rep.claim_id << '\n';
        out << "parameters: " << rep.parameters << '\n';
        out << "checked: " << rep.checked << '\n';
        out << "skipped: " << rep.skipped << '\n';
        out << "result: " << (rep.passed ? "pass" : "fail") << '\n';
        if (!rep.passed) out << "witness: " << rep.witness << '\n';
    }
    return rep.passed ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"ideal class monoids of numerical semigroups"};
    app.name("icm");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "text, json, or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--out", cfg.out_path, "write output to this file");

    auto positive_gens = [](CLI::Option* opt) { return opt->required()->check(CLI::PositiveNumber); };

    auto* info = app.add_subcommand("info", "basic invariants of a numerical semigroup");
    positive_gens(info->add_option("gens", cfg.generators, "generators"));
    auto* ideals = app.add_subcommand("ideals", "list the normalized ideals by Kunz coordinates");
    positive_gens(ideals->add_option("gens", cfg.generators, "generators"));
    ideals->add_option("--ideal", cfg.ideal, "single Kunz vector to inspect");
    auto* poset = app.add_subcommand("poset", "order statistics or DOT rendering");
    positive_gens(poset->add_option("gens", cfg.generators, "generators"));
    poset->add_option("--kind", cfg.kind, "preceq or subset")
        ->default_val("preceq")
        ->check(CLI::IsMember({"preceq", "subset"}));
    bool dot = false;
    poset->add_flag("--dot", dot, "shorthand for --format dot");
    auto* irr = app.add_subcommand("irreducibles", "irreducible ideals of the chosen kind");
    positive_gens(irr->add_option("gens", cfg.generators, "generators"));
    irr->add_option("--kind", cfg.kind, "plus, join, meet, union, or intersection")
        ->required()
        ->check(CLI::IsMember({"plus", "join", "meet", "union", "intersection"}));
    auto* verify = app.add_subcommand("verify", "run one verification sweep");
    verify->add_option("claim", cfg.claim, "claim id")
        ->required()
        ->check(CLI::IsMember(
            {"unitary-extension", "ordinary-extension", "downward", "lattice-threshold", "irreducibility"}));
    verify->add_option("--genus", cfg.genus, "sweep bound")->check(CLI::NonNegativeNumber);
    verify->add_option("--sg", cfg.generators, "semigroup generators, comma separated")->delimiter(',');
    verify->add_option("--gen", cfg.gen, "the generator to remove");
    verify->add_option("--mult", cfg.mult, "multiplicity for ordinary-extension");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    for (const auto* sub : {info, ideals, poset, irr, verify})
        if (sub->parsed()) cfg.subcommand = sub->get_name();
    if (dot) cfg.format = "dot";

    std::ostringstream buffer;
    int code = 0;
    try {
        if (cfg.subcommand == "info") cmd_info(cfg, buffer);
        else if (cfg.subcommand == "ideals") cmd_ideals(cfg, buffer);
        else if (cfg.subcommand == "poset") cmd_poset(cfg, buffer);
        else if (cfg.subcommand == "irreducibles") cmd_irreducibles(cfg, buffer);
        else code = cmd_verify(cfg, buffer, err);
    } catch (const PreconditionViolated& e) {
        err << "precondition violated: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (!cfg.out_path.empty()) {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << cfg.out_path << '\n';
            return 2;
        }
        file << buffer.str();
    } else {
        out << buffer.str();
    }
    return code;
}

} // namespace icm
