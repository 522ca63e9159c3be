// Command-line front end for the bilattice duality toolkit.
//
// Exit codes: 0 success, 2 parse/usage error, 3 validation failure,
// 4 theorem violation, 5 resource guard exceeded.

#include "bilat/applications.hpp"
#include "bilat/birkhoff.hpp"
#include "bilat/corpus.hpp"
#include "bilat/duality.hpp"
#include "bilat/enumerate.hpp"
#include "bilat/json_io.hpp"
#include "bilat/piggyback.hpp"
#include "bilat/prodrep.hpp"
#include "bilat/varieties.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

using namespace bilat;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string format = "json"; // json | text
    bool no_validate = false;
    std::uint64_t seed = 0;
    std::uint64_t max_size = 1u << 20; // resource guard for map searches
};

struct Input {
    FinAlgebra algebra;
    std::string fp;
};

Input load_input(const std::string& file, const std::string& canonical_name, const Options& opt,
                 const std::string& variety_tag = "") {
    FinAlgebra a = [&] {
        if (!canonical_name.empty()) {
            if (canonical_name.rfind("randlat", 0) == 0) {
                SplitMix64 rng(opt.seed);
                bool bounded = canonical_name == "randlat";
                return random_lattice(rng, static_cast<int>(std::min<std::uint64_t>(opt.max_size, 64)),
                                      bounded);
            }
            return canonical(canonical_name);
        }
        return load_algebra_file(file);
    }();
    std::string fp = fingerprint(a);
    if (!variety_tag.empty() && variety_of(a) != parse_variety(variety_tag))
        throw precondition_error("algebra variety does not match --variety " + variety_tag);
    if (!opt.no_validate) {
        auto report = validate(a, variety_of(a));
        if (!report.valid) {
            std::ostringstream what;
            what << "validation failed: " << report.violations[0].axiom;
            throw validation_error(what.str());
        }
    }
    return {std::move(a), std::move(fp)};
}

void emit(const Options& opt, const ordered_json& j) {
    if (opt.format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // Text format: flat key/value lines in document order.
    std::function<void(const std::string&, const ordered_json&)> walk =
        [&](const std::string& prefix, const ordered_json& node) {
            if (node.is_object()) {
                for (auto it = node.begin(); it != node.end(); ++it)
                    walk(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
            } else if (node.is_array()) {
                std::cout << prefix << ": " << node.dump() << "\n";
            } else if (node.is_string()) {
                std::cout << prefix << ": " << node.get<std::string>() << "\n";
            } else {
                std::cout << prefix << ": " << node.dump() << "\n";
            }
        };
    walk("", j);
}

ordered_json poset_json(const Poset& p) {
    ordered_json j;
    j["points"] = p.names;
    ordered_json pairs = ordered_json::array();
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (a != b && p.le(a, b)) pairs.push_back(ordered_json::array({a, b}));
    j["strict_leq_pairs"] = std::move(pairs);
    return j;
}

ordered_json space_json(const StructuredSpace& x) {
    ordered_json j;
    ordered_json sorts = ordered_json::array();
    for (const auto& names : x.point_names) {
        ordered_json s;
        s["points"] = names;
        sorts.push_back(std::move(s));
    }
    j["sorts"] = std::move(sorts);
    ordered_json rels = ordered_json::array();
    for (const auto& r : x.relations) {
        ordered_json jr;
        jr["sort_a"] = r.sort_a;
        jr["sort_b"] = r.sort_b;
        ordered_json pairs = ordered_json::array();
        for (auto [a, b] : r.pairs) pairs.push_back(ordered_json::array({a, b}));
        jr["pairs"] = std::move(pairs);
        rels.push_back(std::move(jr));
    }
    j["relations"] = std::move(rels);
    ordered_json nuls = ordered_json::array();
    for (std::size_t k = 0; k < x.nullary_points.size(); ++k) {
        ordered_json n;
        n["sort"] = x.nullary_sorts[k];
        n["point"] = x.nullary_points[k];
        nuls.push_back(std::move(n));
    }
    j["nullaries"] = std::move(nuls);
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite distributive (pre-)bilattice duality toolkit"};
    app.require_subcommand(1);

    Options opt;
    std::string variety_tag;
    app.add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--no-validate", opt.no_validate);
    app.add_option("--seed", opt.seed);
    app.add_option("--max-size", opt.max_size);
    app.add_option("--variety", variety_tag,
                   "variety tag; required by `free`, cross-checked elsewhere");

    std::string file, file2, canon_name;
    int nat = 0;

    auto add_input = [&](CLI::App* cmd, bool required = true) {
        auto* f = cmd->add_option("file", file, "algebra document");
        cmd->add_option("--canonical", canon_name, "canonical algebra name");
        if (required) f->excludes("--canonical");
    };

    auto* c_validate = app.add_subcommand("validate", "check the variety axioms");
    add_input(c_validate);
    auto* c_canonical = app.add_subcommand("canonical", "emit a canonical algebra document");
    c_canonical->add_option("name", canon_name)->required();
    auto* c_homs = app.add_subcommand("homs", "enumerate homomorphisms A -> B");
    c_homs->add_option("file", file)->required();
    c_homs->add_option("file2", file2)->required();
    auto* c_subalgebras = app.add_subcommand("subalgebras", "enumerate subuniverses");
    add_input(c_subalgebras);
    auto* c_congruences = app.add_subcommand("congruences", "congruence lattice");
    add_input(c_congruences);
    auto* c_dual = app.add_subcommand("dual", "natural dual D(A)");
    add_input(c_dual);
    auto* c_edual = app.add_subcommand("edual", "evaluation algebra E(X) of a space document");
    c_edual->add_option("file", file)->required();
    auto* c_roundtrip = app.add_subcommand("roundtrip", "verify the full duality for A");
    add_input(c_roundtrip);
    auto* c_piggyback = app.add_subcommand("piggyback", "omega set and piggyback relations");
    add_input(c_piggyback);
    auto* c_dismount = app.add_subcommand("dismount", "Priestley dual of the t-reduct from D(A)");
    add_input(c_dismount);
    auto* c_kdual = app.add_subcommand("knowledge-dual", "Priestley dual of the k-reduct from D(A)");
    add_input(c_kdual);
    auto* c_priestley = app.add_subcommand("priestley", "Priestley dual of a lattice");
    add_input(c_priestley);
    auto* c_prodrep = app.add_subcommand("prodrep", "verify the product representation");
    add_input(c_prodrep);
    auto* c_bowtie = app.add_subcommand("bowtie", "emit L (.) L for a lattice document");
    add_input(c_bowtie);
    auto* c_free = app.add_subcommand("free", "free algebra on n generators");
    c_free->add_option("n", nat)->required();
    auto* c_coproduct = app.add_subcommand("coproduct", "coproduct of two algebras");
    c_coproduct->add_option("file", file)->required();
    c_coproduct->add_option("file2", file2)->required();
    auto* c_unify = app.add_subcommand("unify-type", "unification type of A");
    add_input(c_unify);
    auto* c_admissible = app.add_subcommand("admissible", "admissibility basis clauses for A");
    add_input(c_admissible);
    auto* c_embed = app.add_subcommand("embed-free", "embed A into a finite free algebra");
    add_input(c_embed);
    auto* c_structural = app.add_subcommand("structural", "injectivity and weak projectivity");
    add_input(c_structural);
    auto* c_iso = app.add_subcommand("iso", "isomorphism between two algebras");
    c_iso->add_option("file", file)->required();
    c_iso->add_option("file2", file2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0; // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        ordered_json out;

        if (c_validate->parsed()) {
            Options lax = opt;
            lax.no_validate = true;
            Input in = load_input(file, canon_name, lax);
            auto report = validate(in.algebra, variety_of(in.algebra));
            out["command"] = "validate";
            out["input_fingerprint"] = in.fp;
            out["valid"] = report.valid;
            ordered_json vs = ordered_json::array();
            for (const auto& v : report.violations) {
                ordered_json jv;
                jv["axiom"] = v.axiom;
                jv["witness"] = v.witness;
                vs.push_back(std::move(jv));
            }
            out["violations"] = std::move(vs);
            emit(opt, out);
            return report.valid ? 0 : 3;
        }

        if (c_canonical->parsed()) {
            if (canon_name.rfind("randlat", 0) == 0) {
                SplitMix64 rng(opt.seed);
                bool bounded = canon_name == "randlat";
                FinAlgebra a =
                    random_lattice(rng, static_cast<int>(std::min<std::uint64_t>(opt.max_size, 64)),
                                   bounded);
                std::cout << serialize_algebra(a);
                return 0;
            }
            std::cout << serialize_algebra(canonical(canon_name));
            return 0;
        }

        if (c_homs->parsed()) {
            FinAlgebra a = load_algebra_file(file), b = load_algebra_file(file2);
            AlgPtr ap = make_alg(a), bp = make_alg(b);
            auto homs = enumerate_homs(ap, bp);
            out["command"] = "homs";
            out["input_fingerprint"] = fingerprint(a);
            out["input_fingerprint_2"] = fingerprint(b);
            out["count"] = homs.size();
            ordered_json maps = ordered_json::array();
            for (const auto& h : homs) maps.push_back(h.map);
            out["maps"] = std::move(maps);
            emit(opt, out);
            return 0;
        }

        if (c_subalgebras->parsed()) {
            Input in = load_input(file, canon_name, opt, variety_tag);
            auto subs = enumerate_subuniverses(make_alg(in.algebra));
            out["command"] = "subalgebras";
            out["input_fingerprint"] = in.fp;
            out["count"] = subs.size();
            ordered_json list = ordered_json::array();
            for (const auto& s : subs) list.push_back(s.elements);
            out["subuniverses"] = std::move(list);
            emit(opt, out);
            return 0;
        }

        if (c_congruences->parsed()) {
            Input in = load_input(file, canon_name, opt, variety_tag);
            auto lat = congruence_lattice(make_alg(in.algebra));
            out["command"] = "congruences";
            out["input_fingerprint"] = in.fp;
            out["count"] = lat.congruences.size();
            ordered_json list = ordered_json::array();
            for (const auto& c : lat.congruences) list.push_back(c.block_of);
            out["partitions"] = std::move(list);
            ordered_json refines = ordered_json::array();
            for (const auto& row : lat.refines) {
                ordered_json r = ordered_json::array();
                for (bool b : row) r.push_back(b ? 1 : 0);
                refines.push_back(std::move(r));
            }
            out["refines"] = std::move(refines);
            emit(opt, out);
            return 0;
        }

        if (c_dual->parsed()) {
            Input in = load_input(file, canon_name, opt, variety_tag);
            AlterEgo ego = standard_alter_ego(variety_of(in.algebra));
            NaturalDual d = natural_dual(make_alg(in.algebra), ego);
            out["command"] = "dual";
            out["input_fingerprint"] = in.fp;
            out["space"] = space_json(d.space);
            emit(opt, out);
            return 0;
        }

        if (c_edual->parsed()) {
            auto [space, v] = load_space_file(file);
            AlterEgo ego = standard_alter_ego(v);
            auto ev = evaluation_algebra(space, ego, Exec::Parallel, opt.max_size);
            out["command"] = "edual";
            out["input_fingerprint"] = fingerprint_space(space, v);
            out["size"] = ev.algebra.size();
            out["algebra"] = nlohmann::ordered_json::parse(serialize_algebra(ev.algebra));
            emit(opt, out);
            return 0;
        }

        if (c_roundtrip->parsed()) {
            Input in = load_input(file, canon_name, opt, variety_tag);
            AlterEgo ego = standard_alter_ego(variety_of(in.algebra));
            auto report = verify_full_duality(make_alg(in.algebra), ego);
            out["command"] = "roundtrip";
            out["input_fingerprint"] = in.fp;
            out["evaluation_map"] = report.evaluation_iso ? "isomorphism" : "failure";
            out["coevaluation_map"] = report.coevaluation_iso ? "isomorphism" : "failure";
            out["witnesses"] = report.witnesses;
            emit(opt, out);
            return report.full() ? 0 : 4;
        }

        if (c_piggyback->parsed()) {
            Input in = load_input(file, canon_name, opt, variety_tag);
            const Variety v = variety_of(in.algebra);
            const bool bounded = is_bounded(v);
            auto rel = piggyback_relations(make_alg(in.algebra), bounded);
            out["command"] = "piggyback";
            out["input_fingerprint"] = in.fp;
            ordered_json omegas = ordered_json::array();
            for (const auto& w : rel.omega.omegas) {
                ordered_json jw;
                jw["tag"] = w.tag;
                jw["map"] = w.map;
                omegas.push_back(std::move(jw));
            }
            out["omega"] = std::move(omegas);
            ordered_json binary = ordered_json::array();
            for (std::size_t w1 = 0; w1 < rel.binary.size(); ++w1)
                for (std::size_t w2 = 0; w2 < rel.binary[w1].size(); ++w2) {
                    ordered_json entry;
                    entry["w1"] = rel.omega.omegas[w1].tag;
                    entry["w2"] = rel.omega.omegas[w2].tag;
                    ordered_json rs = ordered_json::array();
                    for (const auto& r : rel.binary[w1][w2]) {
                        ordered_json pr = ordered_json::array();
                        for (auto [x, y] : r) pr.push_back(ordered_json::array({x, y}));
                        rs.push_back(std::move(pr));
                    }
                    entry["maximal"] = std::move(rs);
                    binary.push_back(std::move(entry));
                }
            out["binary_relations"] = std::move(binary);
            if (!bounded) {
                ordered_json unary = ordered_json::array();
                for (std::size_t w = 0; w < rel.unary.size(); ++w)
                    for (int i = 0; i < 2; ++i) {
                        ordered_json entry;
                        entry["w"] = rel.omega.omegas[w].tag;
                        entry["i"] = i;
                        entry["maximal"] = rel.unary[w][(std::size_t)i];
                        unary.push_back(std::move(entry));
                    }
                out["unary_relations"] = std::move(unary);
            }
            emit(opt, out);
            return 0;
        }

        if (c_dismount->parsed()) {
            Input in = load_input(file, canon_name, opt, variety_tag);
            auto cover = dismount(make_alg(in.algebra));
            out["command"] = "dismount";
            out["input_fingerprint"] = in.fp;
            out["base_points"] = cover.n_dual * cover.n_omega;
            out["classes"] = cover.class_rep.size();
            out["quotient"] = poset_json(cover.quotient);
            if (cover.unbounded) {
                out["c0"] = cover.c0;
                out["c1"] = cover.c1;
            }
            out["phi"] = "isomorphism onto H(U(A))";
            emit(opt, out);
            return 0;
        }

        if (c_kdual->parsed()) {
            Input in = load_input(file, canon_name, opt, variety_tag);
            auto kd = knowledge_dual(make_alg(in.algebra));
            out["command"] = "knowledge-dual";
            out["input_fingerprint"] = in.fp;
            out["space"] = poset_json(kd.space);
            out["eta"] = "isomorphism onto H(A_k)";
            emit(opt, out);
            return 0;
        }

        if (c_priestley->parsed()) {
            Input in = load_input(file, canon_name, opt, variety_tag);
            auto dual = priestley_dual(in.algebra);
            out["command"] = "priestley";
            out["input_fingerprint"] = in.fp;
            out["space"] = poset_json(dual.poset);
            if (!dual.bounded) {
                out["bottom"] = dual.bottom;
                out["top"] = dual.top;
            }
            emit(opt, out);
            return 0;
        }

        if (c_prodrep->parsed()) {
            Input in = load_input(file, canon_name, opt, variety_tag);
            auto rep = verify_product_representation(make_alg(in.algebra));
            out["command"] = "prodrep";
            out["input_fingerprint"] = in.fp;
            out["factor_size"] = rep.factor.size();
            out["iso"] = rep.iso.map;
            out["factor"] = nlohmann::ordered_json::parse(serialize_algebra(rep.factor));
            emit(opt, out);
            return 0;
        }

        if (c_bowtie->parsed()) {
            Input in = load_input(file, canon_name, opt, variety_tag);
            auto bt = bowtie(in.algebra);
            std::cout << serialize_algebra(bt.algebra);
            return 0;
        }

        if (c_free->parsed()) {
            if (variety_tag.empty()) throw precondition_error("free requires --variety");
            Variety v = parse_variety(variety_tag);
            out["command"] = "free";
            out["variety"] = variety_name(v);
            out["n"] = nat;
            // Tables are only materialised while they fit; the size report
            // never needs them.
            const std::size_t tab_cap = std::min<std::uint64_t>(opt.max_size, 1u << 13);
            std::uint64_t size = free_algebra_size(v, nat, opt.max_size);
            out["size"] = size;
            if (size <= tab_cap) {
                auto f = free_algebra(v, nat, opt.max_size, tab_cap);
                out["generators"] = f.generators;
                out["input_fingerprint"] = fingerprint(f.algebra);
            } else {
                out["generators"] = "not materialized";
                out["input_fingerprint"] = to_hex(fnv1a64(variety_name(v) + ":free:" +
                                                          std::to_string(nat)));
            }
            emit(opt, out);
            return 0;
        }

        if (c_coproduct->parsed()) {
            FinAlgebra a = load_algebra_file(file), b = load_algebra_file(file2);
            if (a.sig() != b.sig()) throw precondition_error("incompatible signatures");
            AlterEgo ego = standard_alter_ego(variety_of(a));
            auto cp = coproduct_algebras(make_alg(a), make_alg(b), ego, opt.max_size, opt.max_size);
            out["command"] = "coproduct";
            out["input_fingerprint"] = fingerprint(a);
            out["input_fingerprint_2"] = fingerprint(b);
            out["size"] = cp.algebra.size();
            out["injection_left"] = cp.into_left.map;
            out["injection_right"] = cp.into_right.map;
            emit(opt, out);
            return 0;
        }

        if (c_unify->parsed()) {
            Input in = load_input(file, canon_name, opt, variety_tag);
            auto verdict = unification_type(make_alg(in.algebra));
            out["command"] = "unify-type";
            out["input_fingerprint"] = in.fp;
            out["type"] = unification_type_name(verdict.status);
            out["dual"] = poset_json(verdict.dual);
            if (verdict.witness_pair)
                out["witness_pair"] =
                    ordered_json::array({verdict.witness_pair->first, verdict.witness_pair->second});
            if (verdict.witness_interval)
                out["witness_interval"] = ordered_json::array(
                    {verdict.witness_interval->first, verdict.witness_interval->second});
            emit(opt, out);
            return 0;
        }

        if (c_admissible->parsed()) {
            Input in = load_input(file, canon_name, opt, variety_tag);
            auto report = admissibility_check(make_alg(in.algebra));
            out["command"] = "admissible";
            out["input_fingerprint"] = in.fp;
            ordered_json clauses = ordered_json::array();
            for (const auto& c : report.clause_results) {
                ordered_json jc;
                jc["clause"] = c.name;
                jc["holds"] = c.holds;
                if (!c.holds) jc["witness"] = c.witness;
                clauses.push_back(std::move(jc));
            }
            out["clauses"] = std::move(clauses);
            out["dual_nonempty"] = report.dual_nonempty;
            out["dual_bounded"] = report.dual_bounded;
            out["equivalence_holds"] = report.equivalence_holds;
            out["embeds_into_free"] = report.embedding.has_value();
            emit(opt, out);
            return report.equivalence_holds ? 0 : 4;
        }

        if (c_embed->parsed()) {
            Input in = load_input(file, canon_name, opt, variety_tag);
            auto emb = embed_into_free(make_alg(in.algebra), opt.max_size, opt.max_size);
            out["command"] = "embed-free";
            out["input_fingerprint"] = in.fp;
            out["generators"] = emb.generators;
            out["verified"] = true; // construction throws on any failure
            if (emb.free) {
                out["free_size"] = emb.free->size();
                out["embedding"] = emb.embedding->map;
            } else {
                out["free_size"] = "not materialized";
                out["images"] = emb.images;
            }
            emit(opt, out);
            return 0;
        }

        if (c_structural->parsed()) {
            Input in = load_input(file, canon_name, opt, variety_tag);
            auto st = structural_tests(make_alg(in.algebra));
            out["command"] = "structural";
            out["input_fingerprint"] = in.fp;
            if (st.injective)
                out["injective"] = *st.injective;
            else
                out["injective"] = "not applicable";
            out["weakly_projective"] = st.weakly_projective;
            emit(opt, out);
            return 0;
        }

        if (c_iso->parsed()) {
            FinAlgebra a = load_algebra_file(file), b = load_algebra_file(file2);
            auto iso = find_isomorphism(make_alg(a), make_alg(b));
            out["command"] = "iso";
            out["input_fingerprint"] = fingerprint(a);
            out["input_fingerprint_2"] = fingerprint(b);
            if (iso)
                out["iso"] = iso->map;
            else
                out["iso"] = "none";
            emit(opt, out);
            return 0;
        }

        std::cerr << "no command\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const theorem_violation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return 4;
    } catch (const guard_exceeded& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 5;
    }
}
