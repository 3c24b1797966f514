#include "gcover/boundary.hpp"
#include "gcover/characters.hpp"
#include "gcover/config.hpp"
#include "gcover/divisor.hpp"
#include "gcover/elliptic_tail.hpp"
#include "gcover/errors.hpp"
#include "gcover/grr.hpp"
#include "gcover/kodaira.hpp"
#include "gcover/monodromy.hpp"
#include "gcover/pencils.hpp"
#include "gcover/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

using nlohmann::json;
using namespace gcover;

namespace {

struct GlobalOpts {
    Config cfg;
    bool timing = false;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

void render_table(const json& j, std::ostream& os, const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render_table(v, os, prefix.empty() ? k : prefix + "." + k);
    } else if (j.is_array()) {
        int i = 0;
        for (const auto& v : j) render_table(v, os, prefix + "[" + std::to_string(i++) + "]");
    } else {
        os << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const json& j, const GlobalOpts& g) {
    if (g.cfg.output == OutputMode::table)
        render_table(j, std::cout);
    else
        std::cout << j.dump(2) << "\n";
}

json witness_json(const FiniteGroup& g, const BoundaryWitness& w) {
    auto names = [&](const std::vector<int>& v) {
        json a = json::array();
        for (int x : v) a.push_back(g.element_name(x));
        return a;
    };
    json j;
    j["side1"] = w.side1;
    j["side1_names"] = names(w.side1);
    j["image1"] = g.subgroup_class_name(g.subgroup_class_of_id(w.subgroup1));
    if (!w.side2.empty()) {
        j["side2"] = w.side2;
        j["side2_names"] = names(w.side2);
        j["image2"] = g.subgroup_class_name(g.subgroup_class_of_id(w.subgroup2));
    }
    if (w.gluing_factor >= 0) j["gluing_factor"] = g.element_name(w.gluing_factor);
    if (w.conjugator >= 0) j["conjugator"] = g.element_name(w.conjugator);
    if (w.glued_class >= 0)
        j["glued_class"] = g.subgroup_class_name(SubgroupClassId{w.glued_class});
    return j;
}

json label_json(const FiniteGroup& g, const BoundaryLabel& l) {
    json j;
    j["name"] = l.name(g);
    j["kind"] = l.kind == BoundaryKind::type_0 ? "type_0" : "type_i";
    j["i"] = l.i;
    j["h1"] = g.subgroup_class_name(l.h1);
    j["h2"] = g.subgroup_class_name(l.h2);
    j["node_type"] = g.class_name(l.node_type);
    j["verdict"] = verdict_name(l.verdict);
    if (l.witness) j["witness"] = witness_json(g, *l.witness);
    if (!l.certificate.empty()) j["certificate"] = l.certificate;
    if (l.kind == BoundaryKind::type_0) {
        j["commutator_diagnostic"] = l.commutator_diagnostic;
        if (l.diagnostic_conflict) j["diagnostic_conflict"] = true;
    }
    if (!l.glued_classes.empty()) {
        json a = json::array();
        for (int c : l.glued_classes) a.push_back(g.subgroup_class_name(SubgroupClassId{c}));
        j["glued_classes"] = a;
    }
    return j;
}

json eigen_json(const EigenMultiplicities& m) {
    json j;
    j["r"] = m.r;
    j["w"] = m.w;
    j["age"] = rat_to_string(age(m));
    j["quasireflection"] = is_quasireflection(m);
    return j;
}

int resolve_element(const FiniteGroup& g, const std::string& token) {
    for (int x = 0; x < g.order(); ++x)
        if (g.element_name(x) == token) return x;
    try {
        int idx = std::stoi(token);
        if (idx >= 0 && idx < g.order()) return idx;
    } catch (...) {
    }
    throw GcError(errc::usage, "unknown element '" + token + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for admissible S3-covers: monodromy counts, boundary "
                 "divisors, tautological classes and the Kodaira-dimension verdict"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("GCOVER_CUTOFF"))
        g.cfg.brute_force_cutoff = std::strtoull(env, nullptr, 10);
    app.add_option("--cutoff", g.cfg.brute_force_cutoff,
                   "brute-force tuple cutoff (default 10^8; env GCOVER_CUTOFF)");
    app.add_option("--threads", g.cfg.threads, "worker threads (0 = auto)");
    std::string output_mode = "json";
    app.add_option("--output", output_mode, "json|table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--timing", g.timing, "include elapsed_ms in reports (breaks byte-identical output)");

    // group
    auto* sc_group = app.add_subcommand("group", "inspect a group: classes and subgroup classes");
    std::string group_name = "S3";
    sc_group->add_option("--group", group_name, "built-in name or Cayley-table file");

    // covers count
    auto* sc_covers = app.add_subcommand("covers", "monodromy counting");
    auto* sc_count = sc_covers->add_subcommand("count", "count admissible-cover monodromies");
    std::string cv_group = "S3", cv_marks, cv_image, cv_method = "auto";
    int cv_genus = 0;
    bool cv_conj = false;
    sc_count->add_option("--group", cv_group);
    sc_count->add_option("--genus", cv_genus)->required();
    sc_count->add_option("--marks", cv_marks, "comma list of G-type classes, e.g. c2,c3");
    sc_count->add_option("--image", cv_image, "subgroup class of the image (e.g. S3, N, T, full)");
    sc_count->add_flag("--up-to-conj", cv_conj);
    sc_count->add_option("--method", cv_method)->check(CLI::IsMember({"auto", "brute", "frobenius", "moebius"}));

    // age / eigen
    auto* sc_age = app.add_subcommand("age", "age of a representation at a group element");
    auto* sc_eigen = app.add_subcommand("eigen", "eigenvalue multiplicities at a group element");
    std::string ae_group = "S3", ae_rep = "R", ae_elem = "(12)";
    for (auto* sc : {sc_age, sc_eigen}) {
        sc->add_option("--group", ae_group);
        sc->add_option("--rep", ae_rep);
        sc->add_option("--element", ae_elem);
    }

    // elliptic-tail
    auto* sc_et = app.add_subcommand("elliptic-tail", "automorphism action on elliptic cover classes");
    std::string et_group = "S3", et_image = "N";
    int et_aut = 6;
    sc_et->add_option("--group", et_group);
    sc_et->add_option("--image", et_image);
    sc_et->add_option("--aut", et_aut)->check(CLI::IsMember({4, 6}));
    auto* sc_et_genus = sc_et->add_subcommand("genus", "Riemann-Hurwitz genus of R^N_{1,S3} -> M_{1,1}");

    // boundary list
    auto* sc_boundary = app.add_subcommand("boundary", "boundary divisor catalog");
    auto* sc_blist = sc_boundary->add_subcommand("list", "list labels with nonemptiness verdicts");
    std::string bd_group = "S3", bd_component;
    int bd_genus = 13;
    sc_blist->add_option("--group", bd_group);
    sc_blist->add_option("--genus", bd_genus)->required();
    sc_blist->add_option("--component", bd_component, "restrict to one component (subgroup class)");

    // canonical / pullback
    auto* sc_canonical = app.add_subcommand("canonical", "canonical class of R_{g,S3}-bar");
    int ca_genus = 13;
    sc_canonical->add_option("--genus", ca_genus)->required();
    auto* sc_pullback = app.add_subcommand("pullback", "pullback of delta_i from M_g-bar");
    int pb_i = 0, pb_genus = 13;
    sc_pullback->add_option("--i", pb_i)->required();
    sc_pullback->add_option("--genus", pb_genus)->required();

    // pencil check
    auto* sc_pencil = app.add_subcommand("pencil", "test-pencil intersection numbers and bounds");
    auto* sc_pcheck = sc_pencil->add_subcommand("check", "effectivity bounds at index i");
    int pc_i = 1;
    std::string pc_a = "13", pc_b0p = "2", pc_b0c2 = "3";
    sc_pcheck->add_option("--i", pc_i)->required();
    sc_pcheck->add_option("--a", pc_a);
    sc_pcheck->add_option("--b0p", pc_b0p);
    sc_pcheck->add_option("--b0c2", pc_b0c2);

    // grr ch1
    auto* sc_grr = app.add_subcommand("grr", "Grothendieck-Riemann-Roch evaluations");
    auto* sc_ch1 = sc_grr->add_subcommand("ch1", "degree-1 Chern character of a twisted pushforward");
    std::string gr_group = "S3", gr_rep = "R";
    int gr_genus = 13, gr_b = 1;
    bool gr_fine = false;
    sc_ch1->add_option("--group", gr_group);
    sc_ch1->add_option("--rep", gr_rep);
    sc_ch1->add_option("--genus", gr_genus)->required();
    sc_ch1->add_option("--b", gr_b, "power of the dualizing sheaf in the twist");
    sc_ch1->add_flag("--fine", gr_fine, "per-stratum output instead of the coarse basis");

    // koszul class
    auto* sc_koszul = app.add_subcommand("koszul", "Koszul divisor class");
    auto* sc_kclass = sc_koszul->add_subcommand("class", "the class [U_g-bar] for g = 2i+1");
    int ko_i = 6;
    sc_kclass->add_option("--i", ko_i)->required();

    // kodaira
    auto* sc_kodaira = app.add_subcommand("kodaira", "slope decomposition and verdict");
    int kd_genus = 13;
    sc_kodaira->add_option("--genus", kd_genus)->required();

    auto* sc_selftest = app.add_subcommand("selftest", "run the full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    g.cfg.output = output_mode == "table" ? OutputMode::table : OutputMode::json;

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    };

    try {
        if (sc_group->parsed()) {
            FiniteGroup grp = FiniteGroup::resolve(group_name);
            json j;
            j["name"] = grp.name();
            j["order"] = grp.order();
            j["abelian"] = grp.is_abelian();
            json cl = json::array();
            for (int c = 0; c < grp.class_count(); ++c) {
                json e;
                e["name"] = grp.class_name(ConjClassId{c});
                json mem = json::array();
                for (int x : grp.class_members(ConjClassId{c})) mem.push_back(grp.element_name(x));
                e["members"] = mem;
                e["inverse_class"] = grp.class_name(grp.inverse_class(ConjClassId{c}));
                cl.push_back(e);
            }
            j["classes"] = cl;
            j["inv_sym_class_count"] = grp.inv_sym_class_count();
            j["subgroup_count"] = grp.subgroup_count();
            json scl = json::array();
            for (int c = 0; c < grp.subgroup_class_count(); ++c) {
                json e;
                e["name"] = grp.subgroup_class_name(SubgroupClassId{c});
                e["size"] = grp.subgroup_class_members(SubgroupClassId{c}).size();
                json rep = json::array();
                for (int x : grp.subgroup_members(grp.subgroup_class_rep(SubgroupClassId{c})))
                    rep.push_back(grp.element_name(x));
                e["representative"] = rep;
                scl.push_back(e);
            }
            j["subgroup_classes"] = scl;
            emit(j, g);
        } else if (sc_count->parsed()) {
            FiniteGroup grp = FiniteGroup::resolve(cv_group);
            CoverCountQuery q;
            q.group = &grp;
            q.genus = cv_genus;
            for (const auto& tok : split_commas(cv_marks))
                q.mark_types.push_back(grp.class_by_token(tok));
            if (!cv_image.empty()) q.image_class = grp.subgroup_class_by_token(cv_image);
            q.up_to_conjugation = cv_conj;

            CoverCountResult r;
            if (cv_method == "brute") {
                r = count_homs_brute(q, g.cfg);
            } else if (cv_method == "frobenius") {
                r = count_homs_frobenius(q);
            } else if (cv_method == "moebius") {
                r = count_with_image_class(q);
            } else {
                // auto: exact character paths first, enumeration as the
                // fallback for groups without a shipped table.
                try {
                    r = q.image_class ? count_with_image_class(q) : count_homs_frobenius(q);
                } catch (const GcError& e) {
                    if (e.code() != std::string(errc::unsupported_group)) throw;
                    r = count_homs_brute(q, g.cfg);
                }
            }

            json j;
            j["count"] = r.count.get_str();
            j["method"] = method_name(r.method);
            if (g.timing) j["elapsed_ms"] = elapsed_ms();
            emit(j, g);
        } else if (sc_age->parsed() || sc_eigen->parsed()) {
            FiniteGroup grp = FiniteGroup::resolve(ae_group);
            Representation rep = representation_by_name(grp, ae_rep);
            int x = resolve_element(grp, ae_elem);
            EigenMultiplicities m = eigen_multiplicities(rep, x);
            json j;
            j["group"] = grp.name();
            j["rep"] = rep.name;
            j["element"] = grp.element_name(x);
            if (sc_eigen->parsed())
                j["eigen"] = eigen_json(m);
            else
                j["age"] = rat_to_string(age(m));
            emit(j, g);
        } else if (sc_et->parsed()) {
            if (sc_et_genus->parsed()) {
                auto rn = branch_data_RN();
                json j;
                j["degree"] = rn.degree;
                j["base_genus"] = 0;
                j["total_ramification"] = rn.total_ramification();
                j["genus"] = genus_by_riemann_hurwitz(rn.degree, 0, rn.data);
                json branch = json::array();
                for (const auto& d : rn.data) {
                    json e;
                    e["base_point"] = d.base_point;
                    json fiber = json::array();
                    for (const auto& p : d.fiber)
                        fiber.push_back({{"label", p.label},
                                         {"ram_index", p.ram_index},
                                         {"local_picture", p.local_picture}});
                    e["fiber"] = fiber;
                    branch.push_back(e);
                }
                j["branch"] = branch;
                emit(j, g);
            } else {
                FiniteGroup grp = FiniteGroup::resolve(et_group);
                auto classes = classes_with_image(grp, grp.subgroup_class_by_token(et_image));
                auto orb = aut_orbits(grp, classes, AutAction{et_aut});
                json j;
                j["group"] = grp.name();
                j["image"] = et_image;
                j["aut_order"] = et_aut;
                json cl = json::array();
                for (const auto& c : classes) cl.push_back(c.label);
                j["classes"] = cl;
                json orbits = json::array();
                for (const auto& o : orb.orbits) {
                    json e = json::array();
                    for (int k : o) e.push_back(classes[k].label);
                    orbits.push_back(e);
                }
                j["orbits"] = orbits;
                json fixed = json::array();
                for (std::size_t k = 0; k < classes.size(); ++k)
                    if (orb.fixed[k]) fixed.push_back(classes[k].label);
                j["lifting_classes"] = fixed;
                emit(j, g);
            }
        } else if (sc_blist->parsed()) {
            FiniteGroup grp = FiniteGroup::resolve(bd_group);
            std::optional<SubgroupClassId> comp;
            if (!bd_component.empty()) comp = grp.subgroup_class_by_token(bd_component);
            auto labels = catalog(bd_genus, grp, comp, g.cfg);
            json j = json::array();
            for (const auto& l : labels) j.push_back(label_json(grp, l));
            json out;
            out["genus"] = bd_genus;
            out["group"] = grp.name();
            out["labels"] = j;
            if (g.timing) out["elapsed_ms"] = elapsed_ms();
            emit(out, g);
        } else if (sc_canonical->parsed()) {
            emit(canonical_class(ca_genus).to_json(), g);
        } else if (sc_pullback->parsed()) {
            emit(pullback_delta(pb_i, pb_genus).to_json(), g);
        } else if (sc_pcheck->parsed()) {
            Rat a = rat_from_string(pc_a), b0p = rat_from_string(pc_b0p), b0c2 = rat_from_string(pc_b0c2);
            Rat bp = min_b_prime(pc_i, a, b0p, b0c2);
            Rat bc = min_b_c3(pc_i, a);
            json j;
            j["i"] = pc_i;
            j["bound_b_prime"] = rat_to_string(bp);
            j["bound_b_c3"] = rat_to_string(bc);
            j["passes"] = bp >= 3 && bc > 7;
            if (pc_i == 10) j["k3_caveat"] = true;
            emit(j, g);
        } else if (sc_ch1->parsed()) {
            FiniteGroup grp = FiniteGroup::resolve(gr_group);
            Representation rep = representation_by_name(grp, gr_rep);
            emit(ch1_pushforward(gr_genus, rep, gr_b, gr_fine).to_json(), g);
        } else if (sc_kclass->parsed()) {
            KoszulClass k = koszul_class(ko_i);
            json j;
            j["i"] = ko_i;
            j["prefactor_rank"] = k.prefactor_rank.get_str();
            j["normalization"] = k.norm_factor.get_str();
            j["class"] = k.cls.to_json();
            j["normalized"] = k.normalized.to_json();
            emit(j, g);
        } else if (sc_kodaira->parsed()) {
            VerdictReport r = verdict(kd_genus);
            json j;
            j["genus"] = r.g;
            j["verdict"] = r.verdict;
            j["reason"] = r.reason;
            if (r.slope) {
                j["i"] = r.slope->i;
                j["s_max"] = rat_to_string(r.slope->s_max);
                j["gamma_max"] = rat_to_string(r.slope->gamma_max);
                json dec;
                dec["koszul_normalized"] = koszul_class(r.slope->i).normalized.to_json();
                dec["brill_noether_pullback"] = pullback_brill_noether(r.slope->i).to_json();
                dec["effective_E"] = r.slope->effective_E.to_json();
                j["decomposition"] = dec;
            }
            if (!r.assumptions.empty()) j["assumptions"] = r.assumptions;
            if (!r.pencil_bounds.empty()) {
                json pb = json::array();
                for (std::size_t k = 0; k < r.pencil_bounds.size(); ++k)
                    pb.push_back({{"i", k + 1},
                                  {"min_b_prime", rat_to_string(r.pencil_bounds[k].first)},
                                  {"min_b_c3", rat_to_string(r.pencil_bounds[k].second)}});
                j["pencil_bounds"] = pb;
            }
            emit(j, g);
        } else if (sc_selftest->parsed()) {
            bool ok = selftest::run_all(std::cout);
            return ok ? 0 : 1;
        }
    } catch (const GcError& e) {
        json j;
        j["code"] = e.code();
        j["message"] = e.what();
        if (!e.witness().is_null()) j["witness"] = e.witness();
        std::cout << json{{"error", j}}.dump(2) << "\n";
        return e.code() == errc::usage ? 2 : 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 1;
    }
    return 0;
}
