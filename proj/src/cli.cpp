#include "eislat/cli.hpp"

#include <CLI11.hpp>
#include <iostream>

#include "eislat/classify.hpp"
#include "eislat/kodaira.hpp"
#include "eislat/parse.hpp"
#include "eislat/pham.hpp"
#include "eislat/picard.hpp"
#include "eislat/verify.hpp"

namespace eislat {

namespace {

LatticeVector parse_vector_arg(const LatticePtr& L, const std::string& text) {
    if (!text.empty() && text[0] == '[') return vector_from_json(L, Json::parse(text));
    return parse_vector(L, text);
}

Rat parse_rat_arg(const std::string& text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(text));
    return Rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

int cmd_ring(const std::string& action, const std::string& a, const std::string& b,
             std::ostream& out) {
    Json j;
    if (action == "gcd") {
        Eis g = gcd(parse_scalar(a), parse_scalar(b));
        j = Json{{"gcd", to_json(g)}};
    } else if (action == "units") {
        Json u = Json::array();
        for (const Eis& x : units()) u.push_back(to_json(x));
        j = Json{{"units", u}};
    } else if (action == "reduce") {
        Eis x = parse_scalar(a);
        j = Json{{"value", to_json(x)}, {"mod_theta", reduce_mod_theta(x).v}};
    } else {
        throw CLI::ValidationError("ring action must be gcd, units or reduce");
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_lattice(const std::string& name, std::ostream& out) {
    LatticePtr L = standard_lattice(name);
    Inertia s = L->signature();
    Json j = to_json(L);
    j["signature"] = Json::array({s.p, s.q, s.z});
    j["discriminant"] = L->discriminant();
    IMat q = L->underlying_integral_form();
    bool even = true;
    for (size_t i = 0; i < q.rows; ++i)
        if (q(i, i) % 2 != 0) even = false;
    j["underlying_form_even"] = even;
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_shortvec(const std::string& name, int64_t n, bool count_only, bool orbits,
                 std::ostream& out) {
    LatticePtr L = standard_lattice(name);
    std::vector<LatticeVector> vs = vectors_of_norm(L, n);
    Json j;
    j["lattice"] = name;
    j["norm"] = n;
    j["count"] = vs.size();
    if (orbits) {
        std::vector<LatticeVector> reps = unit_orbit_representatives(vs);
        j["orbit_count"] = reps.size();
        if (!count_only) {
            Json jr = Json::array();
            for (const auto& v : reps) jr.push_back(to_json(v));
            j["orbit_representatives"] = jr;
        }
    }
    if (!count_only) {
        Json jv = Json::array();
        for (const auto& v : vs) jv.push_back(to_json(v));
        j["vectors"] = jv;
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_group(const std::string& name, size_t cap, std::ostream& out) {
    LatticePtr L = standard_lattice(name);
    std::vector<LatticeVector> threes = vectors_of_norm(L, 3);
    std::vector<UnitaryMap> gens;
    for (const auto& r : unit_orbit_representatives(threes)) gens.push_back(triflection(L, r));
    gens.push_back(scalar_map(L, omega()));
    FiniteGroup g = generate_group(gens, cap);
    Json j;
    j["lattice"] = name;
    j["generators"] = gens.size();
    j["order"] = g.order();
    if (L->rank == 4) {
        std::set<uint32_t> reduced;
        for (const auto& m : g.elements) reduced.insert(reduce_map_mod_theta(UnitaryMap(L, m)).key());
        j["mod_theta_order"] = reduced.size();
    }
    Json orbs = Json::array();
    for (int64_t n : {int64_t{3}, int64_t{6}}) {
        std::vector<LatticeVector> vs = vectors_of_norm(L, n);
        if (vs.empty()) continue;
        std::vector<LatticeVector> orb = orbit(gens, vs[0], g.order() + 1);
        orbs.push_back(Json{{"seed_norm", n},
                            {"orbit_size", orb.size()},
                            {"stabilizer_order", g.order() / orb.size()}});
    }
    j["orbits"] = orbs;
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_classify(const std::string& zs, const std::string& rs, const std::string& name,
                 std::ostream& out) {
    LatticePtr L = standard_lattice(name);
    LatticeVector z = parse_vector_arg(L, zs);
    LatticeVector r = parse_vector_arg(L, rs);
    RelativePosition pos = relative_position(r, z);
    Json j;
    j["relative_position"] = to_string(pos);
    j["product"] = to_json(L->product(r, z));
    if (pos == RelativePosition::a) {
        j["rank2_type"] = "imprimitive-span";
    } else {
        j["rank2_type"] = to_string(rank2_type(L, z, r));
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_decompose(const std::string& zs, const std::string& mode, std::ostream& out) {
    LatticePtr L = lambda_lattice(4);
    LatticeVector z = parse_vector_arg(L, zs);
    std::vector<LatticeVector> threes = vectors_of_norm(L, 3);
    Json j;
    j["z"] = to_json(z);
    if (mode == "theta") {
        ThetaDecomposition d = theta_decompositions(z, threes);
        Json pairs = Json::array();
        for (const auto& [p, q] : d.pairs) pairs.push_back(Json::array({to_json(p), to_json(q)}));
        Json basis = Json::array();
        for (const auto& b : d.lz_basis) basis.push_back(to_json(b));
        j["mode"] = "theta";
        j["count"] = d.pairs.size();
        j["pairs"] = pairs;
        j["lz_basis"] = basis;
    } else if (mode == "perp") {
        auto pd = perpendicular_decompositions(z, threes);
        Json pairs = Json::array();
        for (const auto& [p, q] : pd) pairs.push_back(Json::array({to_json(p), to_json(q)}));
        j["mode"] = "perp";
        j["count"] = pd.size();
        j["pairs"] = pairs;
    } else {
        throw CLI::ValidationError("mode must be theta or perp");
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_dclass(const std::string& type, std::ostream& out) {
    IsotropicType t;
    if (type == "theta")
        t = IsotropicType::theta;
    else if (type == "zero" || type == "0")
        t = IsotropicType::zero;
    else
        throw CLI::ValidationError("type must be theta or zero");
    DClassProfile p = dclass_profile(t);
    Json j{{"type", to_string(t)},
           {"rank_i6", p.rank_i6},
           {"rank_i9", p.rank_i9},
           {"nine_lines", p.nine_lines},
           {"pool_size", p.pool_size},
           {"perpendicular", p.perpendicular}};
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_pham(std::ostream& out) {
    Json j;
    EMat g = gram_in_r_basis();
    Json gj = Json::array();
    for (size_t i = 0; i < 10; ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < 10; ++k) row.push_back(to_json(g(i, k)));
        gj.push_back(row);
    }
    j["gram"] = gj;
    bool ok = true;
    try {
        Json ju = Json::array();
        for (const Eis& u : unit_normalize_to_lambda10()) ju.push_back(to_json(u));
        j["normalizing_units"] = ju;
        j["normalized_to_chain_gram"] = true;
    } catch (const std::exception& e) {
        j["normalized_to_chain_gram"] = false;
        j["normalization_error"] = e.what();
        ok = false;
    }
    LatticePtr L = pham_lattice();
    Inertia s = L->signature();
    j["signature"] = Json::array({s.p, s.q, s.z});
    j["discriminant"] = L->discriminant();
    ok = ok && s == Inertia{9, 1, 0} && L->discriminant() == -243;

    BraidReport br = verify_braid_and_R();
    j["braid"] = Json{{"t_cubed_identity", br.t_cubed_identity},
                      {"braid_relations", br.braid_relations},
                      {"distant_commutations", br.distant_commutations},
                      {"r_is_tau_eta", br.r_is_tau_eta},
                      {"r_star_is_eta_inverse", br.r_star_is_eta_inverse},
                      {"r_rstar_is_omega", br.r_rstar_is_omega},
                      {"r_star_order_12", br.r_star_order_12}};
    ok = ok && br.all();

    EisensteinImage img = eisenstein_image();
    Json zc = Json::array(), uc = Json::array();
    for (const Eis& e : img.z) zc.push_back(to_json(e));
    for (const Eis& e : img.u) uc.push_back(to_json(e));
    j["eisenstein_image"] = Json{{"u", uc},
                                 {"z", zc},
                                 {"norm_u", img.norm_u},
                                 {"norm_z", img.norm_z},
                                 {"u_equals_2theta_z", img.u_equals_2theta_z}};
    ok = ok && img.u_equals_2theta_z && img.norm_u == 72 && img.norm_z == 6;

    IsotropicL0Report l0 = isotropic_l0_check();
    j["null_vector"] = Json{{"isotropic", l0.l0_isotropic},
                            {"perpendicular_to_non5_powers", l0.perp_to_non5_powers},
                            {"pairs_with_eta5", l0.pairs_with_eta5}};
    ok = ok && l0.all();

    IntegralPhamModule m = integral_pham_module();
    bool t6 = mat_pow(m.monodromy, 6) == IMat::identity(m.rank);
    bool t3 = mat_pow(m.monodromy, 3) != IMat::identity(m.rank);
    IMat n6 = mat_pow(m.monodromy, 6) - IMat::identity(m.rank);
    bool t6_unipotent = (n6 * n6 == IMat(m.rank, m.rank)) && rank_z(n6) == 1;
    j["integral_module"] = Json{{"rank", m.rank},
                                {"t6_identity", t6},
                                {"t3_nontrivial", t3},
                                {"t6_is_rank1_square_zero_transvection", t6_unipotent}};
    ok = ok && m.rank == 50 && t6 && t3;

    j["all_pass"] = ok;
    out << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_picard(std::ostream& out) {
    std::vector<I19Vector> roots = simple_root_basis();
    Json cart = Json::array();
    for (size_t i = 0; i < roots.size(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < roots.size(); ++k) row.push_back(-dot(roots[i], roots[k]));
        cart.push_back(row);
    }
    // expected affine E8 Cartan matrix: chain 1-...-8 with node 0 on node 3
    std::set<std::pair<size_t, size_t>> edges = {{0, 3}, {1, 2}, {2, 3}, {3, 4},
                                                 {4, 5}, {5, 6}, {6, 7}, {7, 8}};
    bool cartan_ok = true;
    for (size_t i = 0; i < 9; ++i)
        for (size_t k = 0; k < 9; ++k) {
            int64_t expect = i == k ? 2 : (edges.count({std::min(i, k), std::max(i, k)}) ? -1 : 0);
            if (-dot(roots[i], roots[k]) != expect) cartan_ok = false;
        }
    I19Vector f = anticanonical_f();
    bool f_ok = dot(f, f) == 0;
    Json j{{"cartan_matrix", cart},
           {"cartan_is_affine_e8", cartan_ok},
           {"f_isotropic", f_ok}};
    out << j.dump(2) << "\n";
    return (cartan_ok && f_ok) ? 0 : 1;
}

int cmd_git_stability(const std::string& f0s, const std::string& f1s, std::ostream& out) {
    BinaryForm f0 = form_from_json(4, Json::parse(f0s));
    BinaryForm f1 = form_from_json(6, Json::parse(f1s));
    Json j;
    j["pair_stability"] = to_string(pair_stability(f0, f1));
    if (!(f0.is_zero() && f1.is_zero())) {
        try {
            BinaryForm d = discriminant_form(f0, f1);
            MultiplicityProfile prof = multiplicity_profile(d);
            j["discriminant_profile"] = prof;
            j["divisor_stability"] = to_string(divisor_stability(prof));
        } catch (const std::domain_error& e) {
            j["discriminant_profile"] = nullptr;
            j["note"] = e.what();
        }
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_git_j(const std::string& ls, const std::string& ms, std::ostream& out) {
    auto [n, d] = minimal_ss_j_invariant(parse_rat_arg(ls), parse_rat_arg(ms));
    Json j{{"j", Json::array({n, d})}};
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_kodaira_type(const std::string& js, int deg, int chi, std::ostream& out) {
    JClass j;
    if (js == "inf" || js == "infinity")
        j = JClass::infinity;
    else if (js == "0" || js == "zero")
        j = JClass::zero;
    else if (js == "1" || js == "one")
        j = JClass::one;
    else if (js == "generic")
        j = JClass::generic;
    else
        throw CLI::ValidationError("j must be one of: 0, 1, inf, generic");
    KodairaType t = kodaira_type(j, deg, chi);
    Json out_j{{"type", t.name()},
               {"euler", euler_char(t)},
               {"root_rank", fiber_root_rank(t)}};
    out << out_j.dump(2) << "\n";
    return 0;
}

int cmd_kodaira_euler(const std::string& ts, std::ostream& out) {
    KodairaType t = KodairaType::parse(ts);
    Json j{{"type", t.name()}, {"euler", euler_char(t)}, {"root_rank", fiber_root_rank(t)}};
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_kodaira_enumerate(bool count_only, std::ostream& out) {
    std::vector<FiberConfiguration> cs = enumerate_configurations();
    Json j;
    j["note"] = "candidate configurations (necessary conditions only)";
    j["count"] = cs.size();
    if (!count_only) {
        Json arr = Json::array();
        for (const auto& c : cs) {
            Json names = Json::array();
            for (const auto& f : c.fibers) names.push_back(f.name());
            arr.push_back(Json{{"fibers", names}, {"j_degree", c.j_degree}});
        }
        j["configurations"] = arr;
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_verify_all(uint64_t seed, std::ostream& out) {
    std::vector<CheckResult> results = run_all_checks(seed);
    Json rep = report_to_json(results);
    out << rep.dump(2) << "\n";
    return rep["all_pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Eisenstein-lattice and elliptic-fibration toolkit"};
    app.require_subcommand(1);

    // ring
    auto* ring = app.add_subcommand("ring", "Eisenstein ring arithmetic");
    ring->require_subcommand(1);
    std::string ring_a, ring_b;
    auto* ring_gcd = ring->add_subcommand("gcd", "gcd of two elements, canonical associate");
    ring_gcd->add_option("--a", ring_a)->required();
    ring_gcd->add_option("--b", ring_b)->required();
    auto* ring_units = ring->add_subcommand("units", "the six units");
    auto* ring_reduce = ring->add_subcommand("reduce", "reduction mod theta");
    ring_reduce->add_option("--x", ring_a)->required();

    // lattice
    auto* lattice = app.add_subcommand("lattice", "standard lattices and invariants");
    lattice->require_subcommand(1);
    std::string lat_name = "lambda4";
    auto* lat_info = lattice->add_subcommand("info", "rank, Gram, signature, discriminant");
    lat_info->add_option("--name", lat_name)->required();

    // shortvec
    auto* shortvec = app.add_subcommand("shortvec", "enumerate vectors of a given norm");
    std::string sv_name = "lambda4";
    int64_t sv_norm = 3;
    bool sv_count_only = false, sv_orbits = false;
    shortvec->add_option("--lattice", sv_name)->required();
    shortvec->add_option("--norm", sv_norm)->required();
    shortvec->add_flag("--count-only", sv_count_only);
    shortvec->add_flag("--orbits", sv_orbits);

    // group
    auto* group = app.add_subcommand("group", "finite isometry groups");
    group->require_subcommand(1);
    std::string gr_name = "lambda4";
    size_t gr_cap = 200000;
    auto* gr_gen = group->add_subcommand("generate", "closure of triflections and scalars");
    gr_gen->add_option("--lattice", gr_name)->required();
    gr_gen->add_option("--cap", gr_cap);

    // classify
    auto* classify = app.add_subcommand("classify", "pair classification");
    classify->require_subcommand(1);
    std::string cl_z, cl_r, cl_lat = "lambda4";
    auto* cl_pair = classify->add_subcommand("pair", "relative position and rank-2 type");
    cl_pair->add_option("--z", cl_z)->required();
    cl_pair->add_option("--r", cl_r)->required();
    cl_pair->add_option("--lattice", cl_lat);
    std::string dc_type;
    auto* cl_dclass = classify->add_subcommand("dclass", "cusp profile of an isotropic type");
    cl_dclass->add_option("--type", dc_type)->required();

    // decompose
    auto* decompose = app.add_subcommand("decompose", "6-vector decompositions");
    decompose->require_subcommand(1);
    std::string de_z, de_mode = "theta";
    auto* de_six = decompose->add_subcommand("six", "theta-pair or perpendicular splittings");
    de_six->add_option("--z", de_z)->required();
    de_six->add_option("--mode", de_mode);

    // pham / picard
    auto* pham = app.add_subcommand("pham", "cyclic-cover module checks");
    pham->require_subcommand(1);
    auto* pham_verify = pham->add_subcommand("verify", "run all module checks");
    auto* picard = app.add_subcommand("picard", "Picard lattice checks");
    picard->require_subcommand(1);
    auto* picard_verify = picard->add_subcommand("verify", "Cartan matrix and reflection checks");

    // git
    auto* git = app.add_subcommand("git", "stability of binary forms");
    git->require_subcommand(1);
    std::string gf0, gf1, glam, gmu;
    auto* git_st = git->add_subcommand("stability", "pair and divisor stability");
    git_st->add_option("--f0", gf0)->required();
    git_st->add_option("--f1", gf1)->required();
    auto* git_j = git->add_subcommand("j", "boundary J-invariant of (lambda f^2, mu f^3)");
    git_j->add_option("--lambda", glam)->required();
    git_j->add_option("--mu", gmu)->required();

    // kodaira
    auto* kodaira = app.add_subcommand("kodaira", "Kodaira fiber combinatorics");
    kodaira->require_subcommand(1);
    std::string ko_j, ko_type;
    int ko_deg = 0, ko_chi = 0;
    bool ko_count_only = false;
    auto* ko_ty = kodaira->add_subcommand("type", "fiber type from (j, degree, euler)");
    ko_ty->add_option("--j", ko_j)->required();
    ko_ty->add_option("--deg", ko_deg)->required();
    ko_ty->add_option("--chi", ko_chi)->required();
    auto* ko_eu = kodaira->add_subcommand("euler", "Euler characteristic and root rank");
    ko_eu->add_option("--type", ko_type)->required();
    auto* ko_en = kodaira->add_subcommand("enumerate", "candidate fiber configurations");
    ko_en->add_flag("--count-only", ko_count_only);

    // verify-all
    auto* verify_all = app.add_subcommand("verify-all", "run the full verification ledger");
    uint64_t seed = 0;
    verify_all->add_option("--seed", seed, "seed for randomized property checks only");

    std::vector<const char*> argv;
    argv.push_back("eislat");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (ring_gcd->parsed()) return cmd_ring("gcd", ring_a, ring_b, out);
        if (ring_units->parsed()) return cmd_ring("units", "", "", out);
        if (ring_reduce->parsed()) return cmd_ring("reduce", ring_a, "", out);
        if (lat_info->parsed()) return cmd_lattice(lat_name, out);
        if (shortvec->parsed()) return cmd_shortvec(sv_name, sv_norm, sv_count_only, sv_orbits, out);
        if (gr_gen->parsed()) return cmd_group(gr_name, gr_cap, out);
        if (cl_pair->parsed()) return cmd_classify(cl_z, cl_r, cl_lat, out);
        if (cl_dclass->parsed()) return cmd_dclass(dc_type, out);
        if (de_six->parsed()) return cmd_decompose(de_z, de_mode, out);
        if (pham_verify->parsed()) return cmd_pham(out);
        if (picard_verify->parsed()) return cmd_picard(out);
        if (git_st->parsed()) return cmd_git_stability(gf0, gf1, out);
        if (git_j->parsed()) return cmd_git_j(glam, gmu, out);
        if (ko_ty->parsed()) return cmd_kodaira_type(ko_j, ko_deg, ko_chi, out);
        if (ko_eu->parsed()) return cmd_kodaira_euler(ko_type, out);
        if (ko_en->parsed()) return cmd_kodaira_enumerate(ko_count_only, out);
        if (verify_all->parsed()) return cmd_verify_all(seed, out);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json j{{"status", "internal-failure"}, {"error", e.what()}};
        out << j.dump(2) << "\n";
        err << "internal check failure: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace eislat
