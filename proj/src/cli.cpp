#include "cmds/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmds/construct.hpp"
#include "cmds/error.hpp"
#include "cmds/json_io.hpp"
#include "cmds/lovett.hpp"
#include "cmds/multipoly.hpp"
#include "cmds/setsystem.hpp"
#include "cmds/unipoly.hpp"

namespace cmds::cli {

namespace {

std::vector<FieldElem> parse_points(const std::string& text, const FieldCtx& ctx) {
    std::vector<std::string> tokens;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            tokens.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    tokens.push_back(cur);

    std::vector<FieldElem> pts;
    pts.reserve(tokens.size());
    for (const auto& tok : tokens) {
        if (tok.empty()) throw Error("UsageError", "empty entry in --points");
        if (tok.front() == '(') {
            if (tok.back() != ')') throw Error("UsageError", "unterminated coordinate tuple in --points");
            FieldElem a;
            std::stringstream ss(tok.substr(1, tok.size() - 2));
            std::string part;
            while (std::getline(ss, part, ';')) {
                try {
                    a.coords.push_back(static_cast<std::uint32_t>(std::stoul(part)));
                } catch (...) {
                    throw Error("UsageError", "bad coordinate '" + part + "' in --points");
                }
            }
            if (!ctx.valid(a))
                throw Error("UsageError", "tuple " + tok + " is not an element of GF(" + std::to_string(ctx.q()) + ")");
            pts.push_back(std::move(a));
        } else {
            unsigned long long v = 0;
            try {
                v = std::stoull(tok);
            } catch (...) {
                throw Error("UsageError", "bad point '" + tok + "'");
            }
            if (v >= ctx.q())
                throw Error("UsageError", "point " + tok + " outside GF(" + std::to_string(ctx.q()) + ")");
            pts.push_back(ctx.element(v));
        }
    }
    return pts;
}

void emit(std::ostream& out, const json& j, bool pretty) {
    out << j.dump(pretty ? 2 : -1) << '\n';
}

json caveat_primes_json(const std::vector<mpz_class>& primes) {
    json arr = json::array();
    for (const auto& p : primes) arr.push_back(p.get_str());
    return arr;
}

const char* clause_name(int clause) {
    switch (clause) {
        case 1: return "I";
        case 2: return "II";
        case 3: return "III";
    }
    return "?";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for MDS generator matrices with prescribed zero patterns"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    // construct
    auto* c_construct = app.add_subcommand("construct", "build an MDS matrix with the given zero pattern");
    std::string method, sets_path, field_spec, points_text;
    bool reorder = false;
    c_construct->add_option("--method", method, "thm5 (nested chain, q >= n) or thm7 (staircase, q >= n+1)")
        ->required()
        ->check(CLI::IsMember({"thm5", "thm7"}));
    c_construct->add_option("--sets", sets_path, "set system JSON file")->required();
    c_construct->add_option("--q", field_spec, "field order, e.g. 7 or q=9")->required();
    c_construct->add_option("--points", points_text, "evaluation points, e.g. 1,0,3 or (1;0),(0;1)");
    c_construct->add_flag("--reorder", reorder, "search for a row order satisfying the hypothesis first");

    // verify-mds
    auto* c_verify = app.add_subcommand("verify-mds", "check that every k x k minor is invertible");
    std::string matrix_path;
    c_verify->add_option("--matrix", matrix_path, "matrix JSON file")->required();

    // check-mds-condition
    auto* c_mdscond = app.add_subcommand("check-mds-condition", "check |I| + |∩ S_i| <= k for all subsets");
    std::string mdscond_path;
    c_mdscond->add_option("--sets", mdscond_path, "set system JSON file")->required();

    // symbolic-det
    auto* c_symdet = app.add_subcommand("symbolic-det", "determinant of the coefficient matrix of p(S_1)..p(S_k)");
    std::string symdet_path, witness_mode = "auto";
    c_symdet->add_option("--sets", symdet_path, "set system JSON file (multisets allowed)")->required();
    c_symdet->add_option("--witness", witness_mode, "witness chain selection (only \"auto\")")
        ->check(CLI::IsMember({"auto"}));

    // vk-check
    auto* c_vk = app.add_subcommand("vk-check", "check the vector-set property and report the minimal level");
    std::string vk_path;
    int vk_k = 0;
    std::optional<int> vk_l;
    c_vk->add_option("--vectors", vk_path, "vector set JSON file")->required();
    c_vk->add_option("--k", vk_k, "parameter k")->required();
    c_vk->add_option("--l", vk_l, "level (defaults to n, the plain property)");

    // independence
    auto* c_indep = app.add_subcommand("independence", "rank of the generated polynomial family");
    std::string indep_path;
    int indep_k = 0;
    c_indep->add_option("--vectors", indep_path, "vector set JSON file")->required();
    c_indep->add_option("--k", indep_k, "parameter k")->required();

    // counterexample
    auto* c_counter = app.add_subcommand("counterexample", "null certificate for the dependent family");
    int counter_b = 0;
    c_counter->add_option("--b", counter_b, "family parameter b >= 2")->required();

    // l2-sweep
    auto* c_sweep = app.add_subcommand("l2-sweep", "exhaustive independence check over small vector sets");
    SweepConfig sweep_cfg;
    c_sweep->add_option("--kmax", sweep_cfg.k_max, "largest k")->required();
    c_sweep->add_option("--nmax", sweep_cfg.n_max, "largest dimension")->required();
    c_sweep->add_option("--mmax", sweep_cfg.m_max, "largest set size")->required();
    c_sweep->add_option("--l", sweep_cfg.l, "shape level (default 2)");
    c_sweep->add_option("--cap", sweep_cfg.entry_cap, "entry cap (default k-1)");

    // zero-pattern
    auto* c_zero = app.add_subcommand("zero-pattern", "read off the zero pattern of a matrix");
    std::string zero_path;
    c_zero->add_option("--matrix", zero_path, "matrix JSON file")->required();

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    try {
        std::vector<const char*> argv;
        argv.push_back("cmds");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "UsageError: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(c_construct)) {
            SetSystem s = set_system_from_json(load_json_file(sets_path));
            FieldCtx ctx = parse_field_spec(field_spec);
            std::optional<std::vector<int>> perm;
            if (reorder) {
                perm = find_construction_order(s, method == "thm5" ? OrderMode::nested : OrderMode::staircase);
                if (!perm) throw Error("HypothesisViolated", "no row ordering satisfies the required hypothesis");
                s = apply_order(s, *perm);
            }
            std::optional<std::vector<FieldElem>> pts;
            if (!points_text.empty()) pts = parse_points(points_text, ctx);
            FieldMatrix A = method == "thm5" ? construct_nested(s, ctx, pts) : construct_staircase(s, ctx, pts);
            json j = matrix_to_json(A);
            if (perm) j["row_order"] = *perm;
            emit(out, j, pretty);
            return 0;
        }

        if (app.got_subcommand(c_verify)) {
            FieldMatrix A = matrix_from_json(load_json_file(matrix_path));
            auto res = verify_mds(A);
            json j;
            j["ok"] = res.ok;
            if (!res.ok) j["singular_columns"] = res.singular_columns;
            emit(out, j, pretty);
            return res.ok ? 0 : 1;
        }

        if (app.got_subcommand(c_mdscond)) {
            SetSystem s = set_system_from_json(load_json_file(mdscond_path));
            auto res = check_mds_condition(s);
            json j;
            j["ok"] = res.ok;
            if (!res.ok) j["violating"] = res.violating;
            emit(out, j, pretty);
            return res.ok ? 0 : 1;
        }

        if (app.got_subcommand(c_symdet)) {
            SetSystem s = set_system_from_json(load_json_file(symdet_path));
            const int k = s.k();
            std::vector<SymUniPoly> P;
            P.reserve(k);
            for (const auto& set : s.sets) P.push_back(poly_from_roots(set, s.n));
            MultiPoly direct = bareiss_det(coefficient_matrix(P, k));
            json j;
            j["n"] = s.n;
            j["k"] = k;
            j["det"] = direct.str();
            auto w = find_witness_chain(s);
            if (!w) {
                j["witness"] = nullptr;
                j["factors"] = nullptr;
                j["matches_direct_det"] = nullptr;
                emit(out, j, pretty);
                return 0;
            }
            MultiPoly triangular = triangular_det(s, *w);
            j["witness"] = w->xi;
            json factors = json::array();
            for (int i = 2; i <= k; ++i) {
                int xi = w->xi[k - i];
                for (int root : multiset_diff(s.sets[i - 1], w->T(i, k)))
                    factors.push_back("x" + std::to_string(xi) + " - x" + std::to_string(root));
            }
            j["factors"] = factors;
            bool matches = triangular == direct;
            j["matches_direct_det"] = matches;
            emit(out, j, pretty);
            return matches ? 0 : 1;
        }

        if (app.got_subcommand(c_vk)) {
            VecSet V = vec_set_from_json(load_json_file(vk_path));
            int l = vk_l.value_or(V.n);
            auto res = check_vlk(V, vk_k, l);
            json j;
            j["k"] = vk_k;
            j["l"] = l;
            j["ok"] = res.ok;
            if (!res.ok) {
                j["failed_clause"] = clause_name(res.failed_clause);
                if (res.failed_clause == 2)
                    j["witness"] = res.witness_subset;
                else
                    j["witness"] = res.witness_index;
            }
            auto ml = min_level(V, vk_k);
            j["min_level"] = ml ? json(*ml) : json(nullptr);
            emit(out, j, pretty);
            return res.ok ? 0 : 1;
        }

        if (app.got_subcommand(c_indep)) {
            VecSet V = vec_set_from_json(load_json_file(indep_path));
            auto rep = independence_rank(polynomial_family(V, indep_k), indep_k);
            json j;
            j["k"] = indep_k;
            j["count"] = rep.count;
            j["rank"] = rep.rank;
            j["independent"] = rep.independent;
            j["caveat_primes"] = caveat_primes_json(rep.caveat_primes);
            emit(out, j, pretty);
            return rep.independent ? 0 : 1;
        }

        if (app.got_subcommand(c_counter)) {
            auto cert = null_certificate(counter_b);
            json j;
            j["b"] = cert.b;
            json c = json::array();
            for (const auto& v : cert.c) c.push_back(v.get_str());
            j["c"] = c;
            json u = json::array();
            for (const auto& p : cert.u) u.push_back(p.str());
            j["u"] = u;
            j["rank"] = cert.rank;
            j["verified"] = cert.verified;
            emit(out, j, pretty);
            return cert.verified ? 0 : 1;
        }

        if (app.got_subcommand(c_sweep)) {
            auto rep = independence_sweep(sweep_cfg);
            json j;
            j["k_max"] = sweep_cfg.k_max;
            j["n_max"] = sweep_cfg.n_max;
            j["m_max"] = sweep_cfg.m_max;
            j["l"] = sweep_cfg.l;
            j["enumerated"] = rep.enumerated;
            j["satisfying"] = rep.satisfying;
            j["violation_count"] = rep.violations.size();
            json viols = json::array();
            for (const auto& v : rep.violations) {
                json jv;
                jv["k"] = v.k;
                jv["n"] = v.n;
                jv["vectors"] = v.vectors;
                jv["rank"] = v.rank;
                jv["count"] = v.count;
                viols.push_back(std::move(jv));
            }
            j["violations"] = viols;
            emit(out, j, pretty);
            return rep.violations.empty() ? 0 : 1;
        }

        if (app.got_subcommand(c_zero)) {
            FieldMatrix A = matrix_from_json(load_json_file(zero_path));
            emit(out, set_system_to_json(zero_pattern(A)), pretty);
            return 0;
        }
    } catch (const Error& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        err << "UsageError: " << e.what() << '\n';
        return 2;
    }
    err << "UsageError: no subcommand\n";
    return 2;
}

} // namespace cmds::cli
