// Command line front end: check/construct/solve on algebra files.
//
// Exit codes: 0 success (all checked identities hold), 1 identity violation
// (a failing report or a mathematically invalid input), 2 input error
// (bad file, bad JSON, bad parameters).

#include <bihom/checks.hpp>
#include <bihom/cohomology.hpp>
#include <bihom/constructions.hpp>
#include <bihom/derivations.hpp>
#include <bihom/errors.hpp>
#include <bihom/io.hpp>
#include <bihom/modules.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

namespace {

using namespace bihom;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        save_text(out_path, text);
}

int report_exit(const CheckReport& rep) {
    return rep.passed ? 0 : 1;
}

int run_check(const std::string& alg_path, bool skip_comm, bool as_json) {
    const BiHomPoissonAlgebra a = load_algebra(alg_path);
    CheckOptions opt;
    opt.skip_commutativity = skip_comm;
    const CheckReport rep = check_bihom_poisson(a, opt);
    std::cout << (as_json ? report_to_json_text(rep) : report_to_text(rep, &a.basis_names));
    return report_exit(rep);
}

int run_flex(const std::string& alg_path, bool as_json) {
    const BiHomPoissonAlgebra a = load_algebra(alg_path);
    CheckOptions opt;
    CheckReport rep = check_flexible(a, opt);
    rep.merge(check_admissible(a, opt), opt.violation_cap);
    rep.merge(check_cyclic_associator(a, opt), opt.violation_cap);
    const bool regular = is_invertible(a.alpha) && is_invertible(a.beta);
    if (regular) rep.merge(check_polarized_flexibility(a, opt), opt.violation_cap);
    if (as_json) {
        std::cout << report_to_json_text(rep);
    } else {
        std::cout << report_to_text(rep, &a.basis_names);
        if (!regular)
            std::cout << "note: twist maps not invertible, polarized flexibility skipped\n";
    }
    return report_exit(rep);
}

int run_twist(const std::string& alg_path, const std::string& ap_path, const std::string& bp_path,
              const std::string& out_path) {
    const BiHomPoissonAlgebra a = load_algebra(alg_path);
    TwistingPair tp{load_matrix(ap_path), load_matrix(bp_path)};
    emit(algebra_to_json_text(yau_twist(a, tp)), out_path);
    return 0;
}

int run_polarize(const std::string& alg_path, const std::string& out_path) {
    const BiHomPoissonAlgebra a = load_algebra(alg_path);
    emit(algebra_to_json_text(polarize_minus(a)), out_path);
    return 0;
}

int run_derive(const std::string& alg_path, const std::string& space, unsigned k, unsigned l,
               bool as_json) {
    const BiHomPoissonAlgebra a = load_algebra(alg_path);
    OperatorSpaceKind kind;
    if (space == "der")
        kind = OperatorSpaceKind::Derivation;
    else if (space == "gder")
        kind = OperatorSpaceKind::GeneralizedDerivation;
    else if (space == "qder")
        kind = OperatorSpaceKind::QuasiDerivation;
    else if (space == "c")
        kind = OperatorSpaceKind::Centroid;
    else if (space == "qc")
        kind = OperatorSpaceKind::QuasiCentroid;
    else if (space == "zder")
        kind = OperatorSpaceKind::CentralDerivation;
    else if (space == "commutant")
        kind = OperatorSpaceKind::Commutant;
    else
        throw ParseError("--space must be one of der|gder|qder|c|qc|zder|commutant");

    const OperatorSpace s = solve_space(a, kind, k, l);
    if (as_json) {
        nlohmann::json j;
        j["space"] = operator_space_label(s.kind);
        j["k"] = s.k;
        j["l"] = s.l;
        j["dim"] = s.dim();
        nlohmann::json basis = nlohmann::json::array();
        for (std::size_t t = 0; t < s.dim(); ++t) {
            const RatMatrix m = s.matrix_at(t);
            nlohmann::json rows = nlohmann::json::array();
            for (std::size_t r = 0; r < m.rows(); ++r) {
                nlohmann::json row = nlohmann::json::array();
                for (std::size_t c2 = 0; c2 < m.cols(); ++c2)
                    row.push_back(rat_to_string(m(r, c2)));
                rows.push_back(std::move(row));
            }
            basis.push_back(std::move(rows));
        }
        j["basis"] = std::move(basis);
        if (kind == OperatorSpaceKind::GeneralizedDerivation ||
            kind == OperatorSpaceKind::QuasiDerivation)
            j["companion_only_dim"] = s.companion_only_dim;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << operator_space_label(s.kind) << "(k=" << s.k << ", l=" << s.l
                  << "): dimension " << s.dim() << "\n";
        for (std::size_t t = 0; t < s.dim(); ++t) {
            std::cout << "basis[" << t << "]:\n";
            const RatMatrix m = s.matrix_at(t);
            for (std::size_t r = 0; r < m.rows(); ++r) {
                std::cout << "  ";
                for (std::size_t c2 = 0; c2 < m.cols(); ++c2)
                    std::cout << rat_to_string(m(r, c2)) << (c2 + 1 < m.cols() ? " " : "\n");
            }
        }
        if (s.companion_only_dim > 0)
            std::cout << "(plus " << s.companion_only_dim
                      << " joint solutions with zero leading component)\n";
    }
    return 0;
}

int run_centralizer(const std::string& alg_path, bool as_json) {
    const BiHomPoissonAlgebra a = load_algebra(alg_path);
    const SubspaceBasis z = centralizer(a);
    if (as_json) {
        std::cout << subspace_to_json_text(z);
    } else {
        std::cout << "centralizer dimension " << z.dim() << "\n";
        for (const RatVec& v : z.vectors) {
            std::cout << "  [";
            for (std::size_t i = 0; i < v.size(); ++i)
                std::cout << rat_to_string(v[i]) << (i + 1 < v.size() ? ", " : "");
            std::cout << "]\n";
        }
    }
    return 0;
}

int run_cohomology(const std::string& alg_path, bool strict, bool as_json) {
    const BiHomPoissonAlgebra a = load_algebra(alg_path);
    const CohomologyReport rep = cohomology_dims(a, strict);
    std::cout << (as_json ? cohomology_report_to_json_text(rep) : cohomology_report_to_text(rep));
    return 0;
}

int run_module_check(const std::string& alg_path, const std::string& mod_path, bool as_json) {
    const BiHomPoissonAlgebra a = load_algebra(alg_path);
    const ModuleFile mf = load_module(mod_path, a);
    const CheckReport rep = std::holds_alternative<LeftModuleRep>(mf)
                                ? check_left_module(std::get<LeftModuleRep>(mf))
                                : check_right_module(std::get<RightModuleRep>(mf));
    std::cout << (as_json ? report_to_json_text(rep) : report_to_text(rep));
    return report_exit(rep);
}

int run_semidirect(const std::string& alg_path, const std::string& mod_path,
                   const std::string& out_path) {
    const BiHomPoissonAlgebra a = load_algebra(alg_path);
    const ModuleFile mf = load_module(mod_path, a);
    if (!std::holds_alternative<LeftModuleRep>(mf))
        throw ParseError("semidirect: a left module file is required");
    emit(algebra_to_json_text(semidirect_product(a, std::get<LeftModuleRep>(mf))), out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-constant checks and constructions for BiHom-Poisson algebras"};
    app.require_subcommand(1);

    std::string alg_path, mod_path, out_path, ap_path, bp_path, lie_path;
    std::string space = "der", a_str = "2", b_str = "3", lambda_str, gamma_str;
    unsigned k = 0, l = 0, deg = 3;
    bool skip_comm = false, as_json = false, strict = false;

    auto* c_check = app.add_subcommand("check", "full BiHom-Poisson identity report");
    c_check->add_option("algebra", alg_path)->required();
    c_check->add_flag("--skip-commutativity", skip_comm,
                      "check the non-BiHom-commutative variant");
    c_check->add_flag("--json", as_json);

    auto* c_flex = app.add_subcommand("flex",
                                      "flexibility, admissibility and cyclic-associator report");
    c_flex->add_option("algebra", alg_path)->required();
    c_flex->add_flag("--json", as_json);

    auto* c_twist = app.add_subcommand("twist", "compose both operations with a twisting pair");
    c_twist->add_option("algebra", alg_path)->required();
    c_twist->add_option("--aprime", ap_path)->required();
    c_twist->add_option("--bprime", bp_path)->required();
    c_twist->add_option("-o,--output", out_path);

    auto* c_pol = app.add_subcommand("polarize", "emit A^- with the polarized bracket");
    c_pol->add_option("algebra", alg_path)->required();
    c_pol->add_option("-o,--output", out_path);

    auto* c_der = app.add_subcommand("derive", "solve a derivation-type operator space");
    c_der->add_option("algebra", alg_path)->required();
    c_der->add_option("--space", space, "der|gder|qder|c|qc|zder|commutant")->required();
    c_der->add_option("--k", k);
    c_der->add_option("--l", l);
    c_der->add_flag("--json", as_json);

    auto* c_cent = app.add_subcommand("centralizer", "basis of Z(A)");
    c_cent->add_option("algebra", alg_path)->required();
    c_cent->add_flag("--json", as_json);

    auto* c_coh = app.add_subcommand("cohomology", "cochain, cocycle and H^2 dimensions");
    c_coh->add_option("algebra", alg_path)->required();
    c_coh->add_flag("--strict", strict, "impose the derivation-in-each-argument clause");
    c_coh->add_flag("--json", as_json);

    auto* c_mod = app.add_subcommand("module-check", "left/right module identity report");
    c_mod->add_option("algebra", alg_path)->required();
    c_mod->add_option("module", mod_path)->required();
    c_mod->add_flag("--json", as_json);

    auto* c_semi = app.add_subcommand("semidirect", "emit the semidirect product algebra");
    c_semi->add_option("algebra", alg_path)->required();
    c_semi->add_option("module", mod_path)->required();
    c_semi->add_option("-o,--output", out_path);

    auto* c_ex = app.add_subcommand("example", "emit fixture algebra files");
    c_ex->require_subcommand(1);
    auto* ex_e1 = c_ex->add_subcommand("e1", "the 2-dimensional regular family");
    ex_e1->add_option("--a", a_str)->required();
    ex_e1->add_option("--b", b_str)->required();
    ex_e1->add_option("-o,--output", out_path);
    auto* ex_sym = c_ex->add_subcommand("sym", "truncated symmetric Poisson algebra of a Lie algebra");
    ex_sym->add_option("--lie", lie_path)->required();
    ex_sym->add_option("--deg", deg)->required();
    ex_sym->add_option("-o,--output", out_path);
    auto* ex_sl2 = c_ex->add_subcommand("sl2", "truncated S(sl2), optionally diagonally twisted");
    ex_sl2->add_option("--deg", deg)->required();
    ex_sl2->add_option("--lambda", lambda_str);
    ex_sl2->add_option("--gamma", gamma_str);
    ex_sl2->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_check) return run_check(alg_path, skip_comm, as_json);
        if (*c_flex) return run_flex(alg_path, as_json);
        if (*c_twist) return run_twist(alg_path, ap_path, bp_path, out_path);
        if (*c_pol) return run_polarize(alg_path, out_path);
        if (*c_der) return run_derive(alg_path, space, k, l, as_json);
        if (*c_cent) return run_centralizer(alg_path, as_json);
        if (*c_coh) return run_cohomology(alg_path, strict, as_json);
        if (*c_mod) return run_module_check(alg_path, mod_path, as_json);
        if (*c_semi) return run_semidirect(alg_path, mod_path, out_path);
        if (*ex_e1) {
            emit(algebra_to_json_text(
                     build_example_e1(rat_from_string(a_str), rat_from_string(b_str))),
                 out_path);
            return 0;
        }
        if (*ex_sym) {
            emit(algebra_to_json_text(build_truncated_sym_poisson(load_lie(lie_path), deg)),
                 out_path);
            return 0;
        }
        if (*ex_sl2) {
            BiHomPoissonAlgebra a = build_truncated_sym_poisson(sl2_structure(), deg);
            if (!lambda_str.empty() || !gamma_str.empty()) {
                const Rat lam = lambda_str.empty() ? Rat(1) : rat_from_string(lambda_str);
                const Rat gam = gamma_str.empty() ? Rat(1) : rat_from_string(gamma_str);
                if (lam == 0 || gam == 0)
                    throw ParameterOutOfDomain("sl2 twist: lambda and gamma must be nonzero");
                const TwistingPair tp{
                    diagonal_monomial_map(3, deg, {lam, 1 / lam, Rat(1)}),
                    diagonal_monomial_map(3, deg, {gam, 1 / gam, Rat(1)})};
                a = yau_twist(a, tp);
            }
            emit(algebra_to_json_text(a), out_path);
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
