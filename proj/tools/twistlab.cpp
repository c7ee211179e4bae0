// Command-line driver: catalog listing, individual checks, full verification
// runs, dual-table and r-matrix computation, and expression evaluation.
//
// Exit codes: 0 all requested checks pass, 1 check failure, 2 usage error,
// 3 internal error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "twistlab/io.hpp"
#include "twistlab/verify.hpp"

using namespace twistlab;

namespace {

Bindings parse_bindings(const std::vector<std::string>& raw) {
    Bindings out;
    for (const auto& kv : raw) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--param expects name=value, got '" + kv + "'");
        std::string key = kv.substr(0, eq);
        auto p = param_from_name(key);
        if (!p) throw CLI::ValidationError("unknown parameter '" + key + "'");
        out[*p] = parse_scalar(kv.substr(eq + 1));
    }
    return out;
}

std::vector<std::string> split_reps(const std::string& reps) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= reps.size()) {
        auto comma = reps.find(',', start);
        std::string piece = reps.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) out.push_back(piece);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    for (const auto& r : out) rep_by_name(r);  // validates
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw error("cannot open output path '" + out_path + "'");
    f << text;
}

std::string render_reports(const std::vector<Report>& reports, const std::string& format,
                           bool with_timing) {
    if (format == "json") return reports_to_json(reports, with_timing).dump(2) + "\n";
    return reports_to_markdown(reports, with_timing);
}

int exit_code(const std::vector<Report>& reports) {
    for (const auto& r : reports)
        if (r.status == "error") return 3;
    for (const auto& r : reports)
        if (r.status == "fail") return 1;
    return 0;
}

std::vector<Report> run_named_check(const std::string& which, const std::string& twist,
                                    const std::string& table, const std::string& rname,
                                    const Bindings& b, const std::vector<std::string>& fams) {
    std::vector<Report> out;
    auto for_fams = [&](auto&& fn) {
        for (const auto& fname : fams) {
            RepFamily fam{fname, &rep_by_name(fname)};
            fn(fam);
        }
    };
    if (which == "all") return run_all(RunOptions{b, fams});
    if (which == "twist-eq") {
        TwistDef f = get_twist(twist, b);
        for_fams([&](const RepFamily& fam) {
            if (f.base.empty()) {
                out.push_back(check_twist_equation(f, fam));
            } else {
                TwistDef base = get_twist(f.base, b);
                out.push_back(check_twist_equation(f, fam, &base));
            }
        });
    } else if (which == "normalization") {
        out.push_back(check_normalization(get_twist(twist, b)));
    } else if (which == "factorizable") {
        TwistDef f = get_twist(twist, b);
        for_fams([&](const RepFamily& fam) {
            out.push_back(check_factorizable(f, FactorSide::Left, fam));
            out.push_back(check_factorizable(f, FactorSide::Right, fam));
        });
    } else if (which == "triangular") {
        for_fams([&](const RepFamily& fam) { out.push_back(check_triangular(get_twist(twist, b), fam)); });
    } else if (which == "qybe") {
        for_fams([&](const RepFamily& fam) { out.push_back(check_qybe(get_twist(twist, b), fam)); });
    } else if (which == "closed-R") {
        for_fams([&](const RepFamily& fam) {
            out.push_back(check_closed_form_R(twist.empty() ? "Pprime" : twist, fam));
        });
    } else if (which == "coproduct-table") {
        for_fams([&](const RepFamily& fam) {
            out.push_back(check_coproduct_table(get_table(table), fam, b));
        });
    } else if (which == "antipode") {
        for_fams([&](const RepFamily& fam) { out.push_back(check_antipode(get_twist(twist, b), fam)); });
    } else if (which == "dual-table") {
        out.push_back(check_dual_table(table.empty() ? rname : table, b));
    } else if (which == "cybe") {
        out.push_back(check_cybe(rname, b));
    } else if (which == "mcybe-invariance") {
        out.push_back(check_mcybe_invariance());
    } else if (which == "pencil") {
        out.push_back(check_pencil());
    } else if (which == "similarity") {
        out.push_back(check_similarity());
    } else if (which == "reparametrization") {
        out.push_back(check_reparametrization());
    } else if (which == "composite") {
        for_fams([&](const RepFamily& fam) { out.push_back(check_composite(fam)); });
    } else if (which == "canonical-parameter") {
        for_fams([&](const RepFamily& fam) { out.push_back(check_canonical_parameter(fam)); });
    } else if (which == "involution") {
        for_fams([&](const RepFamily& fam) { out.push_back(check_involution(fam)); });
    } else {
        throw CLI::ValidationError(
            "unknown check '" + which +
            "' (expected: all, twist-eq, normalization, factorizable, triangular, qybe, closed-R, "
            "coproduct-table, antipode, dual-table, cybe, mcybe-invariance, pencil, similarity, "
            "reparametrization, composite, canonical-parameter, involution)");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twistlab: exact verification of twist deformations of U(sl(3))"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "md", out_path, reps = "fund,dual";
    std::vector<std::string> params;
    bool no_timing = false, verbose = false;
    app.add_option("--format", format, "output format: json or md")->check(CLI::IsMember({"json", "md"}));
    app.add_option("--out", out_path, "write output to this path instead of stdout");
    app.add_option("--param", params, "bind a parameter, e.g. --param lambda=1/2")->take_all();
    app.add_option("--reps", reps,
                   "comma-separated representation families for matrix checks (fund, dual, mixed; "
                   "mixed runs the two-leg conjugation checks only)");
    app.add_flag("--no-timing", no_timing, "zero the elapsed_ms fields for byte-stable output");
    app.add_flag("-v,--verbose", verbose, "print per-check progress to stderr");

    auto* list_cmd = app.add_subcommand("list", "list catalog entries");

    auto* verify_cmd = app.add_subcommand("verify", "run one named check or the whole suite");
    std::string check_name, twist_name, table_name, r_name;
    verify_cmd->add_option("check", check_name, "check name or 'all'")->required();
    verify_cmd->add_option("--twist", twist_name, "catalog twist name");
    verify_cmd->add_option("--table", table_name, "catalog table name");
    verify_cmd->add_option("--r", r_name, "catalog r-matrix name");

    auto* dual_cmd = app.add_subcommand("dual", "compute the dual bracket table of an r-matrix");
    std::string dual_r, dual_r_file;
    dual_cmd->add_option("--r", dual_r, "catalog r-matrix name");
    dual_cmd->add_option("--r-file", dual_r_file, "JSON file with a user-supplied r-matrix");

    auto* cybe_cmd = app.add_subcommand("cybe", "evaluate the classical Yang-Baxter bracket");
    std::string cybe_r, cybe_r_file;
    cybe_cmd->add_option("--r", cybe_r, "catalog r-matrix name");
    cybe_cmd->add_option("--r-file", cybe_r_file, "JSON file with a user-supplied r-matrix");

    auto* pencil_cmd = app.add_subcommand("pencil", "Lie-pencil compatibility of the two dual families");
    bool pencil_solve_flag = false;
    pencil_cmd->add_flag("--solve", pencil_solve_flag, "print the constraint generators");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression in chosen representations");
    std::string eval_text, eval_reps = "fund,fund";
    eval_cmd->add_option("--expr", eval_text, "expression in the twistlab grammar")->required();
    eval_cmd->add_option("--legs", eval_reps, "one representation per tensor leg, e.g. fund,fund");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help exits cleanly, usage problems exit 2
    }

    try {
        Bindings bindings = parse_bindings(params);
        std::vector<std::string> families = split_reps(reps);

        if (list_cmd->parsed()) {
            std::string out;
            if (format == "json") {
                Json arr = Json::array();
                for (const auto& e : list_catalog())
                    arr.push_back(Json{{"kind", e.kind},
                                       {"name", e.name},
                                       {"params", e.params},
                                       {"description", e.description}});
                out = arr.dump(2) + "\n";
            } else {
                for (const auto& e : list_catalog()) {
                    out += e.kind + "  " + e.name;
                    if (!e.params.empty()) out += "(" + e.params + ")";
                    out += "  -- " + e.description + "\n";
                }
            }
            emit(out, out_path);
            return 0;
        }

        if (verify_cmd->parsed()) {
            auto reports =
                run_named_check(check_name, twist_name, table_name, r_name, bindings, families);
            if (verbose)
                for (const auto& r : reports) {
                    std::cerr << r.status << "  " << r.check;
                    for (const auto& [k, v] : r.inputs) std::cerr << " " << k << "=" << v;
                    std::cerr << " (" << r.elapsed_ms << " ms)\n";
                }
            emit(render_reports(reports, format, !no_timing), out_path);
            return exit_code(reports);
        }

        if (dual_cmd->parsed()) {
            Tensor2 r;
            if (!dual_r_file.empty()) {
                std::ifstream f(dual_r_file);
                if (!f) throw error("cannot read '" + dual_r_file + "'");
                Json j = Json::parse(f);
                r = tensor2_from_json(j);
                if (!bindings.empty()) r = r.substitute(bindings);
            } else if (!dual_r.empty()) {
                r = get_rmatrix(dual_r, bindings);
            } else {
                throw CLI::ValidationError("dual needs --r or --r-file");
            }
            BracketTable t = dual_brackets(r).scaled(dual_normalization());
            if (format == "json") {
                emit(bracket_table_to_json(t).dump(2) + "\n", out_path);
            } else {
                std::string out = "| bracket | value |\n|---|---|\n";
                for (const auto& [key, coeffs] : t.entries())
                    out += "| [" + t.basis()[static_cast<std::size_t>(key.first)] + ", " +
                           t.basis()[static_cast<std::size_t>(key.second)] + "] | " +
                           t.render_coeffs(coeffs) + " |\n";
                emit(out, out_path);
            }
            return 0;
        }

        if (cybe_cmd->parsed()) {
            Tensor2 r;
            if (!cybe_r_file.empty()) {
                std::ifstream f(cybe_r_file);
                if (!f) throw error("cannot read '" + cybe_r_file + "'");
                r = tensor2_from_json(Json::parse(f));
                if (!bindings.empty()) r = r.substitute(bindings);
            } else if (!cybe_r.empty()) {
                r = get_rmatrix(cybe_r, bindings);
            } else {
                throw CLI::ValidationError("cybe needs --r or --r-file");
            }
            Tensor3 br = cybe(r);
            emit(br.str() + "\n", out_path);
            return br.is_zero() ? 0 : 1;
        }

        if (pencil_cmd->parsed()) {
            if (pencil_solve_flag) {
                BracketTable djr = dual_brackets(get_rmatrix("DJR", bindings));
                BracketTable eth = dual_brackets(get_rmatrix("Etheta", bindings));
                PencilResult res = pencil_solve(djr, eth);
                std::string out;
                for (const auto& g : res.generators) out += g.str() + " = 0\n";
                if (res.generators.empty()) out = "no constraints (always compatible)\n";
                emit(out, out_path);
                return 0;
            }
            auto report = check_pencil();
            emit(render_reports({report}, format, !no_timing), out_path);
            return exit_code({report});
        }

        if (eval_cmd->parsed()) {
            TensorExpr e = parse_expr(eval_text);
            if (!bindings.empty()) e = substitute(e, bindings);
            LegReps legs;
            for (const auto& name : split_reps(eval_reps)) legs.push_back(&rep_by_name(name));
            Matrix m = eval(e, legs);
            emit(matrix_to_json(m).dump(2) + "\n", out_path);
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const name_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
