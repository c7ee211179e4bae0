// Acceptance suite: runs every top-level criterion at zero tolerance and
// prints one line per criterion. Exits nonzero when any criterion fails.
//
// Usage: acceptance <path-to-cli-binary>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "twistlab/verify.hpp"

using namespace twistlab;

namespace {

int failures = 0;

void line(int number, bool ok, const std::string& what, const std::string& detail = "") {
    std::printf("criterion %02d [%s] %s%s\n", number, ok ? "pass" : "FAIL", what.c_str(),
                detail.empty() ? "" : (" -- " + detail).c_str());
    if (!ok) ++failures;
}

bool all_pass(const std::vector<Report>& rs) {
    for (const auto& r : rs)
        if (!r.passed()) return false;
    return true;
}

std::string first_issue(const std::vector<Report>& rs) {
    for (const auto& r : rs)
        if (!r.passed()) {
            std::string w = r.check;
            for (const auto& [k, v] : r.inputs) w += " " + k + "=" + v;
            for (const auto& [k, v] : r.witness) w += " | " + k + ": " + v;
            return w;
        }
    return "";
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const RepFamily fund = fam_fund();
    const RepFamily dual = fam_dual();

    // 1. classical Yang-Baxter equation, exactly, symbolic theta
    {
        std::vector<Report> rs{check_cybe("Pprime"), check_cybe("Etheta")};
        line(1, all_pass(rs), "cybe(r) = 0 for the peripheric and extended r-matrices",
             first_issue(rs));
    }

    // 2. all four dual tables reproduced after fixing one normalization
    //    constant; the suspect recorded row is reported, not auto-matched
    {
        std::vector<Report> rs;
        for (const auto& name : dual_table_names()) rs.push_back(check_dual_table(name));
        bool ok = all_pass(rs);
        bool djr_flag_ok = false;
        for (const auto& r : rs)
            if (!r.inputs.empty() && r.inputs[0].second == "DJR")
                for (const auto& [row, detail] : r.flagged)
                    djr_flag_ok = djr_flag_ok || (row == "[X32,X33]" &&
                                                  detail.find("computed") != std::string::npos);
        for (const auto& r : rs)
            if (!r.inputs.empty() && r.inputs[0].second != "DJR") ok = ok && r.flagged.empty();
        line(2, ok && djr_flag_ok,
             "dual tables match row-by-row with a single pairing constant; "
             "the one suspect row is reported with its computed value",
             ok ? (djr_flag_ok ? "" : "missing flagged-row report") : first_issue(rs));
    }

    // 3. pencil theorem: compatible exactly on eta = theta
    {
        Report r = check_pencil();
        line(3, r.passed(), "pencil of the two dual families is Lie exactly on eta = theta",
             first_issue({r}));
    }

    // 4. twist equation for the whole catalog, symbolic parameters
    {
        std::vector<Report> rs;
        for (const auto& name : twist_names()) {
            TwistDef f = get_twist(name);
            if (f.base.empty()) {
                rs.push_back(check_twist_equation(f, fund));
            } else {
                TwistDef base = get_twist(f.base);
                rs.push_back(check_twist_equation(f, fund, &base));
            }
        }
        line(4, all_pass(rs), "twist equation holds for every catalog twist (27x27, symbolic)",
             first_issue(rs));
    }

    // 5. closed-form R for the peripheric twist; triangularity and the
    //    quantum Yang-Baxter equation for every twist of the undeformed
    //    coproduct (the post-twist content is covered by the composite)
    {
        std::vector<Report> rs{check_closed_form_R("Pprime", fund)};
        for (const auto& name : twist_names()) {
            TwistDef f = get_twist(name);
            if (!f.base.empty()) continue;
            rs.push_back(check_triangular(f, fund));
            rs.push_back(check_qybe(f, fund));
        }
        line(5, all_pass(rs), "closed-form R matches; R21 R = 1 and QYBE hold across the catalog",
             first_issue(rs));
    }

    // 6. coproduct tables in both default representations; the known
    //    discrepant row is detected and its computed value must equal the
    //    lambda = 0 limit of the composite table's row
    {
        std::vector<Report> rs;
        bool flags_ok = true;
        for (const RepFamily& fam : {fund, dual}) {
            for (const auto& name : table_names()) {
                Report r = check_coproduct_table(get_table(name), fam);
                if (name == "Pprime") {
                    bool found = false;
                    for (const auto& [row, detail] : r.flagged)
                        found = found || (row == "E31" && detail.find("differs") != std::string::npos);
                    flags_ok = flags_ok && found;
                } else {
                    flags_ok = flags_ok && r.flagged.empty();
                }
                rs.push_back(std::move(r));
            }
        }
        // independent correction route: the computed peripheric row equals
        // the lambda = 0 specialization of the composite family's row
        bool corrected = true;
        {
            TwistDef fp = get_twist("Pprime");
            CoproductTable ug = get_table("PprimeRtilde", {{Param::Lambda, Scalar(0)}});
            for (const RepFamily& fam : {fund, dual}) {
                Matrix fm = eval(fp.to_expr(), LegReps{fam.rep, fam.rep});
                Matrix fi = eval(fp.inverted().to_expr(), LegReps{fam.rep, fam.rep});
                Matrix id = Matrix::identity(fam.rep->dim());
                Matrix g = fam.rep->image(gens::E(3, 1));
                Matrix computed = fm * (kron(g, id) + kron(id, g)) * fi;
                for (const auto& row : ug.rows)
                    if (row.name == "E31")
                        corrected = corrected &&
                                    (computed == eval(row.rhs, LegReps{fam.rep, fam.rep}));
            }
        }
        line(6, all_pass(rs) && flags_ok && corrected,
             "coproduct tables verified in fund and dual; the discrepant recorded row is "
             "flagged and its computed value matches the composite family at lambda = 0",
             !all_pass(rs)  ? first_issue(rs)
             : !flags_ok    ? "flag bookkeeping failed"
             : !corrected   ? "computed row does not match the corrected form"
                            : "");
    }

    // 7. factorization identities in the cubed fundamental
    {
        std::vector<Report> rs;
        for (const auto& name : {"j", "Ecan"}) {
            rs.push_back(check_factorizable(get_twist(name), FactorSide::Left, fund));
            rs.push_back(check_factorizable(get_twist(name), FactorSide::Right, fund));
        }
        line(7, all_pass(rs), "factorizable-twist identities for the jordanian and extended twists",
             first_issue(rs));
    }

    // 8. Hopf axioms after twisting: counit normalization (symbolic) and the
    //    twisted antipode axiom through the Sweedler element
    {
        std::vector<Report> rs;
        for (const auto& name : twist_names()) rs.push_back(check_normalization(get_twist(name)));
        rs.push_back(check_antipode(get_twist("j"), fund));
        rs.push_back(check_antipode(get_twist("Pprime"), fund));
        line(8, all_pass(rs), "normalization and twisted antipode axioms", first_issue(rs));
    }

    // 9. composite twist equals its closed form; carrier closes
    {
        Report r = check_composite(fund);
        line(9, r.passed(), "composite twist equals the closed two-factor form, symbolic lambda",
             first_issue({r}));
    }

    // 10. reparametrization theta = (2 lambda - 1)/3
    {
        Report r = check_reparametrization();
        line(10, r.passed(), "extended-family parameter matches the composite carrier",
             first_issue({r}));
    }

    // 11. similarity transform is exactly linear with reported constants
    {
        Report r = check_similarity();
        bool constants = r.passed() && r.witness.size() >= 2 && r.witness[0].second == "1" &&
                         r.witness[1].second == "-2";
        line(11, constants, "ad-exponential tilts the Drinfeld-Jimbo family along the extension",
             constants ? "constants 1 and -2" : first_issue({r}));
    }

    // 12. involution: automorphism, carrier mapping, coproduct conjugation
    {
        Report r = check_involution(fund);
        line(12, r.passed(), "root-swap involution carries the mirror structure onto the direct one",
             first_issue({r}));
    }

    // 13. byte-identical reports across two runs (timing excluded)
    {
        bool ok = false;
        std::string detail;
        if (cli.empty()) {
            detail = "no CLI path provided";
        } else {
            std::string out1 = "acceptance_run1.json", out2 = "acceptance_run2.json";
            std::string cmd1 = cli + " verify all --format json --no-timing --out " + out1;
            std::string cmd2 = cli + " verify all --format json --no-timing --out " + out2;
            int rc1 = std::system(cmd1.c_str());
            int rc2 = std::system(cmd2.c_str());
            std::string a = slurp(out1), b = slurp(out2);
            ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
            if (!ok)
                detail = rc1 != 0 || rc2 != 0 ? "CLI exited nonzero" : "outputs differ";
            std::remove(out1.c_str());
            std::remove(out2.c_str());
        }
        line(13, ok, "two consecutive verification runs produce byte-identical reports", detail);
    }

    if (failures == 0) {
        std::printf("acceptance: all criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failing\n", failures);
    return 1;
}
