#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twistlab/bialg.hpp"
#include "twistlab/expr.hpp"
#include "twistlab/parse.hpp"

namespace twistlab {

using Bindings = std::map<Param, Scalar>;

/// A twisting element as an ordered product of exponential factors,
/// together with the generators of its carrier subalgebra. The inverse is
/// the reversed product of negated exponents.
struct TwistDef {
    std::string name;
    std::string description;
    std::vector<Param> params;
    std::vector<TensorExpr> exponents;  // twist = exp(e_0) * exp(e_1) * ...
    std::vector<LieElement> carrier;
    /// Name of the twist this one is composed on top of (its twist equation
    /// holds for the base-twisted coproduct); empty for twists of the
    /// undeformed algebra.
    std::string base;

    TensorExpr to_expr() const {
        TensorExpr out = expr_one(2);
        for (const auto& e : exponents) out = mul(out, exp_of(e));
        return out;
    }
    TwistDef inverted() const {
        TwistDef inv = *this;
        inv.exponents.clear();
        for (auto it = exponents.rbegin(); it != exponents.rend(); ++it)
            inv.exponents.push_back(scale(*it, Scalar(-1)));
        return inv;
    }
    TwistDef substituted(const Bindings& b) const {
        TwistDef out = *this;
        for (auto& e : out.exponents) e = substitute(e, b);
        for (auto& c : out.carrier) c = c.substitute(b);
        return out;
    }
};

/// A table of twisted coproducts: one row per generator, stored exactly as
/// the catalog defines them (no algebraic simplification). Rows listed in
/// `flagged` are known discrepancies: the checker reports their computed
/// value instead of matching them.
struct CoproductTable {
    struct Row {
        std::string name;
        LieElement generator;
        TensorExpr rhs;  // two legs
    };
    std::string name;
    std::string twist;  // catalog twist whose conjugation the table claims
    std::string description;
    std::vector<Param> params;
    std::vector<Row> rows;
    std::set<std::string> flagged;

    CoproductTable substituted(const Bindings& b) const {
        CoproductTable out = *this;
        for (auto& r : out.rows) {
            r.generator = r.generator.substitute(b);
            r.rhs = substitute(r.rhs, b);
        }
        return out;
    }
};

/// A dual-algebra bracket table as the catalog records it, tied to the
/// r-matrix it is derived from.
struct DualTableDef {
    std::string name;
    std::string rmatrix;  // catalog r-matrix name
    std::string description;
    std::vector<Param> params;
    BracketTable table;
    std::set<std::pair<std::string, std::string>> flagged;  // suspect rows
};

namespace catalog_detail {

using namespace gens;

inline TensorExpr leaf2(int leg, const LieElement& x) { return expr_leaf(2, leg, x); }

/// log(1 + E13) placed on one leg of a two-leg expression.
inline TensorExpr sigma_on(int leg) {
    return log1p_of(expr_leaf(2, leg, E(1, 3)));
}

/// (1/2) log(1 + 2 xi E13) on one leg.
inline TensorExpr sigma_tilde_on(int leg) {
    TensorExpr inner = scale(expr_leaf(2, leg, E(1, 3)), Scalar(2) * Scalar(Param::Xi));
    return scale(log1p_of(inner), Scalar::rational(1, 2));
}

/// exp(k sigma) on one leg.
inline TensorExpr exp_sigma(int leg, const Scalar& k) { return exp_of(scale(sigma_on(leg), k)); }

/// exp(k sigma_tilde) on one leg.
inline TensorExpr exp_sigma_tilde(int leg, const Scalar& k) {
    return exp_of(scale(sigma_tilde_on(leg), k));
}

inline Scalar lam() { return Scalar(Param::Lambda); }
inline Scalar thet() { return Scalar(Param::Theta); }
inline Scalar eta() { return Scalar(Param::Eta); }
inline Scalar xi() { return Scalar(Param::Xi); }

}  // namespace catalog_detail

// --- twists ---------------------------------------------------------------------

inline std::vector<std::string> twist_names() {
    return {"j", "Ecan", "E", "Eprime", "Pprime", "Rtilde", "PprimeRtilde", "R"};
}

inline TwistDef get_twist(const std::string& name, const Bindings& bindings = {}) {
    using namespace catalog_detail;
    TwistDef t;
    t.name = name;
    if (name == "j") {
        t.description = "jordanian twist exp(H (x) sigma) on the Borel pair [H, E13] = E13";
        t.exponents = {mul(leaf2(0, H()), sigma_on(1))};
        t.carrier = {H(), E(1, 3)};
    } else if (name == "Ecan") {
        t.description = "canonical extended twist exp(2 xi E12 (x) E23 e^{-sigma_tilde}) exp(H13 (x) sigma_tilde)";
        t.params = {Param::Xi};
        TensorExpr ext = scale(
            mul(leaf2(0, E(1, 2)), mul(leaf2(1, E(2, 3)), exp_sigma_tilde(1, Scalar(-1)))),
            Scalar(2) * xi());
        t.exponents = {ext, mul(leaf2(0, H13()), sigma_tilde_on(1))};
        t.carrier = {H13(), E(1, 2), E(2, 3), E(1, 3)};
    } else if (name == "E") {
        t.description = "extended twist exp(E12 (x) E23 e^{-(1-lambda) sigma}) exp((H+lambda K) (x) sigma), alpha = lambda";
        t.params = {Param::Lambda};
        TensorExpr ext =
            mul(leaf2(0, E(1, 2)), mul(leaf2(1, E(2, 3)), exp_sigma(1, lam() - Scalar(1))));
        t.exponents = {ext, mul(leaf2(0, H_lambda(lam())), sigma_on(1))};
        t.carrier = {H_lambda(lam()), E(1, 2), E(2, 3), E(1, 3)};
    } else if (name == "Eprime") {
        t.description = "mirror extended twist exp(-E23 (x) E12 e^{-lambda sigma}) exp((H+lambda K) (x) sigma), alpha = lambda";
        t.params = {Param::Lambda};
        TensorExpr ext = scale(
            mul(leaf2(0, E(2, 3)), mul(leaf2(1, E(1, 2)), exp_sigma(1, -lam()))), Scalar(-1));
        t.exponents = {ext, mul(leaf2(0, H_lambda(lam())), sigma_on(1))};
        t.carrier = {H_lambda(lam()), E(1, 2), E(2, 3), E(1, 3)};
    } else if (name == "Pprime") {
        t.description = "peripheric twist exp(-E23 (x) E12) exp(H (x) sigma)";
        t.exponents = {scale(mul(leaf2(0, E(2, 3)), leaf2(1, E(1, 2))), Scalar(-1)),
                       mul(leaf2(0, H()), sigma_on(1))};
        t.carrier = {H(), E(1, 2), E(2, 3), E(1, 3)};
    } else if (name == "Rtilde") {
        t.description = "abelian twist exp(lambda K (x) sigma) of the peripheric-twisted algebra";
        t.params = {Param::Lambda};
        t.exponents = {scale(mul(leaf2(0, K()), sigma_on(1)), lam())};
        t.carrier = {K(), E(1, 3)};
        t.base = "Pprime";
    } else if (name == "PprimeRtilde") {
        t.description = "composite twist exp(lambda K (x) sigma) exp(-E23 (x) E12) exp(H (x) sigma)";
        t.params = {Param::Lambda};
        t.exponents = {scale(mul(leaf2(0, K()), sigma_on(1)), lam()),
                       scale(mul(leaf2(0, E(2, 3)), leaf2(1, E(1, 2))), Scalar(-1)),
                       mul(leaf2(0, H()), sigma_on(1))};
        t.carrier = {H_lambda(lam()), E(1, 2), E(2, 3), E(1, 3)};
    } else if (name == "R") {
        t.description = "Reshetikhin twist exp(eta H23 ^ H12) on the Cartan subalgebra";
        t.params = {Param::Eta};
        TensorExpr wedge_expr =
            sub(mul(leaf2(0, H23()), leaf2(1, H12())), mul(leaf2(0, H12()), leaf2(1, H23())));
        t.exponents = {scale(wedge_expr, eta())};
        t.carrier = {H12(), H23()};
    } else {
        std::string names;
        for (const auto& n : twist_names()) names += (names.empty() ? "" : ", ") + n;
        throw name_error("unknown twist '" + name + "' (available: " + names + ")");
    }
    return bindings.empty() ? t : t.substituted(bindings);
}

// --- r-matrices ------------------------------------------------------------------

inline std::vector<std::string> rmatrix_names() { return {"Pprime", "Etheta", "j", "DJ", "R", "DJR"}; }

inline Tensor2 get_rmatrix(const std::string& name, const Bindings& bindings = {}) {
    using namespace catalog_detail;
    Tensor2 r;
    if (name == "Pprime") {
        r = wedge(E(2, 3), E(1, 2)) + wedge(E(1, 3), H());
    } else if (name == "Etheta") {
        r = wedge(E(2, 3), E(1, 2)) + wedge(E(1, 3), H13()) * Scalar::rational(1, 2) +
            wedge(E(1, 3), H12() - H23()) * (thet() * Scalar::rational(1, 2));
    } else if (name == "j") {
        r = wedge(H13(), E(1, 3)) + wedge(E(1, 2), E(2, 3)) * Scalar(2);
    } else if (name == "DJ" || name == "DJR") {
        // -2 (sum_{i<j} E_ij (x) E_ji + 1/2 sum_a h_a (x) h^a); this
        // normalization reproduces the catalog dual tables with the same
        // pairing constant as the peripheric family
        r.add(E(1, 2), E(2, 1), Scalar(-2));
        r.add(E(1, 3), E(3, 1), Scalar(-2));
        r.add(E(2, 3), E(3, 2), Scalar(-2));
        Scalar third = Scalar::rational(-1, 3);
        r.add(H12(), H12(), Scalar(2) * third);
        r.add(H12(), H23(), third);
        r.add(H23(), H12(), third);
        r.add(H23(), H23(), Scalar(2) * third);
        if (name == "DJR") r = r + wedge(H23(), H12()) * eta();
    } else if (name == "R") {
        r = wedge(H23(), H12()) * eta();
    } else {
        std::string names;
        for (const auto& n : rmatrix_names()) names += (names.empty() ? "" : ", ") + n;
        throw name_error("unknown r-matrix '" + name + "' (available: " + names + ")");
    }
    return bindings.empty() ? r : r.substitute(bindings);
}

// --- closed-form universal R ------------------------------------------------------

inline TensorExpr closed_form_R(const std::string& name) {
    using namespace catalog_detail;
    if (name == "Pprime") {
        TensorExpr f1 = exp_of(scale(mul(leaf2(0, E(1, 2)), leaf2(1, E(2, 3))), Scalar(-1)));
        TensorExpr f2 = exp_of(mul(sigma_on(0), leaf2(1, H())));
        TensorExpr f3 = exp_of(scale(mul(leaf2(0, H()), sigma_on(1)), Scalar(-1)));
        TensorExpr f4 = exp_of(mul(leaf2(0, E(2, 3)), leaf2(1, E(1, 2))));
        return mul(mul(f1, f2), mul(f3, f4));
    }
    throw name_error("no closed-form R recorded for twist '" + name + "'");
}

// --- coproduct tables --------------------------------------------------------------

inline std::vector<std::string> table_names() {
    return {"Pprime", "PprimeRtilde", "Ecan", "LE", "LEprime"};
}

inline CoproductTable get_table(const std::string& name, const Bindings& bindings = {}) {
    using namespace catalog_detail;
    CoproductTable t;
    t.name = name;
    t.twist = name;
    const TensorExpr one2 = expr_one(2);

    if (name == "Pprime") {
        t.description = "twisted coproducts of the peripheric algebra";
        Scalar m1(-1);
        auto em_sig = [&](const Scalar& k) { return exp_sigma(1, k); };  // leg-1 e^{k sigma}
        // H12
        t.rows.push_back({"H12", H12(),
                          add(add(leaf2(0, H12()), leaf2(1, H12())),
                              add(mul(leaf2(0, H()), sub(em_sig(m1), one2)),
                                  mul(leaf2(0, E(2, 3)), mul(leaf2(1, E(1, 2)), em_sig(m1)))))});
        // H13
        t.rows.push_back({"H13", H13(),
                          add(add(leaf2(0, H13()), leaf2(1, H13())),
                              add(scale(mul(leaf2(0, H()), sub(em_sig(m1), one2)), Scalar(2)),
                                  scale(mul(leaf2(0, E(2, 3)), mul(leaf2(1, E(1, 2)), em_sig(m1))),
                                        Scalar(2))))});
        // E12
        t.rows.push_back({"E12", E(1, 2),
                          add(leaf2(0, E(1, 2)), mul(exp_sigma(0, Scalar(1)), leaf2(1, E(1, 2))))});
        // E13
        t.rows.push_back({"E13", E(1, 3),
                          add(mul(leaf2(0, E(1, 3)), em_sig(Scalar(1))), leaf2(1, E(1, 3)))});
        // E21
        {
            TensorExpr row = add(leaf2(0, E(2, 1)), leaf2(1, E(2, 1)));
            row = sub(row, mul(leaf2(0, H()), mul(leaf2(1, E(2, 3)), em_sig(m1))));
            row = sub(row, mul(leaf2(0, E(2, 3)), leaf2(1, H12())));
            row = sub(row, mul(leaf2(0, E(2, 3)),
                               mul(leaf2(1, E(1, 2)), mul(leaf2(1, E(2, 3)), em_sig(m1)))));
            row = add(row, mul(mul(leaf2(0, H()), leaf2(0, E(2, 3))), sub(one2, em_sig(m1))));
            row = sub(row, mul(mul(leaf2(0, E(2, 3)), leaf2(0, E(2, 3))),
                               mul(leaf2(1, E(1, 2)), em_sig(m1))));
            t.rows.push_back({"E21", E(2, 1), row});
        }
        // E23
        t.rows.push_back({"E23", E(2, 3), add(leaf2(0, E(2, 3)), leaf2(1, E(2, 3)))});
        // E31 — as recorded, with a known discrepancy in the H (x) H13 term
        {
            Scalar m2(-2);
            TensorExpr row = add(mul(leaf2(0, E(3, 1)), em_sig(m1)), leaf2(1, E(3, 1)));
            row = add(row, mul(leaf2(0, H()), leaf2(1, H13())));
            TensorExpr diff = sub(em_sig(m1), em_sig(m2));                    // e^{-s} - e^{-2s}
            TensorExpr diff2 = sub(em_sig(m1), scale(em_sig(m2), Scalar(2)));  // e^{-s} - 2e^{-2s}
            row = add(row, mul(sub(leaf2(0, H()), mul(leaf2(0, H()), leaf2(0, H()))), diff));
            row = add(row, mul(sub(leaf2(0, E(2, 3)), mul(leaf2(0, H()), leaf2(0, E(2, 3)))),
                               mul(leaf2(1, E(1, 2)), diff2)));
            row = sub(row, mul(leaf2(0, E(2, 1)), mul(leaf2(1, E(1, 2)), em_sig(m1))));
            row = add(row, mul(leaf2(0, E(2, 3)), leaf2(1, E(3, 2))));
            row = add(row, mul(leaf2(0, E(2, 3)),
                               mul(leaf2(1, H13()), mul(leaf2(1, E(1, 2)), em_sig(m1)))));
            row = add(row, mul(mul(leaf2(0, E(2, 3)), leaf2(0, E(2, 3))),
                               mul(leaf2(1, E(1, 2)), mul(leaf2(1, E(1, 2)), em_sig(m2)))));
            t.rows.push_back({"E31", E(3, 1), row});
            t.flagged.insert("E31");
        }
        // E32
        t.rows.push_back({"E32", E(3, 2),
                          add(add(mul(leaf2(0, E(3, 2)), em_sig(m1)), leaf2(1, E(3, 2))),
                              mul(leaf2(0, H() - H23()), mul(leaf2(1, E(1, 2)), em_sig(m1))))});
    } else if (name == "PprimeRtilde") {
        t.description = "twisted coproducts of the composite-twisted family";
        t.params = {Param::Lambda};
        Scalar l = lam();
        LieElement lkh = H_lambda(l);  // lambda K + H
        auto em = [&](const Scalar& k) { return exp_sigma(1, k); };
        // H12
        t.rows.push_back(
            {"H12", H12(),
             add(add(leaf2(0, H12()), leaf2(1, H12())),
                 add(mul(leaf2(0, lkh), sub(em(Scalar(-1)), one2)),
                     mul(leaf2(0, E(2, 3)), mul(leaf2(1, E(1, 2)), em(-(l + Scalar(1)))))))});
        // H13
        t.rows.push_back(
            {"H13", H13(),
             add(add(leaf2(0, H13() - lkh * Scalar(2)),
                     scale(mul(leaf2(0, lkh), em(Scalar(-1))), Scalar(2))),
                 add(leaf2(1, H13()),
                     scale(mul(leaf2(0, E(2, 3)), mul(leaf2(1, E(1, 2)), em(-(l + Scalar(1))))),
                           Scalar(2))))});
        // E12
        t.rows.push_back({"E12", E(1, 2),
                          add(mul(leaf2(0, E(1, 2)), em(l)),
                              mul(exp_sigma(0, Scalar(1)), leaf2(1, E(1, 2))))});
        // E13
        t.rows.push_back({"E13", E(1, 3),
                          add(mul(leaf2(0, E(1, 3)), em(Scalar(1))), leaf2(1, E(1, 3)))});
        // E21
        {
            TensorExpr row = add(mul(leaf2(0, E(2, 1)), em(-l)), leaf2(1, E(2, 1)));
            row = sub(row, mul(leaf2(0, E(2, 3)), mul(leaf2(1, H12()), em(-l))));
            row = sub(row, mul(leaf2(0, lkh), mul(leaf2(1, E(2, 3)), em(Scalar(-1)))));
            row = add(row, mul(mul(leaf2(0, lkh), leaf2(0, E(2, 3))),
                               sub(em(-l), em(-(l + Scalar(1))))));
            row = sub(row, mul(mul(leaf2(0, E(2, 3)), leaf2(0, E(2, 3))),
                               mul(leaf2(1, E(1, 2)), em(-(Scalar(2) * l + Scalar(1))))));
            row = sub(row, mul(leaf2(0, E(2, 3)),
                               mul(leaf2(1, E(1, 2)),
                                   mul(leaf2(1, E(2, 3)), em(-(l + Scalar(1)))))));
            t.rows.push_back({"E21", E(2, 1), row});
        }
        // E23
        t.rows.push_back({"E23", E(2, 3), add(mul(leaf2(0, E(2, 3)), em(-l)), leaf2(1, E(2, 3)))});
        // E31
        {
            TensorExpr row = add(mul(leaf2(0, E(3, 1)), em(Scalar(-1))), leaf2(1, E(3, 1)));
            row = add(row, mul(leaf2(0, lkh), mul(leaf2(1, H13()), em(Scalar(-1)))));
            row = add(row, mul(leaf2(0, E(2, 3)), mul(leaf2(1, E(3, 2)), em(-l))));
            TensorExpr diff = sub(em(Scalar(-1)), em(Scalar(-2)));
            row = add(row, mul(sub(leaf2(0, lkh), mul(leaf2(0, lkh), leaf2(0, lkh))), diff));
            row = sub(row, mul(leaf2(0, E(2, 1)), mul(leaf2(1, E(1, 2)), em(-(l + Scalar(1))))));
            TensorExpr diff2 = sub(em(-(l + Scalar(1))), scale(em(-(l + Scalar(2))), Scalar(2)));
            row = add(row, mul(sub(leaf2(0, E(2, 3)), mul(leaf2(0, lkh), leaf2(0, E(2, 3)))),
                               mul(leaf2(1, E(1, 2)), diff2)));
            row = add(row, mul(leaf2(0, E(2, 3)),
                               mul(leaf2(1, H13()), mul(leaf2(1, E(1, 2)), em(-(l + Scalar(1)))))));
            row = add(row, mul(mul(leaf2(0, E(2, 3)), leaf2(0, E(2, 3))),
                               mul(leaf2(1, E(1, 2)),
                                   mul(leaf2(1, E(1, 2)), em(Scalar(-2) * (l + Scalar(1)))))));
            t.rows.push_back({"E31", E(3, 1), row});
        }
        // E32
        t.rows.push_back(
            {"E32", E(3, 2),
             add(add(mul(leaf2(0, E(3, 2)), em(l - Scalar(1))), leaf2(1, E(3, 2))),
                 mul(leaf2(0, K() * (l + Scalar(1))), mul(leaf2(1, E(1, 2)), em(Scalar(-1)))))});
    } else if (name == "Ecan") {
        t.description = "twisted coproducts of the canonical extended algebra";
        t.params = {Param::Xi};
        Scalar x = xi();
        auto emt = [&](const Scalar& k) { return exp_sigma_tilde(1, k); };
        // H23
        t.rows.push_back(
            {"H23", H23(),
             add(add(leaf2(0, H23()), leaf2(1, H23())),
                 add(scale(mul(leaf2(0, H13()), sub(emt(Scalar(-2)), one2)), Scalar::rational(1, 2)),
                     scale(mul(leaf2(0, E(1, 2)), mul(leaf2(1, E(2, 3)), emt(Scalar(-3)))),
                           Scalar(-2) * x)))});
        // H13
        t.rows.push_back(
            {"H13", H13(),
             add(add(mul(leaf2(0, H13()), emt(Scalar(-2))), leaf2(1, H13())),
                 scale(mul(leaf2(0, E(1, 2)), mul(leaf2(1, E(2, 3)), emt(Scalar(-3)))),
                       Scalar(-4) * x))});
        // E23
        t.rows.push_back({"E23", E(2, 3),
                          add(mul(leaf2(0, E(2, 3)), emt(Scalar(1))),
                              mul(exp_sigma_tilde(0, Scalar(2)), leaf2(1, E(2, 3))))});
        // E13
        t.rows.push_back({"E13", E(1, 3),
                          add(mul(leaf2(0, E(1, 3)), emt(Scalar(2))), leaf2(1, E(1, 3)))});
        // E32
        {
            TensorExpr row = add(mul(leaf2(0, E(3, 2)), emt(Scalar(-1))), leaf2(1, E(3, 2)));
            row = add(row, scale(mul(leaf2(0, E(1, 2)), mul(leaf2(1, H23()), emt(Scalar(-1)))),
                                 Scalar(2) * x));
            row = add(row, scale(mul(leaf2(0, H13()), mul(leaf2(1, E(1, 2)), emt(Scalar(-2)))), x));
            row = sub(row, scale(mul(mul(leaf2(0, H13()), leaf2(0, E(1, 2))),
                                     sub(emt(Scalar(-1)), emt(Scalar(-3)))),
                                 x));
            row = sub(row, scale(mul(mul(leaf2(0, E(1, 2)), leaf2(0, E(1, 2))),
                                     mul(leaf2(1, E(2, 3)), emt(Scalar(-4)))),
                                 Scalar(4) * x * x));
            row = sub(row, scale(mul(leaf2(0, E(1, 2)),
                                     mul(leaf2(1, E(2, 3)),
                                         mul(leaf2(1, E(1, 2)), emt(Scalar(-3))))),
                                 Scalar(4) * x * x));
            t.rows.push_back({"E32", E(3, 2), row});
        }
        // E12
        t.rows.push_back({"E12", E(1, 2),
                          add(mul(leaf2(0, E(1, 2)), emt(Scalar(-1))), leaf2(1, E(1, 2)))});
        // E31
        {
            TensorExpr row = add(mul(leaf2(0, E(3, 1)), emt(Scalar(-2))), leaf2(1, E(3, 1)));
            row = add(row, scale(mul(leaf2(0, H13()), mul(leaf2(1, H13()), emt(Scalar(-2)))), x));
            TensorExpr h13_half_sq =
                sub(leaf2(0, H13()),
                    scale(mul(leaf2(0, H13()), leaf2(0, H13())), Scalar::rational(1, 2)));
            row = add(row, scale(mul(h13_half_sq, sub(emt(Scalar(-2)), emt(Scalar(-4)))), x));
            row = sub(row, scale(mul(leaf2(0, E(3, 2)), mul(leaf2(1, E(2, 3)), emt(Scalar(-3)))),
                                 Scalar(2) * x));
            row = add(row, scale(mul(leaf2(0, E(1, 2)), mul(leaf2(1, E(2, 1)), emt(Scalar(-1)))),
                                 Scalar(2) * x));
            TensorExpr e12_mod = sub(leaf2(0, E(1, 2)),
                                     scale(mul(leaf2(0, H13()), leaf2(0, E(1, 2))),
                                           Scalar::rational(1, 2)));
            TensorExpr leg1tail =
                mul(leaf2(1, E(2, 3)),
                    mul(exp_sigma_tilde(1, Scalar(-1)),
                        sub(emt(Scalar(-2)), scale(emt(Scalar(-4)), Scalar(2)))));
            row = sub(row, scale(mul(e12_mod, leg1tail), Scalar(4) * x * x));
            row = sub(row, scale(mul(leaf2(0, E(1, 2)),
                                     mul(leaf2(1, H13()),
                                         mul(leaf2(1, E(2, 3)), emt(Scalar(-3))))),
                                 Scalar(4) * x * x));
            row = add(row, scale(mul(mul(leaf2(0, E(1, 2)), leaf2(0, E(1, 2))),
                                     mul(leaf2(1, E(2, 3)),
                                         mul(leaf2(1, E(2, 3)), emt(Scalar(-6))))),
                                 Scalar(8) * x * x * x));
            t.rows.push_back({"E31", E(3, 1), row});
        }
        // E21
        t.rows.push_back(
            {"E21", E(2, 1),
             add(add(mul(leaf2(0, E(2, 1)), emt(Scalar(-1))), leaf2(1, E(2, 1))),
                 scale(mul(leaf2(0, H12() - H23()), mul(leaf2(1, E(2, 3)), emt(Scalar(-2)))), x))});
    } else if (name == "LE" || name == "LEprime") {
        bool prime = name == "LEprime";
        t.twist = prime ? "Eprime" : "E";
        t.description = prime ? "carrier coproducts of the mirror extended twist"
                              : "carrier coproducts of the extended twist";
        t.params = {Param::Lambda};
        Scalar alpha = lam(), beta = Scalar(1) - lam();
        LieElement Hc = H_lambda(alpha), A = E(1, 2), B = E(2, 3), Ee = E(1, 3);
        auto em = [&](const Scalar& k) { return exp_sigma(1, k); };
        if (!prime) {
            t.rows.push_back({"H", Hc,
                              sub(add(mul(leaf2(0, Hc), em(Scalar(-1))), leaf2(1, Hc)),
                                  mul(leaf2(0, A), mul(leaf2(1, B), em(-(beta + Scalar(1))))))});
            t.rows.push_back({"A", A, add(mul(leaf2(0, A), em(-beta)), leaf2(1, A))});
            t.rows.push_back({"B", B,
                              add(mul(leaf2(0, B), em(beta)),
                                  mul(exp_sigma(0, Scalar(1)), leaf2(1, B)))});
            t.rows.push_back({"E", Ee, add(mul(leaf2(0, Ee), em(Scalar(1))), leaf2(1, Ee))});
        } else {
            t.rows.push_back({"H", Hc,
                              add(add(mul(leaf2(0, Hc), em(Scalar(-1))), leaf2(1, Hc)),
                                  mul(leaf2(0, B), mul(leaf2(1, A), em(-(alpha + Scalar(1))))))});
            t.rows.push_back({"A", A,
                              add(mul(leaf2(0, A), em(alpha)),
                                  mul(exp_sigma(0, Scalar(1)), leaf2(1, A)))});
            t.rows.push_back({"B", B, add(mul(leaf2(0, B), em(-alpha)), leaf2(1, B))});
            t.rows.push_back({"E", Ee, add(mul(leaf2(0, Ee), em(Scalar(1))), leaf2(1, Ee))});
        }
    } else {
        std::string names;
        for (const auto& n : table_names()) names += (names.empty() ? "" : ", ") + n;
        throw name_error("unknown coproduct table '" + name + "' (available: " + names + ")");
    }
    return bindings.empty() ? t : t.substituted(bindings);
}

// --- dual tables -------------------------------------------------------------------

inline std::vector<std::string> dual_table_names() { return {"Pprime", "Etheta", "R", "DJR"}; }

inline DualTableDef get_dual_table(const std::string& name, const Bindings& bindings = {}) {
    using namespace catalog_detail;
    DualTableDef d;
    d.name = name;
    d.rmatrix = name;
    BracketTable t(dual_basis_names());
    auto S = [](long n, long m) { return Scalar::rational(n, m); };

    if (name == "Pprime") {
        d.description = "dual brackets of the peripheric quantization";
        t.set("X11", "X13", {{"X11", S(-1, 3)}, {"X33", S(1, 3)}});
        t.set("X22", "X13", {{"X11", S(-1, 3)}, {"X33", S(1, 3)}});
        t.set("X33", "X13", {{"X11", S(2, 3)}, {"X33", S(-2, 3)}});
        t.set("X11", "X23", {{"X21", S(2, 3)}});
        t.set("X22", "X23", {{"X21", S(-4, 3)}});
        t.set("X33", "X23", {{"X21", S(2, 3)}});
        t.set("X11", "X33", {{"X31", S(1, 3)}});
        t.set("X11", "X12", {{"X32", S(1, 3)}});
        t.set("X11", "X22", {{"X31", S(-1, 3)}});
        t.set("X12", "X23", {{"X11", Scalar(-1)}, {"X33", Scalar(1)}});
        t.set("X12", "X13", {{"X12", Scalar(-1)}});
        t.set("X12", "X21", {{"X31", Scalar(1)}});
        t.set("X13", "X31", {{"X31", Scalar(1)}});
        t.set("X23", "X32", {{"X31", Scalar(1)}});
        t.set("X13", "X32", {{"X32", Scalar(1)}});
        t.set("X22", "X33", {{"X31", S(-1, 3)}});
        t.set("X12", "X33", {{"X32", S(-1, 3)}});
        t.set("X12", "X22", {{"X32", S(2, 3)}});
    } else if (name == "Etheta") {
        d.description = "dual brackets of the extended family, parameter theta";
        d.params = {Param::Theta};
        Scalar th = thet(), half = S(1, 2);
        t.set("X11", "X12", {{"X32", half * (Scalar(1) + th)}});
        t.set("X11", "X22", {{"X31", th}});
        t.set("X11", "X23", {{"X21", half * (Scalar(1) - th)}});
        t.set("X11", "X13", {{"X11", -half * (th + Scalar(1))}, {"X33", half * (th + Scalar(1))}});
        t.set("X11", "X33", {{"X31", -th}});
        t.set("X12", "X13", {{"X12", half * (Scalar(3) * th - Scalar(1))}});
        t.set("X12", "X21", {{"X31", Scalar(1)}});
        t.set("X12", "X23", {{"X11", Scalar(-1)}, {"X33", Scalar(1)}});
        t.set("X12", "X22", {{"X32", th + Scalar(1)}});
        t.set("X12", "X33", {{"X32", -half * (th + Scalar(1))}});
        t.set("X13", "X21", {{"X21", half * (Scalar(3) * th + Scalar(1))}});
        t.set("X13", "X22", {{"X11", -th}, {"X33", th}});
        t.set("X13", "X23", {{"X23", half * (Scalar(3) * th + Scalar(1))}});
        t.set("X13", "X31", {{"X31", Scalar(1)}});
        t.set("X13", "X32", {{"X32", half * (Scalar(1) - Scalar(3) * th)}});
        t.set("X13", "X33", {{"X11", half * (th - Scalar(1))}, {"X33", -half * (th - Scalar(1))}});
        t.set("X22", "X23", {{"X21", th - Scalar(1)}});
        t.set("X22", "X33", {{"X31", th}});
        t.set("X23", "X32", {{"X31", Scalar(1)}});
        t.set("X23", "X33", {{"X21", half * (th - Scalar(1))}});
    } else if (name == "R") {
        d.description = "dual brackets of the Reshetikhin direction";
        t.set("X11", "X12", {{"X12", Scalar(-1)}});
        t.set("X11", "X21", {{"X21", Scalar(1)}});
        t.set("X22", "X12", {{"X12", Scalar(-1)}});
        t.set("X22", "X21", {{"X21", Scalar(1)}});
        t.set("X33", "X12", {{"X12", Scalar(2)}});
        t.set("X33", "X21", {{"X21", Scalar(-2)}});
        t.set("X11", "X13", {{"X13", Scalar(1)}});
        t.set("X11", "X31", {{"X31", Scalar(-1)}});
        t.set("X22", "X13", {{"X13", Scalar(-2)}});
        t.set("X22", "X31", {{"X31", Scalar(2)}});
        t.set("X33", "X13", {{"X13", Scalar(1)}});
        t.set("X33", "X31", {{"X31", Scalar(-1)}});
        t.set("X11", "X23", {{"X23", Scalar(2)}});
        t.set("X11", "X32", {{"X32", Scalar(-2)}});
        t.set("X22", "X23", {{"X23", Scalar(-1)}});
        t.set("X22", "X32", {{"X32", Scalar(1)}});
        t.set("X33", "X23", {{"X23", Scalar(-1)}});
        t.set("X33", "X32", {{"X32", Scalar(1)}});
        // the table is eta-free: the r-matrix direction is recorded at eta = 1
    } else if (name == "DJR") {
        d.description = "dual brackets of the Reshetikhin-twisted Drinfeld-Jimbo family, parameter eta";
        d.params = {Param::Eta};
        Scalar e = eta();
        t.set("X11", "X12", {{"X12", Scalar(1) - e}});
        t.set("X11", "X21", {{"X21", Scalar(1) + e}});
        t.set("X11", "X13", {{"X13", Scalar(1) + e}});
        t.set("X11", "X31", {{"X31", Scalar(1) - e}});
        t.set("X11", "X23", {{"X23", Scalar(2) * e}});
        t.set("X11", "X32", {{"X32", Scalar(-2) * e}});
        t.set("X22", "X12", {{"X12", Scalar(-1) - e}});
        t.set("X22", "X21", {{"X21", Scalar(-1) + e}});
        t.set("X22", "X13", {{"X13", Scalar(-2) * e}});
        t.set("X22", "X31", {{"X31", Scalar(2) * e}});
        t.set("X22", "X23", {{"X23", Scalar(1) - e}});
        t.set("X22", "X32", {{"X32", Scalar(1) + e}});
        t.set("X33", "X12", {{"X12", Scalar(2) * e}});
        t.set("X33", "X21", {{"X21", Scalar(-2) * e}});
        t.set("X33", "X13", {{"X13", Scalar(-1) + e}});
        t.set("X33", "X31", {{"X31", Scalar(-1) - e}});
        t.set("X33", "X23", {{"X23", Scalar(-1) - e}});
        t.set("X33", "X32", {{"X32", Scalar(-1)}, {"X23", e}});
        d.flagged.insert({"X33", "X32"});
        t.set("X12", "X23", {{"X13", Scalar(2)}});
        t.set("X21", "X32", {{"X31", Scalar(2)}});
    } else {
        std::string names;
        for (const auto& n : dual_table_names()) names += (names.empty() ? "" : ", ") + n;
        throw name_error("unknown dual table '" + name + "' (available: " + names + ")");
    }
    d.table = bindings.empty() ? t : t.substitute(bindings);
    return d;
}

// --- involution --------------------------------------------------------------------

/// The linear involution-like map swapping the two simple root directions:
/// E12 -> E23, E23 -> -E12, E21 -> E32, E32 -> -E21, H12 <-> H23, fixing E13
/// and E31. Extends to an algebra automorphism of U(gl(3)).
struct Involution {
    Matrix op;  // 9x9 over Scalar

    LieElement apply(const LieElement& x) const { return apply_op(op, x); }

    TensorExpr apply(const TensorExpr& e) const {
        TensorExpr out{e.legs, {}};
        for (const auto& t : e.terms) {
            Term nt;
            nt.coeff = t.coeff;
            for (const auto& f : t.factors) {
                if (f.kind == Factor::Kind::Leaf) {
                    nt.factors.push_back(Factor::leaf(f.leg, apply(f.elem)));
                } else {
                    Factor nf = f;
                    nf.arg = std::make_shared<TensorExpr>(apply(*f.arg));
                    nt.factors.push_back(std::move(nf));
                }
            }
            out.terms.push_back(std::move(nt));
        }
        return out;
    }
};

inline Involution involution() {
    using namespace gens;
    Matrix op(kGlDim, kGlDim);
    auto assign = [&](int from_i, int from_j, const LieElement& to) {
        for (const auto& [k, v] : to.coeffs()) op(k, gl_index(from_i, from_j)) = v;
    };
    assign(1, 2, E(2, 3));
    assign(2, 3, -E(1, 2));
    assign(2, 1, E(3, 2));
    assign(3, 2, -E(2, 1));
    assign(1, 3, E(1, 3));
    assign(3, 1, E(3, 1));
    assign(1, 1, -E(3, 3));
    assign(2, 2, -E(2, 2));
    assign(3, 3, -E(1, 1));
    return Involution{std::move(op)};
}

// --- listing -----------------------------------------------------------------------

struct CatalogEntry {
    std::string kind;  // twist | rmatrix | table | dual
    std::string name;
    std::string params;
    std::string description;
};

inline std::vector<CatalogEntry> list_catalog() {
    std::vector<CatalogEntry> out;
    auto param_sig = [](const std::vector<Param>& ps) {
        std::string s;
        for (auto p : ps) s += (s.empty() ? "" : ", ") + std::string(param_name(p));
        return s;
    };
    for (const auto& n : twist_names()) {
        TwistDef t = get_twist(n);
        out.push_back({"twist", n, param_sig(t.params), t.description});
    }
    for (const auto& n : rmatrix_names()) {
        std::string desc, params;
        if (n == "Pprime") desc = "classical r-matrix of the peripheric twist";
        if (n == "Etheta") { desc = "classical r-matrix family of the extended twists"; params = "theta"; }
        if (n == "j") desc = "jordanian-extension direction H13 ^ E13 + 2 E12 ^ E23";
        if (n == "DJ") desc = "Drinfeld-Jimbo r-matrix (catalog normalization)";
        if (n == "R") { desc = "abelian Cartan wedge eta H23 ^ H12"; params = "eta"; }
        if (n == "DJR") { desc = "Reshetikhin-shifted Drinfeld-Jimbo r-matrix"; params = "eta"; }
        out.push_back({"rmatrix", n, params, desc});
    }
    for (const auto& n : table_names()) {
        CoproductTable t = get_table(n);
        out.push_back({"table", n, param_sig(t.params), t.description});
    }
    for (const auto& n : dual_table_names()) {
        DualTableDef d = get_dual_table(n);
        out.push_back({"dual", n, param_sig(d.params), d.description});
    }
    return out;
}

}  // namespace twistlab
