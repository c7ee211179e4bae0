#pragma once

#include <algorithm>
#include <memory>
#include <vector>

#include "twistlab/liealg.hpp"
#include "twistlab/matrix.hpp"
#include "twistlab/reps.hpp"

namespace twistlab {

struct TensorExpr;
using ExprPtr = std::shared_ptr<const TensorExpr>;

/// One multiplicative factor of a term: either a Lie-algebra leaf on a
/// single tensor leg, or exp(arg) / log(1 + arg) where arg is a full
/// expression over the same legs as the enclosing one.
struct Factor {
    enum class Kind { Leaf, Exp, Log1p };
    Kind kind = Kind::Leaf;
    int leg = 0;
    LieElement elem;
    ExprPtr arg;

    static Factor leaf(int leg, LieElement x) {
        Factor f;
        f.kind = Kind::Leaf;
        f.leg = leg;
        f.elem = std::move(x);
        return f;
    }
    static Factor exp(ExprPtr a) {
        Factor f;
        f.kind = Kind::Exp;
        f.arg = std::move(a);
        return f;
    }
    static Factor log1p(ExprPtr a) {
        Factor f;
        f.kind = Kind::Log1p;
        f.arg = std::move(a);
        return f;
    }
};

/// Scalar coefficient times an ordered product of factors. Factors on
/// different legs commute; factors on one leg are kept in product order.
struct Term {
    Scalar coeff = Scalar(1);
    std::vector<Factor> factors;
};

/// Finite symbolic expression in U(gl(3))^(x)legs: a sum of terms. The
/// structure is never expanded through exp/log nodes except by the
/// representation-truncated expansion below.
struct TensorExpr {
    int legs = 1;
    std::vector<Term> terms;
};

int expr_cmp(const TensorExpr& a, const TensorExpr& b);

inline int factor_cmp(const Factor& a, const Factor& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (a.kind == Factor::Kind::Leaf) {
        if (a.leg != b.leg) return a.leg < b.leg ? -1 : 1;
        return a.elem.cmp(b.elem);
    }
    return expr_cmp(*a.arg, *b.arg);
}

inline int term_cmp(const Term& a, const Term& b) {
    std::size_t n = std::min(a.factors.size(), b.factors.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = factor_cmp(a.factors[i], b.factors[i]);
        if (c != 0) return c;
    }
    if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size() ? -1 : 1;
    return a.coeff.cmp(b.coeff);
}

inline int expr_cmp(const TensorExpr& a, const TensorExpr& b) {
    if (a.legs != b.legs) return a.legs < b.legs ? -1 : 1;
    std::size_t n = std::min(a.terms.size(), b.terms.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = term_cmp(a.terms[i], b.terms[i]);
        if (c != 0) return c;
    }
    if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size() ? -1 : 1;
    return 0;
}

// --- constructors ------------------------------------------------------------

inline TensorExpr expr_zero(int legs) { return TensorExpr{legs, {}}; }

inline TensorExpr expr_scalar(int legs, const Scalar& s) {
    if (s.is_zero()) return expr_zero(legs);
    return TensorExpr{legs, {Term{s, {}}}};
}

inline TensorExpr expr_one(int legs) { return expr_scalar(legs, Scalar(1)); }

inline TensorExpr expr_leaf(int legs, int leg, const LieElement& x) {
    if (x.is_zero()) return expr_zero(legs);
    return TensorExpr{legs, {Term{Scalar(1), {Factor::leaf(leg, x)}}}};
}

inline TensorExpr exp_of(const TensorExpr& e) {
    if (e.terms.empty()) return expr_one(e.legs);
    return TensorExpr{e.legs, {Term{Scalar(1), {Factor::exp(std::make_shared<TensorExpr>(e))}}}};
}

inline TensorExpr log1p_of(const TensorExpr& e) {
    if (e.terms.empty()) return expr_zero(e.legs);
    return TensorExpr{e.legs, {Term{Scalar(1), {Factor::log1p(std::make_shared<TensorExpr>(e))}}}};
}

// --- algebra ------------------------------------------------------------------

inline TensorExpr add(const TensorExpr& a, const TensorExpr& b) {
    if (a.legs != b.legs) throw dimension_error("adding expressions with different leg counts");
    TensorExpr out{a.legs, a.terms};
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return out;
}

inline TensorExpr scale(const TensorExpr& a, const Scalar& s) {
    if (s.is_zero()) return expr_zero(a.legs);
    TensorExpr out{a.legs, a.terms};
    for (auto& t : out.terms) t.coeff *= s;
    return out;
}

inline TensorExpr sub(const TensorExpr& a, const TensorExpr& b) {
    return add(a, scale(b, Scalar(-1)));
}

inline TensorExpr mul(const TensorExpr& a, const TensorExpr& b) {
    if (a.legs != b.legs) throw dimension_error("multiplying expressions with different leg counts");
    TensorExpr out{a.legs, {}};
    out.terms.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            Term t;
            t.coeff = ta.coeff * tb.coeff;
            if (t.coeff.is_zero()) continue;
            t.factors = ta.factors;
            t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
            out.terms.push_back(std::move(t));
        }
    return out;
}

inline TensorExpr expr_pow(const TensorExpr& a, unsigned n) {
    TensorExpr out = expr_one(a.legs);
    for (unsigned i = 0; i < n; ++i) out = mul(out, a);
    return out;
}

/// Re-shape an expression onto a wider leg space, shifting every leaf by
/// `offset` legs.
inline TensorExpr promote(const TensorExpr& e, int new_legs, int offset) {
    TensorExpr out{new_legs, {}};
    out.terms.reserve(e.terms.size());
    for (const auto& t : e.terms) {
        Term nt;
        nt.coeff = t.coeff;
        for (const auto& f : t.factors) {
            switch (f.kind) {
                case Factor::Kind::Leaf:
                    nt.factors.push_back(Factor::leaf(f.leg + offset, f.elem));
                    break;
                case Factor::Kind::Exp:
                    nt.factors.push_back(
                        Factor::exp(std::make_shared<TensorExpr>(promote(*f.arg, new_legs, offset))));
                    break;
                case Factor::Kind::Log1p:
                    nt.factors.push_back(
                        Factor::log1p(std::make_shared<TensorExpr>(promote(*f.arg, new_legs, offset))));
                    break;
            }
        }
        out.terms.push_back(std::move(nt));
    }
    return out;
}

inline TensorExpr tensor_prod(const TensorExpr& a, const TensorExpr& b) {
    int legs = a.legs + b.legs;
    return mul(promote(a, legs, 0), promote(b, legs, a.legs));
}

// --- normalization -------------------------------------------------------------

/// Canonical form: multi-component leaves expand into basis leaves (so the
/// same element written as one combination leaf or as a sum of scaled basis
/// leaves compares equal), exp(0) -> 1, log1p(0) -> 0, structurally equal
/// terms merge, and terms sort into a fixed order. Factor order within a
/// term is meaningful and never changed.
inline TensorExpr normalize(const TensorExpr& e) {
    std::vector<Term> cleaned;
    for (const auto& t : e.terms) {
        if (t.coeff.is_zero()) continue;
        // expand the term into a small sum over basis leaves
        std::vector<Term> partial{Term{t.coeff, {}}};
        bool dead = false;
        for (const auto& f : t.factors) {
            if (f.kind == Factor::Kind::Leaf) {
                if (f.elem.is_zero()) {
                    dead = true;
                    break;
                }
                std::vector<Term> next;
                for (const auto& p : partial)
                    for (const auto& [idx, c] : f.elem.coeffs()) {
                        Term nt = p;
                        nt.coeff *= c;
                        nt.factors.push_back(
                            Factor::leaf(f.leg, LieElement::basis(gl_row(idx), gl_col(idx))));
                        next.push_back(std::move(nt));
                    }
                partial = std::move(next);
                continue;
            }
            TensorExpr arg = normalize(*f.arg);
            if (arg.terms.empty()) {
                if (f.kind == Factor::Kind::Exp) continue;  // exp(0) = 1
                dead = true;                                 // log1p(0) = 0
                break;
            }
            Factor nf = f;
            nf.arg = std::make_shared<TensorExpr>(std::move(arg));
            for (auto& p : partial) p.factors.push_back(nf);
        }
        if (!dead)
            for (auto& p : partial) cleaned.push_back(std::move(p));
    }

    // merge identical factor sequences
    std::vector<Term> merged;
    for (auto& t : cleaned) {
        bool found = false;
        for (auto& m : merged) {
            if (m.factors.size() != t.factors.size()) continue;
            bool same = true;
            for (std::size_t i = 0; i < m.factors.size() && same; ++i)
                same = factor_cmp(m.factors[i], t.factors[i]) == 0;
            if (same) {
                m.coeff += t.coeff;
                found = true;
                break;
            }
        }
        if (!found) merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    std::sort(merged.begin(), merged.end(), [](const Term& a, const Term& b) { return term_cmp(a, b) < 0; });
    return TensorExpr{e.legs, std::move(merged)};
}

/// Merge structurally identical terms and drop zeros without expanding
/// combination leaves; keeps intermediate sums compact during truncated
/// expansions while preserving the shape of the input.
inline TensorExpr normalize_light(const TensorExpr& e) {
    std::vector<Term> merged;
    for (const auto& t : e.terms) {
        if (t.coeff.is_zero()) continue;
        bool dead = false;
        for (const auto& f : t.factors)
            if (f.kind == Factor::Kind::Leaf && f.elem.is_zero()) {
                dead = true;
                break;
            }
        if (dead) continue;
        bool found = false;
        for (auto& m : merged) {
            if (m.factors.size() != t.factors.size()) continue;
            bool same = true;
            for (std::size_t i = 0; i < m.factors.size() && same; ++i)
                same = factor_cmp(m.factors[i], t.factors[i]) == 0;
            if (same) {
                m.coeff += t.coeff;
                found = true;
                break;
            }
        }
        if (!found) merged.push_back(t);
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    return TensorExpr{e.legs, std::move(merged)};
}

inline bool expr_equal(const TensorExpr& a, const TensorExpr& b) {
    return expr_cmp(normalize(a), normalize(b)) == 0;
}

inline bool is_identity_expr(const TensorExpr& e) {
    TensorExpr n = normalize(e);
    return n.terms.size() == 1 && n.terms[0].factors.empty() && n.terms[0].coeff.is_one();
}

inline TensorExpr substitute(const TensorExpr& e, const std::map<Param, Scalar>& bindings) {
    TensorExpr out{e.legs, {}};
    for (const auto& t : e.terms) {
        Term nt;
        nt.coeff = t.coeff.substitute(bindings);
        for (const auto& f : t.factors) {
            if (f.kind == Factor::Kind::Leaf) {
                nt.factors.push_back(Factor::leaf(f.leg, f.elem.substitute(bindings)));
            } else {
                Factor nf = f;
                nf.arg = std::make_shared<TensorExpr>(substitute(*f.arg, bindings));
                nt.factors.push_back(std::move(nf));
            }
        }
        out.terms.push_back(std::move(nt));
    }
    return normalize(out);
}

// --- Hopf structure maps --------------------------------------------------------

/// Undeformed coproduct applied to one leg: the chosen leg splits into legs
/// (leg, leg+1), generators become primitive, and the map passes through
/// sums, products, exp and log ( log(1+E) -> log(1 (x) 1 + coproduct(E)) ).
inline TensorExpr coproduct_leg(const TensorExpr& e, int leg) {
    int legs = e.legs + 1;
    TensorExpr out = expr_zero(legs);
    for (const auto& t : e.terms) {
        TensorExpr acc = expr_scalar(legs, t.coeff);
        for (const auto& f : t.factors) {
            TensorExpr fe = expr_zero(legs);
            switch (f.kind) {
                case Factor::Kind::Leaf: {
                    if (f.leg < leg) {
                        fe = expr_leaf(legs, f.leg, f.elem);
                    } else if (f.leg > leg) {
                        fe = expr_leaf(legs, f.leg + 1, f.elem);
                    } else {
                        fe = add(expr_leaf(legs, leg, f.elem), expr_leaf(legs, leg + 1, f.elem));
                    }
                    break;
                }
                case Factor::Kind::Exp:
                    fe = TensorExpr{legs,
                                    {Term{Scalar(1),
                                          {Factor::exp(std::make_shared<TensorExpr>(
                                              coproduct_leg(*f.arg, leg)))}}}};
                    break;
                case Factor::Kind::Log1p:
                    fe = TensorExpr{legs,
                                    {Term{Scalar(1),
                                          {Factor::log1p(std::make_shared<TensorExpr>(
                                              coproduct_leg(*f.arg, leg)))}}}};
                    break;
            }
            acc = mul(acc, fe);
        }
        out = add(out, acc);
    }
    return out;
}

/// Counit applied to one leg: kills generators on that leg, is an algebra
/// map elsewhere. Result has one leg fewer.
inline TensorExpr counit_leg(const TensorExpr& e, int leg) {
    int legs = e.legs - 1;
    if (legs < 0) throw dimension_error("counit on a scalar expression");
    TensorExpr out = expr_zero(legs);
    for (const auto& t : e.terms) {
        TensorExpr acc = expr_scalar(legs, t.coeff);
        bool dead = false;
        for (const auto& f : t.factors) {
            if (f.kind == Factor::Kind::Leaf) {
                if (f.leg == leg) {
                    dead = true;  // counit of a generator is zero
                    break;
                }
                acc = mul(acc, expr_leaf(legs, f.leg - (f.leg > leg ? 1 : 0), f.elem));
                continue;
            }
            TensorExpr arg = normalize(counit_leg(*f.arg, leg));
            if (arg.terms.empty()) {
                if (f.kind == Factor::Kind::Exp) continue;  // exp(0) = 1
                dead = true;                                 // log1p(0) = 0
                break;
            }
            TensorExpr fe{legs,
                          {Term{Scalar(1),
                                {f.kind == Factor::Kind::Exp
                                     ? Factor::exp(std::make_shared<TensorExpr>(std::move(arg)))
                                     : Factor::log1p(std::make_shared<TensorExpr>(std::move(arg)))}}}};
            acc = mul(acc, fe);
        }
        if (!dead) out = add(out, acc);
    }
    return normalize(out);
}

/// Counit of a one-leg expression, as a scalar.
inline Scalar counit(const TensorExpr& e) {
    if (e.legs != 1) throw dimension_error("scalar counit expects a one-leg expression");
    TensorExpr r = counit_leg(promote(e, 1, 0), 0);
    // r has zero legs; every surviving term is a plain scalar
    Scalar s(0);
    for (const auto& t : r.terms) s += t.coeff;
    return s;
}

/// Antipode of a one-leg expression: reverses products, negates generators,
/// passes through exp and log arguments.
inline TensorExpr antipode(const TensorExpr& e) {
    if (e.legs != 1) throw dimension_error("antipode expects a one-leg expression");
    TensorExpr out{1, {}};
    for (const auto& t : e.terms) {
        Term nt;
        nt.coeff = t.coeff;
        for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
            const Factor& f = *it;
            switch (f.kind) {
                case Factor::Kind::Leaf:
                    nt.factors.push_back(Factor::leaf(0, -f.elem));
                    break;
                case Factor::Kind::Exp:
                    nt.factors.push_back(Factor::exp(std::make_shared<TensorExpr>(antipode(*f.arg))));
                    break;
                case Factor::Kind::Log1p:
                    nt.factors.push_back(Factor::log1p(std::make_shared<TensorExpr>(antipode(*f.arg))));
                    break;
            }
        }
        out.terms.push_back(std::move(nt));
    }
    return out;
}

// --- evaluation -----------------------------------------------------------------

using LegReps = std::vector<const Representation*>;

inline Matrix leg_embed(const LegReps& reps, int leg, const Matrix& m) {
    Matrix out = leg == 0 ? m : Matrix::identity(reps[0]->dim());
    for (std::size_t i = 1; i < reps.size(); ++i)
        out = kron(out, static_cast<int>(i) == leg ? m : Matrix::identity(reps[static_cast<std::size_t>(i)]->dim()));
    return out;
}

/// Exact evaluation into the Kronecker-product matrix algebra of one
/// representation per leg. exp/log arguments must be nilpotent (resp.
/// unipotent) in the chosen representations.
inline Matrix eval(const TensorExpr& e, const LegReps& reps) {
    if (static_cast<int>(reps.size()) != e.legs)
        throw dimension_error("eval needs one representation per leg");
    int dim = 1;
    for (const auto* r : reps) dim *= r->dim();
    Matrix out(dim, dim);
    for (const auto& t : e.terms) {
        Matrix acc = Matrix::identity(dim);
        for (const auto& f : t.factors) {
            switch (f.kind) {
                case Factor::Kind::Leaf:
                    acc = acc * leg_embed(reps, f.leg, reps[static_cast<std::size_t>(f.leg)]->image(f.elem));
                    break;
                case Factor::Kind::Exp:
                    acc = acc * mat_exp_nilpotent(eval(*f.arg, reps));
                    break;
                case Factor::Kind::Log1p:
                    acc = acc * mat_log_unipotent(Matrix::identity(dim) + eval(*f.arg, reps));
                    break;
            }
        }
        out += acc * t.coeff;
    }
    return out;
}

inline Matrix eval(const TensorExpr& e, const Representation& r) { return eval(e, LegReps{&r}); }
inline Matrix eval(const TensorExpr& e, const Representation& r1, const Representation& r2) {
    return eval(e, LegReps{&r1, &r2});
}
inline Matrix eval(const TensorExpr& e, const Representation& r1, const Representation& r2,
                   const Representation& r3) {
    return eval(e, LegReps{&r1, &r2, &r3});
}

// --- representation-truncated expansion -------------------------------------------

/// One separable term of a two-leg expression: coeff (x) leg0 (x) leg1.
struct SweedlerTerm {
    Scalar coeff;
    TensorExpr leg0;  // one-leg expressions
    TensorExpr leg1;
};

namespace detail_expr {

inline void leg_support(const Factor& f, std::vector<bool>& mask);

inline void leg_support(const TensorExpr& e, std::vector<bool>& mask) {
    for (const auto& t : e.terms)
        for (const auto& f : t.factors) leg_support(f, mask);
}

inline void leg_support(const Factor& f, std::vector<bool>& mask) {
    if (f.kind == Factor::Kind::Leaf) {
        mask[static_cast<std::size_t>(f.leg)] = true;
    } else {
        leg_support(*f.arg, mask);
    }
}

/// Collapse an expression whose leaves all sit on one leg to a genuine
/// one-leg expression, recursing through exp/log arguments.
inline TensorExpr project_single(const TensorExpr& e) {
    TensorExpr out{1, {}};
    for (const auto& t : e.terms) {
        Term nt;
        nt.coeff = t.coeff;
        for (const auto& f : t.factors) {
            if (f.kind == Factor::Kind::Leaf) {
                nt.factors.push_back(Factor::leaf(0, f.elem));
            } else {
                auto sub = std::make_shared<TensorExpr>(project_single(*f.arg));
                nt.factors.push_back(f.kind == Factor::Kind::Exp ? Factor::exp(std::move(sub))
                                                                 : Factor::log1p(std::move(sub)));
            }
        }
        out.terms.push_back(std::move(nt));
    }
    return out;
}

/// Truncated expansion of exp(arg): sum of arg^k / k! until the power
/// evaluates to zero in the given representations.
inline TensorExpr exp_series(const TensorExpr& arg, const LegReps& reps, int max_pow) {
    TensorExpr sum = expr_one(arg.legs);
    TensorExpr power = arg;
    Rational kfact(1);
    for (int k = 1;; ++k) {
        if (eval(power, reps).is_zero()) break;
        if (k > max_pow)
            throw error("exponential expansion did not terminate within " + std::to_string(max_pow) +
                        " powers");
        sum = add(sum, scale(power, Scalar(make_rational(1, 1) / kfact)));
        power = normalize_light(mul(power, arg));
        kfact *= (k + 1);
    }
    return sum;
}

}  // namespace detail_expr

/// Expand a two-leg expression into a finite list of separable terms, valid
/// in (and truncated through) the given representations. Factors spanning
/// both legs must be exponentials; their arguments are expanded until the
/// next power vanishes.
inline std::vector<SweedlerTerm> sweedler_expand(const TensorExpr& e, const Representation& r0,
                                                 const Representation& r1, int max_pow = 40) {
    if (e.legs != 2) throw dimension_error("sweedler_expand expects a two-leg expression");
    LegReps reps{&r0, &r1};

    // repeatedly expand the first multi-leg exponential factor
    TensorExpr cur = e;
    bool changed = true;
    while (changed) {
        changed = false;
        TensorExpr next = expr_zero(2);
        for (const auto& t : cur.terms) {
            int split = -1;
            for (std::size_t i = 0; i < t.factors.size(); ++i) {
                const Factor& f = t.factors[i];
                if (f.kind == Factor::Kind::Leaf) continue;
                std::vector<bool> mask(2, false);
                detail_expr::leg_support(f, mask);
                if (mask[0] && mask[1]) {
                    if (f.kind == Factor::Kind::Log1p)
                        throw error("cannot expand a logarithm spanning both legs");
                    split = static_cast<int>(i);
                    break;
                }
            }
            if (split < 0) {
                next = add(next, TensorExpr{2, {t}});
                continue;
            }
            changed = true;
            TensorExpr prefix{2, {Term{t.coeff, {t.factors.begin(), t.factors.begin() + split}}}};
            TensorExpr suffix{2, {Term{Scalar(1), {t.factors.begin() + split + 1, t.factors.end()}}}};
            TensorExpr series = detail_expr::exp_series(*t.factors[static_cast<std::size_t>(split)].arg,
                                                        reps, max_pow);
            next = add(next, mul(mul(prefix, series), suffix));
        }
        cur = normalize_light(next);
    }

    // split each separable term by leg, preserving factor order per leg
    std::vector<SweedlerTerm> out;
    out.reserve(cur.terms.size());
    for (const auto& t : cur.terms) {
        SweedlerTerm st{t.coeff, expr_one(1), expr_one(1)};
        std::vector<Factor> f0, f1;
        for (const auto& f : t.factors) {
            std::vector<bool> mask(2, false);
            detail_expr::leg_support(f, mask);
            if (mask[0] && mask[1]) throw error("separable expansion left a two-leg factor");
            bool on0 = mask[0];
            Factor pf = f;
            if (f.kind == Factor::Kind::Leaf) {
                pf = Factor::leaf(0, f.elem);
            } else {
                auto proj = std::make_shared<TensorExpr>(detail_expr::project_single(*f.arg));
                pf = f.kind == Factor::Kind::Exp ? Factor::exp(std::move(proj))
                                                 : Factor::log1p(std::move(proj));
            }
            (on0 ? f0 : f1).push_back(std::move(pf));
        }
        st.leg0 = TensorExpr{1, {Term{Scalar(1), std::move(f0)}}};
        st.leg1 = TensorExpr{1, {Term{Scalar(1), std::move(f1)}}};
        out.push_back(std::move(st));
    }
    return out;
}

}  // namespace twistlab
