#pragma once

#include <tuple>
#include <vector>

#include "twistlab/liealg.hpp"

namespace twistlab {

/// Element of gl(3) (x) gl(3) as a sparse coefficient map. Skewness is a
/// checkable predicate, not an invariant.
class Tensor2 {
  public:
    using Key = std::pair<int, int>;

    Tensor2() = default;

    const std::map<Key, Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(int a, int b) const {
        auto it = c_.find({a, b});
        return it == c_.end() ? Scalar(0) : it->second;
    }
    void add(int a, int b, const Scalar& v) {
        if (v.is_zero()) return;
        Key k{a, b};
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_[k] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    void add(const LieElement& x, const LieElement& y, const Scalar& scale = Scalar(1)) {
        for (const auto& [a, ca] : x.coeffs())
            for (const auto& [b, cb] : y.coeffs()) add(a, b, ca * cb * scale);
    }

    Tensor2 operator+(const Tensor2& o) const {
        Tensor2 r = *this;
        for (const auto& [k, v] : o.c_) r.add(k.first, k.second, v);
        return r;
    }
    Tensor2 operator-(const Tensor2& o) const {
        Tensor2 r = *this;
        for (const auto& [k, v] : o.c_) r.add(k.first, k.second, -v);
        return r;
    }
    Tensor2 operator*(const Scalar& s) const {
        Tensor2 r;
        for (const auto& [k, v] : c_) r.add(k.first, k.second, v * s);
        return r;
    }
    bool operator==(const Tensor2& o) const { return c_ == o.c_; }
    bool operator!=(const Tensor2& o) const { return !(*this == o); }

    Tensor2 swapped() const {
        Tensor2 r;
        for (const auto& [k, v] : c_) r.add(k.second, k.first, v);
        return r;
    }
    bool is_skew() const { return (*this + swapped()).is_zero(); }

    Tensor2 substitute(const std::map<Param, Scalar>& bindings) const {
        Tensor2 r;
        for (const auto& [k, v] : c_) r.add(k.first, k.second, v.substitute(bindings));
        return r;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [k, v] : c_) {
            if (!out.empty()) out += " + ";
            out += "(" + v.str() + ")*" + gl_name(k.first) + "(x)" + gl_name(k.second);
        }
        return out;
    }

  private:
    std::map<Key, Scalar> c_;
};

/// Element of gl(3)^(x)3, used for Yang-Baxter brackets and their witnesses.
class Tensor3 {
  public:
    using Key = std::tuple<int, int, int>;

    const std::map<Key, Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    void add(int a, int b, int c, const Scalar& v) {
        if (v.is_zero()) return;
        Key k{a, b, c};
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_[k] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    Tensor3 operator+(const Tensor3& o) const {
        Tensor3 r = *this;
        for (const auto& [k, v] : o.c_) r.add(std::get<0>(k), std::get<1>(k), std::get<2>(k), v);
        return r;
    }
    bool operator==(const Tensor3& o) const { return c_ == o.c_; }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [k, v] : c_) {
            if (!out.empty()) out += " + ";
            out += "(" + v.str() + ")*" + gl_name(std::get<0>(k)) + "(x)" +
                   gl_name(std::get<1>(k)) + "(x)" + gl_name(std::get<2>(k));
        }
        return out;
    }

  private:
    std::map<Key, Scalar> c_;
};

inline Tensor2 wedge(const LieElement& x, const LieElement& y) {
    Tensor2 r;
    r.add(x, y);
    r.add(y, x, Scalar(-1));
    return r;
}

inline Tensor2 tensor2(const LieElement& x, const LieElement& y) {
    Tensor2 r;
    r.add(x, y);
    return r;
}

namespace detail {
inline LieElement basis_elem(int idx) { return LieElement::basis(gl_row(idx), gl_col(idx)); }
}

/// The classical Yang-Baxter bracket [r12, r13] + [r12, r23] + [r13, r23],
/// computed componentwise with the gl(3) bracket on shared legs.
inline Tensor3 cybe(const Tensor2& r) {
    Tensor3 out;
    for (const auto& [k1, v1] : r.coeffs())
        for (const auto& [k2, v2] : r.coeffs()) {
            Scalar c = v1 * v2;
            LieElement ea = detail::basis_elem(k1.first), eb = detail::basis_elem(k1.second);
            LieElement ec = detail::basis_elem(k2.first), ed = detail::basis_elem(k2.second);
            // [r12, r13]: [a,c] (x) b (x) d
            LieElement ac = bracket(ea, ec), bc = bracket(eb, ec), bd = bracket(eb, ed);
            for (const auto& [x, cx] : ac.coeffs()) out.add(x, k1.second, k2.second, c * cx);
            // [r12, r23]: a (x) [b,c] (x) d
            for (const auto& [x, cx] : bc.coeffs()) out.add(k1.first, x, k2.second, c * cx);
            // [r13, r23]: a (x) c (x) [b,d]
            for (const auto& [x, cx] : bd.coeffs()) out.add(k1.first, k2.first, x, c * cx);
        }
    return out;
}

/// (ad_x (x) 1 (x) 1 + 1 (x) ad_x (x) 1 + 1 (x) 1 (x) ad_x)(t) = 0 for every
/// basis element x.
inline bool is_ad_invariant(const Tensor3& t) {
    for (int g = 0; g < kGlDim; ++g) {
        LieElement x = detail::basis_elem(g);
        Tensor3 acted;
        for (const auto& [k, v] : t.coeffs()) {
            auto [a, b, c] = k;
            LieElement xa = bracket(x, detail::basis_elem(a));
            LieElement xb = bracket(x, detail::basis_elem(b));
            LieElement xc = bracket(x, detail::basis_elem(c));
            for (const auto& [y, cy] : xa.coeffs()) acted.add(y, b, c, v * cy);
            for (const auto& [y, cy] : xb.coeffs()) acted.add(a, y, c, v * cy);
            for (const auto& [y, cy] : xc.coeffs()) acted.add(a, b, y, v * cy);
        }
        if (!acted.is_zero()) return false;
    }
    return true;
}

/// delta(x) = (ad_x (x) 1 + 1 (x) ad_x)(r).
inline Tensor2 cobracket(const Tensor2& r, const LieElement& x) {
    Tensor2 out;
    for (const auto& [k, v] : r.coeffs()) {
        LieElement left = bracket(x, detail::basis_elem(k.first));
        LieElement right = bracket(x, detail::basis_elem(k.second));
        for (const auto& [y, cy] : left.coeffs()) out.add(y, k.second, v * cy);
        for (const auto& [y, cy] : right.coeffs()) out.add(k.first, y, v * cy);
    }
    return out;
}

inline std::vector<std::string> dual_basis_names() {
    std::vector<std::string> names;
    names.reserve(kGlDim);
    for (int idx = 0; idx < kGlDim; ++idx)
        names.push_back("X" + std::to_string(gl_row(idx)) + std::to_string(gl_col(idx)));
    return names;
}

/// Structure constants of the dual bracket induced by the cobracket of r,
/// with the pairing <X_ab, E_cd> = d_ac d_bd:
///   [X_a, X_b] = sum_c gamma_c^{ab} X_c  where  delta(e_c) = sum gamma_c^{ab} e_a (x) e_b
/// (antisymmetrized in (a, b)).
inline BracketTable dual_brackets(const Tensor2& r) {
    BracketTable t(dual_basis_names());
    std::array<Tensor2, kGlDim> deltas;
    for (int c = 0; c < kGlDim; ++c) deltas[static_cast<std::size_t>(c)] = cobracket(r, detail::basis_elem(c));
    for (int a = 0; a < kGlDim; ++a)
        for (int b = a + 1; b < kGlDim; ++b) {
            BracketTable::Coeffs coeffs;
            for (int c = 0; c < kGlDim; ++c) {
                const Tensor2& d = deltas[static_cast<std::size_t>(c)];
                Scalar g = (d.coeff(a, b) - d.coeff(b, a)) * Scalar::rational(1, 2);
                if (!g.is_zero()) coeffs[c] = g;
            }
            if (!coeffs.empty()) t.set(a, b, std::move(coeffs));
        }
    return t;
}

/// Apply a 9x9 operator on gl(3) to both legs.
inline Tensor2 transform(const Matrix& op, const Tensor2& r) {
    Tensor2 out;
    for (const auto& [k, v] : r.coeffs()) {
        LieElement a = apply_op(op, detail::basis_elem(k.first));
        LieElement b = apply_op(op, detail::basis_elem(k.second));
        out.add(a, b, v);
    }
    return out;
}

// --- Lie pencil compatibility ------------------------------------------------

struct PencilResult {
    /// Primitive polynomial generators (in the parameters of the two tables)
    /// whose common vanishing is exactly the compatibility locus of the
    /// mixed terms.
    std::vector<Poly> generators;
};

/// Compatibility constraints for the pencil s*b1 + t*b2 of bracket tables.
/// Both inputs must individually satisfy Jacobi; the pure s^2/t^2 parts of
/// the pencil jacobiator then vanish and the mixed s*t coefficients form the
/// returned constraint set.
inline PencilResult pencil_solve(const BracketTable& b1, const BracketTable& b2) {
    if (b1.basis() != b2.basis()) throw error("pencil tables over different bases");
    for (const auto* table : {&b1, &b2}) {
        auto jac = jacobiator(*table);
        if (!jac.empty()) {
            auto& [key, val] = *jac.begin();
            throw error(std::string("pencil input table ") + (table == &b1 ? "1" : "2") +
                        " violates Jacobi at (" + table->basis()[std::get<0>(key)] + ", " +
                        table->basis()[std::get<1>(key)] + ", " + table->basis()[std::get<2>(key)] +
                        ")");
        }
    }
    BracketTable pencil = b1.scaled(Scalar(Param::S)) + b2.scaled(Scalar(Param::T));
    auto jac = jacobiator(pencil);

    std::vector<Poly> gens;
    int si = static_cast<int>(Param::S), ti = static_cast<int>(Param::T);
    for (const auto& [triple, coeffs] : jac) {
        for (const auto& [basis_idx, value] : coeffs) {
            if (value.den().uses(Param::S) || value.den().uses(Param::T))
                throw error("pencil jacobiator is not polynomial in s, t");
            // split the numerator by (s, t) bidegree
            std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> parts;
            for (const auto& [m, c] : value.num().terms()) {
                Monomial rest = m;
                auto key = std::make_pair(m.exp[si], m.exp[ti]);
                rest.exp[si] = 0;
                rest.exp[ti] = 0;
                parts[key].add_term(rest, c);
            }
            for (const auto& [deg, poly] : parts) {
                if (deg.first + deg.second != 2 || poly.is_zero()) continue;
                if (deg == std::make_pair(2u, 0u) || deg == std::make_pair(0u, 2u))
                    throw error("pure pencil terms failed to vanish despite Jacobi preconditions");
                Poly p = poly.primitive().first;
                // the denominator of `value` is (s,t)-free, so it scales the
                // constraint by a unit and can be dropped
                bool seen = false;
                for (const auto& g : gens)
                    if (g == p) {
                        seen = true;
                        break;
                    }
                if (!seen) gens.push_back(p);
            }
        }
    }
    return PencilResult{std::move(gens)};
}

}  // namespace twistlab
