#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "twistlab/error.hpp"
#include "twistlab/matrix.hpp"
#include "twistlab/scalar.hpp"

namespace twistlab {

/// gl(3) basis element E_ij encoded as 3*(i-1) + (j-1) with i, j in 1..3.
inline constexpr int kGlDim = 9;

inline int gl_index(int i, int j) { return 3 * (i - 1) + (j - 1); }
inline int gl_row(int idx) { return idx / 3 + 1; }
inline int gl_col(int idx) { return idx % 3 + 1; }

inline std::string gl_name(int idx) {
    return "E" + std::to_string(gl_row(idx)) + std::to_string(gl_col(idx));
}

/// Element of gl(3) as a sparse coefficient map over the E_ij basis. Zero
/// coefficients are never stored, so structural equality is value equality.
class LieElement {
  public:
    LieElement() = default;
    static LieElement basis(int i, int j) {
        LieElement x;
        x.c_[gl_index(i, j)] = Scalar(1);
        return x;
    }

    const std::map<int, Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(int idx) const {
        auto it = c_.find(idx);
        return it == c_.end() ? Scalar(0) : it->second;
    }
    void add(int idx, const Scalar& v) {
        if (v.is_zero()) return;
        auto it = c_.find(idx);
        if (it == c_.end()) {
            c_[idx] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    LieElement operator+(const LieElement& o) const {
        LieElement r = *this;
        for (const auto& [k, v] : o.c_) r.add(k, v);
        return r;
    }
    LieElement operator-(const LieElement& o) const {
        LieElement r = *this;
        for (const auto& [k, v] : o.c_) r.add(k, -v);
        return r;
    }
    LieElement operator-() const {
        LieElement r;
        for (const auto& [k, v] : c_) r.c_[k] = -v;
        return r;
    }
    LieElement operator*(const Scalar& s) const {
        LieElement r;
        if (s.is_zero()) return r;
        for (const auto& [k, v] : c_) r.add(k, v * s);
        return r;
    }
    bool operator==(const LieElement& o) const { return c_ == o.c_; }
    bool operator!=(const LieElement& o) const { return !(*this == o); }

    /// Sum of diagonal coefficients; zero iff the element lies in sl(3).
    Scalar trace_functional() const {
        return coeff(gl_index(1, 1)) + coeff(gl_index(2, 2)) + coeff(gl_index(3, 3));
    }

    LieElement substitute(const std::map<Param, Scalar>& bindings) const {
        LieElement r;
        for (const auto& [k, v] : c_) r.add(k, v.substitute(bindings));
        return r;
    }

    int cmp(const LieElement& o) const {
        auto a = c_.begin();
        auto b = o.c_.begin();
        for (; a != c_.end() && b != o.c_.end(); ++a, ++b) {
            if (a->first != b->first) return a->first < b->first ? -1 : 1;
            int c = a->second.cmp(b->second);
            if (c != 0) return c;
        }
        if (a != c_.end()) return 1;
        if (b != o.c_.end()) return -1;
        return 0;
    }

    std::string str() const;

  private:
    std::map<int, Scalar> c_;
};

inline LieElement operator*(const Scalar& s, const LieElement& x) { return x * s; }

/// [E_ij, E_kl] = d_jk E_il - d_li E_kj, extended bilinearly.
inline LieElement bracket(const LieElement& x, const LieElement& y) {
    LieElement r;
    for (const auto& [a, ca] : x.coeffs())
        for (const auto& [b, cb] : y.coeffs()) {
            int i = gl_row(a), j = gl_col(a), k = gl_row(b), l = gl_col(b);
            Scalar c = ca * cb;
            if (j == k) r.add(gl_index(i, l), c);
            if (l == i) r.add(gl_index(k, j), -c);
        }
    return r;
}

/// Adjoint operator of x on the 9-dimensional gl(3) space, as a 9x9 matrix
/// acting on coordinate vectors in the E_ij basis.
inline Matrix ad(const LieElement& x) {
    Matrix m(kGlDim, kGlDim);
    for (int b = 0; b < kGlDim; ++b) {
        LieElement eb = LieElement::basis(gl_row(b), gl_col(b));
        LieElement img = bracket(x, eb);
        for (const auto& [k, v] : img.coeffs()) m(k, b) = v;
    }
    return m;
}

/// exp(v ad_x) as a 9x9 matrix; requires ad_x nilpotent (power at most the
/// ambient dimension). Invertible with inverse exp_ad(x, -v).
inline Matrix exp_ad(const LieElement& x, const Scalar& v) {
    Matrix a = ad(x);
    Matrix sum = Matrix::identity(kGlDim);
    Matrix power = a;  // ad^k
    Rational factorial(1);
    Scalar vk = v;  // v^k
    for (int k = 1; !power.is_zero(); ++k) {
        if (k > kGlDim) throw nilpotency_error("exp_ad of an element with non-nilpotent adjoint", k);
        sum += power * (vk * Scalar(make_rational(1, 1) / factorial));
        power = power * a;
        vk = vk * v;
        factorial *= (k + 1);
    }
    return sum;
}

/// Apply a 9x9 operator (coordinates in the E_ij basis) to an element.
inline LieElement apply_op(const Matrix& op, const LieElement& x) {
    LieElement r;
    for (const auto& [b, cb] : x.coeffs())
        for (int i = 0; i < kGlDim; ++i) {
            if (op(i, b).is_zero()) continue;
            r.add(i, op(i, b) * cb);
        }
    return r;
}

// --- named generators ------------------------------------------------------

namespace gens {
inline LieElement E(int i, int j) { return LieElement::basis(i, j); }
inline LieElement H12() { return E(1, 1) - E(2, 2); }
inline LieElement H23() { return E(2, 2) - E(3, 3); }
inline LieElement H13() { return E(1, 1) - E(3, 3); }
/// Cartan element of the peripheric carrier: (1/3)(H13 + H23).
inline LieElement H() { return (H13() + H23()) * Scalar::rational(1, 3); }
/// Cartan element commuting with E13: (1/3)(H12 - H23).
inline LieElement K() { return (H12() - H23()) * Scalar::rational(1, 3); }
/// The one-parameter Cartan family H + lambda*K.
inline LieElement H_lambda(const Scalar& lambda) { return H() + K() * lambda; }
}  // namespace gens

/// All named generators accepted on the text surfaces.
inline const std::map<std::string, LieElement>& named_generators() {
    static const std::map<std::string, LieElement> table = [] {
        std::map<std::string, LieElement> t;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) t[gl_name(gl_index(i, j))] = gens::E(i, j);
        t["H12"] = gens::H12();
        t["H13"] = gens::H13();
        t["H23"] = gens::H23();
        t["H"] = gens::H();
        t["K"] = gens::K();
        return t;
    }();
    return table;
}

inline const LieElement& generator(const std::string& name) {
    const auto& t = named_generators();
    auto it = t.find(name);
    if (it == t.end()) throw name_error("unknown generator '" + name + "'");
    return it->second;
}

inline std::string LieElement::str() const {
    if (c_.empty()) return "0";
    // prefer a named rendering when the element matches one exactly
    for (const auto& [name, val] : named_generators())
        if (*this == val) return name;
    std::string out;
    bool first = true;
    for (const auto& [k, v] : c_) {
        std::string cs = v.str();
        if (first && cs == "1") {
            out += gl_name(k);
        } else if (first && cs == "-1") {
            out += "-" + gl_name(k);
        } else if (first) {
            bool atomic = cs.find(' ') == std::string::npos;
            out += (atomic ? cs : "(" + cs + ")") + "*" + gl_name(k);
        } else if (cs == "1") {
            out += " + " + gl_name(k);
        } else if (cs == "-1") {
            out += " - " + gl_name(k);
        } else {
            bool atomic = cs.find(' ') == std::string::npos;
            out += " + " + (atomic ? cs : "(" + cs + ")") + "*" + gl_name(k);
        }
        first = false;
    }
    return "(" + out + ")";
}

// --- abstract bracket tables ------------------------------------------------

/// Antisymmetric structure constants over a named basis. Stored rows are for
/// index pairs a < b only and extended antisymmetrically; Jacobi validity is
/// a property to test, never an assumption (linear pencils of tables are
/// deliberately representable).
class BracketTable {
  public:
    using Coeffs = std::map<int, Scalar>;  // basis index -> coefficient

    BracketTable() = default;
    explicit BracketTable(std::vector<std::string> basis) : basis_(std::move(basis)) {}

    const std::vector<std::string>& basis() const { return basis_; }
    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] == name) return static_cast<int>(i);
        throw name_error("unknown basis symbol '" + name + "'");
    }

    void set(int a, int b, Coeffs value) {
        if (a == b) throw error("diagonal bracket entry");
        prune(value);
        if (a < b) {
            entries_[{a, b}] = std::move(value);
        } else {
            Coeffs neg;
            for (auto& [k, v] : value) neg[k] = -v;
            entries_[{b, a}] = std::move(neg);
        }
    }
    void set(const std::string& a, const std::string& b,
             const std::vector<std::pair<std::string, Scalar>>& value) {
        Coeffs c;
        for (const auto& [name, s] : value) {
            auto idx = index_of(name);
            auto it = c.find(idx);
            if (it == c.end()) c[idx] = s; else it->second += s;
        }
        set(index_of(a), index_of(b), std::move(c));
    }

    Coeffs bracket(int a, int b) const {
        if (a == b) return {};
        bool flip = a > b;
        if (flip) std::swap(a, b);
        auto it = entries_.find({a, b});
        if (it == entries_.end()) return {};
        if (!flip) return it->second;
        Coeffs neg;
        for (const auto& [k, v] : it->second) neg[k] = -v;
        return neg;
    }

    /// Bilinear extension to coefficient vectors.
    Coeffs bracket_vec(const Coeffs& x, const Coeffs& y) const {
        Coeffs out;
        for (const auto& [a, ca] : x)
            for (const auto& [b, cb] : y) {
                for (const auto& [k, v] : bracket(a, b)) {
                    Scalar add = ca * cb * v;
                    auto it = out.find(k);
                    if (it == out.end()) out[k] = add; else it->second += add;
                }
            }
        prune(out);
        return out;
    }

    const std::map<std::pair<int, int>, Coeffs>& entries() const { return entries_; }

    BracketTable scaled(const Scalar& c) const {
        BracketTable t(basis_);
        for (const auto& [key, val] : entries_) {
            Coeffs v;
            for (const auto& [k, s] : val) v[k] = s * c;
            t.set(key.first, key.second, std::move(v));
        }
        return t;
    }

    /// Entrywise sum; both tables must share the same basis.
    BracketTable operator+(const BracketTable& o) const {
        if (basis_ != o.basis_) throw error("bracket table basis mismatch");
        BracketTable t(basis_);
        std::map<std::pair<int, int>, Coeffs> merged = entries_;
        for (const auto& [key, val] : o.entries_) {
            Coeffs& dst = merged[key];
            for (const auto& [k, s] : val) {
                auto it = dst.find(k);
                if (it == dst.end()) dst[k] = s; else it->second += s;
            }
        }
        for (auto& [key, val] : merged) t.set(key.first, key.second, val);
        return t;
    }

    BracketTable substitute(const std::map<Param, Scalar>& bindings) const {
        BracketTable t(basis_);
        for (const auto& [key, val] : entries_) {
            Coeffs v;
            for (const auto& [k, s] : val) v[k] = s.substitute(bindings);
            t.set(key.first, key.second, std::move(v));
        }
        return t;
    }

    static void prune(Coeffs& c) {
        for (auto it = c.begin(); it != c.end();)
            it = it->second.is_zero() ? c.erase(it) : std::next(it);
    }

    std::string render_coeffs(const Coeffs& c) const {
        if (c.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, v] : c) {
            std::string cs = v.str();
            bool atomic = cs.find(' ') == std::string::npos;
            std::string piece = (cs == "1") ? basis_[k]
                               : (cs == "-1") ? "-" + basis_[k]
                                              : (atomic ? cs : "(" + cs + ")") + "*" + basis_[k];
            if (!first && piece.front() != '-') out += " + ";
            else if (!first) { out += " - "; piece = piece.substr(1); }
            out += piece;
            first = false;
        }
        return out;
    }

  private:
    std::vector<std::string> basis_;
    std::map<std::pair<int, int>, Coeffs> entries_;
};

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] for every basis triple; the table is a
/// Lie bracket iff the result is empty.
inline std::map<std::tuple<int, int, int>, BracketTable::Coeffs> jacobiator(const BracketTable& t) {
    std::map<std::tuple<int, int, int>, BracketTable::Coeffs> out;
    int n = static_cast<int>(t.basis().size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                BracketTable::Coeffs xi{{i, Scalar(1)}}, xj{{j, Scalar(1)}}, xk{{k, Scalar(1)}};
                auto acc = t.bracket_vec(xi, t.bracket_vec(xj, xk));
                for (auto& [key, v] : t.bracket_vec(xj, t.bracket_vec(xk, xi))) {
                    auto it = acc.find(key);
                    if (it == acc.end()) acc[key] = v; else it->second += v;
                }
                for (auto& [key, v] : t.bracket_vec(xk, t.bracket_vec(xi, xj))) {
                    auto it = acc.find(key);
                    if (it == acc.end()) acc[key] = v; else it->second += v;
                }
                BracketTable::prune(acc);
                if (!acc.empty()) out[{i, j, k}] = std::move(acc);
            }
    return out;
}

}  // namespace twistlab
