#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "twistlab/error.hpp"

namespace twistlab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw arith_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rational_str(const Rational& q) { return q.get_str(); }

/// Fixed ordered alphabet of symbolic parameters. Every polynomial is
/// expressed over exactly these names, which makes canonical forms
/// reproducible across runs and platforms.
enum class Param : int {
    Xi = 0,
    Lambda,
    Theta,
    Eta,
    V,
    S,
    T,
    Alpha,
    Beta,
};

inline constexpr int kNumParams = 9;

inline const char* param_name(Param p) {
    static constexpr const char* names[kNumParams] = {
        "xi", "lambda", "theta", "eta", "v", "s", "t", "alpha", "beta"};
    return names[static_cast<int>(p)];
}

inline std::optional<Param> param_from_name(std::string_view s) {
    for (int i = 0; i < kNumParams; ++i)
        if (s == param_name(static_cast<Param>(i))) return static_cast<Param>(i);
    return std::nullopt;
}

/// Exponent vector over the parameter alphabet.
struct Monomial {
    std::array<std::uint32_t, kNumParams> exp{};

    int degree() const {
        int d = 0;
        for (auto e : exp) d += static_cast<int>(e);
        return d;
    }
    bool is_constant() const { return degree() == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial m;
        for (int i = 0; i < kNumParams; ++i) m.exp[i] = exp[i] + o.exp[i];
        return m;
    }
    /// Exact division; caller must know `o` divides this monomial.
    Monomial operator/(const Monomial& o) const {
        Monomial m;
        for (int i = 0; i < kNumParams; ++i) {
            if (exp[i] < o.exp[i]) throw arith_error("monomial division not exact");
            m.exp[i] = exp[i] - o.exp[i];
        }
        return m;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kNumParams; ++i)
            if (exp[i] > o.exp[i]) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return exp == o.exp; }
};

/// Graded lexicographic order, leading (largest) monomial first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        for (int i = 0; i < kNumParams; ++i)
            if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
        return false;
    }
};

/// Sparse multivariate polynomial with rational coefficients over the fixed
/// parameter alphabet. Terms are kept in descending graded-lex order, zero
/// coefficients are never stored.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Poly() = default;
    explicit Poly(const Rational& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    explicit Poly(long n) : Poly(Rational(n)) {}
    static Poly variable(Param p, std::uint32_t power = 1) {
        Poly out;
        if (power == 0) return Poly(Rational(1));
        Monomial m;
        m.exp[static_cast<int>(p)] = power;
        out.terms_[m] = 1;
        return out;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }
    /// Constant term as a rational (the whole value if is_constant()).
    Rational constant_value() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
    int degree_in(Param p) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exp[static_cast<int>(p)]));
        return d;
    }
    bool uses(Param p) const {
        for (const auto& [m, c] : terms_)
            if (m.exp[static_cast<int>(p)] > 0) return true;
        return false;
    }
    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw arith_error("leading monomial of zero polynomial");
        return terms_.begin()->first;
    }
    const Rational& leading_coeff() const {
        if (terms_.empty()) throw arith_error("leading coefficient of zero polynomial");
        return terms_.begin()->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly out;
        for (const auto& [m, c] : terms_) out.terms_[m] = -c;
        return out;
    }
    Poly operator+(const Poly& o) const {
        Poly out = *this;
        for (const auto& [m, c] : o.terms_) out.add_term(m, c);
        return out;
    }
    Poly operator-(const Poly& o) const {
        Poly out = *this;
        for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
        return out;
    }
    Poly operator*(const Poly& o) const {
        Poly out;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
        return out;
    }
    Poly operator*(const Rational& c) const {
        Poly out;
        if (c == 0) return out;
        for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
        return out;
    }
    Poly pow(unsigned n) const {
        Poly out(Rational(1));
        for (unsigned i = 0; i < n; ++i) out = out * (*this);
        return out;
    }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients. Zero polynomial yields 1.
    Rational rational_content() const {
        if (terms_.empty()) return Rational(1);
        Integer num_gcd = 0, den_lcm = 1;
        for (const auto& [m, c] : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        return make_rational(abs(num_gcd), den_lcm);
    }

    /// Primitive part with positive leading coefficient; the returned pair is
    /// (primitive, c) with *this == primitive * c.
    std::pair<Poly, Rational> primitive() const {
        if (terms_.empty()) return {Poly(), Rational(1)};
        Rational c = rational_content();
        if (leading_coeff() < 0) c = -c;
        return {(*this) * (Rational(1) / c), c};
    }

    std::string str() const;

  private:
    TermMap terms_;
};

/// Exact division; returns nullopt when the divisor does not divide.
inline std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw arith_error("polynomial division by zero");
    Poly rem = a, quot;
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading_monomial();
        if (!b.leading_monomial().divides(lm)) return std::nullopt;
        Monomial q = lm / b.leading_monomial();
        Rational qc = rem.leading_coeff() / b.leading_coeff();
        Poly t;
        t.add_term(q, qc);
        quot = quot + t;
        rem = rem - t * b;
    }
    return quot;
}

namespace detail {

/// Coefficient of v^k, as a polynomial in the remaining parameters.
inline Poly coeff_in(const Poly& p, Param v, std::uint32_t k) {
    Poly out;
    int vi = static_cast<int>(v);
    for (const auto& [m, c] : p.terms()) {
        if (m.exp[vi] != k) continue;
        Monomial r = m;
        r.exp[vi] = 0;
        out.add_term(r, c);
    }
    return out;
}

inline Poly times_power(const Poly& p, Param v, std::uint32_t k) {
    Poly out;
    int vi = static_cast<int>(v);
    for (const auto& [m, c] : p.terms()) {
        Monomial r = m;
        r.exp[vi] += k;
        out.add_term(r, c);
    }
    return out;
}

/// One pseudo-reduction step: returns lc(b)*a - lc(a)*v^(da-db)*b, which
/// strictly lowers deg_v.
inline Poly reduce_step(const Poly& a, const Poly& b, Param v) {
    int da = a.degree_in(v), db = b.degree_in(v);
    Poly lca = coeff_in(a, v, static_cast<std::uint32_t>(da));
    Poly lcb = coeff_in(b, v, static_cast<std::uint32_t>(db));
    return a * lcb - times_power(lca * b, v, static_cast<std::uint32_t>(da - db));
}

/// Pseudo-remainder with the exact multiplier lc(b)^(deg a - deg b + 1),
/// as required by the subresultant recurrences.
inline Poly full_prem(const Poly& a, const Poly& b, Param v) {
    int db = b.degree_in(v);
    int mult = a.degree_in(v) - db + 1;
    Poly lcb = coeff_in(b, v, static_cast<std::uint32_t>(db));
    Poly r = a;
    int steps = 0;
    while (!r.is_zero() && r.degree_in(v) >= db) {
        r = reduce_step(r, b, v);
        ++steps;
    }
    for (; steps < mult; ++steps) r = r * lcb;
    return r;
}

/// Plain Euclid for polynomials in a single parameter (rational-coefficient
/// long division; no content bookkeeping needed).
inline Poly gcd_univariate(Poly a, Poly b, Param v) {
    while (!b.is_zero()) {
        int db = b.degree_in(v);
        Rational lcb = coeff_in(b, v, static_cast<std::uint32_t>(db)).constant_value();
        Poly r = a;
        while (!r.is_zero() && r.degree_in(v) >= db) {
            int dr = r.degree_in(v);
            Rational q = coeff_in(r, v, static_cast<std::uint32_t>(dr)).constant_value() / lcb;
            r = r - times_power(b * q, v, static_cast<std::uint32_t>(dr - db));
        }
        a = b;
        b = r;
    }
    return a.primitive().first;
}

}  // namespace detail

/// GCD of multivariate polynomials over the rationals: a content /
/// primitive-part recursion over the variable alphabet with a subresultant
/// pseudo-remainder sequence in the chosen variable (plain Euclid when only
/// one variable occurs). Result is integer-primitive with positive leading
/// coefficient; the gcd of anything with a nonzero constant is 1.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.primitive().first;
    if (b.is_zero()) return a.primitive().first;
    Param v = Param::Xi;
    int used = 0;
    for (int i = kNumParams - 1; i >= 0; --i) {
        Param p = static_cast<Param>(i);
        if (a.uses(p) || b.uses(p)) {
            v = p;
            ++used;
        }
    }
    if (used == 0) return Poly(Rational(1));  // both constant
    if (used == 1) return detail::gcd_univariate(a, b, v);

    auto content_in = [&](const Poly& p) {
        Poly c;
        for (int k = 0; k <= p.degree_in(v); ++k) {
            Poly ck = detail::coeff_in(p, v, static_cast<std::uint32_t>(k));
            if (!ck.is_zero()) c = poly_gcd(c, ck);
            if (c.is_constant() && !c.is_zero()) break;
        }
        return c;
    };

    // A common divisor cannot involve v unless both arguments do.
    if (!a.uses(v)) return poly_gcd(a, content_in(b)).primitive().first;
    if (!b.uses(v)) return poly_gcd(b, content_in(a)).primitive().first;

    Poly ca = content_in(a), cb = content_in(b);
    Poly pa = *poly_divide_exact(a, ca), pb = *poly_divide_exact(b, cb);
    Poly cont_gcd = poly_gcd(ca, cb);

    // Brown's subresultant PRS keeps coefficient growth polynomial without
    // recomputing contents at every step.
    Poly p = pa.primitive().first, q = pb.primitive().first;
    if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
    Poly g(Rational(1)), h(Rational(1));
    while (true) {
        int delta = p.degree_in(v) - q.degree_in(v);
        Poly r = detail::full_prem(p, q, v);
        if (r.is_zero()) {
            Poly res = *poly_divide_exact(q, content_in(q));
            return (cont_gcd * res).primitive().first;
        }
        if (r.degree_in(v) == 0) return cont_gcd.primitive().first;
        p = q;
        Poly divisor = g * h.pow(static_cast<unsigned>(delta));
        auto qq = poly_divide_exact(r, divisor);
        q = qq ? *qq : (*poly_divide_exact(r, content_in(r))).primitive().first;
        g = detail::coeff_in(p, v, static_cast<std::uint32_t>(p.degree_in(v)));
        if (delta > 0) {
            auto hh = poly_divide_exact(g.pow(static_cast<unsigned>(delta)),
                                        h.pow(static_cast<unsigned>(delta - 1)));
            h = hh ? *hh : g;
        }
    }
}

/// Element of the coefficient field: a fraction of two polynomials kept in
/// canonical form. The denominator is integer-primitive with positive
/// leading coefficient and shares no factor with the numerator; zero is
/// always 0/1. Equality of canonical forms decides equality of values.
class Scalar {
  public:
    Scalar() : num_(), den_(Rational(1)) {}
    Scalar(const Rational& q) : num_(q), den_(Rational(1)) {}
    Scalar(long n) : num_(Rational(n)), den_(Rational(1)) {}
    Scalar(int n) : Scalar(static_cast<long>(n)) {}
    explicit Scalar(Param p) : num_(Poly::variable(p)), den_(Rational(1)) {}
    Scalar(const Poly& num, const Poly& den) : num_(num), den_(den) { normalize(); }
    explicit Scalar(const Poly& num) : num_(num), den_(Rational(1)) {}

    static Scalar rational(long num, long den) { return Scalar(make_rational(num, den)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == Poly(Rational(1)) && num_ == Poly(Rational(1)); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rational rational_value() const {
        if (!is_rational()) throw arith_error("scalar is not a plain rational");
        return num_.constant_value() / den_.constant_value();
    }

    Scalar operator-() const {
        Scalar out = *this;
        out.num_ = -out.num_;
        return out;
    }
    Scalar operator+(const Scalar& o) const {
        return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Scalar operator-(const Scalar& o) const {
        return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Scalar operator*(const Scalar& o) const { return Scalar(num_ * o.num_, den_ * o.den_); }
    Scalar operator/(const Scalar& o) const {
        if (o.is_zero()) throw arith_error("scalar division by zero");
        return Scalar(num_ * o.den_, den_ * o.num_);
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar pow(unsigned n) const {
        Scalar out(1);
        for (unsigned i = 0; i < n; ++i) out = out * (*this);
        return out;
    }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    bool uses(Param p) const { return num_.uses(p) || den_.uses(p); }

    /// Replace bound parameters by scalar values; unbound parameters remain
    /// symbolic. Throws arith_error when the substituted denominator
    /// vanishes.
    Scalar substitute(const std::map<Param, Scalar>& bindings) const {
        Scalar n = substitute_poly(num_, bindings);
        Scalar d = substitute_poly(den_, bindings);
        if (d.is_zero()) throw arith_error("substitution produced a zero denominator");
        return n / d;
    }

    std::string str() const;

    /// Strict total order on canonical forms (used for deterministic
    /// container ordering, not for numeric comparison).
    int cmp(const Scalar& o) const {
        int c = poly_cmp(num_, o.num_);
        if (c != 0) return c;
        return poly_cmp(den_, o.den_);
    }

    static int poly_cmp(const Poly& a, const Poly& b) {
        auto ia = a.terms().begin(), ib = b.terms().begin();
        GrlexGreater gt;
        for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
            if (gt(ia->first, ib->first)) return -1;
            if (gt(ib->first, ia->first)) return 1;
            int c = ::cmp(ia->second, ib->second);
            if (c != 0) return c;
        }
        if (ia != a.terms().end()) return -1;
        if (ib != b.terms().end()) return 1;
        return 0;
    }

  private:
    static Scalar substitute_poly(const Poly& p, const std::map<Param, Scalar>& bindings) {
        Scalar acc(0);
        for (const auto& [m, c] : p.terms()) {
            Scalar term{Rational(c)};
            for (int i = 0; i < kNumParams; ++i) {
                if (m.exp[i] == 0) continue;
                Param pr = static_cast<Param>(i);
                auto it = bindings.find(pr);
                Scalar base = it == bindings.end() ? Scalar(pr) : it->second;
                term = term * base.pow(m.exp[i]);
            }
            acc = acc + term;
        }
        return acc;
    }

    void normalize() {
        if (den_.is_zero()) throw arith_error("scalar with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        if (!den_.is_constant()) {
            Poly g = poly_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = *poly_divide_exact(num_, g);
                den_ = *poly_divide_exact(den_, g);
            }
        }
        auto [prim, c] = den_.primitive();
        den_ = prim;
        num_ = num_ * (Rational(1) / c);
    }

    Poly num_, den_;
};

inline Scalar operator*(const Rational& c, const Scalar& s) { return Scalar(c) * s; }

// ---------------------------------------------------------------------------
// rendering

inline std::string monomial_str(const Monomial& m) {
    std::string out;
    for (int i = 0; i < kNumParams; ++i) {
        if (m.exp[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += param_name(static_cast<Param>(i));
        if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
    }
    return out;
}

inline std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string ms = monomial_str(m);
        if (ms.empty()) {
            out += rational_str(a);
        } else if (a == 1) {
            out += ms;
        } else {
            out += rational_str(a) + "*" + ms;
        }
    }
    return out;
}

inline std::string Scalar::str() const {
    if (den_ == Poly(Rational(1))) return num_.str();
    std::string n = num_.str(), d = den_.str();
    auto wrap = [](const std::string& s) {
        bool atomic = s.find(' ') == std::string::npos && s.find('/') == std::string::npos;
        return atomic ? s : "(" + s + ")";
    };
    return wrap(n) + "/" + wrap(d);
}

}  // namespace twistlab
