#pragma once

#include <array>
#include <string>

#include "twistlab/liealg.hpp"
#include "twistlab/matrix.hpp"

namespace twistlab {

/// Exact finite-dimensional representation of gl(3): matrix images of the
/// nine basis elements. The homomorphism property is verified on all basis
/// pairs at construction, so an instance is trustworthy by existence.
class Representation {
  public:
    Representation(std::string name, int dim, std::array<Matrix, kGlDim> images)
        : name_(std::move(name)), dim_(dim), gen_(std::move(images)) {
        verify_structure();
    }

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }

    const Matrix& basis_image(int idx) const { return gen_[static_cast<std::size_t>(idx)]; }

    Matrix image(const LieElement& x) const {
        Matrix m(dim_, dim_);
        for (const auto& [k, v] : x.coeffs()) m += gen_[static_cast<std::size_t>(k)] * v;
        return m;
    }

    /// d = 3, E_ij -> matrix unit e_ij.
    static Representation fundamental() {
        std::array<Matrix, kGlDim> g;
        for (int idx = 0; idx < kGlDim; ++idx) {
            Matrix m(3, 3);
            m(gl_row(idx) - 1, gl_col(idx) - 1) = Scalar(1);
            g[static_cast<std::size_t>(idx)] = m;
        }
        return Representation("fund", 3, std::move(g));
    }

    /// x -> -image(x)^T.
    static Representation dual_of(const Representation& r) {
        std::array<Matrix, kGlDim> g;
        for (int idx = 0; idx < kGlDim; ++idx)
            g[static_cast<std::size_t>(idx)] = -r.basis_image(idx).transpose();
        return Representation(r.name() == "dual" ? "fund" : "dual", r.dim(), std::move(g));
    }

    /// x -> x (x) 1 + 1 (x) x on the tensor product space.
    static Representation tensor_of(const Representation& a, const Representation& b) {
        std::array<Matrix, kGlDim> g;
        Matrix ia = Matrix::identity(a.dim()), ib = Matrix::identity(b.dim());
        for (int idx = 0; idx < kGlDim; ++idx)
            g[static_cast<std::size_t>(idx)] =
                kron(a.basis_image(idx), ib) + kron(ia, b.basis_image(idx));
        return Representation(a.name() + "*" + b.name(), a.dim() * b.dim(), std::move(g));
    }

  private:
    void verify_structure() const {
        for (int a = 0; a < kGlDim; ++a)
            for (int b = 0; b < kGlDim; ++b) {
                LieElement ea = LieElement::basis(gl_row(a), gl_col(a));
                LieElement eb = LieElement::basis(gl_row(b), gl_col(b));
                Matrix lhs = image(bracket(ea, eb));
                Matrix rhs = gen_[static_cast<std::size_t>(a)] * gen_[static_cast<std::size_t>(b)] -
                             gen_[static_cast<std::size_t>(b)] * gen_[static_cast<std::size_t>(a)];
                if (lhs != rhs)
                    throw error("representation '" + name_ + "' violates the bracket on (" +
                                gl_name(a) + ", " + gl_name(b) + ")");
            }
    }

    std::string name_;
    int dim_;
    std::array<Matrix, kGlDim> gen_;
};

/// The three verification representations. `fund` and `dual` are the default
/// pair; `mixed` (fund (x) dual, dimension 9) is the heavier optional
/// cross-check.
inline const Representation& rep_fund() {
    static const Representation r = Representation::fundamental();
    return r;
}
inline const Representation& rep_dual() {
    static const Representation r = Representation::dual_of(rep_fund());
    return r;
}
inline const Representation& rep_mixed() {
    static const Representation r = Representation::tensor_of(rep_fund(), rep_dual());
    return r;
}

inline const Representation& rep_by_name(const std::string& name) {
    if (name == "fund") return rep_fund();
    if (name == "dual") return rep_dual();
    if (name == "mixed") return rep_mixed();
    throw name_error("unknown representation '" + name + "' (expected fund, dual or mixed)");
}

}  // namespace twistlab
