// Finite matrix groups acting on the plane: closure enumeration, orbits,
// invariant rings by Reynolds averaging, eigenspace decomposition, and
// stabilizer computations inside the torus and the monomial subgroup.
#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kleinpencil/forms.hpp"
#include "kleinpencil/linalg.hpp"

namespace kleinpencil {

// linear: matrices compared entrywise.  projective: matrices identified up to
// scalar, represented with the first nonzero entry (row-major) scaled to 1.
enum class GroupPolicy { linear, projective };

struct closure_bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Mat3 canonical_rep(const Mat3& m, GroupPolicy policy);

// Group generated by the given matrices.  The constructor runs a breadth-first
// product closure and throws closure_bound_error if more than `bound` distinct
// canonical representatives appear (the generated group may well be infinite).
class MatGroup {
  public:
    MatGroup(std::vector<Mat3> generators, GroupPolicy policy, size_t bound = 10000);

    GroupPolicy policy() const { return policy_; }
    const std::vector<Mat3>& generators() const { return gens_; }
    // All elements as sorted canonical representatives.
    const std::vector<Mat3>& elements() const { return elements_; }
    size_t order() const { return elements_.size(); }
    bool contains(const Mat3& m) const;

  private:
    GroupPolicy policy_;
    std::vector<Mat3> gens_;
    std::vector<Mat3> elements_;
};

// Generator catalog.  All matrices live over a field containing the 84th
// roots of unity (conductor divisible by 84).

// diag(l, l^2, l^4) for l a primitive 7th root of unity; order 7.
Mat3 gen_order7_diag(const FieldCtxPtr& ctx);
// Coordinate cycle z0 -> z2, z1 -> z0, z2 -> z1 (rows e2, e0, e1); order 3.
Mat3 gen_coordinate_cycle(const FieldCtxPtr& ctx);
// diag(1, w, w^2) for w a primitive cube root of unity; order 3.
Mat3 gen_order3_diag(const FieldCtxPtr& ctx);
// Quadratic Gauss period g = l + l^2 + l^4 - l^3 - l^5 - l^6 with g^2 = -7.
CycNum gauss_sum(const FieldCtxPtr& ctx);
// Involution S with entries (l^{E_jk} - l^{-E_jk}) / g, E_jk = b_j b_k mod 7
// for weights b = (3, 5, 6).  Together with the order-7 diagonal and the
// coordinate cycle it generates a projective group of order 168 preserving
// the Klein quartic.
Mat3 gen_klein_involution(const FieldCtxPtr& ctx);

// Orbit of a point / of a form (up to scalar) under the full group.
// Output is sorted and duplicate-free.
std::vector<ProjPoint> orbit_point(const MatGroup& g, const ProjPoint& p);
std::vector<TernaryForm> orbit_form(const MatGroup& g, const TernaryForm& f);

// Canonical echelonized basis of the degree-d forms fixed by every element of
// the group.  For a projective group the average runs over the linear closure
// of its generators (bounded by linear_bound), so "fixed" means fixed exactly,
// not just up to scalar.
std::vector<TernaryForm> reynolds_invariants(const MatGroup& g, int degree,
                                             size_t linear_bound = 10000);

struct EigenPiece {
    CycNum eigenvalue;
    std::vector<TernaryForm> basis;  // echelonized
};

// Decompose the span of `space` under f -> f(m z).  The span must be stable;
// eigenvalues are searched among mu_n and det(A) * mu_n for the induced
// action matrix A, and the pieces must exhaust the space (throws otherwise).
std::vector<EigenPiece> eigenspace_split(const std::vector<TernaryForm>& space,
                                         const Mat3& m);

// Smith reduction of an integer matrix with two columns.
// row_ops * input * col_ops = diag(d0, d1) padded with zero rows,
// both transforms unimodular, d0, d1 >= 0 and d0 | d1.
struct Snf2 {
    std::vector<std::vector<long>> row_ops;
    std::array<std::array<long, 2>, 2> col_ops;
    std::array<long, 2> diag;
    int rank = 0;
};
Snf2 smith_2col(const std::vector<std::array<long, 2>>& rows);

enum class StabKind {
    finite,                // every solution is listed in `elements`
    positive_dimensional,  // solutions form a positive-dimensional family
    not_representable,     // solutions exist but leave the working field
};

struct StabResult {
    StabKind kind = StabKind::finite;
    std::vector<Mat3> elements;  // sorted; empty unless kind == finite
    // Number of solutions over the complex torus (finite case), i.e. the
    // index of the exponent-difference lattice summed over contributing
    // permutations.
    long complex_count = 0;
};

// Projective stabilizer of f inside the diagonal torus diag(1, s, t).
StabResult diag_stabilizer(const TernaryForm& f);

// Projective stabilizer of f inside the full monomial subgroup (the
// transformations permuting the three coordinate points), i.e. all
// diag(1, s, t) * P over the six coordinate permutations P.
StabResult monomial_stabilizer(const TernaryForm& f);

}  // namespace kleinpencil
