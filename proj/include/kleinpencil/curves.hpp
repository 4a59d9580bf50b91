// Geometry of plane curves cut out by ternary forms: fixed points of
// projective transformations, singular-point tests, group-equivariant
// candidate singular loci, incidence predicates, and certified mod-p
// smoothness checks built on resultant elimination.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kleinpencil/forms.hpp"
#include "kleinpencil/groups.hpp"
#include "kleinpencil/primefield.hpp"

namespace kleinpencil {

struct FixedPointSet {
    std::vector<ProjPoint> isolated;
    // Pointwise-fixed lines, each spanned by two points (eigenspaces of
    // dimension two).
    std::vector<std::pair<ProjPoint, ProjPoint>> lines;
};

// Fixed points of the projective transformation given by m.  Eigenvalues are
// located by factoring the characteristic cubic over the roots of unity of
// the ambient conductor; eigenspaces are exact kernels.  Throws
// std::invalid_argument on scalar input (every point fixed) and
// std::runtime_error when an eigenvalue lies outside the candidate set.
FixedPointSet fixed_points(const Mat3& m);

// All three partials vanish at pt (by Euler's relation the form itself then
// vanishes there too, in characteristic zero).
bool is_singular_at(const TernaryForm& f, const ProjPoint& pt);

// Ordinary double point: singular, and the 3x3 matrix of second partials at
// pt has rank exactly 2 (the largest possible at a singular point).
bool is_node_at(const TernaryForm& f, const ProjPoint& pt);

// Points fixed by some non-scalar element of g and singular on f, sorted.
// Sound as a complete singular locus only under an orbit-size argument made
// by the caller; this function just assembles the candidates.  Throws
// std::runtime_error if an element fixes a line pointwise (candidate set
// not finite).
std::vector<ProjPoint> candidate_singular_locus(const TernaryForm& f, const MatGroup& g);

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
// Some nonzero conic passes through all six points.
bool on_common_conic(const std::array<ProjPoint, 6>& pts);

struct GeneralPositionReport {
    bool ok = false;
    std::string violation;  // empty when ok
};
// Exactly seven points: pairwise distinct, no three collinear, no six on a
// conic (the classical condition for blowing up to a degree-2 del Pezzo).
GeneralPositionReport general_position7(const std::vector<ProjPoint>& pts);

// Arithmetic genus (d-1)(d-2)/2 of a plane curve of degree d.
long plane_curve_genus(int d);
// Intersection number of plane curves of the given degrees.
long bezout_degree(int d1, int d2);

// f at a point of P^2(F_p), coefficients reduced through the embedding.
std::uint64_t eval_form_mod_p(const TernaryForm& f, const PrimeEmbedding& emb,
                              const std::array<std::uint64_t, 3>& pt);

// Dehomogenize f mod p in the affine chart z_chart = 1.  The two remaining
// variables, in increasing index order, become (y, z).
fp::Bivar reduce_chart(const TernaryForm& f, const PrimeEmbedding& emb, int chart);

struct SmoothnessReport {
    bool smooth = false;
    std::uint64_t prime = 0;
    // F_p-rational common zeros of all three partials found by the witness
    // extraction (projective coordinate triples); empty for smooth curves
    // and for the identically-vanishing-resultant evidence path.
    std::vector<std::array<std::uint64_t, 3>> witnesses;
    // Residue degrees of the singular z-locus in the witness chart.
    std::vector<int> witness_degrees;
    std::string detail;
};

// Certified smoothness of {f = 0} over the algebraic closure of F_p.  Each
// affine chart is cleared by eliminating y from a pair of partials: with a
// shear making both leading y-coefficients constant, the interpolated
// resultant R confines common zeros to roots of T = squarefree(R); the
// degree-1 subresultant recovers the unique y over each root once
// gcd(T, S1) = 1, and the third partial is tested on exactly that locus.
// The verdict is exact in both directions for the reduced curve.  Throws
// bad_prime_error when p degenerates the data (retry with the next prime).
SmoothnessReport smooth_mod_p(const TernaryForm& f, std::uint64_t p);

// smooth_mod_p with an automatic prime ladder: on bad_prime_error advances
// to the next prime splitting the field, at most `attempts` times.
SmoothnessReport smooth_mod_p_auto(const TernaryForm& f, std::uint64_t first_prime = 337,
                                   int attempts = 8);

// Brute-force scan of all of P^2(F_p) for common zeros of the three
// partials; independent of the resultant machinery, used to cross-check it.
// Sorted coordinate triples, each normalized with first nonzero entry 1.
std::vector<std::array<std::uint64_t, 3>> enumerate_singular_mod_p(const TernaryForm& f,
                                                                   std::uint64_t p);

}  // namespace kleinpencil
