// Dense polynomial arithmetic over F_p (p an odd prime below 2^31) in one and
// two variables: the engine behind the certified mod-p smoothness checks.
// Univariate polynomials are coefficient vectors, constant term first, with
// no trailing zeros; the empty vector is the zero polynomial.
#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace kleinpencil::fp {

using Poly = std::vector<std::uint64_t>;

Poly trim(Poly a);
int deg(const Poly& a);  // -1 for the zero polynomial
bool is_zero(const Poly& a);
bool is_constant(const Poly& a);  // zero or degree 0

Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly scale(const Poly& a, std::uint64_t c, std::uint64_t p);

// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p);
Poly rem(const Poly& a, const Poly& b, std::uint64_t p);
Poly monic(const Poly& a, std::uint64_t p);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);
// a / gcd(a, a'); exact for deg(a) < p.
Poly squarefree_part(const Poly& a, std::uint64_t p);

std::uint64_t eval(const Poly& a, std::uint64_t x, std::uint64_t p);
// base^e mod (m, p); m must have degree >= 1.
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m, std::uint64_t p);
// Inverse of a modulo t via the extended Euclidean algorithm; requires
// gcd(a, t) = 1 and deg(t) >= 1, throws std::invalid_argument otherwise.
Poly inv_mod(const Poly& a, const Poly& t, std::uint64_t p);
// Unique interpolant of degree < xs.size() through (xs[i], ys[i]), xs distinct.
Poly interpolate(const std::vector<std::uint64_t>& xs,
                 const std::vector<std::uint64_t>& ys, std::uint64_t p);

// All roots in F_p, ascending (direct scan; intended for small p).
std::vector<std::uint64_t> roots(const Poly& a, std::uint64_t p);
// Degrees of the irreducible factors of squarefree a, ascending with
// multiplicity, found by distinct-degree splitting with Frobenius gcds.
std::vector<int> factor_degrees(const Poly& a, std::uint64_t p);

std::uint64_t det(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

// Bivariate polynomial in y and z: c[i] is the F_p[z] coefficient of y^i.
struct Bivar {
    std::vector<Poly> c;

    bool is_zero() const;
    int deg_y() const;  // -1 when zero
    int total_degree() const;
    // Largest z-degree over all coefficients; -1 when zero.
    int max_coeff_deg() const;
};

Bivar trim(Bivar a);
std::uint64_t eval(const Bivar& a, std::uint64_t y, std::uint64_t z, std::uint64_t p);
// Specialize z = t: coefficients of the univariate result in y, constant first.
Poly eval_at_z(const Bivar& a, std::uint64_t t, std::uint64_t p);
// Substitute z -> z + s*y.  Preserves total degree; afterwards the
// coefficient of y^{total_degree} is the constant top_form(1, s).
Bivar shear(const Bivar& a, std::uint64_t s, std::uint64_t p);
// Top-degree homogeneous part evaluated at (y, z) = (1, s).
std::uint64_t top_form_at(const Bivar& a, std::uint64_t s, std::uint64_t p);
// a(Y(z), z) reduced mod t, for Y given mod t.  Used to test whether a
// vanishes at the algebraic points (Y(tau), tau), t(tau) = 0.
Poly eval_bivar_mod(const Bivar& a, const Poly& yofz, const Poly& t, std::uint64_t p);

// Resultant and first-subresultant data of a pair with constant nonzero
// leading y-coefficients, as polynomials in z, computed by interpolating
// fixed-size Sylvester determinants (so specialization commutes with the
// determinant and no degree-drop caveats arise).
struct PairElimination {
    Poly res;  // Res_y(a, b)
    Poly s1;   // leading coefficient of the degree-1 subresultant
    Poly s0;   // constant coefficient of the degree-1 subresultant
};
// Requires deg_y(a) >= 1, deg_y(b) >= 1 and constant leading y-coefficients.
PairElimination eliminate_y(const Bivar& a, const Bivar& b, std::uint64_t p);

// Subresultant of two univariate polynomials of exact degrees m = deg a >= 1,
// n = deg b >= 1: the coefficients (s1, s0) of the degree-1 subresultant,
// via Sylvester minors.  Exposed for direct testing.
std::array<std::uint64_t, 2> subresultant1(const Poly& a, const Poly& b, std::uint64_t p);
// Resultant of univariate a, b via the Sylvester determinant.
std::uint64_t resultant(const Poly& a, const Poly& b, std::uint64_t p);

}  // namespace kleinpencil::fp
