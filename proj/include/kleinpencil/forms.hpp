#pragma once

// Homogeneous ternary forms over Q(zeta_n): sparse exponent->coefficient
// maps in variables z0, z1, z2, plus 3x3 matrices acting by substitution.
// Convention: substitute(f, m)(z) = f(m*z), so substitute(f, a*b) =
// substitute(substitute(f, a), b) (right action on forms).

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "kleinpencil/cyclotomic.hpp"

namespace kleinpencil {

struct ExpTriple {
    int e0 = 0, e1 = 0, e2 = 0;
    int degree() const { return e0 + e1 + e2; }
    int operator[](int i) const { return i == 0 ? e0 : (i == 1 ? e1 : e2); }
    auto operator<=>(const ExpTriple&) const = default;
};

// 3x3 matrix over the field; rows index the substituted variable:
// (m*z)_i = sum_j m(i,j) z_j.
class Mat3 {
  public:
    Mat3() = default;
    explicit Mat3(FieldCtxPtr ctx);
    Mat3(FieldCtxPtr ctx, std::array<CycNum, 9> entries);

    static Mat3 identity(const FieldCtxPtr& ctx);
    static Mat3 diagonal(const CycNum& a, const CycNum& b, const CycNum& c);
    // Permutation matrix for z_i -> z_{perm[i]}: row i has a 1 in column perm[i].
    static Mat3 permutation(const FieldCtxPtr& ctx, const std::array<int, 3>& perm);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const CycNum& at(int r, int c) const { return e_[static_cast<size_t>(3 * r + c)]; }
    CycNum& at(int r, int c) { return e_[static_cast<size_t>(3 * r + c)]; }

    Mat3 operator*(const Mat3& o) const;
    Mat3 operator*(const CycNum& s) const;
    std::array<CycNum, 3> apply(const std::array<CycNum, 3>& v) const;

    CycNum det() const;
    Mat3 inverse() const;  // throws std::domain_error when singular
    Mat3 transpose() const;

    bool operator==(const Mat3& o) const { return e_ == o.e_; }
    bool operator!=(const Mat3& o) const { return !(*this == o); }
    // Lexicographic entry order; total, compatible with equality.
    int compare(const Mat3& o) const;
    bool operator<(const Mat3& o) const { return compare(o) < 0; }

    bool is_scalar() const;  // nonzero multiple of the identity

    std::string to_string() const;

  private:
    FieldCtxPtr ctx_;
    std::array<CycNum, 9> e_;
};

// Point of the projective plane, stored canonically: coordinates scaled so
// the first nonzero one equals 1.  Equality is coordinate-wise.
class ProjPoint {
  public:
    ProjPoint(const CycNum& x0, const CycNum& x1, const CycNum& x2);
    explicit ProjPoint(std::array<CycNum, 3> coords);

    const CycNum& operator[](int i) const { return x_[static_cast<size_t>(i)]; }
    const std::array<CycNum, 3>& coords() const { return x_; }

    bool operator==(const ProjPoint& o) const { return x_ == o.x_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    int compare(const ProjPoint& o) const;
    bool operator<(const ProjPoint& o) const { return compare(o) < 0; }

    std::string to_string() const;

  private:
    std::array<CycNum, 3> x_;
};

// m acting on a point: the canonical representative of m * p.
ProjPoint apply_point(const Mat3& m, const ProjPoint& p);

// Homogeneous form.  The zero form carries an explicit degree so that vector
// coordinates against a monomial basis stay well defined.
class TernaryForm {
  public:
    TernaryForm() = default;
    TernaryForm(FieldCtxPtr ctx, int degree);

    static TernaryForm from_terms(const FieldCtxPtr& ctx,
                                  const std::vector<std::pair<ExpTriple, CycNum>>& terms);
    static TernaryForm monomial(const FieldCtxPtr& ctx, ExpTriple e, const CycNum& coeff);

    const FieldCtxPtr& ctx() const { return ctx_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpTriple, CycNum>& terms() const { return terms_; }
    CycNum coeff(ExpTriple e) const;

    TernaryForm operator+(const TernaryForm& o) const;
    TernaryForm operator-(const TernaryForm& o) const;
    TernaryForm operator*(const TernaryForm& o) const;
    TernaryForm operator-() const;
    TernaryForm scaled(const CycNum& s) const;

    bool operator==(const TernaryForm& o) const;
    bool operator!=(const TernaryForm& o) const { return !(*this == o); }
    // Total order on (degree, term list); used to keep orbit output stable.
    int compare(const TernaryForm& o) const;
    bool operator<(const TernaryForm& o) const { return compare(o) < 0; }

    CycNum evaluate(const std::array<CycNum, 3>& pt) const;
    TernaryForm partial(int var) const;
    TernaryForm pow(unsigned e) const;

    std::string to_string() const;

  private:
    FieldCtxPtr ctx_;
    int degree_ = 0;
    std::map<ExpTriple, CycNum> terms_;
    void insert_add(ExpTriple e, const CycNum& c);
};

// Determinant of the matrix of second partials; degree 3(d-2) for input
// degree d >= 2.
TernaryForm hessian_form(const TernaryForm& f);

// f(m*z).
TernaryForm substitute(const TernaryForm& f, const Mat3& m);

// The constant c with f = c*g, when one exists.  Two zero forms are
// proportional with c = 1; a zero and a nonzero form are not proportional
// (only nonzero constants are considered).
std::optional<CycNum> proportional(const TernaryForm& f, const TernaryForm& g);

// Monomials of degree d in graded-lex order with z0 > z1 > z2:
// (d,0,0), (d-1,1,0), (d-1,0,1), ..., (0,0,d).
std::vector<ExpTriple> monomial_basis(int d);

// Coefficient vector of f against monomial_basis(f.degree()).
std::vector<CycNum> form_to_vector(const TernaryForm& f);
std::vector<CycNum> form_to_vector(const TernaryForm& f, int degree);
TernaryForm form_from_vector(const FieldCtxPtr& ctx, int degree, const std::vector<CycNum>& v);

// Scale so the first nonzero coefficient in basis order is 1; zero forms are
// returned unchanged.  Canonical representative of the underlying curve.
TernaryForm normalize_leading(const TernaryForm& f);

// --- named forms -----------------------------------------------------------

// P1 = z0^2 z1^2 z2^2, the doubled coordinate triangle.
TernaryForm pencil_p1(const FieldCtxPtr& ctx);
// P2 = z0^5 z1 + z2^5 z0 + z1^5 z2.
TernaryForm pencil_p2(const FieldCtxPtr& ctx);
// alpha*P1 + beta*P2.
TernaryForm pencil_member(const FieldCtxPtr& ctx, const CycNum& alpha, const CycNum& beta);
// z0 z1^3 + z1 z2^3 + z2 z0^3 (Klein's quartic).
TernaryForm klein_quartic(const FieldCtxPtr& ctx);
// 3*P1 - P2, the member with seven nodes.
TernaryForm node_sextic(const FieldCtxPtr& ctx);
// P2 - 5*P1; equals -1/54 times the Hessian of the Klein quartic.
TernaryForm hessian_sextic(const FieldCtxPtr& ctx);
// z0^5 z1 + zeta3^k z2^5 z0 + zeta3^{2k} z1^5 z2 (tau-eigenform, k = 1, 2).
TernaryForm tau_eigen_sextic(const FieldCtxPtr& ctx, int k);
// z0^3 z2 + zeta3^k z2^3 z1 + zeta3^{2k} z1^3 z0 (tau-eigen quartic, k mod 3).
TernaryForm eigen_quartic(const FieldCtxPtr& ctx, int k);

}  // namespace kleinpencil
