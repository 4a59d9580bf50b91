#include "kleinpencil/forms.hpp"

#include <sstream>

namespace kleinpencil {

Mat3::Mat3(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {
    for (auto& x : e_) x = CycNum::zero(ctx_);
}

Mat3::Mat3(FieldCtxPtr ctx, std::array<CycNum, 9> entries) : ctx_(std::move(ctx)), e_(std::move(entries)) {}

Mat3 Mat3::identity(const FieldCtxPtr& ctx) {
    Mat3 m(ctx);
    for (int i = 0; i < 3; ++i) m.at(i, i) = CycNum::one(ctx);
    return m;
}

Mat3 Mat3::diagonal(const CycNum& a, const CycNum& b, const CycNum& c) {
    Mat3 m(a.ctx());
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    m.at(2, 2) = c;
    return m;
}

Mat3 Mat3::permutation(const FieldCtxPtr& ctx, const std::array<int, 3>& perm) {
    Mat3 m(ctx);
    for (int i = 0; i < 3; ++i) m.at(i, perm[static_cast<size_t>(i)]) = CycNum::one(ctx);
    return m;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r(ctx_);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CycNum s = CycNum::zero(ctx_);
            for (int k = 0; k < 3; ++k) s = s + at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

Mat3 Mat3::operator*(const CycNum& s) const {
    Mat3 r(ctx_);
    for (int i = 0; i < 9; ++i) r.e_[static_cast<size_t>(i)] = e_[static_cast<size_t>(i)] * s;
    return r;
}

std::array<CycNum, 3> Mat3::apply(const std::array<CycNum, 3>& v) const {
    std::array<CycNum, 3> out{CycNum::zero(ctx_), CycNum::zero(ctx_), CycNum::zero(ctx_)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[static_cast<size_t>(i)] = out[static_cast<size_t>(i)] + at(i, j) * v[static_cast<size_t>(j)];
    return out;
}

CycNum Mat3::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Mat3 Mat3::inverse() const {
    CycNum d = det();
    if (d.is_zero()) throw std::domain_error("singular matrix");
    CycNum di = d.inverse();
    Mat3 r(ctx_);
    // adjugate transpose
    auto cof = [&](int i, int j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(j, i) = cof(i, j) * di;
    return r;
}

Mat3 Mat3::transpose() const {
    Mat3 r(ctx_);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(j, i) = at(i, j);
    return r;
}

int Mat3::compare(const Mat3& o) const {
    for (size_t i = 0; i < 9; ++i) {
        int c = e_[i].compare(o.e_[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool Mat3::is_scalar() const {
    const CycNum& d = at(0, 0);
    if (d.is_zero()) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j ? (at(i, j) != d) : !at(i, j).is_zero()) return false;
        }
    return true;
}

std::string Mat3::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < 3; ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (int j = 0; j < 3; ++j) os << at(i, j).to_string() << (j < 2 ? ", " : "");
        os << "]" << (i < 2 ? "\n" : "]");
    }
    return os.str();
}

ProjPoint::ProjPoint(const CycNum& x0, const CycNum& x1, const CycNum& x2)
    : ProjPoint(std::array<CycNum, 3>{x0, x1, x2}) {}

ProjPoint::ProjPoint(std::array<CycNum, 3> coords) : x_(std::move(coords)) {
    for (auto& c : x_) {
        if (c.is_zero()) continue;
        CycNum inv = c.inverse();
        for (auto& d : x_) d = d * inv;
        return;
    }
    throw std::invalid_argument("all coordinates zero");
}

int ProjPoint::compare(const ProjPoint& o) const {
    for (size_t i = 0; i < 3; ++i) {
        int c = x_[i].compare(o.x_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string ProjPoint::to_string() const {
    std::ostringstream os;
    os << "[" << x_[0].to_string() << " : " << x_[1].to_string() << " : " << x_[2].to_string() << "]";
    return os.str();
}

ProjPoint apply_point(const Mat3& m, const ProjPoint& p) {
    return ProjPoint(m.apply(p.coords()));
}

TernaryForm::TernaryForm(FieldCtxPtr ctx, int degree) : ctx_(std::move(ctx)), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
}

void TernaryForm::insert_add(ExpTriple e, const CycNum& c) {
    if (e.e0 < 0 || e.e1 < 0 || e.e2 < 0) throw std::invalid_argument("negative exponent");
    if (e.degree() != degree_) throw std::invalid_argument("inhomogeneous term");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
    } else {
        CycNum s = it->second + c;
        if (s.is_zero()) terms_.erase(it);
        else it->second = s;
    }
}

TernaryForm TernaryForm::from_terms(const FieldCtxPtr& ctx,
                                    const std::vector<std::pair<ExpTriple, CycNum>>& terms) {
    if (terms.empty()) return TernaryForm(ctx, 0);
    TernaryForm f(ctx, terms.front().first.degree());
    for (const auto& [e, c] : terms) f.insert_add(e, c);
    return f;
}

TernaryForm TernaryForm::monomial(const FieldCtxPtr& ctx, ExpTriple e, const CycNum& coeff) {
    TernaryForm f(ctx, e.degree());
    f.insert_add(e, coeff);
    return f;
}

CycNum TernaryForm::coeff(ExpTriple e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CycNum::zero(ctx_) : it->second;
}

TernaryForm TernaryForm::operator+(const TernaryForm& o) const {
    if (!is_zero() && !o.is_zero() && degree_ != o.degree_)
        throw std::invalid_argument("degree mismatch in form addition");
    TernaryForm r = is_zero() ? TernaryForm(ctx_, o.is_zero() ? degree_ : o.degree_) : TernaryForm(ctx_, degree_);
    for (const auto& [e, c] : terms_) r.insert_add(e, c);
    for (const auto& [e, c] : o.terms_) r.insert_add(e, c);
    return r;
}

TernaryForm TernaryForm::operator-() const {
    TernaryForm r(ctx_, degree_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

TernaryForm TernaryForm::operator-(const TernaryForm& o) const { return *this + (-o); }

TernaryForm TernaryForm::scaled(const CycNum& s) const {
    TernaryForm r(ctx_, degree_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

TernaryForm TernaryForm::operator*(const TernaryForm& o) const {
    TernaryForm r(ctx_, degree_ + o.degree_);
    for (const auto& [e, c] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.insert_add({e.e0 + e2.e0, e.e1 + e2.e1, e.e2 + e2.e2}, c * c2);
    return r;
}

bool TernaryForm::operator==(const TernaryForm& o) const {
    // Zero forms of different declared degree still compare equal.
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return degree_ == o.degree_ && terms_ == o.terms_;
}

int TernaryForm::compare(const TernaryForm& o) const {
    if (is_zero() && o.is_zero()) return 0;
    if (degree_ != o.degree_) return degree_ < o.degree_ ? -1 : 1;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return it->first < jt->first ? -1 : 1;
        int c = it->second.compare(jt->second);
        if (c != 0) return c;
    }
    if (it != terms_.end()) return 1;
    if (jt != o.terms_.end()) return -1;
    return 0;
}

CycNum TernaryForm::evaluate(const std::array<CycNum, 3>& pt) const {
    // power tables per coordinate
    std::array<std::vector<CycNum>, 3> pows;
    for (int i = 0; i < 3; ++i) {
        pows[static_cast<size_t>(i)].push_back(CycNum::one(ctx_));
        for (int k = 1; k <= degree_; ++k)
            pows[static_cast<size_t>(i)].push_back(pows[static_cast<size_t>(i)].back() * pt[static_cast<size_t>(i)]);
    }
    CycNum acc = CycNum::zero(ctx_);
    for (const auto& [e, c] : terms_)
        acc = acc + c * pows[0][static_cast<size_t>(e.e0)] * pows[1][static_cast<size_t>(e.e1)] * pows[2][static_cast<size_t>(e.e2)];
    return acc;
}

TernaryForm TernaryForm::partial(int var) const {
    if (var < 0 || var > 2) throw std::invalid_argument("variable index");
    TernaryForm r(ctx_, degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [e, c] : terms_) {
        int ev = e[var];
        if (ev == 0) continue;
        ExpTriple d = e;
        (var == 0 ? d.e0 : var == 1 ? d.e1 : d.e2) -= 1;
        r.insert_add(d, c * Rational(ev));
    }
    return r;
}

TernaryForm TernaryForm::pow(unsigned e) const {
    TernaryForm acc = TernaryForm::monomial(ctx_, {0, 0, 0}, CycNum::one(ctx_));
    for (unsigned i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
}

std::string TernaryForm::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print in graded-lex display order (z0-dominant first)
    for (const auto& e : monomial_basis(degree_)) {
        auto it = terms_.find(e);
        if (it == terms_.end()) continue;
        if (!first) os << " + ";
        os << "(" << it->second.to_string() << ")";
        const char* vn[3] = {"z0", "z1", "z2"};
        for (int v = 0; v < 3; ++v) {
            int ev = e[v];
            if (ev == 0) continue;
            os << "*" << vn[v];
            if (ev > 1) os << "^" << ev;
        }
        first = false;
    }
    return os.str();
}

TernaryForm hessian_form(const TernaryForm& f) {
    if (f.degree() < 2) throw std::invalid_argument("hessian needs degree >= 2");
    TernaryForm h[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[i][j] = f.partial(i).partial(j);
    TernaryForm det = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
                      h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                      h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
    return det;
}

TernaryForm substitute(const TernaryForm& f, const Mat3& m) {
    const auto& ctx = f.ctx();
    // linear forms L_i = sum_j m(i,j) z_j
    TernaryForm L[3];
    for (int i = 0; i < 3; ++i) {
        std::vector<std::pair<ExpTriple, CycNum>> terms;
        terms.push_back({{1, 0, 0}, m.at(i, 0)});
        terms.push_back({{0, 1, 0}, m.at(i, 1)});
        terms.push_back({{0, 0, 1}, m.at(i, 2)});
        L[i] = TernaryForm::from_terms(ctx, terms);
    }
    // memoized powers of each linear form
    std::array<std::vector<TernaryForm>, 3> lp;
    for (int i = 0; i < 3; ++i) {
        lp[static_cast<size_t>(i)].push_back(TernaryForm::monomial(ctx, {0, 0, 0}, CycNum::one(ctx)));
        for (int k = 1; k <= f.degree(); ++k)
            lp[static_cast<size_t>(i)].push_back(lp[static_cast<size_t>(i)].back() * L[i]);
    }
    TernaryForm acc(ctx, f.degree());
    for (const auto& [e, c] : f.terms()) {
        TernaryForm t = lp[0][static_cast<size_t>(e.e0)] * lp[1][static_cast<size_t>(e.e1)] * lp[2][static_cast<size_t>(e.e2)];
        acc = acc + t.scaled(c);
    }
    return acc;
}

std::optional<CycNum> proportional(const TernaryForm& f, const TernaryForm& g) {
    if (f.is_zero() && g.is_zero()) return CycNum::one(f.ctx());
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    if (f.degree() != g.degree() || f.term_count() != g.term_count()) return std::nullopt;
    std::optional<CycNum> c;
    auto itf = f.terms().begin();
    auto itg = g.terms().begin();
    for (; itf != f.terms().end(); ++itf, ++itg) {
        if (itf->first != itg->first) return std::nullopt;
        CycNum ratio = itf->second / itg->second;
        if (!c) c = ratio;
        else if (*c != ratio) return std::nullopt;
    }
    return c;
}

std::vector<ExpTriple> monomial_basis(int d) {
    std::vector<ExpTriple> out;
    for (int e0 = d; e0 >= 0; --e0)
        for (int e1 = d - e0; e1 >= 0; --e1) out.push_back({e0, e1, d - e0 - e1});
    return out;
}

std::vector<CycNum> form_to_vector(const TernaryForm& f) { return form_to_vector(f, f.degree()); }

std::vector<CycNum> form_to_vector(const TernaryForm& f, int degree) {
    if (!f.is_zero() && f.degree() != degree) throw std::invalid_argument("degree mismatch");
    std::vector<CycNum> out;
    for (const auto& e : monomial_basis(degree)) out.push_back(f.coeff(e));
    return out;
}

TernaryForm form_from_vector(const FieldCtxPtr& ctx, int degree, const std::vector<CycNum>& v) {
    auto basis = monomial_basis(degree);
    if (v.size() != basis.size()) throw std::invalid_argument("vector length mismatch");
    std::vector<std::pair<ExpTriple, CycNum>> terms;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!v[i].is_zero()) terms.push_back({basis[i], v[i]});
    if (terms.empty()) return TernaryForm(ctx, degree);
    return TernaryForm::from_terms(ctx, terms);
}

TernaryForm normalize_leading(const TernaryForm& f) {
    if (f.is_zero()) return f;
    for (const auto& e : monomial_basis(f.degree())) {
        CycNum c = f.coeff(e);
        if (!c.is_zero()) return f.scaled(c.inverse());
    }
    return f;
}

TernaryForm pencil_p1(const FieldCtxPtr& ctx) {
    return TernaryForm::monomial(ctx, {2, 2, 2}, CycNum::one(ctx));
}

TernaryForm pencil_p2(const FieldCtxPtr& ctx) {
    CycNum one = CycNum::one(ctx);
    return TernaryForm::from_terms(ctx, {{{5, 1, 0}, one}, {{1, 0, 5}, one}, {{0, 5, 1}, one}});
}

TernaryForm pencil_member(const FieldCtxPtr& ctx, const CycNum& alpha, const CycNum& beta) {
    return pencil_p1(ctx).scaled(alpha) + pencil_p2(ctx).scaled(beta);
}

TernaryForm klein_quartic(const FieldCtxPtr& ctx) {
    CycNum one = CycNum::one(ctx);
    return TernaryForm::from_terms(ctx, {{{1, 3, 0}, one}, {{0, 1, 3}, one}, {{3, 0, 1}, one}});
}

TernaryForm node_sextic(const FieldCtxPtr& ctx) {
    return pencil_member(ctx, CycNum::from_int(ctx, 3), CycNum::from_int(ctx, -1));
}

TernaryForm hessian_sextic(const FieldCtxPtr& ctx) {
    return pencil_member(ctx, CycNum::from_int(ctx, -5), CycNum::one(ctx));
}

TernaryForm tau_eigen_sextic(const FieldCtxPtr& ctx, int k) {
    CycNum w = CycNum::root_of_unity(ctx, 3, k);
    CycNum one = CycNum::one(ctx);
    return TernaryForm::from_terms(ctx, {{{5, 1, 0}, one}, {{1, 0, 5}, w}, {{0, 5, 1}, w * w}});
}

TernaryForm eigen_quartic(const FieldCtxPtr& ctx, int k) {
    CycNum w = CycNum::root_of_unity(ctx, 3, k);
    CycNum one = CycNum::one(ctx);
    return TernaryForm::from_terms(ctx, {{{3, 0, 1}, one}, {{0, 1, 3}, w}, {{1, 3, 0}, w * w}});
}

}  // namespace kleinpencil
