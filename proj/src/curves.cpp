#include "kleinpencil/curves.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kleinpencil/linalg.hpp"

namespace kleinpencil {

namespace {

FieldCtxPtr point_ctx(const ProjPoint& pt) {
    for (int i = 0; i < 3; ++i)
        if (pt[i].ctx()) return pt[i].ctx();
    throw std::logic_error("projective point without a field context");
}

// Monic characteristic polynomial of m, constant term first:
// x^3 - tr x^2 + s2 x - det.
std::vector<CycNum> char_cubic(const Mat3& m) {
    CycNum tr = m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
    CycNum s2 = (m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)) +
                (m.at(0, 0) * m.at(2, 2) - m.at(0, 2) * m.at(2, 0)) +
                (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1));
    return {-m.det(), s2, -tr, CycNum::one(m.ctx())};
}

CycNum eval_poly(const std::vector<CycNum>& c, const CycNum& x) {
    CycNum v = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) v = v * x + c[i];
    return v;
}

// c / (x - root); remainder must vanish (checked by the caller via eval).
std::vector<CycNum> deflate(const std::vector<CycNum>& c, const CycNum& root) {
    std::vector<CycNum> q(c.size() - 1, CycNum::zero(root.ctx()));
    CycNum carry = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c[i] + carry * root;
    }
    return q;
}

}  // namespace

FixedPointSet fixed_points(const Mat3& m) {
    if (m.is_scalar()) throw std::invalid_argument("fixed_points: a scalar matrix fixes every point");
    const FieldCtxPtr& ctx = m.ctx();
    unsigned n = ctx->conductor();

    // Factor the characteristic cubic over the n-th roots of unity.
    std::vector<CycNum> chi = char_cubic(m);
    std::vector<std::pair<CycNum, int>> eigen;  // (eigenvalue, algebraic multiplicity)
    for (unsigned j = 0; j < n && chi.size() > 1; ++j) {
        CycNum lam = CycNum::root_of_unity(ctx, n, static_cast<long>(j));
        int mult = 0;
        while (chi.size() > 1 && eval_poly(chi, lam).is_zero()) {
            chi = deflate(chi, lam);
            ++mult;
        }
        if (mult > 0) eigen.emplace_back(lam, mult);
    }
    if (chi.size() > 1)
        throw std::runtime_error("fixed_points: an eigenvalue lies outside the root-of-unity candidates");

    FixedPointSet out;
    for (const auto& [lam, mult] : eigen) {
        Matrix a(3, Vec(3, CycNum::zero(ctx)));
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    (r == c) ? m.at(r, c) - lam : m.at(r, c);
        std::vector<Vec> ker = kernel_basis(a, ctx);
        if (ker.empty() || static_cast<int>(ker.size()) > mult)
            throw std::logic_error("fixed_points: eigenspace dimension inconsistent with multiplicity");
        if (ker.size() == 1) {
            out.isolated.emplace_back(std::array<CycNum, 3>{ker[0][0], ker[0][1], ker[0][2]});
        } else if (ker.size() == 2) {
            out.lines.emplace_back(ProjPoint(std::array<CycNum, 3>{ker[0][0], ker[0][1], ker[0][2]}),
                                   ProjPoint(std::array<CycNum, 3>{ker[1][0], ker[1][1], ker[1][2]}));
        } else {
            throw std::logic_error("fixed_points: three-dimensional eigenspace on a non-scalar matrix");
        }
    }
    std::sort(out.isolated.begin(), out.isolated.end());
    return out;
}

bool is_singular_at(const TernaryForm& f, const ProjPoint& pt) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("singularity test needs a nonzero form of degree >= 1");
    for (int i = 0; i < 3; ++i)
        if (!f.partial(i).evaluate(pt.coords()).is_zero()) return false;
    return true;
}

bool is_node_at(const TernaryForm& f, const ProjPoint& pt) {
    if (!is_singular_at(f, pt)) return false;
    const FieldCtxPtr& ctx = f.ctx();
    Matrix h(3, Vec(3, CycNum::zero(ctx)));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            h[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                f.partial(r).partial(c).evaluate(pt.coords());
    // Euler's relation puts pt itself in the kernel, so rank 2 is maximal.
    return rank(h) == 2;
}

std::vector<ProjPoint> candidate_singular_locus(const TernaryForm& f, const MatGroup& g) {
    std::set<ProjPoint> cand;
    for (const Mat3& e : g.elements()) {
        if (e.is_scalar()) continue;
        FixedPointSet fps = fixed_points(e);
        if (!fps.lines.empty())
            throw std::runtime_error(
                "candidate_singular_locus: an element fixes a line pointwise, candidate set not finite");
        cand.insert(fps.isolated.begin(), fps.isolated.end());
    }
    std::vector<ProjPoint> out;
    for (const ProjPoint& pt : cand)
        if (is_singular_at(f, pt)) out.push_back(pt);
    return out;
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    const FieldCtxPtr& ctx = point_ctx(a);
    Matrix m{{a[0], a[1], a[2]}, {b[0], b[1], b[2]}, {c[0], c[1], c[2]}};
    return det(std::move(m), ctx).is_zero();
}

bool on_common_conic(const std::array<ProjPoint, 6>& pts) {
    const FieldCtxPtr& ctx = point_ctx(pts[0]);
    std::vector<ExpTriple> basis = monomial_basis(2);
    Matrix m;
    for (const ProjPoint& pt : pts) {
        Vec row;
        for (const ExpTriple& e : basis) {
            CycNum v = CycNum::one(ctx);
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < e[i]; ++k) v = v * pt[i];
            row.push_back(v);
        }
        m.push_back(std::move(row));
    }
    return det(std::move(m), ctx).is_zero();
}

GeneralPositionReport general_position7(const std::vector<ProjPoint>& pts) {
    if (pts.size() != 7) throw std::invalid_argument("general_position7 expects exactly seven points");
    GeneralPositionReport rep;
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j)
            if (pts[i] == pts[j]) {
                rep.violation = "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
                return rep;
            }
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j)
            for (std::size_t k = j + 1; k < 7; ++k)
                if (collinear(pts[i], pts[j], pts[k])) {
                    rep.violation = "points " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                    std::to_string(k) + " are collinear";
                    return rep;
                }
    for (std::size_t omit = 0; omit < 7; ++omit) {
        std::array<ProjPoint, 6> six{pts[omit == 0 ? 1 : 0], pts[omit <= 1 ? 2 : 1],
                                     pts[omit <= 2 ? 3 : 2], pts[omit <= 3 ? 4 : 3],
                                     pts[omit <= 4 ? 5 : 4], pts[omit <= 5 ? 6 : 5]};
        if (on_common_conic(six)) {
            rep.violation = "the six points other than point " + std::to_string(omit) + " lie on a conic";
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

long plane_curve_genus(int d) {
    if (d < 1) throw std::invalid_argument("plane_curve_genus needs degree >= 1");
    return static_cast<long>(d - 1) * (d - 2) / 2;
}

long bezout_degree(int d1, int d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("bezout_degree needs positive degrees");
    return static_cast<long>(d1) * d2;
}

std::uint64_t eval_form_mod_p(const TernaryForm& f, const PrimeEmbedding& emb,
                              const std::array<std::uint64_t, 3>& pt) {
    std::uint64_t p = emb.prime();
    std::uint64_t acc = 0;
    for (const auto& [e, c] : f.terms()) {
        std::uint64_t t = emb.reduce(c);
        t = t * mod_pow(pt[0] % p, static_cast<std::uint64_t>(e.e0), p) % p;
        t = t * mod_pow(pt[1] % p, static_cast<std::uint64_t>(e.e1), p) % p;
        t = t * mod_pow(pt[2] % p, static_cast<std::uint64_t>(e.e2), p) % p;
        acc = (acc + t) % p;
    }
    return acc;
}

fp::Bivar reduce_chart(const TernaryForm& f, const PrimeEmbedding& emb, int chart) {
    if (chart < 0 || chart > 2) throw std::invalid_argument("chart index out of range");
    std::uint64_t p = emb.prime();
    int a = chart == 0 ? 1 : 0;
    int b = chart == 2 ? 1 : 2;
    fp::Bivar out;
    for (const auto& [e, c] : f.terms()) {
        std::uint64_t img = emb.reduce(c);
        if (img == 0) continue;
        int ye = e[a], ze = e[b];
        if (static_cast<int>(out.c.size()) <= ye) out.c.resize(static_cast<size_t>(ye) + 1);
        fp::Poly& cz = out.c[static_cast<size_t>(ye)];
        if (static_cast<int>(cz.size()) <= ze) cz.resize(static_cast<size_t>(ze) + 1, 0);
        cz[static_cast<size_t>(ze)] = (cz[static_cast<size_t>(ze)] + img) % p;
    }
    for (fp::Poly& cz : out.c) cz = fp::trim(std::move(cz));
    return fp::trim(std::move(out));
}

namespace {

std::array<std::uint64_t, 3> normalize_triple(std::array<std::uint64_t, 3> w, std::uint64_t p) {
    for (int i = 0; i < 3; ++i) {
        if (w[i] % p == 0) continue;
        std::uint64_t inv = mod_inv(w[i], p);
        for (int j = 0; j < 3; ++j) w[j] = w[j] % p * inv % p;
        return w;
    }
    throw std::logic_error("zero coordinate triple");
}

}  // namespace

SmoothnessReport smooth_mod_p(const TernaryForm& f, std::uint64_t p) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("smooth_mod_p needs a nonzero form of degree >= 1");
    const FieldCtxPtr& ctx = f.ctx();
    PrimeEmbedding emb = PrimeEmbedding::make(ctx, p);

    bool all_zero = true;
    for (const auto& [e, c] : f.terms())
        if (emb.reduce(c) != 0) {
            all_zero = false;
            break;
        }
    if (all_zero) throw bad_prime_error("form vanishes modulo the prime");

    std::array<TernaryForm, 3> pd{f.partial(0), f.partial(1), f.partial(2)};
    int nonzero_mod = 0;
    for (int i = 0; i < 3; ++i) {
        if (pd[i].is_zero()) continue;
        bool zero_mod = true;
        for (const auto& [e, c] : pd[i].terms())
            if (emb.reduce(c) != 0) {
                zero_mod = false;
                break;
            }
        if (zero_mod) throw bad_prime_error("a partial derivative collapses modulo the prime");
        ++nonzero_mod;
    }

    SmoothnessReport rep;
    rep.prime = p;

    if (f.degree() == 1) {
        rep.smooth = true;
        rep.detail = "degree-1 form: the gradient is a nonzero constant vector";
        return rep;
    }
    if (nonzero_mod == 0)
        throw std::logic_error("nonzero form of positive degree with identically zero gradient");
    if (nonzero_mod < 3) {
        // The surviving partials are positive-degree plane curves (degree
        // d-1 >= 1), and any two plane curves meet over the closure.
        rep.smooth = false;
        rep.detail =
            "a partial derivative vanishes identically; the remaining partial loci meet by Bezout, "
            "so all three partials share a zero over the algebraic closure";
        return rep;
    }

    for (int chart = 0; chart < 3; ++chart) {
        int a = chart == 0 ? 1 : 0;
        int b = chart == 2 ? 1 : 2;
        fp::Bivar A = reduce_chart(pd[static_cast<size_t>(a)], emb, chart);
        fp::Bivar B = reduce_chart(pd[static_cast<size_t>(b)], emb, chart);
        fp::Bivar C = reduce_chart(pd[static_cast<size_t>(chart)], emb, chart);
        if (A.is_zero() || B.is_zero() || C.is_zero())
            throw std::logic_error("nonzero partial dehomogenized to zero");
        if (A.total_degree() == 0 || B.total_degree() == 0 || C.total_degree() == 0)
            continue;  // one of the partials is a nonzero constant on this chart
        bool chart_clear = false;
        for (std::uint64_t s = 0; s < p && !chart_clear; ++s) {
            if (fp::top_form_at(A, s, p) == 0 || fp::top_form_at(B, s, p) == 0) continue;
            fp::Bivar as = fp::shear(A, s, p);
            fp::Bivar bs = fp::shear(B, s, p);
            fp::Bivar cs = fp::shear(C, s, p);
            fp::PairElimination elim = fp::eliminate_y(as, bs, p);
            if (fp::is_zero(elim.res)) {
                rep.smooth = false;
                std::ostringstream os;
                os << "chart z" << chart << " = 1: Res_y of the partial pair vanishes identically, so "
                   << "the two partials share a positive-degree component; by Bezout that component "
                   << "meets the zero locus of the third partial, giving a common zero of all three "
                   << "over the algebraic closure";
                rep.detail = os.str();
                return rep;
            }
            fp::Poly t = fp::squarefree_part(elim.res, p);
            if (fp::is_constant(t)) {
                chart_clear = true;
                break;
            }
            // A root of t shared with s1 would mean a gcd of degree >= 2
            // there; shear again until the degree-1 subresultant separates.
            if (fp::deg(fp::gcd(t, elim.s1, p)) >= 1) continue;
            fp::Poly yofz =
                fp::rem(fp::mul(fp::sub({}, elim.s0, p), fp::inv_mod(elim.s1, t, p), p), t, p);
            fp::Poly t0 = fp::gcd(t, fp::eval_bivar_mod(as, yofz, t, p), p);
            t0 = fp::gcd(t0, fp::eval_bivar_mod(bs, yofz, t, p), p);
            if (fp::is_constant(t0)) {
                chart_clear = true;
                break;
            }
            fp::Poly w = fp::gcd(t0, fp::eval_bivar_mod(cs, yofz, t0, p), p);
            if (fp::is_constant(w)) {
                chart_clear = true;
                break;
            }
            rep.smooth = false;
            rep.witness_degrees = fp::factor_degrees(w, p);
            for (std::uint64_t tau : fp::roots(w, p)) {
                std::uint64_t y0 = fp::eval(yofz, tau, p);
                std::uint64_t zc = (tau + s * y0) % p;  // undo the shear
                std::array<std::uint64_t, 3> wit{};
                wit[static_cast<size_t>(chart)] = 1;
                wit[static_cast<size_t>(a)] = y0;
                wit[static_cast<size_t>(b)] = zc;
                wit = normalize_triple(wit, p);
                for (int i = 0; i < 3; ++i)
                    if (eval_form_mod_p(pd[static_cast<size_t>(i)], emb, wit) != 0)
                        throw std::logic_error("singular witness failed direct verification");
                rep.witnesses.push_back(wit);
            }
            std::ostringstream os;
            os << "chart z" << chart << " = 1: all three partials vanish on a locus of degree "
               << fp::deg(w) << " (residue degrees:";
            for (int dd : rep.witness_degrees) os << ' ' << dd;
            os << ")";
            rep.detail = os.str();
            return rep;
        }
        if (!chart_clear) throw bad_prime_error("no separating shear found modulo the prime");
    }

    rep.smooth = true;
    rep.detail =
        "all three affine charts certified: the partial derivatives have no common zero over the "
        "algebraic closure";
    return rep;
}

SmoothnessReport smooth_mod_p_auto(const TernaryForm& f, std::uint64_t first_prime, int attempts) {
    if (attempts < 1) throw std::invalid_argument("smooth_mod_p_auto needs at least one attempt");
    std::uint64_t p = first_prime;
    unsigned n = f.ctx()->conductor();
    for (int i = 0;; ++i) {
        try {
            return smooth_mod_p(f, p);
        } catch (const bad_prime_error&) {
            if (i + 1 >= attempts) throw;
            p = next_good_prime(n, p);
        }
    }
}

std::vector<std::array<std::uint64_t, 3>> enumerate_singular_mod_p(const TernaryForm& f,
                                                                   std::uint64_t p) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("singular enumeration needs a nonzero form of degree >= 1");
    PrimeEmbedding emb = PrimeEmbedding::make(f.ctx(), p);

    struct RTerm {
        std::uint64_t c;
        int e0, e1, e2;
    };
    std::array<std::vector<RTerm>, 3> rp;
    for (int i = 0; i < 3; ++i) {
        TernaryForm pi = f.partial(i);
        if (pi.is_zero()) continue;
        for (const auto& [e, c] : pi.terms()) {
            std::uint64_t img = emb.reduce(c);
            if (img != 0) rp[static_cast<size_t>(i)].push_back({img, e.e0, e.e1, e.e2});
        }
        if (rp[static_cast<size_t>(i)].empty())
            throw bad_prime_error("a partial derivative collapses modulo the prime");
    }

    int d = f.degree();
    std::vector<std::vector<std::uint64_t>> pw(p, std::vector<std::uint64_t>(static_cast<size_t>(d) + 1));
    for (std::uint64_t v = 0; v < p; ++v) {
        pw[v][0] = 1;
        for (int e = 1; e <= d; ++e) pw[v][static_cast<size_t>(e)] = pw[v][static_cast<size_t>(e) - 1] * v % p;
    }
    auto vanish_all = [&](std::uint64_t x0, std::uint64_t x1, std::uint64_t x2) {
        for (const auto& terms : rp) {
            std::uint64_t acc = 0;
            for (const RTerm& t : terms)
                acc = (acc + t.c * pw[x0][static_cast<size_t>(t.e0)] % p *
                                 pw[x1][static_cast<size_t>(t.e1)] % p *
                                 pw[x2][static_cast<size_t>(t.e2)]) % p;
            if (acc != 0) return false;
        }
        return true;
    };

    std::vector<std::array<std::uint64_t, 3>> out;
    if (vanish_all(0, 0, 1)) out.push_back({0, 0, 1});
    for (std::uint64_t z = 0; z < p; ++z)
        if (vanish_all(0, 1, z)) out.push_back({0, 1, z});
    for (std::uint64_t y = 0; y < p; ++y)
        for (std::uint64_t z = 0; z < p; ++z)
            if (vanish_all(1, y, z)) out.push_back({1, y, z});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kleinpencil
