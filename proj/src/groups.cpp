#include "kleinpencil/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace kleinpencil {

Mat3 canonical_rep(const Mat3& m, GroupPolicy policy) {
    if (policy == GroupPolicy::linear) return m;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            if (m.at(r, c).is_zero()) continue;
            return m * m.at(r, c).inverse();
        }
    }
    throw std::invalid_argument("zero matrix has no projective representative");
}

MatGroup::MatGroup(std::vector<Mat3> generators, GroupPolicy policy, size_t bound)
    : policy_(policy), gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("no generators");
    const FieldCtxPtr& ctx = gens_[0].ctx();
    std::vector<Mat3> cgens;
    for (const Mat3& g : gens_) {
        if (g.det().is_zero()) throw std::invalid_argument("singular generator");
        cgens.push_back(canonical_rep(g, policy_));
    }
    std::set<Mat3> seen;
    std::vector<Mat3> queue;
    queue.push_back(canonical_rep(Mat3::identity(ctx), policy_));
    seen.insert(queue[0]);
    for (size_t head = 0; head < queue.size(); ++head) {
        for (const Mat3& g : cgens) {
            Mat3 prod = canonical_rep(queue[head] * g, policy_);
            if (seen.insert(prod).second) {
                if (seen.size() > bound)
                    throw closure_bound_error("group closure exceeded bound " +
                                              std::to_string(bound));
                queue.push_back(prod);
            }
        }
    }
    elements_.assign(seen.begin(), seen.end());
}

bool MatGroup::contains(const Mat3& m) const {
    Mat3 rep = canonical_rep(m, policy_);
    return std::binary_search(elements_.begin(), elements_.end(), rep);
}

Mat3 gen_order7_diag(const FieldCtxPtr& ctx) {
    CycNum l = CycNum::root_of_unity(ctx, 7, 1);
    return Mat3::diagonal(l, l.pow(2), l.pow(4));
}

Mat3 gen_coordinate_cycle(const FieldCtxPtr& ctx) {
    return Mat3::permutation(ctx, {2, 0, 1});
}

Mat3 gen_order3_diag(const FieldCtxPtr& ctx) {
    CycNum w = CycNum::root_of_unity(ctx, 3, 1);
    return Mat3::diagonal(CycNum::one(ctx), w, w * w);
}

CycNum gauss_sum(const FieldCtxPtr& ctx) {
    CycNum l = CycNum::root_of_unity(ctx, 7, 1);
    return l + l.pow(2) + l.pow(4) - l.pow(3) - l.pow(5) - l.pow(6);
}

Mat3 gen_klein_involution(const FieldCtxPtr& ctx) {
    static const int expo[3][3] = {{2, 1, 4}, {1, 4, 2}, {4, 2, 1}};
    CycNum l = CycNum::root_of_unity(ctx, 7, 1);
    CycNum ginv = gauss_sum(ctx).inverse();
    Mat3 s(ctx);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            s.at(r, c) = (l.pow(expo[r][c]) - l.pow(7 - expo[r][c])) * ginv;
    return s;
}

std::vector<ProjPoint> orbit_point(const MatGroup& g, const ProjPoint& p) {
    std::set<ProjPoint> out;
    for (const Mat3& m : g.elements()) out.insert(apply_point(m, p));
    return {out.begin(), out.end()};
}

std::vector<TernaryForm> orbit_form(const MatGroup& g, const TernaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("zero form has no orbit representative");
    std::set<TernaryForm> out;
    for (const Mat3& m : g.elements()) out.insert(normalize_leading(substitute(f, m)));
    return {out.begin(), out.end()};
}

std::vector<TernaryForm> reynolds_invariants(const MatGroup& g, int degree,
                                             size_t linear_bound) {
    const FieldCtxPtr& ctx = g.generators()[0].ctx();
    std::vector<Mat3> lin;
    if (g.policy() == GroupPolicy::linear) {
        lin = g.elements();
    } else {
        // Averaging needs honest matrices, not projective representatives.
        lin = MatGroup(g.generators(), GroupPolicy::linear, linear_bound).elements();
    }
    const auto mons = monomial_basis(degree);
    const size_t n = mons.size();
    Matrix rmat(n, Vec(n, CycNum::zero(ctx)));
    for (const Mat3& m : lin) {
        for (size_t i = 0; i < n; ++i) {
            TernaryForm img =
                substitute(TernaryForm::monomial(ctx, mons[i], CycNum::one(ctx)), m);
            Vec col = form_to_vector(img, degree);
            for (size_t r = 0; r < n; ++r) rmat[r][i] = rmat[r][i] + col[r];
        }
    }
    Rational avg(1, static_cast<unsigned long>(lin.size()));
    CycNum one = CycNum::one(ctx);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) rmat[r][c] = avg * rmat[r][c];
    // Fixed vectors of the averaging projector span the invariants.
    for (size_t i = 0; i < n; ++i) rmat[i][i] = rmat[i][i] - one;
    Matrix ech = span_rref(kernel_basis(rmat, ctx));
    std::vector<TernaryForm> out;
    for (const Vec& row : ech) out.push_back(form_from_vector(ctx, degree, row));
    return out;
}

std::vector<EigenPiece> eigenspace_split(const std::vector<TernaryForm>& space,
                                         const Mat3& m) {
    if (space.empty()) throw std::invalid_argument("empty space");
    const FieldCtxPtr& ctx = space[0].ctx();
    const int degree = space[0].degree();
    const size_t k = space.size();
    for (const TernaryForm& f : space)
        if (f.is_zero() || f.degree() != degree)
            throw std::invalid_argument("space must consist of nonzero forms of one degree");
    const size_t n = monomial_basis(degree).size();
    Matrix bmat(n, Vec(k, CycNum::zero(ctx)));
    for (size_t j = 0; j < k; ++j) {
        Vec col = form_to_vector(space[j], degree);
        for (size_t r = 0; r < n; ++r) bmat[r][j] = col[r];
    }
    if (rank(bmat) != k) throw std::invalid_argument("space basis is linearly dependent");
    Matrix amat(k, Vec(k, CycNum::zero(ctx)));
    for (size_t i = 0; i < k; ++i) {
        Vec img = form_to_vector(substitute(space[i], m), degree);
        auto x = solve(bmat, img, ctx);
        if (!x) throw std::invalid_argument("space is not stable under the substitution");
        for (size_t r = 0; r < k; ++r) amat[r][i] = (*x)[r];
    }

    CycNum delta = det(amat, ctx);
    const unsigned nn = ctx->conductor();
    std::vector<CycNum> candidates;
    for (unsigned t = 0; t < nn; ++t)
        candidates.push_back(CycNum::root_of_unity(ctx, nn, static_cast<int>(t)));
    for (unsigned t = 0; t < nn; ++t) {
        CycNum v = delta * candidates[t];
        bool dup = false;
        for (const CycNum& c : candidates)
            if (c == v) { dup = true; break; }
        if (!dup) candidates.push_back(v);
    }

    std::vector<EigenPiece> out;
    size_t found = 0;
    for (const CycNum& mu : candidates) {
        Matrix shifted = amat;
        for (size_t i = 0; i < k; ++i) shifted[i][i] = shifted[i][i] - mu;
        Matrix ech = span_rref(kernel_basis(shifted, ctx));
        if (ech.empty()) continue;
        EigenPiece piece;
        piece.eigenvalue = mu;
        for (const Vec& row : ech) {
            TernaryForm f(ctx, degree);
            for (size_t j = 0; j < k; ++j) f = f + space[j].scaled(row[j]);
            piece.basis.push_back(f);
        }
        found += piece.basis.size();
        out.push_back(std::move(piece));
        if (found == k) break;
    }
    if (found != k)
        throw std::runtime_error("eigenvalues escape the root-of-unity candidate set");
    return out;
}

Snf2 smith_2col(const std::vector<std::array<long, 2>>& rows) {
    const size_t r = rows.size();
    Snf2 out;
    out.row_ops.assign(r, std::vector<long>(r, 0));
    for (size_t i = 0; i < r; ++i) out.row_ops[i][i] = 1;
    out.col_ops = {{{1, 0}, {0, 1}}};
    out.diag = {0, 0};
    if (r == 0) return out;

    std::vector<std::array<long, 2>> m = rows;
    auto row_sub = [&](size_t i, size_t j, long q) {
        m[i][0] -= q * m[j][0];
        m[i][1] -= q * m[j][1];
        for (size_t t = 0; t < r; ++t) out.row_ops[i][t] -= q * out.row_ops[j][t];
    };
    auto row_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        std::swap(m[i], m[j]);
        std::swap(out.row_ops[i], out.row_ops[j]);
    };
    auto row_neg = [&](size_t i) {
        m[i][0] = -m[i][0];
        m[i][1] = -m[i][1];
        for (size_t t = 0; t < r; ++t) out.row_ops[i][t] = -out.row_ops[i][t];
    };
    auto col_sub = [&](int i, int j, long q) {
        for (size_t t = 0; t < r; ++t) m[t][static_cast<size_t>(i)] -= q * m[t][static_cast<size_t>(j)];
        for (int t = 0; t < 2; ++t)
            out.col_ops[static_cast<size_t>(t)][static_cast<size_t>(i)] -=
                q * out.col_ops[static_cast<size_t>(t)][static_cast<size_t>(j)];
    };
    auto col_swap = [&]() {
        for (size_t t = 0; t < r; ++t) std::swap(m[t][0], m[t][1]);
        std::swap(out.col_ops[0][0], out.col_ops[0][1]);
        std::swap(out.col_ops[1][0], out.col_ops[1][1]);
    };

    for (int guard = 0;; ++guard) {
        if (guard > 256) throw std::logic_error("smith reduction did not converge");
        // Stage 1: gcd of the whole matrix into (0,0), clearing its row and column.
        while (true) {
            size_t bi = r;
            int bj = 0;
            long best = 0;
            for (size_t i = 0; i < r; ++i)
                for (int j = 0; j < 2; ++j) {
                    long v = std::labs(m[i][static_cast<size_t>(j)]);
                    if (v != 0 && (best == 0 || v < best)) {
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
            if (best == 0) break;  // zero matrix
            row_swap(0, bi);
            if (bj == 1) col_swap();
            bool clean = true;
            for (size_t i = 1; i < r; ++i) {
                if (m[i][0] == 0) continue;
                row_sub(i, 0, m[i][0] / m[0][0]);
                if (m[i][0] != 0) clean = false;
            }
            if (m[0][1] != 0) {
                col_sub(1, 0, m[0][1] / m[0][0]);
                if (m[0][1] != 0) clean = false;
            }
            if (clean) break;
        }
        // Stage 2: gcd of the remaining column into (1,1).
        if (r > 1) {
            while (true) {
                size_t bi = r;
                long best = 0;
                for (size_t i = 1; i < r; ++i) {
                    long v = std::labs(m[i][1]);
                    if (v != 0 && (best == 0 || v < best)) {
                        best = v;
                        bi = i;
                    }
                }
                if (best == 0) break;
                row_swap(1, bi);
                bool clean = true;
                for (size_t i = 2; i < r; ++i) {
                    if (m[i][1] == 0) continue;
                    row_sub(i, 1, m[i][1] / m[1][1]);
                    if (m[i][1] != 0) clean = false;
                }
                if (clean) break;
            }
        }
        if (m[0][0] < 0) row_neg(0);
        if (r > 1 && m[1][1] < 0) row_neg(1);
        long d0 = m[0][0];
        long d1 = r > 1 ? m[1][1] : 0;
        if (d0 == 0 || d1 == 0 || d1 % d0 == 0) break;
        col_sub(0, 1, -1);  // reintroduce d1 into column 0 to force divisibility
    }

    out.diag = {m[0][0], r > 1 ? m[1][1] : 0};
    out.rank = (out.diag[0] != 0 ? 1 : 0) + (out.diag[1] != 0 ? 1 : 0);

    // R * input * C must reproduce the diagonal exactly.
    for (size_t i = 0; i < r; ++i) {
        long a = 0, b = 0;
        for (size_t t = 0; t < r; ++t) {
            a += out.row_ops[i][t] * rows[t][0];
            b += out.row_ops[i][t] * rows[t][1];
        }
        long c0 = a * out.col_ops[0][0] + b * out.col_ops[1][0];
        long c1 = a * out.col_ops[0][1] + b * out.col_ops[1][1];
        long w0 = i == 0 ? out.diag[0] : 0;
        long w1 = i == 1 ? out.diag[1] : 0;
        if (c0 != w0 || c1 != w1) throw std::logic_error("smith reduction bookkeeping broke");
    }
    return out;
}

namespace {

struct CharSolve {
    StabKind kind = StabKind::finite;
    std::vector<std::pair<CycNum, CycNum>> solutions;
    long complex_count = 0;
};

// Solve s^{a_i} t^{b_i} = rhs_i over the field's roots of unity.  The rhs
// values must be nonzero.  Solutions over the complex torus always form
// either an empty set, a finite set of size index(lattice), or a
// positive-dimensional family; the finite ones are returned exactly when
// they all live inside mu_n.
CharSolve solve_char_system(const FieldCtxPtr& ctx,
                            const std::vector<std::array<long, 2>>& rows,
                            const std::vector<CycNum>& rhs) {
    CharSolve out;
    const size_t r = rows.size();
    const unsigned n = ctx->conductor();
    Snf2 snf = smith_2col(rows);
    const CycNum one = CycNum::one(ctx);
    // Rows reduced to zero give pure compatibility constraints.
    for (size_t j = static_cast<size_t>(snf.rank); j < r; ++j) {
        CycNum prod = one;
        for (size_t i = 0; i < r; ++i)
            if (snf.row_ops[j][i] != 0) prod = prod * rhs[i].pow(snf.row_ops[j][i]);
        if (!(prod == one)) return out;  // inconsistent: finite, empty
    }
    if (snf.rank < 2) {
        out.kind = StabKind::positive_dimensional;
        return out;
    }
    const long d0 = snf.diag[0], d1 = snf.diag[1];
    out.complex_count = d0 * d1;

    std::vector<CycNum> zeta;
    for (unsigned t = 0; t < n; ++t)
        zeta.push_back(CycNum::root_of_unity(ctx, n, static_cast<int>(t)));

    // In the lattice basis the system reads u_j^{d_j} = A_j.
    std::array<CycNum, 2> a = {one, one};
    std::array<long, 2> target{};
    for (size_t j = 0; j < 2; ++j) {
        for (size_t i = 0; i < r; ++i)
            if (snf.row_ops[j][i] != 0) a[j] = a[j] * rhs[i].pow(snf.row_ops[j][i]);
        bool recognized = false;
        for (unsigned t = 0; t < n; ++t)
            if (a[j] == zeta[t]) {
                target[j] = static_cast<long>(t);
                recognized = true;
                break;
            }
        if (!recognized) {
            out.kind = StabKind::not_representable;
            return out;
        }
    }
    std::array<std::vector<CycNum>, 2> u;
    const std::array<long, 2> d = {d0, d1};
    for (size_t j = 0; j < 2; ++j)
        for (long t = 0; t < static_cast<long>(n); ++t)
            if ((d[j] * t) % static_cast<long>(n) == target[j]) u[j].push_back(zeta[static_cast<size_t>(t)]);
    if (static_cast<long>(u[0].size() * u[1].size()) != out.complex_count) {
        // Some solutions live outside mu_n; refuse to return a partial list.
        out.kind = StabKind::not_representable;
        return out;
    }
    const auto& c = snf.col_ops;
    for (const CycNum& u0 : u[0])
        for (const CycNum& u1 : u[1])
            out.solutions.emplace_back(u0.pow(c[0][0]) * u1.pow(c[0][1]),
                                       u0.pow(c[1][0]) * u1.pow(c[1][1]));
    return out;
}

ExpTriple permute_exponents(const ExpTriple& e, const std::array<int, 3>& perm) {
    // substitute by diag * P sends the monomial with exponents e to the one
    // with exponents q, q[perm[i]] = e[i]
    int q[3];
    for (int i = 0; i < 3; ++i) q[perm[static_cast<size_t>(i)]] = e[i];
    return {q[0], q[1], q[2]};
}

StabResult solve_perm_block(const TernaryForm& f, const std::array<int, 3>& perm) {
    const FieldCtxPtr& ctx = f.ctx();
    StabResult out;
    // The substituted support must match the original one.
    for (const auto& [e, coeff] : f.terms()) {
        (void)coeff;
        if (f.coeff(permute_exponents(e, perm)).is_zero()) return out;  // empty
    }
    std::vector<ExpTriple> supp;
    for (const auto& [e, coeff] : f.terms()) supp.push_back(e);
    // Proportionality of f(DPz) to f with D = diag(1, s, t) reads
    // s^{e1} t^{e2} = kappa * rho_e with rho_e = c_{perm(e)} / c_e.
    auto rho = [&](const ExpTriple& e) {
        return f.coeff(permute_exponents(e, perm)) * f.coeff(e).inverse();
    };
    const ExpTriple base = supp[0];
    const CycNum rho_base_inv = rho(base).inverse();
    std::vector<std::array<long, 2>> rows;
    std::vector<CycNum> rhs;
    for (size_t i = 1; i < supp.size(); ++i) {
        rows.push_back({static_cast<long>(supp[i].e1 - base.e1),
                        static_cast<long>(supp[i].e2 - base.e2)});
        rhs.push_back(rho(supp[i]) * rho_base_inv);
    }
    CharSolve cs = solve_char_system(ctx, rows, rhs);
    out.kind = cs.kind;
    out.complex_count = cs.complex_count;
    if (cs.kind != StabKind::finite) return out;
    const Mat3 p = Mat3::permutation(ctx, perm);
    for (const auto& [s, t] : cs.solutions) {
        Mat3 g = Mat3::diagonal(CycNum::one(ctx), s, t) * p;
        if (!proportional(substitute(f, g), f))
            throw std::logic_error("stabilizer candidate failed the direct recheck");
        out.elements.push_back(g);
    }
    return out;
}

}  // namespace

StabResult diag_stabilizer(const TernaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("zero form");
    return solve_perm_block(f, {0, 1, 2});
}

StabResult monomial_stabilizer(const TernaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("zero form");
    static const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                             {0, 2, 1},
                                                             {1, 0, 2},
                                                             {1, 2, 0},
                                                             {2, 0, 1},
                                                             {2, 1, 0}}};
    StabResult out;
    bool unrepresentable = false;
    for (const auto& perm : perms) {
        StabResult part = solve_perm_block(f, perm);
        if (part.kind == StabKind::positive_dimensional)
            return {StabKind::positive_dimensional, {}, 0};
        if (part.kind == StabKind::not_representable) {
            unrepresentable = true;
            out.complex_count += part.complex_count;
            continue;
        }
        out.complex_count += part.complex_count;
        out.elements.insert(out.elements.end(), part.elements.begin(), part.elements.end());
    }
    if (unrepresentable) return {StabKind::not_representable, {}, out.complex_count};
    std::sort(out.elements.begin(), out.elements.end());
    if (static_cast<long>(out.elements.size()) != out.complex_count)
        throw std::logic_error("stabilizer element count mismatch");
    return out;
}

}  // namespace kleinpencil
