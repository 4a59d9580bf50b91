#include "kleinpencil/primefield.hpp"

#include <algorithm>
#include <stdexcept>

namespace kleinpencil::fp {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;  // p < 2^31, so the product fits in 64 bits
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::invalid_argument("division by zero in F_p");
    return powmod(a, p - 2, p);
}

}  // namespace

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

bool is_zero(const Poly& a) { return a.empty(); }

bool is_constant(const Poly& a) { return a.size() <= 1; }

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = addmod(x, y, p);
    }
    return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = submod(x, y, p);
    }
    return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
    return trim(std::move(r));
}

Poly scale(const Poly& a, std::uint64_t c, std::uint64_t p) {
    c %= p;
    if (c == 0) return {};
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], c, p);
    return trim(std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p) {
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    if (a.size() < b.size()) return {Poly{}, a};
    Poly r = a;
    Poly q(a.size() - b.size() + 1, 0);
    std::uint64_t lcinv = invmod(b.back(), p);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        std::uint64_t c = mulmod(r[i + b.size() - 1], lcinv, p);
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = submod(r[i + j], mulmod(c, b[j], p), p);
    }
    return {trim(std::move(q)), trim(std::move(r))};
}

Poly rem(const Poly& a, const Poly& b, std::uint64_t p) {
    return divmod(a, b, p).second;
}

Poly monic(const Poly& a, std::uint64_t p) {
    if (a.empty()) return a;
    return scale(a, invmod(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

Poly derivative(const Poly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
    return trim(std::move(r));
}

Poly squarefree_part(const Poly& a, std::uint64_t p) {
    if (a.size() <= 1) return a;
    Poly g = gcd(a, derivative(a, p), p);
    return monic(divmod(a, g, p).first, p);
}

std::uint64_t eval(const Poly& a, std::uint64_t x, std::uint64_t p) {
    std::uint64_t r = 0;
    x %= p;
    for (std::size_t i = a.size(); i-- > 0;) r = addmod(mulmod(r, x, p), a[i] % p, p);
    return r;
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    if (deg(m) < 1) throw std::invalid_argument("pow_mod needs a modulus of degree >= 1");
    Poly r{1};
    Poly b = rem(base, m, p);
    while (e > 0) {
        if (e & 1) r = rem(mul(r, b, p), m, p);
        b = rem(mul(b, b, p), m, p);
        e >>= 1;
    }
    return r;
}

Poly inv_mod(const Poly& a, const Poly& t, std::uint64_t p) {
    if (deg(t) < 1) throw std::invalid_argument("inv_mod needs a modulus of degree >= 1");
    // Invariant: s0 * a = r0 and s1 * a = r1, both modulo t.
    Poly r0 = t, r1 = rem(a, t, p);
    Poly s0{}, s1{1};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, p);
        Poly s = sub(s0, mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (deg(r0) != 0) throw std::invalid_argument("inv_mod: argument shares a factor with the modulus");
    return rem(scale(s0, invmod(r0[0], p), p), t, p);
}

Poly interpolate(const std::vector<std::uint64_t>& xs,
                 const std::vector<std::uint64_t>& ys, std::uint64_t p) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolation point mismatch");
    Poly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        // Lagrange basis polynomial for node i, scaled by ys[i].
        Poly li{1};
        std::uint64_t denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li = mul(li, Poly{submod(0, xs[j] % p, p), 1}, p);
            denom = mulmod(denom, submod(xs[i] % p, xs[j] % p, p), p);
        }
        acc = add(acc, scale(li, mulmod(ys[i] % p, invmod(denom, p), p), p), p);
    }
    return acc;
}

std::vector<std::uint64_t> roots(const Poly& a, std::uint64_t p) {
    if (a.empty()) throw std::invalid_argument("root scan of the zero polynomial");
    std::vector<std::uint64_t> r;
    for (std::uint64_t x = 0; x < p; ++x)
        if (eval(a, x, p) == 0) r.push_back(x);
    return r;
}

std::vector<int> factor_degrees(const Poly& a, std::uint64_t p) {
    Poly w = monic(a, p);
    if (deg(w) < 1) return {};
    std::vector<int> out;
    Poly frob = pow_mod(Poly{0, 1}, p, w, p);  // z^p mod w
    Poly cur = frob;
    for (int k = 1; deg(w) >= 1; ++k) {
        if (deg(w) < 2 * k) {
            // What is left is irreducible of degree deg(w).
            out.push_back(deg(w));
            break;
        }
        Poly g = gcd(w, sub(cur, Poly{0, 1}, p), p);
        if (deg(g) >= 1) {
            for (int i = 0; i < deg(g) / k; ++i) out.push_back(k);
            w = divmod(w, g, p).first;
            if (deg(w) < 1) break;
            cur = rem(cur, w, p);
        }
        cur = pow_mod(cur, p, w, p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t det(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    std::size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    std::uint64_t d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] % p == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            d = submod(0, d, p);
        }
        d = mulmod(d, m[col][col] % p, p);
        std::uint64_t inv = invmod(m[col][col], p);
        for (std::size_t r = col + 1; r < n; ++r) {
            std::uint64_t f = mulmod(m[r][col] % p, inv, p);
            if (f == 0) continue;
            for (std::size_t c = col; c < n; ++c)
                m[r][c] = submod(m[r][c] % p, mulmod(f, m[col][c] % p, p), p);
        }
    }
    return d;
}

bool Bivar::is_zero() const {
    for (const auto& ci : c)
        if (!fp::is_zero(ci)) return false;
    return true;
}

int Bivar::deg_y() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (!fp::is_zero(c[i])) return i;
    return -1;
}

int Bivar::total_degree() const {
    int d = -1;
    for (int i = 0; i < static_cast<int>(c.size()); ++i)
        if (!fp::is_zero(c[i])) d = std::max(d, i + deg(c[i]));
    return d;
}

int Bivar::max_coeff_deg() const {
    int d = -1;
    for (const auto& ci : c) d = std::max(d, deg(ci));
    return d;
}

Bivar trim(Bivar a) {
    while (!a.c.empty() && fp::is_zero(a.c.back())) a.c.pop_back();
    return a;
}

std::uint64_t eval(const Bivar& a, std::uint64_t y, std::uint64_t z, std::uint64_t p) {
    std::uint64_t r = 0;
    y %= p;
    for (std::size_t i = a.c.size(); i-- > 0;)
        r = addmod(mulmod(r, y, p), eval(a.c[i], z, p), p);
    return r;
}

Poly eval_at_z(const Bivar& a, std::uint64_t t, std::uint64_t p) {
    Poly r(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = eval(a.c[i], t, p);
    return trim(std::move(r));
}

Bivar shear(const Bivar& a, std::uint64_t s, std::uint64_t p) {
    s %= p;
    int dy = a.deg_y();
    if (dy < 0) return Bivar{};
    int dtot = a.total_degree();
    Bivar out;
    out.c.assign(dtot + 1, Poly{});
    for (int i = 0; i <= dy; ++i) {
        for (int j = 0; j <= deg(a.c[i]); ++j) {
            std::uint64_t coeff = a.c[i][j] % p;
            if (coeff == 0) continue;
            // y^i (z + s y)^j expanded by the binomial theorem.
            std::uint64_t binom = 1, spow = 1;
            for (int t = 0; t <= j; ++t) {
                std::uint64_t term = mulmod(coeff, mulmod(binom, spow, p), p);
                auto& dst = out.c[i + t];
                if (static_cast<int>(dst.size()) < j - t + 1) dst.resize(j - t + 1, 0);
                dst[j - t] = addmod(dst[j - t], term, p);
                binom = mulmod(binom, ((j - t) % p) * invmod(t + 1, p) % p, p);
                spow = mulmod(spow, s, p);
            }
        }
    }
    for (auto& ci : out.c) ci = trim(std::move(ci));
    return trim(std::move(out));
}

std::uint64_t top_form_at(const Bivar& a, std::uint64_t s, std::uint64_t p) {
    int dtot = a.total_degree();
    if (dtot < 0) return 0;
    std::uint64_t r = 0, spow = 1;
    // Sum c[i][dtot - i] * s^{dtot - i} ... evaluated at (y, z) = (1, s):
    // walk z-degree from 0 upward so the power of s tracks the z-exponent.
    for (int zdeg = 0; zdeg <= dtot; ++zdeg) {
        int i = dtot - zdeg;
        if (i < static_cast<int>(a.c.size()) && zdeg <= deg(a.c[i]))
            r = addmod(r, mulmod(a.c[i][zdeg] % p, spow, p), p);
        spow = mulmod(spow, s % p, p);
    }
    return r;
}

Poly eval_bivar_mod(const Bivar& a, const Poly& yofz, const Poly& t, std::uint64_t p) {
    Poly r;
    Poly y = rem(yofz, t, p);
    for (std::size_t i = a.c.size(); i-- > 0;)
        r = rem(add(mul(r, y, p), a.c[i], p), t, p);
    return r;
}

namespace {

// Sylvester-style coefficient row for y^shift * f laid out over the column
// exponents width-1 .. 0 (descending).
std::vector<std::uint64_t> shifted_row(const Poly& f, int shift, int width, std::uint64_t p) {
    std::vector<std::uint64_t> row(width, 0);
    for (int e = 0; e < width; ++e) {
        int idx = e - shift;  // coefficient of y^e in y^shift * f
        if (idx >= 0 && idx <= deg(f)) row[width - 1 - e] = f[idx] % p;
    }
    return row;
}

}  // namespace

std::uint64_t resultant(const Poly& a, const Poly& b, std::uint64_t p) {
    int m = deg(a), n = deg(b);
    if (m < 0 || n < 0) return 0;
    if (m == 0) return powmod(a[0], n, p);
    if (n == 0) return powmod(b[0], m, p);
    int size = m + n;
    std::vector<std::vector<std::uint64_t>> s;
    s.reserve(size);
    for (int i = n - 1; i >= 0; --i) s.push_back(shifted_row(a, i, size, p));
    for (int i = m - 1; i >= 0; --i) s.push_back(shifted_row(b, i, size, p));
    return det(std::move(s), p);
}

std::array<std::uint64_t, 2> subresultant1(const Poly& a, const Poly& b, std::uint64_t p) {
    int m = deg(a), n = deg(b);
    if (m < 1 || n < 1) throw std::invalid_argument("subresultant1 needs positive degrees");
    if (n == 1) return {b[1] % p, b[0] % p};
    if (m == 1) return {a[1] % p, a[0] % p};
    // Rows of y^i a (i = n-2..0) and y^i b (i = m-2..0) over exponents
    // m+n-2 .. 0; the minor keeps the first m+n-3 columns plus the column
    // of y^k, giving the coefficient of y^k in the degree-1 subresultant.
    int width = m + n - 1;
    int rows = m + n - 2;
    std::vector<std::vector<std::uint64_t>> base;
    base.reserve(rows);
    for (int i = n - 2; i >= 0; --i) base.push_back(shifted_row(a, i, width, p));
    for (int i = m - 2; i >= 0; --i) base.push_back(shifted_row(b, i, width, p));
    std::array<std::uint64_t, 2> out{};
    for (int k = 0; k <= 1; ++k) {
        std::vector<std::vector<std::uint64_t>> minor(rows);
        for (int r = 0; r < rows; ++r) {
            minor[r].assign(base[r].begin(), base[r].begin() + (rows - 1));
            minor[r].push_back(base[r][width - 1 - k]);
        }
        out[k] = det(std::move(minor), p);
    }
    return {out[1], out[0]};
}

PairElimination eliminate_y(const Bivar& a, const Bivar& b, std::uint64_t p) {
    int m = a.deg_y(), n = b.deg_y();
    if (m < 1 || n < 1) throw std::invalid_argument("eliminate_y needs positive y-degrees");
    if (!is_constant(a.c[m]) || !is_constant(b.c[n]))
        throw std::logic_error("eliminate_y requires constant leading y-coefficients");
    int entry_deg = std::max(a.max_coeff_deg(), b.max_coeff_deg());
    std::uint64_t samples = static_cast<std::uint64_t>(m + n) * std::max(entry_deg, 0) + 1;
    if (samples > p) throw std::invalid_argument("prime too small for interpolation");
    bool direct_sres = (std::min(m, n) == 1);
    std::vector<std::uint64_t> xs, rs, s1s, s0s;
    for (std::uint64_t t = 0; t < samples; ++t) {
        Poly at = eval_at_z(a, t, p);
        Poly bt = eval_at_z(b, t, p);
        // Constant leading coefficients keep the specialized degrees at
        // (m, n), so the fixed-shape determinants specialize correctly.
        xs.push_back(t);
        rs.push_back(resultant(at, bt, p));
        if (!direct_sres) {
            auto s = subresultant1(at, bt, p);
            s1s.push_back(s[0]);
            s0s.push_back(s[1]);
        }
    }
    PairElimination out;
    out.res = interpolate(xs, rs, p);
    if (direct_sres) {
        const Bivar& lin = (n == 1) ? b : a;
        out.s1 = lin.c[1];
        out.s0 = lin.c[0];
    } else {
        out.s1 = interpolate(xs, s1s, p);
        out.s0 = interpolate(xs, s0s, p);
    }
    return out;
}

}  // namespace kleinpencil::fp
