#include "kleinpencil/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace kleinpencil {

namespace {

// Dense integer polynomials, constant term first.
using ZPoly = std::vector<Integer>;

int zdeg(const ZPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    ZPoly out(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Exact division of integer polynomials; the quotient is known to be integral
// for the cyclotomic products used here.  Divisor must be monic-up-to-sign at
// its leading coefficient (+-1).
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
    int dn = zdeg(num), dd = zdeg(den);
    if (dd < 0) throw std::invalid_argument("division by zero polynomial");
    ZPoly q(static_cast<size_t>(std::max(dn - dd + 1, 1)), Integer(0));
    const Integer& lead = den[static_cast<size_t>(dd)];
    while (dn >= dd) {
        Integer c = num[static_cast<size_t>(dn)] / lead;
        q[static_cast<size_t>(dn - dd)] = c;
        for (int i = 0; i <= dd; ++i)
            num[static_cast<size_t>(dn - dd + i)] -= c * den[static_cast<size_t>(i)];
        dn = zdeg(num);
    }
    if (dn >= 0) throw std::logic_error("inexact polynomial division");
    return q;
}

int mobius(unsigned m) {
    int mu = 1;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            mu = -mu;
        }
    }
    if (m > 1) mu = -mu;
    return mu;
}

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// x^d - 1.
ZPoly xd_minus_1(unsigned d) {
    ZPoly p(d + 1, Integer(0));
    p[0] = -1;
    p[d] = 1;
    return p;
}

// Phi_n via the Moebius formula: product over d|n of (x^d-1)^{mu(n/d)}.
ZPoly cyclotomic(unsigned n) {
    ZPoly num{Integer(1)};
    ZPoly den{Integer(1)};
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = mobius(n / d);
        if (mu == 1) num = zmul(num, xd_minus_1(d));
        else if (mu == -1) den = zmul(den, xd_minus_1(d));
    }
    return zdiv_exact(num, den);
}

// Rational dense polynomials for the inverse computation.
using QPoly = std::vector<Rational>;

int qdeg(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

QPoly qsub_scaled(QPoly a, const QPoly& b, const Rational& c, size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    return a;
}

// Remainder and quotient of a by b over Q.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    int db = qdeg(b);
    if (db < 0) throw std::invalid_argument("division by zero polynomial");
    QPoly q(static_cast<size_t>(std::max(qdeg(a) - db + 1, 1)), Rational(0));
    while (qdeg(a) >= db) {
        int da = qdeg(a);
        Rational c = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
        q[static_cast<size_t>(da - db)] = c;
        a = qsub_scaled(std::move(a), b, c, static_cast<size_t>(da - db));
    }
    return {q, a};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (qdeg(a) < 0 || qdeg(b) < 0) return {Rational(0)};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

}  // namespace

std::shared_ptr<const FieldCtx> FieldCtx::create(unsigned n) {
    if (n == 0) throw std::invalid_argument("conductor must be positive");
    struct Access : FieldCtx {};
    auto ctx = std::make_shared<Access>();
    ctx->n_ = n;
    ctx->phi_ = euler_phi(n);
    ctx->phi_poly_ = cyclotomic(n);
    if (zdeg(ctx->phi_poly_) != static_cast<int>(ctx->phi_)) throw std::logic_error("cyclotomic degree mismatch");

    const unsigned phi = ctx->phi_;
    // x^k mod Phi_n for all k < max(2*phi-1, n): rows beyond phi-1 are built
    // incrementally from x * (previous row).
    unsigned rows = std::max(2 * phi >= 1 ? 2 * phi - 1 : 1, n);
    std::vector<std::vector<Rational>> table;
    table.reserve(rows);
    for (unsigned k = 0; k < rows; ++k) {
        std::vector<Rational> row(phi, Rational(0));
        if (k < phi) {
            row[k] = 1;
        } else {
            const auto& prev = table[k - 1];
            // multiply by x, fold the overflow of x^phi via Phi (monic).
            Rational top = prev[phi - 1];
            for (unsigned j = phi - 1; j >= 1; --j) row[j] = prev[j - 1];
            row[0] = 0;
            if (top != 0) {
                for (unsigned j = 0; j < phi; ++j)
                    row[j] -= top * Rational(ctx->phi_poly_[j]);
            }
        }
        table.push_back(std::move(row));
    }
    ctx->powers_.assign(table.begin(), table.begin() + n);
    if (2 * phi >= 2)
        ctx->red_rows_.assign(table.begin() + phi, table.begin() + (2 * phi - 1));
    return ctx;
}

const std::vector<Rational>& FieldCtx::reduction_row(unsigned k) const {
    if (k < phi_ || k >= 2 * phi_ - 1) throw std::out_of_range("reduction row index");
    return red_rows_[k - phi_];
}

CycNum::CycNum(FieldCtxPtr ctx, std::vector<Rational> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (!ctx_) throw std::invalid_argument("null field context");
    if (c_.size() != ctx_->degree()) throw std::invalid_argument("coefficient vector length mismatch");
    for (auto& q : c_) q.canonicalize();
}

void CycNum::check_ctx(const CycNum& o) const {
    if (!ctx_ || !o.ctx_) throw std::invalid_argument("uninitialized cyclotomic number");
    if (ctx_->conductor() != o.ctx_->conductor()) throw std::invalid_argument("conductor mismatch between operands");
}

CycNum CycNum::zero(const FieldCtxPtr& ctx) {
    return CycNum(ctx, std::vector<Rational>(ctx->degree(), Rational(0)));
}

CycNum CycNum::one(const FieldCtxPtr& ctx) { return from_int(ctx, 1); }

CycNum CycNum::from_rational(const FieldCtxPtr& ctx, const Rational& r) {
    std::vector<Rational> c(ctx->degree(), Rational(0));
    c[0] = r;
    return CycNum(ctx, std::move(c));
}

CycNum CycNum::from_int(const FieldCtxPtr& ctx, long v) { return from_rational(ctx, Rational(v)); }

CycNum CycNum::root_of_unity(const FieldCtxPtr& ctx, unsigned order, long power) {
    if (order == 0 || ctx->conductor() % order != 0)
        throw std::invalid_argument("root order must divide the conductor");
    long n = static_cast<long>(ctx->conductor());
    long step = n / static_cast<long>(order);
    long k = ((step * power) % n + n) % n;
    return CycNum(ctx, ctx->power(static_cast<unsigned>(k)));
}

bool CycNum::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

CycNum CycNum::operator-() const {
    auto c = c_;
    for (auto& q : c) q = -q;
    return CycNum(ctx_, std::move(c));
}

CycNum CycNum::operator+(const CycNum& o) const {
    check_ctx(o);
    auto c = c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return CycNum(ctx_, std::move(c));
}

CycNum CycNum::operator-(const CycNum& o) const {
    check_ctx(o);
    auto c = c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return CycNum(ctx_, std::move(c));
}

CycNum CycNum::operator*(const CycNum& o) const {
    check_ctx(o);
    const unsigned phi = ctx_->degree();
    std::vector<Rational> conv(2 * phi - 1, Rational(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rational> out(conv.begin(), conv.begin() + phi);
    for (unsigned k = phi; k < 2 * phi - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& row = ctx_->reduction_row(k);
        for (unsigned j = 0; j < phi; ++j)
            if (row[j] != 0) out[j] += conv[k] * row[j];
    }
    return CycNum(ctx_, std::move(out));
}

CycNum CycNum::operator*(const Rational& r) const {
    auto c = c_;
    for (auto& q : c) q *= r;
    return CycNum(ctx_, std::move(c));
}

CycNum CycNum::operator/(const CycNum& o) const { return *this * o.inverse(); }

bool CycNum::operator==(const CycNum& o) const {
    check_ctx(o);
    return c_ == o.c_;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    const unsigned phi = ctx_->degree();
    // Extended Euclid over Q[x] for gcd(a, Phi_n) = 1 = s*a + t*Phi_n.
    QPoly r0(ctx_->cyclotomic_coeffs().begin(), ctx_->cyclotomic_coeffs().end());
    QPoly r1(c_.begin(), c_.end());
    QPoly s0{Rational(0)}, s1{Rational(1)};
    while (qdeg(r1) > 0) {
        auto [q, r] = qdivmod(r0, r1);
        QPoly s = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (qdeg(r1) != 0) throw std::logic_error("cyclotomic polynomial not coprime to nonzero element");
    Rational lead = r1[0];
    std::vector<Rational> out(phi, Rational(0));
    for (size_t i = 0; i < s1.size() && i < phi; ++i) out[i] = s1[i] / lead;
    // s1 has degree < phi because deg(a) < phi and the remainder sequence
    // keeps deg(s_k) + deg(r_{k-1}) <= deg(Phi).
    if (qdeg(s1) >= static_cast<int>(phi)) throw std::logic_error("inverse degree overflow");
    return CycNum(ctx_, std::move(out));
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum acc = one(ctx_);
    CycNum base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
        if (u & 1) acc = acc * base;
        base = base * base;
        u >>= 1;
    }
    return acc;
}

int CycNum::compare(const CycNum& o) const {
    check_ctx(o);
    for (size_t i = 0; i < c_.size(); ++i) {
        int c = cmp(c_[i], o.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational q = c_[i];
        if (!first) {
            os << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        } else if (q < 0) {
            os << "-";
            q = -q;
        }
        if (i == 0) {
            os << q;
        } else {
            if (q != 1) os << q << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    unsigned __int128 acc = 1, base = b % p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("modular inverse of zero");
    return mod_pow(a % p, p - 2, p);
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

}  // namespace

PrimeEmbedding PrimeEmbedding::make(const FieldCtxPtr& ctx, std::uint64_t p) {
    if (!is_prime_u64(p)) throw bad_prime_error("not a prime: " + std::to_string(p));
    unsigned n = ctx->conductor();
    if (p % n != 1) throw bad_prime_error("prime " + std::to_string(p) + " is not 1 mod " + std::to_string(n));
    auto factors = prime_factors(p - 1);
    std::uint64_t g = 0;
    for (std::uint64_t c = 2; c < p; ++c) {
        bool ok = true;
        for (auto q : factors)
            if (mod_pow(c, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) { g = c; break; }
    }
    if (g == 0) throw bad_prime_error("no primitive root found");
    std::uint64_t zeta = mod_pow(g, (p - 1) / n, p);
    for (auto q : prime_factors(n))
        if (mod_pow(zeta, n / q, p) == 1) throw bad_prime_error("zeta image has too small an order");
    PrimeEmbedding emb;
    emb.ctx_ = ctx;
    emb.p_ = p;
    emb.zeta_ = zeta;
    emb.zeta_pow_.resize(ctx->degree());
    std::uint64_t acc = 1;
    for (unsigned k = 0; k < ctx->degree(); ++k) {
        emb.zeta_pow_[k] = acc;
        acc = static_cast<std::uint64_t>(static_cast<unsigned __int128>(acc) * zeta % p);
    }
    return emb;
}

std::uint64_t PrimeEmbedding::reduce_rational(const Rational& r) const {
    Integer num = r.get_num(), den = r.get_den();
    Integer pz(static_cast<unsigned long>(p_));
    Integer dmod = den % pz;
    if (dmod == 0) throw bad_prime_error("denominator divisible by " + std::to_string(p_));
    Integer nmod = num % pz;
    if (nmod < 0) nmod += pz;
    std::uint64_t nv = nmod.get_ui();
    std::uint64_t dv = Integer(dmod < 0 ? dmod + pz : dmod).get_ui();
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(nv) * mod_inv(dv, p_) % p_);
}

std::uint64_t PrimeEmbedding::reduce(const CycNum& x) const {
    if (x.ctx()->conductor() != ctx_->conductor()) throw std::invalid_argument("conductor mismatch");
    unsigned __int128 acc = 0;
    const auto& c = x.coeffs();
    for (unsigned k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        acc += static_cast<unsigned __int128>(reduce_rational(c[k])) * zeta_pow_[k] % p_;
    }
    return static_cast<std::uint64_t>(acc % p_);
}

std::uint64_t next_good_prime(unsigned n, std::uint64_t after) {
    std::uint64_t p = after + 1;
    if (p <= n) p = n + 1;
    while (p % n != 1) ++p;
    while (!is_prime_u64(p)) p += n;
    return p;
}

}  // namespace kleinpencil
