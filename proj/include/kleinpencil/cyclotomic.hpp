#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_n), elements stored on the
// power basis 1, zeta, ..., zeta^{phi(n)-1} with arbitrary-precision rational
// coefficients, reduced modulo the n-th cyclotomic polynomial.  The default
// conductor used throughout the library is 84 = 4*3*7, the smallest n whose
// roots of unity cover the eigenvalues of every matrix we work with.
//
// No floating point is used anywhere; equality is coefficient-wise equality
// of canonical representatives.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kleinpencil {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when a prime embedding hits a denominator divisible by p or the
// requested prime fails a structural requirement.  Callers retry with the
// next good prime.
struct bad_prime_error : std::runtime_error {
    explicit bad_prime_error(const std::string& what) : std::runtime_error(what) {}
};

// Immutable per-conductor context: cyclotomic polynomial and reduction
// tables.  Shared by every CycNum of that conductor; create once via
// FieldCtx::create and pass around by shared_ptr.  Thread-safe after
// construction.
class FieldCtx {
  public:
    static std::shared_ptr<const FieldCtx> create(unsigned n);

    unsigned conductor() const { return n_; }
    unsigned degree() const { return phi_; }

    // Coefficients of Phi_n, constant term first, length degree()+1, monic.
    const std::vector<Integer>& cyclotomic_coeffs() const { return phi_poly_; }

    // zeta^k on the power basis, k in [0, n).
    const std::vector<Rational>& power(unsigned k) const { return powers_.at(k); }

    // x^k mod Phi_n for k in [degree(), 2*degree()-1), used by multiplication.
    const std::vector<Rational>& reduction_row(unsigned k) const;

  private:
    FieldCtx() = default;
    unsigned n_ = 0;
    unsigned phi_ = 0;
    std::vector<Integer> phi_poly_;
    std::vector<std::vector<Rational>> powers_;
    std::vector<std::vector<Rational>> red_rows_;
};

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

// One element of Q(zeta_n).  Always canonical: coefficient vector of length
// phi(n) on the power basis.  Immutable value type; all operators allocate.
class CycNum {
  public:
    CycNum() = default;
    CycNum(FieldCtxPtr ctx, std::vector<Rational> coeffs);

    static CycNum zero(const FieldCtxPtr& ctx);
    static CycNum one(const FieldCtxPtr& ctx);
    static CycNum from_rational(const FieldCtxPtr& ctx, const Rational& r);
    static CycNum from_int(const FieldCtxPtr& ctx, long v);

    // zeta_n^{(n/order) * power}; requires order | n.
    static CycNum root_of_unity(const FieldCtxPtr& ctx, unsigned order, long power);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Constant coefficient; meaningful as "the value" only when is_rational().
    const Rational& rational_part() const { return c_.at(0); }

    CycNum operator-() const;
    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator/(const CycNum& o) const;
    CycNum operator*(const Rational& r) const;

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    // Multiplicative inverse via the extended Euclidean algorithm against
    // Phi_n; throws std::domain_error on zero.
    CycNum inverse() const;
    CycNum pow(long e) const;

    // Total order compatible with equality (lexicographic on coefficients);
    // used for canonical sorting, no arithmetic meaning.
    int compare(const CycNum& o) const;
    bool operator<(const CycNum& o) const { return compare(o) < 0; }

    std::string to_string() const;

  private:
    FieldCtxPtr ctx_;
    std::vector<Rational> c_;
    void check_ctx(const CycNum& o) const;
};

inline CycNum operator*(const Rational& r, const CycNum& x) { return x * r; }

// Ring homomorphism Q(zeta_n) -> F_p for a prime p = 1 (mod n), sending zeta
// to a fixed element of multiplicative order exactly n.  Deterministic: the
// image is g^((p-1)/n) for the smallest primitive root g mod p.
class PrimeEmbedding {
  public:
    // Throws bad_prime_error if p is not prime or p != 1 mod n.
    static PrimeEmbedding make(const FieldCtxPtr& ctx, std::uint64_t p);

    std::uint64_t prime() const { return p_; }
    std::uint64_t zeta_image() const { return zeta_; }
    const FieldCtxPtr& ctx() const { return ctx_; }

    // Throws bad_prime_error when some denominator is divisible by p.
    std::uint64_t reduce(const CycNum& x) const;
    std::uint64_t reduce_rational(const Rational& r) const;

  private:
    FieldCtxPtr ctx_;
    std::uint64_t p_ = 0;
    std::uint64_t zeta_ = 0;
    std::vector<std::uint64_t> zeta_pow_;
};

// Smallest prime p > after with p = 1 (mod n).
std::uint64_t next_good_prime(unsigned n, std::uint64_t after);

bool is_prime_u64(std::uint64_t v);

// Modular helpers (p < 2^31 assumed by callers; products via 128-bit).
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

}  // namespace kleinpencil
