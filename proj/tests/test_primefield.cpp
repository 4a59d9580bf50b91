#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kleinpencil/primefield.hpp"

using namespace kleinpencil;
using fp::Poly;

namespace {

constexpr std::uint64_t P = 337;

Poly rand_poly(std::mt19937& rng, int maxdeg, std::uint64_t p) {
    std::uniform_int_distribution<int> dd(0, maxdeg);
    std::uniform_int_distribution<std::uint64_t> dc(0, p - 1);
    Poly a(static_cast<size_t>(dd(rng)) + 1);
    for (auto& c : a) c = dc(rng);
    return fp::trim(std::move(a));
}

Poly from_roots(const std::vector<std::uint64_t>& rs, std::uint64_t p) {
    Poly a{1};
    for (std::uint64_t r : rs) a = fp::mul(a, Poly{(p - r % p) % p, 1}, p);
    return a;
}

}  // namespace

TEST_CASE("univariate ring basics") {
    Poly one{1}, z{0, 1};
    CHECK(fp::deg(Poly{}) == -1);
    CHECK(fp::is_zero(fp::sub(one, one, P)));
    // (1 + z)(1 - z) = 1 - z^2
    Poly prod = fp::mul(Poly{1, 1}, Poly{1, P - 1}, P);
    CHECK(prod == Poly{1, 0, P - 1});
    CHECK(fp::deg(fp::add(z, fp::sub(one, z, P), P)) == 0);
    CHECK(fp::eval(Poly{5, 3, 1}, 10, P) == (5 + 30 + 100) % P);
    CHECK(fp::is_zero(fp::scale(prod, 0, P)));
}

TEST_CASE("division, gcd, and squarefree part") {
    std::mt19937 rng(20260822);
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = rand_poly(rng, 8, P);
        Poly b = rand_poly(rng, 5, P);
        if (fp::is_zero(b)) continue;
        auto [q, r] = fp::divmod(a, b, P);
        CHECK(fp::add(fp::mul(q, b, P), r, P) == a);
        CHECK(fp::deg(r) < fp::deg(b));
    }
    // gcd of products sharing a factor.
    for (int trial = 0; trial < 50; ++trial) {
        Poly f = rand_poly(rng, 3, P);
        Poly g = rand_poly(rng, 3, P);
        Poly h = rand_poly(rng, 3, P);
        if (fp::is_zero(f) || fp::is_zero(g) || fp::is_zero(h)) continue;
        Poly d = fp::gcd(fp::mul(f, g, P), fp::mul(f, h, P), P);
        CHECK(fp::is_zero(fp::rem(d, fp::monic(f, P), P)));
    }
    // (z-1)^2 (z-2) has squarefree part (z-1)(z-2).
    Poly sq = fp::mul(from_roots({1, 1}, P), from_roots({2}, P), P);
    CHECK(fp::squarefree_part(sq, P) == from_roots({1, 2}, P));
    CHECK(fp::gcd(Poly{}, Poly{}, P) == Poly{});
}

TEST_CASE("interpolation inverts evaluation") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Poly a = rand_poly(rng, 20, P);
        std::vector<std::uint64_t> xs, ys;
        for (std::uint64_t x = 0; x < 21; ++x) {
            xs.push_back(x);
            ys.push_back(fp::eval(a, x, P));
        }
        CHECK(fp::interpolate(xs, ys, P) == a);
    }
}

TEST_CASE("inverse modulo a polynomial") {
    std::mt19937 rng(99);
    Poly t = from_roots({2, 5, 11}, P);
    int done = 0;
    while (done < 30) {
        Poly a = rand_poly(rng, 5, P);
        if (fp::deg(fp::gcd(a, t, P)) != 0) continue;
        Poly prod = fp::rem(fp::mul(a, fp::inv_mod(a, t, P), P), t, P);
        CHECK(prod == Poly{1});
        ++done;
    }
    // Sharing a factor with the modulus is rejected.
    CHECK_THROWS_AS(fp::inv_mod(from_roots({2}, P), t, P), std::invalid_argument);
}

TEST_CASE("Frobenius powers and roots") {
    // 10 generates the multiplicative group mod 337, so z^2 - 10 is irreducible.
    Poly quad{P - 10, 0, 1};
    CHECK(fp::roots(quad, P).empty());
    Poly z{0, 1};
    Poly f1 = fp::pow_mod(z, P, quad, P);
    CHECK(f1 != z);
    CHECK(fp::pow_mod(f1, P, quad, P) == z);  // Frobenius has order 2 on F_{p^2}

    Poly a = fp::mul(from_roots({3, 5}, P), quad, P);
    CHECK(fp::roots(a, P) == std::vector<std::uint64_t>{3, 5});
    // -1 is a square mod 337 (337 = 1 mod 4), so z^2 + 1 splits.
    CHECK(fp::roots(Poly{1, 0, 1}, P).size() == 2);
}

TEST_CASE("distinct-degree factor profile") {
    Poly quad{P - 10, 0, 1};
    Poly a = fp::mul(from_roots({1, 2}, P), quad, P);
    CHECK(fp::factor_degrees(a, P) == std::vector<int>{1, 1, 2});
    CHECK(fp::factor_degrees(quad, P) == std::vector<int>{2});
    CHECK(fp::factor_degrees(Poly{1, 0, 1}, P) == std::vector<int>{1, 1});
    CHECK(fp::factor_degrees(from_roots({4}, P), P) == std::vector<int>{1});
    // Degrees always sum to the degree of the (squarefree) input.
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Poly r = fp::squarefree_part(rand_poly(rng, 12, P), P);
        if (fp::deg(r) < 1) continue;
        int sum = 0;
        for (int d : fp::factor_degrees(r, P)) sum += d;
        CHECK(sum == fp::deg(r));
    }
}

TEST_CASE("determinants over F_p") {
    CHECK(fp::det({{1, 2}, {3, 4}}, P) == P - 2);
    CHECK(fp::det({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, P) == 0);
    CHECK(fp::det({{2}}, P) == 2);
    CHECK_THROWS_AS(fp::det({{1, 2, 3}, {4, 5, 6}}, P), std::invalid_argument);
}

TEST_CASE("resultants of univariate pairs") {
    // Res(x - 3, x - 5) = 3 - 5.
    CHECK(fp::resultant(from_roots({3}, P), from_roots({5}, P), P) == P - 2);
    // Res((x-1)(x-2), x-3) = (1-3)(2-3) = 2.
    CHECK(fp::resultant(from_roots({1, 2}, P), from_roots({3}, P), P) == 2);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Poly a = rand_poly(rng, 4, P);
        Poly b = rand_poly(rng, 4, P);
        if (fp::deg(a) < 1 || fp::deg(b) < 1) continue;
        bool common = fp::deg(fp::gcd(a, b, P)) >= 1;
        CHECK((fp::resultant(a, b, P) == 0) == common);
        // Multiplicativity in the second argument.
        Poly c = rand_poly(rng, 3, P);
        if (fp::deg(c) < 0) continue;
        std::uint64_t lhs = fp::resultant(a, fp::mul(b, c, P), P);
        std::uint64_t rhs = fp::resultant(a, b, P) * fp::resultant(a, c, P) % P;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("first subresultant finds the common root") {
    std::mt19937 rng(13);
    int done = 0;
    while (done < 60) {
        std::uint64_t r = rng() % P;
        Poly u = rand_poly(rng, 3, P);
        Poly v = rand_poly(rng, 3, P);
        if (fp::deg(u) < 1 || fp::deg(v) < 1) continue;
        if (fp::deg(fp::gcd(u, v, P)) != 0) continue;
        if (fp::eval(u, r, P) == 0 || fp::eval(v, r, P) == 0) continue;
        Poly a = fp::mul(u, from_roots({r}, P), P);
        Poly b = fp::mul(v, from_roots({r}, P), P);
        auto [s1, s0] = fp::subresultant1(a, b, P);
        REQUIRE(s1 != 0);  // gcd has degree exactly 1, so the subresultant is nondefective
        CHECK((s1 * r + s0) % P == 0);
        ++done;
    }
    // Degree-2 gcd collapses the first subresultant to zero.
    Poly w = from_roots({4, 9}, P);
    Poly a2 = fp::mul(w, from_roots({1}, P), P);
    Poly b2 = fp::mul(w, from_roots({2}, P), P);
    auto [s1, s0] = fp::subresultant1(a2, b2, P);
    CHECK(s1 == 0);
    CHECK(s0 == 0);
}

namespace {

// Bivariate helper: terms (coeff, y-exp, z-exp).
fp::Bivar bivar(const std::vector<std::array<std::uint64_t, 3>>& terms, std::uint64_t p) {
    fp::Bivar out;
    for (const auto& [c, ye, ze] : terms) {
        if (out.c.size() <= ye) out.c.resize(ye + 1);
        auto& cz = out.c[ye];
        if (cz.size() <= ze) cz.resize(ze + 1, 0);
        cz[ze] = (cz[ze] + c) % p;
    }
    for (auto& cz : out.c) cz = fp::trim(std::move(cz));
    return fp::trim(std::move(out));
}

}  // namespace

TEST_CASE("bivariate evaluation and shearing") {
    // f = y^2 z + 3 y + z^3
    fp::Bivar f = bivar({{1, 2, 1}, {3, 1, 0}, {1, 0, 3}}, P);
    CHECK(f.deg_y() == 2);
    CHECK(f.total_degree() == 3);
    CHECK(fp::eval(f, 2, 5, P) == (4 * 5 + 6 + 125) % P);
    CHECK(fp::eval_at_z(f, 5, P) == Poly{125, 3, 5});

    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint64_t s = rng() % P, y = rng() % P, z = rng() % P;
        fp::Bivar g = fp::shear(f, s, P);
        CHECK(g.total_degree() == f.total_degree());
        // Defining property: (shear f)(y, z) = f(y, z + s y).
        CHECK(fp::eval(g, y, z, P) == fp::eval(f, y, (z + s * y) % P, P));
    }
    // Leading y-coefficient after shearing is the top form at (1, s).
    fp::Bivar g = fp::shear(f, 2, P);
    CHECK(g.deg_y() == 3);
    CHECK(fp::is_constant(g.c[3]));
    CHECK(g.c[3][0] == fp::top_form_at(f, 2, P));
}

TEST_CASE("eliminate_y matches pointwise elimination") {
    // a = (y - 2z)(y - 3z) + z, b = y^2 + y z + 7: generic pair, no common factor.
    fp::Bivar a = bivar({{1, 2, 0}, {P - 5, 1, 1}, {6, 0, 2}, {1, 0, 1}}, P);
    fp::Bivar b = bivar({{1, 2, 0}, {1, 1, 1}, {7, 0, 0}}, P);
    fp::PairElimination elim = fp::eliminate_y(a, b, P);
    CHECK(!fp::is_zero(elim.res));
    // Interpolation is validated at points beyond the sample window.
    for (std::uint64_t t = 200; t < 230; ++t) {
        Poly at = fp::eval_at_z(a, t, P);
        Poly bt = fp::eval_at_z(b, t, P);
        CHECK(fp::eval(elim.res, t, P) == fp::resultant(at, bt, P));
        auto [s1, s0] = fp::subresultant1(at, bt, P);
        CHECK(fp::eval(elim.s1, t, P) == s1);
        CHECK(fp::eval(elim.s0, t, P) == s0);
    }
    // A common factor of positive y-degree kills the resultant identically.
    fp::Bivar common = bivar({{1, 1, 0}, {P - 2, 0, 1}}, P);  // y - 2z
    fp::Bivar ca = bivar({{1, 1, 0}, {1, 0, 0}}, P);          // y + 1
    fp::Bivar cb = bivar({{1, 1, 1}, {5, 0, 0}}, P);          // y z + 5
    auto prod = [&](const fp::Bivar& u, const fp::Bivar& v) {
        fp::Bivar out;
        for (size_t i = 0; i < u.c.size(); ++i)
            for (size_t j = 0; j < v.c.size(); ++j) {
                Poly term = fp::mul(u.c[i], v.c[j], P);
                if (out.c.size() <= i + j) out.c.resize(i + j + 1);
                out.c[i + j] = fp::add(out.c[i + j], term, P);
            }
        return fp::trim(std::move(out));
    };
    fp::Bivar sheared_a = fp::shear(prod(common, ca), 1, P);
    fp::Bivar sheared_b = fp::shear(prod(common, cb), 1, P);
    REQUIRE(fp::is_constant(sheared_a.c[sheared_a.deg_y()]));
    REQUIRE(fp::is_constant(sheared_b.c[sheared_b.deg_y()]));
    CHECK(fp::is_zero(fp::eliminate_y(sheared_a, sheared_b, P).res));
}

TEST_CASE("eval_bivar_mod composes evaluation at algebraic points") {
    fp::Bivar a = bivar({{1, 2, 1}, {3, 1, 2}, {11, 0, 0}}, P);
    Poly t = from_roots({2, 5}, P);
    Poly yofz{4, 7};  // Y(z) = 7z + 4
    Poly composed = fp::eval_bivar_mod(a, yofz, t, P);
    for (std::uint64_t tau : {2ULL, 5ULL}) {
        std::uint64_t y0 = fp::eval(yofz, tau, P);
        CHECK(fp::eval(composed, tau, P) == fp::eval(a, y0, tau, P));
    }
}
