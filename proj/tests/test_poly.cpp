#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <cmath>

#include "parse.hpp"
#include "tower.hpp"
#include "upoly.hpp"

using namespace stubborn;

TEST_CASE("field arithmetic over nested radicals") {
    FieldElem r2 = sqrt_field(FieldElem(Q(2)));
    CHECK(r2.height() == 1);
    CHECK((r2 * r2).is_rational());
    CHECK((r2 * r2).rat() == 2);
    CHECK(r2.sign() == 1);
    CHECK((-r2).sign() == -1);

    // nested: sqrt(936*sqrt(2)+1337)
    FieldElem rad = r2.pow(1) * FieldElem(Q(936)) + FieldElem(Q(1337));
    FieldElem g = sqrt_field(rad);
    CHECK(g.height() == 2);
    CHECK(g * g == rad);
    FieldElem inv = g.inv();
    CHECK(g * inv == FieldElem(Q(1)));

    // mixed-tower arithmetic reduces to the common tower
    FieldElem sum = r2 + g;
    CHECK(sum - g == r2);
    CHECK((sum * sum - (r2 * r2 + g * g + r2 * g * FieldElem(Q(2)))).is_zero());
}

TEST_CASE("perfect squares collapse instead of extending the tower") {
    FieldElem four = sqrt_field(FieldElem(Q(4)));
    CHECK(four.is_rational());
    CHECK(four.rat() == 2);
    FieldElem r = sqrt_field(FieldElem(Q(9, 4)));
    CHECK(r.rat() == Q(3, 2));

    // (1+sqrt(2))^2 = 3+2 sqrt(2) is a square in Q(sqrt 2)
    FieldElem r2 = sqrt_field(FieldElem(Q(2)));
    FieldElem sq = (FieldElem(Q(1)) + r2) * (FieldElem(Q(1)) + r2);
    FieldElem back = sqrt_field(sq);
    CHECK(back.height() == 1);
    CHECK(back == FieldElem(Q(1)) + r2);
}

TEST_CASE("sign certification agrees with high-precision intervals") {
    FieldElem r2 = sqrt_field(FieldElem(Q(2)));
    FieldElem r3 = sqrt_field(FieldElem(Q(3)));
    // sqrt(2)+sqrt(3) vs sqrt(5+2 sqrt(6)): equal, so the difference is 0
    FieldElem s = r2 + r3;
    FieldElem t = sqrt_field(FieldElem(Q(5)) + sqrt_field(FieldElem(Q(24))));
    CHECK((s - t).is_zero());
    CHECK((s - t).sign() == 0);
    // tiny but nonzero, signs from Pell convergents: 239/169 < sqrt2 < 577/408
    CHECK((r2 - FieldElem(Q(239, 169))).sign() == 1);
    CHECK((r2 - FieldElem(Q(577, 408))).sign() == -1);

    SplitMix64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        Q a(rng.range(-50, 50)), b(rng.range(-50, 50)), c(rng.range(-50, 50));
        FieldElem e = FieldElem(a) + r2 * FieldElem(b) + r3 * FieldElem(c);
        QInterval iv = e.enclosure(340); // ~100 digits
        int s1 = e.sign();
        if (iv.sign_known()) CHECK(s1 == iv.sign());
        else CHECK(s1 == 0);
    }
}

TEST_CASE("negative radicand is rejected") {
    CHECK_THROWS_AS(sqrt_field(FieldElem(Q(-2))), Error);
}

TEST_CASE("parse_poly: Stengle sextic expands canonically") {
    auto S = parse_poly("x^3*z^3+(y^2*z-x^3-z^2*x)^2", {"x", "y", "z"});
    CHECK(S.nvars == 3);
    CHECK(S.total_degree() == 6);
    CHECK(S.is_homogeneous());
    // expansion: x^6 + 2x^4z^2 - 2x^3y^2z + x^3z^3 + x^2z^4 - 2xy^2z^3 + y^4z^2
    auto expect = parse_poly(
        "x^6 + 2*x^4*z^2 - 2*x^3*y^2*z + x^3*z^3 + x^2*z^4 - 2*x*y^2*z^3 + y^4*z^2",
        {"x", "y", "z"});
    CHECK(S == expect);
    CHECK(S.terms.size() == 7);
}

TEST_CASE("parse_poly: zero and errors") {
    auto z = parse_poly("0", {"x"});
    CHECK(z.is_zero());
    CHECK(z.total_degree() == -1);

    CHECK_THROWS_AS(parse_poly("x^3 + ", {"x"}), Error);
    CHECK_THROWS_AS(parse_poly("y", {"x"}), Error);
    CHECK_THROWS_AS(parse_poly("sqrt(0-2)", {"x"}), Error);
    try {
        parse_poly("x + q", {"x"});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == ErrCode::syntax_error);
        CHECK(e.offset == 4);
    }
}

TEST_CASE("parse_poly over a 2-level tower evaluates correctly") {
    auto p = parse_poly("sqrt(2)*x + sqrt(936*sqrt(2)+1337)*y", {"x", "y"});
    FieldElem v = p.eval({FieldElem(Q(1)), FieldElem(Q(1))});
    // oracle: high-precision interval evaluation of sqrt(2)+sqrt(936 sqrt 2+1337)
    QInterval iv = v.enclosure(200);
    CHECK(iv.width() < Q(1, Z(1) << 64));
    // frozen from the interval oracle below (plain double cross-check)
    double d = v.to_double();
    CHECK(d == doctest::Approx(std::sqrt(2.0) + std::sqrt(936.0 * std::sqrt(2.0) + 1337.0))
                   .epsilon(1e-12));
}

TEST_CASE("print/parse round trip is the identity on canonical forms") {
    std::vector<std::string> vars{"x", "y", "z"};
    SplitMix64 rng(3);
    for (int it = 0; it < 40; ++it) {
        MPoly p(3);
        for (int t = 0; t < 6; ++t) {
            Mono m{unsigned(rng.range(0, 3)), unsigned(rng.range(0, 3)), unsigned(rng.range(0, 3))};
            p.add_term(m, FieldElem(q_of(rng.range(-9, 9), rng.range(1, 5))));
        }
        auto s = print_poly(p, vars);
        auto q = parse_poly(s, vars);
        CHECK(p == q);
        CHECK(print_poly(q, vars) == s);
    }
    // with tower coefficients
    auto p = parse_poly("(12*sqrt(2)+5*sqrt(936*sqrt(2)+1337)+25)*x^4 - 3/4*y*z^3", {"x","y","z"});
    auto s = print_poly(p, {"x","y","z"});
    CHECK(parse_poly(s, {"x","y","z"}) == p);
}

TEST_CASE("upoly: sturm counting and root profile") {
    // (t^2-2)(t^2+1): two simple real roots, nonreal multiplicity 2
    UPoly f = UPoly::from_q({-2, 0, -1, 0, 1}); // t^4 - t^2 - 2
    RootProfile rp = root_profile(f);
    CHECK(rp.degree == 4);
    REQUIRE(rp.real_roots.size() == 2);
    CHECK(rp.real_roots[0].multiplicity == 1);
    CHECK(rp.real_roots[1].multiplicity == 1);
    CHECK(rp.nonreal_multiplicity == 2);
    // roots are +-sqrt(2)
    auto& r1 = rp.real_roots[1];
    CHECK(r1.iv.lo < Q(15, 10));
    CHECK(r1.iv.hi > Q(14, 10));

    // (5y^2-17)^2: two double roots
    UPoly g = UPoly::from_q({289, 0, -170, 0, 25});
    RootProfile gp = root_profile(g);
    REQUIRE(gp.real_roots.size() == 2);
    CHECK(gp.real_roots[0].multiplicity == 2);
    CHECK(gp.real_roots[1].multiplicity == 2);
    CHECK(gp.real_count_with_mult() == 4);
    CHECK(gp.nonreal_multiplicity == 0);

    // b_{5,2} = 1+5t+10t^2 has no real roots
    UPoly b = UPoly::from_q({1, 5, 10});
    CHECK(root_profile(b).real_roots.empty());
    CHECK(!all_roots_real(b));
    CHECK(all_roots_real(UPoly::from_q({0, -1, 0, 1}))); // t^3 - t
    CHECK(!all_roots_real(UPoly::from_q({1, 0, 1})));    // t^2 + 1
}

TEST_CASE("upoly: descartes bound examples") {
    CHECK(sign_variations({FieldElem(Q(1)), FieldElem(Q(-2)), FieldElem(Q(3))}) == 2);
    // (t-1)^3 = -1 + 3t - 3t^2 + t^3
    UPoly f = UPoly::from_q({-1, 3, -3, 1});
    CHECK(descartes_bound(f) == 3);
    CHECK(real_root_count_with_mult(f) == 3); // oracle: root_profile path
    RootProfile rp = root_profile(f);
    REQUIRE(rp.real_roots.size() == 1);
    CHECK(rp.real_roots[0].multiplicity == 3);
}

TEST_CASE("descartes bound dominates positive-root count with equal parity") {
    SplitMix64 rng(11);
    for (int it = 0; it < 200; ++it) {
        // random product of linear and quadratic factors with known roots
        UPoly f = UPoly::from_q({1});
        int pos = 0;
        for (int k = 0; k < 4; ++k) {
            long r = rng.range(-6, 6);
            if (rng.range(0, 1)) {
                f = f * UPoly::from_q({-r, 1});
                if (r > 0) ++pos;
            } else {
                // irreducible quadratic t^2 + a t + b with disc < 0
                long a = rng.range(-4, 4);
                long b = (a * a) / 4 + rng.range(1, 5);
                f = f * UPoly::from_q({b, a, 1});
            }
        }
        int db = descartes_bound(f);
        CHECK(db >= pos);
        CHECK((db - pos) % 2 == 0);
    }
}

TEST_CASE("sturm count matches constructed factorizations on fuzz") {
    SplitMix64 rng(23);
    for (int it = 0; it < 500; ++it) {
        UPoly f = UPoly::from_q({1});
        int expect = 0;
        std::vector<long> roots;
        for (int k = 0, n = 1 + int(rng.range(0, 3)); k < n; ++k) {
            long r = rng.range(-5, 5);
            int mult = 1 + int(rng.range(0, 2));
            bool fresh = true;
            for (long rr : roots) if (rr == r) fresh = false;
            if (fresh) { roots.push_back(r); expect += mult; }
            else expect += mult; // multiplicities of equal roots accumulate
            for (int j = 0; j < mult; ++j) f = f * UPoly::from_q({-r, 1});
        }
        CHECK(real_root_count_with_mult(f) == expect);
    }
}

TEST_CASE("sturm over a tower counts sqrt(2) roots") {
    FieldElem r2 = sqrt_field(FieldElem(Q(2)));
    // (t - sqrt2)(t + 1) over the tower
    UPoly f(std::vector<FieldElem>{-r2, FieldElem(Q(1)) - r2, FieldElem(Q(1))});
    SturmChain ch = sturm_chain(f);
    CHECK(ch.count_all() == 2);
    CHECK(ch.count(Q(1), Q(2)) == 1);
    CHECK(ch.count(Q(-2), Q(0)) == 1);
}
