#include "linepin/errors.hpp"
#include "linepin/linespace.hpp"
#include "support/ref.hpp"

#include <gtest/gtest.h>

using namespace linepin;

TEST(Linespace, SideDetMatchesLeibniz) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int it = 0; it < 300; ++it) {
        OrientedLine a{{Rat(c(rng)), Rat(c(rng)), Rat(c(rng))}, {Rat(c(rng)), Rat(c(rng)), Rat(c(rng))}};
        OrientedLine b{{Rat(c(rng)), Rat(c(rng)), Rat(c(rng))}, {Rat(c(rng)), Rat(c(rng)), Rat(c(rng))}};
        EXPECT_EQ(side_det(a, b), ref::side_det(a, b));
    }
}

TEST(Linespace, PassesRightSign) {
    OrientedLine x{{0, 0, 0}, {1, 0, 0}};
    OrientedLine above{{0, 0, 1}, {0, 1, 0}};
    OrientedLine below{{0, 0, -1}, {0, 1, 0}};
    EXPECT_EQ(passes_right(x, above), Sidedness::Left);
    EXPECT_EQ(passes_right(x, below), Sidedness::Right);
    EXPECT_EQ(passes_right(x, {{3, 0, 0}, {0, 1, 5}}), Sidedness::MeetsOrParallel);
    EXPECT_EQ(passes_right(x, {{0, 2, 0}, {2, 0, 0}}), Sidedness::MeetsOrParallel);
}

TEST(Linespace, HalfspaceAgreesWithReference) {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        Constraint g = ref::random_constraint(rng);
        EXPECT_EQ(halfspace_of(g), ref::halfspace(g));
    }
}

TEST(Linespace, ZetaIsLinearInLift) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int it = 0; it < 200; ++it) {
        Constraint g = ref::random_constraint(rng);
        LineCoords u{Rat(c(rng), 3), Rat(c(rng)), Rat(c(rng), 2), Rat(c(rng))};
        EXPECT_EQ(eval_zeta(g, u), dot(halfspace_of(g), lift(u)));
        EXPECT_EQ(satisfies(g, u), ref::satisfies(g, u));
    }
}

TEST(Linespace, SidednessFormOfConstraintLine) {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 100; ++it) {
        Constraint g = ref::random_constraint(rng);
        EXPECT_TRUE(positively_parallel(sidedness_form(g.line()), halfspace_of(g)));
    }
    OrientedLine skew{{1, 0, 0}, {0, 1, 0}};
    EXPECT_THROW(sidedness_form(skew), PreconditionError);
}

TEST(Linespace, MakeConstraintRejectsVertical) {
    EXPECT_THROW(make_constraint(0, {0, 0, 1}), DegenerateDirection);
    Constraint g = make_constraint(Rat(1, 2), {2, 4, 6});
    EXPECT_EQ(g.dir, (Vec3{1, 2, 3}));
}

TEST(Linespace, ReferenceLineSatisfiesEverything) {
    std::mt19937_64 rng(14);
    for (int it = 0; it < 50; ++it) EXPECT_TRUE(satisfies(ref::random_constraint(rng), {0, 0, 0, 0}));
}

TEST(Linespace, Orthogonalize) {
    Constraint g = make_constraint(2, {1, -1, 5});
    Constraint p = orthogonalize(g);
    EXPECT_TRUE(is_orthogonal(p));
    EXPECT_FALSE(is_orthogonal(g));
    EXPECT_EQ(p.lambda, 2);
    EXPECT_EQ(p.dir, (Vec3{1, -1, 0}));
    // first four coefficients survive
    Vec a = halfspace_of(g), b = halfspace_of(p);
    EXPECT_EQ(b[4], 0);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(a[i], b[i]);
    auto F = orthogonalize_family({g, make_constraint(2, {1, -1, -3})});
    EXPECT_EQ(F.size(), 1u);
}

TEST(Linespace, DegeneratePairs) {
    Constraint a = make_constraint(1, {1, 2, 0}), b = make_constraint(1, {-1, -2, 3}),
               c = make_constraint(2, {1, 2, 0}), d = make_constraint(1, {2, 1, 0});
    EXPECT_TRUE(coplanar(a, b) && concurrent(a, b) && degenerate_pair(a, b));
    EXPECT_TRUE(coplanar(a, c));
    EXPECT_FALSE(concurrent(a, c));
    EXPECT_FALSE(degenerate_pair(a, c));
    EXPECT_TRUE(concurrent(a, d));
    EXPECT_FALSE(degenerate_pair(a, d));
    EXPECT_TRUE(has_degenerate_pair({c, d, a, b}));
    EXPECT_FALSE(has_degenerate_pair({a, c, d}));
}

TEST(Linespace, PluckerMatchesReference) {
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<int> c(-9, 9);
    for (int it = 0; it < 100; ++it) {
        LineCoords u{Rat(c(rng)), Rat(c(rng), 7), Rat(c(rng)), Rat(c(rng))};
        auto x = to_plucker(u);
        auto y = ref::plucker(u);
        EXPECT_TRUE(parallel(Vec(x.begin(), x.end()), Vec(y.begin(), y.end())));
        EXPECT_EQ(x[0] * x[3] + x[1] * x[4] + x[2] * x[5], 0);
    }
    EXPECT_TRUE(meets_l0({1, 1, 2, 2}) == (qform(LineCoords{1, 1, 2, 2}) == 0));
    EXPECT_FALSE(meets_l0({1, 0, 1, 1}));
}
