#include "linepin/classify.hpp"
#include "linepin/errors.hpp"
#include "linepin/generators.hpp"
#include "linepin/oracle.hpp"
#include "support/ref.hpp"

#include <gtest/gtest.h>

using namespace linepin;

namespace {

Mat normals(const std::vector<Constraint>& F) {
    Mat X;
    for (auto& g : F) {
        Vec a = ref::halfspace(g);
        a.pop_back();
        X.push_back(a);
    }
    return X;
}

} // namespace

TEST(Classify, FourSegments) {
    Mat X;
    for (int i = 0; i < 4; ++i)
        for (int s : {1, -1}) {
            Vec e(4);
            e[i] = s;
            X.push_back(e);
        }
    auto c = decompose_surrounding(X);
    EXPECT_EQ(c.kind, SurroundingKind::FourSegments);
    EXPECT_EQ(c.simplices.size(), 4u);
    for (auto& s : c.simplices) {
        Mat Y;
        for (auto i : s) Y.push_back(X[i]);
        EXPECT_TRUE(ref::critical_simplex(Y));
    }
}

TEST(Classify, SimplexAndNonMinimal) {
    Mat X{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}};
    EXPECT_EQ(decompose_surrounding(X).kind, SurroundingKind::Simplex4);
    X.push_back({-1, 0, 0, 0});
    EXPECT_THROW(decompose_surrounding(X), NotMinimallySurrounding);
}

TEST(Classify, CriticalSimplex) {
    EXPECT_TRUE(is_critical_simplex({{1, 0}, {-1, 0}}));
    EXPECT_FALSE(is_critical_simplex({{1, 0}, {-1, 0}, {0, 1}}));
    EXPECT_FALSE(is_critical_simplex({{1, 0}, {-2, 0}, {3, 0}}));
    auto s = find_critical_simplex({{1, 1}, {0, 1}, {-1, -1}});
    Mat Y;
    for (auto i : s) Y.push_back(Mat{{1, 1}, {0, 1}, {-1, -1}}[i]);
    EXPECT_TRUE(ref::critical_simplex(Y));
    EXPECT_THROW(find_critical_simplex({{1, 0}, {0, 1}}), NotContainingOrigin);
}

TEST(Classify, LabelsRoundTrip) {
    auto labels = supported_char_ortho();
    EXPECT_EQ(labels.size(), 16u);
    for (auto L : labels) {
        auto f = gen_char_ortho(L);
        ASSERT_TRUE(f.label.has_value());
        EXPECT_EQ(*f.label, L);
        auto c = classify_ortho_pinning(f.constraints);
        EXPECT_EQ(c.label, L) << to_string(L);
        // every block is a critical simplex and the blocks cover the family
        std::vector<bool> seen(f.constraints.size());
        Mat X = normals(f.constraints);
        for (auto& b : c.blocks) {
            Mat Y;
            for (auto i : b.members) {
                Y.push_back(X[i]);
                seen[i] = true;
            }
            EXPECT_TRUE(ref::critical_simplex(Y)) << to_string(L);
        }
        for (bool s : seen) EXPECT_TRUE(s);
        EXPECT_EQ(ortho_class_from_string(to_string(L)), L);
    }
}

TEST(Classify, BlockTypes) {
    auto a = make_constraint(0, {1, 0, 0});
    auto b = make_constraint(0, {-1, 0, 0});
    EXPECT_EQ(block_classify({a, b}), BlockType::B2);
    auto f2a = gen_char_ortho(OrthoClass::C2a).constraints;
    auto c = classify_ortho_pinning(f2a);
    for (auto& blk : c.blocks) {
        EXPECT_EQ(blk.type, BlockType::B3Par);
        std::vector<Constraint> B;
        for (auto i : blk.members) B.push_back(f2a[i]);
        for (auto& g : B)
            for (auto& h : B) EXPECT_TRUE(coplanar(g, h));
    }
    auto f2b = gen_char_ortho(OrthoClass::C2b).constraints;
    for (auto& blk : classify_ortho_pinning(f2b).blocks) {
        EXPECT_EQ(blk.type, BlockType::B3Cross);
        for (auto i : blk.members)
            for (auto j : blk.members) EXPECT_TRUE(concurrent(f2b[i], f2b[j]));
    }
    EXPECT_THROW(block_classify({make_constraint(0, {1, 0, 1})}), NotOrthogonal);
}

TEST(Classify, DependenceMatchesTransversals) {
    std::mt19937_64 rng(41);
    int dep = 0;
    for (int it = 0; it < 200; ++it) {
        std::vector<Constraint> F;
        std::uniform_int_distribution<int> c(-2, 2);
        for (int i = 0; i < 4; ++i) {
            Constraint g;
            do g = ref::random_constraint(rng, 2, true);
            while (std::any_of(F.begin(), F.end(), [&](auto& h) { return h.lambda == g.lambda; }));
            F.push_back(g);
        }
        TransversalCount tc;
        try {
            tc = common_transversals(F);
        } catch (const DegenerateTriple&) {
            continue;
        }
        EXPECT_EQ(tc.infinite, is_dependent(F));
        dep += tc.infinite;
    }
    // hyperboloidal quadruple from the quadric fixture
    EXPECT_TRUE(is_dependent(gen_quadric_4block().constraints));
    EXPECT_TRUE(common_transversals(gen_quadric_4block().constraints).infinite);
    auto o8 = gen_ortho8().constraints;
    EXPECT_FALSE(is_dependent({o8[0], o8[2], o8[4], o8[6]}));
    EXPECT_THROW(is_dependent({make_constraint(0, {1, 0, 0})}), WrongArity);
}

TEST(Classify, DetectFourPinning) {
    EXPECT_TRUE(detect_4pinning(gen_tangent_4pinning().constraints));
    EXPECT_FALSE(detect_4pinning(gen_quadric_4block().constraints));
    for (auto f : {gen_ortho8(), gen_six_k1(), gen_six_k2(), gen_six_k3(), gen_five_block()})
        EXPECT_FALSE(detect_4pinning(f.constraints)) << f.name;
}

TEST(Classify, RejectsNonMinimal) {
    auto F = gen_ortho8().constraints;
    F.push_back(make_constraint(7, {1, 1, 0}));
    EXPECT_THROW(classify_ortho_pinning(F), NotAMinimalOrthoPinning);
}
