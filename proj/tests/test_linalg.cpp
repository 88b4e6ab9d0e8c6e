#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfchw/linalg.hpp"

#include <random>

using namespace hopfchw;

namespace {

BasedSpace space2() { return BasedSpace({"e1", "e2"}); }
BasedSpace space3() { return BasedSpace({"f1", "f2", "f3"}); }

// Deterministic sparse random maps for property tests.
LinMap random_map(std::mt19937& rng, const BasedSpace& src, const BasedSpace& tgt) {
    std::uniform_int_distribution<int> val(-4, 4);
    std::uniform_int_distribution<int> hit(0, 2);
    LinMap f(src, tgt);
    for (std::size_t j = 0; j < src.dim(); ++j)
        for (std::size_t i = 0; i < tgt.dim(); ++i)
            if (hit(rng) == 0) f.add_entry(i, j, Scalar(val(rng)));
    return f;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
    Scalar a = Scalar::parse("3/4");
    Scalar b = Scalar::parse("-7/2");
    CHECK((a * b).str() == "-21/8");
    CHECK((a + b).str() == "-11/4");
    CHECK((a / b).str() == "-3/14");
    CHECK_THROWS_AS(a / Scalar(0), FieldError);
    CHECK(Scalar::parse("-6/8") == Scalar::parse("-3/4"));
}

TEST_CASE("prime field arithmetic") {
    FieldSpec f5{5};
    Scalar a = Scalar::parse("3", f5);
    Scalar b = Scalar::parse("4", f5);
    CHECK((a + b).str() == "2");
    CHECK((a * b).str() == "2");
    CHECK((a / b).str() == "2");  // 3·4⁻¹ = 3·4 = 12 = 2 (mod 5)
    CHECK(Scalar::parse("1/2", f5).str() == "3");
    CHECK_THROWS_AS(Scalar(Rational(1, 5), f5), FieldError);
    // field-agnostic literals adopt the prime field
    CHECK((Scalar(2) * a).str() == "1");
    FieldSpec f7{7};
    CHECK_THROWS_AS(a + Scalar::parse("1", f7), FieldError);
}

TEST_CASE("tensor_space ordering and labels") {
    auto t = tensor_space(space2(), space3());
    CHECK(t.dim() == 6);
    CHECK(t.label(0) == "e1⊗f1");
    CHECK(t.label(1) == "e1⊗f2");
    CHECK(t.label(3) == "e2⊗f1");

    auto u = tensor_space(space2(), unit_space());
    CHECK(u.dim() == 2);
    CHECK(u.label(0) == "e1⊗1");

    BasedSpace c2({"e", "g"});
    auto c2c2 = tensor_space(c2, c2);
    CHECK(c2c2.labels() == std::vector<std::string>{"e⊗e", "e⊗g", "g⊗e", "g⊗g"});
}

TEST_CASE("tensor_map basics") {
    auto id2 = LinMap::identity(space2());
    auto id3 = LinMap::identity(space3());
    CHECK(tensor_map(id2, id3) == LinMap::identity(tensor_space(space2(), space3())));
    CHECK(tensor_map(id2, LinMap::zero(space3(), space3())).is_zero());

    LinMap swap(space2(), space2());
    swap.add_entry(1, 0, Scalar(1));
    swap.add_entry(0, 1, Scalar(1));
    auto sw2 = tensor_map(swap, swap);
    // e1⊗e1 ↦ e2⊗e2
    CHECK(sw2.apply(Vec::basis(4, 0)) == Vec::basis(4, 3));
}

TEST_CASE("tensor_map respects composition (property)") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 25; ++iter) {
        auto f = random_map(rng, space2(), space3());
        auto fp = random_map(rng, space3(), space2());
        auto g = random_map(rng, space3(), space2());
        auto gp = random_map(rng, space2(), space3());
        CHECK(tensor_map(f, g).compose(tensor_map(fp, gp)) ==
              tensor_map(f.compose(fp), g.compose(gp)));
    }
}

TEST_CASE("rank-nullity on random sparse maps (property)") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 40; ++iter) {
        auto f = random_map(rng, space3(), space2());
        CHECK(kernel(f).size() + rank(f) == f.source().dim());
        CHECK(image(f).size() == rank(f));
    }
}

TEST_CASE("kernel vectors are in the kernel") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 20; ++iter) {
        auto f = random_map(rng, space3(), space3());
        for (const auto& v : kernel(f)) CHECK(f.apply(v).is_zero());
    }
}

TEST_CASE("quotient by zero is the identity") {
    auto q = quotient(space2(), {});
    CHECK(q.space.dim() == 2);
    CHECK(q.projection == LinMap::identity(space2()));
    CHECK(q.projection.compose(q.section) == LinMap::identity(q.space));
}

TEST_CASE("quotient of dim-2 space by span(e1 - e2)") {
    Vec rel(2);
    rel.set(0, Scalar(1));
    rel.set(1, Scalar(-1));
    auto q = quotient(space2(), {rel});
    CHECK(q.space.dim() == 1);
    CHECK(q.space.label(0) == "e2");  // non-pivot label survives
    CHECK(q.projection.compose(q.section) == LinMap::identity(q.space));
    // both generators map to the same class
    CHECK(q.projection.apply(Vec::basis(2, 0)) == q.projection.apply(Vec::basis(2, 1)));
}

TEST_CASE("balanced-tensor style quotient of Q[C2]⊗Q[C2] has dim 2") {
    // Relations ab⊗a' − a⊗ba' over the full basis of B = Q[C2],
    // row-reduced by hand to an 2-dimensional quotient.
    BasedSpace c2({"e", "g"});
    auto t = tensor_space(c2, c2);
    std::size_t mult[2][2] = {{0, 1}, {1, 0}};
    std::vector<Vec> rels;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t a2 = 0; a2 < 2; ++a2) {
                Vec r(4);
                r.add(mult[a][b] * 2 + a2, Scalar(1));
                r.add(a * 2 + mult[b][a2], Scalar(-1));
                if (!r.is_zero()) rels.push_back(r);
            }
    auto q = quotient(t, rels);
    CHECK(q.space.dim() == 2);
    CHECK(q.projection.compose(q.section) == LinMap::identity(q.space));
}

TEST_CASE("projection∘section = id on random quotients (property)") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 20; ++iter) {
        auto f = random_map(rng, space3(), space3());
        std::vector<Vec> sub;
        for (std::size_t j = 0; j < 3; ++j) sub.push_back(f.column_vec(j));
        auto q = quotient(space3(), sub);
        CHECK(q.projection.compose(q.section) == LinMap::identity(q.space));
        // the subspace dies in the quotient
        for (const auto& v : sub) CHECK(q.projection.apply(v).is_zero());
    }
}

TEST_CASE("solve_affine basics") {
    auto id = LinMap::identity(space2());
    Vec e1 = Vec::basis(2, 0);
    auto x = solve_affine(id, e1);
    REQUIRE(x.has_value());
    CHECK(*x == e1);

    auto zero = LinMap::zero(space2(), space2());
    CHECK_FALSE(solve_affine(zero, e1).has_value());

    // underdetermined: x1 + x2 = 1 picks the free variable zero
    LinMap row(space2(), unit_space());
    row.add_entry(0, 0, Scalar(1));
    row.add_entry(0, 1, Scalar(1));
    auto y = solve_affine(row, Vec::basis(1, 0));
    REQUIRE(y.has_value());
    CHECK(y->at(0) == Scalar(1));
    CHECK(y->at(1) == Scalar(0));
}

TEST_CASE("solve_affine honors homogeneous constraints") {
    // f(x) = x1 + x2 = 2 with constraint x1 − x2 = 0 → x = (1,1)
    LinMap f(space2(), unit_space());
    f.add_entry(0, 0, Scalar(1));
    f.add_entry(0, 1, Scalar(1));
    LinMap g(space2(), unit_space());
    g.add_entry(0, 0, Scalar(1));
    g.add_entry(0, 1, Scalar(-1));
    Vec two(1);
    two.set(0, Scalar(2));
    auto x = solve_affine(f, two, {g});
    REQUIRE(x.has_value());
    CHECK(x->at(0) == Scalar(1));
    CHECK(x->at(1) == Scalar(1));
}

TEST_CASE("inverse_of and left_inverse_of") {
    LinMap f(space2(), space2());
    f.add_entry(0, 0, Scalar(2));
    f.add_entry(1, 0, Scalar(1));
    f.add_entry(1, 1, Scalar(1));
    auto inv = inverse_of(f);
    REQUIRE(inv.has_value());
    CHECK(inv->compose(f) == LinMap::identity(space2()));
    CHECK(f.compose(*inv) == LinMap::identity(space2()));

    LinMap tall(space2(), space3());
    tall.add_entry(0, 0, Scalar(1));
    tall.add_entry(2, 1, Scalar(3));
    auto li = left_inverse_of(tall);
    REQUIRE(li.has_value());
    CHECK(li->compose(tall) == LinMap::identity(space2()));
    CHECK_FALSE(inverse_of(tall).has_value());
}

TEST_CASE("leg permutation and sparse leg utilities agree") {
    auto s2 = space2();
    auto s3 = space3();
    std::vector<BasedSpace> spaces{s2, s3, s2};
    std::vector<std::size_t> dims{2, 3, 2};
    std::vector<std::size_t> perm{2, 0, 1};
    auto mat = leg_permutation(spaces, perm);
    std::mt19937 rng(5);
    auto f = random_map(rng, space2(), BasedSpace({"a", "b", "c", "d", "e", "f",
                                                   "g", "h", "i", "j", "k", "l"}));
    Vec v = f.column_vec(0);
    CHECK(mat.apply(v) == legs::permute(v, dims, perm));
}

TEST_CASE("apply_factors matches materialized tensor maps") {
    std::mt19937 rng(404);
    auto f = random_map(rng, space2(), space3());
    auto g = random_map(rng, space3(), space2());
    auto big = tensor_map(f, g);
    for (std::size_t j = 0; j < 6; ++j) {
        Vec v = Vec::basis(6, j);
        CHECK(legs::apply_factors({&f, &g}, v) == big.apply(v));
    }
    // a grouped factor consuming two legs at once
    auto fg = tensor_map(f, g);
    Vec w(6);
    w.set(1, Scalar(2));
    w.set(4, Scalar(-3));
    CHECK(legs::apply_factors({&fg}, w) == fg.apply(w));
}

TEST_CASE("rotate_right moves the last leg to the front") {
    std::vector<std::size_t> dims{2, 2, 3};
    Vec v(12);
    v.set(legs::join({1, 0, 2}, dims), Scalar(5));
    Vec r = legs::rotate_right(v, dims);
    std::vector<std::size_t> out_dims{3, 2, 2};
    CHECK(r.at(legs::join({2, 1, 0}, out_dims)) == Scalar(5));
}

TEST_CASE("composition requires matching labels") {
    auto f = LinMap::identity(space2());
    auto g = LinMap::identity(space3());
    CHECK_THROWS_AS(f.compose(g), LinalgError);
}
