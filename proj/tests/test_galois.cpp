#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfchw/fixtures.hpp"

using namespace hopfchw;

namespace {

HopfPtr make(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }

// ℓ(h) = S(h₍₁₎) ⊗ h₍₂₎, the standard connection for A = H over 𝕂.
LinMap antipode_connection(const HopfAlgebra& h) {
    return tensor_map(h.antipode, LinMap::identity(h.space)).compose(h.comult);
}

ComoduleAlgebra trivial_coaction_algebra(const HopfPtr& h) {
    auto a = build_function_algebra(GroupTable::cyclic(3));
    LinMap rho(a.space, tensor_space(a.space, h->space));
    for (std::size_t j = 0; j < a.space.dim(); ++j)
        for (const auto& [i, c] : h->unit.entries())
            rho.add_entry(j * h->space.dim() + i, j, c);
    return ComoduleAlgebra{a.algebra(), Comodule{a.space, h, std::move(rho), Side::right}};
}

}  // namespace

TEST_CASE("balanced tensor product dimensions") {
    SUBCASE("B = K gives A⊗A") {
        auto f = build_f1();
        auto ext = canonical_map(f.algebra);
        CHECK(ext.b.space.dim() == 1);
        CHECK(ext.balanced.space.dim() == 4);
    }
    SUBCASE("F4 has dim 8") {
        auto f = build_f4();
        auto ext = canonical_map(f.algebra);
        CHECK(ext.balanced.space.dim() == 8);
    }
    SUBCASE("trivial coaction: A⊗_A A has dim A") {
        auto h = make(build_group_algebra(GroupTable::cyclic(2)));
        auto a = trivial_coaction_algebra(h);
        auto b = coinvariants(a);
        CHECK(b.space.dim() == 3);
        CHECK(balanced_tensor(a, b).space.dim() == 3);
    }
}

TEST_CASE("canonical map") {
    SUBCASE("bijective on F1, F2, F4") {
        for (const auto& name : {"f1", "f2", "f4"}) {
            auto f = build_fixture(name);
            auto ext = canonical_map(f.algebra);
            CHECK(ext.bijective);
            REQUIRE(ext.can_inv.has_value());
            CHECK(ext.can.compose(*ext.can_inv) == LinMap::identity(ext.can.target()));
        }
    }
    SUBCASE("group algebra formula can(g⊗h) = gh⊗h") {
        auto f = build_f1();
        auto ext = canonical_map(f.algebra);
        // on the full A⊗A: ĉan = can∘π_B
        auto lifted = ext.can.compose(ext.balanced.proj);
        for (std::size_t g = 0; g < 2; ++g)
            for (std::size_t h = 0; h < 2; ++h)
                CHECK(lifted.apply(tensor_vec(Vec::basis(2, g), Vec::basis(2, h))) ==
                      tensor_vec(Vec::basis(2, (g + h) % 2), Vec::basis(2, h)));
    }
    SUBCASE("trivial coaction with nontrivial H is not Galois") {
        auto h = make(build_group_algebra(GroupTable::cyclic(2)));
        auto ext = canonical_map(trivial_coaction_algebra(h));
        CHECK_FALSE(ext.bijective);
        CHECK_THROWS_AS(translation_map(ext), GaloisError);
    }
}

TEST_CASE("translation map") {
    auto f = build_f1();
    auto ext = canonical_map(f.algebra);
    auto tau = translation_map(ext);
    // can∘τ = 1_A ⊗ −
    CHECK(ext.can.compose(tau) == unit_tensor_map(f.algebra.alg, f.hopf->space));
    // τ(g) = g⊗_B g for the order-2 group-like
    Vec g_tensor_g = tensor_vec(Vec::basis(2, 1), Vec::basis(2, 1));
    CHECK(tau.apply(Vec::basis(2, 1)) == ext.balanced.proj.apply(g_tensor_g));
    // τ(1) = 1⊗_B 1
    CHECK(tau.apply(f.hopf->unit) ==
          ext.balanced.proj.apply(tensor_vec(f.algebra.alg.unit, f.algebra.alg.unit)));
}

TEST_CASE("verify_strong_connection") {
    SUBCASE("antipode connection passes on F1") {
        auto f = build_f1();
        auto ext = canonical_map(f.algebra);
        CHECK(verify_strong_connection(ext, antipode_connection(*f.hopf)).empty());
    }
    SUBCASE("zero map fails the translation lift") {
        auto f = build_f1();
        auto ext = canonical_map(f.algebra);
        auto bad = verify_strong_connection(
            ext, LinMap::zero(f.hopf->space, tensor_space(f.algebra.alg.space,
                                                          f.algebra.alg.space)));
        CHECK(std::find(bad.begin(), bad.end(), "strong_conn_Sw3") != bad.end());
    }
    SUBCASE("cleft connection passes on F4") {
        auto f = build_f4();
        auto ext = canonical_map(f.algebra);
        auto ell = cleft_connection(f);
        CHECK(verify_strong_connection(ext, ell.ell).empty());
    }
}

TEST_CASE("solve_strong_connection") {
    SUBCASE("succeeds and verifies on F1, F2, F3, F4") {
        for (const auto& name : {"f1", "f2", "f3", "f4"}) {
            auto f = build_fixture(name);
            auto ext = canonical_map(f.algebra);
            auto sol = solve_strong_connection(ext);
            REQUIRE_MESSAGE(sol.has_value(), name);
            CHECK(verify_strong_connection(ext, sol->ell).empty());
        }
    }
    SUBCASE("non-Galois input is a precondition error") {
        auto h = make(build_group_algebra(GroupTable::cyclic(2)));
        auto ext = canonical_map(trivial_coaction_algebra(h));
        CHECK_THROWS_AS(solve_strong_connection(ext), GaloisError);
    }
    SUBCASE("solver output is deterministic") {
        auto f = build_f4();
        auto ext = canonical_map(f.algebra);
        auto s1 = solve_strong_connection(ext);
        auto s2 = solve_strong_connection(ext);
        REQUIRE(s1.has_value());
        REQUIRE(s2.has_value());
        CHECK(s1->ell == s2->ell);
    }
}

TEST_CASE("cleaving maps and their connections") {
    SUBCASE("phi = id on A = H gives the antipode connection") {
        auto f = build_f2();
        auto ell = cleft_connection(f);
        CHECK(ell.ell == antipode_connection(*f.hopf));
    }
    SUBCASE("connection is unital: l(1) = 1⊗1") {
        for (const auto& name : {"f1", "f4", "f5"}) {
            auto f = build_fixture(name);
            auto ell = cleft_connection(f);
            CHECK(ell.ell.apply(f.hopf->unit) ==
                  tensor_vec(f.algebra.alg.unit, f.algebra.alg.unit));
        }
    }
    SUBCASE("invalid cleaving maps are rejected") {
        auto f = build_f4();
        CHECK_THROWS_AS(
            make_cleaving(*f.hopf, f.algebra,
                          LinMap::zero(f.hopf->space, f.algebra.alg.space)),
            GaloisError);
    }
    SUBCASE("cleft and solver connections may differ but both verify") {
        auto f = build_f4();
        auto ext = canonical_map(f.algebra);
        auto cleft = cleft_connection(f);
        auto solved = solve_strong_connection(ext);
        REQUIRE(solved.has_value());
        CHECK(verify_strong_connection(ext, cleft.ell).empty());
        CHECK(verify_strong_connection(ext, solved->ell).empty());
    }
}

TEST_CASE("counit collapse h<1>h<2> = eps(h)1 on every fixture connection") {
    for (const auto& name : {"f1", "f2", "f3", "f4", "f5"}) {
        auto f = build_fixture(name);
        auto ell = cleft_connection(f);
        auto collapse = f.algebra.alg.mult.compose(ell.ell);
        auto expected = convolution_unit(f.hopf->coalgebra(), f.algebra.alg);
        CHECK_MESSAGE(collapse == expected, name);
    }
}

TEST_CASE("F5 extension is Galois with the cleft connection") {
    auto f = build_f5();
    auto ext = canonical_map(f.algebra);
    CHECK(ext.bijective);
    CHECK(ext.b.space.dim() == 2);
    CHECK(verify_strong_connection(ext, cleft_connection(f).ell).empty());
}
