#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfchw/cyclic.hpp"
#include "hopfchw/hopf.hpp"

using namespace hopfchw;

namespace {

ChainAlgebra ground_field() { return ChainAlgebra{unit_space(), scalar_mult_iso()}; }

ChainAlgebra kc2() {
    auto h = build_function_algebra(GroupTable::cyclic(2));
    return ChainAlgebra{h.space, h.mult};
}

}  // namespace

TEST_CASE("face maps in low degree") {
    auto b = kc2();
    // d_0(b⊗b') = bb', d_1(b⊗b') = b'b
    Vec v = tensor_vec(Vec::basis(2, 0), Vec::basis(2, 1));
    CHECK(apply_face(b, 1, 0, v) == b.mult.apply(v));
    CHECK(apply_face(b, 1, 1, v) ==
          b.mult.apply(tensor_vec(Vec::basis(2, 1), Vec::basis(2, 0))));
    // on the ground field every face is the identity
    auto k = ground_field();
    for (int n = 1; n <= 3; ++n)
        for (int i = 0; i <= n; ++i)
            CHECK(apply_face(k, n, i, Vec::basis(1, 0)) == Vec::basis(1, 0));
}

TEST_CASE("boundary identities, exactly, for n <= 4") {
    for (auto b : {ground_field(), kc2()}) {
        for (int n = 1; n <= 4; ++n) {
            auto d_n = hochschild_boundary(b, n);
            auto t_n = cyclic_operator(b, n);
            auto dp_n = truncated_boundary(b, n);
            auto n_n = norm_operator(b, n);
            auto id = LinMap::identity(t_n.source());

            if (n >= 2) {
                CHECK(hochschild_boundary(b, n - 1).compose(d_n).is_zero());
                CHECK(truncated_boundary(b, n - 1).compose(dp_n).is_zero());
            }
            // t^{n+1} = id (the sign (−1)^{n(n+1)} is +1)
            LinMap p = t_n;
            for (int k = 0; k < n; ++k) p = t_n.compose(p);
            CHECK(p == id);
            // (1−t)d' = d(1−t) and d'N = Nd
            auto t_prev = cyclic_operator(b, n - 1);
            auto id_prev = LinMap::identity(t_prev.source());
            CHECK((id_prev - t_prev).compose(dp_n) == d_n.compose(id - t_n));
            CHECK(dp_n.compose(norm_operator(b, n)) == norm_operator(b, n - 1).compose(d_n));
        }
    }
}

TEST_CASE("small cyclic operators") {
    auto b = kc2();
    CHECK(cyclic_operator(b, 0) == LinMap::identity(b.space));
    // t_1(x⊗y) = −y⊗x
    Vec v = tensor_vec(Vec::basis(2, 0), Vec::basis(2, 1));
    CHECK(apply_cyclic(b, 1, v) == -tensor_vec(Vec::basis(2, 1), Vec::basis(2, 0)));
    // N on C_0 is the identity
    CHECK(norm_operator(b, 0) == LinMap::identity(b.space));
}

TEST_CASE("boundary examples") {
    auto b = kc2();
    // commutative algebra: d(δ_e⊗δ_g) = δ_eδ_g − δ_gδ_e = 0
    Vec v = tensor_vec(Vec::basis(2, 0), Vec::basis(2, 1));
    CHECK(apply_boundary(b, 1, v).is_zero());
    // d on C_0 is the zero map
    CHECK(apply_boundary(b, 0, Vec::basis(2, 0)).dim() == 0);
}

TEST_CASE("Connes quotient complex of the ground field") {
    auto k = ground_field();
    auto cc = connes_complex(k, 3);
    CHECK(cc.spaces[0].space.dim() == 1);  // t_0 = id, no relations
    CHECK(cc.spaces[1].space.dim() == 0);  // t_1 = −id, everything dies
    CHECK(cc.spaces[2].space.dim() == 1);
    CHECK(cc.spaces[3].space.dim() == 0);
}

TEST_CASE("total complex: D∘D = 0 up to degree 5") {
    for (auto b : {ground_field(), kc2()}) {
        for (int m = 2; m <= 5; ++m) {
            auto d1 = total_boundary_matrix(b, m);
            auto d0 = total_boundary_matrix(b, m - 1);
            CHECK(d0.compose(d1).is_zero());
        }
    }
}

TEST_CASE("cyclic homology of the ground field") {
    auto k = ground_field();
    for (auto mode : {HomologyMode::bicomplex, HomologyMode::connes}) {
        CHECK(cyclic_homology(k, 0, mode).dim == 1);
        CHECK(cyclic_homology(k, 1, mode).dim == 0);
        CHECK(cyclic_homology(k, 2, mode).dim == 1);
        CHECK(cyclic_homology(k, 3, mode).dim == 0);
        CHECK(cyclic_homology(k, 4, mode).dim == 1);
    }
}

TEST_CASE("HC_0 of a commutative algebra has dim B") {
    auto b = kc2();
    CHECK(cyclic_homology(b, 0, HomologyMode::bicomplex).dim == 2);
    CHECK(cyclic_homology(b, 0, HomologyMode::connes).dim == 2);
}

TEST_CASE("Connes and bicomplex modes agree in characteristic zero") {
    for (auto b : {ground_field(), kc2()}) {
        for (int n = 0; n <= 4; ++n)
            CHECK(cyclic_homology(b, n, HomologyMode::bicomplex).dim ==
                  cyclic_homology(b, n, HomologyMode::connes).dim);
    }
}

TEST_CASE("same_class") {
    auto b = kc2();
    // a degree-2 cycle: anything in the kernel of D_2
    auto d2 = total_boundary_matrix(b, 2);
    auto cycles = kernel(d2);
    REQUIRE(!cycles.empty());

    // unflatten the first kernel vector into a TotalChain
    auto unflatten = [&](const Vec& flat) {
        TotalChain x{2, {}};
        std::size_t offset = 0;
        for (int p = 0; p <= 2; ++p) {
            std::size_t cd = chain_dim(b, 2 - p);
            Vec comp(cd);
            for (const auto& [i, c] : flat.entries())
                if (i >= offset && i < offset + cd) comp.set(i - offset, c);
            if (!comp.is_zero()) x.columns.emplace(p, comp);
            offset += cd;
        }
        return x;
    };
    TotalChain x = unflatten(cycles.front());
    CHECK(apply_total_boundary(b, x).is_zero());
    CHECK(same_class(b, x, x));

    // adding a boundary does not change the class
    TotalChain z{3, {{0, Vec::basis(chain_dim(b, 3), 5)}}};
    TotalChain dz = apply_total_boundary(b, z);
    TotalChain x_plus = total_chain_sub(x, dz);  // x − D(z)
    CHECK(same_class(b, x, x_plus));

    // a non-cycle direction is decided, not assumed
    TotalChain w = x;
    Vec bump(chain_dim(b, 0));
    bump.set(0, Scalar(1));
    auto it = w.columns.find(2);
    if (it == w.columns.end())
        w.columns.emplace(2, bump);
    else
        it->second = it->second + bump;
    bool same = same_class(b, x, w);
    bool diff_is_boundary =
        solve_affine(total_boundary_matrix(b, 3), flatten_total(b, total_chain_sub(x, w)))
            .has_value();
    CHECK(same == diff_is_boundary);
}

TEST_CASE("desk-scale guardrail") {
    auto b = kc2();
    CHECK_THROWS_AS(ensure_desk_scale(b, 12), CyclicError);  // 2^13 > 5000
    auto h4 = build_function_algebra(GroupTable::cyclic(4));
    ChainAlgebra b4{h4.space, h4.mult};
    CHECK_THROWS_AS(hochschild_boundary(b4, 6), CyclicError);  // 4^7 > 5000
}
