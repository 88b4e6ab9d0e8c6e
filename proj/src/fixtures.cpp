#include "hopfchw/fixtures.hpp"

namespace hopfchw {

namespace {

HopfPtr make(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }

Fixture self_extension(std::string name, HopfAlgebra hopf) {
    Fixture f;
    f.name = std::move(name);
    f.hopf = make(std::move(hopf));
    f.algebra = ComoduleAlgebra{f.hopf->algebra(),
                                Comodule{f.hopf->space, f.hopf, f.hopf->comult, Side::right}};
    f.cleaving = LinMap::identity(f.hopf->space);
    return f;
}

}  // namespace

Fixture build_f1() { return self_extension("f1", build_group_algebra(GroupTable::cyclic(2))); }

Fixture build_f2() {
    auto g = GroupTable::product(GroupTable::cyclic(2), GroupTable::cyclic(2));
    Fixture f = self_extension("f2", build_group_algebra(g));
    // bicharacter gamma((x1,x2),(y1,y2)) = (-1)^{x2*y1}; index = 2*x1 + x2
    std::vector<std::vector<Scalar>> values(4, std::vector<Scalar>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            values[i][j] = ((i % 2) * (j / 2)) % 2 == 0 ? Scalar(1) : Scalar(-1);
    f.cocycles.emplace("gamma", cocycle_from_bicharacter(*f.hopf, values));
    return f;
}

Fixture build_f3() {
    Fixture f = self_extension("f3", build_sweedler_h4());
    // the one-parameter cocycle family at t = 1 on the basis {1, g, x, gx}
    std::vector<std::vector<Scalar>> values = {
        {Scalar(1), Scalar(1), Scalar(0), Scalar(0)},
        {Scalar(1), Scalar(1), Scalar(0), Scalar(0)},
        {Scalar(0), Scalar(0), Scalar(1), Scalar(-1)},
        {Scalar(0), Scalar(0), Scalar(1), Scalar(-1)},
    };
    const auto& H = f.hopf->space;
    LinMap gamma(tensor_space(H, H), unit_space());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) gamma.add_entry(0, i * 4 + j, values[i][j]);
    f.cocycles.emplace("gamma", std::move(gamma));
    return f;
}

Fixture build_f4() {
    Fixture f;
    f.name = "f4";
    auto c2 = GroupTable::cyclic(2);
    f.hopf = make(build_function_algebra(c2));
    auto a = build_function_algebra(GroupTable::cyclic(4));

    // right translation along the order-2 subgroup {0, 2}: δ_g ↦ δ_g⊗δ_e + δ_{g+2}⊗δ_t
    LinMap rho(a.space, tensor_space(a.space, f.hopf->space));
    for (std::size_t g = 0; g < 4; ++g) {
        rho.add_entry(g * 2 + 0, g, Scalar(1));
        rho.add_entry(((g + 2) % 4) * 2 + 1, g, Scalar(1));
    }
    f.algebra = ComoduleAlgebra{a.algebra(), Comodule{a.space, f.hopf, std::move(rho), Side::right}};

    // cleaving from the coset section {e, c1}: φ(δ_e) = δ_0+δ_1, φ(δ_t) = δ_2+δ_3
    LinMap phi(f.hopf->space, a.space);
    phi.add_entry(0, 0, Scalar(1));
    phi.add_entry(1, 0, Scalar(1));
    phi.add_entry(2, 1, Scalar(1));
    phi.add_entry(3, 1, Scalar(1));
    f.cleaving = std::move(phi);

    // restriction along the subgroup inclusion C2 ↪ C4 (0↦e, 2↦t)
    auto abar = build_function_algebra(c2);
    ComoduleAlgebra target{abar.algebra(),
                           Comodule{abar.space, f.hopf, abar.comult, Side::right}};
    LinMap restrict(a.space, abar.space);
    restrict.add_entry(0, 0, Scalar(1));
    restrict.add_entry(1, 2, Scalar(1));
    f.morphism = MorphismSpec{std::move(target), std::nullopt, std::move(restrict)};

    // cocycle on H = K^{C2} from the sign character pairing
    std::vector<std::vector<Scalar>> cvals = {{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}};
    f.cocycles.emplace("gamma", cocycle_on_function_algebra(*f.hopf, c2, cvals));
    return f;
}

Fixture build_f5() {
    Fixture f;
    f.name = "f5";
    auto c2 = GroupTable::cyclic(2);
    auto u = build_function_algebra(c2);  // left factor, coacted by K
    auto v = build_function_algebra(c2);  // right factor, coacted by H
    f.hopf = make(v);
    f.external = make(u);

    auto carrier = tensor_space(u.space, v.space);
    auto idU = LinMap::identity(u.space);
    auto idV = LinMap::identity(v.space);
    auto perm = leg_permutation({u.space, u.space, v.space, v.space}, {0, 2, 1, 3});
    Algebra alg{carrier, tensor_map(u.mult, v.mult).compose(perm), tensor_vec(u.unit, v.unit)};

    LinMap rho = tensor_map(idU, v.comult);             // U⊗V → U⊗V⊗H
    LinMap lam = tensor_map(u.comult, idV);             // U⊗V → K⊗U⊗V
    f.algebra = ComoduleAlgebra{alg, Comodule{carrier, f.hopf, rho, Side::right}};
    f.left_coaction = lam;

    // cleaving φ(δ_s) = 1_U ⊗ δ_s
    LinMap phi(v.space, carrier);
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t uu = 0; uu < 2; ++uu) phi.add_entry(uu * 2 + s, s, Scalar(1));
    f.cleaving = std::move(phi);

    // cocycles on the external symmetry and on H, both from the sign pairing
    std::vector<std::vector<Scalar>> cvals = {{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}};
    f.cocycles.emplace("sigma", cocycle_on_function_algebra(*f.external, c2, cvals));
    f.external_cocycles.insert("sigma");
    f.cocycles.emplace("gamma", cocycle_on_function_algebra(*f.hopf, c2, cvals));

    // translation by the nontrivial element on the U factor: a bicolinear
    // algebra automorphism of A
    LinMap t(u.space, u.space);
    t.add_entry(1, 0, Scalar(1));
    t.add_entry(0, 1, Scalar(1));
    f.morphism = MorphismSpec{f.algebra, lam, tensor_map(t, idV)};
    return f;
}

Fixture build_fixture(const std::string& name) {
    if (name == "f1") return build_f1();
    if (name == "f2") return build_f2();
    if (name == "f3") return build_f3();
    if (name == "f4") return build_f4();
    if (name == "f5") return build_f5();
    throw std::runtime_error("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() { return {"f1", "f2", "f3", "f4", "f5"}; }

StrongConnection cleft_connection(const Fixture& f) {
    if (!f.cleaving) throw std::runtime_error("fixture has no cleaving map");
    auto cl = make_cleaving(*f.hopf, f.algebra, *f.cleaving);
    return connection_from_cleaving(*f.hopf, cl);
}

}  // namespace hopfchw
