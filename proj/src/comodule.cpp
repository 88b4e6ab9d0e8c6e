#include "hopfchw/comodule.hpp"

namespace hopfchw {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw HopfError(msg);
}

// Subspace data from a list of spanning vectors produced by a kernel
// computation: synthetic labels, inclusion, and a left inverse.
struct Subspace {
    BasedSpace space;
    LinMap incl;
    LinMap proj;
};

Subspace subspace_from_kernel(const BasedSpace& ambient, const std::vector<Vec>& basis,
                              const std::string& prefix) {
    std::vector<std::string> labels;
    labels.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) labels.push_back(prefix + std::to_string(i));
    BasedSpace s(labels);
    LinMap incl = LinMap::from_columns(s, ambient, basis);
    auto proj = left_inverse_of(incl);
    if (!proj) throw HopfError("kernel basis is not independent");
    return {std::move(s), std::move(incl), std::move(*proj)};
}

}  // namespace

std::vector<std::string> check_comodule(const Comodule& c) {
    const auto& V = c.space;
    const auto& H = c.hopf->space;
    auto id = LinMap::identity(V);
    std::vector<std::string> bad;
    if (c.side == Side::right) {
        require(c.coaction.source() == V && c.coaction.target() == tensor_space(V, H),
                "right coaction has wrong shape");
        if (tensor_map(c.coaction, LinMap::identity(H)).compose(c.coaction) !=
            tensor_map(id, c.hopf->comult).compose(c.coaction))
            bad.push_back("coassociativity");
        if (unit_right_iso(V).compose(tensor_map(id, c.hopf->counit)).compose(c.coaction) != id)
            bad.push_back("counitality");
    } else {
        require(c.coaction.source() == V && c.coaction.target() == tensor_space(H, V),
                "left coaction has wrong shape");
        if (tensor_map(LinMap::identity(H), c.coaction).compose(c.coaction) !=
            tensor_map(c.hopf->comult, id).compose(c.coaction))
            bad.push_back("coassociativity");
        if (unit_left_iso(V).compose(tensor_map(c.hopf->counit, id)).compose(c.coaction) != id)
            bad.push_back("counitality");
    }
    return bad;
}

std::vector<std::string> check_comodule_algebra(const ComoduleAlgebra& a) {
    require(a.alg.space == a.co.space, "comodule algebra carriers differ");
    auto bad = check_comodule(a.co);
    const auto& A = a.alg.space;
    const auto& H = a.co.hopf->space;
    const auto& rho = a.co.coaction;
    bool morphism = true;
    if (a.co.side == Side::right) {
        // ρ∘μ = μ_{A⊗H}∘(ρ⊗ρ)
        auto perm = leg_permutation({A, H, A, H}, {0, 2, 1, 3});
        auto mult_ah = tensor_map(a.alg.mult, a.co.hopf->mult).compose(perm);
        if (rho.compose(a.alg.mult) != mult_ah.compose(tensor_map(rho, rho))) morphism = false;
        if (rho.apply(a.alg.unit) != tensor_vec(a.alg.unit, a.co.hopf->unit)) morphism = false;
    } else {
        auto perm = leg_permutation({H, A, H, A}, {0, 2, 1, 3});
        auto mult_ha = tensor_map(a.co.hopf->mult, a.alg.mult).compose(perm);
        if (rho.compose(a.alg.mult) != mult_ha.compose(tensor_map(rho, rho))) morphism = false;
        if (rho.apply(a.alg.unit) != tensor_vec(a.co.hopf->unit, a.alg.unit)) morphism = false;
    }
    if (!morphism) bad.push_back("coaction-not-algebra-morphism");
    return bad;
}

Coinvariants coinvariants(const ComoduleAlgebra& a) {
    require(a.co.side == Side::right, "coinvariants expects a right comodule algebra");
    const auto& A = a.alg.space;
    const auto& H = a.co.hopf->space;
    // B = ker(ρ − (id ⊗ 1_H))
    LinMap tensor_unit(A, tensor_space(A, H));
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (const auto& [j, c] : a.co.hopf->unit.entries())
            tensor_unit.add_entry(i * H.dim() + j, i, c);
    auto basis = kernel(a.co.coaction - tensor_unit);
    auto sub = subspace_from_kernel(A, basis, "b");

    // Induced multiplication; closure is a structural requirement.
    std::vector<Vec> cols;
    cols.reserve(sub.space.dim() * sub.space.dim());
    for (std::size_t i = 0; i < sub.space.dim(); ++i)
        for (std::size_t j = 0; j < sub.space.dim(); ++j) {
            Vec prod = a.alg.mult.apply(tensor_vec(sub.incl.column_vec(i), sub.incl.column_vec(j)));
            auto in_b = restrict_to_subspace(sub.incl, sub.proj, prod);
            require(in_b.has_value(), "coinvariants are not closed under multiplication");
            cols.push_back(std::move(*in_b));
        }
    auto unit_b = restrict_to_subspace(sub.incl, sub.proj, a.alg.unit);
    require(unit_b.has_value(), "unit is not coinvariant");
    Algebra balg{sub.space,
                 LinMap::from_columns(tensor_space(sub.space, sub.space), sub.space, cols),
                 std::move(*unit_b)};
    return Coinvariants{sub.space, std::move(sub.incl), std::move(sub.proj), std::move(balg)};
}

std::optional<Vec> restrict_to_subspace(const LinMap& incl, const LinMap& proj, const Vec& v) {
    Vec coords = proj.apply(v);
    if (incl.apply(coords) != v) return std::nullopt;
    return coords;
}

Cotensor cotensor(const Comodule& right, const Comodule& left) {
    require(right.side == Side::right && left.side == Side::left,
            "cotensor expects (right, left) comodules");
    require(right.hopf->space == left.hopf->space, "cotensor over different Hopf algebras");
    const auto& V = right.space;
    const auto& W = left.space;
    auto idV = LinMap::identity(V);
    auto idW = LinMap::identity(W);
    // ker(ρ⊗id − id⊗λ) inside V⊗W, mapping into V⊗H⊗W.
    auto lhs = tensor_map(right.coaction, idW);
    auto rhs = tensor_map(idV, left.coaction);
    auto basis = kernel(lhs - rhs);
    auto sub = subspace_from_kernel(tensor_space(V, W), basis, "m");
    return Cotensor{std::move(sub.space), std::move(sub.incl), std::move(sub.proj)};
}

Comodule induced_left_coaction(const Comodule& right) {
    require(right.side == Side::right, "induced_left_coaction expects a right comodule");
    const auto& V = right.space;
    const auto& H = right.hopf->space;
    auto flip = flip_map(V, H);
    auto lambda = tensor_map(right.hopf->antipode_inv, LinMap::identity(V))
                      .compose(flip)
                      .compose(right.coaction);
    return Comodule{V, right.hopf, std::move(lambda), Side::left};
}

LinMap diagonal_coaction(const Comodule& v, const Comodule& w, const LinMap& hopf_mult) {
    require(v.side == Side::right && w.side == Side::right,
            "diagonal coaction expects right comodules");
    const auto& H = v.hopf->space;
    auto perm = leg_permutation({v.space, H, w.space, H}, {0, 2, 1, 3});
    return tensor_many({LinMap::identity(v.space), LinMap::identity(w.space), hopf_mult})
        .compose(perm)
        .compose(tensor_map(v.coaction, w.coaction));
}

LinMap diagonal_coaction(const Comodule& v, const Comodule& w) {
    return diagonal_coaction(v, w, v.hopf->mult);
}

LinMap diagonal_coaction_left(const Comodule& v, const Comodule& w, const LinMap& hopf_mult) {
    require(v.side == Side::left && w.side == Side::left,
            "left diagonal coaction expects left comodules");
    const auto& K = v.hopf->space;
    auto perm = leg_permutation({K, v.space, K, w.space}, {0, 2, 1, 3});
    return tensor_many({hopf_mult, LinMap::identity(v.space), LinMap::identity(w.space)})
        .compose(perm)
        .compose(tensor_map(v.coaction, w.coaction));
}

std::vector<std::string> check_bicomodule(const Bicomodule& b) {
    std::vector<std::string> bad;
    Comodule right{b.space, b.right_hopf, b.right_coaction, Side::right};
    Comodule left{b.space, b.left_hopf, b.left_coaction, Side::left};
    for (const auto& s : check_comodule(right)) bad.push_back("right-" + s);
    for (const auto& s : check_comodule(left)) bad.push_back("left-" + s);
    // (λ⊗id_H)∘ρ = (id_K⊗ρ)∘λ
    auto lhs = tensor_map(b.left_coaction, LinMap::identity(b.right_hopf->space))
                   .compose(b.right_coaction);
    auto rhs = tensor_map(LinMap::identity(b.left_hopf->space), b.right_coaction)
                   .compose(b.left_coaction);
    if (lhs != rhs) bad.push_back("coactions-do-not-commute");
    return bad;
}

std::vector<std::string> check_bicomodule_algebra(const BicomoduleAlgebra& a) {
    auto bad = check_bicomodule(a.co);
    for (const auto& s : check_comodule_algebra(a.right_part()))
        if (s == "coaction-not-algebra-morphism") bad.push_back("right-" + s);
    for (const auto& s : check_comodule_algebra(a.left_part()))
        if (s == "coaction-not-algebra-morphism") bad.push_back("left-" + s);
    return bad;
}

}  // namespace hopfchw
