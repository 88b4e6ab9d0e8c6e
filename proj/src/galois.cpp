#include "hopfchw/galois.hpp"

#include <functional>

namespace hopfchw {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw GaloisError(msg);
}

// Matrix of a linear operator on vectorized Hom(S,T) spaces,
// index = col·dim(T) + row.
LinMap hom_operator(const BasedSpace& s, const BasedSpace& t, const BasedSpace& out_s,
                    const BasedSpace& out_t,
                    const std::function<LinMap(const LinMap&)>& op) {
    const std::size_t n = s.dim() * t.dim();
    const std::size_t m = out_s.dim() * out_t.dim();
    std::vector<std::string> in_labels(n), out_labels(m);
    for (std::size_t i = 0; i < n; ++i) in_labels[i] = "u" + std::to_string(i);
    for (std::size_t i = 0; i < m; ++i) out_labels[i] = "w" + std::to_string(i);
    LinMap mat{BasedSpace(in_labels), BasedSpace(out_labels)};
    for (std::size_t idx = 0; idx < n; ++idx) {
        LinMap e(s, t);
        e.add_entry(idx % t.dim(), idx / t.dim(), Scalar(1));
        LinMap img = op(e);
        for (std::size_t j = 0; j < out_s.dim(); ++j)
            for (const auto& [i, c] : img.column(j))
                mat.add_entry(j * out_t.dim() + i, idx, c);
    }
    return mat;
}

Vec vectorize_hom(const LinMap& f) {
    const std::size_t dt = f.target().dim();
    Vec v(f.source().dim() * dt);
    for (std::size_t j = 0; j < f.source().dim(); ++j)
        for (const auto& [i, c] : f.column(j)) v.set(j * dt + i, c);
    return v;
}

LinMap devectorize_hom(const BasedSpace& s, const BasedSpace& t, const Vec& v) {
    LinMap f(s, t);
    const std::size_t dt = t.dim();
    for (const auto& [idx, c] : v.entries()) f.add_entry(idx % dt, idx / dt, c);
    return f;
}

}  // namespace

BalancedTensor balanced_tensor(const ComoduleAlgebra& a, const Coinvariants& b) {
    const auto& A = a.alg.space;
    auto AA = tensor_space(A, A);
    std::vector<Vec> relations;
    relations.reserve(A.dim() * A.dim() * b.space.dim());
    for (std::size_t k = 0; k < b.space.dim(); ++k) {
        Vec bk = b.incl.column_vec(k);
        for (std::size_t i = 0; i < A.dim(); ++i) {
            Vec ei = Vec::basis(A.dim(), i);
            Vec ab = a.alg.mult.apply(tensor_vec(ei, bk));
            for (std::size_t j = 0; j < A.dim(); ++j) {
                Vec ej = Vec::basis(A.dim(), j);
                Vec ba = a.alg.mult.apply(tensor_vec(bk, ej));
                Vec rel = tensor_vec(ab, ej) - tensor_vec(ei, ba);
                if (!rel.is_zero()) relations.push_back(std::move(rel));
            }
        }
    }
    auto q = quotient(AA, relations);
    return BalancedTensor{q.space, q.projection, q.section};
}

GaloisExtension canonical_map(const ComoduleAlgebra& a) {
    auto bad = check_comodule_algebra(a);
    if (!bad.empty()) {
        std::string msg = "not a comodule algebra:";
        for (const auto& s : bad) msg += " " + s;
        throw GaloisError(msg);
    }
    GaloisExtension g;
    g.a = a;
    g.hopf = a.co.hopf;
    g.b = coinvariants(a);
    g.balanced = balanced_tensor(a, g.b);

    const auto& A = a.alg.space;
    const auto& H = g.hopf->space;
    auto id = LinMap::identity(A);
    // ĉan(a⊗ã) = a·ã₍₀₎ ⊗ ã₍₁₎ on A⊗A
    auto lifted = tensor_map(a.alg.mult, LinMap::identity(H))
                      .compose(tensor_map(id, a.co.coaction));
    g.can = lifted.compose(g.balanced.section);
    // Well-definedness on the quotient.
    require(g.can.compose(g.balanced.proj) == lifted, "canonical map not well-defined");

    if (g.balanced.space.dim() == tensor_space(A, H).dim()) {
        auto inv = inverse_of(g.can);
        if (inv) {
            g.can_inv = std::move(*inv);
            g.bijective = true;
        }
    }
    return g;
}

LinMap translation_map(const GaloisExtension& g) {
    require(g.bijective, "NotGalois: canonical map is not bijective");
    return g.can_inv->compose(unit_tensor_map(g.a.alg, g.hopf->space));
}

LinMap unit_tensor_map(const Algebra& a, const BasedSpace& h) {
    LinMap f(h, tensor_space(a.space, h));
    for (std::size_t j = 0; j < h.dim(); ++j)
        for (const auto& [i, c] : a.unit.entries()) f.add_entry(i * h.dim() + j, j, c);
    return f;
}

std::vector<std::string> verify_strong_connection(const GaloisExtension& g, const LinMap& ell) {
    const auto& A = g.A();
    const auto& H = g.H();
    require(ell.source() == H && ell.target() == tensor_space(A, A),
            "connection has wrong shape");
    std::vector<std::string> bad;
    auto idA = LinMap::identity(A);
    auto idH = LinMap::identity(H);
    const auto& rho = g.a.co.coaction;

    // (1): (id_A⊗ρ)∘ℓ = (ℓ⊗id_H)∘Δ
    if (tensor_map(idA, rho).compose(ell) != tensor_map(ell, idH).compose(g.hopf->comult))
        bad.push_back("strong_conn_Sw1");

    // (2): h⟨1⟩₍₀₎ ⊗ h⟨2⟩ ⊗ h⟨1⟩₍₁₎ = ℓ(h₍₂₎) ⊗ S(h₍₁₎)
    auto lhs = leg_permutation({A, H, A}, {0, 2, 1}).compose(tensor_map(rho, idA)).compose(ell);
    auto rhs = tensor_map(ell, g.hopf->antipode)
                   .compose(flip_map(H, H))
                   .compose(g.hopf->comult);
    if (lhs != rhs) bad.push_back("strong_conn_Sw2");

    // (3): can∘π_B∘ℓ = 1_A ⊗ −
    if (g.can.compose(g.balanced.proj).compose(ell) != unit_tensor_map(g.a.alg, H))
        bad.push_back("strong_conn_Sw3");

    // corollary: h⟨1⟩h⟨2⟩ = ε(h)1_A
    auto collapse = g.a.alg.mult.compose(ell);
    if (collapse != convolution_unit(g.hopf->coalgebra(), g.a.alg).compose(LinMap::identity(H)))
        bad.push_back("counit-collapse");
    return bad;
}

std::optional<StrongConnection> solve_strong_connection(const GaloisExtension& g) {
    require(g.bijective, "NotGalois: canonical map is not bijective");
    const auto& A = g.A();
    const auto& H = g.H();
    require(A.dim() <= 8 && H.dim() <= 4,
            "solver guardrail: dim A <= 8 and dim H <= 4 required");
    auto AA = tensor_space(A, A);
    auto idA = LinMap::identity(A);
    auto idH = LinMap::identity(H);
    const auto& rho = g.a.co.coaction;

    auto eq1 = [&](const LinMap& ell) {
        return tensor_map(idA, rho).compose(ell) - tensor_map(ell, idH).compose(g.hopf->comult);
    };
    auto eq2 = [&](const LinMap& ell) {
        auto lhs =
            leg_permutation({A, H, A}, {0, 2, 1}).compose(tensor_map(rho, idA)).compose(ell);
        auto rhs = tensor_map(ell, g.hopf->antipode)
                       .compose(flip_map(H, H))
                       .compose(g.hopf->comult);
        return lhs - rhs;
    };
    auto eq3 = [&](const LinMap& ell) { return g.can.compose(g.balanced.proj).compose(ell); };

    auto m1 = hom_operator(H, AA, H, tensor_space(AA, H), eq1);
    auto m2 = hom_operator(H, AA, H, tensor_space(tensor_space(A, H), A), eq2);
    auto m3 = hom_operator(H, AA, H, tensor_space(A, H), eq3);
    Vec y = vectorize_hom(unit_tensor_map(g.a.alg, H));
    // Pad y into m3's synthetic target coordinates (same vectorization).
    Vec rhs(m3.target().dim());
    for (const auto& [i, c] : y.entries()) rhs.set(i, c);

    auto sol = solve_affine(m3, rhs, {m1, m2});
    if (!sol) return std::nullopt;
    LinMap ell = devectorize_hom(H, AA, *sol);
    auto bad = verify_strong_connection(g, ell);
    require(bad.empty(), "solver output fails verification");
    return StrongConnection{std::move(ell)};
}

CleavingMap make_cleaving(const HopfAlgebra& h, const ComoduleAlgebra& a, const LinMap& phi) {
    const auto& A = a.alg.space;
    const auto& H = h.space;
    require(phi.source() == H && phi.target() == A, "cleaving map has wrong shape");
    // colinearity: ρ∘φ = (φ⊗id)∘Δ
    require(a.co.coaction.compose(phi) ==
                tensor_map(phi, LinMap::identity(H)).compose(h.comult),
            "cleaving map is not colinear");
    require(phi.apply(h.unit) == a.alg.unit, "cleaving map is not unital");
    auto inv = convolution_inverse(h.coalgebra(), a.alg, phi);
    require(inv.has_value(), "cleaving map is not convolution invertible");
    return CleavingMap{phi, std::move(*inv)};
}

StrongConnection connection_from_cleaving(const HopfAlgebra& h, const CleavingMap& c) {
    return StrongConnection{tensor_map(c.phi_inv, c.phi).compose(h.comult)};
}

}  // namespace hopfchw
