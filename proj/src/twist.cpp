#include "hopfchw/twist.hpp"

#include <algorithm>
#include <functional>

namespace hopfchw {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw TwistError(msg);
}

Algebra scalar_algebra() {
    return Algebra{unit_space(), scalar_mult_iso(), Vec::basis(1, 0)};
}

// Collapse 𝕂⊗V⊗𝕂 → V.
LinMap collapse_scalar_sides(const BasedSpace& v) {
    auto mid = unit_left_iso(v);                      // 𝕂⊗V → V
    auto f = tensor_map(mid, LinMap::identity(unit_space()));  // 𝕂⊗V⊗𝕂 → V⊗𝕂
    return unit_right_iso(v).compose(f);
}

}  // namespace

Coalgebra tensor_square_coalgebra(const HopfAlgebra& h) {
    const auto& H = h.space;
    auto HH = tensor_space(H, H);
    auto shuffle = leg_permutation({H, H, H, H}, {0, 2, 1, 3});
    LinMap comult = shuffle.compose(tensor_map(h.comult, h.comult));
    LinMap counit = scalar_mult_iso().compose(tensor_map(h.counit, h.counit));
    return Coalgebra{HH, std::move(comult), std::move(counit)};
}

Algebra tensor_square_algebra(const HopfAlgebra& h) {
    const auto& H = h.space;
    auto HH = tensor_space(H, H);
    auto shuffle = leg_permutation({H, H, H, H}, {0, 2, 1, 3});
    LinMap mult = tensor_map(h.mult, h.mult).compose(shuffle);
    return Algebra{HH, std::move(mult), tensor_vec(h.unit, h.unit)};
}

Scalar eval_bilinear(const LinMap& gamma, const Vec& a, const Vec& b) {
    return gamma.apply(tensor_vec(a, b)).at(0);
}

std::vector<std::string> check_cocycle(const HopfAlgebra& h, const LinMap& gamma) {
    const auto& H = h.space;
    require(gamma.source() == tensor_space(H, H) && gamma.target() == unit_space(),
            "cocycle has wrong shape");
    std::vector<std::string> bad;
    const std::size_t n = H.dim();

    // γ(h₍₁₎,k₍₁₎)γ(h₍₂₎k₍₂₎,l) = γ(k₍₁₎,l₍₁₎)γ(h,k₍₂₎l₍₂₎) over all basis triples.
    bool cond1 = true;
    for (std::size_t a = 0; a < n && cond1; ++a)
        for (std::size_t b = 0; b < n && cond1; ++b)
            for (std::size_t c = 0; c < n && cond1; ++c) {
                Vec ea = Vec::basis(n, a), eb = Vec::basis(n, b), ec = Vec::basis(n, c);
                Scalar lhs, rhs;
                for (const auto& [ij, ch] : h.comult.column(a))
                    for (const auto& [kl, ck] : h.comult.column(b)) {
                        std::size_t h1 = ij / n, h2 = ij % n;
                        std::size_t k1 = kl / n, k2 = kl % n;
                        Scalar g1 = gamma.entry(0, h1 * n + k1);
                        if (g1.is_zero()) continue;
                        Vec prod = h.mult.apply(tensor_vec(Vec::basis(n, h2), Vec::basis(n, k2)));
                        lhs += ch * ck * g1 * eval_bilinear(gamma, prod, ec);
                    }
                for (const auto& [kl, ck] : h.comult.column(b))
                    for (const auto& [lm, cl] : h.comult.column(c)) {
                        std::size_t k1 = kl / n, k2 = kl % n;
                        std::size_t l1 = lm / n, l2 = lm % n;
                        Scalar g1 = gamma.entry(0, k1 * n + l1);
                        if (g1.is_zero()) continue;
                        Vec prod = h.mult.apply(tensor_vec(Vec::basis(n, k2), Vec::basis(n, l2)));
                        rhs += ck * cl * g1 * eval_bilinear(gamma, ea, prod);
                    }
                if (lhs != rhs) cond1 = false;
            }
    if (!cond1) bad.push_back("cocycle_1");

    bool cond2 = true;
    for (std::size_t a = 0; a < n; ++a) {
        Vec ea = Vec::basis(n, a);
        Scalar eps = h.counit.apply(ea).at(0);
        if (eval_bilinear(gamma, ea, h.unit) != eps) cond2 = false;
        if (eval_bilinear(gamma, h.unit, ea) != eps) cond2 = false;
    }
    if (!cond2) bad.push_back("cocycle_2");

    if (!convolution_inverse(tensor_square_coalgebra(h), scalar_algebra(), gamma))
        bad.push_back("not-invertible");
    return bad;
}

TwoCocycle make_cocycle(HopfPtr hopf, const LinMap& gamma) {
    auto bad = check_cocycle(*hopf, gamma);
    if (!bad.empty()) {
        std::string msg = "invalid 2-cocycle:";
        for (const auto& s : bad) msg += " " + s;
        throw TwistError(msg);
    }
    auto inv = convolution_inverse(tensor_square_coalgebra(*hopf), scalar_algebra(), gamma);
    return TwoCocycle{std::move(hopf), gamma, std::move(*inv)};
}

TwoCocycle trivial_cocycle(HopfPtr hopf) {
    LinMap eps2 = scalar_mult_iso().compose(tensor_map(hopf->counit, hopf->counit));
    return TwoCocycle{std::move(hopf), eps2, eps2};
}

DeformedHopf deform_hopf(HopfPtr h, const TwoCocycle& gamma) {
    require(gamma.hopf->space == h->space, "cocycle lives on a different Hopf algebra");
    const auto& H = h->space;
    auto id = LinMap::identity(H);

    DeformedHopf out;
    out.base = h;
    out.cocycle = gamma;
    out.u = gamma.gamma.compose(tensor_map(id, h->antipode)).compose(h->comult);
    out.v = gamma.gamma.compose(tensor_map(id, h->antipode_inv))
                .compose(flip_map(H, H))
                .compose(h->comult);
    auto u_inv = convolution_inverse(h->coalgebra(), scalar_algebra(), out.u);
    require(u_inv.has_value(), "u_gamma is not convolution invertible");
    out.u_inv = std::move(*u_inv);
    auto v_inv = convolution_inverse(h->coalgebra(), scalar_algebra(), out.v);
    require(v_inv.has_value(), "v_gamma is not convolution invertible");
    out.v_inv = std::move(*v_inv);

    auto delta2 = iterated_comult(*h, 2);  // h₁⊗h₂⊗h₃
    // (h₁,h₂,h₃,k₁,k₂,k₃) → (h₁,k₁,h₂,k₂,h₃,k₃)
    auto perm6 = leg_permutation({H, H, H, H, H, H}, {0, 3, 1, 4, 2, 5});
    auto spread = perm6.compose(tensor_map(delta2, delta2));
    LinMap mult_g = collapse_scalar_sides(H)
                        .compose(tensor_many({gamma.gamma, h->mult, gamma.gamma_inv}))
                        .compose(spread);

    auto antipode_from = [&](const LinMap& pre, const LinMap& s, const LinMap& post) {
        return collapse_scalar_sides(H)
            .compose(tensor_many({pre, s, post}))
            .compose(delta2);
    };
    LinMap s_g = antipode_from(out.u, h->antipode, out.u_inv);
    LinMap s_g_inv = antipode_from(out.v, h->antipode_inv, out.v_inv);

    HopfAlgebra hg{H, std::move(mult_g), h->unit, h->comult, h->counit, std::move(s_g),
                   std::move(s_g_inv)};
    auto bad = check_hopf_axioms(hg);
    if (!bad.empty()) {
        std::string msg = "deformed Hopf algebra violates:";
        for (const auto& s : bad) msg += " " + s;
        throw TwistError(msg);
    }
    out.result = std::make_shared<const HopfAlgebra>(std::move(hg));
    return out;
}

ComoduleAlgebra deform_comodule_algebra_right(const ComoduleAlgebra& a, const DeformedHopf& dh) {
    require(a.co.side == Side::right, "right deformation expects a right comodule algebra");
    require(a.co.hopf->space == dh.base->space, "comodule algebra over a different Hopf algebra");
    const auto& A = a.alg.space;
    const auto& H = dh.base->space;
    const auto& rho = a.co.coaction;
    auto perm = leg_permutation({A, H, A, H}, {0, 2, 1, 3});
    LinMap mult_g = unit_right_iso(A)
                        .compose(tensor_map(a.alg.mult, dh.cocycle.gamma_inv))
                        .compose(perm)
                        .compose(tensor_map(rho, rho));
    ComoduleAlgebra out{Algebra{A, std::move(mult_g), a.alg.unit},
                        Comodule{A, dh.result, rho, Side::right}};
    auto bad = check_comodule_algebra(out);
    if (!bad.empty()) throw TwistError("deformed comodule algebra invalid: " + bad.front());
    return out;
}

Algebra deform_algebra_left(const Algebra& alg, const LinMap& lambda, const TwoCocycle& sigma) {
    const auto& A = alg.space;
    const auto& K = sigma.hopf->space;
    require(lambda.source() == A && lambda.target() == tensor_space(K, A),
            "left coaction has wrong shape");
    auto perm = leg_permutation({K, A, K, A}, {0, 2, 1, 3});
    LinMap mult_s = unit_left_iso(A)
                        .compose(tensor_map(sigma.gamma, alg.mult))
                        .compose(perm)
                        .compose(tensor_map(lambda, lambda));
    return Algebra{A, std::move(mult_s), alg.unit};
}

std::pair<LinMap, LinMap> alpha_iso(const Comodule& v, const Comodule& w,
                                    const TwoCocycle& gamma) {
    require(v.side == Side::right && w.side == Side::right, "alpha_iso expects right comodules");
    const auto& H = gamma.hopf->space;
    auto vw = tensor_space(v.space, w.space);
    auto perm = leg_permutation({v.space, H, w.space, H}, {0, 2, 1, 3});
    auto build = [&](const LinMap& functional) {
        return unit_right_iso(vw)
            .compose(tensor_many({LinMap::identity(v.space), LinMap::identity(w.space),
                                  functional}))
            .compose(perm)
            .compose(tensor_map(v.coaction, w.coaction));
    };
    LinMap fwd = build(gamma.gamma_inv);
    LinMap bwd = build(gamma.gamma);
    require(fwd.compose(bwd) == LinMap::identity(vw) && bwd.compose(fwd) == LinMap::identity(vw),
            "alpha_iso round trip failed");
    return {std::move(fwd), std::move(bwd)};
}

std::pair<LinMap, LinMap> phi_iso(const Comodule& v, const Comodule& w, const TwoCocycle& sigma) {
    require(v.side == Side::left && w.side == Side::left, "phi_iso expects left comodules");
    const auto& K = sigma.hopf->space;
    auto vw = tensor_space(v.space, w.space);
    auto perm = leg_permutation({K, v.space, K, w.space}, {0, 2, 1, 3});
    auto build = [&](const LinMap& functional) {
        return unit_left_iso(vw)
            .compose(tensor_many({functional, LinMap::identity(v.space),
                                  LinMap::identity(w.space)}))
            .compose(perm)
            .compose(tensor_map(v.coaction, w.coaction));
    };
    LinMap fwd = build(sigma.gamma);
    LinMap bwd = build(sigma.gamma_inv);
    require(fwd.compose(bwd) == LinMap::identity(vw) && bwd.compose(fwd) == LinMap::identity(vw),
            "phi_iso round trip failed");
    return {std::move(fwd), std::move(bwd)};
}

std::pair<LinMap, LinMap> ff_map(const DeformedHopf& dh) {
    const auto& h = *dh.base;
    const auto& H = h.space;
    auto id = LinMap::identity(H);
    auto delta3 = iterated_comult(h, 3);  // h₁⊗h₂⊗h₃⊗h₄
    auto pair_s = [&](const LinMap& functional) {
        return functional.compose(tensor_map(h.antipode, id));  // (a,b) ↦ γ(S(a),b)
    };
    // 𝔣: u(h₁)·h₃·γ⁻¹(S(h₂),h₄); legs reordered to (h₁,h₃,h₂,h₄)
    LinMap fwd = collapse_scalar_sides(H)
                     .compose(tensor_many({dh.u, id, pair_s(dh.cocycle.gamma_inv)}))
                     .compose(leg_permutation({H, H, H, H}, {0, 2, 1, 3}))
                     .compose(delta3);
    // 𝔣⁻¹: u⁻¹(h₂)·h₃·γ(S(h₁),h₄); legs reordered to (h₂,h₃,h₁,h₄)
    LinMap bwd = collapse_scalar_sides(H)
                     .compose(tensor_many({dh.u_inv, id, pair_s(dh.cocycle.gamma)}))
                     .compose(leg_permutation({H, H, H, H}, {1, 2, 0, 3}))
                     .compose(delta3);
    require(fwd.compose(bwd) == id && bwd.compose(fwd) == id, "ff_map round trip failed");
    return {std::move(fwd), std::move(bwd)};
}

StrongConnection deform_connection_right(const StrongConnection& ell, const DeformedHopf& dh) {
    const auto& h = *dh.base;
    auto aa = ell.ell.target();
    LinMap out = unit_left_iso(aa).compose(tensor_map(dh.u, ell.ell)).compose(h.comult);
    return StrongConnection{std::move(out)};
}

CleavingMap deform_cleaving(const CleavingMap& c, const DeformedHopf& dh) {
    const auto& h = *dh.base;
    auto a_space = c.phi.target();
    LinMap inv = unit_left_iso(a_space).compose(tensor_map(dh.u, c.phi_inv)).compose(h.comult);
    return CleavingMap{c.phi, std::move(inv)};
}

StrongConnection deform_connection_left(const StrongConnection& ell, const LinMap& lambda,
                                        const TwoCocycle& sigma) {
    const auto& A = lambda.source();
    const auto& K = sigma.hopf->space;
    auto aa = tensor_space(A, A);
    auto perm = leg_permutation({K, A, K, A}, {0, 2, 1, 3});
    LinMap twist = unit_left_iso(aa)
                       .compose(tensor_many({sigma.gamma_inv, LinMap::identity(A),
                                             LinMap::identity(A)}))
                       .compose(perm)
                       .compose(tensor_map(lambda, lambda));
    return StrongConnection{twist.compose(ell.ell)};
}

StrongConnection deform_connection_both(const StrongConnection& ell, const LinMap& lambda,
                                        const TwoCocycle& sigma, const DeformedHopf& dh) {
    // Direct pointwise evaluation of the combined formula
    // σℓ_γ(h) = σ⁻¹(ℓ(h₍₂₎)-legs' K-parts) ℓ(h₍₂₎)₍₀₎-legs · u_γ(h₍₁₎).
    const auto& h = *dh.base;
    const auto& H = h.space;
    const auto& A = lambda.source();
    const std::size_t da = A.dim();
    auto aa = tensor_space(A, A);
    const std::size_t dk = sigma.hopf->space.dim();
    LinMap out(H, aa);
    for (std::size_t j = 0; j < H.dim(); ++j) {
        Vec acc(aa.dim());
        for (const auto& [pair_idx, c12] : h.comult.column(j)) {
            std::size_t h1 = pair_idx / H.dim(), h2 = pair_idx % H.dim();
            Scalar weight = c12 * dh.u.entry(0, h1);
            if (weight.is_zero()) continue;
            for (const auto& [ab, cl] : ell.ell.column(h2)) {
                std::size_t ia = ab / da, ib = ab % da;
                // expand λ on both legs and contract σ⁻¹ on the K parts
                for (const auto& [ka0, c1] : lambda.column(ia)) {
                    std::size_t k1 = ka0 / da, a0 = ka0 % da;
                    for (const auto& [kb0, c2] : lambda.column(ib)) {
                        std::size_t k2 = kb0 / da, b0 = kb0 % da;
                        Scalar s = sigma.gamma_inv.entry(0, k1 * dk + k2);
                        if (s.is_zero()) continue;
                        acc.add(a0 * da + b0, weight * cl * c1 * c2 * s);
                    }
                }
            }
        }
        for (const auto& [i, c] : acc.entries()) out.add_entry(i, j, c);
    }
    return StrongConnection{std::move(out)};
}

LinMap cocycle_from_bicharacter(const HopfAlgebra& group_algebra,
                                const std::vector<std::vector<Scalar>>& values) {
    const auto& H = group_algebra.space;
    const std::size_t n = H.dim();
    require(values.size() == n, "bicharacter table has wrong size");
    LinMap gamma(tensor_space(H, H), unit_space());
    for (std::size_t i = 0; i < n; ++i) {
        require(values[i].size() == n, "bicharacter table has wrong size");
        for (std::size_t j = 0; j < n; ++j) gamma.add_entry(0, i * n + j, values[i][j]);
    }
    return gamma;
}

LinMap cocycle_on_function_algebra(const HopfAlgebra& function_algebra, const GroupTable& g,
                                   const std::vector<std::vector<Scalar>>& character_values) {
    const std::size_t n = g.order();
    require(function_algebra.space.dim() == n, "function algebra does not match group");
    for (std::size_t i = 0; i < n; ++i)
        require(g.table[i][i] == g.identity, "function-algebra cocycle needs exponent-2 groups");

    // All homomorphisms G → {±1}, enumerated deterministically.
    std::vector<std::vector<int>> chars;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<int> f(n);
        for (std::size_t i = 0; i < n; ++i) f[i] = (mask >> i) & 1 ? -1 : 1;
        if (f[g.identity] != 1) continue;
        bool hom = true;
        for (std::size_t i = 0; i < n && hom; ++i)
            for (std::size_t j = 0; j < n && hom; ++j)
                if (f[g.table[i][j]] != f[i] * f[j]) hom = false;
        if (hom) chars.push_back(std::move(f));
    }
    require(chars.size() == n, "character count mismatch");
    std::sort(chars.begin(), chars.end(), std::greater<>());  // all-ones first
    require(character_values.size() == n, "character value table has wrong size");

    // γ(δ_a, δ_b) = (1/|G|²) Σ_{α,β} α(a)β(b) c(α,β)
    LinMap gamma(tensor_space(function_algebra.space, function_algebra.space), unit_space());
    Scalar norm = Scalar(Rational(1, static_cast<long>(n * n)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Scalar sum;
            for (std::size_t al = 0; al < n; ++al) {
                require(character_values[al].size() == n, "character value table has wrong size");
                for (std::size_t be = 0; be < n; ++be)
                    sum += Scalar(chars[al][a]) * Scalar(chars[be][b]) * character_values[al][be];
            }
            gamma.add_entry(0, a * n + b, sum * norm);
        }
    return gamma;
}

}  // namespace hopfchw
