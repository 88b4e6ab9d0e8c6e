#include "hopfchw/chernweil.hpp"

namespace hopfchw {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw ChernWeilError(msg);
}

LinMap left_mult_map(const Algebra& alg, const Vec& b) {
    LinMap f(alg.space, alg.space);
    for (std::size_t k = 0; k < alg.space.dim(); ++k) {
        Vec col = alg.mult.apply(tensor_vec(b, Vec::basis(alg.space.dim(), k)));
        for (const auto& [i, c] : col.entries()) f.add_entry(i, k, c);
    }
    return f;
}

// λ² = (id_K ⊗ λ) ∘ λ : A → K⊗K⊗A, outer coaction leg first.
LinMap iterated_left_coaction(const LinMap& lambda, const BasedSpace& k) {
    return tensor_map(LinMap::identity(k), lambda).compose(lambda);
}

}  // namespace

CoringM build_coring(const GaloisExtension& ext) {
    const auto& A = ext.A();
    auto left = induced_left_coaction(ext.a.co);
    auto ct = cotensor(ext.a.co, left);

    // counit ε̄(a⊗ã) = aã, landing in B
    LinMap to_a = ext.a.alg.mult.compose(ct.incl);
    LinMap counit = ext.b.proj.compose(to_a);
    require(ext.b.incl.compose(counit) == to_a, "coring counit does not land in B");

    auto unit_coords =
        restrict_to_subspace(ct.incl, ct.proj, tensor_vec(ext.a.alg.unit, ext.a.alg.unit));
    require(unit_coords.has_value(), "1⊗1 does not lie in the cotensor product");

    // m·m′ = ε̄(m)m′ with B acting on the first tensor leg
    const std::size_t dm = ct.space.dim();
    auto idA = LinMap::identity(A);
    LinMap mult(tensor_space(ct.space, ct.space), ct.space);
    for (std::size_t i = 0; i < dm; ++i) {
        Vec b_in_a = ext.b.incl.apply(counit.column_vec(i));
        LinMap act = tensor_map(left_mult_map(ext.a.alg, b_in_a), idA);
        for (std::size_t j = 0; j < dm; ++j) {
            Vec prod_amb = act.apply(ct.incl.column_vec(j));
            auto coords = restrict_to_subspace(ct.incl, ct.proj, prod_amb);
            require(coords.has_value(), "coring product leaves the cotensor product");
            for (const auto& [r, c] : coords->entries()) mult.add_entry(r, i * dm + j, c);
        }
    }
    ChainAlgebra chain{ct.space, std::move(mult)};
    return CoringM{std::move(ct), std::move(counit), std::move(chain), std::move(*unit_coords)};
}

ChernWeilData chern_weil_data(const ComoduleAlgebra& a) {
    auto ext = canonical_map(a);
    require(ext.bijective, "NotGalois: canonical map is not bijective");
    auto coring = build_coring(ext);
    return ChernWeilData{std::move(ext), std::move(coring)};
}

Scalar chw_coefficient(int i) {
    require(i >= 0, "negative coefficient index");
    Integer fact = 1;
    for (int k = 2; k <= i; ++k) fact *= k;
    Integer half_fact = 1;
    for (int k = 2; k <= i / 2; ++k) half_fact *= k;
    Integer value = fact / half_fact;
    if ((i / 2) % 2 == 1) value = -value;
    return Scalar(Rational(value));
}

Vec c_n_ambient(const ChernWeilData& d, const LinMap& ell, const Vec& h, int n) {
    require(n >= 0, "negative degree");
    require(h.dim() == d.ext.H().dim(), "cotrace has wrong dimension");
    Vec spread = iterated_comult(*d.ext.hopf, static_cast<std::size_t>(n)).apply(h);
    std::vector<const LinMap*> legs_ell(static_cast<std::size_t>(n) + 1, &ell);
    Vec w = legs::apply_factors(legs_ell, spread);
    std::vector<std::size_t> dims(2 * (static_cast<std::size_t>(n) + 1), d.ext.A().dim());
    return legs::rotate_right(w, dims);
}

bool in_coring_power(const ChernWeilData& d, const Vec& ambient, int n) {
    const auto& A = d.ext.A();
    auto idA = LinMap::identity(A);
    auto left = induced_left_coaction(d.ext.a.co);
    LinMap constr = tensor_map(d.ext.a.co.coaction, idA) - tensor_map(idA, left.coaction);
    LinMap id_slot = LinMap::identity(tensor_space(A, A));
    for (int j = 0; j <= n; ++j) {
        std::vector<const LinMap*> factors(static_cast<std::size_t>(n) + 1, &id_slot);
        factors[static_cast<std::size_t>(j)] = &constr;
        if (!legs::apply_factors(factors, ambient).is_zero()) return false;
    }
    return true;
}

Vec c_n(const ChernWeilData& d, const LinMap& ell, const Vec& h, int n) {
    require(is_cotrace(*d.ext.hopf, h), "input is not a cotrace");
    Vec ambient = c_n_ambient(d, ell, h, n);
    require(in_coring_power(d, ambient, n), "c_n leaves the coring power");
    std::vector<const LinMap*> projs(static_cast<std::size_t>(n) + 1, &d.coring.m.proj);
    Vec coords = legs::apply_factors(projs, ambient);
    std::vector<const LinMap*> incls(static_cast<std::size_t>(n) + 1, &d.coring.m.incl);
    require(legs::apply_factors(incls, coords) == ambient, "coring coordinates are inconsistent");
    return coords;
}

bool unsigned_cyclic_invariant(const ChernWeilData& d, const Vec& cn, int n) {
    std::vector<std::size_t> dims(static_cast<std::size_t>(n) + 1, d.coring.m.space.dim());
    return legs::rotate_right(cn, dims) == cn;
}

bool face_compat_check(const ChernWeilData& d, const LinMap& ell, const Vec& h, int n) {
    require(n >= 1, "face compatibility needs degree >= 1");
    Vec cn = c_n(d, ell, h, n);
    Vec prev = c_n(d, ell, h, n - 1);
    for (int i = 0; i <= n; ++i)
        if (apply_face(d.coring.chain, n, i, cn) != prev) return false;
    return true;
}

TotalChain chw_tilde_cycle(const ChernWeilData& d, const LinMap& ell, const Vec& h, int n) {
    TotalChain chain{2 * n, {}};
    for (int i = 0; i <= 2 * n; ++i) {
        Vec ci = c_n(d, ell, h, i).scaled(chw_coefficient(i));
        if (!ci.is_zero()) chain.columns.emplace(2 * n - i, std::move(ci));
    }
    require(apply_total_boundary(d.coring.chain, chain).is_zero(),
            "chw cycle is not closed over M");
    return chain;
}

Vec x_n(const ChernWeilData& d, const LinMap& ell, const Vec& h, int n) {
    Vec cn = c_n(d, ell, h, n);
    std::vector<const LinMap*> counits(static_cast<std::size_t>(n) + 1, &d.coring.counit);
    return legs::apply_factors(counits, cn);
}

CyclicClass chw_class(const ChernWeilData& d, const LinMap& ell, const Vec& h, int n) {
    ChainAlgebra base{d.ext.b.space, d.ext.b.alg.mult};
    TotalChain chain{2 * n, {}};
    for (int i = 0; i <= 2 * n; ++i) {
        Vec xi = x_n(d, ell, h, i).scaled(chw_coefficient(i));
        if (!xi.is_zero()) chain.columns.emplace(2 * n - i, std::move(xi));
    }
    require(apply_total_boundary(base, chain).is_zero(), "chw class is not closed over B");
    return CyclicClass{std::move(chain)};
}

// ---- Pushforward and naturality ----------------------------------------------

PushforwardResult pushforward_connection(const GaloisExtension& src, const StrongConnection& ell,
                                         const ComoduleAlgebra& target, const LinMap& f) {
    const auto& A = src.A();
    const auto& H = src.H();
    const auto& Abar = target.alg.space;
    require(f.source() == A && f.target() == Abar, "morphism has wrong shape");
    require(target.co.hopf->space == H, "target is a comodule over a different Hopf algebra");
    auto idH = LinMap::identity(H);
    if (target.co.coaction.compose(f) != tensor_map(f, idH).compose(src.a.co.coaction))
        throw ChernWeilError("morphism is not H-colinear");
    if (f.apply(src.a.alg.unit) != target.alg.unit)
        throw ChernWeilError("morphism is not unital");
    if (f.compose(src.a.alg.mult) != target.alg.mult.compose(tensor_map(f, f)))
        throw ChernWeilError("morphism is not multiplicative");

    PushforwardResult out;
    out.target_ext = canonical_map(target);
    require(out.target_ext.bijective, "pushforward target is not Galois");
    out.ell_bar = StrongConnection{tensor_map(f, f).compose(ell.ell)};
    require(verify_strong_connection(out.target_ext, out.ell_bar.ell).empty(),
            "pushforward connection fails verification");

    // f restricts to B → B̄
    const auto& b = src.b;
    const auto& bbar = out.target_ext.b;
    LinMap f_on_b(b.space, bbar.space);
    for (std::size_t j = 0; j < b.space.dim(); ++j) {
        auto coords = restrict_to_subspace(bbar.incl, bbar.proj, f.apply(b.incl.column_vec(j)));
        require(coords.has_value(), "morphism does not map B into the target coinvariants");
        for (const auto& [i, c] : coords->entries()) f_on_b.add_entry(i, j, c);
    }
    out.f_on_b = std::move(f_on_b);

    // B̄ ⊗_B A with relations (b̄ f(b)) ⊗ a − b̄ ⊗ (b a)
    auto bbar_a = tensor_space(bbar.space, A);
    std::vector<Vec> relations;
    for (std::size_t i = 0; i < bbar.space.dim(); ++i) {
        Vec bbar_i = bbar.incl.column_vec(i);
        for (std::size_t k = 0; k < b.space.dim(); ++k) {
            Vec fb = f.apply(b.incl.column_vec(k));
            Vec prod = target.alg.mult.apply(tensor_vec(bbar_i, fb));
            auto prod_coords = restrict_to_subspace(bbar.incl, bbar.proj, prod);
            require(prod_coords.has_value(), "product of coinvariants leaves the subalgebra");
            LinMap mult_by_b = left_mult_map(src.a.alg, b.incl.column_vec(k));
            for (std::size_t aa = 0; aa < A.dim(); ++aa) {
                Vec rel = tensor_vec(*prod_coords, Vec::basis(A.dim(), aa)) -
                          tensor_vec(Vec::basis(bbar.space.dim(), i),
                                     mult_by_b.apply(Vec::basis(A.dim(), aa)));
                if (!rel.is_zero()) relations.push_back(std::move(rel));
            }
        }
    }
    out.relative = quotient(bbar_a, relations);

    // α(ā) = ā₍₀₎ f(ā₍₁₎⟨1⟩) ⊗_B ā₍₁₎⟨2⟩ and β(b̄ ⊗_B a) = b̄ f(a)
    auto idA = LinMap::identity(A);
    auto step = tensor_map(target.alg.mult.compose(tensor_map(LinMap::identity(Abar), f)), idA)
                    .compose(tensor_map(LinMap::identity(Abar), ell.ell))
                    .compose(target.co.coaction);  // Ā → Ā⊗A, first leg lands in B̄
    auto in_bbar = tensor_map(bbar.proj, idA).compose(step);
    require(tensor_map(bbar.incl, idA).compose(in_bbar) == step,
            "comparison map does not land in the coinvariants");
    out.alpha = out.relative.projection.compose(in_bbar);
    out.beta = target.alg.mult.compose(tensor_map(bbar.incl, f)).compose(out.relative.section);
    require(out.alpha.compose(out.beta) == LinMap::identity(out.relative.space),
            "alpha∘beta is not the identity");
    require(out.beta.compose(out.alpha) == LinMap::identity(Abar),
            "beta∘alpha is not the identity");
    return out;
}

NaturalityReport naturality_check(const ComoduleAlgebra& a, const StrongConnection& ell,
                                  const ComoduleAlgebra& target, const LinMap& f, const Vec& h,
                                  int n) {
    NaturalityReport rep;
    auto d = chern_weil_data(a);
    PushforwardResult pf;
    try {
        pf = pushforward_connection(d.ext, ell, target, f);
    } catch (const ChernWeilError& e) {
        rep.broken_equation = e.what();
        return rep;
    }
    rep.valid_morphism = true;
    ChernWeilData dbar{pf.target_ext, build_coring(pf.target_ext)};

    // chain level: x_n(ℓ̄,h) = f^⊗(n+1) x_n(ℓ,h)
    Vec lhs = x_n(dbar, pf.ell_bar.ell, h, n);
    std::vector<const LinMap*> fs(static_cast<std::size_t>(n) + 1, &pf.f_on_b);
    Vec rhs = legs::apply_factors(fs, x_n(d, ell.ell, h, n));
    rep.chain_level = (lhs == rhs);

    // class level over the target base
    ChainAlgebra base_bar{dbar.ext.b.space, dbar.ext.b.alg.mult};
    TotalChain mapped{2 * n, {}};
    auto src_chain = chw_class(d, ell.ell, h, n).chain;
    for (const auto& [p, v] : src_chain.columns) {
        std::vector<const LinMap*> legs_f(static_cast<std::size_t>(2 * n - p) + 1, &pf.f_on_b);
        Vec w = legs::apply_factors(legs_f, v);
        if (!w.is_zero()) mapped.columns.emplace(p, std::move(w));
    }
    auto target_chain = chw_class(dbar, pf.ell_bar.ell, h, n).chain;
    rep.class_level = same_class(base_bar, mapped, target_chain);
    return rep;
}

// ---- Deformation comparisons ---------------------------------------------------

RightInvarianceReport invariance_check_right(const ComoduleAlgebra& a, const StrongConnection& ell,
                                             const DeformedHopf& dh, const Vec& h, int n) {
    RightInvarianceReport rep;
    auto d = chern_weil_data(a);
    auto a_g = deform_comodule_algebra_right(a, dh);
    auto d_g = chern_weil_data(a_g);
    auto ell_g = deform_connection_right(ell, dh);
    require(d.ext.b.incl == d_g.ext.b.incl, "coinvariants changed under deformation");

    Vec amb_src = c_n_ambient(d, ell.ell, h, n);
    Vec amb_def = c_n_ambient(d_g, ell_g.ell, h, n);
    rep.c_ambient_equal = (amb_src == amb_def);
    rep.membership = in_coring_power(d_g, amb_def, n);
    rep.face_compat = n == 0 ? true : face_compat_check(d_g, ell_g.ell, h, n);
    rep.x_equal = (x_n(d, ell.ell, h, n) == x_n(d_g, ell_g.ell, h, n));
    return rep;
}

ExternalPaths x_n_external(const ComoduleAlgebra& a, const LinMap& lambda,
                           const TwoCocycle& sigma, const StrongConnection& ell, const Vec& h,
                           int n) {
    const auto& A = a.alg.space;
    const auto& K = sigma.hopf->space;
    const std::size_t da = A.dim(), dk = K.dim();

    // compositional path through the deformed coring
    ComoduleAlgebra a_s{deform_algebra_left(a.alg, lambda, sigma), a.co};
    auto d_s = chern_weil_data(a_s);
    auto ell_s = deform_connection_left(ell, lambda, sigma);
    ExternalPaths out;
    out.compositional = x_n(d_s, ell_s.ell, h, n);

    // direct path: the closed double-cocycle formula, evaluated pointwise
    require(is_cotrace(*a.co.hopf, h), "input is not a cotrace");
    Vec spread = iterated_comult(*a.co.hopf, static_cast<std::size_t>(n)).apply(h);
    std::vector<const LinMap*> legs_ell(static_cast<std::size_t>(n) + 1, &ell.ell);
    Vec amb = legs::apply_factors(legs_ell, spread);  // unrotated slots (a_k, b_k)

    LinMap lam2 = iterated_left_coaction(lambda, K);  // a ↦ a₍₋₂₎⊗a₍₋₁₎⊗a₍₀₎
    struct Leg {
        std::size_t k2, k1, a0;
        Scalar c;
    };
    std::vector<std::vector<Leg>> expand(da);
    for (std::size_t i = 0; i < da; ++i)
        for (const auto& [idx, c] : lam2.column(i))
            expand[i].push_back(Leg{idx / (da * dk), (idx / da) % dk, idx % da, c});

    // per-pair λ² expansions with the in-slot σ⁻¹ already contracted
    struct SlotTerm {
        std::size_t ka1, kb1, a0, b0;
        Scalar c;
    };
    std::vector<std::vector<std::vector<SlotTerm>>> pair_terms(
        da, std::vector<std::vector<SlotTerm>>(da));
    for (std::size_t ia = 0; ia < da; ++ia)
        for (std::size_t ib = 0; ib < da; ++ib)
            for (const auto& la : expand[ia])
                for (const auto& lb : expand[ib]) {
                    Scalar w = sigma.gamma_inv.entry(0, la.k2 * dk + lb.k2) * la.c * lb.c;
                    if (!w.is_zero())
                        pair_terms[ia][ib].push_back(SlotTerm{la.k1, lb.k1, la.a0, lb.a0, w});
                }

    const std::size_t slots = static_cast<std::size_t>(n) + 1;
    std::size_t dim_out = 1;
    for (std::size_t s = 0; s < slots; ++s) dim_out *= da;
    Vec direct(dim_out);
    std::vector<std::size_t> amb_dims(2 * slots, da);

    // sequential fold over slots: output slot s multiplies the b-leg of
    // slot s−1 with the a-leg of slot s; slot 1 closes the cycle against
    // slot n+1, its product leg sits first in the output.
    // state: (a-data of slot 1 kept for the closing step, current b-data,
    //         partial output index of slots 2..s)
    using FoldKey = std::array<std::size_t, 5>;  // ka1_first, a0_first, kb1, b0, out
    for (const auto& [idx, coef] : amb.entries()) {
        auto parts = legs::split(idx, amb_dims);
        std::map<FoldKey, Scalar> states;
        for (const auto& t : pair_terms[parts[0]][parts[1]]) {
            FoldKey key{t.ka1, t.a0, t.kb1, t.b0, 0};
            auto [it, fresh] = states.emplace(key, t.c);
            if (!fresh) it->second += t.c;
        }
        for (std::size_t s = 1; s < slots; ++s) {
            std::map<FoldKey, Scalar> next;
            for (const auto& [key, c] : states) {
                for (const auto& t : pair_terms[parts[2 * s]][parts[2 * s + 1]]) {
                    Scalar w = c * sigma.gamma.entry(0, key[2] * dk + t.ka1) * t.c;
                    if (w.is_zero()) continue;
                    Vec prod = a.alg.mult.apply(
                        tensor_vec(Vec::basis(da, key[3]), Vec::basis(da, t.a0)));
                    for (const auto& [pi, pc] : prod.entries()) {
                        FoldKey nk{key[0], key[1], t.kb1, t.b0, key[4] * da + pi};
                        auto [it, fresh] = next.emplace(nk, w * pc);
                        if (!fresh) it->second += w * pc;
                    }
                }
            }
            states = std::move(next);
        }
        std::size_t tail_dim = dim_out / da;
        for (const auto& [key, c] : states) {
            Scalar w = coef * c * sigma.gamma.entry(0, key[2] * dk + key[0]);
            if (w.is_zero()) continue;
            Vec prod =
                a.alg.mult.apply(tensor_vec(Vec::basis(da, key[3]), Vec::basis(da, key[1])));
            for (const auto& [pi, pc] : prod.entries())
                direct.add(pi * tail_dim + key[4], w * pc);
        }
    }

    // express every output leg in the coinvariant coordinates of σB (the
    // same subspace of A as B; the coactions are untouched by σ)
    std::vector<const LinMap*> projs(slots, &d_s.ext.b.proj);
    Vec in_b = legs::apply_factors(projs, direct);
    std::vector<const LinMap*> incls(slots, &d_s.ext.b.incl);
    require(legs::apply_factors(incls, in_b) == direct, "x_n legs do not lie in the base");
    out.direct = std::move(in_b);
    return out;
}

CyclicClass chw_external_class(const ComoduleAlgebra& a, const LinMap& lambda,
                               const TwoCocycle& sigma, const StrongConnection& ell, const Vec& h,
                               int n) {
    ComoduleAlgebra a_s{deform_algebra_left(a.alg, lambda, sigma), a.co};
    auto d_s = chern_weil_data(a_s);
    auto ell_s = deform_connection_left(ell, lambda, sigma);
    return chw_class(d_s, ell_s.ell, h, n);
}

bool combined_check(const ComoduleAlgebra& a, const LinMap& lambda, const TwoCocycle& sigma,
                    const DeformedHopf& dh, const StrongConnection& ell, const Vec& h, int n) {
    ComoduleAlgebra a_s{deform_algebra_left(a.alg, lambda, sigma), a.co};
    ComoduleAlgebra a_sg = deform_comodule_algebra_right(a_s, dh);
    auto d_sg = chern_weil_data(a_sg);
    auto ell_sg = deform_connection_both(ell, lambda, sigma, dh);

    auto d_s = chern_weil_data(a_s);
    auto ell_s = deform_connection_left(ell, lambda, sigma);
    require(d_s.ext.b.incl == d_sg.ext.b.incl, "coinvariants differ between deformations");

    return x_n(d_sg, ell_sg.ell, h, n) == x_n(d_s, ell_s.ell, h, n);
}

}  // namespace hopfchw
