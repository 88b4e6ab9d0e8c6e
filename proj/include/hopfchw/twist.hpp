// 2-cocycles, deformed Hopf algebras and comodule algebras, the comparison
// isomorphisms, and the deformed strong-connection formulas.
#pragma once

#include "hopfchw/galois.hpp"

namespace hopfchw {

struct TwistError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A convolution-invertible bilinear functional γ: H⊗H → 𝕂 satisfying the
/// cocycle and normalization conditions.
struct TwoCocycle {
    HopfPtr hopf;
    LinMap gamma;      // H⊗H → 𝕂
    LinMap gamma_inv;  // convolution inverse over the tensor bialgebra H⊗H
};

/// The tensor-square bialgebra H⊗H (component-wise product, shuffled coproduct).
Coalgebra tensor_square_coalgebra(const HopfAlgebra& h);
Algebra tensor_square_algebra(const HopfAlgebra& h);

/// Violated conditions among {"cocycle_1", "cocycle_2", "not-invertible"}.
std::vector<std::string> check_cocycle(const HopfAlgebra& h, const LinMap& gamma);

/// Validates and completes a cocycle with its convolution inverse.
TwoCocycle make_cocycle(HopfPtr hopf, const LinMap& gamma);
TwoCocycle trivial_cocycle(HopfPtr hopf);

/// γ evaluated on a pair of vectors by bilinear extension.
Scalar eval_bilinear(const LinMap& gamma, const Vec& a, const Vec& b);

struct DeformedHopf {
    HopfPtr base;
    TwoCocycle cocycle;
    HopfPtr result;  // same carrier/coproduct/counit, deformed product and antipode
    LinMap u, u_inv;  // u_γ(h) = γ(h₍₁₎, S(h₍₂₎)) and its convolution inverse
    LinMap v, v_inv;  // v_γ(h) = γ(h₍₂₎, S⁻¹(h₍₁₎)) and its convolution inverse
};

/// H_γ with h·_γk = γ(h₍₁₎,k₍₁₎) h₍₂₎k₍₂₎ γ⁻¹(h₍₃₎,k₍₃₎); axiom-checked.
DeformedHopf deform_hopf(HopfPtr h, const TwoCocycle& gamma);

/// A_γ with a·_γã = a₍₀₎ã₍₀₎ γ⁻¹(a₍₁₎,ã₍₁₎), a right H_γ-comodule algebra.
ComoduleAlgebra deform_comodule_algebra_right(const ComoduleAlgebra& a, const DeformedHopf& dh);

/// _σA with a•_σã = σ(a₍₋₁₎,ã₍₋₁₎) a₍₀₎ã₍₀₎ for a left K-comodule algebra.
Algebra deform_algebra_left(const Algebra& alg, const LinMap& left_coaction,
                            const TwoCocycle& sigma);

/// α and α⁻¹ of the monoidal comparison for right comodules.
std::pair<LinMap, LinMap> alpha_iso(const Comodule& v, const Comodule& w,
                                    const TwoCocycle& gamma);

/// φ and φ⁻¹ of the monoidal comparison for left comodules.
std::pair<LinMap, LinMap> phi_iso(const Comodule& v, const Comodule& w, const TwoCocycle& sigma);

/// The comodule isomorphism 𝔣(h) = h₍₃₎ u_γ(h₍₁₎) γ⁻¹(S(h₍₂₎),h₍₄₎) between the
/// two deformed adjoint coactions, and its inverse.
std::pair<LinMap, LinMap> ff_map(const DeformedHopf& dh);

/// ℓ_γ(h) = ℓ(h₍₂₎) u_γ(h₍₁₎).
StrongConnection deform_connection_right(const StrongConnection& ell, const DeformedHopf& dh);

/// φ_γ = φ with φ_γ⁻¹(h) = φ⁻¹(h₍₂₎) u_γ(h₍₁₎).
CleavingMap deform_cleaving(const CleavingMap& c, const DeformedHopf& dh);

/// σℓ(h) = σ⁻¹(h⟨1⟩₍₋₁₎, h⟨2⟩₍₋₁₎) h⟨1⟩₍₀₎ ⊗ h⟨2⟩₍₀₎ for a bicomodule algebra
/// with left coaction λ on A.
StrongConnection deform_connection_left(const StrongConnection& ell, const LinMap& lambda,
                                        const TwoCocycle& sigma);

/// The combined formula σℓ_γ, computed directly.
StrongConnection deform_connection_both(const StrongConnection& ell, const LinMap& lambda,
                                        const TwoCocycle& sigma, const DeformedHopf& dh);

// ---- Cocycle compilers for the fixture families ------------------------------

/// Bicharacter values on group-likes of a group algebra 𝕂[G].
LinMap cocycle_from_bicharacter(const HopfAlgebra& group_algebra,
                                const std::vector<std::vector<Scalar>>& values);

/// A 2-cocycle on a function algebra 𝕂^G (G abelian of exponent 2), entered
/// as scalar values on pairs of characters and compiled by Fourier transform
/// to the delta-function basis.
LinMap cocycle_on_function_algebra(const HopfAlgebra& function_algebra, const GroupTable& g,
                                   const std::vector<std::vector<Scalar>>& character_values);

}  // namespace hopfchw
