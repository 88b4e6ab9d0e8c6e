// The coring M = A□^H A, the chains c_n and x_n, the characteristic-class
// cycle and homomorphism, pushforward/naturality, and the behavior of all of
// it under 2-cocycle deformations.
#pragma once

#include "hopfchw/cyclic.hpp"
#include "hopfchw/twist.hpp"

namespace hopfchw {

struct ChernWeilError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The coring M = A□^H A with counit ε̄(a⊗ã) = aã valued in B and the
/// left-B-module product m·m′ = ε̄(m)m′.
struct CoringM {
    Cotensor m;         // inclusion M → A⊗A with left inverse
    LinMap counit;      // M → B (in the coinvariant coordinates)
    ChainAlgebra chain; // M with the induced product
    Vec left_unit;      // coordinates of 1⊗1 in M
};

CoringM build_coring(const GaloisExtension& ext);

/// Extension plus coring, the working data for every Chern-Weil computation.
struct ChernWeilData {
    GaloisExtension ext;
    CoringM coring;
};

ChernWeilData chern_weil_data(const ComoduleAlgebra& a);

/// The coefficient (−1)^⌊i/2⌋ i!/⌊i/2⌋!, computed in exact integers.
Scalar chw_coefficient(int i);

/// c_n(ℓ)(h) in ambient (A⊗A)^⊗(n+1) coordinates: the legs of
/// ℓ^⊗(n+1)(Δ⁽ⁿ⁾h) rotated one step so factor j reads h₍ⱼ₋₁₎⟨2⟩ ⊗ h₍ⱼ₎⟨1⟩.
Vec c_n_ambient(const ChernWeilData& d, const LinMap& ell, const Vec& h, int n);

/// The cotensor constraint applied at every tensor slot; all-zero iff the
/// ambient vector lies in M^⊗(n+1).
bool in_coring_power(const ChernWeilData& d, const Vec& ambient, int n);

/// c_n in M coordinates. Rejects non-cotrace h; verifies membership.
Vec c_n(const ChernWeilData& d, const LinMap& ell, const Vec& h, int n);

/// Unsigned rotation invariance of a vector in M^⊗(n+1).
bool unsigned_cyclic_invariant(const ChernWeilData& d, const Vec& cn, int n);

/// d_i c_n(ℓ)(h) = c_{n−1}(ℓ)(h) for every face operator, with the M product.
bool face_compat_check(const ChernWeilData& d, const LinMap& ell, const Vec& h, int n);

/// The mixed-degree 2n-cycle Σ (−1)^⌊i/2⌋ (i!/⌊i/2⌋!) c_i placed in column
/// 2n−i. Throws if its total differential does not vanish.
TotalChain chw_tilde_cycle(const ChernWeilData& d, const LinMap& ell, const Vec& h, int n);

/// x_n(ℓ,h) = ε̄^⊗(n+1)(c_n(ℓ)(h)) ∈ B^⊗(n+1).
Vec x_n(const ChernWeilData& d, const LinMap& ell, const Vec& h, int n);

/// A verified cycle in the total complex, with its degree.
struct CyclicClass {
    TotalChain chain;
};

/// The Chern-Weil class in HC_{2n}(B): components x_i with the printed
/// coefficients; the total differential over B is re-verified.
CyclicClass chw_class(const ChernWeilData& d, const LinMap& ell, const Vec& h, int n);

// ---- Pushforward and naturality ----------------------------------------------

struct PushforwardResult {
    GaloisExtension target_ext;
    StrongConnection ell_bar;  // (f⊗f)∘ℓ, verified
    LinMap f_on_b;             // B → B̄
    Quotient relative;         // B̄⊗_B A
    LinMap alpha;              // Ā → B̄⊗_B A
    LinMap beta;               // B̄⊗_B A → Ā, mutually inverse with alpha
};

/// Validates f (colinear, unital, multiplicative; the error names the broken
/// equation), pushes the connection forward, and builds the comparison
/// isomorphism Ā ≅ B̄⊗_B A.
PushforwardResult pushforward_connection(const GaloisExtension& src, const StrongConnection& ell,
                                         const ComoduleAlgebra& target, const LinMap& f);

struct NaturalityReport {
    bool valid_morphism = false;
    std::string broken_equation;  // set when the morphism is rejected
    bool chain_level = false;     // x_n(ℓ̄,h) = f^⊗(n+1) x_n(ℓ,h)
    bool class_level = false;     // same_class over B̄ after mapping the chw chain
    bool ok() const { return valid_morphism && chain_level && class_level; }
};

NaturalityReport naturality_check(const ComoduleAlgebra& a, const StrongConnection& ell,
                                  const ComoduleAlgebra& target, const LinMap& f, const Vec& h,
                                  int n);

// ---- Deformation comparisons (structure cocycle γ) ----------------------------

struct RightInvarianceReport {
    bool x_equal = false;        // x_n(ℓ_γ,h) = x_n(ℓ,h) exactly
    bool membership = false;     // c_n(ℓ_γ) lies in M_γ^⊗(n+1)
    bool face_compat = false;    // d_i c_n(ℓ_γ) = c_{n−1}(ℓ_γ)
    bool c_ambient_equal = true; // whether c_n(ℓ_γ) = c_n(ℓ) in A⊗A coordinates
    bool ok() const { return x_equal && membership && face_compat; }
};

RightInvarianceReport invariance_check_right(const ComoduleAlgebra& a, const StrongConnection& ell,
                                             const DeformedHopf& dh, const Vec& h, int n);

// ---- Deformation from an external symmetry (σ) --------------------------------

struct ExternalPaths {
    Vec direct;         // the closed-form double-cocycle formula
    Vec compositional;  // σε̄^⊗(n+1) ∘ c_n(σℓ) through the deformed coring
    bool agree() const { return direct == compositional; }
};

/// x_n(σℓ,h) computed along two independent code paths.
ExternalPaths x_n_external(const ComoduleAlgebra& a, const LinMap& lambda,
                           const TwoCocycle& sigma, const StrongConnection& ell, const Vec& h,
                           int n);

/// The class chw_n(σℓ)(h) in HC_{2n}(σB), assembled over the σ-deformed base.
CyclicClass chw_external_class(const ComoduleAlgebra& a, const LinMap& lambda,
                               const TwoCocycle& sigma, const StrongConnection& ell, const Vec& h,
                               int n);

/// x-level equality of the doubly-deformed and σ-only-deformed data:
/// x_n(σℓ_γ, h) = x_n(σℓ, h).
bool combined_check(const ComoduleAlgebra& a, const LinMap& lambda, const TwoCocycle& sigma,
                    const DeformedHopf& dh, const StrongConnection& ell, const Vec& h, int n);

}  // namespace hopfchw
