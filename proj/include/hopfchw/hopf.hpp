// Hopf algebras by structure constants: axiom checking, convolution algebra,
// fixture builders, adjoint coaction, and the cotrace space.
#pragma once

#include "hopfchw/linalg.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfchw {

struct HopfError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Algebra {
    BasedSpace space;
    LinMap mult;  // A⊗A → A
    Vec unit;     // unit element of A
};

struct Coalgebra {
    BasedSpace space;
    LinMap comult;  // C → C⊗C
    LinMap counit;  // C → 𝕂
};

struct HopfAlgebra {
    BasedSpace space;
    LinMap mult;
    Vec unit;
    LinMap comult;
    LinMap counit;
    LinMap antipode;
    LinMap antipode_inv;

    Algebra algebra() const { return {space, mult, unit}; }
    Coalgebra coalgebra() const { return {space, comult, counit}; }
};

/// Names of violated axiom families; empty iff the structure is a Hopf
/// algebra. Shape inconsistencies throw instead of being reported.
std::vector<std::string> check_hopf_axioms(const HopfAlgebra& h);

/// Iterated coproduct Δ⁽ᵐ⁾: H → H^⊗(m+1); Δ⁽⁰⁾ = id.
LinMap iterated_comult(const HopfAlgebra& h, std::size_t m);

/// A linear map from a coalgebra carrier into an algebra carrier, the
/// element type of the convolution algebra.
struct ConvMap {
    Coalgebra source;
    Algebra target;
    LinMap map;
};

LinMap convolve(const Coalgebra& c, const Algebra& a, const LinMap& f, const LinMap& g);
ConvMap convolve(const ConvMap& f, const ConvMap& g);
LinMap convolution_unit(const Coalgebra& c, const Algebra& a);  // η∘ε

/// Two-sided convolution inverse, found by deterministic linear solving;
/// empty when the element is not invertible.
std::optional<LinMap> convolution_inverse(const Coalgebra& c, const Algebra& a, const LinMap& f);

// ---- Finite groups as multiplication tables ---------------------------------

struct GroupTable {
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of gᵢgⱼ
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;

    std::size_t order() const { return labels.size(); }

    static GroupTable cyclic(std::size_t n);
    static GroupTable product(const GroupTable& g, const GroupTable& h);
    static GroupTable symmetric3();
};

/// Validates the group axioms by brute force; order ≤ 24 enforced.
void validate_group(const GroupTable& g);

// ---- Builders (axiom-checked eagerly) ----------------------------------------

/// Group algebra 𝕂[G]: Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
HopfAlgebra build_group_algebra(const GroupTable& g, FieldSpec field = {});

/// Function algebra 𝕂^G: pointwise product, Δδ_g = Σ_{uv=g} δ_u⊗δ_v.
HopfAlgebra build_function_algebra(const GroupTable& g, FieldSpec field = {});

/// Sweedler's four-dimensional Hopf algebra {1, g, x, gx}.
HopfAlgebra build_sweedler_h4(FieldSpec field = {});

/// The adjoint coaction h ↦ h₍₂₎ ⊗ S(h₍₁₎)h₍₃₎, verified to be a coaction.
LinMap adjoint_coaction(const HopfAlgebra& h);

/// Basis of the cotrace space H^tr = {h : h₍₁₎⊗h₍₂₎ = h₍₂₎⊗h₍₁₎}.
std::vector<Vec> cotrace_space(const HopfAlgebra& h);

bool is_cotrace(const HopfAlgebra& h, const Vec& v);

/// The flip V⊗W → W⊗V.
LinMap flip_map(const BasedSpace& v, const BasedSpace& w);

}  // namespace hopfchw
