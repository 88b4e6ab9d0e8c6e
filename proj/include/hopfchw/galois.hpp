// Hopf-Galois extensions: the canonical map, translation map, strong
// connections (verification and linear solving), and cleaving maps.
#pragma once

#include "hopfchw/comodule.hpp"

namespace hopfchw {

struct GaloisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Quotient data for the balanced tensor product A⊗_B A.
struct BalancedTensor {
    BasedSpace space;
    LinMap proj;     // A⊗A → A⊗_B A
    LinMap section;  // A⊗_B A → A⊗A with proj∘section = id
};

struct GaloisExtension {
    ComoduleAlgebra a;
    HopfPtr hopf;
    Coinvariants b;
    BalancedTensor balanced;
    LinMap can;  // A⊗_B A → A⊗H
    std::optional<LinMap> can_inv;
    bool bijective = false;

    const BasedSpace& A() const { return a.alg.space; }
    const BasedSpace& H() const { return hopf->space; }
};

BalancedTensor balanced_tensor(const ComoduleAlgebra& a, const Coinvariants& b);

/// Builds the extension record; bijectivity decided by exact rank.
GaloisExtension canonical_map(const ComoduleAlgebra& a);

/// τ = can⁻¹|_H: H → A⊗_B A. Throws GaloisError if not Galois.
LinMap translation_map(const GaloisExtension& g);

struct StrongConnection {
    LinMap ell;  // H → A⊗A
};

/// Violated strong-connection identities among {"strong_conn_Sw1",
/// "strong_conn_Sw2", "strong_conn_Sw3", "counit-collapse"}; empty iff valid.
std::vector<std::string> verify_strong_connection(const GaloisExtension& g, const LinMap& ell);

/// Deterministic solve of the three affine-linear strong-connection
/// constraints; verified before returning. Empty when no solution exists.
std::optional<StrongConnection> solve_strong_connection(const GaloisExtension& g);

struct CleavingMap {
    LinMap phi;      // H → A, unital, colinear, convolution invertible
    LinMap phi_inv;  // convolution inverse
};

/// Validates colinearity, unitality, and convolution invertibility.
CleavingMap make_cleaving(const HopfAlgebra& h, const ComoduleAlgebra& a, const LinMap& phi);

/// ℓ(h) = φ⁻¹(h₍₁₎) ⊗ φ(h₍₂₎).
StrongConnection connection_from_cleaving(const HopfAlgebra& h, const CleavingMap& c);

/// The map h ↦ 1_A ⊗ h as a LinMap H → A⊗H.
LinMap unit_tensor_map(const Algebra& a, const BasedSpace& h);

}  // namespace hopfchw
