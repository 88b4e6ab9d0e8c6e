// The bundled fixture families F1-F5: small exact-arithmetic extensions
// anchoring the verification suites.
#pragma once

#include "hopfchw/twist.hpp"

#include <map>
#include <optional>
#include <set>

namespace hopfchw {

/// A comodule-algebra morphism fixture f: A → Ā.
struct MorphismSpec {
    ComoduleAlgebra target;
    std::optional<LinMap> target_left_coaction;  // present for bicomodule morphisms
    LinMap map;
};

struct Fixture {
    std::string name;
    FieldSpec field;
    HopfPtr hopf;      // structure Hopf algebra H
    HopfPtr external;  // external symmetry K, when present
    ComoduleAlgebra algebra;
    std::optional<LinMap> left_coaction;  // K-coaction on A
    std::map<std::string, LinMap> cocycles;  // raw functionals, validated on use
    std::set<std::string> external_cocycles;  // cocycle names living on K
    std::optional<LinMap> cleaving;
    std::optional<MorphismSpec> morphism;

    bool has_cocycle(const std::string& name) const { return cocycles.count(name) > 0; }
    bool cocycle_on_external(const std::string& name) const {
        return external_cocycles.count(name) > 0;
    }
};

// F1: A = H = Q[C2] with the regular coaction; cleft via the identity.
Fixture build_f1();

// F2: A = H = Q[C2xC2] with the bicharacter cocycle (-1)^{x2*y1}.
Fixture build_f2();

// F3: A = H = Sweedler H4 with the standard one-parameter cocycle at t = 1.
Fixture build_f3();

// F4: K^{C2}-extension K^{C2/C4-cosets} ⊆ K^{C4} by subgroup translation,
// with a section-based cleaving map, a quotient morphism, and a cocycle on H.
Fixture build_f4();

// F5: the bicomodule algebra K^{C2}⊗K^{C2} with external symmetry K = K^{C2},
// cocycles on both K and H, a factor cleaving map, and a translation morphism.
Fixture build_f5();

Fixture build_fixture(const std::string& name);
std::vector<std::string> fixture_names();

/// The fixture's distinguished connection ℓ = φ⁻¹(h₍₁₎)⊗φ(h₍₂₎) from its
/// bundled cleaving map.
StrongConnection cleft_connection(const Fixture& f);

}  // namespace hopfchw
