// Right/left comodules and comodule algebras, coinvariants, cotensor
// products, and bicomodule verification.
#pragma once

#include "hopfchw/hopf.hpp"

#include <memory>

namespace hopfchw {

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

enum class Side { right, left };

/// A comodule: right coactions V → V⊗H, left coactions V → H⊗V.
struct Comodule {
    BasedSpace space;
    HopfPtr hopf;
    LinMap coaction;
    Side side = Side::right;
};

/// Violated comodule axioms ("coassociativity", "counitality"); empty iff valid.
std::vector<std::string> check_comodule(const Comodule& c);

/// An algebra carrying a comodule structure on the same space.
struct ComoduleAlgebra {
    Algebra alg;
    Comodule co;
};

/// Adds algebra-morphism conditions on the coaction to check_comodule.
std::vector<std::string> check_comodule_algebra(const ComoduleAlgebra& a);

/// The coinvariant subalgebra B = {a : ρ(a) = a⊗1}, with its inclusion into
/// A, a left inverse of it, and the induced algebra structure on B.
struct Coinvariants {
    BasedSpace space;
    LinMap incl;  // B → A
    LinMap proj;  // A → B with proj∘incl = id
    Algebra alg;  // multiplication and unit in B coordinates
};

Coinvariants coinvariants(const ComoduleAlgebra& a);

/// Coordinates of a vector of A lying in span(incl); empty if outside.
std::optional<Vec> restrict_to_subspace(const LinMap& incl, const LinMap& proj, const Vec& v);

/// The cotensor product V □^H W of a right and a left comodule.
struct Cotensor {
    BasedSpace space;
    LinMap incl;  // cotensor → V⊗W
    LinMap proj;  // left inverse of incl
};

Cotensor cotensor(const Comodule& right, const Comodule& left);

/// The left coaction v ↦ S⁻¹(v₍₁₎)⊗v₍₀₎ induced by a right coaction.
Comodule induced_left_coaction(const Comodule& right);

/// Diagonal right coaction on V⊗W: v⊗w ↦ v₍₀₎⊗w₍₀₎⊗v₍₁₎w₍₁₎. The Hopf
/// multiplication used on the H legs is passed explicitly so deformed
/// products can be substituted.
LinMap diagonal_coaction(const Comodule& v, const Comodule& w, const LinMap& hopf_mult);
LinMap diagonal_coaction(const Comodule& v, const Comodule& w);

/// Left-sided diagonal coaction on V⊗W: v⊗w ↦ v₍₋₁₎w₍₋₁₎⊗v₍₀₎⊗w₍₀₎.
LinMap diagonal_coaction_left(const Comodule& v, const Comodule& w, const LinMap& hopf_mult);

/// A (K,H)-bicomodule: commuting left K- and right H-coactions.
struct Bicomodule {
    BasedSpace space;
    HopfPtr left_hopf;   // K
    HopfPtr right_hopf;  // H
    LinMap left_coaction;
    LinMap right_coaction;
};

std::vector<std::string> check_bicomodule(const Bicomodule& b);

/// A bicomodule algebra: both coactions are algebra morphisms.
struct BicomoduleAlgebra {
    Algebra alg;
    Bicomodule co;

    ComoduleAlgebra right_part() const {
        return {alg, Comodule{alg.space, co.right_hopf, co.right_coaction, Side::right}};
    }
    ComoduleAlgebra left_part() const {
        return {alg, Comodule{alg.space, co.left_hopf, co.left_coaction, Side::left}};
    }
};

std::vector<std::string> check_bicomodule_algebra(const BicomoduleAlgebra& a);

}  // namespace hopfchw
