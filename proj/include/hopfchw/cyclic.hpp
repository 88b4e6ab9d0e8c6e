// Hochschild chains, cyclic operators, the Connes quotient complex, the
// cyclic bicomplex with its total complex, and cyclic homology.
#pragma once

#include "hopfchw/linalg.hpp"

#include <map>

namespace hopfchw {

struct CyclicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The minimal algebra data chain complexes need. The multiplication does
/// not have to be unital (the coring M is only left-unital).
struct ChainAlgebra {
    BasedSpace space;
    LinMap mult;  // B⊗B → B
};

/// Chain space C_n = B^⊗(n+1); dimension (dim B)^(n+1).
std::size_t chain_dim(const ChainAlgebra& b, int n);

/// Refuses chain spaces with more than 5000 dimensions for materialized
/// complexes; exact solves beyond that are not desk scale.
void ensure_desk_scale(const ChainAlgebra& b, int n);

// Vector-level operator applications; these never materialize matrices and
// carry no dimension guardrail.
Vec apply_face(const ChainAlgebra& b, int n, int i, const Vec& v);
Vec apply_boundary(const ChainAlgebra& b, int n, const Vec& v);            // d
Vec apply_truncated_boundary(const ChainAlgebra& b, int n, const Vec& v);  // d′
Vec apply_cyclic(const ChainAlgebra& b, int n, const Vec& v);              // t_n
Vec apply_norm(const ChainAlgebra& b, int n, const Vec& v);                // N

// Materialized operators (guardrailed).
LinMap face_map(const ChainAlgebra& b, int n, int i);
LinMap hochschild_boundary(const ChainAlgebra& b, int n);
LinMap truncated_boundary(const ChainAlgebra& b, int n);
LinMap cyclic_operator(const ChainAlgebra& b, int n);
LinMap norm_operator(const ChainAlgebra& b, int n);

/// A mixed-degree element of the cyclic bicomplex total complex; the
/// component in column p lives in C_{degree−p}. Zero components are omitted.
struct TotalChain {
    int degree = 0;
    std::map<int, Vec> columns;

    bool is_zero() const;
};

TotalChain total_chain_sub(const TotalChain& x, const TotalChain& y);

/// The total differential applied column-wise: vertical d on even columns,
/// −d′ on odd columns; horizontal 1−t out of odd columns, N out of even
/// columns. The parities are the unique choice making D∘D = 0.
TotalChain apply_total_boundary(const ChainAlgebra& b, const TotalChain& x);

/// Tot_m = ⊕_{p=0..m} C_{m−p} flattened, column p first.
std::size_t total_dim(const ChainAlgebra& b, int m);
Vec flatten_total(const ChainAlgebra& b, const TotalChain& x);

/// Matrix of D: Tot_m → Tot_{m−1} (guardrailed).
LinMap total_boundary_matrix(const ChainAlgebra& b, int m);

/// The Connes quotient complex C^δ_n = C_n / im(id − t_n) up to max_n, with
/// induced boundaries; d∘d = 0 on the quotient is verified.
struct ConnesComplex {
    std::vector<Quotient> spaces;      // index n
    std::vector<LinMap> boundaries;    // index n: C^δ_n → C^δ_{n−1}; n=0 maps to zero space
};

ConnesComplex connes_complex(const ChainAlgebra& b, int max_n);

enum class HomologyMode { bicomplex, connes };

struct HomologyResult {
    std::size_t dim = 0;
    std::vector<Vec> cycle_basis;  // kernel basis of the boundary, flattened
};

/// HC_n of the algebra, by exact rank computation in the chosen model.
HomologyResult cyclic_homology(const ChainAlgebra& b, int n,
                               HomologyMode mode = HomologyMode::bicomplex);

/// Whether two total cycles of equal degree differ by a boundary, decided
/// by deterministic affine solving.
bool same_class(const ChainAlgebra& b, const TotalChain& x, const TotalChain& y);

}  // namespace hopfchw
