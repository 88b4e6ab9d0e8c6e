// Sparse exact linear algebra over based vector spaces: tensor products,
// kernels, images, quotients, deterministic affine solving, and tensor-leg
// bookkeeping for maps on high tensor powers.
#pragma once

#include "hopfchw/field.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfchw {

struct LinalgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite-dimensional vector space with an ordered, labeled basis.
class BasedSpace {
public:
    BasedSpace() : labels_(std::make_shared<std::vector<std::string>>()) {}
    explicit BasedSpace(std::vector<std::string> labels);

    std::size_t dim() const { return labels_->size(); }
    const std::string& label(std::size_t i) const { return labels_->at(i); }
    const std::vector<std::string>& labels() const { return *labels_; }

    bool operator==(const BasedSpace& o) const {
        return labels_ == o.labels_ || *labels_ == *o.labels_;
    }
    bool operator!=(const BasedSpace& o) const { return !(*this == o); }

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

/// The ground field as a one-dimensional space with basis label "1".
BasedSpace unit_space();

/// Tensor product space; labels are "v⊗w" in row-major order (v outer).
BasedSpace tensor_space(const BasedSpace& v, const BasedSpace& w);
BasedSpace tensor_power(const BasedSpace& v, std::size_t n);

/// A sparse vector; exact zeros are never stored.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim) : dim_(dim) {}

    static Vec basis(std::size_t dim, std::size_t i);
    /// Bulk construction from index-sorted, duplicate-free, nonzero entries.
    static Vec from_sorted_unique(std::size_t dim,
                                  const std::vector<std::pair<std::size_t, Scalar>>& items);

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return coef_.empty(); }
    std::size_t support_size() const { return coef_.size(); }
    Scalar at(std::size_t i) const;
    void add(std::size_t i, const Scalar& c);
    void set(std::size_t i, const Scalar& c);

    const std::map<std::size_t, Scalar>& entries() const { return coef_; }

    Vec operator+(const Vec& o) const;
    Vec operator-(const Vec& o) const;
    Vec operator-() const;
    Vec scaled(const Scalar& c) const;
    bool operator==(const Vec& o) const;
    bool operator!=(const Vec& o) const { return !(*this == o); }

    /// Pretty form "c1·label1 + c2·label2" for diagnostics.
    std::string str(const BasedSpace& space) const;

private:
    std::size_t dim_ = 0;
    std::map<std::size_t, Scalar> coef_;
};

Vec tensor_vec(const Vec& a, const Vec& b);

/// A sparse linear map between based spaces, stored column-major.
class LinMap {
public:
    LinMap() = default;
    LinMap(BasedSpace source, BasedSpace target);

    static LinMap zero(const BasedSpace& source, const BasedSpace& target);
    static LinMap identity(const BasedSpace& space);
    static LinMap from_columns(const BasedSpace& source, const BasedSpace& target,
                               const std::vector<Vec>& columns);

    const BasedSpace& source() const { return source_; }
    const BasedSpace& target() const { return target_; }

    Scalar entry(std::size_t row, std::size_t col) const;
    void add_entry(std::size_t row, std::size_t col, const Scalar& c);
    const std::map<std::size_t, Scalar>& column(std::size_t j) const { return cols_.at(j); }
    Vec column_vec(std::size_t j) const;
    std::size_t entry_count() const;
    bool is_zero() const;

    Vec apply(const Vec& v) const;
    /// this ∘ inner; defined only when inner.target() matches source() label-wise.
    LinMap compose(const LinMap& inner) const;

    LinMap operator+(const LinMap& o) const;
    LinMap operator-(const LinMap& o) const;
    LinMap operator-() const;
    LinMap scaled(const Scalar& c) const;
    bool operator==(const LinMap& o) const;
    bool operator!=(const LinMap& o) const { return !(*this == o); }

private:
    BasedSpace source_, target_;
    std::vector<std::map<std::size_t, Scalar>> cols_;
};

/// (f⊗g) acting factor-wise, with tensor_space sources and targets.
LinMap tensor_map(const LinMap& f, const LinMap& g);
LinMap tensor_many(const std::vector<LinMap>& fs);

/// Permutation of tensor legs: output leg k carries input leg out_to_in[k].
LinMap leg_permutation(const std::vector<BasedSpace>& legs,
                       const std::vector<std::size_t>& out_to_in);

// Canonical unit isomorphisms and the ground-field multiplication.
LinMap unit_left_iso(const BasedSpace& v);       // 𝕂⊗V → V
LinMap unit_right_iso(const BasedSpace& v);      // V⊗𝕂 → V
LinMap unit_left_intro(const BasedSpace& v);     // V → 𝕂⊗V
LinMap unit_right_intro(const BasedSpace& v);    // V → V⊗𝕂
LinMap scalar_mult_iso();                        // 𝕂⊗𝕂 → 𝕂

// Deterministic Gaussian elimination (first nonzero column pivot, row order
// tie-break) underlies everything below; outputs are reproducible.

std::size_t rank(const LinMap& f);

/// Basis of ker f; each vector is normalized at its free column.
std::vector<Vec> kernel(const LinMap& f);

/// Basis of im f: the columns of f at the pivot positions of its RREF.
std::vector<Vec> image(const LinMap& f);

struct Quotient {
    BasedSpace space;   // basis labels = non-pivot original labels
    LinMap projection;  // original → quotient
    LinMap section;     // quotient → original, projection∘section = id
};

/// Quotient of `space` by the span of `subspace`.
Quotient quotient(const BasedSpace& space, const std::vector<Vec>& subspace);

/// Deterministic solution of f(x) = y with g(x) = 0 for each constraint g;
/// free variables are set to zero in RREF order. Empty on inconsistency.
std::optional<Vec> solve_affine(const LinMap& f, const Vec& y,
                                const std::vector<LinMap>& homogeneous_constraints = {});

/// Two-sided inverse of a square full-rank map; empty otherwise.
std::optional<LinMap> inverse_of(const LinMap& f);

/// A left inverse p (p∘f = id) of an injective map f; empty if not injective.
std::optional<LinMap> left_inverse_of(const LinMap& f);

// ---- Tensor-leg utilities -------------------------------------------------
// These operate on sparse vectors in implicit tensor powers without
// materializing maps on the full power space. Indices are row-major in the
// given leg dimensions, matching tensor_space ordering.
namespace legs {

std::vector<std::size_t> split(std::size_t index, const std::vector<std::size_t>& dims);
std::size_t join(const std::vector<std::size_t>& parts, const std::vector<std::size_t>& dims);

/// Apply fs[k] to leg k. The input dimension must be the product of the
/// source dimensions; the output lives in the product of the targets.
Vec apply_factors(const std::vector<const LinMap*>& fs, const Vec& v);

/// Reorder legs: output leg k is input leg out_to_in[k].
Vec permute(const Vec& v, const std::vector<std::size_t>& dims,
            const std::vector<std::size_t>& out_to_in);

/// Cyclic rotation moving the last leg to the front.
Vec rotate_right(const Vec& v, const std::vector<std::size_t>& dims);

}  // namespace legs

}  // namespace hopfchw
