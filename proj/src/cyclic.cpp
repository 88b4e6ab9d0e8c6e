#include "hopfchw/cyclic.hpp"

#include <functional>
#include <iterator>

namespace hopfchw {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw CyclicError(msg);
}

std::vector<std::size_t> leg_dims(const ChainAlgebra& b, int n) {
    return std::vector<std::size_t>(static_cast<std::size_t>(n) + 1, b.space.dim());
}

BasedSpace synthetic_space(const std::string& prefix, std::size_t dim) {
    std::vector<std::string> labels(dim);
    for (std::size_t i = 0; i < dim; ++i) labels[i] = prefix + std::to_string(i);
    return BasedSpace(std::move(labels));
}

}  // namespace

std::size_t chain_dim(const ChainAlgebra& b, int n) {
    require(n >= 0, "negative chain degree");
    std::size_t d = 1;
    for (int i = 0; i <= n; ++i) d *= b.space.dim();
    return d;
}

void ensure_desk_scale(const ChainAlgebra& b, int n) {
    if (chain_dim(b, n) > 5000)
        throw CyclicError("chain space dimension " + std::to_string(chain_dim(b, n)) +
                          " exceeds the desk-scale guardrail (5000)");
}

Vec apply_face(const ChainAlgebra& b, int n, int i, const Vec& v) {
    require(n >= 1 && i >= 0 && i <= n, "face index out of range");
    if (i == n) return apply_face(b, n, 0, legs::rotate_right(v, leg_dims(b, n)));
    auto id = LinMap::identity(b.space);
    std::vector<const LinMap*> factors;
    for (int k = 0; k < i; ++k) factors.push_back(&id);
    factors.push_back(&b.mult);
    for (int k = i + 1; k < n; ++k) factors.push_back(&id);
    return legs::apply_factors(factors, v);
}

Vec apply_boundary(const ChainAlgebra& b, int n, const Vec& v) {
    if (n == 0) return Vec(0);
    Vec out(chain_dim(b, n - 1));
    for (int i = 0; i <= n; ++i) {
        Vec term = apply_face(b, n, i, v);
        out = (i % 2 == 0) ? out + term : out - term;
    }
    return out;
}

Vec apply_truncated_boundary(const ChainAlgebra& b, int n, const Vec& v) {
    if (n == 0) return Vec(0);
    Vec out(chain_dim(b, n - 1));
    for (int i = 0; i < n; ++i) {
        Vec term = apply_face(b, n, i, v);
        out = (i % 2 == 0) ? out + term : out - term;
    }
    return out;
}

Vec apply_cyclic(const ChainAlgebra& b, int n, const Vec& v) {
    Vec rot = legs::rotate_right(v, leg_dims(b, n));
    return (n % 2 == 0) ? rot : -rot;
}

Vec apply_norm(const ChainAlgebra& b, int n, const Vec& v) {
    Vec out = v;
    Vec cur = v;
    for (int j = 1; j <= n; ++j) {
        cur = apply_cyclic(b, n, cur);
        out = out + cur;
    }
    return out;
}

namespace {

LinMap materialize(const ChainAlgebra& b, int src_deg, int tgt_deg,
                   const std::function<Vec(const Vec&)>& op) {
    ensure_desk_scale(b, src_deg);
    BasedSpace src = tensor_power(b.space, static_cast<std::size_t>(src_deg) + 1);
    BasedSpace tgt = tensor_power(b.space, static_cast<std::size_t>(tgt_deg) + 1);
    LinMap out(src, tgt);
    for (std::size_t j = 0; j < src.dim(); ++j) {
        Vec img = op(Vec::basis(src.dim(), j));
        for (const auto& [i, c] : img.entries()) out.add_entry(i, j, c);
    }
    return out;
}

}  // namespace

LinMap face_map(const ChainAlgebra& b, int n, int i) {
    return materialize(b, n, n - 1, [&](const Vec& v) { return apply_face(b, n, i, v); });
}

LinMap hochschild_boundary(const ChainAlgebra& b, int n) {
    return materialize(b, n, n - 1, [&](const Vec& v) { return apply_boundary(b, n, v); });
}

LinMap truncated_boundary(const ChainAlgebra& b, int n) {
    return materialize(b, n, n - 1,
                       [&](const Vec& v) { return apply_truncated_boundary(b, n, v); });
}

LinMap cyclic_operator(const ChainAlgebra& b, int n) {
    return materialize(b, n, n, [&](const Vec& v) { return apply_cyclic(b, n, v); });
}

LinMap norm_operator(const ChainAlgebra& b, int n) {
    return materialize(b, n, n, [&](const Vec& v) { return apply_norm(b, n, v); });
}

// ---- Total complex of the cyclic bicomplex ---------------------------------

bool TotalChain::is_zero() const {
    for (const auto& [p, v] : columns)
        if (!v.is_zero()) return false;
    return true;
}

TotalChain total_chain_sub(const TotalChain& x, const TotalChain& y) {
    require(x.degree == y.degree, "total chain degrees differ");
    TotalChain out{x.degree, x.columns};
    for (const auto& [p, v] : y.columns) {
        auto it = out.columns.find(p);
        if (it == out.columns.end())
            out.columns.emplace(p, -v);
        else
            it->second = it->second - v;
    }
    return out;
}

TotalChain apply_total_boundary(const ChainAlgebra& b, const TotalChain& x) {
    TotalChain out{x.degree - 1, {}};
    auto accumulate = [&](int p, const Vec& v) {
        if (v.is_zero()) return;
        auto it = out.columns.find(p);
        if (it == out.columns.end())
            out.columns.emplace(p, v);
        else
            it->second = it->second + v;
    };
    for (const auto& [p, v] : x.columns) {
        int q = x.degree - p;
        require(q >= 0 && v.dim() == chain_dim(b, q), "total chain component has wrong shape");
        if (v.is_zero()) continue;
        if (q >= 1) {  // vertical: d on even columns, −d′ on odd columns
            Vec vert = (p % 2 == 0) ? apply_boundary(b, q, v)
                                    : -apply_truncated_boundary(b, q, v);
            accumulate(p, vert);
        }
        if (p >= 1) {  // horizontal: 1−t out of odd columns, N out of even columns
            Vec horiz = (p % 2 == 1) ? v - apply_cyclic(b, q, v) : apply_norm(b, q, v);
            accumulate(p - 1, horiz);
        }
    }
    // prune exact zeros
    for (auto it = out.columns.begin(); it != out.columns.end();)
        it = it->second.is_zero() ? out.columns.erase(it) : std::next(it);
    return out;
}

std::size_t total_dim(const ChainAlgebra& b, int m) {
    std::size_t d = 0;
    for (int p = 0; p <= m; ++p) d += chain_dim(b, m - p);
    return d;
}

Vec flatten_total(const ChainAlgebra& b, const TotalChain& x) {
    Vec out(total_dim(b, x.degree));
    std::size_t offset = 0;
    for (int p = 0; p <= x.degree; ++p) {
        auto it = x.columns.find(p);
        if (it != x.columns.end())
            for (const auto& [i, c] : it->second.entries()) out.add(offset + i, c);
        offset += chain_dim(b, x.degree - p);
    }
    return out;
}

LinMap total_boundary_matrix(const ChainAlgebra& b, int m) {
    require(m >= 1, "total boundary needs degree >= 1");
    ensure_desk_scale(b, m);
    BasedSpace src = synthetic_space("tot" + std::to_string(m) + "_", total_dim(b, m));
    BasedSpace tgt = synthetic_space("tot" + std::to_string(m - 1) + "_", total_dim(b, m - 1));
    LinMap out(src, tgt);
    std::size_t offset = 0;
    for (int p = 0; p <= m; ++p) {
        std::size_t cd = chain_dim(b, m - p);
        for (std::size_t k = 0; k < cd; ++k) {
            TotalChain e{m, {{p, Vec::basis(cd, k)}}};
            Vec img = flatten_total(b, apply_total_boundary(b, e));
            for (const auto& [i, c] : img.entries()) out.add_entry(i, offset + k, c);
        }
        offset += cd;
    }
    return out;
}

ConnesComplex connes_complex(const ChainAlgebra& b, int max_n) {
    require(max_n >= 0, "negative degree");
    ensure_desk_scale(b, max_n);
    ConnesComplex out;
    for (int n = 0; n <= max_n; ++n) {
        auto id = LinMap::identity(tensor_power(b.space, static_cast<std::size_t>(n) + 1));
        auto delta = id - cyclic_operator(b, n);
        out.spaces.push_back(quotient(id.source(), image(delta)));
    }
    out.boundaries.push_back(
        LinMap::zero(out.spaces[0].space, BasedSpace(std::vector<std::string>{})));
    for (int n = 1; n <= max_n; ++n) {
        LinMap d = hochschild_boundary(b, n);
        LinMap induced =
            out.spaces[n - 1].projection.compose(d).compose(out.spaces[n].section);
        // Well-definedness: the induced map must not depend on the section.
        require(induced.compose(out.spaces[n].projection) ==
                    out.spaces[n - 1].projection.compose(d),
                "Connes boundary is not well-defined on the quotient");
        out.boundaries.push_back(std::move(induced));
    }
    for (int n = 2; n <= max_n; ++n)
        require(out.boundaries[n - 1].compose(out.boundaries[n]).is_zero(),
                "Connes complex: induced d∘d != 0");
    return out;
}

HomologyResult cyclic_homology(const ChainAlgebra& b, int n, HomologyMode mode) {
    require(n >= 0, "negative degree");
    HomologyResult res;
    if (mode == HomologyMode::bicomplex) {
        ensure_desk_scale(b, n + 1);
        std::vector<Vec> cycles;
        if (n == 0) {
            for (std::size_t i = 0; i < total_dim(b, 0); ++i)
                cycles.push_back(Vec::basis(total_dim(b, 0), i));
        } else {
            cycles = kernel(total_boundary_matrix(b, n));
        }
        std::size_t boundary_rank = rank(total_boundary_matrix(b, n + 1));
        res.dim = cycles.size() - boundary_rank;
        res.cycle_basis = std::move(cycles);
    } else {
        auto cc = connes_complex(b, n + 1);
        std::vector<Vec> cycles;
        if (n == 0) {
            for (std::size_t i = 0; i < cc.spaces[0].space.dim(); ++i)
                cycles.push_back(Vec::basis(cc.spaces[0].space.dim(), i));
        } else {
            cycles = kernel(cc.boundaries[n]);
        }
        std::size_t boundary_rank = rank(cc.boundaries[n + 1]);
        res.dim = cycles.size() - boundary_rank;
        res.cycle_basis = std::move(cycles);
    }
    return res;
}

bool same_class(const ChainAlgebra& b, const TotalChain& x, const TotalChain& y) {
    require(x.degree == y.degree, "same_class: degrees differ");
    Vec diff = flatten_total(b, total_chain_sub(x, y));
    if (diff.is_zero()) return true;
    auto d = total_boundary_matrix(b, x.degree + 1);
    return solve_affine(d, diff).has_value();
}

}  // namespace hopfchw
