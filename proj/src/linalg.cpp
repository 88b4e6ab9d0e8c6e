#include "hopfchw/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hopfchw {

namespace {
constexpr const char* kTensorSep = "⊗";  // ⊗
}

BasedSpace::BasedSpace(std::vector<std::string> labels)
    : labels_(std::make_shared<std::vector<std::string>>(std::move(labels))) {
    std::set<std::string> seen;
    for (const auto& l : *labels_)
        if (!seen.insert(l).second)
            throw LinalgError("duplicate basis label '" + l + "'");
}

BasedSpace unit_space() {
    static const BasedSpace k{std::vector<std::string>{"1"}};
    return k;
}

BasedSpace tensor_space(const BasedSpace& v, const BasedSpace& w) {
    std::vector<std::string> labels;
    labels.reserve(v.dim() * w.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j)
            labels.push_back(v.label(i) + kTensorSep + w.label(j));
    return BasedSpace(std::move(labels));
}

BasedSpace tensor_power(const BasedSpace& v, std::size_t n) {
    if (n == 0) return unit_space();
    BasedSpace out = v;
    for (std::size_t i = 1; i < n; ++i) out = tensor_space(out, v);
    return out;
}

// ---- Vec -------------------------------------------------------------------

Vec Vec::basis(std::size_t dim, std::size_t i) {
    Vec v(dim);
    v.set(i, Scalar(1));
    return v;
}

Vec Vec::from_sorted_unique(std::size_t dim,
                            const std::vector<std::pair<std::size_t, Scalar>>& items) {
    Vec v(dim);
    for (const auto& [i, c] : items) {
        if (i >= dim) throw LinalgError("vector index out of range");
        v.coef_.emplace_hint(v.coef_.end(), i, c);
    }
    return v;
}

Scalar Vec::at(std::size_t i) const {
    auto it = coef_.find(i);
    return it == coef_.end() ? Scalar() : it->second;
}

void Vec::add(std::size_t i, const Scalar& c) {
    if (i >= dim_) throw LinalgError("vector index out of range");
    auto it = coef_.find(i);
    if (it == coef_.end()) {
        if (!c.is_zero()) coef_.emplace(i, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coef_.erase(it);
}

void Vec::set(std::size_t i, const Scalar& c) {
    if (i >= dim_) throw LinalgError("vector index out of range");
    if (c.is_zero())
        coef_.erase(i);
    else
        coef_[i] = c;
}

Vec Vec::operator+(const Vec& o) const {
    if (dim_ != o.dim_) throw LinalgError("vector dimension mismatch");
    Vec out = *this;
    for (const auto& [i, c] : o.coef_) out.add(i, c);
    return out;
}

Vec Vec::operator-(const Vec& o) const { return *this + (-o); }

Vec Vec::operator-() const {
    Vec out(dim_);
    for (const auto& [i, c] : coef_) out.coef_.emplace(i, -c);
    return out;
}

Vec Vec::scaled(const Scalar& c) const {
    Vec out(dim_);
    if (c.is_zero()) return out;
    for (const auto& [i, a] : coef_) out.coef_.emplace(i, a * c);
    return out;
}

bool Vec::operator==(const Vec& o) const { return dim_ == o.dim_ && coef_ == o.coef_; }

std::string Vec::str(const BasedSpace& space) const {
    if (coef_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : coef_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "·" << space.label(i);
    }
    return os.str();
}

Vec tensor_vec(const Vec& a, const Vec& b) {
    Vec out(a.dim() * b.dim());
    for (const auto& [i, ci] : a.entries())
        for (const auto& [j, cj] : b.entries()) out.add(i * b.dim() + j, ci * cj);
    return out;
}

// ---- LinMap ----------------------------------------------------------------

LinMap::LinMap(BasedSpace source, BasedSpace target)
    : source_(std::move(source)), target_(std::move(target)), cols_(source_.dim()) {}

LinMap LinMap::zero(const BasedSpace& source, const BasedSpace& target) {
    return LinMap(source, target);
}

LinMap LinMap::identity(const BasedSpace& space) {
    LinMap f(space, space);
    for (std::size_t i = 0; i < space.dim(); ++i) f.cols_[i].emplace(i, Scalar(1));
    return f;
}

LinMap LinMap::from_columns(const BasedSpace& source, const BasedSpace& target,
                            const std::vector<Vec>& columns) {
    if (columns.size() != source.dim())
        throw LinalgError("column count does not match source dimension");
    LinMap f(source, target);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].dim() != target.dim())
            throw LinalgError("column dimension does not match target");
        for (const auto& [i, c] : columns[j].entries()) f.cols_[j].emplace(i, c);
    }
    return f;
}

Scalar LinMap::entry(std::size_t row, std::size_t col) const {
    const auto& colmap = cols_.at(col);
    auto it = colmap.find(row);
    return it == colmap.end() ? Scalar() : it->second;
}

void LinMap::add_entry(std::size_t row, std::size_t col, const Scalar& c) {
    if (row >= target_.dim() || col >= source_.dim())
        throw LinalgError("matrix index out of range");
    auto& colmap = cols_[col];
    auto it = colmap.find(row);
    if (it == colmap.end()) {
        if (!c.is_zero()) colmap.emplace(row, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) colmap.erase(it);
}

Vec LinMap::column_vec(std::size_t j) const {
    Vec v(target_.dim());
    for (const auto& [i, c] : cols_.at(j)) v.set(i, c);
    return v;
}

std::size_t LinMap::entry_count() const {
    std::size_t n = 0;
    for (const auto& col : cols_) n += col.size();
    return n;
}

bool LinMap::is_zero() const { return entry_count() == 0; }

Vec LinMap::apply(const Vec& v) const {
    if (v.dim() != source_.dim()) throw LinalgError("apply: dimension mismatch");
    Vec out(target_.dim());
    for (const auto& [j, cj] : v.entries())
        for (const auto& [i, a] : cols_[j]) out.add(i, a * cj);
    return out;
}

LinMap LinMap::compose(const LinMap& inner) const {
    if (inner.target_ != source_)
        throw LinalgError("compose: inner target does not match outer source");
    LinMap out(inner.source_, target_);
    for (std::size_t j = 0; j < inner.cols_.size(); ++j)
        for (const auto& [k, c] : inner.cols_[j])
            for (const auto& [i, a] : cols_[k]) out.add_entry(i, j, a * c);
    return out;
}

LinMap LinMap::operator+(const LinMap& o) const {
    if (source_ != o.source_ || target_ != o.target_)
        throw LinalgError("map addition: space mismatch");
    LinMap out = *this;
    for (std::size_t j = 0; j < o.cols_.size(); ++j)
        for (const auto& [i, c] : o.cols_[j]) out.add_entry(i, j, c);
    return out;
}

LinMap LinMap::operator-(const LinMap& o) const { return *this + (-o); }

LinMap LinMap::operator-() const {
    LinMap out(source_, target_);
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (const auto& [i, c] : cols_[j]) out.cols_[j].emplace(i, -c);
    return out;
}

LinMap LinMap::scaled(const Scalar& c) const {
    LinMap out(source_, target_);
    if (c.is_zero()) return out;
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (const auto& [i, a] : cols_[j]) out.cols_[j].emplace(i, a * c);
    return out;
}

bool LinMap::operator==(const LinMap& o) const {
    return source_ == o.source_ && target_ == o.target_ && cols_ == o.cols_;
}

LinMap tensor_map(const LinMap& f, const LinMap& g) {
    LinMap out(tensor_space(f.source(), g.source()), tensor_space(f.target(), g.target()));
    const std::size_t gs = g.source().dim(), gt = g.target().dim();
    for (std::size_t jf = 0; jf < f.source().dim(); ++jf) {
        if (f.column(jf).empty()) continue;
        for (std::size_t jg = 0; jg < gs; ++jg) {
            for (const auto& [rf, cf] : f.column(jf))
                for (const auto& [rg, cg] : g.column(jg))
                    out.add_entry(rf * gt + rg, jf * gs + jg, cf * cg);
        }
    }
    return out;
}

LinMap tensor_many(const std::vector<LinMap>& fs) {
    if (fs.empty()) throw LinalgError("tensor_many: empty factor list");
    LinMap out = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) out = tensor_map(out, fs[i]);
    return out;
}

LinMap leg_permutation(const std::vector<BasedSpace>& spaces,
                       const std::vector<std::size_t>& out_to_in) {
    if (spaces.size() != out_to_in.size())
        throw LinalgError("leg_permutation: arity mismatch");
    std::vector<std::size_t> dims;
    dims.reserve(spaces.size());
    BasedSpace src = spaces[0];
    dims.push_back(spaces[0].dim());
    for (std::size_t k = 1; k < spaces.size(); ++k) {
        src = tensor_space(src, spaces[k]);
        dims.push_back(spaces[k].dim());
    }
    BasedSpace tgt = spaces[out_to_in[0]];
    for (std::size_t k = 1; k < spaces.size(); ++k)
        tgt = tensor_space(tgt, spaces[out_to_in[k]]);

    std::vector<std::size_t> out_dims(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) out_dims[k] = dims[out_to_in[k]];

    LinMap f(src, tgt);
    for (std::size_t j = 0; j < src.dim(); ++j) {
        auto parts = legs::split(j, dims);
        std::vector<std::size_t> shuffled(parts.size());
        for (std::size_t k = 0; k < parts.size(); ++k) shuffled[k] = parts[out_to_in[k]];
        f.add_entry(legs::join(shuffled, out_dims), j, Scalar(1));
    }
    return f;
}

LinMap unit_left_iso(const BasedSpace& v) {
    LinMap f(tensor_space(unit_space(), v), v);
    for (std::size_t i = 0; i < v.dim(); ++i) f.add_entry(i, i, Scalar(1));
    return f;
}

LinMap unit_right_iso(const BasedSpace& v) {
    LinMap f(tensor_space(v, unit_space()), v);
    for (std::size_t i = 0; i < v.dim(); ++i) f.add_entry(i, i, Scalar(1));
    return f;
}

LinMap unit_left_intro(const BasedSpace& v) {
    LinMap f(v, tensor_space(unit_space(), v));
    for (std::size_t i = 0; i < v.dim(); ++i) f.add_entry(i, i, Scalar(1));
    return f;
}

LinMap unit_right_intro(const BasedSpace& v) {
    LinMap f(v, tensor_space(v, unit_space()));
    for (std::size_t i = 0; i < v.dim(); ++i) f.add_entry(i, i, Scalar(1));
    return f;
}

LinMap scalar_mult_iso() {
    LinMap f(tensor_space(unit_space(), unit_space()), unit_space());
    f.add_entry(0, 0, Scalar(1));
    return f;
}

// ---- Gaussian elimination engine -------------------------------------------

namespace {

using SparseRow = std::map<std::size_t, Scalar>;

struct RrefResult {
    std::vector<SparseRow> rows;          // reduced nonzero rows, one pivot each
    std::vector<Vec> rhs;                 // reduced right-hand sides (may be empty)
    std::vector<std::size_t> pivot_cols;  // ascending
    std::vector<Vec> dropped_rhs;         // rhs parts of rows that became zero
};

// Reduced row echelon form with deterministic pivoting: columns are scanned
// left to right, the first remaining row with a nonzero entry wins.
RrefResult rref(std::vector<SparseRow> rows, std::size_t ncols, std::vector<Vec> rhs) {
    const bool with_rhs = !rhs.empty();
    if (with_rhs && rhs.size() != rows.size())
        throw LinalgError("rref: rhs row count mismatch");
    RrefResult out;
    std::size_t next = 0;  // rows below `next` are settled
    for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r) {
            auto it = rows[r].find(col);
            if (it != rows[r].end()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[next], rows[pivot]);
        if (with_rhs) std::swap(rhs[next], rhs[pivot]);

        Scalar lead = rows[next].at(col);
        Scalar inv = lead.inverse();
        for (auto& [c, v] : rows[next]) v *= inv;
        if (with_rhs) rhs[next] = rhs[next].scaled(inv);

        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end()) continue;
            Scalar factor = it->second;
            for (const auto& [c, v] : rows[next]) {
                auto jt = rows[r].find(c);
                if (jt == rows[r].end()) {
                    Scalar nv = -(factor * v);
                    if (!nv.is_zero()) rows[r].emplace(c, nv);
                } else {
                    jt->second -= factor * v;
                    if (jt->second.is_zero()) rows[r].erase(jt);
                }
            }
            if (with_rhs) rhs[r] = rhs[r] - rhs[next].scaled(factor);
        }
        out.pivot_cols.push_back(col);
        ++next;
    }
    for (std::size_t r = 0; r < next; ++r) {
        out.rows.push_back(std::move(rows[r]));
        if (with_rhs) out.rhs.push_back(std::move(rhs[r]));
    }
    if (with_rhs)
        for (std::size_t r = next; r < rows.size(); ++r)
            out.dropped_rhs.push_back(std::move(rhs[r]));
    return out;
}

std::vector<SparseRow> matrix_rows(const LinMap& f) {
    std::vector<SparseRow> rows(f.target().dim());
    for (std::size_t j = 0; j < f.source().dim(); ++j)
        for (const auto& [i, c] : f.column(j)) rows[i].emplace(j, c);
    return rows;
}

std::vector<std::size_t> free_columns(std::size_t ncols, const std::vector<std::size_t>& pivots) {
    std::vector<std::size_t> frees;
    std::size_t pi = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (pi < pivots.size() && pivots[pi] == c)
            ++pi;
        else
            frees.push_back(c);
    }
    return frees;
}

}  // namespace

std::size_t rank(const LinMap& f) {
    return rref(matrix_rows(f), f.source().dim(), {}).pivot_cols.size();
}

std::vector<Vec> kernel(const LinMap& f) {
    auto r = rref(matrix_rows(f), f.source().dim(), {});
    auto frees = free_columns(f.source().dim(), r.pivot_cols);
    std::vector<Vec> basis;
    basis.reserve(frees.size());
    for (std::size_t fc : frees) {
        Vec v(f.source().dim());
        v.set(fc, Scalar(1));
        for (std::size_t row = 0; row < r.rows.size(); ++row) {
            auto it = r.rows[row].find(fc);
            if (it != r.rows[row].end()) v.set(r.pivot_cols[row], -it->second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> image(const LinMap& f) {
    auto r = rref(matrix_rows(f), f.source().dim(), {});
    std::vector<Vec> basis;
    basis.reserve(r.pivot_cols.size());
    for (std::size_t c : r.pivot_cols) basis.push_back(f.column_vec(c));
    return basis;
}

Quotient quotient(const BasedSpace& space, const std::vector<Vec>& subspace) {
    std::vector<SparseRow> rows;
    rows.reserve(subspace.size());
    for (const auto& v : subspace) {
        if (v.dim() != space.dim())
            throw LinalgError("quotient: subspace vector has wrong dimension");
        rows.push_back(v.entries());
    }
    auto r = rref(std::move(rows), space.dim(), {});
    auto frees = free_columns(space.dim(), r.pivot_cols);

    std::vector<std::string> qlabels;
    qlabels.reserve(frees.size());
    for (std::size_t c : frees) qlabels.push_back(space.label(c));
    BasedSpace q(std::move(qlabels));

    std::map<std::size_t, std::size_t> free_index;
    for (std::size_t k = 0; k < frees.size(); ++k) free_index.emplace(frees[k], k);

    LinMap proj(space, q);
    for (std::size_t k = 0; k < frees.size(); ++k) proj.add_entry(k, frees[k], Scalar(1));
    for (std::size_t row = 0; row < r.rows.size(); ++row) {
        std::size_t pc = r.pivot_cols[row];
        for (const auto& [c, v] : r.rows[row]) {
            if (c == pc) continue;
            proj.add_entry(free_index.at(c), pc, -v);
        }
    }

    LinMap section(q, space);
    for (std::size_t k = 0; k < frees.size(); ++k) section.add_entry(frees[k], k, Scalar(1));
    return Quotient{std::move(q), std::move(proj), std::move(section)};
}

std::optional<Vec> solve_affine(const LinMap& f, const Vec& y,
                                const std::vector<LinMap>& homogeneous_constraints) {
    if (y.dim() != f.target().dim()) throw LinalgError("solve_affine: rhs dimension mismatch");
    std::vector<SparseRow> rows = matrix_rows(f);
    std::vector<Vec> rhs(rows.size(), Vec(1));
    for (const auto& [i, c] : y.entries()) rhs[i].set(0, c);
    for (const auto& g : homogeneous_constraints) {
        if (g.source() != f.source())
            throw LinalgError("solve_affine: constraint source mismatch");
        auto grows = matrix_rows(g);
        for (auto& row : grows) {
            rows.push_back(std::move(row));
            rhs.emplace_back(1);
        }
    }
    auto r = rref(std::move(rows), f.source().dim(), std::move(rhs));
    for (const auto& d : r.dropped_rhs)
        if (!d.is_zero()) return std::nullopt;  // inconsistent
    Vec x(f.source().dim());
    for (std::size_t row = 0; row < r.rows.size(); ++row) x.set(r.pivot_cols[row], r.rhs[row].at(0));
    return x;
}

std::optional<LinMap> inverse_of(const LinMap& f) {
    if (f.source().dim() != f.target().dim()) return std::nullopt;
    auto inv = left_inverse_of(f);
    if (!inv) return std::nullopt;
    return inv;
}

std::optional<LinMap> left_inverse_of(const LinMap& f) {
    const std::size_t n = f.target().dim();
    std::vector<SparseRow> rows = matrix_rows(f);
    std::vector<Vec> rhs;
    rhs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rhs.push_back(Vec::basis(n, i));
    auto r = rref(std::move(rows), f.source().dim(), std::move(rhs));
    if (r.pivot_cols.size() != f.source().dim()) return std::nullopt;  // not injective
    LinMap p(f.target(), f.source());
    for (std::size_t row = 0; row < r.rows.size(); ++row)
        for (const auto& [col, c] : r.rhs[row].entries())
            p.add_entry(r.pivot_cols[row], col, c);
    return p;
}

// ---- Tensor-leg utilities ----------------------------------------------------

namespace legs {

std::vector<std::size_t> split(std::size_t index, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> parts(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        parts[k] = index % dims[k];
        index /= dims[k];
    }
    return parts;
}

std::size_t join(const std::vector<std::size_t>& parts, const std::vector<std::size_t>& dims) {
    std::size_t index = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + parts[k];
    return index;
}

namespace {

bool is_identity_map(const LinMap& f) {
    if (f.source().dim() != f.target().dim()) return false;
    if (f.entry_count() != f.source().dim()) return false;
    for (std::size_t j = 0; j < f.source().dim(); ++j) {
        const auto& col = f.column(j);
        auto it = col.begin();
        if (it == col.end() || it->first != j || !it->second.is_one()) return false;
    }
    return true;
}

}  // namespace

Vec apply_factors(const std::vector<const LinMap*>& fs, const Vec& v) {
    std::vector<std::size_t> src_dims, tgt_dims;
    std::size_t src_total = 1;
    for (const auto* f : fs) {
        src_dims.push_back(f->source().dim());
        tgt_dims.push_back(f->target().dim());
        src_total *= src_dims.back();
    }
    if (v.dim() != src_total) throw LinalgError("apply_factors: dimension mismatch");
    // one slot per pass keeps the work linear in the running support;
    // identity slots are skipped outright
    Vec cur = v;
    std::size_t post = src_total;
    std::size_t pre = 1;
    for (std::size_t k = 0; k < fs.size(); ++k) {
        post /= src_dims[k];
        if (is_identity_map(*fs[k])) {
            pre *= tgt_dims[k];
            continue;
        }
        std::vector<std::pair<std::size_t, Scalar>> buf;
        buf.reserve(cur.support_size());
        for (const auto& [idx, c] : cur.entries()) {
            std::size_t suffix = idx % post;
            std::size_t rest = idx / post;
            std::size_t s = rest % src_dims[k];
            std::size_t prefix = rest / src_dims[k];
            for (const auto& [row, a] : fs[k]->column(s))
                buf.emplace_back((prefix * tgt_dims[k] + row) * post + suffix, c * a);
        }
        std::sort(buf.begin(), buf.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<std::size_t, Scalar>> merged;
        merged.reserve(buf.size());
        for (std::size_t i = 0; i < buf.size();) {
            Scalar sum = buf[i].second;
            std::size_t idx = buf[i].first;
            for (++i; i < buf.size() && buf[i].first == idx; ++i) sum += buf[i].second;
            if (!sum.is_zero()) merged.emplace_back(idx, sum);
        }
        cur = Vec::from_sorted_unique(pre * tgt_dims[k] * post, merged);
        pre *= tgt_dims[k];
    }
    return cur;
}

Vec permute(const Vec& v, const std::vector<std::size_t>& dims,
            const std::vector<std::size_t>& out_to_in) {
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    if (v.dim() != total) throw LinalgError("permute: dimension mismatch");
    std::vector<std::size_t> out_dims(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) out_dims[k] = dims[out_to_in[k]];
    std::vector<std::pair<std::size_t, Scalar>> buf;
    buf.reserve(v.support_size());
    std::vector<std::size_t> shuffled(dims.size());
    for (const auto& [idx, c] : v.entries()) {
        auto parts = split(idx, dims);
        for (std::size_t k = 0; k < dims.size(); ++k) shuffled[k] = parts[out_to_in[k]];
        buf.emplace_back(join(shuffled, out_dims), c);
    }
    std::sort(buf.begin(), buf.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return Vec::from_sorted_unique(total, buf);
}

Vec rotate_right(const Vec& v, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> perm(dims.size());
    perm[0] = dims.size() - 1;
    for (std::size_t k = 1; k < dims.size(); ++k) perm[k] = k - 1;
    return permute(v, dims, perm);
}

}  // namespace legs

}  // namespace hopfchw
