#include "hopfchw/hopf.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hopfchw {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw HopfError(msg);
}

void check_shapes(const HopfAlgebra& h) {
    const auto& H = h.space;
    auto HH = tensor_space(H, H);
    require(h.mult.source() == HH && h.mult.target() == H, "mult has wrong shape");
    require(h.unit.dim() == H.dim(), "unit has wrong dimension");
    require(h.comult.source() == H && h.comult.target() == HH, "comult has wrong shape");
    require(h.counit.source() == H && h.counit.target() == unit_space(), "counit has wrong shape");
    require(h.antipode.source() == H && h.antipode.target() == H, "antipode has wrong shape");
    require(h.antipode_inv.source() == H && h.antipode_inv.target() == H,
            "antipode inverse has wrong shape");
}

}  // namespace

LinMap flip_map(const BasedSpace& v, const BasedSpace& w) {
    return leg_permutation({v, w}, {1, 0});
}

std::vector<std::string> check_hopf_axioms(const HopfAlgebra& h) {
    check_shapes(h);
    std::vector<std::string> bad;
    const auto& H = h.space;
    auto id = LinMap::identity(H);
    auto idK = LinMap::identity(unit_space());

    // associativity: μ∘(μ⊗id) = μ∘(id⊗μ)
    if (h.mult.compose(tensor_map(h.mult, id)) != h.mult.compose(tensor_map(id, h.mult)))
        bad.push_back("associativity");

    // unitality: μ(1⊗h) = h = μ(h⊗1)
    bool unital = true;
    for (std::size_t i = 0; i < H.dim(); ++i) {
        Vec e = Vec::basis(H.dim(), i);
        if (h.mult.apply(tensor_vec(h.unit, e)) != e) unital = false;
        if (h.mult.apply(tensor_vec(e, h.unit)) != e) unital = false;
    }
    if (!unital) bad.push_back("unitality");

    // coassociativity: (Δ⊗id)∘Δ = (id⊗Δ)∘Δ
    if (tensor_map(h.comult, id).compose(h.comult) != tensor_map(id, h.comult).compose(h.comult))
        bad.push_back("coassociativity");

    // counitality: (ε⊗id)∘Δ = id = (id⊗ε)∘Δ
    if (unit_left_iso(H).compose(tensor_map(h.counit, id)).compose(h.comult) != id ||
        unit_right_iso(H).compose(tensor_map(id, h.counit)).compose(h.comult) != id)
        bad.push_back("counitality");

    // bialgebra compatibility: Δ and ε are algebra morphisms
    {
        auto mid_flip = leg_permutation({H, H, H, H}, {0, 2, 1, 3});
        auto mult_hh = tensor_map(h.mult, h.mult).compose(mid_flip);
        bool ok = h.comult.compose(h.mult) ==
                  mult_hh.compose(tensor_map(h.comult, h.comult));
        if (h.comult.apply(h.unit) != tensor_vec(h.unit, h.unit)) ok = false;
        auto eps_mult = h.counit.compose(h.mult);
        auto eps_eps = scalar_mult_iso().compose(tensor_map(h.counit, h.counit));
        if (eps_mult != eps_eps) ok = false;
        Vec one_k = Vec::basis(1, 0);
        if (h.counit.apply(h.unit) != one_k) ok = false;
        if (!ok) bad.push_back("bialgebra-compatibility");
    }

    // antipode: μ∘(S⊗id)∘Δ = η∘ε = μ∘(id⊗S)∘Δ
    {
        auto eta_eps = convolution_unit(h.coalgebra(), h.algebra());
        if (h.mult.compose(tensor_map(h.antipode, id)).compose(h.comult) != eta_eps ||
            h.mult.compose(tensor_map(id, h.antipode)).compose(h.comult) != eta_eps)
            bad.push_back("antipode");
    }

    // S∘S⁻¹ = S⁻¹∘S = id
    if (h.antipode.compose(h.antipode_inv) != id || h.antipode_inv.compose(h.antipode) != id)
        bad.push_back("antipode-inverse");

    return bad;
}

LinMap iterated_comult(const HopfAlgebra& h, std::size_t m) {
    LinMap out = LinMap::identity(h.space);
    for (std::size_t k = 0; k < m; ++k) {
        // expand the last leg
        std::vector<LinMap> factors;
        for (std::size_t i = 0; i < k; ++i) factors.push_back(LinMap::identity(h.space));
        factors.push_back(h.comult);
        out = tensor_many(factors).compose(out);
    }
    return out;
}

LinMap convolve(const Coalgebra& c, const Algebra& a, const LinMap& f, const LinMap& g) {
    return a.mult.compose(tensor_map(f, g)).compose(c.comult);
}

ConvMap convolve(const ConvMap& f, const ConvMap& g) {
    return {f.source, f.target, convolve(f.source, f.target, f.map, g.map)};
}

LinMap convolution_unit(const Coalgebra& c, const Algebra& a) {
    LinMap eta(unit_space(), a.space);
    for (const auto& [i, v] : a.unit.entries()) eta.add_entry(i, 0, v);
    return eta.compose(c.counit);
}

std::optional<LinMap> convolution_inverse(const Coalgebra& c, const Algebra& a, const LinMap& f) {
    // Unknown g as a vectorized Hom(C,A): index = col·dim(A) + row.
    const std::size_t dc = c.space.dim(), da = a.space.dim();
    const std::size_t n = dc * da;
    std::vector<std::string> hom_labels(n);
    for (std::size_t i = 0; i < n; ++i) hom_labels[i] = "h" + std::to_string(i);
    BasedSpace hom(hom_labels);

    auto vectorize = [&](const LinMap& m) {
        Vec v(n);
        for (std::size_t j = 0; j < dc; ++j)
            for (const auto& [i, val] : m.column(j)) v.set(j * da + i, val);
        return v;
    };
    auto elementary = [&](std::size_t idx) {
        LinMap e(c.space, a.space);
        e.add_entry(idx % da, idx / da, Scalar(1));
        return e;
    };

    // Stack the two linear conditions f*g = η∘ε and g*f = η∘ε.
    std::vector<std::string> row_labels(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) row_labels[i] = "r" + std::to_string(i);
    BasedSpace rows(row_labels);
    LinMap op(hom, rows);
    for (std::size_t idx = 0; idx < n; ++idx) {
        auto e = elementary(idx);
        Vec lhs = vectorize(convolve(c, a, f, e));
        Vec rhs = vectorize(convolve(c, a, e, f));
        for (const auto& [i, v] : lhs.entries()) op.add_entry(i, idx, v);
        for (const auto& [i, v] : rhs.entries()) op.add_entry(n + i, idx, v);
    }
    Vec target(2 * n);
    Vec eta_eps = vectorize(convolution_unit(c, a));
    for (const auto& [i, v] : eta_eps.entries()) {
        target.set(i, v);
        target.set(n + i, v);
    }
    auto sol = solve_affine(op, target);
    if (!sol) return std::nullopt;
    LinMap g(c.space, a.space);
    for (const auto& [idx, v] : sol->entries()) g.add_entry(idx % da, idx / da, v);
    return g;
}

// ---- Groups ------------------------------------------------------------------

void validate_group(const GroupTable& g) {
    const std::size_t n = g.order();
    require(n > 0 && n <= 24, "group order must be between 1 and 24");
    require(g.table.size() == n, "group table has wrong row count");
    for (const auto& row : g.table) {
        require(row.size() == n, "group table has wrong column count");
        for (auto v : row) require(v < n, "group table entry out of range");
    }
    require(g.identity < n, "identity index out of range");
    for (std::size_t i = 0; i < n; ++i)
        require(g.table[g.identity][i] == i && g.table[i][g.identity] == i,
                "identity fails in group table");
    require(g.inverse.size() == n, "inverse list has wrong size");
    for (std::size_t i = 0; i < n; ++i)
        require(g.table[i][g.inverse[i]] == g.identity && g.table[g.inverse[i]][i] == g.identity,
                "inverses fail in group table");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                require(g.table[g.table[i][j]][k] == g.table[i][g.table[j][k]],
                        "associativity fails in group table");
}

GroupTable GroupTable::cyclic(std::size_t n) {
    GroupTable g;
    for (std::size_t i = 0; i < n; ++i) g.labels.push_back("c" + std::to_string(i));
    if (n >= 1) g.labels[0] = "e";
    g.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
    g.identity = 0;
    g.inverse.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.inverse[i] = (n - i) % n;
    validate_group(g);
    return g;
}

GroupTable GroupTable::product(const GroupTable& a, const GroupTable& b) {
    GroupTable g;
    const std::size_t n = a.order() * b.order();
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < b.order(); ++j)
            g.labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
    g.table.assign(n, std::vector<std::size_t>(n));
    auto idx = [&](std::size_t i, std::size_t j) { return i * b.order() + j; };
    for (std::size_t i1 = 0; i1 < a.order(); ++i1)
        for (std::size_t j1 = 0; j1 < b.order(); ++j1)
            for (std::size_t i2 = 0; i2 < a.order(); ++i2)
                for (std::size_t j2 = 0; j2 < b.order(); ++j2)
                    g.table[idx(i1, j1)][idx(i2, j2)] = idx(a.table[i1][i2], b.table[j1][j2]);
    g.identity = idx(a.identity, b.identity);
    g.inverse.resize(n);
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < b.order(); ++j)
            g.inverse[idx(i, j)] = idx(a.inverse[i], b.inverse[j]);
    validate_group(g);
    return g;
}

GroupTable GroupTable::symmetric3() {
    // Permutations of {0,1,2} in one-line notation; composition (pq)(x) = p(q(x)).
    const std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    const std::vector<std::string> names = {"e", "r", "r2", "s01", "s12", "s02"};
    GroupTable g;
    g.labels = names;
    const std::size_t n = perms.size();
    g.table.assign(n, std::vector<std::size_t>(n));
    auto find = [&](const std::array<int, 3>& p) {
        for (std::size_t k = 0; k < n; ++k)
            if (perms[k] == p) return k;
        throw HopfError("S3 table construction failed");
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::array<int, 3> comp{};
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            g.table[i][j] = find(comp);
        }
    g.identity = 0;
    g.inverse.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.table[i][j] == g.identity) g.inverse[i] = j;
    validate_group(g);
    return g;
}

// ---- Builders ------------------------------------------------------------------

namespace {

HopfAlgebra checked(HopfAlgebra h, const std::string& what) {
    auto bad = check_hopf_axioms(h);
    if (!bad.empty()) {
        std::string msg = what + " violates:";
        for (const auto& b : bad) msg += " " + b;
        throw HopfError(msg);
    }
    return h;
}

LinMap invert_or_throw(const LinMap& s, const std::string& what) {
    auto inv = inverse_of(s);
    if (!inv) throw HopfError(what + ": antipode is singular");
    return *inv;
}

}  // namespace

HopfAlgebra build_group_algebra(const GroupTable& g, FieldSpec field) {
    validate_group(g);
    const std::size_t n = g.order();
    BasedSpace H{g.labels};
    auto HH = tensor_space(H, H);
    Scalar one(Rational(1), field);

    HopfAlgebra h;
    h.space = H;
    h.mult = LinMap(HH, H);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h.mult.add_entry(g.table[i][j], i * n + j, one);
    h.unit = Vec(n);
    h.unit.set(g.identity, one);
    h.comult = LinMap(H, HH);
    for (std::size_t i = 0; i < n; ++i) h.comult.add_entry(i * n + i, i, one);
    h.counit = LinMap(H, unit_space());
    for (std::size_t i = 0; i < n; ++i) h.counit.add_entry(0, i, one);
    h.antipode = LinMap(H, H);
    for (std::size_t i = 0; i < n; ++i) h.antipode.add_entry(g.inverse[i], i, one);
    h.antipode_inv = invert_or_throw(h.antipode, "group algebra");
    return checked(std::move(h), "group algebra");
}

HopfAlgebra build_function_algebra(const GroupTable& g, FieldSpec field) {
    validate_group(g);
    const std::size_t n = g.order();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& l : g.labels) labels.push_back("d_" + l);
    BasedSpace H{labels};
    auto HH = tensor_space(H, H);
    Scalar one(Rational(1), field);

    HopfAlgebra h;
    h.space = H;
    h.mult = LinMap(HH, H);
    for (std::size_t i = 0; i < n; ++i) h.mult.add_entry(i, i * n + i, one);
    h.unit = Vec(n);
    for (std::size_t i = 0; i < n; ++i) h.unit.set(i, one);
    h.comult = LinMap(H, HH);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) h.comult.add_entry(u * n + v, g.table[u][v], one);
    h.counit = LinMap(H, unit_space());
    h.counit.add_entry(0, g.identity, one);
    h.antipode = LinMap(H, H);
    for (std::size_t i = 0; i < n; ++i) h.antipode.add_entry(g.inverse[i], i, one);
    h.antipode_inv = invert_or_throw(h.antipode, "function algebra");
    return checked(std::move(h), "function algebra");
}

HopfAlgebra build_sweedler_h4(FieldSpec field) {
    BasedSpace H{std::vector<std::string>{"1", "g", "x", "gx"}};
    auto HH = tensor_space(H, H);
    Scalar one(Rational(1), field), minus(Rational(-1), field);
    enum { u1 = 0, ug = 1, ux = 2, ugx = 3 };

    HopfAlgebra h;
    h.space = H;
    h.mult = LinMap(HH, H);
    // Multiplication table from g² = 1, x² = 0, xg = −gx.
    struct Entry {
        int i, j, k, sign;
    };
    const std::vector<Entry> table = {
        {u1, u1, u1, 1},   {u1, ug, ug, 1},   {u1, ux, ux, 1},   {u1, ugx, ugx, 1},
        {ug, u1, ug, 1},   {ug, ug, u1, 1},   {ug, ux, ugx, 1},  {ug, ugx, ux, 1},
        {ux, u1, ux, 1},   {ux, ug, ugx, -1}, {ugx, u1, ugx, 1}, {ugx, ug, ux, -1},
        // x·x = 0, x·gx = x(gx) = (xg)x = −gx·x... both vanish via x² = 0
    };
    for (const auto& e : table)
        h.mult.add_entry(e.k, e.i * 4 + e.j, e.sign > 0 ? one : minus);
    h.unit = Vec(4);
    h.unit.set(u1, one);
    h.comult = LinMap(H, HH);
    // Δ1 = 1⊗1, Δg = g⊗g, Δx = x⊗1 + g⊗x, Δ(gx) = gx⊗g + 1⊗gx
    h.comult.add_entry(u1 * 4 + u1, u1, one);
    h.comult.add_entry(ug * 4 + ug, ug, one);
    h.comult.add_entry(ux * 4 + u1, ux, one);
    h.comult.add_entry(ug * 4 + ux, ux, one);
    h.comult.add_entry(ugx * 4 + ug, ugx, one);
    h.comult.add_entry(u1 * 4 + ugx, ugx, one);
    h.counit = LinMap(H, unit_space());
    h.counit.add_entry(0, u1, one);
    h.counit.add_entry(0, ug, one);
    h.antipode = LinMap(H, H);
    // S(1) = 1, S(g) = g, S(x) = −gx, S(gx) = x
    h.antipode.add_entry(u1, u1, one);
    h.antipode.add_entry(ug, ug, one);
    h.antipode.add_entry(ugx, ux, minus);
    h.antipode.add_entry(ux, ugx, one);
    h.antipode_inv = invert_or_throw(h.antipode, "Sweedler H4");
    return checked(std::move(h), "Sweedler H4");
}

LinMap adjoint_coaction(const HopfAlgebra& h) {
    const auto& H = h.space;
    auto id = LinMap::identity(H);
    auto delta2 = iterated_comult(h, 2);  // H → H⊗H⊗H
    auto perm = leg_permutation({H, H, H}, {1, 0, 2});
    auto s_mid = tensor_many({id, h.antipode, id});
    auto mult_right = tensor_map(id, h.mult);
    LinMap ad = mult_right.compose(s_mid).compose(perm).compose(delta2);

    // Coaction axioms, checked here so callers can rely on the result.
    auto coassoc_l = tensor_map(ad, id).compose(ad);
    auto coassoc_r = tensor_map(LinMap::identity(H), h.comult).compose(ad);
    if (coassoc_l != coassoc_r) throw HopfError("adjoint coaction fails coassociativity");
    auto counit_side = unit_right_iso(H).compose(tensor_map(id, h.counit)).compose(ad);
    if (counit_side != id) throw HopfError("adjoint coaction fails counitality");
    return ad;
}

std::vector<Vec> cotrace_space(const HopfAlgebra& h) {
    auto flip = flip_map(h.space, h.space);
    return kernel(h.comult - flip.compose(h.comult));
}

bool is_cotrace(const HopfAlgebra& h, const Vec& v) {
    auto flip = flip_map(h.space, h.space);
    return (h.comult - flip.compose(h.comult)).apply(v).is_zero();
}

}  // namespace hopfchw
