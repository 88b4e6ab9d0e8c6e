#include "hopfchw/spec_io.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace hopfchw {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_error(const std::string& msg) {
    throw SpecError(SpecError::Kind::parse, msg);
}

[[noreturn]] void axiom_error(const std::string& msg) {
    throw SpecError(SpecError::Kind::axiom, msg);
}

void guard(bool cond, const std::string& msg) {
    if (!cond) throw SpecError(SpecError::Kind::guardrail, msg);
}

// ---- reading -----------------------------------------------------------------

FieldSpec read_field(const Json& j) {
    if (!j.contains("field")) return {};
    const auto& f = j.at("field");
    std::string type = f.at("type").get<std::string>();
    if (type == "Q") return {};
    if (type == "Fp") {
        auto p = f.at("p").get<std::uint64_t>();
        if (p < 2 || p > 1000000007ULL) parse_error("field modulus out of range");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) parse_error("field modulus is not prime");
        return {static_cast<std::uint32_t>(p)};
    }
    parse_error("unknown field type '" + type + "'");
}

Scalar read_scalar(const Json& j, FieldSpec field) {
    if (!j.is_string()) parse_error("scalar entries must be strings like \"3/4\"");
    return Scalar::parse(j.get<std::string>(), field);
}

std::size_t read_index(const Json& j, std::size_t bound, const std::string& what) {
    if (!j.is_number_unsigned()) parse_error(what + ": indices must be non-negative integers");
    auto v = j.get<std::size_t>();
    if (v >= bound) parse_error(what + ": index " + std::to_string(v) + " out of range");
    return v;
}

// Sparse tuples [i..., "c"]: the last element is the scalar.
void for_each_tuple(const Json& j, std::size_t arity, const std::string& what,
                    const std::function<void(const Json&)>& fn) {
    if (!j.is_array()) parse_error(what + " must be an array of tuples");
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != arity + 1)
            parse_error(what + ": expected tuples of " + std::to_string(arity) +
                        " indices and one scalar");
        fn(t);
    }
}

BasedSpace read_labels(const Json& j, const std::string& what) {
    if (!j.contains("labels")) parse_error(what + " is missing labels");
    std::vector<std::string> labels;
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    guard(!labels.empty() && labels.size() <= 64, what + ": dimension must be between 1 and 64");
    try {
        return BasedSpace(std::move(labels));
    } catch (const LinalgError& e) {
        parse_error(what + ": " + e.what());
    }
}

Vec read_vector(const Json& j, std::size_t dim, FieldSpec field, const std::string& what) {
    Vec v(dim);
    for_each_tuple(j, 1, what, [&](const Json& t) {
        v.add(read_index(t[0], dim, what), read_scalar(t[1], field));
    });
    return v;
}

// f(e_src) = Σ c e_tgt, tuples [src, tgt, "c"]
LinMap read_map(const Json& j, const BasedSpace& src, const BasedSpace& tgt, FieldSpec field,
                const std::string& what) {
    LinMap f(src, tgt);
    for_each_tuple(j, 2, what, [&](const Json& t) {
        std::size_t s = read_index(t[0], src.dim(), what);
        std::size_t r = read_index(t[1], tgt.dim(), what);
        f.add_entry(r, s, read_scalar(t[2], field));
    });
    return f;
}

Algebra read_algebra_block(const Json& j, const BasedSpace& space, FieldSpec field,
                           const std::string& what) {
    const std::size_t n = space.dim();
    Algebra alg;
    alg.space = space;
    alg.mult = LinMap(tensor_space(space, space), space);
    for_each_tuple(j.at("mult"), 3, what + ".mult", [&](const Json& t) {
        std::size_t i = read_index(t[0], n, what + ".mult");
        std::size_t jj = read_index(t[1], n, what + ".mult");
        std::size_t k = read_index(t[2], n, what + ".mult");
        alg.mult.add_entry(k, i * n + jj, read_scalar(t[3], field));
    });
    alg.unit = read_vector(j.at("unit"), n, field, what + ".unit");
    return alg;
}

LinMap read_right_coaction(const Json& j, const BasedSpace& a, const BasedSpace& h,
                           FieldSpec field, const std::string& what) {
    LinMap rho(a, tensor_space(a, h));
    for_each_tuple(j, 3, what, [&](const Json& t) {
        std::size_t src = read_index(t[0], a.dim(), what);
        std::size_t ai = read_index(t[1], a.dim(), what);
        std::size_t hi = read_index(t[2], h.dim(), what);
        rho.add_entry(ai * h.dim() + hi, src, read_scalar(t[3], field));
    });
    return rho;
}

LinMap read_left_coaction(const Json& j, const BasedSpace& a, const BasedSpace& k,
                          FieldSpec field, const std::string& what) {
    LinMap lam(a, tensor_space(k, a));
    for_each_tuple(j, 3, what, [&](const Json& t) {
        std::size_t src = read_index(t[0], a.dim(), what);
        std::size_t ki = read_index(t[1], k.dim(), what);
        std::size_t ai = read_index(t[2], a.dim(), what);
        lam.add_entry(ki * a.dim() + ai, src, read_scalar(t[3], field));
    });
    return lam;
}

HopfAlgebra read_hopf(const Json& j, FieldSpec field, const std::string& what) {
    BasedSpace H = read_labels(j, what);
    const std::size_t n = H.dim();
    HopfAlgebra h;
    h.space = H;
    Algebra alg = read_algebra_block(j, H, field, what);
    h.mult = std::move(alg.mult);
    h.unit = std::move(alg.unit);
    h.comult = LinMap(H, tensor_space(H, H));
    for_each_tuple(j.at("comult"), 3, what + ".comult", [&](const Json& t) {
        std::size_t k = read_index(t[0], n, what + ".comult");
        std::size_t i = read_index(t[1], n, what + ".comult");
        std::size_t jj = read_index(t[2], n, what + ".comult");
        h.comult.add_entry(i * n + jj, k, read_scalar(t[3], field));
    });
    h.counit = LinMap(H, unit_space());
    for_each_tuple(j.at("counit"), 1, what + ".counit", [&](const Json& t) {
        h.counit.add_entry(0, read_index(t[0], n, what + ".counit"),
                           read_scalar(t[1], field));
    });
    h.antipode = read_map(j.at("antipode"), H, H, field, what + ".antipode");
    auto inv = inverse_of(h.antipode);
    if (!inv) axiom_error(what + ": antipode is singular");
    h.antipode_inv = std::move(*inv);

    auto bad = check_hopf_axioms(h);
    if (!bad.empty()) axiom_error(what + " violates " + bad.front());
    return h;
}

// ---- writing -----------------------------------------------------------------

Json write_vector(const Vec& v) {
    Json out = Json::array();
    for (const auto& [i, c] : v.entries()) out.push_back(Json::array({i, c.str()}));
    return out;
}

Json write_map(const LinMap& f) {
    Json out = Json::array();
    for (std::size_t j = 0; j < f.source().dim(); ++j)
        for (const auto& [i, c] : f.column(j)) out.push_back(Json::array({j, i, c.str()}));
    return out;
}

Json write_mult(const LinMap& mult, std::size_t n) {
    Json out = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : mult.column(i * n + j))
                out.push_back(Json::array({i, j, k, c.str()}));
    return out;
}

Json write_right_coaction(const LinMap& rho, std::size_t nh) {
    Json out = Json::array();
    for (std::size_t src = 0; src < rho.source().dim(); ++src)
        for (const auto& [ai, c] : rho.column(src))
            out.push_back(Json::array({src, ai / nh, ai % nh, c.str()}));
    return out;
}

Json write_left_coaction(const LinMap& lam, std::size_t na) {
    Json out = Json::array();
    for (std::size_t src = 0; src < lam.source().dim(); ++src)
        for (const auto& [ka, c] : lam.column(src))
            out.push_back(Json::array({src, ka / na, ka % na, c.str()}));
    return out;
}

Json write_hopf(const HopfAlgebra& h) {
    const std::size_t n = h.space.dim();
    Json out;
    out["labels"] = h.space.labels();
    out["mult"] = write_mult(h.mult, n);
    out["unit"] = write_vector(h.unit);
    Json comult = Json::array();
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& [ij, c] : h.comult.column(k))
            comult.push_back(Json::array({k, ij / n, ij % n, c.str()}));
    out["comult"] = std::move(comult);
    Json counit = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Scalar c = h.counit.entry(0, i);
        if (!c.is_zero()) counit.push_back(Json::array({i, c.str()}));
    }
    out["counit"] = std::move(counit);
    out["antipode"] = write_map(h.antipode);
    return out;
}

}  // namespace

Fixture parse_spec(const std::string& json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const std::exception& e) {
        parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("format") || j.at("format") != "hopfchw-fixture")
        parse_error("not a hopfchw fixture document");

    Fixture f;
    try {
        f.name = j.value("name", "");
        f.field = read_field(j);
        f.hopf = std::make_shared<const HopfAlgebra>(read_hopf(j.at("hopf"), f.field, "hopf"));
        if (j.contains("external_hopf"))
            f.external = std::make_shared<const HopfAlgebra>(
                read_hopf(j.at("external_hopf"), f.field, "external_hopf"));

        const auto& ja = j.at("algebra");
        BasedSpace A = read_labels(ja, "algebra");
        Algebra alg = read_algebra_block(ja, A, f.field, "algebra");
        LinMap rho =
            read_right_coaction(ja.at("coaction"), A, f.hopf->space, f.field, "algebra.coaction");
        f.algebra =
            ComoduleAlgebra{std::move(alg), Comodule{A, f.hopf, std::move(rho), Side::right}};
        auto bad = check_comodule_algebra(f.algebra);
        if (!bad.empty()) axiom_error("algebra violates " + bad.front());

        if (ja.contains("left_coaction")) {
            if (!f.external) parse_error("left_coaction requires external_hopf");
            f.left_coaction = read_left_coaction(ja.at("left_coaction"), A, f.external->space,
                                                 f.field, "algebra.left_coaction");
            BicomoduleAlgebra bi{f.algebra.alg,
                                 Bicomodule{A, f.external, f.hopf, *f.left_coaction,
                                            f.algebra.co.coaction}};
            auto bbad = check_bicomodule_algebra(bi);
            if (!bbad.empty()) axiom_error("bicomodule violates " + bbad.front());
        }

        if (j.contains("cocycles")) {
            for (const auto& jc : j.at("cocycles")) {
                std::string name = jc.at("name").get<std::string>();
                std::string on = jc.value("on", "hopf");
                const HopfAlgebra* base = f.hopf.get();
                if (on == "external") {
                    if (!f.external) parse_error("cocycle '" + name + "' needs external_hopf");
                    base = f.external.get();
                    f.external_cocycles.insert(name);
                } else if (on != "hopf") {
                    parse_error("cocycle 'on' must be \"hopf\" or \"external\"");
                }
                const auto& S = base->space;
                LinMap gamma(tensor_space(S, S), unit_space());
                for_each_tuple(jc.at("entries"), 2, "cocycle " + name, [&](const Json& t) {
                    std::size_t i = read_index(t[0], S.dim(), name);
                    std::size_t jj = read_index(t[1], S.dim(), name);
                    gamma.add_entry(0, i * S.dim() + jj, read_scalar(t[2], f.field));
                });
                auto cbad = check_cocycle(*base, gamma);
                if (!cbad.empty())
                    axiom_error("cocycle '" + name + "' violates " + cbad.front());
                f.cocycles.emplace(std::move(name), std::move(gamma));
            }
        }

        if (j.contains("cleaving")) {
            LinMap phi = read_map(j.at("cleaving"), f.hopf->space, A, f.field, "cleaving");
            make_cleaving(*f.hopf, f.algebra, phi);  // validates
            f.cleaving = std::move(phi);
        }

        if (j.contains("morphism")) {
            const auto& jm = j.at("morphism");
            const auto& jt = jm.at("target");
            BasedSpace Abar = read_labels(jt, "morphism.target");
            Algebra talg = read_algebra_block(jt, Abar, f.field, "morphism.target");
            LinMap trho = read_right_coaction(jt.at("coaction"), Abar, f.hopf->space, f.field,
                                              "morphism.target.coaction");
            MorphismSpec m{ComoduleAlgebra{std::move(talg), Comodule{Abar, f.hopf,
                                                                     std::move(trho),
                                                                     Side::right}},
                           std::nullopt,
                           read_map(jm.at("entries"), A, Abar, f.field, "morphism")};
            auto tbad = check_comodule_algebra(m.target);
            if (!tbad.empty()) axiom_error("morphism target violates " + tbad.front());
            if (jt.contains("left_coaction")) {
                if (!f.external) parse_error("target left_coaction requires external_hopf");
                m.target_left_coaction =
                    read_left_coaction(jt.at("left_coaction"), Abar, f.external->space, f.field,
                                       "morphism.target.left_coaction");
            }
            f.morphism = std::move(m);
        }
    } catch (const SpecError&) {
        throw;
    } catch (const Json::exception& e) {
        parse_error(std::string("malformed document: ") + e.what());
    } catch (const std::exception& e) {
        axiom_error(e.what());
    }
    return f;
}

Fixture load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

std::string save_spec(const Fixture& f) {
    Json j;
    j["format"] = "hopfchw-fixture";
    j["version"] = 1;
    j["name"] = f.name;
    if (f.field.is_rational())
        j["field"] = Json{{"type", "Q"}};
    else
        j["field"] = Json{{"type", "Fp"}, {"p", f.field.p}};
    j["hopf"] = write_hopf(*f.hopf);
    if (f.external) j["external_hopf"] = write_hopf(*f.external);

    Json ja;
    const auto& A = f.algebra.alg.space;
    const std::size_t nh = f.hopf->space.dim();
    ja["labels"] = A.labels();
    ja["mult"] = write_mult(f.algebra.alg.mult, A.dim());
    ja["unit"] = write_vector(f.algebra.alg.unit);
    ja["coaction"] = write_right_coaction(f.algebra.co.coaction, nh);
    if (f.left_coaction) ja["left_coaction"] = write_left_coaction(*f.left_coaction, A.dim());
    j["algebra"] = std::move(ja);

    if (!f.cocycles.empty()) {
        Json jc = Json::array();
        for (const auto& [name, gamma] : f.cocycles) {
            Json one;
            one["name"] = name;
            one["on"] = f.cocycle_on_external(name) ? "external" : "hopf";
            const std::size_t d = f.cocycle_on_external(name) ? f.external->space.dim() : nh;
            Json entries = Json::array();
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t k = 0; k < d; ++k) {
                    Scalar c = gamma.entry(0, i * d + k);
                    if (!c.is_zero()) entries.push_back(Json::array({i, k, c.str()}));
                }
            one["entries"] = std::move(entries);
            jc.push_back(std::move(one));
        }
        j["cocycles"] = std::move(jc);
    }
    if (f.cleaving) j["cleaving"] = write_map(*f.cleaving);
    if (f.morphism) {
        Json jm;
        Json jt;
        const auto& T = f.morphism->target.alg.space;
        jt["labels"] = T.labels();
        jt["mult"] = write_mult(f.morphism->target.alg.mult, T.dim());
        jt["unit"] = write_vector(f.morphism->target.alg.unit);
        jt["coaction"] = write_right_coaction(f.morphism->target.co.coaction, nh);
        if (f.morphism->target_left_coaction)
            jt["left_coaction"] =
                write_left_coaction(*f.morphism->target_left_coaction, T.dim());
        jm["target"] = std::move(jt);
        jm["entries"] = write_map(f.morphism->map);
        j["morphism"] = std::move(jm);
    }
    return j.dump(2) + "\n";
}

void write_spec(const Fixture& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SpecError(SpecError::Kind::parse, "cannot write '" + path + "'");
    out << save_spec(f);
}

}  // namespace hopfchw
