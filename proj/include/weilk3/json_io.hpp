#pragma once

#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "weilk3/fixtures.hpp"
#include "weilk3/invariants.hpp"
#include "weilk3/kunneth.hpp"
#include "weilk3/spanmodel.hpp"
#include "weilk3/weil.hpp"

namespace weilk3 {

using json = nlohmann::json;

/// Malformed input; pointer() is the JSON pointer of the offending value.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string pointer, const std::string& what)
        : std::runtime_error((pointer.empty() ? std::string("/") : pointer) + ": " + what), pointer_(std::move(pointer)) {}
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

namespace jsonio {

inline std::string child(const std::string& ptr, std::string_view key) {
    std::string out = ptr + "/";
    for (char c : key) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

inline std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

inline const json& field(const json& obj, const std::string& ptr, const char* key) {
    if (!obj.is_object()) throw SchemaError(ptr, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(child(ptr, key), "missing field");
    return *it;
}

inline const json* optional_field(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() || it->is_null() ? nullptr : &*it;
}

inline Rat read_rat(const json& v, const std::string& ptr) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Rat(Int(std::to_string(v.get<std::uint64_t>())));
        return Rat(Int(std::to_string(v.get<std::int64_t>())));
    }
    if (!v.is_string()) throw SchemaError(ptr, "expected a rational number as a string or an integer");
    try {
        return parse_rat(v.get<std::string>());
    } catch (const std::exception& e) {
        throw SchemaError(ptr, e.what());
    }
}

inline Int read_int(const json& v, const std::string& ptr) {
    const Rat r = read_rat(v, ptr);
    if (!is_integer(r)) throw SchemaError(ptr, "expected an integer");
    return r.get_num();
}

inline long read_long(const json& v, const std::string& ptr, long lo, long hi) {
    const Int x = read_int(v, ptr);
    if (x < lo || x > hi)
        throw SchemaError(ptr, "expected an integer in " + std::to_string(lo) + ".." + std::to_string(hi));
    return x.get_si();
}

inline bool read_bool(const json& v, const std::string& ptr) {
    if (!v.is_boolean()) throw SchemaError(ptr, "expected a boolean");
    return v.get<bool>();
}

inline std::string read_string(const json& v, const std::string& ptr) {
    if (!v.is_string()) throw SchemaError(ptr, "expected a string");
    return v.get<std::string>();
}

inline const json& read_array(const json& v, const std::string& ptr) {
    if (!v.is_array()) throw SchemaError(ptr, "expected an array");
    return v;
}

inline std::string int_string(const Int& x) { return x.get_str(); }

} // namespace jsonio

inline json to_json(const RatPoly& f) {
    json out = json::array();
    for (const auto& c : f.coeffs()) out.push_back(to_string(c));
    return out;
}

/// Constant term first. `integral` rejects non-integer entries.
inline RatPoly poly_from_json(const json& v, const std::string& ptr, bool integral = false) {
    jsonio::read_array(v, ptr);
    std::vector<Rat> c;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = jsonio::child(ptr, i);
        c.push_back(integral ? Rat(jsonio::read_int(v[i], p)) : jsonio::read_rat(v[i], p));
    }
    return RatPoly(std::move(c));
}

inline json to_json(const WeilContext& ctx) {
    return {{"p", ctx.p().get_str()}, {"q", ctx.q().get_str()}, {"m", ctx.m()}};
}

/// Reads p, q (default p) and m from `obj`.
inline WeilContext context_from_json(const json& obj, const std::string& ptr) {
    const Int p = jsonio::read_int(jsonio::field(obj, ptr, "p"), jsonio::child(ptr, "p"));
    const json* qv = jsonio::optional_field(obj, "q");
    const Int q = qv ? jsonio::read_int(*qv, jsonio::child(ptr, "q")) : p;
    const long m = jsonio::read_long(jsonio::field(obj, ptr, "m"), jsonio::child(ptr, "m"), 0, 64);
    try {
        return WeilContext(p, q, static_cast<unsigned>(m));
    } catch (const Error& e) {
        throw SchemaError(jsonio::child(ptr, e.kind() == ErrorKind::NotPrime ? "p" : "q"), e.what());
    }
}

/// {"coeffs": [...], "p": .., "q": .., "m": ..}
struct PolynomialInput {
    RatPoly poly;
    WeilContext ctx;

    friend bool operator==(const PolynomialInput&, const PolynomialInput&) = default;
};

inline json to_json(const PolynomialInput& in) {
    json out = to_json(in.ctx);
    out["coeffs"] = to_json(in.poly);
    return out;
}

inline PolynomialInput polynomial_input_from_json(const json& v, const std::string& ptr = "", bool integral = true) {
    if (!v.is_object()) throw SchemaError(ptr, "expected an object");
    RatPoly f = poly_from_json(jsonio::field(v, ptr, "coeffs"), jsonio::child(ptr, "coeffs"), integral);
    if (f.is_zero()) throw SchemaError(jsonio::child(ptr, "coeffs"), "zero polynomial");
    return {std::move(f), context_from_json(v, ptr)};
}

inline json to_json(const Fixture& f) { return to_json(PolynomialInput{f.p2m, f.ctx}); }

inline json to_json(const NewtonPolygon& np) {
    json out = json::array();
    for (const auto& s : np.segments()) out.push_back({{"slope", to_string(s.slope)}, {"length", s.length}});
    return out;
}

inline NewtonPolygon polygon_from_json(const json& v, const std::string& ptr) {
    jsonio::read_array(v, ptr);
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = jsonio::child(ptr, i);
        segs.push_back({jsonio::read_rat(jsonio::field(v[i], p, "slope"), jsonio::child(p, "slope")),
                        static_cast<int>(jsonio::read_long(jsonio::field(v[i], p, "length"), jsonio::child(p, "length"),
                                                           1, std::numeric_limits<int>::max()))});
    }
    return NewtonPolygon(std::move(segs));
}

inline json to_json(const std::vector<CyclotomicFactor>& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back({{"order", c.order}, {"multiplicity", c.multiplicity}});
    return out;
}

inline std::vector<CyclotomicFactor> cyclotomic_from_json(const json& v, const std::string& ptr) {
    jsonio::read_array(v, ptr);
    std::vector<CyclotomicFactor> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = jsonio::child(ptr, i);
        const long order = jsonio::read_long(jsonio::field(v[i], p, "order"), jsonio::child(p, "order"), 1,
                                             std::numeric_limits<long>::max());
        const long mult = jsonio::read_long(jsonio::field(v[i], p, "multiplicity"), jsonio::child(p, "multiplicity"),
                                            std::numeric_limits<int>::min(), std::numeric_limits<int>::max());
        out.push_back({static_cast<std::uint64_t>(order), static_cast<int>(mult)});
    }
    return out;
}

inline Irreducibility irreducibility_from_json(const json& v, const std::string& ptr) {
    const std::string s = jsonio::read_string(v, ptr);
    for (auto x : {Irreducibility::Proved, Irreducibility::Inconclusive, Irreducibility::Vacuous})
        if (s == to_string(x)) return x;
    throw SchemaError(ptr, "expected Proved, Inconclusive or Vacuous");
}

inline json to_json(const PairScan& s) {
    return {{"ok", s.ok},
            {"inversion_closed", s.inversion_closed},
            {"self_inversive_sign", s.self_inversive_sign},
            {"roots_of_unity_free", s.roots_of_unity_free},
            {"even_degree", s.even_degree},
            {"witnesses", to_json(s.witnesses)}};
}

inline PairScan pair_scan_from_json(const json& v, const std::string& ptr) {
    using namespace jsonio;
    PairScan s;
    s.ok = read_bool(field(v, ptr, "ok"), child(ptr, "ok"));
    s.inversion_closed = read_bool(field(v, ptr, "inversion_closed"), child(ptr, "inversion_closed"));
    s.self_inversive_sign =
        static_cast<int>(read_long(field(v, ptr, "self_inversive_sign"), child(ptr, "self_inversive_sign"), -1, 1));
    s.roots_of_unity_free = read_bool(field(v, ptr, "roots_of_unity_free"), child(ptr, "roots_of_unity_free"));
    s.even_degree = read_bool(field(v, ptr, "even_degree"), child(ptr, "even_degree"));
    s.witnesses = cyclotomic_from_json(field(v, ptr, "witnesses"), child(ptr, "witnesses"));
    return s;
}

inline json to_json(const IndependenceResult& r) {
    return {{"bound", r.bound}, {"relation_found", r.relation_found}, {"witness", r.witness}};
}

inline IndependenceResult independence_from_json(const json& v, const std::string& ptr) {
    using namespace jsonio;
    IndependenceResult r;
    r.bound = static_cast<int>(read_long(field(v, ptr, "bound"), child(ptr, "bound"), 0, kMaxIndependenceBound));
    r.relation_found = read_bool(field(v, ptr, "relation_found"), child(ptr, "relation_found"));
    const json& w = read_array(field(v, ptr, "witness"), child(ptr, "witness"));
    for (std::size_t i = 0; i < w.size(); ++i)
        r.witness.push_back(static_cast<int>(read_long(w[i], child(child(ptr, "witness"), i), 1, kMaxIndependenceBound)));
    return r;
}

inline json to_json(const WeilReport& r) {
    json out;
    out["ctx"] = to_json(r.ctx);
    out["p2m"] = to_json(r.p2m);
    out["pm"] = to_json(r.pm);
    out["newton_polygon"] = to_json(r.polygon);
    out["twisted_newton_polygon"] = to_json(r.twisted_polygon);
    out["q_admissible"] = r.q_admissible;
    out["self_inversive_sign"] = r.self_inversive_sign ? json(*r.self_inversive_sign) : json(nullptr);
    out["unit_circle_certified"] = r.unit_circle_certified;
    out["cyclotomic_part"] = to_json(r.cyclotomic_part);
    out["semistable"] = r.semistable;
    out["semistable_exponent"] = r.semistable_exponent;
    out["a"] = r.a;
    out["k"] = r.ptr.degree() / 2;
    out["ptr"] = to_json(r.ptr);
    out["k3_type"] = r.k3_type;
    out["ptr_irreducible"] = std::string(to_string(r.ptr_irreducible));
    out["pair_scan"] = to_json(r.pair_scan);
    out["pair_structure_ok"] = r.pair_structure_ok;
    out["independence"] = to_json(r.independence);
    out["independence_checked_to"] = r.independence_checked_to();
    out["independence_basis"] = r.independence_basis;
    out["semisimplicity_assumed"] = r.semisimplicity_assumed;
    out["skipped_stages"] = r.skipped_stages;
    out["base_change"] = r.base_change ? to_json(*r.base_change) : json(nullptr);
    return out;
}

inline WeilReport report_from_json(const json& v, const std::string& ptr = "") {
    using namespace jsonio;
    if (!v.is_object()) throw SchemaError(ptr, "expected a report object");
    auto at = [&](const char* key) -> const json& { return field(v, ptr, key); };
    auto path = [&](const char* key) { return child(ptr, key); };
    WeilReport r;
    r.ctx = context_from_json(at("ctx"), path("ctx"));
    r.p2m = poly_from_json(at("p2m"), path("p2m"), true);
    r.pm = poly_from_json(at("pm"), path("pm"));
    r.polygon = polygon_from_json(at("newton_polygon"), path("newton_polygon"));
    r.twisted_polygon = polygon_from_json(at("twisted_newton_polygon"), path("twisted_newton_polygon"));
    r.q_admissible = read_bool(at("q_admissible"), path("q_admissible"));
    if (const json* s = optional_field(v, "self_inversive_sign"))
        r.self_inversive_sign = static_cast<int>(read_long(*s, path("self_inversive_sign"), -1, 1));
    r.unit_circle_certified = read_bool(at("unit_circle_certified"), path("unit_circle_certified"));
    r.cyclotomic_part = cyclotomic_from_json(at("cyclotomic_part"), path("cyclotomic_part"));
    r.semistable = read_bool(at("semistable"), path("semistable"));
    r.semistable_exponent = static_cast<std::uint64_t>(
        read_long(at("semistable_exponent"), path("semistable_exponent"), 1, std::numeric_limits<long>::max()));
    r.a = static_cast<int>(read_long(at("a"), path("a"), 0, std::numeric_limits<int>::max()));
    r.ptr = poly_from_json(at("ptr"), path("ptr"));
    r.k3_type = read_bool(at("k3_type"), path("k3_type"));
    r.ptr_irreducible = irreducibility_from_json(at("ptr_irreducible"), path("ptr_irreducible"));
    r.pair_scan = pair_scan_from_json(at("pair_scan"), path("pair_scan"));
    r.pair_structure_ok = read_bool(at("pair_structure_ok"), path("pair_structure_ok"));
    r.independence = independence_from_json(at("independence"), path("independence"));
    r.independence_basis = read_string(at("independence_basis"), path("independence_basis"));
    r.semisimplicity_assumed = read_bool(at("semisimplicity_assumed"), path("semisimplicity_assumed"));
    const json& skipped = read_array(at("skipped_stages"), path("skipped_stages"));
    for (std::size_t i = 0; i < skipped.size(); ++i)
        r.skipped_stages.push_back(read_string(skipped[i], child(path("skipped_stages"), i)));
    if (const json* bc = optional_field(v, "base_change"))
        r.base_change = std::make_shared<const WeilReport>(report_from_json(*bc, path("base_change")));
    if (r.ptr.is_zero() || r.ptr.degree() + r.a != r.pm.degree())
        throw SchemaError(path("ptr"), "deg(ptr) + a must equal deg(pm)");
    return r;
}

inline json to_json(const EigenStructure& st) { return {{"a", st.a}, {"k", st.k}}; }

inline EigenStructure structure_from_json(const json& v, const std::string& ptr = "") {
    using namespace jsonio;
    const long a = read_long(field(v, ptr, "a"), child(ptr, "a"), 0, std::numeric_limits<int>::max());
    const long k = read_long(field(v, ptr, "k"), child(ptr, "k"), 0, std::numeric_limits<int>::max());
    return {static_cast<unsigned>(a), static_cast<unsigned>(k)};
}

inline json to_json(const JMap& j) { return j.values; }

inline json to_json(const TateDimension& t, int r, int m) {
    json chunks = json::array();
    for (const auto& c : t.chunks)
        chunks.push_back({{"j", to_json(c.map)}, {"orbit_size", c.orbit_size}, {"twos", c.twos}, {"dim", c.dim.get_str()}});
    return {{"r", r}, {"m", m}, {"tate_dim", t.total.get_str()}, {"per_chunk", chunks}};
}

inline json to_json(const DecompositionResult& d, int r, int m) {
    json chunks = json::array();
    for (const auto& c : d.chunks)
        chunks.push_back({{"j", to_json(c.map)},
                          {"orbit_size", c.orbit_size},
                          {"twos", c.twos},
                          {"case", c.lemma_case},
                          {"rank", c.rank},
                          {"dim", c.dim.get_str()},
                          {"rank_method", c.rank_method},
                          {"ok", c.ok}});
    return {{"r", r}, {"m", m}, {"decomposable", d.ok}, {"per_chunk", chunks}};
}

} // namespace weilk3
