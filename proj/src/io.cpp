#include "qamgolay/io.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qamgolay {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw std::invalid_argument("field \"" + field + "\": " + what);
}

int require_int(const Json& j, const std::string& field, int lo, int hi) {
    if (!j.contains(field) || !j[field].is_number_integer())
        field_error(field, "expected an integer");
    const int v = j[field].get<int>();
    if (v < lo || v > hi) field_error(field, "out of range");
    return v;
}

Z4 z4_from(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) field_error(field, "expected an integer in 0..3");
    const int v = j.get<int>();
    if (v < 0 || v > 3) field_error(field, "out of range for Z4");
    return Z4(v);
}

} // namespace

Json gbf_to_json(const Gbf& f) {
    Json terms = Json::array();
    for (const auto& [mask, c] : f.terms()) {
        Json vars = Json::array();
        for (int j = 1; j <= f.m(); ++j)
            if (mask & (1u << (j - 1))) vars.push_back(j);
        terms.push_back({{"vars", vars}, {"coeff", int(c.v)}});
    }
    return Json{{"m", f.m()}, {"terms", terms}};
}

Gbf gbf_from_json(const Json& j) {
    const int m = require_int(j, "m", 0, 31);
    Gbf f(m);
    if (!j.contains("terms") || !j["terms"].is_array())
        field_error("terms", "expected an array");
    for (const auto& t : j["terms"]) {
        if (!t.contains("vars") || !t["vars"].is_array())
            field_error("vars", "expected an array");
        std::uint32_t mask = 0;
        for (const auto& v : t["vars"]) {
            if (!v.is_number_integer()) field_error("vars", "expected integers");
            const int var = v.get<int>();
            if (var < 1 || var > m) field_error("vars", "variable index out of range");
            mask |= 1u << (var - 1);
        }
        f.add_term(mask, z4_from(t.at("coeff"), "coeff"));
    }
    return f;
}

Json vgbf_to_json(const VGbf& f) {
    Json comps = Json::array();
    for (const auto& c : f.comps()) comps.push_back(gbf_to_json(c));
    return Json{{"q", f.q()}, {"m", f.m()}, {"components", comps}};
}

VGbf vgbf_from_json(const Json& j) {
    if (!j.contains("components") || !j["components"].is_array())
        field_error("components", "expected an array");
    std::vector<Gbf> comps;
    for (const auto& c : j["components"]) comps.push_back(gbf_from_json(c));
    if (comps.empty()) field_error("components", "must be nonempty");
    return VGbf(std::move(comps));
}

Json sequence_to_json(const QamSequence& s, int m) {
    Json values = Json::array();
    for (const auto& v : s.values) values.push_back({v.re, v.im});
    return Json{{"q", s.q}, {"m", m}, {"values", values}};
}

QamSequence sequence_from_json(const Json& j) {
    QamSequence s;
    s.q = require_int(j, "q", 1, 62);
    const int m = require_int(j, "m", 0, 30);
    if (!j.contains("values") || !j["values"].is_array())
        field_error("values", "expected an array");
    for (const auto& v : j["values"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
            !v[1].is_number_integer())
            field_error("values", "expected [re, im] integer pairs");
        s.values.push_back({v[0].get<std::int64_t>(), v[1].get<std::int64_t>()});
    }
    if (s.values.size() != (std::size_t(1) << m))
        field_error("values", "length must be 2^m");
    return s;
}

Json array_to_json(const QamArray& a) {
    QamSequence s;
    s.q = a.q;
    s.values = a.values;
    Json j = sequence_to_json(s, a.m);
    j["index_order"] = "x1_lsb";
    return j;
}

QamArray array_from_json(const Json& j) {
    if (j.contains("index_order") && j["index_order"] != "x1_lsb")
        field_error("index_order", "only x1_lsb is supported");
    const QamSequence s = sequence_from_json(j);
    QamArray a;
    a.q = s.q;
    a.m = require_int(j, "m", 0, 30);
    a.values = s.values;
    return a;
}

namespace {

Json triple_to_json(const CTriple& d) {
    return Json::array({int(d.d0.v), int(d.d1.v), int(d.d2.v)});
}

CTriple triple_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) field_error("d_choices", "expected [d0,d1,d2]");
    CTriple d(z4_from(j[0], "d_choices"), z4_from(j[1], "d_choices"),
              z4_from(j[2], "d_choices"));
    if (!d.valid()) field_error("d_choices", "triple violates 2*d0+d1+d2=0");
    return d;
}

Json choices_to_json(const std::vector<std::vector<CTriple>>& choices) {
    Json out = Json::object();
    for (std::size_t k = 0; k < choices.size(); ++k) {
        Json row = Json::array();
        for (const auto& d : choices[k]) row.push_back(triple_to_json(d));
        out[std::to_string(k + 1)] = row;
    }
    return out;
}

std::vector<std::vector<CTriple>> choices_from_json(const Json& j, int t) {
    if (!j.is_object()) field_error("d_choices", "expected an object");
    std::vector<std::vector<CTriple>> out(t);
    for (int k = 1; k <= t; ++k) {
        const std::string key = std::to_string(k);
        if (!j.contains(key)) field_error("d_choices", "missing factor " + key);
        for (const auto& d : j[key]) out[k - 1].push_back(triple_from_json(d));
    }
    return out;
}

Json nsgip_to_json(const Nsgip& p) {
    Json b = Json::array(), bp = Json::array();
    for (const auto& v : p.b) b.push_back(int(v.v));
    for (const auto& v : p.b_prime) bp.push_back(int(v.v));
    return Json{{"b", b}, {"b_prime", bp}};
}

Nsgip nsgip_from_json(const Json& j) {
    if (!j.contains("b") || !j.contains("b_prime"))
        field_error("nsgip", "needs b and b_prime");
    Nsgip p;
    for (const auto& v : j["b"]) p.b.push_back(z4_from(v, "nsgip.b"));
    for (const auto& v : j["b_prime"]) p.b_prime.push_back(z4_from(v, "nsgip.b_prime"));
    if (p.b.size() != p.b_prime.size()) field_error("nsgip", "length mismatch");
    p.Q0 = gaussian_image(p.b);
    p.Q1 = gaussian_image(p.b_prime);
    if (p.Q0.norm2() != p.Q1.norm2() || p.Q0 == p.Q1 || p.Q0 == p.Q1.conj())
        field_error("nsgip", "pair is not admissible");
    return p;
}

Json base_to_json(const StandardGcsSpec& base, Json& j) {
    Json pi = Json::array(), c = Json::array();
    for (int v : base.pi) pi.push_back(v);
    for (const auto& v : base.c) c.push_back(int(v.v));
    j["pi"] = pi;
    j["base_c"] = c;
    j["base_c_prime"] = int(base.c_prime.v);
    return j;
}

StandardGcsSpec base_from_json(const Json& j, int m, MuSide side) {
    StandardGcsSpec base;
    base.m = m;
    base.side = side;
    if (!j.contains("pi") || !j["pi"].is_array()) field_error("pi", "expected an array");
    for (const auto& v : j["pi"]) base.pi.push_back(v.get<int>());
    validate_perm(base.pi, m);
    if (!j.contains("base_c") || !j["base_c"].is_array())
        field_error("base_c", "expected an array");
    for (const auto& v : j["base_c"]) base.c.push_back(z4_from(v, "base_c"));
    if (static_cast<int>(base.c.size()) != m + 1)
        field_error("base_c", "needs m+1 entries");
    base.c_prime = j.contains("base_c_prime") ? z4_from(j["base_c_prime"], "base_c_prime")
                                              : Z4(0);
    return base;
}

} // namespace

Json spec_to_json(const SpecVariant& spec) {
    Json j;
    if (std::holds_alternative<Theorem1Spec>(spec)) {
        const auto& s = std::get<Theorem1Spec>(spec);
        j["theorem"] = 1;
        j["q"] = s.q;
        j["m"] = s.m();
        j["factorization"] = s.factorization;
        j["d_choices"] = choices_to_json(s.d_choices);
        j["omegas"] = s.omegas;
        j["nsgip"] = nullptr;
        j["case"] = nullptr;
        j["upsilons"] = Json::array();
        j["mu_side"] = s.mu_side == MuSide::First ? "first" : "last";
        base_to_json(s.base, j);
    } else {
        const auto& s = std::get<Theorem2Spec>(spec);
        j["theorem"] = 2;
        j["q"] = s.q;
        j["m"] = s.m();
        j["factorization"] = s.factorization;
        j["d_choices"] = choices_to_json(s.d_choices);
        j["omegas"] = s.omegas;
        j["nsgip"] = nsgip_to_json(s.nsgip);
        j["case"] = s.kase == CaseAB::A ? "a" : "b";
        j["upsilons"] = s.kase == CaseAB::A ? Json::array({s.upsilon})
                                            : Json::array({s.upsilon1, s.upsilon2});
        j["mu_side"] = s.mu_side == MuSide::First ? "first" : "last";
        base_to_json(s.base, j);
    }
    return j;
}

SpecVariant spec_from_json(const Json& j) {
    const int theorem = require_int(j, "theorem", 1, 2);
    const int m = require_int(j, "m", 1, 30);
    const int q = require_int(j, "q", 1, 62);
    if (!j.contains("factorization") || !j["factorization"].is_array())
        field_error("factorization", "expected an array");
    std::vector<int> fact;
    for (const auto& v : j["factorization"]) fact.push_back(v.get<int>());
    const std::string mu = j.value("mu_side", "first");
    if (mu != "first" && mu != "last") field_error("mu_side", "expected first or last");
    const MuSide side = mu == "first" ? MuSide::First : MuSide::Last;
    if (!j.contains("omegas") || !j["omegas"].is_array())
        field_error("omegas", "expected an array");
    std::vector<int> omegas;
    for (const auto& v : j["omegas"]) omegas.push_back(v.get<int>());

    if (theorem == 1) {
        Theorem1Spec s;
        s.q = q;
        s.factorization = fact;
        s.d_choices = choices_from_json(j.at("d_choices"), static_cast<int>(fact.size()));
        s.omegas = omegas;
        s.mu_side = side;
        s.base = base_from_json(j, m, side);
        s.validate();
        return s;
    }
    Theorem2Spec s;
    s.q = q;
    s.factorization = fact;
    s.d_choices =
        choices_from_json(j.at("d_choices"), static_cast<int>(fact.size()) - 1);
    s.omegas = omegas;
    if (!j.contains("nsgip") || j["nsgip"].is_null())
        field_error("nsgip", "required for theorem 2");
    s.nsgip = nsgip_from_json(j["nsgip"]);
    const std::string kase = j.value("case", "");
    if (kase != "a" && kase != "b") field_error("case", "expected a or b");
    s.kase = kase == "a" ? CaseAB::A : CaseAB::B;
    if (!j.contains("upsilons") || !j["upsilons"].is_array())
        field_error("upsilons", "expected an array");
    const auto& ups = j["upsilons"];
    if (s.kase == CaseAB::A) {
        if (ups.size() != 1) field_error("upsilons", "case a takes one position");
        s.upsilon = ups[0].get<int>();
    } else {
        if (ups.size() != 2) field_error("upsilons", "case b takes two positions");
        s.upsilon1 = ups[0].get<int>();
        s.upsilon2 = ups[1].get<int>();
    }
    s.mu_side = side;
    s.base = base_from_json(j, m, side);
    s.validate();
    return s;
}

Json pair_to_json(const VGbf& f, const VGbf& g, const Json* spec) {
    Json j;
    j["q"] = f.q();
    j["m"] = f.m();
    j["f"] = sequence_to_json(sequence_from_vgbf(f), f.m());
    j["g"] = sequence_to_json(sequence_from_vgbf(g), g.m());
    j["vgbf_f"] = vgbf_to_json(f);
    j["vgbf_g"] = vgbf_to_json(g);
    if (spec) j["spec"] = *spec;
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

Json parse_json_file(const std::string& path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON in ") + path + ": " +
                                    e.what());
    }
}

} // namespace qamgolay
