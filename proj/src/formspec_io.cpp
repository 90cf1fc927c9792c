#include "qmf/formspec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qmf {

namespace {

using json = nlohmann::json;

[[noreturn]] void field_error(const std::string& source, const std::string& field, const std::string& msg) {
    fail(Status::parse, source + ": field '" + field + "': " + msg);
}

const json& require(const json& obj, const std::string& source, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) field_error(source, key, "missing");
    return *it;
}

long long as_int(const json& v, const std::string& source, const std::string& field) {
    if (!v.is_number_integer()) field_error(source, field, "expected an integer");
    return v.get<long long>();
}

double as_number(const json& v, const std::string& source, const std::string& field) {
    if (!v.is_number()) field_error(source, field, "expected a number");
    return v.get<double>();
}

Weight parse_weight(const json& v, const std::string& source) {
    try {
        if (v.is_string()) return Weight::parse(v.get<std::string>());
        if (v.is_number()) {
            double x = v.get<double>();
            double t = 2.0 * x;
            if (t != std::round(t)) field_error(source, "weight", "expected a multiple of 1/2");
            return Weight{static_cast<int>(t)};
        }
    } catch (const Error& e) {
        if (e.code() == Status::parse && std::string(e.what()).find("field '") != std::string::npos) throw;
        field_error(source, "weight", e.what());
    }
    field_error(source, "weight", "expected a string like \"3/2\" or a number");
}

std::pair<size_t, size_t> line_col(std::string_view text, size_t byte) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

CuspFormSpec parse_form_spec(std::string_view text, const std::string& source) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string what = e.what();
        // drop nlohmann's "[json.exception...] parse error at line L, column C: " prefix
        auto pos = what.find("parse error");
        if (pos != std::string::npos) pos = what.find(": ", pos);
        fail(Status::parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                                (pos == std::string::npos ? what : what.substr(pos + 2)));
    }
    if (!doc.is_object()) fail(Status::parse, source + ":1:1: expected a JSON object");

    static const std::set<std::string> known = {"kind",   "factors", "weight",   "level",    "character", "cuspidal",
                                                "scale",  "modulus", "values",   "power",    "coefficients"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!known.count(it.key())) field_error(source, it.key(), "unknown field");

    const json& kind = require(doc, source, "kind");
    if (!kind.is_string()) field_error(source, "kind", "expected a string");
    const std::string k = kind.get<std::string>();

    CuspFormSpec spec;
    spec.weight = parse_weight(require(doc, source, "weight"), source);
    spec.level = as_int(require(doc, source, "level"), source, "level");
    if (spec.level < 1) field_error(source, "level", "must be positive");
    if (doc.contains("character")) {
        spec.character = as_int(doc["character"], source, "character");
        if (spec.character == 0) field_error(source, "character", "discriminant must be nonzero");
    } else {
        spec.character = 0;
    }
    if (doc.contains("cuspidal")) {
        if (!doc["cuspidal"].is_boolean()) field_error(source, "cuspidal", "expected true or false");
        spec.require_cuspidal = doc["cuspidal"].get<bool>();
    }

    auto forbid = [&](std::initializer_list<const char*> keys) {
        for (const char* key : keys)
            if (doc.contains(key)) field_error(source, key, "not allowed for kind '" + k + "'");
    };

    if (k == "eta_quotient") {
        forbid({"modulus", "values", "power", "coefficients"});
        spec.kind = CuspFormSpec::Kind::eta_quotient;
        const json& f = require(doc, source, "factors");
        if (!f.is_array() || f.empty()) field_error(source, "factors", "expected a nonempty array of [m, r] pairs");
        for (size_t i = 0; i < f.size(); ++i) {
            const std::string name = "factors[" + std::to_string(i) + "]";
            if (!f[i].is_array() || f[i].size() != 2) field_error(source, name, "expected an [m, r] pair");
            long long m = as_int(f[i][0], source, name + "[0]");
            long long r = as_int(f[i][1], source, name + "[1]");
            if (m < 1) field_error(source, name + "[0]", "multiplier must be positive");
            if (r == 0 || r > 1000 || r < -1000) field_error(source, name + "[1]", "exponent must be a nonzero integer of size <= 1000");
            spec.factors.push_back({m, static_cast<int>(r)});
        }
        if (doc.contains("scale")) spec.scale = as_number(doc["scale"], source, "scale");
    } else if (k == "unary_theta") {
        forbid({"factors", "coefficients", "scale"});
        spec.kind = CuspFormSpec::Kind::unary_theta;
        long long mod = as_int(require(doc, source, "modulus"), source, "modulus");
        if (mod < 1 || mod > 100000) field_error(source, "modulus", "must lie in 1..100000");
        const json& v = require(doc, source, "values");
        if (!v.is_array() || static_cast<long long>(v.size()) != mod)
            field_error(source, "values", "expected an array of 'modulus' integers (values at j = 0, 1, ...)");
        spec.theta.modulus = static_cast<int>(mod);
        for (size_t i = 0; i < v.size(); ++i) spec.theta.values.push_back(as_int(v[i], source, "values[" + std::to_string(i) + "]"));
        long long p = as_int(require(doc, source, "power"), source, "power");
        if (p != 0 && p != 1) field_error(source, "power", "must be 0 or 1");
        spec.theta.power = static_cast<int>(p);
    } else if (k == "raw") {
        forbid({"factors", "modulus", "values", "power", "scale"});
        spec.kind = CuspFormSpec::Kind::raw;
        if (spec.character == 0) spec.character = 1;
        const json& c = require(doc, source, "coefficients");
        if (!c.is_array()) field_error(source, "coefficients", "expected an array");
        for (size_t i = 0; i < c.size(); ++i) {
            const std::string name = "coefficients[" + std::to_string(i) + "]";
            if (c[i].is_number()) {
                spec.raw.emplace_back(c[i].get<double>(), 0.0);
            } else if (c[i].is_array() && c[i].size() == 2) {
                spec.raw.emplace_back(as_number(c[i][0], source, name + "[0]"), as_number(c[i][1], source, name + "[1]"));
            } else {
                field_error(source, name, "expected a number or a [re, im] pair");
            }
        }
    } else {
        field_error(source, "kind", "expected \"eta_quotient\", \"unary_theta\" or \"raw\", got \"" + k + "\"");
    }
    return spec;
}

CuspFormSpec load_form_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Status::parse, path + ": cannot open form-spec file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_form_spec(buf.str(), path);
}

std::string form_spec_to_json(const CuspFormSpec& spec) {
    json j;
    j["weight"] = spec.weight.str();
    j["level"] = spec.level;
    if (spec.character != 0) j["character"] = spec.character;
    j["cuspidal"] = spec.require_cuspidal;
    switch (spec.kind) {
    case CuspFormSpec::Kind::eta_quotient: {
        j["kind"] = "eta_quotient";
        json f = json::array();
        for (const auto& e : spec.factors) f.push_back({e.m, e.r});
        j["factors"] = f;
        if (spec.scale != 1.0) j["scale"] = spec.scale;
        break;
    }
    case CuspFormSpec::Kind::unary_theta:
        j["kind"] = "unary_theta";
        j["modulus"] = spec.theta.modulus;
        j["values"] = spec.theta.values;
        j["power"] = spec.theta.power;
        break;
    case CuspFormSpec::Kind::raw: {
        j["kind"] = "raw";
        json c = json::array();
        for (cplx v : spec.raw) {
            if (v.imag() == 0.0)
                c.push_back(v.real());
            else
                c.push_back({v.real(), v.imag()});
        }
        j["coefficients"] = c;
        break;
    }
    }
    return j.dump();
}

}  // namespace qmf
