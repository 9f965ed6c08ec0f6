#include "toric/io.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include <openssl/evp.h>

namespace toric {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ToricError(ErrorKind::MalformedInput, what); }

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::string multiset_key(const Multiset& m) {
    std::string key;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) key += ',';
        key += std::to_string(m[i]);
    }
    return key;
}

Multiset parse_multiset_key(const std::string& key) {
    Multiset m;
    if (key.empty()) return m;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            m.push_back(static_cast<RayId>(std::stoul(part)));
        } catch (const std::exception&) {
            malformed("bad class key \"" + key + "\"");
        }
    }
    return m;
}

Json string_or(const std::optional<Integer>& v) { return v ? to_json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const Integer& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
        return Json(value.convert_to<std::int64_t>());
    }
    return Json(value.str());
}

Integer integer_from_json(const Json& value) {
    if (value.is_number_integer()) {
        if (value.is_number_unsigned()) return Integer(value.get<std::uint64_t>());
        return Integer(value.get<std::int64_t>());
    }
    if (value.is_string()) {
        const auto& s = value.get_ref<const std::string&>();
        const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                              [](char c) { return c >= '0' && c <= '9'; })) {
            malformed("not an integer: \"" + s + "\"");
        }
        return Integer(s);
    }
    malformed("expected an integer, got " + value.dump());
}

Json to_json(const Cone& cone) { return Json(cone.ids()); }

Cone cone_from_json(const Json& value) {
    if (!value.is_array()) malformed("cone must be an array of ray indices");
    std::vector<RayId> ids;
    for (const auto& v : value) {
        if (!v.is_number_integer() || v.get<long long>() < 0) malformed("bad ray index " + v.dump());
        ids.push_back(v.get<RayId>());
    }
    return Cone(std::move(ids));
}

Json parse_json_text(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        malformed("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) + ": " + e.what());
    }
}

RawFan raw_fan_from_json(const Json& value) {
    if (!value.is_object()) malformed("fan must be a JSON object");
    for (const char* key : {"dim", "rays", "max_cones"}) {
        if (!value.contains(key)) malformed(std::string("missing field \"") + key + "\"");
    }
    RawFan raw;
    if (!value["dim"].is_number_integer()) malformed("\"dim\" must be an integer");
    raw.dim = value["dim"].get<long long>();
    if (!value["rays"].is_array() || !value["max_cones"].is_array()) malformed("\"rays\" and \"max_cones\" must be arrays");
    for (const auto& r : value["rays"]) {
        if (!r.is_array()) malformed("ray must be an array");
        std::vector<Integer> coords;
        for (const auto& c : r) coords.push_back(integer_from_json(c));
        raw.rays.push_back(std::move(coords));
    }
    for (const auto& c : value["max_cones"]) {
        if (!c.is_array()) malformed("cone must be an array");
        std::vector<long long> ids;
        for (const auto& id : c) {
            if (!id.is_number_integer()) malformed("cone entry must be an integer");
            ids.push_back(id.get<long long>());
        }
        raw.max_cones.push_back(std::move(ids));
    }
    return raw;
}

Fan fan_from_json(const Json& value) { return Fan::validate(raw_fan_from_json(value)); }

Json fan_to_json(const Fan& fan, const std::string& name) {
    Json rays = Json::array();
    for (const auto& r : fan.rays()) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(to_json(x));
        rays.push_back(std::move(row));
    }
    Json cones = Json::array();
    for (const auto& c : fan.max_cones()) cones.push_back(to_json(c));
    Json out = {{"dim", fan.dim()}, {"rays", std::move(rays)}, {"max_cones", std::move(cones)}};
    if (!name.empty()) out["name"] = name;
    return out;
}

Json to_json(const CycleClass& cls) {
    Json coeffs = Json::object();
    for (const auto& [m, n] : cls.coeffs()) coeffs[multiset_key(m)] = to_json(n);
    return {{"degree", cls.degree()}, {"coeffs", std::move(coeffs)}};
}

CycleClass cycle_class_from_json(const Json& value) {
    if (!value.is_object() || !value.contains("degree") || !value.contains("coeffs")) {
        malformed("class must have \"degree\" and \"coeffs\"");
    }
    CycleClass cls(value["degree"].get<std::size_t>());
    for (const auto& [key, n] : value["coeffs"].items()) cls.set(parse_multiset_key(key), integer_from_json(n));
    return cls;
}

Json to_json(const WallRelation& relation) {
    Json coeffs = Json::object();
    for (const auto& [id, c] : relation.coefficients) coeffs[std::to_string(id)] = to_json(c);
    return {{"wall", to_json(relation.wall)},
            {"opposite", relation.opposite},
            {"coefficients", std::move(coeffs)},
            {"anticanonical_degree", to_json(relation.anticanonical_degree())}};
}

Json to_json(const ChernDegrees& chern) {
    return {{"dim", chern.dim},
            {"c1_top", to_json(chern.c1_top)},
            {"c1_pow_c2", string_or(chern.c1_pow_c2)},
            {"ch2_c1", chern.ch2_c1 ? Json(to_fraction_string(*chern.ch2_c1)) : Json(nullptr)},
            {"lemma_value", string_or(chern.lemma_value)},
            {"euler", to_json(chern.euler)}};
}

Json to_json(const SurfaceKind& kind, const Cone& cone) {
    Json out = {{"cone", to_json(cone)}, {"kind", kind_name(kind)}};
    if (const auto* plane = std::get_if<PlaneSurface>(&kind)) {
        out["curve_wall"] = to_json(plane->curve_wall);
    } else if (const auto* hz = std::get_if<HirzebruchSurface>(&kind)) {
        out["alpha"] = to_json(hz->alpha);
        out["fiber_wall"] = to_json(hz->fiber_wall);
        out["negative_wall"] = to_json(hz->negative_wall);
    } else {
        out["ray_count"] = std::get<OtherSurface>(kind).ray_count;
    }
    return out;
}

Json to_json(const FanoReport& report) {
    Json surfaces = Json::array();
    for (const auto& s : report.surfaces) {
        Json entry = to_json(s.kind, s.cone);
        entry["ch2_pair"] = to_fraction_string(s.ch2);
        surfaces.push_back(std::move(entry));
    }
    Json fano_witness = nullptr;
    if (report.fano_witness) {
        fano_witness = {{"wall", to_json(*report.fano_witness)}, {"degree", to_json(*report.fano_witness_degree)}};
    }
    return {{"dim", report.dim},
            {"picard", report.picard},
            {"c1_top", to_json(report.c1_top)},
            {"euler", to_json(report.euler)},
            {"is_fano", report.is_fano},
            {"fano_witness", std::move(fano_witness)},
            {"lemma_pass", report.lemma_pass},
            {"lemma_value", string_or(report.lemma_value)},
            {"is_two_fano", report.is_two_fano},
            {"two_fano_witness", report.two_fano_witness ? to_json(*report.two_fano_witness) : Json(nullptr)},
            {"surfaces_checked", report.surfaces_checked},
            {"surfaces", std::move(surfaces)}};
}

Json to_json(const BundleSpec& spec) {
    Json twists = Json::array();
    for (const auto& a : spec.twists) twists.push_back(to_json(a));
    return {{"m", spec.m}, {"n", spec.n}, {"twists", std::move(twists)}};
}

Json to_json(const RankTwoClosedForms& forms) {
    Json basis = Json::object();
    auto put = [&](const char* key, const std::optional<BasisSurface>& s) {
        if (!s) return;
        basis[key] = {{"cone", to_json(s->cone)}, {"ch2_pair", to_fraction_string(s->ch2)}, {"class", to_json(s->cls)}};
    };
    put("S1", forms.basis.s1);
    put("S2", forms.basis.s2);
    put("S3", forms.basis.s3);
    return {{"fano", forms.fano}, {"ch2_S2", to_json(forms.ch2_s2)}, {"two_fano", forms.two_fano}, {"basis", basis}};
}

Json to_json(const RankTwoSweep& sweep) {
    Json discrepancies = Json::array();
    for (const auto& d : sweep.discrepancies) {
        discrepancies.push_back({{"spec", to_json(d.spec)}, {"closed_form", d.closed_form}, {"computed", d.computed}});
    }
    Json members = Json::array();
    for (const auto& s : sweep.two_fano) members.push_back(to_json(s));
    return {{"dim", sweep.dim},
            {"budget", to_json(sweep.budget)},
            {"specs", sweep.specs},
            {"fano_specs", sweep.fano_specs},
            {"discrepancies", std::move(discrepancies)},
            {"two_fano", std::move(members)},
            {"two_fano_count", sweep.two_fano.size()}};
}

std::vector<DatabaseEntry> parse_database(std::string_view text) {
    std::vector<DatabaseEntry> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
            if (end == text.size()) break;
            continue;
        }
        DatabaseEntry entry;
        entry.line = line_no;
        try {
            Json j;
            try {
                j = Json::parse(line.begin(), line.end());
            } catch (const Json::parse_error& e) {
                malformed("line " + std::to_string(line_no) + ": " + e.what());
            }
            if (j.is_object() && j.contains("name") && j["name"].is_string()) entry.name = j["name"].get<std::string>();
            entry.fan = fan_from_json(j);
        } catch (const ToricError& e) {
            entry.error = e.what();
        }
        out.push_back(std::move(entry));
        if (end == text.size()) break;
    }
    return out;
}

Json scan_report(const ScanResult& result, std::string_view input_digest, bool fast) {
    Json fans = Json::array();
    for (const auto& rec : result.records) {
        Json entry = rec.report ? to_json(*rec.report) : Json::object();
        entry["index"] = rec.index;
        entry["line"] = rec.line;
        entry["name"] = rec.name;
        if (!rec.report) entry["error"] = rec.error;
        fans.push_back(std::move(entry));
    }
    const ScanCounts& c = result.counts;
    return {{"tool", kToolName},
            {"version", kToolVersion},
            {"input_digest", std::string(input_digest)},
            {"mode", fast ? "fast" : "full"},
            {"assumptions",
             {"ch2 nefness is tested against torus-invariant surfaces only",
              "projectivity is not checked; fans are validated as smooth and complete"}},
            {"fans", std::move(fans)},
            {"aggregate",
             {{"total", c.total},
              {"invalid", c.invalid},
              {"fano", c.fano},
              {"lemma_pass", c.lemma_pass},
              {"two_fano", c.two_fano}}}};
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
    return os.str();
}

namespace {

void flatten(const Json& value, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
    if (value.is_object() && !value.empty()) {
        for (const auto& [k, v] : value.items()) flatten(v, path.empty() ? k : path + "." + k, out);
    } else if (value.is_array() && !value.empty() &&
               std::any_of(value.begin(), value.end(), [](const Json& v) { return v.is_structured(); })) {
        for (std::size_t i = 0; i < value.size(); ++i) flatten(value[i], path + "[" + std::to_string(i) + "]", out);
    } else {
        out.emplace_back(path, value.is_string() ? value.get<std::string>() : value.dump());
    }
}

}  // namespace

std::string render_pretty(const Json& value) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(value, "", rows);
    std::size_t width = 0;
    for (const auto& [k, _] : rows) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
    return os.str();
}

}  // namespace toric
