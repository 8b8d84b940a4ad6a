#include "pistar/record.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

#include <json.hpp>

#include "pistar/bounds.hpp"
#include "pistar/errors.hpp"

namespace pistar {

using nlohmann::json;

std::string_view to_string(Coj1Status s) {
    switch (s) {
        case Coj1Status::Strict: return "strict";
        case Coj1Status::Equality: return "equality";
        case Coj1Status::Fail: return "fail";
    }
    return "fail";
}

std::string_view to_string(Coj2Status s) {
    switch (s) {
        case Coj2Status::Holds: return "holds";
        case Coj2Status::Exception: return "exception";
        case Coj2Status::NotApplicable: return "na";
    }
    return "na";
}

namespace {

Coj1Status coj1_of(std::uint64_t pi_star, std::uint64_t pi_s) {
    const auto twice = 2 * static_cast<unsigned __int128>(pi_star);
    if (twice > pi_s) return Coj1Status::Strict;
    if (twice == pi_s) return Coj1Status::Equality;
    return Coj1Status::Fail;
}

bool thm1_of(std::uint64_t pi_star, std::uint64_t pi_s) {
    return 25 * static_cast<unsigned __int128>(pi_star) >= pi_s;
}

[[noreturn]] void corrupt(const std::string& why, std::string_view line) {
    std::string shown(line.substr(0, 120));
    throw CheckpointCorrupt("malformed checkpoint record (" + why + "): " + shown);
}

}  // namespace

VerificationRecord make_record(const SemigroupPair& pair, std::uint64_t pi_star, std::uint64_t pi_s,
                               std::uint64_t runtime_ms) {
    VerificationRecord r;
    r.a = pair.a();
    r.b = pair.b();
    r.s = pair.frobenius();
    r.pi_star = pi_star;
    r.pi_s = pi_s;
    r.thm1_holds = thm1_of(pi_star, pi_s);
    r.coj1 = coj1_of(pi_star, pi_s);
    const std::uint64_t small = std::min(r.a, r.b);
    if (small >= 3 && r.s >= 2) {
        const auto report = bounds::check_thm2(pi_star, small, r.s);
        r.thm2_rhs = report.rhs;
        r.thm2_holds = report.holds;
        r.coj2 = report.holds ? Coj2Status::Holds : Coj2Status::Exception;
    }
    r.runtime_ms = runtime_ms;
    return r;
}

std::string format_real(double x) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 6);
    return std::string(buf.data(), res.ptr);
}

std::string to_csv_row(const VerificationRecord& r) {
    std::string out;
    out += std::to_string(r.a) + ',' + std::to_string(r.b) + ',' + std::to_string(r.s) + ',';
    out += std::to_string(r.pi_star) + ',' + std::to_string(r.pi_s) + ',';
    out += (r.thm2_rhs ? format_real(*r.thm2_rhs) : "na");
    out += ',';
    out += r.thm2_holds ? (*r.thm2_holds ? "true" : "false") : "na";
    out += ',';
    out += r.thm1_holds ? "true" : "false";
    out += ',';
    out += to_string(r.coj1);
    out += ',';
    out += to_string(r.coj2);
    out += ',' + std::to_string(r.runtime_ms);
    return out;
}

std::string to_json_line(const VerificationRecord& r) {
    json j = json::object();
    j["schema"] = kRecordSchema;
    j["a"] = r.a;
    j["b"] = r.b;
    j["s"] = r.s;
    j["pi_star"] = r.pi_star;
    j["pi_s"] = r.pi_s;
    j["thm2_rhs"] = r.thm2_rhs ? json(*r.thm2_rhs) : json(nullptr);
    j["thm2"] = r.thm2_holds ? json(*r.thm2_holds) : json(nullptr);
    j["thm1"] = r.thm1_holds;
    j["coj1"] = std::string(to_string(r.coj1));
    j["coj2"] = std::string(to_string(r.coj2));
    j["ms"] = r.runtime_ms;
    return j.dump();
}

VerificationRecord parse_json_line(std::string_view line) {
    static const std::set<std::string> kFields = {"schema", "a",    "b",    "s",    "pi_star", "pi_s",
                                                  "thm2_rhs", "thm2", "thm1", "coj1", "coj2",    "ms"};
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        corrupt(e.what(), line);
    }
    if (!j.is_object()) corrupt("not an object", line);
    for (const auto& [key, _] : j.items())
        if (!kFields.contains(key)) corrupt("unknown field '" + key + "'", line);
    for (const auto& key : kFields)
        if (!j.contains(key)) corrupt("missing field '" + key + "'", line);

    auto unsigned_field = [&](const char* key) {
        if (!j[key].is_number_unsigned()) corrupt(std::string(key) + " must be a nonnegative integer", line);
        return j[key].get<std::uint64_t>();
    };
    if (!j["schema"].is_number_integer() || j["schema"].get<int>() != kRecordSchema) corrupt("schema != 1", line);

    VerificationRecord r;
    r.a = unsigned_field("a");
    r.b = unsigned_field("b");
    if (!j["s"].is_number_integer()) corrupt("s must be an integer", line);
    r.s = j["s"].get<std::int64_t>();
    r.pi_star = unsigned_field("pi_star");
    r.pi_s = unsigned_field("pi_s");
    r.runtime_ms = unsigned_field("ms");

    if (j["thm2_rhs"].is_number()) r.thm2_rhs = j["thm2_rhs"].get<double>();
    else if (!j["thm2_rhs"].is_null()) corrupt("thm2_rhs must be a number or null", line);
    if (j["thm2"].is_boolean()) r.thm2_holds = j["thm2"].get<bool>();
    else if (!j["thm2"].is_null()) corrupt("thm2 must be a boolean or null", line);
    if (r.thm2_rhs.has_value() != r.thm2_holds.has_value()) corrupt("thm2 and thm2_rhs disagree on presence", line);
    if (!j["thm1"].is_boolean()) corrupt("thm1 must be a boolean", line);
    r.thm1_holds = j["thm1"].get<bool>();

    if (!j["coj1"].is_string() || !j["coj2"].is_string()) corrupt("coj1/coj2 must be strings", line);
    const auto coj1 = j["coj1"].get<std::string>();
    if (coj1 == "strict") r.coj1 = Coj1Status::Strict;
    else if (coj1 == "equality") r.coj1 = Coj1Status::Equality;
    else if (coj1 == "fail") r.coj1 = Coj1Status::Fail;
    else corrupt("unknown coj1 value", line);
    const auto coj2 = j["coj2"].get<std::string>();
    if (coj2 == "holds") r.coj2 = Coj2Status::Holds;
    else if (coj2 == "exception") r.coj2 = Coj2Status::Exception;
    else if (coj2 == "na") r.coj2 = Coj2Status::NotApplicable;
    else corrupt("unknown coj2 value", line);

    if (r.a == 0 || r.b == 0) corrupt("generators must be positive", line);
    const __int128 s = static_cast<__int128>(r.a) * r.b - r.a - r.b;
    if (s != r.s) corrupt("s != ab - a - b", line);
    if (r.pi_star > r.pi_s) corrupt("pi_star > pi_s", line);
    if (r.coj1 != coj1_of(r.pi_star, r.pi_s) || r.thm1_holds != thm1_of(r.pi_star, r.pi_s))
        corrupt("verdicts inconsistent with counts", line);
    if (r.thm2_holds.has_value() != (r.coj2 != Coj2Status::NotApplicable) ||
        (r.thm2_holds && *r.thm2_holds != (r.coj2 == Coj2Status::Holds)))
        corrupt("thm2 and coj2 disagree", line);
    return r;
}

}  // namespace pistar
