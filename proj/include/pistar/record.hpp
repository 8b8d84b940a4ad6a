#pragma once

// Per-pair verification verdicts and their two wire forms: a CSV row and a
// JSON object line (the checkpoint log schema).
//
// CSV header:  a,b,s,pi_star,pi_s,thm2_rhs,thm2,thm1,coj1,coj2,ms
// JSON line:   {"schema":1,"a":..,"b":..,"s":..,"pi_star":..,"pi_s":..,
//               "thm2_rhs":<number|null>,"thm2":<bool|null>,"thm1":<bool>,
//               "coj1":"strict"|"equality"|"fail",
//               "coj2":"holds"|"exception"|"na","ms":..}

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pistar/semigroup.hpp"

namespace pistar {

// pi* >= pi(S)/2, and whether equality is attained.
enum class Coj1Status { Strict, Equality, Fail };
// pi* > (1/2 + 1/(2(a-1))) S / log S for a >= 3; otherwise not applicable.
enum class Coj2Status { Holds, Exception, NotApplicable };

std::string_view to_string(Coj1Status s);
std::string_view to_string(Coj2Status s);

struct VerificationRecord {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::int64_t s = 0;
    std::uint64_t pi_star = 0;
    std::uint64_t pi_s = 0;
    std::optional<double> thm2_rhs;  // present iff min(a, b) >= 3 and S >= 2
    std::optional<bool> thm2_holds;
    bool thm1_holds = false;  // 25 pi* >= pi(S)
    Coj1Status coj1 = Coj1Status::Fail;
    Coj2Status coj2 = Coj2Status::NotApplicable;
    std::uint64_t runtime_ms = 0;

    friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

// Derives every verdict from the exact counts. Integer forms are used for
// the 1/2 and 0.04 comparisons; the log bound goes through the guard.
VerificationRecord make_record(const SemigroupPair& pair, std::uint64_t pi_star, std::uint64_t pi_s,
                               std::uint64_t runtime_ms = 0);

inline constexpr std::string_view kCsvHeader = "a,b,s,pi_star,pi_s,thm2_rhs,thm2,thm1,coj1,coj2,ms";
inline constexpr int kRecordSchema = 1;

std::string to_csv_row(const VerificationRecord& r);
std::string to_json_line(const VerificationRecord& r);

// Strict parse: exactly the schema's fields, schema == 1, correct types and
// internally consistent verdicts. Throws CheckpointCorrupt otherwise.
VerificationRecord parse_json_line(std::string_view line);

// Six significant digits, locale independent.
std::string format_real(double x);

}  // namespace pistar
