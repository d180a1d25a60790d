#include "qcontig/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace qcontig {

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Error: return "error";
        case Status::SkippedRegion: return "skipped-region";
    }
    return "error";
}

std::string to_json_line(const VerificationReport& r, bool with_timing) {
    nlohmann::ordered_json j;
    j["identity"] = r.identity;
    nlohmann::ordered_json inst;
    inst["n"] = r.instance.n;
    if (r.instance.m) inst["m"] = *r.instance.m;
    if (r.instance.kind == Instance::Kind::Symbolic) {
        inst["params"] = "symbolic";
    } else {
        inst["params"] = nlohmann::ordered_json{{"seed", r.instance.seed}};
    }
    j["instance"] = std::move(inst);
    j["mode"] = r.mode;
    j["status"] = status_name(r.status);
    if (r.witness) {
        nlohmann::ordered_json w;
        for (const auto& [k, v] : *r.witness) w[k] = v;
        j["witness"] = std::move(w);
    }
    j["elapsed_ms"] = with_timing ? r.elapsed_ms : 0.0;
    return j.dump() + "\n";
}

std::string to_tsv_line(const VerificationReport& r, bool with_timing) {
    std::ostringstream os;
    os << r.identity << '\t' << r.instance.n << '\t';
    if (r.instance.m) os << *r.instance.m;
    else os << '-';
    os << '\t' << r.mode << '\t' << status_name(r.status) << '\t';
    if (r.witness) {
        bool first = true;
        for (const auto& [k, v] : *r.witness) {
            if (!first) os << ',';
            os << k << '=' << v;
            first = false;
        }
    } else {
        os << '-';
    }
    os << '\t' << (with_timing ? r.elapsed_ms : 0.0) << '\n';
    return os.str();
}

} // namespace qcontig
