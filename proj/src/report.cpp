#include "unbraid/report.hpp"

namespace unbraid {

std::string json_escape(const std::string& s) {
    std::string r;
    for (char c : s) {
        switch (c) {
            case '"': r += "\\\""; break;
            case '\\': r += "\\\\"; break;
            case '\n': r += "\\n"; break;
            default: r += c;
        }
    }
    return r;
}

void Report::to_jsonl(std::ostream& os, bool stable_timing) const {
    for (auto& r : records) {
        os << "{\"suite\":\"" << json_escape(r.suite) << "\",\"check\":\"" << json_escape(r.check)
           << "\",\"instance\":\"" << json_escape(r.instance) << "\",\"verdict\":\""
           << (r.pass ? "pass" : (r.scale_flagged ? "flagged" : "fail")) << "\"";
        if (!r.witness.empty()) os << ",\"witness\":\"" << json_escape(r.witness) << "\"";
        os << ",\"wall_ms\":" << (stable_timing ? 0 : r.wall_ms) << "}\n";
    }
}

} // namespace unbraid
