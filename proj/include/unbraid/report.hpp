#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unbraid {

struct CheckRecord {
    std::string suite;
    std::string check;
    std::string instance;
    bool pass = true;
    std::string witness;     // element string on failure
    bool scale_flagged = false; // separate flag for extended-generator action gaps
    long wall_ms = 0;
};

struct Report {
    std::vector<CheckRecord> records;

    void add(std::string suite, std::string check, std::string instance, bool pass,
             std::string witness = "", bool scale_flagged = false) {
        records.push_back(CheckRecord{std::move(suite), std::move(check), std::move(instance), pass,
                                      std::move(witness), scale_flagged, 0});
    }
    void merge(const Report& o) {
        records.insert(records.end(), o.records.begin(), o.records.end());
    }
    bool all_pass() const {
        for (auto& r : records)
            if (!r.pass && !r.scale_flagged) return false;
        return true;
    }
    size_t failures() const {
        size_t n = 0;
        for (auto& r : records)
            if (!r.pass && !r.scale_flagged) ++n;
        return n;
    }
    void to_jsonl(std::ostream& os, bool stable_timing = false) const;
};

std::string json_escape(const std::string& s);

} // namespace unbraid
