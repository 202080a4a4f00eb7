#pragma once

// Named integer sequences with provenance, plus their TSV / JSON renderings.
// JSON keeps values as decimal strings so arbitrary precision survives the
// round trip.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpav/arith.hpp"

namespace gpav {

struct SequenceRecord {
    std::string name;
    std::string spec;        // canonical constraint string or formula id
    std::string provenance;  // oracle | recurrence | closed-form | series
    std::vector<BigInt> values;  // indexed from n = 0

    friend bool operator==(const SequenceRecord& a, const SequenceRecord& b) {
        return a.name == b.name && a.spec == b.spec && a.provenance == b.provenance &&
               a.values == b.values;
    }
};

inline nlohmann::json to_json(const SequenceRecord& rec) {
    nlohmann::json vals = nlohmann::json::array();
    for (std::size_t n = 0; n < rec.values.size(); ++n)
        vals.push_back({{"n", (int)n}, {"value", rec.values[n].str()}});
    return nlohmann::json{{"name", rec.name},
                          {"spec", rec.spec},
                          {"provenance", rec.provenance},
                          {"values", vals}};
}

inline SequenceRecord record_from_json(const nlohmann::json& j) {
    SequenceRecord rec;
    rec.name = j.at("name").get<std::string>();
    rec.spec = j.at("spec").get<std::string>();
    rec.provenance = j.at("provenance").get<std::string>();
    const auto& vals = j.at("values");
    rec.values.resize(vals.size());
    for (const auto& item : vals) {
        int n = item.at("n").get<int>();
        if (n < 0 || n >= (int)rec.values.size())
            throw std::invalid_argument("sequence record: bad index n=" + std::to_string(n));
        rec.values[n] = BigInt(item.at("value").get<std::string>());
    }
    return rec;
}

}  // namespace gpav
