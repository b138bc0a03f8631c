#pragma once

#include <string>
#include <vector>

#include "numeric.hpp"

namespace catalan {

// One structured output record: an ordered list of key/value pairs. Values
// are decimal strings so every number stays exact.
struct Record {
    std::vector<std::pair<std::string, std::string>> fields;

    Record& add(std::string key, std::string value) {
        fields.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    Record& add(std::string key, const Int& v) { return add(std::move(key), v.get_str()); }
    Record& add(std::string key, const Rat& v) { return add(std::move(key), v.get_str()); }
    Record& add(std::string key, uint64_t v) {
        return add(std::move(key), std::to_string(v));
    }
    Record& add(std::string key, int v) { return add(std::move(key), std::to_string(v)); }
    Record& add(std::string key, bool v) {
        return add(std::move(key), std::string(v ? "true" : "false"));
    }

    const std::string* find(const std::string& key) const;

    bool operator==(const Record& o) const { return fields == o.fields; }
};

// A report is a list of records; by convention the first is a header echoing
// the command and parameters, and the last is a summary with a status field.
struct Report {
    std::vector<Record> records;
    bool passed = true;

    Record& add_record() {
        records.emplace_back();
        return records.back();
    }

    // One JSON object per line, insertion-ordered keys, all values strings.
    std::string to_json() const;
    static Report from_json(const std::string& text);

    // Appends the summary record, sets passed, and returns the record so the
    // caller can attach counts and extras.
    Record& finish(bool pass);

    bool operator==(const Report& o) const {
        return records == o.records && passed == o.passed;
    }
};

} // namespace catalan
