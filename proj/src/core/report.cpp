#include "report.hpp"

#include <sstream>

#include <json.hpp>

namespace catalan {

const std::string* Record::find(const std::string& key) const {
    for (const auto& [k, v] : fields)
        if (k == key) return &v;
    return nullptr;
}

std::string Report::to_json() const {
    std::string out;
    for (const Record& rec : records) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (const auto& [k, v] : rec.fields) obj[k] = v;
        out += obj.dump();
        out += "\n";
    }
    return out;
}

Report Report::from_json(const std::string& text) {
    Report rep;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::ordered_json obj = nlohmann::ordered_json::parse(line);
        Record rec;
        for (auto it = obj.begin(); it != obj.end(); ++it)
            rec.add(it.key(), it.value().get<std::string>());
        rep.records.push_back(std::move(rec));
    }
    rep.passed = true;
    if (!rep.records.empty()) {
        const std::string* status = rep.records.back().find("status");
        if (status) rep.passed = *status == "pass";
    }
    return rep;
}

Record& Report::finish(bool pass) {
    passed = pass;
    return add_record()
        .add("record", std::string("summary"))
        .add("status", std::string(pass ? "pass" : "fail"));
}

} // namespace catalan
