#include "pilat/io.hpp"

#include <fstream>
#include <istream>

#include "pilat/error.hpp"

namespace pilat {

void to_json(nlohmann::json& j, const Partition& p) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : p.blocks()) blocks.push_back(b.elements());
    j = nlohmann::json{{"n", p.ground_size()}, {"blocks", std::move(blocks)}};
}

void from_json(const nlohmann::json& j, Partition& p) {
    try {
        const int n = j.at("n").get<int>();
        if (n < 0 || n > kMaxGround) throw ParseError("partition JSON: n out of range");
        std::vector<ElementSet> blocks;
        for (const auto& jb : j.at("blocks")) {
            ElementSet s;
            for (const auto& je : jb) {
                const int e = je.get<int>();
                if (e < 0 || e >= kMaxGround) throw ParseError("partition JSON: element out of range");
                if (s.contains(e)) throw ParseError("duplicate element " + std::to_string(e));
                s.insert(e);
            }
            blocks.push_back(s);
        }
        p = Partition::from_blocks(n, std::move(blocks));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("partition JSON: ") + e.what());
    }
}

ContinuumModel model_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object()) throw ParseError("model file: expected an object");
        if (j.value("gch", false)) return ContinuumModel::gch();
        std::map<Ordinal, Ordinal> table;
        if (j.contains("continuum"))
            for (const auto& [key, value] : j.at("continuum").items()) {
                const std::string v = value.is_string() ? value.get<std::string>() : value.dump();
                table.emplace(parse_ordinal(key), parse_ordinal(v));
            }
        return ContinuumModel::custom(std::move(table));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("model file: ") + e.what());
    }
}

ContinuumModel load_model(const std::string& spec) {
    if (spec == "gch") return ContinuumModel::gch();
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open model file '" + spec + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("model file '" + spec + "': " + e.what());
    }
    return model_from_json(j);
}

std::vector<Partition> read_partition_lines(std::istream& in, int n) {
    std::vector<Partition> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(n >= 0 ? parse(line, n) : parse(line));
    }
    return out;
}

}  // namespace pilat
