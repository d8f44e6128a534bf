#pragma once

// JSON forms: partitions as {"n": int, "blocks": [[int]]}; continuum models as
// {"gch": bool, "continuum": {"<ordinal>": "<ordinal>"}} meaning 2^aleph(key) = aleph(value).

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pilat/cardinal.hpp"
#include "pilat/partition.hpp"

namespace pilat {

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

ContinuumModel model_from_json(const nlohmann::json& j);
/// "gch" or a path to a model file.
ContinuumModel load_model(const std::string& spec);

/// One partition literal per line; blank lines and lines starting with '#' are skipped.
/// The ground set is inferred from each literal unless n >= 0.
std::vector<Partition> read_partition_lines(std::istream& in, int n = -1);

}  // namespace pilat
