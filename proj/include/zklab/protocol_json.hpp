#pragma once

#include <json.hpp>

#include "zklab/protocol.hpp"

namespace zklab {

// Table-form wire schema for protocol specs; maps are explicit tables keyed
// by hex-encoded tape indices. schema_version is mandatory on both formats.
inline constexpr const char* kNizkSchemaVersion = "zklab-nizk/1";
inline constexpr const char* kInteractiveSchemaVersion = "zklab-interactive/1";

nlohmann::json nizk_to_json(const NizkSpec& spec);
NizkSpec nizk_from_json(const nlohmann::json& j);

nlohmann::json interactive_to_json(const InteractiveSpec& spec);
InteractiveSpec interactive_from_json(const nlohmann::json& j);

}  // namespace zklab
