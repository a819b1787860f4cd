#pragma once

#include <json.hpp>

#include "spex/audit.hpp"
#include "spex/constructions.hpp"
#include "spex/forbidden.hpp"
#include "spex/search.hpp"
#include "spex/spectral.hpp"
#include "spex/zykov.hpp"

namespace spex {

/// JSON encodings of every report; the document layouts are described in
/// docs/report-schemas.md.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const ForbiddenFamily& fam);
nlohmann::json to_json(const SpectralResult& r, bool include_vector = true);
nlohmann::json to_json(const FreenessResult& r);
nlohmann::json to_json(const TuranNumberBreakdown& t);
nlohmann::json to_json(const SearchReport& r, bool include_timing);
nlohmann::json to_json(const StructureReport& r);
nlohmann::json to_json(const ClimbResult& r);

}  // namespace spex
