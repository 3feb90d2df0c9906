#pragma once

#include <string>
#include <vector>

#include "json_io.hpp"

namespace latfix::gallery {

/// Case ids in canonical order.
const std::vector<std::string>& case_ids();

/// Runs one case end to end; throws InvalidInput for an unknown id.
io::Json run_case(const std::string& id);

/// Canonical serialization used for fixtures and comparisons.
std::string canonical_text(const io::Json& report);

std::string fixture_path(const std::string& dir, const std::string& id);

}  // namespace latfix::gallery
