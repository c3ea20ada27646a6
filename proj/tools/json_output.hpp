#pragma once

#include "json.hpp"

#include "evomt/pipeline.hpp"

namespace evomt::cli {

nlohmann::json to_json(const TranslationResult& result);

}  // namespace evomt::cli
