#pragma once

#include <optional>
#include <string>

#include "tsdt/types.hpp"

namespace tsdt {

// Comma-separated, UTF-8, mandatory header row, no quoting. Categories are the
// distinct cell strings of each column, sorted lexicographically and mapped to
// 0-based indices. With an explicit schema, cells must already be integer
// indices within the schema's cardinalities (and labels within [0, K)).
Dataset parse_csv(const std::string& path, const std::string& label_column,
                  const std::optional<AttributeSchema>& explicit_schema = std::nullopt);

void write_csv(const std::string& path, const Dataset& dataset,
               const std::string& label_column = "class");

}  // namespace tsdt
