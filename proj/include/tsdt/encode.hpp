#pragma once

#include <string>

#include "tsdt/types.hpp"

namespace tsdt {

enum class EncodeMode { none, drop_first, drop_last };

EncodeMode parse_encode_mode(const std::string& name);
std::string to_string(EncodeMode mode);

// One-hot encode attributes with cardinality > 2 into cardinality-1 binary
// indicators; the dropped category is the all-zeros pattern. Binary and
// degenerate attributes pass through unchanged; labels are untouched.
Dataset one_hot_encode(const Dataset& dataset, EncodeMode mode);

}  // namespace tsdt
