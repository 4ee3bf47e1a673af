#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsdt/data_ops.hpp"
#include "tsdt/node_store.hpp"
#include "tsdt/tree.hpp"

namespace tsdt {

// Self-contained tree snapshot used by the text/DOT exporters: structure plus
// per-leaf prediction and sample count, so dumps can be reloaded without a store.
struct DumpNode {
    int attribute = -1;  // -1 for a leaf
    std::vector<DumpNode> children;
    int prediction = 0;
    std::int64_t n = 0;

    bool is_leaf() const { return attribute < 0; }
};

DumpNode dump_tree(const TreeState& tree, const NodeStore& store);

// One `if attr<i> == <v>:` line per split node (elif/else lines cover the
// remaining categories, else is the last one), one `predict <k> (n=<n>)` line
// per leaf, indent two spaces per depth. Byte-stable and parseable.
std::string format_tree_text(const DumpNode& root);
DumpNode parse_tree_text(const std::string& text);

// DOT digraph with split nodes labeled X<i> and edges labeled by category value.
std::string format_tree_dot(const DumpNode& root);

}  // namespace tsdt
