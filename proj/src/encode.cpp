#include "tsdt/encode.hpp"

#include <stdexcept>

namespace tsdt {

EncodeMode parse_encode_mode(const std::string& name) {
    if (name == "none") return EncodeMode::none;
    if (name == "drop_first" || name == "drop-first") return EncodeMode::drop_first;
    if (name == "drop_last" || name == "drop-last") return EncodeMode::drop_last;
    throw std::invalid_argument("unknown encoding mode '" + name + "'");
}

std::string to_string(EncodeMode mode) {
    switch (mode) {
        case EncodeMode::none: return "none";
        case EncodeMode::drop_first: return "drop_first";
        case EncodeMode::drop_last: return "drop_last";
    }
    return "none";
}

Dataset one_hot_encode(const Dataset& dataset, EncodeMode mode) {
    dataset.validate();
    if (mode == EncodeMode::none) return dataset;

    Dataset out;
    out.schema.num_classes = dataset.schema.num_classes;

    // Indicator categories per source attribute: all but the dropped one.
    std::vector<std::vector<int>> kept(
        static_cast<std::size_t>(dataset.schema.num_attributes()));
    for (int a = 0; a < dataset.schema.num_attributes(); ++a) {
        const auto& attr = dataset.schema.attributes[static_cast<std::size_t>(a)];
        if (attr.cardinality <= 2) {
            out.schema.attributes.push_back(attr);
            continue;
        }
        const int first = mode == EncodeMode::drop_first ? 1 : 0;
        const int last = mode == EncodeMode::drop_first ? attr.cardinality : attr.cardinality - 1;
        for (int j = first; j < last; ++j) {
            kept[static_cast<std::size_t>(a)].push_back(j);
            out.schema.attributes.push_back({attr.name + "=" + std::to_string(j), 2});
        }
    }

    for (const auto& row : dataset.rows) {
        Instance inst;
        inst.label = row.label;
        inst.values.reserve(out.schema.attributes.size());
        for (int a = 0; a < dataset.schema.num_attributes(); ++a) {
            if (dataset.schema.cardinality(a) <= 2) {
                inst.values.push_back(row.values[static_cast<std::size_t>(a)]);
                continue;
            }
            for (int j : kept[static_cast<std::size_t>(a)])
                inst.values.push_back(row.values[static_cast<std::size_t>(a)] == j ? 1 : 0);
        }
        out.rows.push_back(std::move(inst));
    }
    return out;
}

}  // namespace tsdt
