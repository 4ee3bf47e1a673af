#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsdt {

using Rng = std::mt19937_64;

// Cheap stateless mixer, used to derive independent sub-seeds from one seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct AttributeSchema {
    struct Attribute {
        std::string name;
        int cardinality = 0;
    };

    std::vector<Attribute> attributes;
    int num_classes = 2;

    int num_attributes() const { return static_cast<int>(attributes.size()); }
    int cardinality(int i) const { return attributes.at(static_cast<std::size_t>(i)).cardinality; }

    void validate() const {
        if (num_classes < 2)
            throw std::invalid_argument("schema: num_classes must be >= 2");
        for (const auto& a : attributes)
            if (a.cardinality < 1)
                throw std::invalid_argument("schema: attribute '" + a.name + "' has cardinality < 1");
    }
};

struct Instance {
    std::vector<int> values;
    int label = 0;
};

inline void check_instance(const AttributeSchema& schema, const Instance& inst) {
    if (inst.values.size() != schema.attributes.size())
        throw std::invalid_argument("instance: wrong number of attribute values");
    for (std::size_t i = 0; i < inst.values.size(); ++i)
        if (inst.values[i] < 0 || inst.values[i] >= schema.attributes[i].cardinality)
            throw std::invalid_argument("instance: value out of range for attribute '" +
                                        schema.attributes[i].name + "'");
    if (inst.label < 0 || inst.label >= schema.num_classes)
        throw std::invalid_argument("instance: label out of range");
}

struct Dataset {
    AttributeSchema schema;
    std::vector<Instance> rows;

    std::size_t size() const { return rows.size(); }
    bool empty() const { return rows.empty(); }

    void validate() const {
        schema.validate();
        for (const auto& r : rows) check_instance(schema, r);
    }
};

}  // namespace tsdt
