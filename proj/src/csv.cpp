#include "tsdt/csv.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tsdt {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

int parse_index_cell(const std::string& cell, int limit, const std::string& what) {
    std::size_t pos = 0;
    int v;
    try {
        v = std::stoi(cell, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("csv: " + what + " '" + cell + "' is not an integer index");
    }
    if (pos != cell.size() || v < 0 || v >= limit)
        throw std::runtime_error("csv: " + what + " '" + cell + "' outside explicit schema");
    return v;
}

}  // namespace

Dataset parse_csv(const std::string& path, const std::string& label_column,
                  const std::optional<AttributeSchema>& explicit_schema) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("csv: cannot open file '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("csv: empty file '" + path + "'");
    const auto header = split_line(strip_cr(line));
    if (header.empty()) throw std::runtime_error("csv: empty header row");

    // Label column by name, or by 0-based index if the name does not match.
    int label_idx = -1;
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == label_column) label_idx = static_cast<int>(i);
    if (label_idx < 0) {
        bool numeric = !label_column.empty() &&
                       std::all_of(label_column.begin(), label_column.end(),
                                   [](unsigned char c) { return std::isdigit(c); });
        if (numeric) {
            const int idx = std::stoi(label_column);
            if (idx >= 0 && idx < static_cast<int>(header.size())) label_idx = idx;
        }
    }
    if (label_idx < 0)
        throw std::runtime_error("csv: unknown label column '" + label_column + "'");

    std::vector<std::vector<std::string>> raw_rows;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        auto cells = split_line(line);
        if (cells.size() != header.size())
            throw std::runtime_error("csv: row with " + std::to_string(cells.size()) +
                                     " cells, expected " + std::to_string(header.size()));
        for (const auto& c : cells)
            if (c.empty()) throw std::runtime_error("csv: empty cell");
        raw_rows.push_back(std::move(cells));
    }
    if (raw_rows.empty()) throw std::runtime_error("csv: dataset has no rows");

    const int q = static_cast<int>(header.size()) - 1;
    std::vector<int> attr_cols;
    for (int i = 0; i < static_cast<int>(header.size()); ++i)
        if (i != label_idx) attr_cols.push_back(i);

    Dataset out;
    if (explicit_schema) {
        out.schema = *explicit_schema;
        if (out.schema.num_attributes() != q)
            throw std::runtime_error("csv: explicit schema attribute count mismatch");
        for (const auto& cells : raw_rows) {
            Instance inst;
            inst.values.reserve(static_cast<std::size_t>(q));
            for (int a = 0; a < q; ++a)
                inst.values.push_back(parse_index_cell(
                    cells[static_cast<std::size_t>(attr_cols[static_cast<std::size_t>(a)])],
                    out.schema.cardinality(a), "value"));
            inst.label = parse_index_cell(cells[static_cast<std::size_t>(label_idx)],
                                          out.schema.num_classes, "label");
            out.rows.push_back(std::move(inst));
        }
        return out;
    }

    // Infer categories: distinct strings per column, sorted lexicographically.
    std::vector<std::map<std::string, int>> attr_maps(static_cast<std::size_t>(q));
    std::map<std::string, int> label_map;
    for (const auto& cells : raw_rows) {
        for (int a = 0; a < q; ++a)
            attr_maps[static_cast<std::size_t>(a)].emplace(
                cells[static_cast<std::size_t>(attr_cols[static_cast<std::size_t>(a)])], 0);
        label_map.emplace(cells[static_cast<std::size_t>(label_idx)], 0);
    }
    for (auto& m : attr_maps) {
        int idx = 0;
        for (auto& [_, v] : m) v = idx++;  // std::map iterates in sorted order
    }
    {
        int idx = 0;
        for (auto& [_, v] : label_map) v = idx++;
    }
    if (label_map.size() < 2) throw std::runtime_error("csv: label column has fewer than 2 classes");

    for (int a = 0; a < q; ++a)
        out.schema.attributes.push_back(
            {header[static_cast<std::size_t>(attr_cols[static_cast<std::size_t>(a)])],
             static_cast<int>(attr_maps[static_cast<std::size_t>(a)].size())});
    out.schema.num_classes = static_cast<int>(label_map.size());

    for (const auto& cells : raw_rows) {
        Instance inst;
        inst.values.reserve(static_cast<std::size_t>(q));
        for (int a = 0; a < q; ++a)
            inst.values.push_back(attr_maps[static_cast<std::size_t>(a)].at(
                cells[static_cast<std::size_t>(attr_cols[static_cast<std::size_t>(a)])]));
        inst.label = label_map.at(cells[static_cast<std::size_t>(label_idx)]);
        out.rows.push_back(std::move(inst));
    }
    out.validate();
    return out;
}

void write_csv(const std::string& path, const Dataset& dataset, const std::string& label_column) {
    std::ofstream outf(path);
    if (!outf) throw std::runtime_error("csv: cannot write file '" + path + "'");
    for (const auto& a : dataset.schema.attributes) outf << a.name << ',';
    outf << label_column << '\n';
    for (const auto& row : dataset.rows) {
        for (auto v : row.values) outf << v << ',';
        outf << row.label << '\n';
    }
}

}  // namespace tsdt
