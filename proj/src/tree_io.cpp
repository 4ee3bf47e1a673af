#include "tsdt/tree_io.hpp"

#include <sstream>
#include <stdexcept>

namespace tsdt {

namespace {

DumpNode dump_rec(const StructNode* node, const NodeStore& store, int fallback) {
    DumpNode out;
    if (node->is_leaf()) {
        const NodeStats* s = store.find(node->key);
        out.n = s ? s->n : 0;
        out.prediction = (s && s->n > 0) ? majority_class(s->class_counts) : fallback;
        return out;
    }
    out.attribute = node->attribute;
    for (const auto& c : node->children)
        out.children.push_back(dump_rec(c.get(), store, fallback));
    return out;
}

void format_rec(const DumpNode& node, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (node.is_leaf()) {
        out += pad + "predict " + std::to_string(node.prediction) +
               " (n=" + std::to_string(node.n) + ")\n";
        return;
    }
    const auto last = node.children.size() - 1;
    for (std::size_t v = 0; v <= last; ++v) {
        if (v == 0)
            out += pad + "if attr" + std::to_string(node.attribute) + " == 0:\n";
        else if (v < last)
            out += pad + "elif attr" + std::to_string(node.attribute) + " == " +
                   std::to_string(v) + ":\n";
        else
            out += pad + "else:\n";
        format_rec(node.children[v], depth + 1, out);
    }
}

struct Line {
    int depth = 0;
    std::string body;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::stringstream ss(text);
    std::string raw;
    while (std::getline(ss, raw)) {
        if (raw.empty()) continue;
        std::size_t spaces = 0;
        while (spaces < raw.size() && raw[spaces] == ' ') ++spaces;
        if (spaces % 2 != 0) throw std::runtime_error("tree text: odd indentation");
        lines.push_back({static_cast<int>(spaces / 2), raw.substr(spaces)});
    }
    return lines;
}

DumpNode parse_rec(const std::vector<Line>& lines, std::size_t& pos, int depth) {
    if (pos >= lines.size()) throw std::runtime_error("tree text: unexpected end");
    const Line& line = lines[pos];
    if (line.depth != depth) throw std::runtime_error("tree text: bad indentation");

    DumpNode node;
    if (line.body.rfind("predict ", 0) == 0) {
        int pred = 0;
        long long n = 0;
        if (std::sscanf(line.body.c_str(), "predict %d (n=%lld)", &pred, &n) != 2)
            throw std::runtime_error("tree text: bad predict line '" + line.body + "'");
        node.prediction = pred;
        node.n = n;
        ++pos;
        return node;
    }

    if (line.body.rfind("if attr", 0) != 0)
        throw std::runtime_error("tree text: expected if/predict, got '" + line.body + "'");
    int attr = -1, value = -1;
    if (std::sscanf(line.body.c_str(), "if attr%d == %d:", &attr, &value) != 2 || value != 0)
        throw std::runtime_error("tree text: bad if line '" + line.body + "'");
    node.attribute = attr;
    ++pos;
    node.children.push_back(parse_rec(lines, pos, depth + 1));

    while (pos < lines.size() && lines[pos].depth == depth &&
           (lines[pos].body.rfind("elif ", 0) == 0 || lines[pos].body == "else:")) {
        const bool is_else = lines[pos].body == "else:";
        if (!is_else) {
            int a = -1, v = -1;
            if (std::sscanf(lines[pos].body.c_str(), "elif attr%d == %d:", &a, &v) != 2 ||
                a != attr || v != static_cast<int>(node.children.size()))
                throw std::runtime_error("tree text: bad elif line '" + lines[pos].body + "'");
        }
        ++pos;
        node.children.push_back(parse_rec(lines, pos, depth + 1));
        if (is_else) break;
    }
    if (node.children.size() < 2)
        throw std::runtime_error("tree text: split with fewer than 2 branches");
    return node;
}

void dot_rec(const DumpNode& node, int& next_id, std::string& out) {
    const int id = next_id++;
    if (node.is_leaf()) {
        out += "  n" + std::to_string(id) + " [label=\"predict " +
               std::to_string(node.prediction) + " (n=" + std::to_string(node.n) +
               ")\", shape=box];\n";
        return;
    }
    out += "  n" + std::to_string(id) + " [label=\"X" + std::to_string(node.attribute) +
           "\"];\n";
    for (std::size_t v = 0; v < node.children.size(); ++v) {
        const int child_id = next_id;
        dot_rec(node.children[v], next_id, out);
        out += "  n" + std::to_string(id) + " -> n" + std::to_string(child_id) +
               " [label=\"" + std::to_string(v) + "\"];\n";
    }
}

}  // namespace

DumpNode dump_tree(const TreeState& tree, const NodeStore& store) {
    int fallback = 0;
    const NodeStats* root_stats = store.find(tree.root->key);
    if (root_stats && root_stats->n > 0) fallback = majority_class(root_stats->class_counts);
    return dump_rec(tree.root.get(), store, fallback);
}

std::string format_tree_text(const DumpNode& root) {
    std::string out;
    format_rec(root, 0, out);
    return out;
}

DumpNode parse_tree_text(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw std::runtime_error("tree text: empty input");
    std::size_t pos = 0;
    DumpNode root = parse_rec(lines, pos, 0);
    if (pos != lines.size()) throw std::runtime_error("tree text: trailing lines");
    return root;
}

std::string format_tree_dot(const DumpNode& root) {
    std::string out = "digraph tree {\n";
    int next_id = 0;
    dot_rec(root, next_id, out);
    out += "}\n";
    return out;
}

}  // namespace tsdt
