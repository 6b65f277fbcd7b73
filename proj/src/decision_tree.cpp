#include "vgaml/decision_tree.hpp"

#include "vgaml/csv.hpp"
#include "vgaml/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vgaml {

std::uint64_t TreeNode::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

std::uint64_t TreeNode::errors() const { return total() - counts[class_index(cls)]; }

std::size_t DecisionTree::leaves() const {
    return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const TreeNode& n) { return n.leaf; }));
}

std::size_t DecisionTree::leaf_of(std::span<const double> instance) const {
    if (instance.size() != schema.size()) {
        throw SchemaError("instance has " + std::to_string(instance.size()) + " values, tree expects " +
                          std::to_string(schema.size()));
    }
    std::size_t at = 0;
    while (!nodes[at].leaf) {
        const auto& n = nodes[at];
        const double v = instance[n.attribute];
        if (std::isnan(v)) throw SchemaError("missing value for attribute '" + schema[n.attribute].name + "'");
        if (n.numeric) {
            at = n.children[v <= n.threshold ? 0 : 1];
        } else {
            const auto i = static_cast<std::size_t>(v);
            if (i >= n.children.size()) throw SchemaError("nominal value index out of range");
            at = n.children[i];
        }
    }
    return at;
}

UsageClass tree_predict(const DecisionTree& tree, std::span<const double> instance) {
    return tree.nodes[tree.leaf_of(instance)].cls;
}

double entropy_bits(const ClassCounts& counts) {
    double total = 0;
    for (auto c : counts) total += static_cast<double>(c);
    if (total == 0) return 0;
    double e = 0;
    for (auto c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / total;
        e -= p * std::log2(p);
    }
    return e;
}

double information_gain(const ClassCounts& parent, std::span<const ClassCounts> parts) {
    double total = 0;
    for (auto c : parent) total += static_cast<double>(c);
    if (total == 0) return 0;
    double rest = 0;
    for (const auto& p : parts) {
        double n = 0;
        for (auto c : p) n += static_cast<double>(c);
        rest += n / total * entropy_bits(p);
    }
    return std::max(0.0, entropy_bits(parent) - rest);
}

namespace {

constexpr double kMinGain = 1e-12;

struct Split {
    bool found = false;
    double score = 0;
    std::size_t attribute = 0;
    bool numeric = true;
    double threshold = 0;
};

double split_info(std::span<const double> sizes, double total) {
    double s = 0;
    for (double n : sizes) {
        if (n > 0) s -= n / total * std::log2(n / total);
    }
    return s;
}

class Grower {
public:
    Grower(const Dataset& ds, const TreeOptions& opt) : ds_(ds), opt_(opt) {}

    DecisionTree run() {
        tree_.schema = ds_.schema();
        tree_.gain_ratio = opt_.criterion == SplitCriterion::GainRatio;
        std::vector<std::size_t> rows(ds_.size());
        std::iota(rows.begin(), rows.end(), 0);
        grow(rows);
        return std::move(tree_);
    }

private:
    ClassCounts count(std::span<const std::size_t> rows) const {
        ClassCounts c{};
        for (auto r : rows) ++c[class_index(ds_.label(r))];
        return c;
    }

    double score(const ClassCounts& parent, std::span<const ClassCounts> parts, double total) const {
        const double gain = information_gain(parent, parts);
        if (opt_.criterion == SplitCriterion::InfoGain) return gain;
        std::vector<double> sizes;
        for (const auto& p : parts) sizes.push_back(static_cast<double>(std::accumulate(p.begin(), p.end(), std::uint64_t{0})));
        const double si = split_info(sizes, total);
        return si > 0 ? gain / si : 0;
    }

    void numeric_split(std::span<const std::size_t> rows, const ClassCounts& parent, std::size_t a, Split& best) const {
        const std::size_t n = rows.size();
        std::vector<std::pair<double, std::uint8_t>> sorted(n);
        for (std::size_t i = 0; i < n; ++i) {
            sorted[i] = {ds_.value(rows[i], a), static_cast<std::uint8_t>(class_index(ds_.label(rows[i])))};
        }
        std::sort(sorted.begin(), sorted.end());
        // Walk runs of equal values; a run's class is -1 when it mixes classes.
        ClassCounts left{};
        const double total = static_cast<double>(n);
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            int run_class = sorted[i].second;
            while (j < n && sorted[j].first == sorted[i].first) {
                if (sorted[j].second != run_class) run_class = -1;
                ++left[sorted[j].second];
                ++j;
            }
            if (j < n) {
                int next_class = sorted[j].second;
                for (std::size_t t = j; t < n && sorted[t].first == sorted[j].first; ++t) {
                    if (sorted[t].second != next_class) {
                        next_class = -1;
                        break;
                    }
                }
                const bool boundary = run_class == -1 || next_class == -1 || run_class != next_class;
                if (boundary && j >= opt_.min_leaf && n - j >= opt_.min_leaf) {
                    ClassCounts right{};
                    for (std::size_t c = 0; c < kNumClasses; ++c) right[c] = parent[c] - left[c];
                    const ClassCounts parts[2] = {left, right};
                    const double s = score(parent, parts, total);
                    if (s > kMinGain && (!best.found || s > best.score)) {
                        best = {true, s, a, true, (sorted[j - 1].first + sorted[j].first) / 2.0};
                    }
                }
            }
            i = j;
        }
    }

    void nominal_split(std::span<const std::size_t> rows, const ClassCounts& parent, std::size_t a, Split& best) const {
        const auto v_count = ds_.schema()[a].values.size();
        if (v_count < 2) return;
        std::vector<ClassCounts> parts(v_count, ClassCounts{});
        for (auto r : rows) ++parts[static_cast<std::size_t>(ds_.value(r, a))][class_index(ds_.label(r))];
        for (const auto& p : parts) {
            if (std::accumulate(p.begin(), p.end(), std::uint64_t{0}) < opt_.min_leaf) return;
        }
        const double s = score(parent, parts, static_cast<double>(rows.size()));
        if (s > kMinGain && (!best.found || s > best.score)) best = {true, s, a, false, 0};
    }

    std::size_t grow(std::vector<std::size_t>& rows) {
        const std::size_t id = tree_.nodes.size();
        tree_.nodes.emplace_back();
        {
            auto& node = tree_.nodes[id];
            node.counts = count(rows);
            node.cls = class_from_index(majority_index(node.counts));
        }
        const ClassCounts parent = tree_.nodes[id].counts;
        const bool pure = std::count_if(parent.begin(), parent.end(), [](auto c) { return c > 0; }) <= 1;
        if (pure || rows.size() < 2 * opt_.min_leaf) return id;

        Split best;
        for (std::size_t a = 0; a < ds_.num_attributes(); ++a) {
            if (ds_.schema()[a].kind == AttributeKind::Numeric) {
                numeric_split(rows, parent, a, best);
            } else {
                nominal_split(rows, parent, a, best);
            }
        }
        if (!best.found) return id;

        std::vector<std::vector<std::size_t>> parts;
        if (best.numeric) {
            parts.resize(2);
            for (auto r : rows) parts[ds_.value(r, best.attribute) <= best.threshold ? 0 : 1].push_back(r);
        } else {
            parts.resize(ds_.schema()[best.attribute].values.size());
            for (auto r : rows) parts[static_cast<std::size_t>(ds_.value(r, best.attribute))].push_back(r);
        }
        rows.clear();
        rows.shrink_to_fit();
        std::vector<std::size_t> children;
        for (auto& p : parts) children.push_back(grow(p));
        auto& node = tree_.nodes[id];
        node.leaf = false;
        node.attribute = best.attribute;
        node.numeric = best.numeric;
        node.threshold = best.threshold;
        node.children = std::move(children);
        return id;
    }

    const Dataset& ds_;
    TreeOptions opt_;
    DecisionTree tree_;
};

}  // namespace

DecisionTree grow_tree(const Dataset& ds, const TreeOptions& options) {
    if (ds.empty()) throw SchemaError("cannot train on an empty dataset");
    if (options.min_leaf < 1) throw SchemaError("minimum leaf size must be at least 1");
    return Grower(ds, options).run();
}

DecisionTree collapse_nodes(const DecisionTree& tree, const std::vector<bool>& collapse) {
    DecisionTree out;
    out.schema = tree.schema;
    out.gain_ratio = tree.gain_ratio;
    auto copy = [&](auto&& self, std::size_t at) -> std::size_t {
        const std::size_t id = out.nodes.size();
        out.nodes.push_back(tree.nodes[at]);
        if (tree.nodes[at].leaf || collapse[at]) {
            out.nodes[id].leaf = true;
            out.nodes[id].children.clear();
            return id;
        }
        std::vector<std::size_t> kids;
        for (auto c : tree.nodes[at].children) kids.push_back(self(self, c));
        out.nodes[id].children = std::move(kids);
        return id;
    };
    copy(copy, 0);
    return out;
}

namespace {

void append_node(const DecisionTree& tree, std::size_t at, int depth, std::string& out) {
    const auto& n = tree.nodes[at];
    for (std::size_t b = 0; b < n.children.size(); ++b) {
        const auto& child = tree.nodes[n.children[b]];
        std::string line;
        for (int d = 0; d < depth; ++d) line += "|   ";
        line += tree.schema[n.attribute].name;
        if (n.numeric) {
            line += (b == 0 ? " <= " : " > ") + csv::format_exact(n.threshold);
        } else {
            line += " = " + tree.schema[n.attribute].values[b];
        }
        if (child.leaf) {
            line += ": " + std::string(class_rule_name(child.cls)) + " (" + std::to_string(child.total());
            if (child.errors() > 0) line += "/" + std::to_string(child.errors());
            line += ")";
        }
        out += line + "\n";
        if (!child.leaf) append_node(tree, n.children[b], depth + 1, out);
    }
}

}  // namespace

std::string render_tree(const DecisionTree& tree) {
    std::string out;
    const auto& root = tree.nodes[0];
    if (root.leaf) {
        out += ": " + std::string(class_rule_name(root.cls)) + " (" + std::to_string(root.total()) + ")\n";
    } else {
        append_node(tree, 0, 0, out);
    }
    out += "\nNumber of Leaves  : " + std::to_string(tree.leaves()) + "\n";
    out += "\nSize of the tree : " + std::to_string(tree.size()) + "\n";
    return out;
}

namespace {

nlohmann::json node_json(const DecisionTree& tree, std::size_t at) {
    const auto& n = tree.nodes[at];
    nlohmann::json j;
    j["counts"] = n.counts;
    j["class"] = class_code(n.cls);
    if (n.leaf) return j;
    j["attribute"] = tree.schema[n.attribute].name;
    if (n.numeric) j["threshold"] = n.threshold;
    nlohmann::json kids = nlohmann::json::array();
    for (auto c : n.children) kids.push_back(node_json(tree, c));
    j["children"] = std::move(kids);
    return j;
}

std::size_t node_from_json(DecisionTree& tree, const nlohmann::json& j) {
    const std::size_t id = tree.nodes.size();
    tree.nodes.emplace_back();
    TreeNode node;
    node.counts = j.at("counts").get<ClassCounts>();
    const auto cls = parse_class(j.at("class").get<std::string>());
    if (!cls) throw SchemaError("tree model: unknown class");
    node.cls = *cls;
    if (j.contains("children")) {
        node.leaf = false;
        const auto name = j.at("attribute").get<std::string>();
        auto it = std::find_if(tree.schema.begin(), tree.schema.end(), [&](const Attribute& a) { return a.name == name; });
        if (it == tree.schema.end()) throw SchemaError("tree model: unknown attribute '" + name + "'");
        node.attribute = static_cast<std::size_t>(it - tree.schema.begin());
        node.numeric = it->kind == AttributeKind::Numeric;
        if (node.numeric) node.threshold = j.at("threshold").get<double>();
        for (const auto& c : j.at("children")) node.children.push_back(node_from_json(tree, c));
    }
    tree.nodes[id] = std::move(node);
    return id;
}

}  // namespace

std::string tree_to_json(const DecisionTree& tree) {
    nlohmann::json j;
    nlohmann::json schema = nlohmann::json::array();
    for (const auto& a : tree.schema) {
        nlohmann::json s{{"name", a.name}, {"kind", a.kind == AttributeKind::Numeric ? "numeric" : "nominal"}};
        if (a.kind == AttributeKind::Nominal) s["values"] = a.values;
        schema.push_back(s);
    }
    j["schema"] = schema;
    j["criterion"] = tree.gain_ratio ? "gain_ratio" : "info_gain";
    j["size"] = tree.size();
    j["leaves"] = tree.leaves();
    j["root"] = node_json(tree, 0);
    return j.dump(1) + "\n";
}

DecisionTree tree_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("tree model: ") + e.what());
    }
    try {
        DecisionTree tree;
        for (const auto& s : j.at("schema")) {
            Attribute a;
            a.name = s.at("name").get<std::string>();
            a.kind = s.at("kind").get<std::string>() == "nominal" ? AttributeKind::Nominal : AttributeKind::Numeric;
            if (s.contains("values")) a.values = s.at("values").get<std::vector<std::string>>();
            tree.schema.push_back(std::move(a));
        }
        tree.gain_ratio = j.value("criterion", "info_gain") == "gain_ratio";
        node_from_json(tree, j.at("root"));
        return tree;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("tree model: ") + e.what());
    }
}

}  // namespace vgaml
