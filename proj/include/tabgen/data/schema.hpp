#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "tabgen/common.hpp"
#include "tabgen/errors.hpp"

namespace tabgen {

enum class FeatureKind { Numerical, Categorical };

inline const char* to_string(FeatureKind k) {
    return k == FeatureKind::Numerical ? "numerical" : "categorical";
}

inline FeatureKind feature_kind_from_string(const std::string& s) {
    if (s == "numerical") return FeatureKind::Numerical;
    if (s == "categorical") return FeatureKind::Categorical;
    throw SchemaError("unknown feature kind: '" + s + "'");
}

struct FeatureSchema {
    std::string name;
    FeatureKind kind = FeatureKind::Numerical;
    // Ordered raw labels; cardinality == category_labels.size(). Categorical only.
    std::vector<std::string> category_labels;

    std::size_t cardinality() const { return category_labels.size(); }
    bool is_categorical() const { return kind == FeatureKind::Categorical; }

    static FeatureSchema numerical(std::string name) { return {std::move(name), FeatureKind::Numerical, {}}; }
    static FeatureSchema categorical(std::string name, std::vector<std::string> labels) {
        return {std::move(name), FeatureKind::Categorical, std::move(labels)};
    }
};

using Schema = std::vector<FeatureSchema>;

inline void validate_schema(const Schema& schema) {
    std::unordered_set<std::string> names;
    for (const auto& f : schema) {
        if (!names.insert(f.name).second) throw SchemaError("duplicate feature name: '" + f.name + "'");
        if (f.is_categorical() && f.category_labels.empty())
            throw SchemaError("categorical feature '" + f.name + "' has no categories");
        if (!f.is_categorical() && !f.category_labels.empty())
            throw SchemaError("numerical feature '" + f.name + "' carries category labels");
    }
}

inline nlohmann::json schema_to_json(const Schema& schema) {
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& f : schema) {
        nlohmann::json c{{"name", f.name}, {"kind", to_string(f.kind)}};
        if (f.is_categorical()) c["categories"] = f.category_labels;
        cols.push_back(std::move(c));
    }
    return nlohmann::json{{"columns", cols}};
}

inline Schema schema_from_json(const nlohmann::json& j) {
    if (!j.contains("columns") || !j["columns"].is_array())
        throw SchemaError("schema file must contain a 'columns' array");
    Schema schema;
    for (const auto& c : j["columns"]) {
        FeatureSchema f;
        f.name = c.at("name").get<std::string>();
        f.kind = feature_kind_from_string(c.at("kind").get<std::string>());
        if (f.is_categorical()) f.category_labels = c.at("categories").get<std::vector<std::string>>();
        schema.push_back(std::move(f));
    }
    validate_schema(schema);
    return schema;
}

inline std::uint64_t schema_hash(const Schema& schema, std::uint64_t h = kFnvOffset) {
    for (const auto& f : schema) {
        h = fnv1a(f.name, h);
        h = fnv1a_value(static_cast<int>(f.kind), h);
        for (const auto& l : f.category_labels) h = fnv1a(l, h);
    }
    return h;
}

}  // namespace tabgen
