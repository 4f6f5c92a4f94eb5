#pragma once
// Internal helpers for walking canonical JSON documents with dotted-path
// error reporting. Not part of the public interface.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ail2/errors.hpp"
#include "ail2/model.hpp"

namespace ail2::detail {

inline std::string join_path(const std::string& base, const std::string& key) {
    return base.empty() ? key : base + "." + key;
}

inline std::string index_path(const std::string& base, std::size_t index) {
    return base + "[" + std::to_string(index) + "]";
}

inline std::string as_string(const json& node, const std::string& path) {
    if (!node.is_string()) throw SchemaError(path, "expected a string");
    return node.get<std::string>();
}

inline bool as_bool(const json& node, const std::string& path) {
    if (!node.is_boolean()) throw SchemaError(path, "expected a boolean");
    return node.get<bool>();
}

inline int as_int_in_range(const json& node, const std::string& path, int lo, int hi) {
    if (!node.is_number_integer())
        throw SchemaError(path, "expected an integer in [" + std::to_string(lo) + "," +
                                    std::to_string(hi) + "]");
    auto value = node.get<long long>();
    if (value < lo || value > hi)
        throw SchemaError(path, "value " + std::to_string(value) + " outside [" +
                                    std::to_string(lo) + "," + std::to_string(hi) + "]");
    return static_cast<int>(value);
}

inline const json& as_array(const json& node, const std::string& path) {
    if (!node.is_array()) throw SchemaError(path, "expected an array");
    return node;
}

inline std::vector<std::string> as_string_list(const json& node, const std::string& path) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < as_array(node, path).size(); ++i)
        out.push_back(as_string(node[i], index_path(path, i)));
    return out;
}

// Tracks which keys of an object have been consumed so that strict mode can
// reject unknown fields. The reserved "x_extensions" key is tolerated at the
// top level of a document only.
class ObjectReader {
public:
    ObjectReader(const json& node, std::string path, const model::ParseOptions& options,
                 bool top_level = false)
        : node_(node), path_(std::move(path)), options_(options) {
        if (!node_.is_object()) throw SchemaError(path_, "expected an object");
        if (top_level) seen_.insert("x_extensions");
    }

    const std::string& path() const { return path_; }
    std::string child(const std::string& key) const { return join_path(path_, key); }

    const json& require(const std::string& key) {
        seen_.insert(key);
        auto it = node_.find(key);
        if (it == node_.end()) throw SchemaError(child(key), "missing required field");
        return *it;
    }

    // Returns nullptr when the key is missing or explicitly null.
    const json* optional(const std::string& key) {
        seen_.insert(key);
        auto it = node_.find(key);
        if (it == node_.end() || it->is_null()) return nullptr;
        return &*it;
    }

    std::string require_string(const std::string& key) {
        return as_string(require(key), child(key));
    }

    std::string require_nonempty_string(const std::string& key) {
        auto value = require_string(key);
        if (value.empty()) throw SchemaError(child(key), "must be a nonempty string");
        return value;
    }

    bool require_bool(const std::string& key) { return as_bool(require(key), child(key)); }

    int require_int_in_range(const std::string& key, int lo, int hi) {
        return as_int_in_range(require(key), child(key), lo, hi);
    }

    std::optional<int> optional_int_in_range(const std::string& key, int lo, int hi) {
        const json* node = optional(key);
        if (!node) return std::nullopt;
        return as_int_in_range(*node, child(key), lo, hi);
    }

    std::optional<std::string> optional_string(const std::string& key) {
        const json* node = optional(key);
        if (!node) return std::nullopt;
        return as_string(*node, child(key));
    }

    std::vector<std::string> require_string_list(const std::string& key) {
        return as_string_list(require(key), child(key));
    }

    // Unknown-field check; call after all expected keys were consumed.
    void finish() const {
        if (!options_.strict) return;
        for (auto it = node_.begin(); it != node_.end(); ++it)
            if (!seen_.count(it.key())) throw SchemaError(child(it.key()), "unknown field");
    }

private:
    const json& node_;
    std::string path_;
    model::ParseOptions options_;
    std::set<std::string> seen_;
};

}  // namespace ail2::detail
