#pragma once

// Strict reader for JSON objects: typed lookups that name the offending
// field on error, plus rejection of any key that was never looked up.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "rkgrgg/error.hpp"

namespace rkgrgg::detail {

class FieldReader {
 public:
  FieldReader(const nlohmann::json& obj, std::string context)
      : obj_(obj), context_(std::move(context)) {
    if (!obj_.is_object()) {
      throw ValidationError(label("") + "must be a JSON object");
    }
  }

  [[nodiscard]] bool has(const std::string& key) {
    seen_.insert(key);
    return obj_.contains(key) && !obj_.at(key).is_null();
  }

  const nlohmann::json& raw(const std::string& key) {
    seen_.insert(key);
    return obj_.at(key);
  }

  double number(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    const auto& v = obj_.at(key);
    if (!v.is_number()) throw ValidationError(label(key) + "must be a number");
    return v.get<double>();
  }

  std::uint64_t count(const std::string& key, std::uint64_t fallback) {
    if (!has(key)) return fallback;
    return as_count(obj_.at(key), key);
  }

  std::optional<std::uint64_t> optional_count(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return as_count(obj_.at(key), key);
  }

  bool flag(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const auto& v = obj_.at(key);
    if (!v.is_boolean()) throw ValidationError(label(key) + "must be true or false");
    return v.get<bool>();
  }

  std::string text(const std::string& key, const std::string& fallback) {
    if (!has(key)) return fallback;
    const auto& v = obj_.at(key);
    if (!v.is_string()) throw ValidationError(label(key) + "must be a string");
    return v.get<std::string>();
  }

  /// Accepts a scalar or an array of numbers.
  std::vector<double> numbers(const std::string& key, std::vector<double> fallback) {
    if (!has(key)) return fallback;
    const auto& v = obj_.at(key);
    std::vector<double> out;
    if (v.is_number()) {
      out.push_back(v.get<double>());
      return out;
    }
    if (!v.is_array() || v.empty()) {
      throw ValidationError(label(key) + "must be a number or a nonempty array of numbers");
    }
    for (const auto& e : v) {
      if (!e.is_number()) throw ValidationError(label(key) + "must contain only numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }

  std::vector<std::uint64_t> counts(const std::string& key,
                                    std::vector<std::uint64_t> fallback) {
    if (!has(key)) return fallback;
    const auto& v = obj_.at(key);
    std::vector<std::uint64_t> out;
    if (!v.is_array()) {
      out.push_back(as_count(v, key));
      return out;
    }
    if (v.empty()) throw ValidationError(label(key) + "must not be empty");
    for (const auto& e : v) out.push_back(as_count(e, key));
    return out;
  }

  std::vector<std::string> texts(const std::string& key,
                                 std::vector<std::string> fallback) {
    if (!has(key)) return fallback;
    const auto& v = obj_.at(key);
    std::vector<std::string> out;
    if (v.is_string()) {
      out.push_back(v.get<std::string>());
      return out;
    }
    if (!v.is_array() || v.empty()) {
      throw ValidationError(label(key) + "must be a string or a nonempty array of strings");
    }
    for (const auto& e : v) {
      if (!e.is_string()) throw ValidationError(label(key) + "must contain only strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  }

  /// Throws on the first key that no lookup asked for.
  void finish() const {
    for (const auto& [key, value] : obj_.items()) {
      if (!seen_.contains(key)) {
        throw ValidationError("unknown field \"" + qualified(key) + "\"");
      }
    }
  }

  [[nodiscard]] std::string qualified(const std::string& key) const {
    return context_.empty() ? key : context_ + "." + key;
  }

 private:
  std::uint64_t as_count(const nlohmann::json& v, const std::string& key) const {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
      return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    throw ValidationError(label(key) + "must be a nonnegative integer");
  }

  [[nodiscard]] std::string label(const std::string& key) const {
    if (key.empty()) return context_.empty() ? "config " : context_ + " ";
    return qualified(key) + " ";
  }

  const nlohmann::json& obj_;
  std::string context_;
  std::set<std::string> seen_;
};

}  // namespace rkgrgg::detail
