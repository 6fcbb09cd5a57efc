#pragma once

// Run reports: ordered `key: value` lines, with table rows printed as
// `key: k1=v1 k2=v2`. The JSON form keeps the same order; rows with the
// same key become an array.

#include "bigint.hpp"

#include <json.hpp>

#include <limits>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

namespace homcount {

class Report {
public:
  using Json = nlohmann::ordered_json;
  using Fields = std::vector<std::pair<std::string, Json>>;

  template <class T>
  Report& add(const std::string& key, T&& value)
  {
    if constexpr (std::is_same_v<std::decay_t<T>, BigInt>)
      entries_.push_back({key, big(value), false});
    else
      entries_.push_back({key, Json(std::forward<T>(value)), false});
    return *this;
  }

  Report& add_row(const std::string& key, const Fields& fields)
  {
    Json row = Json::object();
    for (const auto& [k, v] : fields)
      row[k] = v;
    entries_.push_back({key, std::move(row), true});
    return *this;
  }

  /// Exact integers stay numbers while they fit in 64 bits.
  static Json big(const BigInt& v)
  {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(v);
    return to_string(v);
  }

  std::string text() const
  {
    std::string out;
    for (const auto& e : entries_) {
      out += e.key + ": ";
      if (e.row) {
        bool first = true;
        for (const auto& [k, v] : e.value.items()) {
          out += (first ? "" : " ") + k + "=" + scalar(v);
          first = false;
        }
      } else
        out += scalar(e.value);
      out += '\n';
    }
    return out;
  }

  std::string json() const
  {
    Json j = Json::object();
    for (const auto& e : entries_) {
      if (e.row) {
        if (!j.contains(e.key))
          j[e.key] = Json::array();
        j[e.key].push_back(e.value);
      } else
        j[e.key] = e.value;
    }
    return j.dump(2) + "\n";
  }

private:
  struct Entry {
    std::string key;
    Json value;
    bool row;
  };

  static std::string scalar(const Json& v)
  {
    if (v.is_string())
      return v.get<std::string>();
    return v.dump();
  }

  std::vector<Entry> entries_;
};

} // namespace homcount
