#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string_view>
#include <unordered_map>

#include <boost/container/small_vector.hpp>

#include "defres/partition.hpp"

namespace defres::detail {

/// Memo key: non-negative integers as LEB128 varints, partitions
/// length-prefixed.
class Key {
 public:
  Key() = default;
  Key(std::initializer_list<int> values) {
    for (int v : values) add(v);
  }

  void add(int v) {
    auto u = static_cast<unsigned>(v);
    while (u >= 0x80) {
      bytes_.push_back(static_cast<unsigned char>(u | 0x80));
      u >>= 7;
    }
    bytes_.push_back(static_cast<unsigned char>(u));
  }
  void add(std::span<const int> values) {
    add(static_cast<int>(values.size()));
    bytes_.reserve(bytes_.size() + values.size());
    for (int v : values) {
      if (static_cast<unsigned>(v) < 0x80) bytes_.push_back(static_cast<unsigned char>(v));
      else add(v);
    }
  }
  void add(const Partition& p) { add(p.parts()); }

  std::size_t hash() const noexcept {
    return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(bytes_.data()), bytes_.size()));
  }
  friend bool operator==(const Key&, const Key&) = default;

 private:
  boost::container::small_vector<unsigned char, 32> bytes_;
};

struct KeyHash {
  std::size_t operator()(const Key& key) const noexcept { return key.hash(); }
};

/// A process-wide memo table safe for concurrent use. Values for a key are
/// pure functions of the key, so a racing duplicate insert is harmless and
/// the first one wins.
template <class Value>
class SharedMemo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(Key key, Value value) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(std::move(key), std::move(value));
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, KeyHash> table_;
};

}  // namespace defres::detail
