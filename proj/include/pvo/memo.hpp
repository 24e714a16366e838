#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace pvo::detail {

/// Concurrent memo table. Values are computed outside the lock; a racing
/// duplicate computation stores the same value, so lookups stay as-if-serial.
template <class Key, class Value, class Compare = std::less<Key>>
class Memo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  const Value& insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  template <class F>
  Value get_or_compute(const Key& key, F&& compute) {
    if (auto hit = find(key)) return *hit;
    Value v = compute();
    return insert(key, std::move(v));
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value, Compare> table_;
};

}  // namespace pvo::detail
