#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pvo {

/// Integer partition stored without trailing zeros.
///
/// Two partitions compare equal iff their part sequences are equal, so a
/// Partition can key any sparse map in the library.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Single row (n) or single column (1^n); n = 0 gives the empty partition.
  static Partition row(int n);
  static Partition column(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// i-th part (0-based); zero past the length.
  int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  Partition conjugate() const;

  /// True iff the diagram of `inner` fits inside this diagram.
  bool contains(const Partition& inner) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) noexcept {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

inline Partition conjugate(const Partition& p) { return p.conjugate(); }
inline bool contains(const Partition& outer, const Partition& inner) {
  return outer.contains(inner);
}

/// Reverse-lexicographic order on part sequences: [3] < [2,1] < [2] < [1,1,1]
/// in this ordering. Used for every deterministic listing.
struct RevLex {
  bool operator()(const Partition& a, const Partition& b) const noexcept {
    return a.parts() > b.parts();
  }
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// All partitions of n within the optional bounds, in reverse-lex order.
std::vector<Partition> partitions_of(int n,
                                     std::optional<int> max_length = {},
                                     std::optional<int> max_part = {});

/// Parses "[3,1,1]" or "[]"; whitespace tolerated. Throws std::invalid_argument.
Partition parse_partition(std::string_view text);

/// z_lambda = prod_i i^{m_i} m_i!
long long z_lambda(const Partition& p);

}  // namespace pvo
