#include "pvo/partition.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pvo {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::row(int n) {
  return n > 0 ? Partition(std::vector<int>{n}) : Partition();
}

Partition Partition::column(int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(parts_.front()), 0);
  for (int part : parts_)
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.parts_.size(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void enumerate(int remaining, int cap, int slots_left, std::vector<int>& cur,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots_left == 0) return;
  for (int part = std::min(cap, remaining); part >= 1; --part) {
    cur.push_back(part);
    enumerate(remaining - part, part, slots_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, std::optional<int> max_length,
                                     std::optional<int> max_part) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate(n, max_part.value_or(n), max_length.value_or(n), cur, out);
  return out;
}

Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("partition must look like [3,1]: '" +
                                std::string(text) + "'");
  std::string body = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                 : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      throw std::invalid_argument("bad partition part '" + tok + "'");
    parts.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == body.size()) throw std::invalid_argument("trailing comma in partition");
  }
  return Partition(std::move(parts));
}

long long z_lambda(const Partition& p) {
  long long z = 1;
  const auto& parts = p.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    long long mult = static_cast<long long>(j - i);
    for (long long k = 1; k <= mult; ++k) z *= parts[i] * k;
    i = j;
  }
  return z;
}

}  // namespace pvo
