#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "upsilon/geometry.hpp"

namespace upsilon {

/// A block code over Z_q (q in {2,3}), stored as an explicit, sorted codeword list.
class BlockCode {
 public:
  /// Validates entries and distinctness; the list is sorted lexicographically.
  BlockCode(int q, std::size_t length, std::vector<Point> codewords,
            std::optional<bool> linear = std::nullopt);

  int q() const { return q_; }
  std::size_t length() const { return length_; }
  std::size_t size() const { return codewords_.size(); }
  const std::vector<Point>& codewords() const { return codewords_; }
  std::optional<bool> linear() const { return linear_; }

  bool contains(const Point& word) const;

  /// Radix-q key of a word, coordinate 1 least significant.
  std::uint64_t key_of(const Point& word) const;

  friend bool operator==(const BlockCode& a, const BlockCode& b) {
    return a.q_ == b.q_ && a.length_ == b.length_ && a.codewords_ == b.codewords_;
  }

 private:
  int q_;
  std::size_t length_;
  std::vector<Point> codewords_;
  std::vector<std::uint64_t> keys_;  // sorted
  std::optional<bool> linear_;
};

/// Binary Hamming code of length 2^t - 1. Parity-check columns are the
/// nonzero t-bit vectors in ascending numeric order.
BlockCode binary_hamming(int t);

/// Ternary Hamming code of length (3^t - 1)/2. Parity-check columns are the
/// nonzero t-trit vectors whose leading nonzero digit is 1, ascending.
BlockCode ternary_hamming(int t);

std::size_t min_hamming_distance(const BlockCode& c);

struct PerfectVerdict {
  bool perfect = false;
  std::string reason;
  explicit operator bool() const { return perfect; }
};

/// Sphere-packing count |C| (1 + n(q-1)) = q^n plus minimum distance >= 3.
PerfectVerdict is_perfect(const BlockCode& c);

/// Drops the last coordinate.
BlockCode puncture(const BlockCode& c);

struct WeightSplit {
  BlockCode even;
  BlockCode odd;
};

WeightSplit weight_split(const BlockCode& c);

/// The codeword within Hamming distance 1 of word, if any. For a perfect code it exists and is unique.
std::optional<Point> decode_within_1(const BlockCode& c, const Point& word);

std::size_t hamming_weight(const Point& word);

// CODE v1 text format.
void write_code(std::ostream& os, const BlockCode& c);
BlockCode read_code(std::istream& is);
std::string code_to_string(const BlockCode& c);
BlockCode load_code(const std::string& path);
void save_code(const std::string& path, const BlockCode& c);

}  // namespace upsilon
