#include "upsilon/codes.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "text_format.hpp"
#include "upsilon/error.hpp"

namespace upsilon {

namespace {

constexpr std::uint64_t kMaxGeneratedCodewords = std::uint64_t{1} << 20;

std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

// Enumerates the null space of H (rows x n) over prime field Z_q.
std::vector<Point> null_space(std::vector<std::vector<int>> h, std::size_t n, int q) {
  const auto inverse = [q](int a) {
    for (int x = 1; x < q; ++x)
      if ((a * x) % q == 1) return x;
    return 0;
  };
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < h.size(); ++col) {
    std::size_t sel = row;
    while (sel < h.size() && h[sel][col] == 0) ++sel;
    if (sel == h.size()) continue;
    std::swap(h[row], h[sel]);
    const int inv = inverse(h[row][col]);
    for (auto& v : h[row]) v = (v * inv) % q;
    for (std::size_t r = 0; r < h.size(); ++r) {
      if (r == row || h[r][col] == 0) continue;
      const int f = h[r][col];
      for (std::size_t c = 0; c < n; ++c) h[r][c] = floor_mod(h[r][c] - f * h[row][c], q);
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);

  const std::uint64_t count = ipow(static_cast<std::uint64_t>(q), free_cols.size());
  if (count > kMaxGeneratedCodewords)
    throw BudgetExceeded("code would have " + std::to_string(count) + " codewords");
  std::vector<Point> words;
  words.reserve(count);
  Point x(n);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t rest = k;
    for (auto c : free_cols) {
      x[c] = static_cast<Coord>(rest % q);
      rest /= q;
    }
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      Coord s = 0;
      for (auto c : free_cols) s += h[r][c] * x[c];
      x[pivots[r]] = floor_mod(-s, q);
    }
    words.push_back(x);
  }
  return words;
}

void check_word(const BlockCode& c, const Point& w) {
  if (w.size() != c.length()) throw DimensionMismatch(w.size(), c.length());
  for (auto v : w)
    if (v < 0 || v >= c.q()) throw InvalidArgument("symbol " + std::to_string(v) + " out of range for q=" + std::to_string(c.q()));
}

}  // namespace

BlockCode::BlockCode(int q, std::size_t length, std::vector<Point> codewords, std::optional<bool> linear)
    : q_(q), length_(length), codewords_(std::move(codewords)), linear_(linear) {
  if (q != 2 && q != 3) throw InvalidArgument("alphabet size must be 2 or 3, got " + std::to_string(q));
  if (length == 0) throw InvalidArgument("code length must be positive");
  if (length > 40) throw InvalidArgument("code length " + std::to_string(length) + " exceeds 40");
  keys_.reserve(codewords_.size());
  for (const auto& w : codewords_) {
    check_word(*this, w);
    keys_.push_back(key_of(w));
  }
  std::sort(codewords_.begin(), codewords_.end());
  std::sort(keys_.begin(), keys_.end());
  if (std::adjacent_find(keys_.begin(), keys_.end()) != keys_.end())
    throw InvalidArgument("duplicate codewords");
}

std::uint64_t BlockCode::key_of(const Point& word) const {
  std::uint64_t k = 0;
  for (std::size_t i = word.size(); i-- > 0;) k = k * static_cast<std::uint64_t>(q_) + static_cast<std::uint64_t>(word[i]);
  return k;
}

bool BlockCode::contains(const Point& word) const {
  if (word.size() != length_) throw DimensionMismatch(word.size(), length_);
  for (auto v : word)
    if (v < 0 || v >= q_) return false;
  return std::binary_search(keys_.begin(), keys_.end(), key_of(word));
}

BlockCode binary_hamming(int t) {
  if (t < 1) throw InvalidArgument("binary Hamming code needs t >= 1");
  if (t > 5) throw InvalidArgument("binary Hamming code limited to length <= 31");
  const std::size_t n = (std::size_t{1} << t) - 1;
  std::vector<std::vector<int>> h(t, std::vector<int>(n));
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t value = col + 1;
    for (int r = 0; r < t; ++r) h[r][col] = (value >> (t - 1 - r)) & 1;  // row 0 = most significant bit
  }
  return BlockCode(2, n, null_space(std::move(h), n, 2), true);
}

BlockCode ternary_hamming(int t) {
  if (t < 1) throw InvalidArgument("ternary Hamming code needs t >= 1");
  const std::size_t full = ipow(3, t);
  const std::size_t nu = (full - 1) / 2;
  if (nu > 13) throw InvalidArgument("ternary Hamming code limited to length <= 13");
  std::vector<std::vector<int>> h(t);
  for (std::size_t value = 1; value < full; ++value) {
    std::vector<int> digits(t);
    std::size_t rest = value;
    for (int r = t - 1; r >= 0; --r) {
      digits[r] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    const auto lead = std::find_if(digits.begin(), digits.end(), [](int d) { return d != 0; });
    if (*lead != 1) continue;
    for (int r = 0; r < t; ++r) h[r].push_back(digits[r]);
  }
  return BlockCode(3, nu, null_space(std::move(h), nu, 3), true);
}

std::size_t hamming_weight(const Point& word) {
  return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Coord v) { return v != 0; }));
}

std::size_t min_hamming_distance(const BlockCode& c) {
  if (c.size() < 2) throw InvalidArgument("minimum distance needs at least 2 codewords");
  // Grow a Hamming ball around every codeword until it hits another codeword.
  const std::size_t n = c.length();
  const int q = c.q();
  for (std::size_t radius = 1; radius <= n; ++radius) {
    std::vector<std::size_t> support(radius);
    for (const auto& w : c.codewords()) {
      // all position subsets of size radius, all nonzero shifts
      for (std::size_t i = 0; i < radius; ++i) support[i] = i;
      while (true) {
        std::vector<int> shift(radius, 1);
        while (true) {
          Point v(w);
          for (std::size_t i = 0; i < radius; ++i) v[support[i]] = (v[support[i]] + shift[i]) % q;
          if (c.contains(v)) return radius;
          std::size_t k = 0;
          while (k < radius && ++shift[k] == q) shift[k++] = 1;
          if (k == radius) break;
        }
        std::size_t k = radius;
        while (k-- > 0 && support[k] == n - radius + k) {
        }
        if (k == static_cast<std::size_t>(-1)) break;
        ++support[k];
        for (std::size_t j = k + 1; j < radius; ++j) support[j] = support[j - 1] + 1;
      }
    }
  }
  return n;  // unreachable for distinct codewords
}

PerfectVerdict is_perfect(const BlockCode& c) {
  const std::uint64_t q = static_cast<std::uint64_t>(c.q());
  const std::uint64_t sphere = 1 + c.length() * (q - 1);
  const std::uint64_t space = ipow(q, c.length());
  const std::uint64_t packed = c.size() * sphere;
  if (packed != space)
    return {false, "size check failed: " + std::to_string(c.size()) + "*" + std::to_string(sphere) + " = " +
                       std::to_string(packed) + " != " + std::to_string(space)};
  if (c.size() >= 2) {
    const auto d = min_hamming_distance(c);
    if (d < 3) return {false, "minimum Hamming distance " + std::to_string(d) + " < 3"};
  }
  return {true, "perfect: " + std::to_string(c.size()) + "*" + std::to_string(sphere) + " = " + std::to_string(space)};
}

BlockCode puncture(const BlockCode& c) {
  if (c.length() < 2) throw InvalidArgument("cannot puncture a length-1 code");
  std::vector<Point> words;
  words.reserve(c.size());
  for (const auto& w : c.codewords()) {
    Point s(c.length() - 1);
    for (std::size_t i = 0; i + 1 < c.length(); ++i) s[i] = w[i];
    words.push_back(std::move(s));
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return BlockCode(c.q(), c.length() - 1, std::move(words), c.linear());
}

WeightSplit weight_split(const BlockCode& c) {
  if (c.q() != 2) throw InvalidArgument("weight split is defined for binary codes");
  std::vector<Point> even, odd;
  for (const auto& w : c.codewords()) (hamming_weight(w) % 2 == 0 ? even : odd).push_back(w);
  return {BlockCode(2, c.length(), std::move(even)), BlockCode(2, c.length(), std::move(odd))};
}

std::optional<Point> decode_within_1(const BlockCode& c, const Point& word) {
  check_word(c, word);
  if (c.contains(word)) return word;
  Point v(word);
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (int s = 1; s < c.q(); ++s) {
      v[i] = (word[i] + s) % c.q();
      if (c.contains(v)) return v;
    }
    v[i] = word[i];
  }
  return std::nullopt;
}

void write_code(std::ostream& os, const BlockCode& c) {
  os << "CODE v1\n"
     << "q " << c.q() << "\n"
     << "n " << c.length() << "\n"
     << "count " << c.size() << "\n";
  for (const auto& w : c.codewords()) os << w.to_words() << "\n";
}

BlockCode read_code(std::istream& is) {
  detail::LineReader in(is);
  in.expect_exact("CODE v1");
  const auto q = in.keyed("q");
  const auto n = in.keyed("n");
  const auto count = in.keyed("count");
  if (q != 2 && q != 3) in.fail("q must be 2 or 3");
  if (n < 1 || n > 40) in.fail("n out of range");
  if (count < 0) in.fail("negative count");
  std::vector<Point> words;
  words.reserve(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) {
    Point w(in.integers(static_cast<std::size_t>(n)));
    for (auto v : w)
      if (v < 0 || v >= q) in.fail("symbol out of range");
    words.push_back(std::move(w));
  }
  in.expect_end();
  return BlockCode(static_cast<int>(q), static_cast<std::size_t>(n), std::move(words));
}

std::string code_to_string(const BlockCode& c) {
  std::ostringstream os;
  write_code(os, c);
  return os.str();
}

BlockCode load_code(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot open code file '" + path + "'");
  return read_code(f);
}

void save_code(const std::string& path, const BlockCode& c) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write code file '" + path + "'");
  write_code(f, c);
}

}  // namespace upsilon
