#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace tmzv {

/// A word over the alphabet {x, y}. The empty word is the unit 1.
///
/// Words order length-first and then lexicographically (x < y), which is the
/// canonical term order for Elements.
class Word {
 public:
  Word() = default;
  /// Throws std::invalid_argument if `letters` contains anything but 'x'/'y'.
  explicit Word(std::string letters);

  /// z_k = x^{k-1} y, for k >= 1.
  static Word z(int k);
  /// x^n.
  static Word x_power(int n);

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// In H^1: empty or ending in y.
  bool in_h1() const { return letters_.empty() || letters_.back() == 'y'; }
  /// In H^0: empty, or starting with x and ending in y.
  bool in_h0() const {
    return letters_.empty() || (letters_.front() == 'x' && letters_.back() == 'y');
  }

  Word& operator+=(const Word& o) {
    letters_ += o.letters_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_.compare(b.letters_) <=> 0;
  }

 private:
  std::string letters_;
};

/// Indicator of the empty word.
inline int delta(const Word& w) { return w.empty() ? 1 : 0; }

/// A finite sequence of positive integers (k_1, ..., k_n).
class Index {
 public:
  Index() = default;
  /// Throws std::invalid_argument if any part is < 1.
  explicit Index(std::vector<int> parts);
  Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

  /// Parses "2,1,3" (whitespace tolerated, empty string = empty index).
  static Index parse(std::string_view text);
  /// (p, p, ..., p) with `count` copies.
  static Index repeated(int p, int count);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t depth() const { return parts_.size(); }
  long weight() const;
  bool empty() const { return parts_.empty(); }
  /// First part >= 2 (the empty index is not admissible).
  bool admissible() const { return !parts_.empty() && parts_.front() >= 2; }

  /// "2,1,3".
  std::string str() const;

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  std::vector<int> parts_;
};

/// z_{k_1} ... z_{k_n}.
Word word_of_index(const Index& idx);

/// Inverse of word_of_index on H^1; throws NotInH1 for words ending in x.
Index index_of_word(const Word& w);

/// Renders a word in z-notation ("z2 z1") when it ends in y, "1" when empty,
/// raw letters otherwise.
std::string z_notation(const Word& w);

}  // namespace tmzv
