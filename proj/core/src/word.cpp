#include "tmzv/word.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "tmzv/error.hpp"

namespace tmzv {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (c != 'x' && c != 'y') throw std::invalid_argument("word letters must be x or y: '" + letters_ + "'");
  }
}

Word Word::z(int k) {
  if (k < 1) throw std::invalid_argument("z_k needs k >= 1");
  Word w;
  w.letters_.assign(static_cast<std::size_t>(k - 1), 'x');
  w.letters_.push_back('y');
  return w;
}

Word Word::x_power(int n) {
  if (n < 0) throw std::invalid_argument("negative x power");
  Word w;
  w.letters_.assign(static_cast<std::size_t>(n), 'x');
  return w;
}

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int k : parts_) {
    if (k < 1) throw std::invalid_argument("index parts must be positive");
  }
}

Index Index::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&](bool final) {
    if (token.empty()) {
      if (final && parts.empty()) return;
      throw ParseError("empty index part");
    }
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad index part '" + token + "'");
    }
    if (token.size() > 6) throw ParseError("index part too large '" + token + "'");
    const int value = std::stoi(token);
    if (value < 1) throw ParseError("index parts must be positive, got " + token);
    parts.push_back(value);
    token.clear();
  };
  bool any = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    any = true;
    if (c == ',') {
      flush(false);
    } else {
      token.push_back(c);
    }
  }
  if (any) flush(true);
  return Index(std::move(parts));
}

Index Index::repeated(int p, int count) {
  return Index(std::vector<int>(static_cast<std::size_t>(count < 0 ? 0 : count), p));
}

long Index::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

std::string Index::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

Word word_of_index(const Index& idx) {
  std::string letters;
  for (int k : idx.parts()) {
    letters.append(static_cast<std::size_t>(k - 1), 'x');
    letters.push_back('y');
  }
  return Word(std::move(letters));
}

Index index_of_word(const Word& w) {
  if (!w.in_h1()) throw NotInH1("word does not end in y: '" + w.letters() + "'");
  std::vector<int> parts;
  int run = 0;
  for (char c : w.letters()) {
    if (c == 'x') {
      ++run;
    } else {
      parts.push_back(run + 1);
      run = 0;
    }
  }
  return Index(std::move(parts));
}

std::string z_notation(const Word& w) {
  if (w.empty()) return "1";
  if (!w.in_h1()) return w.letters();
  std::string out;
  const Index idx = index_of_word(w);
  for (int k : idx.parts()) {
    if (!out.empty()) out += ' ';
    out += 'z' + std::to_string(k);
  }
  return out;
}

}  // namespace tmzv
