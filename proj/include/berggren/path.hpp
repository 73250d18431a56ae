#pragma once

#include "berggren/error.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace berggren {

enum class letter : unsigned char { A = 0, B = 1, C = 2 };

inline constexpr std::array<letter, 3> all_letters{letter::A, letter::B, letter::C};

constexpr char to_char(letter l) { return static_cast<char>('A' + static_cast<int>(l)); }

constexpr std::optional<letter> letter_from_char(char c) {
  switch (c) {
    case 'A': return letter::A;
    case 'B': return letter::B;
    case 'C': return letter::C;
    default: return std::nullopt;
  }
}

/// A word over {A, B, C}; the empty word addresses the root (3, 4, 5).
class tree_path {
 public:
  tree_path() = default;
  explicit tree_path(std::vector<letter> letters) : letters_(std::move(letters)) {}

  /// Throws error_code::invalid_path on any character outside "ABC".
  static tree_path parse(std::string_view word) {
    std::vector<letter> letters;
    letters.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
      auto l = letter_from_char(word[i]);
      if (!l)
        throw error(error_code::invalid_path,
                    "character '" + std::string(1, word[i]) + "' at position " + std::to_string(i));
      letters.push_back(*l);
    }
    return tree_path(std::move(letters));
  }

  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (letter l : letters_) s.push_back(to_char(l));
    return s;
  }

  const std::vector<letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push_back(letter l) { letters_.push_back(l); }
  tree_path child(letter l) const {
    tree_path p = *this;
    p.push_back(l);
    return p;
  }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const tree_path&, const tree_path&) = default;

 private:
  std::vector<letter> letters_;
};

}  // namespace berggren
