#pragma once

/// The Berggren ternary tree rooted at (3, 4, 5): descent by the matrices
/// A, B, C, unique ascent by their integer inverses, path addressing,
/// closed-form matrix powers, and bounded breadth-first enumeration.

#include "berggren/bigint.hpp"
#include "berggren/error.hpp"
#include "berggren/matrix.hpp"
#include "berggren/path.hpp"
#include "berggren/ppt.hpp"
#include "berggren/quad_ring.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <future>
#include <iterator>
#include <sstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace berggren {

/// The three generating matrices, indexed by letter.
struct generator_set {
  std::array<mat3, 3> matrices;

  static generator_set standard() {
    return {{{
        mat3{{1, -2, 2}, {2, -1, 2}, {2, -2, 3}},
        mat3{{1, 2, 2}, {2, 1, 2}, {2, 2, 3}},
        mat3{{-1, 2, 2}, {-2, 1, 2}, {-2, 2, 3}},
    }}};
  }

  const mat3& operator[](letter l) const { return matrices[static_cast<std::size_t>(l)]; }
  mat3& operator[](letter l) { return matrices[static_cast<std::size_t>(l)]; }
};

struct tree_node {
  tree_path path;
  ppt triple;
};

struct parent_link {
  ppt triple;
  letter via;  // triple descends to the child by this letter
};

class bfs_enumeration;

class tree {
 public:
  explicit tree(generator_set generators = generator_set::standard())
      : generators_(std::move(generators)) {
    for (letter l : all_letters) inverses_[static_cast<std::size_t>(l)] = generators_[l].integer_inverse();
  }

  const generator_set& generators() const noexcept { return generators_; }
  const std::optional<mat3>& inverse(letter l) const { return inverses_[static_cast<std::size_t>(l)]; }

  /// M * t^T. The child is a canonical PPT with a strictly larger hypotenuse;
  /// anything else means the generator set is broken.
  ppt descend(const ppt& t, letter l) const {
    raw_triple child = generators_[l].apply(t);
    if (auto violation = check_canonical(child.x, child.y, child.z))
      throw error(error_code::invariant_violation,
                  std::string(1, to_char(l)) + " child is not a PPT (" + std::string(name(*violation)) + ")");
    if (child.z <= t.z())
      throw error(error_code::invariant_violation,
                  std::string(1, to_char(l)) + " child does not increase the hypotenuse");
    return ppt::make(std::move(child.x), std::move(child.y), std::move(child.z));
  }

  /// Empty for the root. Otherwise the unique (parent, letter) found by
  /// applying each integer inverse and keeping the one candidate that is a
  /// PPT with smaller hypotenuse.
  std::optional<parent_link> parent(const ppt& t) const {
    if (t == ppt::root()) return std::nullopt;
    std::optional<parent_link> found;
    int candidates = 0;
    for (letter l : all_letters) {
      const auto& inv = inverse(l);
      if (!inv) throw error(error_code::invariant_violation, "generator is not unimodular");
      raw_triple up = inv->apply(t);
      if (check_canonical(up.x, up.y, up.z) || up.z >= t.z()) continue;
      ++candidates;
      found = parent_link{ppt::make(std::move(up.x), std::move(up.y), std::move(up.z)), l};
    }
    if (candidates != 1) {
      std::ostringstream msg;
      msg << candidates << " parent candidates for " << t;
      throw error(error_code::invariant_violation, msg.str());
    }
    return found;
  }

  ppt descend_path(const tree_path& path, ppt start = ppt::root()) const {
    for (letter l : path) start = descend(start, l);
    return start;
  }

  tree_path path_of(ppt t) const {
    std::vector<letter> reversed;
    while (auto up = parent(t)) {
      reversed.push_back(up->via);
      t = std::move(up->triple);
    }
    std::reverse(reversed.begin(), reversed.end());
    return tree_path(std::move(reversed));
  }

  /// Every node with z <= z_bound, breadth first, children in order A, B, C.
  bfs_enumeration enumerate(bigint z_bound) const;

  /// Same order as enumerate(); each level is expanded by `workers` threads
  /// and the chunks are concatenated in order.
  std::vector<tree_node> enumerate_parallel(const bigint& z_bound, unsigned workers) const;

 private:
  generator_set generators_;
  std::array<std::optional<mat3>, 3> inverses_;
};

inline const tree& standard_tree() {
  static const tree instance;
  return instance;
}

/// Caller-pulled breadth-first stream. Pruning is sound because the
/// hypotenuse strictly increases under descent.
class bfs_enumeration {
 public:
  bfs_enumeration(const tree& t, bigint z_bound) : tree_(&t), z_bound_(std::move(z_bound)) {
    if (ppt::root().z() <= z_bound_) queue_.push_back({tree_path{}, ppt::root()});
  }

  std::optional<tree_node> next() {
    if (queue_.empty()) return std::nullopt;
    tree_node node = std::move(queue_.front());
    queue_.pop_front();
    for (letter l : all_letters) {
      ppt child = tree_->descend(node.triple, l);
      if (child.z() <= z_bound_) queue_.push_back({node.path.child(l), std::move(child)});
    }
    return node;
  }

  class iterator {
   public:
    using value_type = tree_node;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(bfs_enumeration* owner) : owner_(owner) { ++*this; }

    const tree_node& operator*() const { return *current_; }
    const tree_node* operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = owner_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.current_; }

   private:
    bfs_enumeration* owner_ = nullptr;
    std::optional<tree_node> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  const tree* tree_;
  bigint z_bound_;
  std::deque<tree_node> queue_;
};

inline bfs_enumeration tree::enumerate(bigint z_bound) const { return bfs_enumeration(*this, std::move(z_bound)); }

inline std::vector<tree_node> tree::enumerate_parallel(const bigint& z_bound, unsigned workers) const {
  std::vector<tree_node> out;
  if (ppt::root().z() > z_bound) return out;
  workers = std::max(1U, workers);
  std::vector<tree_node> level{{tree_path{}, ppt::root()}};
  while (!level.empty()) {
    const std::size_t chunk = (level.size() + workers - 1) / workers;
    std::vector<std::future<std::vector<tree_node>>> parts;
    for (std::size_t begin = 0; begin < level.size(); begin += chunk) {
      const std::size_t end = std::min(level.size(), begin + chunk);
      parts.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, [&, begin, end] {
        std::vector<tree_node> next;
        for (std::size_t i = begin; i < end; ++i)
          for (letter l : all_letters) {
            ppt child = descend(level[i].triple, l);
            if (child.z() <= z_bound) next.push_back({level[i].path.child(l), std::move(child)});
          }
        return next;
      }));
    }
    std::vector<tree_node> next_level;
    for (auto& part : parts) {
      auto nodes = part.get();
      std::move(nodes.begin(), nodes.end(), std::back_inserter(next_level));
    }
    std::move(level.begin(), level.end(), std::back_inserter(out));
    level = std::move(next_level);
  }
  return out;
}

inline ppt descend(const ppt& t, letter l) { return standard_tree().descend(t, l); }
inline std::optional<parent_link> parent(const ppt& t) { return standard_tree().parent(t); }
inline ppt descend_path(const tree_path& path) { return standard_tree().descend_path(path); }
inline tree_path path_of(const ppt& t) { return standard_tree().path_of(t); }
inline bfs_enumeration enumerate_tree(bigint z_bound) { return standard_tree().enumerate(std::move(z_bound)); }

/// Closed-form A^n, B^n, C^n. B^n is assembled from b1 = p/2, b2 = q with
/// (3 + 2 sqrt 2)^n = p + q sqrt 2; its half-integer parts must cancel.
inline mat3 matrix_power(letter l, std::uint64_t n) {
  const bigint k = n;
  const bigint k2 = k * k;
  mat3 m;
  switch (l) {
    case letter::A:
      m(0, 0) = 1;        m(0, 1) = -2 * k;     m(0, 2) = 2 * k;
      m(1, 0) = 2 * k;    m(1, 1) = 1 - 2 * k2; m(1, 2) = 2 * k2;
      m(2, 0) = 2 * k;    m(2, 1) = -2 * k2;    m(2, 2) = 2 * k2 + 1;
      return m;
    case letter::C:
      m(0, 0) = 1 - 2 * k2; m(0, 1) = 2 * k;  m(0, 2) = 2 * k2;
      m(1, 0) = -2 * k;     m(1, 1) = 1;      m(1, 2) = 2 * k;
      m(2, 0) = -2 * k2;    m(2, 1) = 2 * k;  m(2, 2) = 2 * k2 + 1;
      return m;
    case letter::B: {
      const auto [b1, b2] = b1_b2(n);
      const bigint sign = n % 2 == 0 ? 1 : -1;
      const half_int same{sign + b1.twice_value};      // (-1)^n / 2 + b1
      const half_int opposite{-sign + b1.twice_value}; // (-1)^(n+1) / 2 + b1
      if (!same.is_integer() || !opposite.is_integer())
        throw error(error_code::invariant_violation, "B^" + std::to_string(n) + " has a half-integer entry");
      const bigint s = same.twice_value / 2;
      const bigint o = opposite.twice_value / 2;
      m(0, 0) = s;  m(0, 1) = o;  m(0, 2) = b2;
      m(1, 0) = o;  m(1, 1) = s;  m(1, 2) = b2;
      m(2, 0) = b2; m(2, 1) = b2; m(2, 2) = b1.twice_value;
      return m;
    }
  }
  return m;
}

/// A^(n-1) (3, 4, 5)^T == F(1, n).
inline bool lemma_f1n_check(std::uint64_t n) {
  if (n == 0) throw error(error_code::non_positive, "lemma_f1n_check needs n >= 1");
  return matrix_power(letter::A, n - 1).apply(ppt::root()) == f_param(1, bigint(n));
}

}  // namespace berggren
