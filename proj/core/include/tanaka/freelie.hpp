// Free Lie algebra on two generators in the Lyndon (Hall) basis.
//
// Generator 1 stands for the holomorphic field L, generator 2 for its conjugate.
// Basis words are Lyndon words over {1 < 2} with their standard bracketing,
// ordered by length and then lexicographically, so the generators sit at
// positions 0 and 1.
#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tanaka/exact.hpp"

namespace tanaka {

// Dimension of the degree-ell part of the free Lie algebra on two generators.
std::uint64_t witt_dim(int ell);
// Sum of witt_dim(j) for j <= ell: the rank reachable by brackets of length <= ell.
std::uint64_t cumulative_dim(int ell);
// Smallest ell with 2 + k <= cumulative_dim(ell).
int min_length_for_codim(int k);

struct Bidegree {
  int n = 0;        // occurrences of generator 1
  int n_bar = 0;    // occurrences of generator 2
  int length() const { return n + n_bar; }
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

struct HallWord {
  std::vector<int> letters;                 // e.g. {1,1,2}
  std::optional<std::size_t> left, right;   // standard factorization (indices into the basis)
  Bidegree bidegree;
  int length() const { return static_cast<int>(letters.size()); }
  bool is_generator() const { return !left.has_value(); }
};

// Sparse integer combination of basis words.
using HallCombination = std::map<std::size_t, Integer>;

enum class Truncation { Forbid, Drop };

class LengthOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HallBasis {
 public:
  explicit HallBasis(int max_length);

  int max_length() const { return max_length_; }
  std::size_t size() const { return words_.size(); }
  const HallWord& word(std::size_t i) const { return words_.at(i); }
  const std::vector<HallWord>& words() const { return words_; }
  std::optional<std::size_t> index_of(const std::vector<int>& letters) const;
  // Basis indices of the words of the given length, in basis order.
  std::vector<std::size_t> indices_of_length(int ell) const;

  // Hall normal form of [a, b], computed by antisymmetry and Jacobi rewriting.
  HallCombination bracket(std::size_t a, std::size_t b,
                          Truncation t = Truncation::Forbid) const;
  HallCombination bracket(const HallCombination& a, const HallCombination& b,
                          Truncation t = Truncation::Forbid) const;

  // "[1,[1,2]]" style text, and the nested-pair JSON form [1,[1,2]].
  std::string label(std::size_t i) const;
  nlohmann::json to_json(std::size_t i) const;
  // Inverse of to_json: parses a nested pair and returns its Hall normal form.
  HallCombination from_json(const nlohmann::json& j) const;

 private:
  int max_length_;
  std::vector<HallWord> words_;
  std::map<std::vector<int>, std::size_t> index_;
  // Filled for every in-range ordered pair during construction; read-only afterwards.
  std::map<std::pair<std::size_t, std::size_t>, HallCombination> table_;

  HallCombination rewrite(std::size_t a, std::size_t b);
  HallCombination rewrite_ordered(std::size_t a, std::size_t b);
};

void add_scaled(HallCombination& acc, const Integer& s, const HallCombination& x);

// Lyndon words over {1,2} of exactly the given length, lexicographic order.
std::vector<std::vector<int>> lyndon_words(int length);

}  // namespace tanaka
