#include "tanaka/freelie.hpp"

#include <algorithm>

namespace tanaka {

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

bool lyndon_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::uint64_t witt_dim(int ell) {
  if (ell < 1) throw std::invalid_argument("witt_dim: length must be positive");
  if (ell > 60) throw std::out_of_range("witt_dim: length too large");
  std::int64_t sum = 0;
  for (int d = 1; d <= ell; ++d)
    if (ell % d == 0) sum += mobius(d) * (std::int64_t{1} << (ell / d));
  return static_cast<std::uint64_t>(sum / ell);
}

std::uint64_t cumulative_dim(int ell) {
  std::uint64_t total = 0;
  for (int j = 1; j <= ell; ++j) total += witt_dim(j);
  return total;
}

int min_length_for_codim(int k) {
  if (k < 1) throw std::invalid_argument("min_length_for_codim: codimension must be positive");
  const auto target = static_cast<std::uint64_t>(2 + k);
  int ell = 1;
  while (cumulative_dim(ell) < target) ++ell;
  return ell;
}

// Duval's algorithm, filtered to the requested length.
std::vector<std::vector<int>> lyndon_words(int length) {
  std::vector<std::vector<int>> out;
  if (length < 1) return out;
  std::vector<int> w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == length) out.push_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == 2) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

HallBasis::HallBasis(int max_length) : max_length_(max_length) {
  if (max_length < 1) throw std::invalid_argument("HallBasis: max_length must be positive");
  for (int ell = 1; ell <= max_length; ++ell) {
    for (auto& letters : lyndon_words(ell)) {
      HallWord w;
      w.letters = letters;
      for (int c : letters) (c == 1 ? w.bidegree.n : w.bidegree.n_bar)++;
      if (ell > 1) {
        // Standard factorization: right factor is the longest proper Lyndon suffix.
        for (std::size_t split = 1; split < letters.size(); ++split) {
          std::vector<int> v(letters.begin() + static_cast<std::ptrdiff_t>(split), letters.end());
          auto it = index_.find(v);
          if (it == index_.end()) continue;
          std::vector<int> u(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(split));
          w.left = index_.at(u);
          w.right = it->second;
          break;
        }
      }
      index_[letters] = words_.size();
      words_.push_back(std::move(w));
    }
  }
  for (std::size_t a = 0; a < words_.size(); ++a)
    for (std::size_t b = 0; b < words_.size(); ++b)
      if (words_[a].length() + words_[b].length() <= max_length_ &&
          lyndon_less(words_[a].letters, words_[b].letters))
        rewrite_ordered(a, b);
}

std::optional<std::size_t> HallBasis::index_of(const std::vector<int>& letters) const {
  auto it = index_.find(letters);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> HallBasis::indices_of_length(int ell) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i].length() == ell) out.push_back(i);
  return out;
}

void add_scaled(HallCombination& acc, const Integer& s, const HallCombination& x) {
  if (s == 0) return;
  for (const auto& [k, c] : x) {
    Integer& slot = acc[k];
    slot += s * c;
    if (slot == 0) acc.erase(k);
  }
}

HallCombination HallBasis::bracket(std::size_t a, std::size_t b, Truncation t) const {
  if (a >= size() || b >= size()) throw std::out_of_range("HallBasis::bracket: index out of range");
  if (words_[a].length() + words_[b].length() > max_length_) {
    if (t == Truncation::Drop) return {};
    throw LengthOverflow("bracket of length " +
                         std::to_string(words_[a].length() + words_[b].length()) +
                         " exceeds Hall basis length " + std::to_string(max_length_));
  }
  if (a == b) return {};
  if (lyndon_less(words_[b].letters, words_[a].letters)) {
    HallCombination r;
    add_scaled(r, -1, table_.at({b, a}));
    return r;
  }
  return table_.at({a, b});
}

HallCombination HallBasis::rewrite(std::size_t a, std::size_t b) {
  if (a == b) return {};
  if (lyndon_less(words_[b].letters, words_[a].letters)) {
    HallCombination r;
    add_scaled(r, -1, rewrite_ordered(b, a));
    return r;
  }
  return rewrite_ordered(a, b);
}

HallCombination HallBasis::bracket(const HallCombination& a, const HallCombination& b,
                                   Truncation t) const {
  HallCombination r;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) add_scaled(r, ci * cj, bracket(i, j, t));
  return r;
}

// Requires word(a) < word(b) lexicographically and the total length in range.
HallCombination HallBasis::rewrite_ordered(std::size_t a, std::size_t b) {
  auto key = std::make_pair(a, b);
  if (auto it = table_.find(key); it != table_.end()) return it->second;

  HallCombination result;
  const HallWord& u = words_[a];
  if (u.is_generator() || !lyndon_less(words_[*u.right].letters, words_[b].letters)) {
    // uv is Lyndon with standard factorization (u, v).
    std::vector<int> uv = u.letters;
    uv.insert(uv.end(), words_[b].letters.begin(), words_[b].letters.end());
    result[index_.at(uv)] = 1;
  } else {
    // [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2]
    const std::size_t u1 = *u.left;
    const std::size_t u2 = *u.right;
    for (const auto& [k, c] : rewrite(u2, b)) add_scaled(result, c, rewrite(u1, k));
    for (const auto& [k, c] : rewrite(u1, b)) add_scaled(result, c, rewrite(k, u2));
  }
  table_.emplace(key, result);
  return result;
}

std::string HallBasis::label(std::size_t i) const {
  const HallWord& w = word(i);
  if (w.is_generator()) return std::to_string(w.letters.front());
  return "[" + label(*w.left) + "," + label(*w.right) + "]";
}

nlohmann::json HallBasis::to_json(std::size_t i) const {
  const HallWord& w = word(i);
  if (w.is_generator()) return w.letters.front();
  return nlohmann::json::array({to_json(*w.left), to_json(*w.right)});
}

HallCombination HallBasis::from_json(const nlohmann::json& j) const {
  if (j.is_number_integer()) {
    const int g = j.get<int>();
    if (g != 1 && g != 2) throw std::invalid_argument("Hall word generator must be 1 or 2");
    return {{static_cast<std::size_t>(g - 1), 1}};
  }
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("Hall word must be a generator or a pair");
  return bracket(from_json(j[0]), from_json(j[1]));
}

}  // namespace tanaka
