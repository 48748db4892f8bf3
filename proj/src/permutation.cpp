#include "subpat/permutation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "subpat/errors.hpp"

namespace subpat {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const auto n = values_.size();
  if (n == 0) throw std::invalid_argument("permutation must have size at least 1");
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  std::vector<int> values;
  try {
    if (tokens.size() == 1 && tokens[0].size() > 1) {
      for (char ch : tokens[0]) {
        if (ch < '1' || ch > '9') throw ParseError("bad permutation digit");
        values.push_back(ch - '0');
      }
    } else {
      for (const auto& tok : tokens) {
        std::size_t used = 0;
        values.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw ParseError("bad permutation token '" + tok + "'");
      }
    }
    return Permutation(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("cannot parse permutation: ") + e.what());
  } catch (const std::out_of_range&) {
    throw ParseError("permutation value out of range");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reversed() const {
  auto v = values_;
  std::reverse(v.begin(), v.end());
  return Permutation(std::move(v));
}

Permutation Permutation::complemented() const {
  auto v = values_;
  for (auto& x : v) x = size() + 1 - x;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(values_[i]);
  }
  return out;
}

std::string Permutation::to_compact() const {
  std::string out;
  for (int v : values_) out += std::to_string(v);
  return out;
}

BinaryMatrix permutation_to_matrix(const Permutation& p) {
  const int n = p.size();
  BinaryMatrix m(n, n);
  for (int j = 1; j <= n; ++j) m.set(p(j), j);
  return m;
}

bool is_permutation_matrix(const BinaryMatrix& m) noexcept {
  if (m.rows() != m.cols()) return false;
  RowWord used = 0;
  for (auto w : m.row_words()) {
    if (std::popcount(w) != 1 || (used & w)) return false;
    used |= w;
  }
  return true;
}

Permutation matrix_to_permutation(const BinaryMatrix& m) {
  if (!is_permutation_matrix(m)) {
    throw NotAPermutationMatrix("matrix is not a permutation matrix:\n" + m.to_text());
  }
  std::vector<int> values(static_cast<std::size_t>(m.cols()));
  for (int i = 1; i <= m.rows(); ++i) {
    const int col = std::countr_zero(m.row_word(i)) + 1;
    values[static_cast<std::size_t>(col - 1)] = i;
  }
  return Permutation(std::move(values));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace subpat
