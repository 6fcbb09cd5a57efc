#pragma once

#include "errors.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace homcount {

/// A bijection of {0, ..., n-1}. Products compose left to right:
/// (p * q)[x] == q[p[x]], i.e. p is applied first.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree)
  {
    std::iota(images_.begin(), images_.end(), 0u);
  }

  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images))
  {
    std::vector<char> seen(images_.size(), 0);
    for (auto x : images_) {
      if (x >= images_.size() || seen[x])
        throw input_error("permutation images are not a bijection");
      seen[x] = 1;
    }
  }

  /// Parses cycle notation with 1-based points, e.g. "(1 2 3)(4 5)" or "()".
  /// The degree is the larger of `degree` and the largest point mentioned.
  static Permutation from_cycles(std::string_view text, std::size_t degree = 0)
  {
    std::vector<std::vector<std::uint32_t>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ','))
        ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] == '\r' || text[i] == '\n') {
        ++i;
        skip_ws();
        continue;
      }
      if (text[i] != '(')
        throw input_error("cycle notation: expected '(' in \"" + std::string(text) + "\"");
      ++i;
      std::vector<std::uint32_t> cycle;
      for (;;) {
        skip_ws();
        if (i >= text.size())
          throw input_error("cycle notation: unterminated cycle");
        if (text[i] == ')') {
          ++i;
          break;
        }
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9')
          ++i;
        if (start == i)
          throw input_error("cycle notation: expected a point number");
        auto point = std::stoul(std::string(text.substr(start, i - start)));
        if (point == 0)
          throw input_error("cycle notation: points are 1-based");
        cycle.push_back(static_cast<std::uint32_t>(point - 1));
        degree = std::max<std::size_t>(degree, point);
      }
      cycles.push_back(std::move(cycle));
      skip_ws();
    }
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    std::vector<char> touched(degree, 0);
    for (const auto& cycle : cycles) {
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        if (touched[cycle[k]])
          throw input_error("cycle notation: point repeated");
        touched[cycle[k]] = 1;
        images[cycle[k]] = cycle[(k + 1) % cycle.size()];
      }
    }
    return Permutation(std::move(images));
  }

  static Permutation transposition(std::size_t degree, std::uint32_t a, std::uint32_t b)
  {
    Permutation p(degree);
    std::swap(p.images_[a], p.images_[b]);
    return p;
  }

  /// The cycle points[0] -> points[1] -> ... -> points[0].
  static Permutation cycle(std::size_t degree, const std::vector<std::uint32_t>& points)
  {
    Permutation p(degree);
    for (std::size_t k = 0; k < points.size(); ++k)
      p.images_[points[k]] = points[(k + 1) % points.size()];
    return p;
  }

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const
  {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x)
      out.images_[x] = rhs.images_[images_[x]];
    return out;
  }

  Permutation inverse() const
  {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x)
      out.images_[images_[x]] = static_cast<std::uint32_t>(x);
    return out;
  }

  bool is_identity() const
  {
    for (std::size_t x = 0; x < images_.size(); ++x)
      if (images_[x] != x)
        return false;
    return true;
  }

  /// 0 for even, 1 for odd.
  int parity() const
  {
    std::vector<char> seen(images_.size(), 0);
    std::size_t transpositions = 0;
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (seen[x])
        continue;
      std::size_t len = 0;
      for (std::size_t y = x; !seen[y]; y = images_[y]) {
        seen[y] = 1;
        ++len;
      }
      transpositions += len - 1;
    }
    return static_cast<int>(transpositions & 1u);
  }

  bool is_even() const { return parity() == 0; }

  std::uint32_t first_moved_point() const
  {
    for (std::size_t x = 0; x < images_.size(); ++x)
      if (images_[x] != x)
        return static_cast<std::uint32_t>(x);
    return static_cast<std::uint32_t>(images_.size());
  }

  std::string to_cycles() const
  {
    std::ostringstream out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (seen[x] || images_[x] == x)
        continue;
      out << '(';
      bool first = true;
      for (std::size_t y = x; !seen[y]; y = images_[y]) {
        seen[y] = 1;
        if (!first)
          out << ' ';
        out << (y + 1);
        first = false;
      }
      out << ')';
    }
    auto s = out.str();
    return s.empty() ? "()" : s;
  }

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept
  {
    std::size_t h = p.degree();
    for (auto x : p.images())
      h = h * 1000003u ^ x;
    return h;
  }
};

} // namespace homcount
