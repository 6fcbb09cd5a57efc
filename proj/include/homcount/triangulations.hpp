#pragma once

// Small standard triangulations and random 2-complexes.

#include "complex.hpp"

#include <random>

namespace homcount::triangulations {

/// A single triangle with its faces.
inline SimplicialComplex disk() { return SimplicialComplex(3, {{0, 1, 2}}); }

/// Boundary of the tetrahedron.
inline SimplicialComplex sphere() { return SimplicialComplex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

/// Six-vertex projective plane (antipodal quotient of the icosahedron).
inline SimplicialComplex projective_plane()
{
  return SimplicialComplex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                               {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

/// Seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline SimplicialComplex torus7()
{
  std::vector<Simplex> triangles;
  for (std::uint32_t i = 0; i < 7; ++i) {
    triangles.push_back({i, (i + 1) % 7, (i + 3) % 7});
    triangles.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex(7, triangles);
}

/// rows x cols grid on the torus, each square cut along a diagonal.
/// Vertex (i, j) has id i * cols + j. Needs rows, cols >= 3.
inline SimplicialComplex grid_torus(std::uint32_t rows, std::uint32_t cols)
{
  if (rows < 3 || cols < 3)
    throw input_error("grid_torus: needs at least 3 rows and 3 columns");
  auto id = [&](std::uint32_t i, std::uint32_t j) { return (i % rows) * cols + (j % cols); };
  std::vector<Simplex> triangles;
  for (std::uint32_t i = 0; i < rows; ++i)
    for (std::uint32_t j = 0; j < cols; ++j) {
      triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      triangles.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  return SimplicialComplex(rows * cols, triangles);
}

/// Genus-2 surface: two seven-vertex tori with the triangle {0, 1, 3}
/// removed from each, glued along its boundary (11 vertices).
inline SimplicialComplex genus2()
{
  std::vector<Simplex> triangles;
  const std::uint32_t relabel[7] = {0, 1, 7, 3, 8, 9, 10};
  for (std::uint32_t i = 0; i < 7; ++i) {
    for (Simplex t : {Simplex{i, (i + 1) % 7, (i + 3) % 7}, Simplex{i, (i + 2) % 7, (i + 3) % 7}}) {
      std::sort(t.begin(), t.end());
      if (t == Simplex{0, 1, 3})
        continue;
      triangles.push_back(t);
      triangles.push_back({relabel[t[0]], relabel[t[1]], relabel[t[2]]});
    }
  }
  return SimplicialComplex(11, triangles);
}

/// Orders simplices by the largest key among their vertices, then by
/// dimension, then by id. Any vertex key gives a valid ordering.
inline SimplexOrdering sweep_ordering(const SimplicialComplex& x, const std::vector<std::uint32_t>& vertex_key)
{
  if (vertex_key.size() != x.vertex_count())
    throw input_error("sweep_ordering: one key per vertex is required");
  std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>> keyed;
  for (std::size_t id = 0; id < x.size(); ++id) {
    std::uint32_t k = 0;
    for (auto v : x.simplex(id))
      k = std::max(k, vertex_key[v]);
    keyed.emplace_back(k, x.dimension_of(id), id);
  }
  std::sort(keyed.begin(), keyed.end());
  SimplexOrdering ord;
  for (const auto& [k, d, id] : keyed)
    ord.push_back(id);
  return ord;
}

/// Column sweep of grid_torus(rows, cols).
inline SimplexOrdering grid_column_sweep(const SimplicialComplex& grid, std::uint32_t rows, std::uint32_t cols)
{
  std::vector<std::uint32_t> key(rows * cols);
  for (std::uint32_t v = 0; v < rows * cols; ++v)
    key[v] = v % cols;
  return sweep_ordering(grid, key);
}

/// Connected random 2-complex with at most `max_simplices` simplices:
/// random triangles on a few vertices, plus edges joining components.
inline SimplicialComplex random_2complex(std::mt19937_64& rng, std::size_t max_simplices = 40)
{
  for (;;) {
    std::uint32_t n = 3 + static_cast<std::uint32_t>(rng() % 5);
    std::size_t triangle_count = 1 + rng() % 7;
    std::vector<Simplex> simplices;
    for (std::size_t t = 0; t < triangle_count; ++t) {
      Simplex s;
      while (s.size() < 3) {
        auto v = static_cast<std::uint32_t>(rng() % n);
        if (std::find(s.begin(), s.end(), v) == s.end())
          s.push_back(v);
      }
      simplices.push_back(s);
    }
    for (std::size_t extra = rng() % 3; extra > 0; --extra) {
      auto a = static_cast<std::uint32_t>(rng() % n), b = static_cast<std::uint32_t>(rng() % n);
      if (a != b)
        simplices.push_back({a, b});
    }
    SimplicialComplex x(n, simplices);
    auto label = x.components();
    for (std::uint32_t v = 1; v < n; ++v)
      if (label[v] != label[0]) {
        simplices.push_back({0, v});
        x = SimplicialComplex(n, simplices);
        label = x.components();
      }
    if (x.size() <= max_simplices)
      return x;
  }
}

} // namespace homcount::triangulations
