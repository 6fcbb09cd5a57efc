#pragma once

// Simplicial complexes of dimension at most 3, their homology, and simplex
// orderings with boundary width.

#include "group_io.hpp"
#include "snf.hpp"

#include <map>
#include <numeric>

namespace homcount {

using Simplex = std::vector<std::uint32_t>; // sorted vertex ids
using SimplexOrdering = std::vector<std::size_t>; // simplex ids, first to last

class SimplicialComplex {
public:
  static constexpr std::size_t kMaxDimension = 3;

  SimplicialComplex() = default;

  /// Face closure of the given simplices plus every vertex 0..vertices-1.
  /// Simplex ids are sorted by dimension, then lexicographically.
  SimplicialComplex(std::size_t vertices, const std::vector<Simplex>& maximal) : vertices_(vertices)
  {
    std::set<Simplex> all;
    for (std::uint32_t v = 0; v < vertices; ++v)
      all.insert({v});
    for (auto s : maximal) {
      std::sort(s.begin(), s.end());
      if (s.empty())
        throw input_error("complex: empty simplex");
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw input_error("complex: simplex with a repeated vertex");
      if (s.back() >= vertices)
        throw input_error("complex: vertex id " + std::to_string(s.back()) + " out of range");
      if (s.size() > kMaxDimension + 1)
        throw input_error("complex: simplices of dimension above 3 are not supported");
      // All nonempty subsets.
      const auto k = s.size();
      for (unsigned mask = 1; mask < (1u << k); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (1u << i))
            face.push_back(s[i]);
        all.insert(std::move(face));
      }
    }
    for (const auto& s : all)
      simplices_.push_back(s);
    std::stable_sort(simplices_.begin(), simplices_.end(),
                     [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
    for (std::size_t i = 0; i < simplices_.size(); ++i)
      index_.emplace(simplices_[i], i);
    faces_.resize(simplices_.size());
    cofaces_.resize(simplices_.size());
    by_dim_.resize(kMaxDimension + 1);
    for (std::size_t i = 0; i < simplices_.size(); ++i) {
      const auto& s = simplices_[i];
      by_dim_[s.size() - 1].push_back(i);
      if (s.size() == 1)
        continue;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != drop)
            f.push_back(s[j]);
        auto fid = index_.at(f);
        faces_[i].push_back(fid);
        cofaces_[fid].push_back(i);
      }
    }
  }

  std::size_t vertex_count() const { return vertices_; }
  std::size_t size() const { return simplices_.size(); }
  const Simplex& simplex(std::size_t id) const { return simplices_[id]; }
  std::size_t dimension_of(std::size_t id) const { return simplices_[id].size() - 1; }
  int dimension() const
  {
    for (int d = kMaxDimension; d >= 0; --d)
      if (!by_dim_[static_cast<std::size_t>(d)].empty())
        return d;
    return -1;
  }
  const std::vector<std::size_t>& of_dimension(std::size_t d) const { return by_dim_[d]; }
  std::size_t count(std::size_t d) const { return d <= kMaxDimension ? by_dim_[d].size() : 0; }

  /// Codimension-one faces; face k omits vertex k.
  const std::vector<std::size_t>& faces(std::size_t id) const { return faces_[id]; }
  const std::vector<std::size_t>& cofaces(std::size_t id) const { return cofaces_[id]; }

  std::optional<std::size_t> find(Simplex s) const
  {
    std::sort(s.begin(), s.end());
    auto it = index_.find(s);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  std::size_t edge_id(std::uint32_t a, std::uint32_t b) const
  {
    auto id = find({a, b});
    if (!id)
      throw input_error("complex: no edge " + std::to_string(a) + "-" + std::to_string(b));
    return *id;
  }

  /// Connected component label per vertex.
  std::vector<std::uint32_t> components() const
  {
    std::vector<std::uint32_t> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0u);
    auto root = [&](std::uint32_t x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto e : by_dim_[1])
      parent[root(simplices_[e][0])] = root(simplices_[e][1]);
    std::vector<std::uint32_t> label(vertices_);
    for (std::uint32_t v = 0; v < vertices_; ++v)
      label[v] = root(v);
    return label;
  }

  std::size_t component_count() const
  {
    auto label = components();
    std::sort(label.begin(), label.end());
    return static_cast<std::size_t>(std::unique(label.begin(), label.end()) - label.begin());
  }

  bool is_connected() const { return vertices_ > 0 && component_count() == 1; }

  long euler_characteristic() const
  {
    long chi = 0;
    for (std::size_t d = 0; d <= kMaxDimension; ++d)
      chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(by_dim_[d].size());
    return chi;
  }

  /// Boundary matrix from d-chains to (d-1)-chains, rows and columns in id order.
  IntegerMatrix boundary_matrix(std::size_t d) const
  {
    const auto& cols = by_dim_[d];
    const auto& rows = by_dim_[d - 1];
    IntegerMatrix m(rows.size(), cols.size());
    const std::size_t row_base = rows.empty() ? 0 : rows.front();
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto& fs = faces_[cols[j]];
      for (std::size_t k = 0; k < fs.size(); ++k)
        m(fs[k] - row_base, j) = (k % 2 == 0) ? 1 : -1;
    }
    return m;
  }

  /// The id order: every face precedes its cofaces.
  SimplexOrdering default_ordering() const
  {
    SimplexOrdering ord(simplices_.size());
    std::iota(ord.begin(), ord.end(), std::size_t{0});
    return ord;
  }

private:
  std::size_t vertices_ = 0;
  std::vector<Simplex> simplices_;
  std::map<Simplex, std::size_t> index_;
  std::vector<std::vector<std::size_t>> faces_;
  std::vector<std::vector<std::size_t>> cofaces_;
  std::vector<std::vector<std::size_t>> by_dim_;
};

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion; // invariant factors greater than 1
};

/// H_0..H_3 with integer coefficients.
inline std::vector<HomologyGroup> homology(const SimplicialComplex& x)
{
  constexpr auto top = SimplicialComplex::kMaxDimension;
  std::vector<std::vector<BigInt>> diag(top + 2);
  std::vector<std::size_t> rank(top + 2, 0);
  for (std::size_t d = 1; d <= top; ++d) {
    if (x.count(d) == 0 || x.count(d - 1) == 0)
      continue;
    diag[d] = smith_normal_form(x.boundary_matrix(d));
    rank[d] = rank_of_diagonal(diag[d]);
  }
  std::vector<HomologyGroup> out(top + 1);
  for (std::size_t d = 0; d <= top; ++d) {
    out[d].rank = x.count(d) - rank[d] - rank[d + 1];
    for (const auto& v : diag[d + 1])
      if (v > 1)
        out[d].torsion.push_back(v);
  }
  return out;
}

inline std::string format_homology_group(const HomologyGroup& h)
{
  std::string out;
  auto add = [&](const std::string& part) { out += (out.empty() ? "" : " + ") + part; };
  if (h.rank == 1)
    add("Z");
  else if (h.rank > 1)
    add("Z^" + std::to_string(h.rank));
  for (const auto& t : h.torsion)
    add("Z/" + to_string(t));
  return out.empty() ? "0" : out;
}

/// Throws input_error unless `ord` lists every simplex once with faces first.
inline void validate_ordering(const SimplicialComplex& x, const SimplexOrdering& ord)
{
  if (ord.size() != x.size())
    throw input_error("ordering lists " + std::to_string(ord.size()) + " simplices, complex has " +
                      std::to_string(x.size()));
  std::vector<char> placed(x.size(), 0);
  for (auto id : ord) {
    if (id >= x.size() || placed[id])
      throw input_error("ordering repeats a simplex or names an unknown one");
    for (auto f : x.faces(id))
      if (!placed[f])
        throw input_error("ordering does not refine the face order: a face of simplex " + std::to_string(id) +
                          " comes after it");
    placed[id] = 1;
  }
}

/// All nonempty proper faces of simplex `id` (every dimension).
inline std::vector<std::size_t> proper_faces(const SimplicialComplex& x, std::size_t id)
{
  const auto& s = x.simplex(id);
  std::vector<std::size_t> out;
  const unsigned full = (1u << s.size()) - 1;
  for (unsigned mask = 1; mask < full; ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (mask & (1u << i))
        f.push_back(s[i]);
    out.push_back(*x.find(f));
  }
  return out;
}

/// bd(X_k) = closure(X \ X_k) intersected with X_k: simplices of the
/// prefix that are faces of some simplex outside it.
inline std::vector<std::size_t> boundary_of_prefix(const SimplicialComplex& x, const std::vector<char>& in_prefix)
{
  std::vector<char> in_closure(x.size(), 0);
  for (std::size_t id = 0; id < x.size(); ++id)
    if (!in_prefix[id])
      for (auto f : proper_faces(x, id))
        in_closure[f] = 1;
  std::vector<std::size_t> bd;
  for (std::size_t id = 0; id < x.size(); ++id)
    if (in_prefix[id] && in_closure[id])
      bd.push_back(id);
  return bd;
}

struct WidthReport {
  std::size_t width = 0; // max simplices in bd(X_k)
  std::size_t edge_width = 0; // max edges in bd(X_k)
  std::vector<std::size_t> profile; // |bd(X_k)| for k = 0..n
};

namespace detail {

/// For each simplex, its proper faces and the number of simplices
/// containing it.
struct FaceIncidence {
  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::size_t> above;

  explicit FaceIncidence(const SimplicialComplex& x) : faces(x.size()), above(x.size(), 0)
  {
    for (std::size_t id = 0; id < x.size(); ++id) {
      faces[id] = proper_faces(x, id);
      for (auto f : faces[id])
        ++above[f];
    }
  }
};

} // namespace detail

/// Boundary sizes maintained incrementally: a simplex is on the boundary
/// while it is placed and some simplex containing it is not.
inline WidthReport ordering_width(const SimplicialComplex& x, const SimplexOrdering& ord)
{
  validate_ordering(x, ord);
  detail::FaceIncidence inc(x);
  auto& unplaced_above = inc.above;
  WidthReport report;
  report.profile.push_back(0);
  std::size_t bd = 0, bd_edges = 0;
  for (auto id : ord) {
    if (unplaced_above[id] > 0) {
      ++bd;
      bd_edges += x.dimension_of(id) == 1;
    }
    for (auto f : inc.faces[id])
      if (--unplaced_above[f] == 0) {
        --bd;
        bd_edges -= x.dimension_of(f) == 1;
      }
    report.profile.push_back(bd);
    report.width = std::max(report.width, bd);
    report.edge_width = std::max(report.edge_width, bd_edges);
  }
  return report;
}

/// Greedy ordering: repeatedly place the available simplex (all faces
/// placed) that adds the least to the boundary; ties go to higher
/// dimension, then to vertices adjacent to many placed vertices, then to
/// the smallest id.
inline SimplexOrdering greedy_ordering(const SimplicialComplex& x)
{
  const auto n = x.size();
  detail::FaceIncidence inc(x);
  auto& unplaced_above = inc.above;
  std::vector<std::size_t> missing_faces(n);
  for (std::size_t id = 0; id < n; ++id)
    missing_faces[id] = x.faces(id).size();
  std::vector<char> placed(n, 0);
  std::set<std::size_t> available;
  for (std::size_t id = 0; id < n; ++id)
    if (missing_faces[id] == 0)
      available.insert(id);
  SimplexOrdering ord;
  while (!available.empty()) {
    std::size_t best = n;
    long best_delta = 0;
    std::size_t best_dim = 0;
    std::size_t best_touch = 0;
    for (auto id : available) {
      long delta = unplaced_above[id] > 0 ? 1 : 0;
      for (auto f : inc.faces[id])
        if (unplaced_above[f] == 1)
          --delta;
      std::size_t touch = 0;
      if (x.dimension_of(id) == 0) {
        // A vertex next to already placed vertices keeps the sweep local.
        for (auto e : x.cofaces(id))
          for (auto v : x.faces(e))
            touch += placed[v] && v != id;
      }
      auto dim = x.dimension_of(id);
      bool better = best == n || delta < best_delta ||
                    (delta == best_delta && (dim > best_dim || (dim == best_dim && touch > best_touch)));
      if (better) {
        best = id;
        best_delta = delta;
        best_touch = touch;
        best_dim = dim;
      }
    }
    available.erase(best);
    placed[best] = 1;
    ord.push_back(best);
    for (auto f : inc.faces[best])
      --unplaced_above[f];
    for (auto c : x.cofaces(best))
      if (--missing_faces[c] == 0)
        available.insert(c);
  }
  return ord;
}

/// Complex file: `vertices n`, one simplex per line, optional `order`
/// section listing every simplex in sequence.
struct ComplexFile {
  SimplicialComplex complex;
  std::optional<SimplexOrdering> ordering;
};

inline ComplexFile parse_complex(const std::string& text, const std::string& origin = "complex")
{
  auto lines = io::content_lines(text);
  if (lines.empty())
    throw input_error(origin + ": empty complex description");
  auto header = io::split_words(lines[0]);
  if (header.size() != 2 || header[0] != "vertices")
    throw input_error(origin + ": header must be 'vertices <n>'");
  auto n = io::parse_uint(header[1], origin + " vertex count");
  std::vector<Simplex> simplices, order;
  bool in_order = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i] == "order") {
      in_order = true;
      continue;
    }
    auto ids = io::parse_ids(io::split_words(lines[i]), 0, origin + " simplex");
    (in_order ? order : simplices).push_back(Simplex(ids.begin(), ids.end()));
  }
  ComplexFile file{SimplicialComplex(n, simplices), std::nullopt};
  if (in_order) {
    SimplexOrdering ord;
    for (const auto& s : order) {
      auto id = file.complex.find(s);
      if (!id)
        throw input_error(origin + ": ordering names a simplex that is not in the complex");
      ord.push_back(*id);
    }
    validate_ordering(file.complex, ord);
    file.ordering = std::move(ord);
  }
  return file;
}

inline ComplexFile load_complex(const std::filesystem::path& path)
{
  return parse_complex(io::read_file(path), path.string());
}

inline std::string format_complex(const SimplicialComplex& x, const SimplexOrdering* ord = nullptr)
{
  std::ostringstream out;
  out << "vertices " << x.vertex_count() << '\n';
  for (std::size_t id = 0; id < x.size(); ++id) {
    bool maximal = x.cofaces(id).empty();
    if (!maximal)
      continue;
    const auto& s = x.simplex(id);
    for (std::size_t i = 0; i < s.size(); ++i)
      out << (i ? " " : "") << s[i];
    out << '\n';
  }
  if (ord) {
    out << "order\n";
    for (auto id : *ord) {
      const auto& s = x.simplex(id);
      for (std::size_t i = 0; i < s.size(); ++i)
        out << (i ? " " : "") << s[i];
      out << '\n';
    }
  }
  return out.str();
}

} // namespace homcount
