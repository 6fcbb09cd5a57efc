#pragma once

// Text formats for groups and stem extensions.
//
//   group <name> <order>          group <name> <order>
//   table                         perm-gens
//   <order*order ids>             (1 2 3)
//                                 (1 2 3 4 5)
//
// For perm-gens the order on the header is checked against the closure.
//
//   cover <group file, relative to this file>
//   project <cover order ids>
//   center <ids>
//
// Lines starting with '#' are ignored.

#include "group.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace homcount {

namespace io {

inline std::string read_file(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw input_error("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Non-empty, non-comment lines with surrounding whitespace removed.
inline std::vector<std::string> content_lines(const std::string& text)
{
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos)
      continue;
    auto e = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(b, e - b + 1));
  }
  return lines;
}

inline std::vector<std::string> split_words(const std::string& line)
{
  std::istringstream in(line);
  std::vector<std::string> words;
  std::string w;
  while (in >> w)
    words.push_back(w);
  return words;
}

inline std::uint64_t parse_uint(const std::string& word, const std::string& what)
{
  if (word.empty() || word.find_first_not_of("0123456789") != std::string::npos)
    throw input_error(what + ": expected a non-negative integer, got '" + word + "'");
  try {
    return std::stoull(word);
  } catch (const std::out_of_range&) {
    throw input_error(what + ": integer '" + word + "' out of range");
  }
}

inline std::vector<Elem> parse_ids(const std::vector<std::string>& words, std::size_t first,
                                   const std::string& what)
{
  std::vector<Elem> ids;
  for (std::size_t i = first; i < words.size(); ++i)
    ids.push_back(static_cast<Elem>(parse_uint(words[i], what)));
  return ids;
}

} // namespace io

inline FiniteGroup parse_group(const std::string& text, const std::string& origin = "group")
{
  auto lines = io::content_lines(text);
  if (lines.empty())
    throw input_error(origin + ": empty group description");
  auto header = io::split_words(lines[0]);
  if (header.size() != 3 || header[0] != "group")
    throw input_error(origin + ": header must be 'group <name> <order>'");
  auto order = io::parse_uint(header[2], origin + " order");
  if (lines.size() < 2)
    throw input_error(origin + ": missing 'table' or 'perm-gens' section");
  if (lines[1] == "table") {
    std::vector<Elem> table;
    for (std::size_t i = 2; i < lines.size(); ++i) {
      auto ids = io::parse_ids(io::split_words(lines[i]), 0, origin + " table");
      table.insert(table.end(), ids.begin(), ids.end());
    }
    return FiniteGroup::from_table(header[1], order, std::move(table));
  }
  if (lines[1] == "perm-gens") {
    std::vector<Permutation> gens;
    for (std::size_t i = 2; i < lines.size(); ++i)
      gens.push_back(Permutation::from_cycles(lines[i]));
    auto g = FiniteGroup::from_permutations(header[1], gens, std::max<std::uint64_t>(order, 1) * 2);
    if (g.order() != order)
      throw input_error(origin + ": generators close to a group of order " + std::to_string(g.order()) +
                        ", header says " + std::to_string(order));
    return g;
  }
  throw input_error(origin + ": expected 'table' or 'perm-gens', got '" + lines[1] + "'");
}

inline FiniteGroup load_group(const std::filesystem::path& path)
{
  return parse_group(io::read_file(path), path.string());
}

inline std::string format_group_table(const FiniteGroup& g)
{
  std::ostringstream out;
  out << "group " << g.name() << ' ' << g.order() << "\ntable\n";
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b)
      out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
  return out.str();
}

inline StemExtension load_extension(const std::filesystem::path& path)
{
  auto lines = io::content_lines(io::read_file(path));
  StemExtension ext;
  bool have_project = false, have_center = false;
  for (const auto& line : lines) {
    auto words = io::split_words(line);
    if (words[0] == "cover") {
      if (words.size() != 2)
        throw input_error(path.string() + ": 'cover' takes one file name");
      auto cover_path = path.parent_path() / words[1];
      ext.cover = std::make_shared<FiniteGroup>(load_group(cover_path));
    } else if (words[0] == "project") {
      ext.projection = io::parse_ids(words, 1, path.string() + " project");
      have_project = true;
    } else if (words[0] == "center") {
      ext.center_ids = io::parse_ids(words, 1, path.string() + " center");
      std::sort(ext.center_ids.begin(), ext.center_ids.end());
      have_center = true;
    } else {
      throw input_error(path.string() + ": unknown directive '" + words[0] + "'");
    }
  }
  if (!ext.cover || !have_project || !have_center)
    throw input_error(path.string() + ": extension needs 'cover', 'project' and 'center'");
  return ext;
}

} // namespace homcount
