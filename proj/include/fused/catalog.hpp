#pragma once

// Persistent catalog of named links, stored as JSON Lines and keyed by the
// canonical invariant.

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fused/braid.hpp"
#include "fused/invariant.hpp"
#include "fused/io.hpp"

namespace fused {

class CatalogError : public std::runtime_error {
 public:
  CatalogError(std::string const& what, std::size_t line = 0)
      : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct CatalogEntry {
  std::string name;
  std::string word;
  int strands = 1;
  int components = 1;
  LinkingMatrix canonical;
  std::string added_at;
};

inline std::string utc_timestamp() {
  std::time_t const now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline CatalogEntry make_catalog_entry(std::string name, BraidWord const& w) {
  CanonicalInvariant inv = fused_invariant(w);
  return {std::move(name), format_braid(w), w.strands(), inv.components, std::move(inv.canonical), utc_timestamp()};
}

inline json entry_to_json(CatalogEntry const& e) {
  return json{{"name", e.name},
              {"word", e.word},
              {"strands", e.strands},
              {"components", e.components},
              {"canonical", matrix_to_json(e.canonical)},
              {"added_at", e.added_at}};
}

inline CatalogEntry entry_from_json(json const& j) {
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.word = j.at("word").get<std::string>();
  e.strands = j.at("strands").get<int>();
  e.components = j.at("components").get<int>();
  e.canonical = matrix_from_json(j.at("canonical"));
  e.added_at = j.at("added_at").get<std::string>();
  if (e.canonical.size() != e.components) throw std::invalid_argument("canonical matrix size differs from components");
  return e;
}

// A missing store is an empty catalog. In strict mode each stored canonical
// form is recomputed from its word.
inline std::vector<CatalogEntry> load_catalog(std::string const& path, bool strict = false) {
  std::vector<CatalogEntry> entries;
  std::ifstream in(path);
  if (!in) return entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    CatalogEntry e;
    try {
      e = entry_from_json(json::parse(line));
    } catch (std::exception const& ex) {
      throw CatalogError(std::string("malformed catalog entry: ") + ex.what(), line_no);
    }
    if (strict) {
      CanonicalInvariant inv;
      try {
        inv = fused_invariant(parse_braid(e.word, e.strands));
      } catch (std::exception const& ex) {
        throw CatalogError(std::string("stored word does not parse: ") + ex.what(), line_no);
      }
      if (inv.components != e.components || !(inv.canonical == e.canonical)) {
        throw CatalogError("stored invariant of '" + e.name + "' does not match its word", line_no);
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

// Appends under an exclusive lock; fails fast if another writer holds it.
inline void add_to_catalog(std::string const& path, CatalogEntry const& entry) {
  int const fd = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
  if (fd < 0) throw CatalogError("cannot open catalog store " + path);
  if (::flock(fd, LOCK_EX | LOCK_NB) != 0) {
    ::close(fd);
    throw CatalogError("catalog store is locked by another writer");
  }
  try {
    for (auto const& e : load_catalog(path)) {
      if (e.name == entry.name) throw CatalogError("an entry named '" + entry.name + "' already exists");
    }
  } catch (...) {
    ::flock(fd, LOCK_UN);
    ::close(fd);
    throw;
  }
  std::string const line = entry_to_json(entry).dump() + "\n";
  ssize_t const written = ::write(fd, line.data(), line.size());
  ::flock(fd, LOCK_UN);
  ::close(fd);
  if (written != static_cast<ssize_t>(line.size())) throw CatalogError("short write to catalog store");
}

inline std::vector<CatalogEntry> find_in_catalog(std::vector<CatalogEntry> const& entries,
                                                 CanonicalInvariant const& inv) {
  std::vector<CatalogEntry> out;
  for (auto const& e : entries) {
    if (e.components == inv.components && e.canonical == inv.canonical) out.push_back(e);
  }
  return out;
}

}  // namespace fused
