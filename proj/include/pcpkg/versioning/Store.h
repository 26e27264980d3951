#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcpkg/rdf/Graph.h"

namespace pcpkg::versioning {

class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownCommit : public StoreError {
 public:
  explicit UnknownCommit(const std::string& ref) : StoreError("unknown commit '" + ref + "'") {}
};

class EmptyChange : public StoreError {
 public:
  explicit EmptyChange(const std::string& graph)
      : StoreError("nothing to commit: " + graph + " is unchanged") {}
};

struct ChangeSet {
  std::string graph;
  rdf::Graph added;
  rdf::Graph removed;

  bool empty() const { return added.empty() && removed.empty(); }
  // Throws StoreError unless removed ⊆ state and added ∩ state = ∅.
  void applyTo(rdf::Graph& state) const;
  ChangeSet inverse() const;
};

struct Commit {
  std::string id;
  std::optional<std::string> parent;
  std::string graph;
  std::string author;
  std::string message;
  std::int64_t timestamp = 0;  // UTC seconds
  std::size_t added = 0;
  std::size_t removed = 0;
};

// State of every graph name at some commit.
using Snapshot = std::map<std::string, rdf::Graph>;

// The difference between two states of one graph.
ChangeSet diffStates(const std::string& graph, const rdf::Graph& from, const rdf::Graph& to);

// A linear history of changesets kept in one directory:
//
//   HEAD                      id of the newest commit (absent when empty)
//   commits/<id>/meta         key-value lines
//   commits/<id>/add.nt       sorted N-Triples
//   commits/<id>/remove.nt
//
// Graphs are stored with canonical blank-node labels, so a checkout is
// isomorphic to the committed graph and identical to it when it has no
// blank nodes. A commit directory is written under a temporary name and
// renamed into place before HEAD moves, so an interrupted commit leaves the
// history as it was.
class Store {
 public:
  using Clock = std::function<std::int64_t()>;

  // Creates the directory if needed. Throws StoreError if `dir` exists and
  // holds something other than a store.
  static Store open(const std::filesystem::path& dir);

  const std::filesystem::path& path() const { return dir_; }

  // Replaces the wall clock used for commit timestamps.
  void setClock(Clock clock) { clock_ = std::move(clock); }

  // Records `state` as the new content of `graph`. Throws EmptyChange when
  // it equals the current content.
  Commit commit(const std::string& graph, const rdf::Graph& state, const std::string& author,
                const std::string& message);

  std::optional<std::string> head() const;

  // Accepts a full id, a unique prefix of at least 4 characters, "HEAD", or
  // "HEAD~n" for the n-th ancestor of HEAD.
  std::string resolve(const std::string& ref) const;

  Commit info(const std::string& ref) const;
  ChangeSet changeset(const std::string& ref) const;

  // Newest first.
  std::vector<Commit> log() const;

  Snapshot checkout(const std::string& ref) const;
  rdf::Graph checkout(const std::string& ref, const std::string& graph) const;

  // One changeset per graph that differs between the two commits.
  std::vector<ChangeSet> diff(const std::string& from, const std::string& to) const;

  // Recomputes every commit id from its stored content.
  void verify() const;

 private:
  explicit Store(std::filesystem::path dir);

  std::vector<std::string> lineage(const std::string& id) const;  // root first
  Commit readMeta(const std::string& id) const;

  std::filesystem::path dir_;
  Clock clock_;
};

// Renders "+3 -1" style counts and the first 12 characters of the id.
std::string formatLogEntry(const Commit& commit);

}  // namespace pcpkg::versioning
