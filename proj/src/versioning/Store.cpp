#include "pcpkg/versioning/Store.h"

#include <chrono>
#include <ctime>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "pcpkg/rdf/NTriples.h"
#include "pcpkg/rdf/Turtle.h"
#include "pcpkg/util/Sha256.h"

namespace pcpkg::versioning {

namespace fs = std::filesystem;

namespace {

constexpr const char* kHead = "HEAD";
constexpr const char* kCommits = "commits";

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\') {
      out += "\\\\";
    } else if (c == '\n') {
      out += "\\n";
    } else if (c == '\r') {
      out += "\\r";
    } else {
      out += c;
    }
  }
  return out;
}

std::string unescape(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      char n = s[++i];
      out += n == 'n' ? '\n' : n == 'r' ? '\r' : n;
    } else {
      out += s[i];
    }
  }
  return out;
}

std::string readFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StoreError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.flush();
  if (!out) throw StoreError("cannot write " + path.string());
}

// The hashed part of a commit: metadata lines followed by both changeset
// files.
std::string commitContent(const Commit& c, const std::string& add, const std::string& remove) {
  std::string meta = "parent " + c.parent.value_or("") + "\n" + "graph " + escape(c.graph) +
                     "\n" + "author " + escape(c.author) + "\n" + "message " +
                     escape(c.message) + "\n" + "timestamp " + std::to_string(c.timestamp) + "\n";
  return meta + "add\n" + add + "remove\n" + remove;
}

std::string metaText(const Commit& c) {
  return "id " + c.id + "\n" + "parent " + c.parent.value_or("") + "\n" + "graph " +
         escape(c.graph) + "\n" + "author " + escape(c.author) + "\n" + "message " +
         escape(c.message) + "\n" + "timestamp " + std::to_string(c.timestamp) + "\n" +
         "added " + std::to_string(c.added) + "\n" + "removed " + std::to_string(c.removed) + "\n";
}

std::int64_t wallClock() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

}  // namespace

void ChangeSet::applyTo(rdf::Graph& state) const {
  for (const auto& t : removed.triples()) {
    if (!state.erase(t)) throw StoreError("changeset removes an absent triple: " + t.toNTriples());
  }
  for (const auto& t : added.triples()) {
    if (!state.insert(t)) throw StoreError("changeset adds a present triple: " + t.toNTriples());
  }
}

ChangeSet ChangeSet::inverse() const { return {graph, removed, added}; }

ChangeSet diffStates(const std::string& graph, const rdf::Graph& from, const rdf::Graph& to) {
  ChangeSet cs{graph, {}, {}};
  for (const auto& t : to.triples()) {
    if (!from.contains(t)) cs.added.insert(t);
  }
  for (const auto& t : from.triples()) {
    if (!to.contains(t)) cs.removed.insert(t);
  }
  return cs;
}

Store::Store(fs::path dir) : dir_(std::move(dir)), clock_(wallClock) {}

Store Store::open(const fs::path& dir) {
  std::error_code ec;
  if (fs::exists(dir, ec)) {
    if (!fs::is_directory(dir)) throw StoreError(dir.string() + " is not a directory");
    bool empty = fs::is_empty(dir);
    if (!empty && !fs::is_directory(dir / kCommits)) {
      throw StoreError(dir.string() + " is not a changeset store");
    }
  }
  fs::create_directories(dir / kCommits, ec);
  if (ec) throw StoreError("cannot create store at " + dir.string() + ": " + ec.message());
  return Store(dir);
}

std::optional<std::string> Store::head() const {
  if (!fs::exists(dir_ / kHead)) return std::nullopt;
  std::string id = readFile(dir_ / kHead);
  while (!id.empty() && (id.back() == '\n' || id.back() == '\r')) id.pop_back();
  if (id.empty()) return std::nullopt;
  return id;
}

std::string Store::resolve(const std::string& ref) const {
  if (ref.starts_with("HEAD")) {
    std::size_t back = 0;
    std::string rest = ref.substr(4);
    if (rest == "~") {
      back = 1;
    } else if (rest.size() > 1 && rest[0] == '~' &&
               rest.find_first_not_of("0123456789", 1) == std::string::npos) {
      back = std::stoul(rest.substr(1));
    } else if (!rest.empty()) {
      throw UnknownCommit(ref);
    }
    auto id = head();
    for (std::size_t i = 0; id && i < back; ++i) id = readMeta(*id).parent;
    if (!id) throw UnknownCommit(ref);
    return *id;
  }
  if (ref.size() < 4 || ref.find_first_not_of("0123456789abcdef") != std::string::npos) {
    throw UnknownCommit(ref);
  }
  std::vector<std::string> matches;
  for (const auto& entry : fs::directory_iterator(dir_ / kCommits)) {
    std::string name = entry.path().filename().string();
    if (name.find('.') == std::string::npos && name.starts_with(ref)) matches.push_back(name);
  }
  if (matches.size() != 1) {
    if (matches.size() > 1) throw StoreError("ambiguous commit prefix '" + ref + "'");
    throw UnknownCommit(ref);
  }
  return matches.front();
}

Commit Store::readMeta(const std::string& id) const {
  fs::path file = dir_ / kCommits / id / "meta";
  if (!fs::exists(file)) throw UnknownCommit(id);
  std::istringstream in(readFile(file));
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    auto space = line.find(' ');
    kv[line.substr(0, space)] = space == std::string::npos ? "" : line.substr(space + 1);
  }
  Commit c;
  try {
    c.id = kv.at("id");
    if (!kv.at("parent").empty()) c.parent = kv.at("parent");
    c.graph = unescape(kv.at("graph"));
    c.author = unescape(kv.at("author"));
    c.message = unescape(kv.at("message"));
    c.timestamp = std::stoll(kv.at("timestamp"));
    c.added = std::stoull(kv.at("added"));
    c.removed = std::stoull(kv.at("removed"));
  } catch (const std::exception&) {
    throw StoreError("corrupt metadata in " + file.string());
  }
  if (c.id != id) throw StoreError("metadata id mismatch in " + file.string());
  return c;
}

Commit Store::info(const std::string& ref) const { return readMeta(resolve(ref)); }

ChangeSet Store::changeset(const std::string& ref) const {
  std::string id = resolve(ref);
  Commit c = readMeta(id);
  fs::path d = dir_ / kCommits / id;
  return {c.graph, rdf::parseTurtleFile(d / "add.nt"), rdf::parseTurtleFile(d / "remove.nt")};
}

std::vector<std::string> Store::lineage(const std::string& id) const {
  std::vector<std::string> chain;
  std::optional<std::string> cur = id;
  while (cur) {
    chain.push_back(*cur);
    cur = readMeta(*cur).parent;
    if (chain.size() > 1000000) throw StoreError("cycle in commit history");
  }
  return {chain.rbegin(), chain.rend()};
}

std::vector<Commit> Store::log() const {
  std::vector<Commit> out;
  auto h = head();
  if (!h) return out;
  for (const auto& id : lineage(*h)) out.push_back(readMeta(id));
  return {out.rbegin(), out.rend()};
}

Snapshot Store::checkout(const std::string& ref) const {
  Snapshot state;
  for (const auto& id : lineage(resolve(ref))) {
    ChangeSet cs = changeset(id);
    rdf::Graph& g = state[cs.graph];
    cs.applyTo(g);
  }
  for (auto& [name, g] : state) g.setName(name);
  return state;
}

rdf::Graph Store::checkout(const std::string& ref, const std::string& graph) const {
  Snapshot all = checkout(ref);
  auto it = all.find(graph);
  if (it == all.end()) {
    rdf::Graph empty;
    empty.setName(graph);
    return empty;
  }
  return it->second;
}

std::vector<ChangeSet> Store::diff(const std::string& from, const std::string& to) const {
  Snapshot a = checkout(from);
  Snapshot b = checkout(to);
  std::set<std::string> names;
  for (const auto& [n, g] : a) names.insert(n);
  for (const auto& [n, g] : b) names.insert(n);
  std::vector<ChangeSet> out;
  for (const auto& n : names) {
    ChangeSet cs = diffStates(n, a.contains(n) ? a.at(n) : rdf::Graph(),
                              b.contains(n) ? b.at(n) : rdf::Graph());
    if (!cs.empty()) out.push_back(std::move(cs));
  }
  return out;
}

Commit Store::commit(const std::string& graph, const rdf::Graph& state, const std::string& author,
                     const std::string& message) {
  if (graph.empty()) throw StoreError("graph name must not be empty");
  auto parent = head();
  rdf::Graph current;
  if (parent) current = checkout(*parent, graph);
  ChangeSet cs = diffStates(graph, current, rdf::canonicalize(state));
  if (cs.empty()) throw EmptyChange(graph);

  Commit c;
  c.parent = parent;
  c.graph = graph;
  c.author = author;
  c.message = message;
  c.timestamp = clock_();
  c.added = cs.added.size();
  c.removed = cs.removed.size();
  const std::string add = rdf::serializeSorted(cs.added);
  const std::string remove = rdf::serializeSorted(cs.removed);
  c.id = util::sha256Hex(commitContent(c, add, remove));

  fs::path final = dir_ / kCommits / c.id;
  if (!fs::exists(final)) {
    std::random_device rd;
    fs::path tmp = dir_ / kCommits / (c.id + ".tmp" + std::to_string(rd()));
    fs::create_directories(tmp);
    try {
      writeFile(tmp / "add.nt", add);
      writeFile(tmp / "remove.nt", remove);
      writeFile(tmp / "meta", metaText(c));
      fs::rename(tmp, final);
    } catch (...) {
      std::error_code ec;
      fs::remove_all(tmp, ec);
      throw;
    }
  }
  fs::path headTmp = dir_ / "HEAD.tmp";
  writeFile(headTmp, c.id + "\n");
  fs::rename(headTmp, dir_ / kHead);
  return c;
}

void Store::verify() const {
  for (const auto& c : log()) {
    fs::path d = dir_ / kCommits / c.id;
    std::string expect =
        util::sha256Hex(commitContent(c, readFile(d / "add.nt"), readFile(d / "remove.nt")));
    if (expect != c.id) throw StoreError("commit " + c.id + " does not match its content");
  }
}

std::string formatLogEntry(const Commit& c) {
  std::time_t t = static_cast<std::time_t>(c.timestamp);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char when[32];
  std::strftime(when, sizeof when, "%Y-%m-%dT%H:%M:%SZ", &tm);
  std::string firstLine = c.message.substr(0, c.message.find('\n'));
  return c.id.substr(0, 12) + "  " + when + "  " + c.author + "  " + c.graph + "  +" +
         std::to_string(c.added) + " -" + std::to_string(c.removed) + "  " + firstLine;
}

}  // namespace pcpkg::versioning
