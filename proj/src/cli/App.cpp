#include "pcpkg/cli/App.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "pcpkg/enrich/Extractor.h"
#include "pcpkg/enrich/Transport.h"
#include "pcpkg/fusion/Alignment.h"
#include "pcpkg/fusion/Lint.h"
#include "pcpkg/fusion/Vocabulary.h"
#include "pcpkg/linkdisc/LinkDiscovery.h"
#include "pcpkg/rdf/NTriples.h"
#include "pcpkg/rdf/Turtle.h"
#include "pcpkg/sparql/Evaluator.h"
#include "pcpkg/sparql/QueryParser.h"
#include "pcpkg/sparql/ResultTable.h"
#include "pcpkg/versioning/Store.h"

namespace pcpkg::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kDefaultPrefixes = "data/prefixes.ttl";

// Bad input paths or config files. Reported with exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A condition that is not an error but still fails the command (exit 1).
class DomainFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> graphs;
  std::string query;
  std::string config;
  std::string out;
  std::string store;
  std::string prefixes = kDefaultPrefixes;
  bool prefixesGiven = false;
  std::string endpoint;
  std::optional<long> delay;
  std::optional<long> timeout;
  std::optional<int> retries;
  bool strict = false;
  std::string format = "table";

  // fuse / align
  std::string sourceNs;
  std::string targetNs = fusion::kPcpOntology;
  std::string mapping;
  std::vector<std::string> reference;

  // link
  std::string left;
  std::string right;
  std::string sameAs;

  // enrich
  std::vector<std::string> gnds;
  std::string gndProperty;
  std::string replay;
  std::string record;

  // versioning
  std::string graphName;
  std::string author;
  std::string message;
  std::string refA;
  std::string refB;

  // lint
  std::vector<std::string> languages = {"de", "en"};
};

void requireFile(const std::string& path, const std::string& flag) {
  if (path.empty()) throw UsageError(flag + " is required");
  if (!fs::is_regular_file(path)) throw UsageError(flag + ": no such file: " + path);
}

rdf::Graph loadGraph(const std::string& path, const std::string& flag) {
  requireFile(path, flag);
  rdf::Graph g = rdf::parseTurtleFile(path);
  g.setName(path);
  return g;
}

std::vector<rdf::Graph> loadGraphs(const std::vector<std::string>& paths, const std::string& flag) {
  if (paths.empty()) throw UsageError(flag + " is required");
  std::vector<rdf::Graph> out;
  for (const auto& p : paths) out.push_back(loadGraph(p, flag));
  return out;
}

rdf::PrefixMap loadPrefixes(const Options& o) {
  if (!fs::exists(o.prefixes)) {
    if (o.prefixesGiven) throw UsageError("--prefixes: no such file: " + o.prefixes);
    return {};
  }
  return rdf::parseTurtleFile(o.prefixes).prefixes();
}

void writeText(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::string expandIri(const std::string& text, const rdf::PrefixMap& prefixes) {
  if (text.size() > 2 && text.front() == '<' && text.back() == '>') {
    return text.substr(1, text.size() - 2);
  }
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    auto it = prefixes.find(text.substr(0, colon));
    if (it != prefixes.end()) return it->second + text.substr(colon + 1);
  }
  if (!rdf::isAbsoluteIri(text)) throw UsageError("not an IRI or known prefixed name: " + text);
  return text;
}

// Rows of cells rendered as an aligned table or as CSV.
std::string renderRows(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows, const std::string& format) {
  std::string out;
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out += (i ? "," : "") + sparql::csvField(cells[i]);
      }
      out += "\r\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
  }
  std::vector<std::size_t> width;
  for (const auto& h : header) width.push_back(h.size());
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::string cell = cells[i];
      cell.resize(std::max(cell.size(), width[i]), ' ');
      text += (i ? "  " : "") + cell;
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out += text + "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

int cmdFuse(const Options& o, std::ostream& out) {
  auto graphs = loadGraphs(o.graphs, "--graphs");
  if (o.out.empty()) throw UsageError("--out is required");
  rdf::Graph merged = rdf::unionOf(graphs);
  rdf::writeCanonical(merged, o.out);

  std::vector<std::vector<std::string>> rows;
  for (const auto& s : fusion::vocabularyStatistics(graphs)) {
    rows.push_back({s.name, std::to_string(s.properties), std::to_string(s.classes)});
  }
  out << renderRows({"graph", "properties", "classes"}, rows, o.format);
  if (graphs.size() == 2) {
    auto a = fusion::extractVocabulary(graphs[0]);
    auto b = fusion::extractVocabulary(graphs[1]);
    std::vector<std::vector<std::string>> overlap;
    auto add = [&](const std::string& what, const fusion::OverlapStats& s) {
      overlap.push_back({what, std::to_string(s.joint), std::to_string(s.disjointA),
                         std::to_string(s.disjointB), std::to_string(s.unionA),
                         std::to_string(s.unionB)});
    };
    add("properties", fusion::computeOverlap(a.properties, b.properties));
    add("classes", fusion::computeOverlap(a.classes, b.classes));
    out << "\n"
        << renderRows({"vocabulary", "joint", "disjoint-a", "disjoint-b", "union-a", "union-b"},
                      overlap, o.format);
  }
  out << "\nwrote " << merged.size() << " triples to " << o.out << "\n";
  return kExitOk;
}

int cmdAlign(const Options& o, std::ostream& out) {
  auto graphs = loadGraphs(o.graphs, "--graphs");
  if (o.out.empty()) throw UsageError("--out is required");
  if (o.sourceNs.empty()) throw UsageError("--source-ns is required");
  std::map<std::string, std::string> renames;
  if (!o.mapping.empty()) {
    requireFile(o.mapping, "--mapping");
    try {
      renames = fusion::loadRenames(o.mapping);
    } catch (const fusion::MappingFileError& e) {
      throw UsageError(std::string("--mapping: ") + e.what());
    }
  }
  std::optional<fusion::Vocabulary> reference;
  if (!o.reference.empty()) {
    auto refs = loadGraphs(o.reference, "--reference");
    reference = fusion::extractVocabulary(rdf::unionOf(refs));
  }
  rdf::Graph source = rdf::unionOf(graphs);
  auto mapping = fusion::buildMapping(source, o.sourceNs, o.targetNs, renames, reference);
  rdf::Graph shifted = fusion::shiftNamespace(source, mapping);
  rdf::writeCanonical(shifted, o.out);

  out << "shifted " << mapping.autoShifted.size() << " terms, renamed " << mapping.renames.size()
      << " into " << mapping.targetNamespace << "\n";
  if (reference) {
    const auto& s = mapping.stats;
    out << renderRows({"joint", "disjoint-source", "disjoint-reference", "union-source",
                       "union-reference"},
                      {{std::to_string(s.joint), std::to_string(s.disjointA),
                        std::to_string(s.disjointB), std::to_string(s.unionA),
                        std::to_string(s.unionB)}},
                      o.format);
  }
  out << "wrote " << shifted.size() << " triples to " << o.out << "\n";
  return kExitOk;
}

int cmdLink(const Options& o, std::ostream& out) {
  rdf::Graph left = loadGraph(o.left, "--left");
  rdf::Graph right = loadGraph(o.right, "--right");
  requireFile(o.config, "--config");
  if (o.out.empty()) throw UsageError("--out is required");
  linkdisc::LinkConfig cfg;
  try {
    cfg = linkdisc::loadLinkConfig(o.config, loadPrefixes(o));
  } catch (const linkdisc::ConfigError& e) {
    throw UsageError(std::string("--config: ") + e.what());
  }
  auto candidates = linkdisc::findLinks(left, right, cfg);
  writeText(o.out, linkdisc::renderReviewCsv(candidates));
  rdf::Graph links = linkdisc::sameAsGraph(candidates);
  if (!o.sameAs.empty()) rdf::writeCanonical(links, o.sameAs);

  std::size_t review = 0;
  for (const auto& c : candidates) review += c.status == linkdisc::LinkStatus::Review;
  out << candidates.size() << " candidates: " << links.size() << " accepted (>= "
      << linkdisc::formatScore(cfg.acceptThreshold) << "), " << review << " for review (>= "
      << linkdisc::formatScore(cfg.reviewThreshold) << ")\n";
  return kExitOk;
}

int cmdEnrich(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.endpoint.empty()) throw UsageError("--endpoint is required");
  if (o.out.empty()) throw UsageError("--out is required");
  if (!o.replay.empty() && !o.record.empty()) {
    throw UsageError("--replay and --record are mutually exclusive");
  }
  rdf::PrefixMap prefixes = loadPrefixes(o);

  enrich::EndpointSpec spec;
  try {
    if (!o.config.empty()) {
      requireFile(o.config, "--config");
      auto specs = enrich::loadEndpointConfig(o.config);
      auto it = specs.find(o.endpoint);
      if (it == specs.end()) throw UsageError("--endpoint: '" + o.endpoint + "' not in " + o.config);
      spec = it->second;
    } else {
      spec = enrich::builtinEndpoint(o.endpoint);
    }
    if (o.delay) spec.delay = std::chrono::milliseconds(*o.delay);
    if (o.timeout) spec.timeout = std::chrono::milliseconds(*o.timeout);
    if (o.retries) spec.maxRetries = *o.retries;
    spec.validate();
  } catch (const enrich::EndpointError& e) {
    throw UsageError(e.what());
  }

  std::vector<enrich::GndId> ids;
  std::set<enrich::GndId> seen;
  auto addGnd = [&](const std::string& value) {
    enrich::GndId id = enrich::normalizeGnd(value);
    if (seen.insert(id).second) ids.push_back(id);
  };
  try {
    for (const auto& g : o.gnds) addGnd(g);
  } catch (const enrich::GndError& e) {
    throw UsageError(std::string("--gnds: ") + e.what());
  }

  rdf::Graph local;
  std::string gndProperty;
  if (!o.graphs.empty()) {
    if (o.gndProperty.empty()) throw UsageError("--gnd-property is required with --graphs");
    local = rdf::unionOf(loadGraphs(o.graphs, "--graphs"));
    gndProperty = expandIri(o.gndProperty, prefixes);
    for (const auto& t : local.match(std::nullopt, rdf::Term::iri(gndProperty), std::nullopt)) {
      try {
        addGnd(t.object.value());
      } catch (const enrich::GndError&) {
        // emitSameAs reports these below.
      }
    }
  }
  if (ids.empty()) throw UsageError("no GND identifiers given (use --gnds or --graphs)");

  std::unique_ptr<enrich::Transport> transport;
  std::unique_ptr<enrich::Transport> live;
  enrich::Sleeper sleep = enrich::realSleep;
  if (!o.replay.empty()) {
    if (!fs::is_directory(o.replay)) throw UsageError("--replay: no such directory: " + o.replay);
    transport = std::make_unique<enrich::RecordedTransport>(o.replay);
    sleep = [](std::chrono::milliseconds) {};
  } else {
    live = std::make_unique<enrich::HttpTransport>();
    if (!o.record.empty()) {
      fs::create_directories(o.record);
      transport = std::make_unique<enrich::RecordingTransport>(*live, o.record);
    } else {
      transport = std::move(live);
    }
  }

  auto result = enrich::lazyExtract(ids, spec, *transport, sleep);
  rdf::Graph output = result.graph;
  if (!o.graphs.empty()) {
    auto links = enrich::emitSameAs(local, gndProperty, enrich::externalSubjects(result.report));
    for (const auto& w : links.warnings) err << "warning: " << w << "\n";
    output.merge(links.triples);
  }
  rdf::writeCanonical(output, o.out);

  std::vector<std::vector<std::string>> rows;
  for (const auto& item : result.report.items) {
    rows.push_back({item.gnd.number(), std::string(enrich::itemStatusName(item.status)),
                    item.failure ? std::string(enrich::failureKindName(*item.failure)) : "",
                    std::to_string(item.triples), std::to_string(item.attempts), item.message});
  }
  out << renderRows({"gnd", "status", "failure", "triples", "attempts", "message"}, rows,
                    o.format);
  out << "wrote " << output.size() << " triples to " << o.out << "\n";
  return kExitOk;
}

int cmdQuery(const Options& o, std::ostream& out) {
  auto graphs = loadGraphs(o.graphs, "--graphs");
  requireFile(o.query, "--query");
  std::ifstream in(o.query, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  rdf::PrefixMap prefixes = loadPrefixes(o);
  sparql::Query q = sparql::parseQuery(text.str(), prefixes);
  sparql::ResultTable table = sparql::evaluate(q, graphs);
  for (const auto& [p, ns] : q.prefixes) prefixes[p] = ns;
  std::string rendered =
      o.format == "csv" ? sparql::renderCsv(table) : sparql::renderText(table, prefixes);
  if (o.out.empty()) {
    out << rendered;
  } else {
    writeText(o.out, rendered);
    out << table.rows.size() << " rows written to " << o.out << "\n";
  }
  return kExitOk;
}

versioning::Store openStore(const Options& o) {
  if (o.store.empty()) throw UsageError("--store is required");
  try {
    versioning::Store s = versioning::Store::open(o.store);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
      std::int64_t t = std::strtoll(epoch, nullptr, 10);
      s.setClock([t] { return t; });
    }
    return s;
  } catch (const versioning::StoreError& e) {
    throw UsageError(std::string("--store: ") + e.what());
  }
}

int cmdCommit(const Options& o, std::ostream& out) {
  auto graphs = loadGraphs(o.graphs, "--graphs");
  if (o.graphName.empty()) throw UsageError("--graph is required");
  if (o.message.empty()) throw UsageError("--message is required");
  versioning::Store store = openStore(o);
  std::string author = o.author;
  if (author.empty()) {
    const char* user = std::getenv("USER");
    author = user && *user ? user : "pcpkg";
  }
  try {
    auto c = store.commit(o.graphName, rdf::unionOf(graphs), author, o.message);
    out << c.id << "  " << c.graph << "  +" << c.added << " -" << c.removed << "\n";
  } catch (const versioning::EmptyChange& e) {
    throw DomainFailure(e.what());
  }
  return kExitOk;
}

int cmdLog(const Options& o, std::ostream& out) {
  versioning::Store store = openStore(o);
  auto log = store.log();
  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : log) {
      rows.push_back({c.id, c.parent.value_or(""), c.graph, c.author, std::to_string(c.timestamp),
                      std::to_string(c.added), std::to_string(c.removed), c.message});
    }
    out << renderRows({"id", "parent", "graph", "author", "timestamp", "added", "removed",
                       "message"},
                      rows, "csv");
  } else {
    for (const auto& c : log) out << versioning::formatLogEntry(c) << "\n";
  }
  return kExitOk;
}

int cmdDiff(const Options& o, std::ostream& out) {
  versioning::Store store = openStore(o);
  std::string text;
  std::size_t changes = 0;
  for (const auto& cs : store.diff(store.resolve(o.refA), store.resolve(o.refB))) {
    if (!o.graphName.empty() && cs.graph != o.graphName) continue;
    text += "@@ " + cs.graph + " +" + std::to_string(cs.added.size()) + " -" +
            std::to_string(cs.removed.size()) + "\n";
    std::istringstream removed(rdf::serializeSorted(cs.removed));
    std::istringstream added(rdf::serializeSorted(cs.added));
    for (std::string line; std::getline(removed, line);) text += "- " + line + "\n";
    for (std::string line; std::getline(added, line);) text += "+ " + line + "\n";
    changes += cs.added.size() + cs.removed.size();
  }
  if (o.out.empty()) {
    out << text;
  } else {
    writeText(o.out, text);
  }
  if (changes == 0) throw DomainFailure("no differences between " + o.refA + " and " + o.refB);
  return kExitOk;
}

int cmdCheckout(const Options& o, std::ostream& out) {
  if (o.out.empty()) throw UsageError("--out is required");
  versioning::Store store = openStore(o);
  std::string id = store.resolve(o.refA);
  versioning::Snapshot snapshot = store.checkout(id);
  std::string name = o.graphName;
  if (name.empty()) {
    if (snapshot.size() != 1) {
      std::string names;
      for (const auto& [n, g] : snapshot) names += (names.empty() ? "" : ", ") + n;
      throw UsageError("--graph is required; commit " + id.substr(0, 12) + " has graphs: " + names);
    }
    name = snapshot.begin()->first;
  }
  auto it = snapshot.find(name);
  rdf::Graph g = it == snapshot.end() ? rdf::Graph() : it->second;
  writeText(o.out, rdf::serializeSorted(g));
  out << "checked out " << name << " at " << id.substr(0, 12) << ": " << g.size()
      << " triples to " << o.out << "\n";
  return kExitOk;
}

int cmdLint(const Options& o, std::ostream& out) {
  auto graphs = loadGraphs(o.graphs, "--graphs");
  auto issues = fusion::lintVocabulary(rdf::unionOf(graphs), o.languages);
  if (!o.out.empty()) writeText(o.out, fusion::renderLintCsv(issues));
  if (o.format == "csv") {
    out << fusion::renderLintCsv(issues);
  } else {
    rdf::PrefixMap prefixes = loadPrefixes(o);
    std::vector<std::vector<std::string>> rows;
    for (const auto& i : issues) {
      rows.push_back({rdf::compactIri(i.subject, prefixes), std::string(fusion::lintKindName(i.kind)),
                      i.detail, i.suggestedFix.value_or("")});
    }
    out << renderRows({"subject", "kind", "detail", "suggested-fix"}, rows, "table");
    out << issues.size() << (issues.size() == 1 ? " issue\n" : " issues\n");
  }
  if (o.strict && !issues.empty()) {
    throw DomainFailure(std::to_string(issues.size()) + " lint findings (--strict)");
  }
  return kExitOk;
}

void addFormat(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format for standard output")
      ->check(CLI::IsMember({"table", "csv"}))
      ->capture_default_str();
}

void addPrefixes(CLI::App* sub, Options& o) {
  sub->add_option_function<std::string>(
         "--prefixes",
         [&o](const std::string& p) {
           o.prefixes = p;
           o.prefixesGiven = true;
         },
         "Turtle file whose @prefix declarations are used as defaults")
      ->default_str(kDefaultPrefixes);
}

void addGraphs(CLI::App* sub, Options& o, const std::string& what) {
  sub->add_option("--graphs", o.graphs, what)->delimiter(',');
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Build, link, enrich, version and query prosopographical knowledge graphs",
               "pcpkg"};
  app.require_subcommand(1);
  app.fallthrough(false);

  auto* fuse = app.add_subcommand("fuse", "Merge graphs and report vocabulary statistics");
  addGraphs(fuse, o, "Comma-separated input graphs (Turtle or N-Triples)");
  fuse->add_option("--out", o.out, "Merged graph as canonical N-Triples");
  addFormat(fuse, o);

  auto* align = app.add_subcommand("align", "Shift a vocabulary namespace into the pcp ontology");
  addGraphs(align, o, "Comma-separated graphs to align");
  align->add_option("--source-ns", o.sourceNs, "Namespace of the source vocabulary");
  align->add_option("--target-ns", o.targetNs, "Target namespace")->capture_default_str();
  align->add_option("--mapping", o.mapping, "Rename file: old<TAB>new local names");
  align->add_option("--reference", o.reference, "Comma-separated graphs to compare vocabularies with")
      ->delimiter(',');
  align->add_option("--out", o.out, "Aligned graph as canonical N-Triples");
  addFormat(align, o);

  auto* link = app.add_subcommand("link", "Score same-person candidates between two graphs");
  link->add_option("--config", o.config, "Link configuration (INI)");
  link->add_option("--left", o.left, "Source graph");
  link->add_option("--right", o.right, "Target graph");
  link->add_option("--out", o.out, "Review report (CSV)");
  link->add_option("--sameas", o.sameAs, "owl:sameAs links for accepted candidates (N-Triples)");
  addPrefixes(link, o);

  auto* enrichCmd = app.add_subcommand("enrich", "Fetch external data for GND identifiers");
  enrichCmd->add_option("--endpoint", o.endpoint, "Endpoint name (dnb, wikidata, dbpedia or a --config section)");
  enrichCmd->add_option("--config", o.config, "Endpoint configuration (INI)");
  addGraphs(enrichCmd, o, "Comma-separated local graphs holding GND values");
  enrichCmd->add_option("--gnd-property", o.gndProperty, "Property carrying GND values in --graphs");
  enrichCmd->add_option("--gnds", o.gnds, "Comma-separated GND numbers or URLs")->delimiter(',');
  enrichCmd->add_option("--delay", o.delay, "Milliseconds between requests");
  enrichCmd->add_option("--timeout", o.timeout, "Request timeout in milliseconds");
  enrichCmd->add_option("--retries", o.retries, "Retries after a timeout or server error");
  enrichCmd->add_option("--replay", o.replay, "Answer requests from a recording directory");
  enrichCmd->add_option("--record", o.record, "Record live responses into a directory");
  enrichCmd->add_option("--out", o.out, "Extracted triples and sameAs links (N-Triples)");
  addPrefixes(enrichCmd, o);
  addFormat(enrichCmd, o);

  auto* query = app.add_subcommand("query", "Evaluate a SPARQL query over the union of graphs");
  addGraphs(query, o, "Comma-separated graphs to query");
  query->add_option("--query", o.query, "File holding the query text");
  query->add_option("--out", o.out, "Write the result here instead of standard output");
  addPrefixes(query, o);
  addFormat(query, o);

  auto* commit = app.add_subcommand("commit", "Record a new state of a named graph");
  commit->add_option("--store", o.store, "Store directory");
  commit->add_option("--graph", o.graphName, "Name of the graph in the store");
  addGraphs(commit, o, "Comma-separated files forming the new state");
  commit->add_option("--author", o.author, "Author (default: $USER)");
  commit->add_option("-m,--message", o.message, "Commit message");

  auto* log = app.add_subcommand("log", "List commits, newest first");
  log->add_option("--store", o.store, "Store directory");
  addFormat(log, o);

  auto* diff = app.add_subcommand("diff", "Show triples changed between two commits");
  diff->add_option("a", o.refA, "Older commit (id, prefix or HEAD)")->required();
  diff->add_option("b", o.refB, "Newer commit (id, prefix or HEAD)")->required();
  diff->add_option("--store", o.store, "Store directory");
  diff->add_option("--graph", o.graphName, "Only this graph");
  diff->add_option("--out", o.out, "Write the diff here instead of standard output");

  auto* checkout = app.add_subcommand("checkout", "Write a graph as it was at a commit");
  checkout->add_option("id", o.refA, "Commit (id, prefix or HEAD)")->required();
  checkout->add_option("--store", o.store, "Store directory");
  checkout->add_option("--graph", o.graphName, "Graph to write (optional if the store has one)");
  checkout->add_option("-o,--out", o.out, "Output file (N-Triples)");

  auto* lint = app.add_subcommand("lint", "Check vocabulary labels, descriptions and naming");
  addGraphs(lint, o, "Comma-separated vocabulary graphs");
  lint->add_option("--languages", o.languages, "Required label languages")
      ->delimiter(',')
      ->capture_default_str();
  lint->add_option("--out", o.out, "Lint report (CSV)");
  lint->add_flag("--strict", o.strict, "Exit with status 1 when there are findings");
  addPrefixes(lint, o);
  addFormat(lint, o);

  if (!args.empty() && !args.front().starts_with("-")) {
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known |= sub->get_name() == args.front();
    if (!known) {
      err << "pcpkg: unknown subcommand '" << args.front() << "'\n\n" << app.help();
      return kExitUsage;
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "pcpkg: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    if (name == "fuse") return cmdFuse(o, out);
    if (name == "align") return cmdAlign(o, out);
    if (name == "link") return cmdLink(o, out);
    if (name == "enrich") return cmdEnrich(o, out, err);
    if (name == "query") return cmdQuery(o, out);
    if (name == "commit") return cmdCommit(o, out);
    if (name == "log") return cmdLog(o, out);
    if (name == "diff") return cmdDiff(o, out);
    if (name == "checkout") return cmdCheckout(o, out);
    if (name == "lint") return cmdLint(o, out);
  } catch (const UsageError& e) {
    err << "pcpkg " << name << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainFailure& e) {
    err << "pcpkg " << name << ": " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "pcpkg " << name << ": error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace pcpkg::cli
