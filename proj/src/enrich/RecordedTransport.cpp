#include <fstream>
#include <sstream>

#include "pcpkg/enrich/Transport.h"
#include "pcpkg/util/Sha256.h"

namespace pcpkg::enrich {

namespace {

constexpr const char* kIndex = "index.tsv";

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::map<std::string, std::pair<std::string, std::string>> readIndex(
    const std::filesystem::path& dir) {
  std::map<std::string, std::pair<std::string, std::string>> index;
  std::ifstream in(dir / kIndex);
  if (!in) return index;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line.front() == '#') continue;
    auto a = line.find('\t');
    auto b = a == std::string::npos ? a : line.find('\t', a + 1);
    if (b == std::string::npos) {
      throw std::runtime_error((dir / kIndex).string() + ":" + std::to_string(number) +
                               ": expected key<TAB>status<TAB>url");
    }
    index[line.substr(0, a)] = {line.substr(a + 1, b - a - 1), line.substr(b + 1)};
  }
  return index;
}

}  // namespace

std::string recordingKey(const HttpRequest& request) {
  return util::sha256Hex(request.url + "\n" + request.accept);
}

RecordedTransport::RecordedTransport(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!std::filesystem::is_regular_file(dir_ / kIndex)) {
    throw std::runtime_error("no recording index at " + (dir_ / kIndex).string());
  }
  for (auto& [key, entry] : readIndex(dir_)) {
    index_[key] = {entry.first, entry.second};
  }
}

HttpResponse RecordedTransport::get(const HttpRequest& request, std::chrono::milliseconds) {
  log_.push_back(request);
  auto it = index_.find(recordingKey(request));
  if (it == index_.end()) return {404, ""};
  if (it->second.status == "timeout") {
    throw TransportTimeout("recorded timeout for " + request.url);
  }
  int status = 0;
  try {
    status = std::stoi(it->second.status);
  } catch (const std::exception&) {
    throw std::runtime_error("bad recorded status '" + it->second.status + "'");
  }
  auto body = dir_ / (it->first + ".body");
  return {status, std::filesystem::exists(body) ? slurp(body) : std::string()};
}

RecordingTransport::RecordingTransport(Transport& inner, std::filesystem::path dir)
    : inner_(inner), dir_(std::move(dir)) {}

HttpResponse RecordingTransport::get(const HttpRequest& request,
                                     std::chrono::milliseconds timeout) {
  try {
    HttpResponse r = inner_.get(request, timeout);
    record(dir_, request, std::to_string(r.status), r.body);
    return r;
  } catch (const TransportTimeout&) {
    record(dir_, request, "timeout", "");
    throw;
  }
}

void RecordingTransport::record(const std::filesystem::path& dir, const HttpRequest& request,
                                const std::string& status, const std::string& body) {
  std::filesystem::create_directories(dir);
  const std::string key = recordingKey(request);
  {
    std::ofstream out(dir / (key + ".body"), std::ios::binary | std::ios::trunc);
    out << body;
  }
  auto index = readIndex(dir);
  index[key] = {status, request.url};
  std::ofstream out(dir / kIndex, std::ios::trunc);
  for (const auto& [k, entry] : index) {
    out << k << '\t' << entry.first << '\t' << entry.second << '\n';
  }
}

}  // namespace pcpkg::enrich
