#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcpkg/enrich/Endpoint.h"

namespace pcpkg::enrich {

struct HttpResponse {
  int status = 0;
  std::string body;
};

class TransportTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Connection-level failure other than a timeout.
class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Transport {
 public:
  virtual ~Transport() = default;
  // Returns any HTTP response, including error statuses; throws
  // TransportTimeout or TransportError when no response arrives.
  virtual HttpResponse get(const HttpRequest& request, std::chrono::milliseconds timeout) = 0;
};

// Name of the recording for `request`: SHA-256 of url + "\n" + accept.
std::string recordingKey(const HttpRequest& request);

// Replays responses from a directory holding index.tsv and one
// <key>.body file per entry. Index lines are `key<TAB>status<TAB>url`;
// status "timeout" makes get() throw TransportTimeout. Requests without a
// recording get a 404. Every call is logged in order.
class RecordedTransport : public Transport {
 public:
  explicit RecordedTransport(std::filesystem::path dir);

  HttpResponse get(const HttpRequest& request, std::chrono::milliseconds timeout) override;

  const std::vector<HttpRequest>& requests() const { return log_; }

 private:
  struct Entry {
    std::string status;
    std::string url;
  };
  std::filesystem::path dir_;
  std::map<std::string, Entry> index_;
  std::vector<HttpRequest> log_;
};

// Passes requests to `inner` and appends each exchange to a recording
// directory readable by RecordedTransport. Timeouts are recorded as well.
class RecordingTransport : public Transport {
 public:
  RecordingTransport(Transport& inner, std::filesystem::path dir);

  HttpResponse get(const HttpRequest& request, std::chrono::milliseconds timeout) override;

  // Writes one entry directly, replacing an earlier one for the same request.
  static void record(const std::filesystem::path& dir, const HttpRequest& request,
                     const std::string& status, const std::string& body);

 private:
  Transport& inner_;
  std::filesystem::path dir_;
};

// Live HTTP(S) client. Follows redirects and sends a User-Agent.
class HttpTransport : public Transport {
 public:
  HttpResponse get(const HttpRequest& request, std::chrono::milliseconds timeout) override;
};

}  // namespace pcpkg::enrich
