#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "pcpkg/enrich/Transport.h"

namespace pcpkg::enrich {

HttpResponse HttpTransport::get(const HttpRequest& request, std::chrono::milliseconds timeout) {
  // Split "scheme://host[:port]/path?query" into client origin and target.
  auto schemeEnd = request.url.find("://");
  if (schemeEnd == std::string::npos) throw TransportError("not an absolute URL: " + request.url);
  auto pathStart = request.url.find('/', schemeEnd + 3);
  std::string origin = request.url.substr(0, pathStart);
  std::string target = pathStart == std::string::npos ? "/" : request.url.substr(pathStart);

  httplib::Client client(origin);
  client.set_follow_location(true);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  httplib::Headers headers = {{"Accept", request.accept}, {"User-Agent", "pcpkg/0.1"}};

  auto result = client.Get(target, headers);
  if (!result) {
    auto err = result.error();
    if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read) {
      throw TransportTimeout(request.url + ": " + httplib::to_string(err));
    }
    throw TransportError(request.url + ": " + httplib::to_string(err));
  }
  return {result->status, result->body};
}

}  // namespace pcpkg::enrich
