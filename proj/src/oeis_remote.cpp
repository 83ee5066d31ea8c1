#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include <sstream>

#include "htdet/verify.hpp"

namespace htdet::verify {

BFile fetch_remote_bfile(sequences::SequenceId id) {
    const auto a = sequences::oeis_number(id);
    if (!a) throw std::runtime_error(std::string(sequences::sequence_name(id)) + " has no OEIS entry");
    const std::string path = "/" + std::string(*a) + "/b" + std::string(a->substr(1)) + ".txt";

    httplib::Client client("https://oeis.org");
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(path);
    if (!res) throw std::runtime_error("fetch " + path + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200) throw std::runtime_error("fetch " + path + " returned HTTP " + std::to_string(res->status));
    std::istringstream body(res->body);
    return parse_bfile(body);
}

}  // namespace htdet::verify
