#include "p1cert/data/data_files.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <openssl/sha.h>

namespace p1cert::data {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("P1CERT_DATA_DIR"); env && *env) return env;
  return P1CERT_DEFAULT_DATA_DIR;
}

std::filesystem::path default_tables_path() { return data_dir() / kTablesFile; }
std::filesystem::path default_partitions_path() { return data_dir() / kPartitionsFile; }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open data file " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), digest);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned char c : digest) {
    out += hex[c >> 4];
    out += hex[c & 15];
  }
  return out;
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    Line line{n, {}};
    for (std::string f; ls >> f;) line.fields.push_back(f);
    if (!line.fields.empty()) out.push_back(std::move(line));
  }
  return out;
}

}  // namespace p1cert::data
