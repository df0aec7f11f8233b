#ifndef P1CERT_DATA_DATA_FILES_HPP
#define P1CERT_DATA_DATA_FILES_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace p1cert::data {

inline constexpr const char* kTablesFile = "appendix_tables.v1.txt";
inline constexpr const char* kPartitionsFile = "partitions.v1.txt";

// P1CERT_DATA_DIR if set, else the directory configured at build time.
std::filesystem::path data_dir();
std::filesystem::path default_tables_path();
std::filesystem::path default_partitions_path();

std::string read_file(const std::filesystem::path& p);
std::string sha256_hex(std::string_view bytes);

// A non-comment line split on whitespace, with its 1-based line number.
struct Line {
  int number = 0;
  std::vector<std::string> fields;
};
// Drops blank lines and everything after '#'.
std::vector<Line> tokenize(std::string_view text);

}  // namespace p1cert::data

#endif
