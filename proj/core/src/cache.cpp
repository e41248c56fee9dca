#include "minram/cache.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>

#include "json.hpp"
#include "minram/errors.hpp"

namespace minram {

using Json = nlohmann::ordered_json;

const char* tool_version_string() { return "minram 0.1.0"; }

std::string resolve_cache_path(const std::string& explicit_path) {
  if (!explicit_path.empty()) return explicit_path;
  const char* env = std::getenv("MINRAM_CACHE");
  return env ? env : "";
}

namespace {

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

void append_cache_record(const std::string& path, CacheRecord record) {
  record.tool_version = tool_version_string();
  record.timestamp = utc_timestamp();
  Json line;
  line["v"] = 1;
  line["kind"] = record.kind;
  line["params"] = Json::parse(record.params);
  line["payload"] = Json::parse(record.payload);
  line["tool_version"] = record.tool_version;
  line["timestamp"] = record.timestamp;
  std::ofstream out(path, std::ios::app);
  if (!out) throw input_error("cannot open cache file for append: " + path);
  out << line.dump() << '\n';
  if (!out) throw input_error("failed writing cache file: " + path);
}

std::vector<CacheRecord> read_cache_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open cache file: " + path);
  std::vector<CacheRecord> records;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json doc;
    try {
      doc = Json::parse(line);
    } catch (const std::exception& e) {
      throw parse_error(path + " line " + std::to_string(lineno) + ": " + e.what(),
                        static_cast<std::size_t>(lineno));
    }
    CacheRecord rec;
    try {
      rec.kind = doc.at("kind").get<std::string>();
      rec.params = doc.at("params").dump();
      rec.payload = doc.at("payload").dump();
      rec.tool_version = doc.value("tool_version", "");
      rec.timestamp = doc.value("timestamp", "");
    } catch (const std::exception& e) {
      throw parse_error(path + " line " + std::to_string(lineno) +
                            ": missing record field: " + e.what(),
                        static_cast<std::size_t>(lineno));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace minram
