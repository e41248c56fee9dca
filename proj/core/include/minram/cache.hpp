#pragma once

#include <string>
#include <vector>

namespace minram {

// One line of the append-only JSON-lines result cache. params and payload
// hold canonical JSON text; every record can be re-verified by re-running
// the recorded kind with the recorded params and comparing payloads.
struct CacheRecord {
  std::string kind;     // schinzel | bms | ffield | nq | realize | frucht | galois | ramify
  std::string params;   // JSON text of the normalized inputs (seed included)
  std::string payload;  // JSON text of the result document
  std::string tool_version;
  std::string timestamp;  // ISO-8601 UTC, assigned on append
};

const char* tool_version_string();

// Resolves the cache location: explicit path if nonempty, else MINRAM_CACHE,
// else empty (caching disabled).
std::string resolve_cache_path(const std::string& explicit_path);

// Appends one record, filling tool_version and timestamp.
void append_cache_record(const std::string& path, CacheRecord record);

// Reads all records; malformed lines are reported with their line number.
std::vector<CacheRecord> read_cache_records(const std::string& path);

}  // namespace minram
