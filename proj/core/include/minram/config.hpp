#pragma once

#include <map>
#include <string>

namespace minram {

// Flat key = value configuration. Keys mirror the long option names without
// the leading dashes (seed, t-max, p-max, strategy, output, require-proven,
// ...); values are the same strings the options accept. Options given on the
// command line win over config entries.
struct RunConfig {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) != 0; }
  const std::string& get(const std::string& key) const { return values.at(key); }
};

// Parses a config file: one key = value per line, '#' starts a comment,
// blank lines ignored, whitespace around keys and values trimmed. A line
// without '=' is a parse error naming the line number.
RunConfig load_run_config(const std::string& path);

}  // namespace minram
