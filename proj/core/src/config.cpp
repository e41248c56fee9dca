#include "minram/config.hpp"

#include <fstream>

#include "minram/errors.hpp"

namespace minram {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    std::size_t eq = body.find('=');
    if (eq == std::string::npos)
      throw parse_error(path + " line " + std::to_string(lineno) +
                            ": expected key = value",
                        static_cast<std::size_t>(lineno));
    std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    if (key.empty())
      throw parse_error(path + " line " + std::to_string(lineno) + ": empty key",
                        static_cast<std::size_t>(lineno));
    cfg.values[key] = value;
  }
  return cfg;
}

}  // namespace minram
