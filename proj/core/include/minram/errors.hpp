#pragma once

#include <stdexcept>
#include <string>

namespace minram {

// Error taxonomy mirrored by the CLI exit codes: input/precondition problems
// exit 1, exhausted searches exit 2, failed internal re-verification exit 3.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

class input_error : public error {
public:
  explicit input_error(const std::string& what) : error(what) {}
};

// Parse failures carry the byte offset of the first offending character.
class parse_error : public input_error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : input_error(what + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

class resource_error : public error {
public:
  explicit resource_error(const std::string& what) : error(what) {}
};

// A bounded search ran out of candidates; carries scan diagnostics in what().
class not_found_error : public error {
public:
  explicit not_found_error(const std::string& what) : error(what) {}
};

class verification_error : public error {
public:
  explicit verification_error(const std::string& what) : error(what) {}
};

}  // namespace minram
