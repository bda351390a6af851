#pragma once

#include <stdexcept>
#include <string>

namespace bv {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

}  // namespace bv
