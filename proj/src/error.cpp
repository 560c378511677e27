#include "surfq/error.hpp"

#include <utility>

namespace surfq {

ShapeSyntaxError::ShapeSyntaxError(std::size_t offset, std::vector<std::string> expected,
                                   const std::string& what)
    : Error(what), offset_(offset), expected_(std::move(expected)) {}

UnknownIdentifierError::UnknownIdentifierError(std::size_t offset, std::string name)
    : Error("unknown identifier '" + name + "' at offset " + std::to_string(offset)),
      offset_(offset),
      name_(std::move(name)) {}

ShapeDomainError::ShapeDomainError(std::string subexpression, const std::string& what)
    : DomainError(what), subexpression_(std::move(subexpression)) {}

}  // namespace surfq
