#pragma once

#include <stdexcept>
#include <string>

namespace kpsumm {

// Problems with user-supplied input (bad cluster layout, unreadable
// files, malformed manifests). The CLI maps these to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Requests that are well-formed but outside an operation's domain
// (MMR without a query, ROUGE against too-short references).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Non-fatal diagnostics (skipped empty documents, dropped columns).
void warn(const std::string& message);

}  // namespace kpsumm
