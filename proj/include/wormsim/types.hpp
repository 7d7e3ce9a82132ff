#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace wsn {

/// Node identity. Strongly typed so it cannot be mixed up with hop counts or request ids.
enum class NodeId : std::uint32_t {};

constexpr std::uint32_t raw(NodeId n) noexcept { return static_cast<std::uint32_t>(n); }
constexpr NodeId node(std::uint32_t v) noexcept { return static_cast<NodeId>(v); }

inline std::ostream& operator<<(std::ostream& os, NodeId n) { return os << raw(n); }

using NodeSet = std::set<NodeId>;

/// Abstract simulation time units.
using SimTime = double;

/// Identifies one route discovery: the datum RREP forward logs and probes are keyed on.
struct DiscoveryKey {
  NodeId source{};
  NodeId destination{};
  std::uint32_t request_id = 0;

  friend auto operator<=>(const DiscoveryKey&, const DiscoveryKey&) = default;
};

class SetupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LookupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wsn
