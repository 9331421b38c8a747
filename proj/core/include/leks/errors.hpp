#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace leks {

// External node identifier as it appears in edge-list files and on the CLI.
using NodeId = std::int64_t;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what)
      : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct WeightError : Error {
  int line;
  WeightError(int line_, const std::string& what)
      : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct UnknownNode : Error {
  NodeId node;
  explicit UnknownNode(NodeId node_)
      : Error("unknown node " + std::to_string(node_)), node(node_) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(what) {}
};

struct FormatError : Error {
  explicit FormatError(const std::string& what) : Error(what) {}
};

// Query node whose coreness is below the requested k.
struct QueryNotInCore : Error {
  NodeId node;
  int k;
  QueryNotInCore(NodeId node_, int k_)
      : Error("query node " + std::to_string(node_) + " is not in the " +
              std::to_string(k_) + "-core"),
        node(node_), k(k_) {}
};

// Two query nodes that fall in different components of the k-core.
struct Disconnected : Error {
  NodeId a, b;
  Disconnected(NodeId a_, NodeId b_)
      : Error("query nodes " + std::to_string(a_) + " and " + std::to_string(b_) +
              " are in different components of the k-core"),
        a(a_), b(b_) {}
};

struct DepthExceeded : Error {
  int depth;
  explicit DepthExceeded(int depth_)
      : Error("expansion hit the depth limit of " + std::to_string(depth_) +
              " before reaching a feasible candidate"),
        depth(depth_) {}
};

// Peeling the fully expanded node set separated the query nodes. Cannot
// happen once the maximal connected k-core containing Q has been verified.
struct QuerySplit : Error {
  QuerySplit() : Error("query nodes split during k-core extraction") {}
};

struct InfeasibleInput : Error {
  explicit InfeasibleInput(const std::string& what) : Error(what) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

}  // namespace leks
