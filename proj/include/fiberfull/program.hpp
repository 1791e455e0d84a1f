#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fiberfull/groebner.hpp"

namespace ffl {

struct OrderSpec {
  enum class Kind { Lex, Grevlex, Weight } kind = Kind::Grevlex;
  std::vector<long> weights;             // Weight only
  std::shared_ptr<OrderSpec> tiebreak;   // Weight only
  bool operator==(const OrderSpec& o) const;
};

struct RingDecl {
  std::string name;
  std::string field = "Q";  // "Q" or "GF(p)"
  std::vector<std::string> vars;
  std::vector<long> degrees;  // empty means all ones
  std::optional<OrderSpec> order;
  bool operator==(const RingDecl& o) const = default;
};

struct GraphSpec {
  long n = 0;
  std::vector<std::pair<int, int>> edges;
  bool operator==(const GraphSpec& o) const = default;
};

struct IdealDecl {
  std::string name;
  std::string ring;                       // the ring in force at declaration
  std::vector<std::string> generators;    // canonical text; empty when graph is set
  std::optional<GraphSpec> graph;
  bool operator==(const IdealDecl& o) const = default;
};

// Command name, optional subcommand (compare) and flag values ("" for switches).
struct CommandSpec {
  std::string name;
  std::string sub;
  std::map<std::string, std::string> flags;
  bool operator==(const CommandSpec& o) const = default;
};

struct Program {
  std::vector<RingDecl> rings;
  std::vector<IdealDecl> ideals;
  std::optional<CommandSpec> command;
  bool operator==(const Program& o) const = default;
};

// Diagnostics are InputErrors of the form "line:col: message".
Program parse_program(const std::string& source);
// Parses a command line such as "compare betti --j -3..2".
CommandSpec parse_command(const std::vector<std::string>& words);
// Canonical source text; parse_program(print_program(p)) == p.
std::string print_program(const Program& p);

MonomialOrder build_order(const OrderSpec& spec, const std::vector<long>& degrees, std::size_t nvars);
RingPtr build_ring(const RingDecl& decl, const std::optional<std::string>& field_override = std::nullopt);
Ideal build_ideal(const Program& p, const std::string& name, const std::optional<std::string>& field_override = std::nullopt);

enum ExitCode { kOk = 0, kNegative = 1, kInputError = 2, kInternalError = 3 };

struct Report {
  nlohmann::ordered_json json;
  std::string text;
  int exit_code = kOk;
};

// Runs the program's single command; errors become reports with exit codes 2 and 3.
Report execute(const Program& p);
// Parses the source, attaches the command given as words (if any), executes.
Report run_source(const std::string& source, const std::vector<std::string>& command_words = {});

std::string version_string();

}  // namespace ffl
