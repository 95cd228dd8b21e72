// Session files and the command implementations behind the CLI subcommands.
// Commands return fully rendered output so they can be golden-tested without
// spawning a process.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monoval/group.hpp"
#include "monoval/residue.hpp"
#include "monoval/valuation.hpp"

namespace monoval {

struct SessionConfig {
  std::vector<std::string> variables;
  std::vector<mpz_class> prime_basis;
  QMatrix weights;
  std::optional<std::vector<mpq_class>> shift;
  std::optional<std::vector<GroupElement>> group_generators;
};

/// Parses the session JSON; throws SessionError on malformed input.
SessionConfig parse_session(const std::string& json_text);
SessionConfig load_session(const std::string& path);

struct SessionContext {
  SessionConfig config;
  MonomialValuation valuation;
  ResidueFieldDesc desc;
  std::optional<MonomialAction> action;
};

SessionContext make_context(SessionConfig config);

struct CommandOptions {
  bool json = false;
  int digits = 6;
};

std::string command_value(const SessionContext& ctx, const std::string& expr_text,
                          const CommandOptions& opts);
std::string command_residue(const SessionContext& ctx, const std::string& expr_text,
                            const CommandOptions& opts);
std::string command_rank(const SessionContext& ctx, const CommandOptions& opts);
std::string command_kernel(const SessionContext& ctx, const CommandOptions& opts);
std::string command_center(const SessionContext& ctx, const CommandOptions& opts);
std::string command_realize(const SessionContext& ctx, const CommandOptions& opts);
std::string command_adjoin(const SessionContext& ctx, const std::string& expr_text,
                           const CommandOptions& opts);
std::string command_group_check(const SessionContext& ctx,
                                const std::optional<std::string>& expr_text,
                                const CommandOptions& opts);
std::string command_report(const SessionContext& ctx, const CommandOptions& opts);

}  // namespace monoval
