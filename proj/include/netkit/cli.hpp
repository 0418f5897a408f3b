#ifndef NETKIT_CLI_HPP
#define NETKIT_CLI_HPP

#include "netkit/workspace.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace netkit {

/// Exit codes: 0 pass, 1 fail (report or domain error), 2 usage or parse
/// error.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Runs one subcommand against an already loaded workspace. args excludes
/// the program name; a --workspace flag among them is ignored.
int runCommand(const Workspace& ws, const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Full command line: loads --workspace (empty workspace if absent), then
/// dispatches.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace netkit

#endif
