// Copyright (c) 2026 afsolve contributors
// SPDX-License-Identifier: MIT

#ifndef AFSOLVE_CLI_HPP
#define AFSOLVE_CLI_HPP

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "afsolve/apx.hpp"
#include "afsolve/oracle.hpp"
#include "afsolve/query.hpp"

namespace afsolve {

inline std::string format_extension(const Framework& af, const ArgSet& s) {
  std::string out = "[";
  bool first = true;
  for (ArgIndex a : s) {
    if (!first) out += ',';
    out += af.name(a);
    first = false;
  }
  return out + "]";
}

inline std::string format_extension_list(const Framework& af, const std::vector<ArgSet>& sets) {
  std::string out = "[";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ',';
    out += format_extension(af, sets[i]);
  }
  return out + "]";
}

/// Competition answer text, including the trailing newline.
inline std::string format_output(const SolveResult& result, const Framework& af) {
  struct Formatter {
    const Framework& af;
    std::string operator()(const SomeExtension& r) const {
      return r.extension ? format_extension(af, *r.extension) : "NO";
    }
    std::string operator()(const ExtensionList& r) const { return format_extension_list(af, r.extensions); }
    std::string operator()(const ExtensionCount& r) const { return r.value.str(); }
    std::string operator()(const Verdict& r) const { return r.accepted ? "YES" : "NO"; }
  };
  return std::visit(Formatter{af}, result) + "\n";
}

class CliError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliInvocation {
  enum class Mode { Formats, Problems, Solve, Oracle };
  Mode mode = Mode::Solve;
  std::string file;
  std::string format;
  std::string task;
  std::optional<std::string> query;
};

// Probo-style flags: --formats | --problems | -p TASK -f FILE -fo apx [-a ARG]
// plus the diagnostic --oracle SEM -f FILE -fo apx.
inline CliInvocation parse_invocation(const std::vector<std::string>& args) {
  if (args.empty()) throw CliError("no arguments; expected --formats, --problems or -p TASK -f FILE -fo apx");
  CliInvocation inv;
  if (args.size() == 1 && (args[0] == "--formats" || args[0] == "--problems")) {
    inv.mode = args[0] == "--formats" ? CliInvocation::Mode::Formats : CliInvocation::Mode::Problems;
    return inv;
  }

  std::optional<std::string> task, file, format, query, oracle;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& flag = args[i];
    std::optional<std::string>* slot = nullptr;
    if (flag == "-p") slot = &task;
    else if (flag == "-f") slot = &file;
    else if (flag == "-fo") slot = &format;
    else if (flag == "-a") slot = &query;
    else if (flag == "--oracle") slot = &oracle;
    else if (flag == "--formats" || flag == "--problems")
      throw CliError("'" + flag + "' must be the only argument");
    else
      throw CliError("unknown flag '" + flag + "'");
    if (*slot) throw CliError("flag '" + flag + "' given more than once");
    if (i + 1 >= args.size()) throw CliError("flag '" + flag + "' needs a value");
    *slot = args[++i];
  }
  if (task && oracle) throw CliError("-p and --oracle are mutually exclusive");
  if (!task && !oracle) throw CliError("missing -p TASK");
  if (!file) throw CliError("missing -f FILE");
  if (!format) throw CliError("missing -fo FORMAT");
  if (*format != "apx") throw CliError("unsupported format '" + *format + "'");

  inv.file = *file;
  inv.format = *format;
  if (oracle) {
    if (query) throw CliError("--oracle takes no -a argument");
    inv.mode = CliInvocation::Mode::Oracle;
    inv.task = *oracle;
    return inv;
  }
  const Task t = parse_task(*task).first;
  if (needs_query(t) && !query) throw CliError("task " + *task + " requires -a ARG");
  if (!needs_query(t) && query) throw CliError("task " + *task + " takes no -a argument");
  inv.task = *task;
  inv.query = query;
  return inv;
}

inline Framework load_apx_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open '" + path + "'");
  return parse_apx(in);
}

/// Runs one invocation; returns the process exit status. Diagnostics go to
/// `err` as a single line.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const CliInvocation inv = parse_invocation(args);
    switch (inv.mode) {
      case CliInvocation::Mode::Formats:
        out << "[apx]\n";
        return 0;
      case CliInvocation::Mode::Problems: {
        std::string line = "[";
        const auto problems = supported_problems();
        for (std::size_t i = 0; i < problems.size(); ++i) line += (i ? "," : "") + problems[i];
        out << line << "]\n";
        return 0;
      }
      case CliInvocation::Mode::Oracle: {
        const oracle::Sem sem = oracle::parse_sem(inv.task);
        const Framework af = load_apx_file(inv.file);
        out << format_extension_list(af, oracle::extensions(af, sem)) << "\n";
        return 0;
      }
      case CliInvocation::Mode::Solve: {
        const auto [task, sem] = parse_task(inv.task);
        const Framework af = load_apx_file(inv.file);
        const SolveResult result = solve(af, TaskSpec{task, sem, inv.query});
        out << format_output(result, af);
        return 0;
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace afsolve

#endif  // AFSOLVE_CLI_HPP
