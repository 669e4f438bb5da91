#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "shiftkit/io.hpp"
#include "shiftkit/order.hpp"

namespace shiftkit {

struct Options {
  std::size_t cap = 24;
  std::uint64_t seed = 0;
  std::optional<std::string> field;  // overrides the file and SHIFTKIT_FIELD
};

/// A report: canonical JSON record plus the aggregate verdict that drives the exit code.
struct CommandResult {
  nlohmann::json record;
  Verdict verdict = Verdict::not_applicable;
};

/// 0 for pass / not-applicable / experimental-fail, 1 for fail, 3 for inconclusive.
int exit_code(Verdict v);

nlohmann::json to_json(const Capped& c);

CommandResult cmd_analyze(const AlgebraFile& f, const Options& o);
CommandResult cmd_shift(const AlgebraFile& f, std::size_t level, const Options& o);
CommandResult cmd_order(const AlgebraFile& f, std::size_t krull, std::size_t level, const Options& o);
CommandResult cmd_endcheck(const AlgebraFile& f, const std::string& module_spec, const Options& o);
CommandResult cmd_mechanism(const AlgebraFile& f, std::size_t level, std::optional<std::size_t> simple, const Options& o);
/// Every *.alg file of the directory, in file-name order.
CommandResult cmd_corpus(const std::string& dir, const Options& o);
/// Corpus run plus expected-value and structural invariant checks.
CommandResult cmd_selftest(const std::string& dir, const Options& o);

/// Human-readable rendering of a record.
std::string render_table(const nlohmann::json& record);

/// Module from a sum like "regular+dual", "2*S1+P2"; summands regular, dual, P<i>, I<i>, S<i>.
template <class F>
ModulePtr<F> parse_module_spec(const AlgebraPtr<F>& a, const std::string& spec);

/// Directory of the bundled corpus (compile-time default, SHIFTKIT_CORPUS overrides).
std::string default_corpus_dir();

/// Entry point behind the shiftkit binary; exit codes 0 pass, 1 failure, 2 usage/parse, 3 inconclusive.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftkit
