#include "cocv/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "coc/syntax.hpp"
#include "coc/vernacular.hpp"
#include "json.hpp"

namespace cocv {

namespace {

struct RunConfig {
  std::vector<std::string> inputs;
  bool trace = false;
  bool trace_matcher = false;
  bool print_proofs = false;
  bool machine_output = false;
  std::size_t fuel = coc::kDefaultReductionFuel;
  std::size_t max_solutions = 64;
};

int check_file(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << path << ": error: cannot open file\n";
    return kUsage;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  coc::CheckerOptions options;
  options.fuel = config.fuel;
  options.max_solutions = config.max_solutions;
  options.trace = config.trace;
  options.trace_matcher = config.trace_matcher;
  coc::ScriptReport report = coc::check_script(buffer.str(), options);

  for (const auto& line : report.trace) err << path << ": trace: " << line << "\n";
  for (const auto& p : report.proved) {
    if (config.machine_output) {
      nlohmann::json record{{"file", path},
                            {"name", p.name},
                            {"type", coc::print_term(p.type)},
                            {"proof", coc::print_term(p.proof)},
                            {"line", p.where.line},
                            {"column", p.where.column},
                            {"depth", p.depth}};
      out << record.dump() << "\n";
      continue;
    }
    out << "Proved " << p.name << " : " << coc::print_term(p.type) << "\n";
    if (config.print_proofs) out << "  := " << coc::print_term(p.proof) << "\n";
  }
  if (report.ok()) return kOk;

  const coc::Diagnostic& d = *report.failure;
  bool internal = d.severity == coc::Diagnostic::Severity::InternalError;
  err << path << ":" << d.where.line << ":" << d.where.column << ": " << (internal ? "internal error" : "error")
      << ": " << d.message << "\n";
  return internal ? kInternal : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Batch checker for Calculus of Constructions proof scripts", "cocv"};
  app.require_subcommand(1);
  CLI::App* check = app.add_subcommand("check", "Check proof scripts; each file starts from an empty context");
  check->add_option("files", config.inputs, "Script files")->required();
  check->add_flag("--trace", config.trace, "Print the synthesis trace to stderr");
  check->add_flag("--trace-matcher", config.trace_matcher, "Include matcher steps in the trace");
  check->add_flag("--print-proofs", config.print_proofs, "Print each synthesized proof term");
  check->add_option("--fuel", config.fuel, "Reduction and search step budget per Using")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check->add_option("--max-solutions", config.max_solutions, "Matcher solution cap per equation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check->add_flag("--machine-output", config.machine_output, "One JSON record per proved constant on stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "cocv: " << e.what() << "\n";
    return kUsage;
  }
  if (config.trace_matcher) config.trace = true;

  // Worst status wins: internal > usage > failure.
  int status = kOk;
  auto rank = [](int code) { return code == kInternal ? 3 : code == kUsage ? 2 : code == kCheckFailed ? 1 : 0; };
  for (const auto& path : config.inputs) {
    int code = check_file(path, config, out, err);
    if (rank(code) > rank(status)) status = code;
  }
  return status;
}

}  // namespace cocv
