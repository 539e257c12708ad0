#ifndef XLMHG_CLI_HPP
#define XLMHG_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "json.hpp"

#include "xlmhg/api.hpp"
#include "xlmhg/ranked_list.hpp"
#include "xlmhg/simulation.hpp"

namespace xlmhg::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,      // I/O or unexpected errors
    kParseError = 2,   // malformed input document or command line
    kDomainError = 3,  // parameter outside its domain
};

/// One 0/1 token per line, top of the list first. Blank lines are skipped.
RankedList parse_plain_list(std::istream& in);

/**
 * TSV of (item_id, score) rows, sorted by descending score (ties keep file
 * order), labelled 1 when the id appears in the membership stream (one id per
 * line). A first row whose score is not numeric is treated as a header.
 * Membership ids absent from the scores are ignored.
 */
RankedList parse_labeled(std::istream& scores, std::istream& membership);

/// Reads either document kind from disk; throws ParseError on failures.
RankedList load_input(const std::string& input_path, const std::string& membership_path);

/// Throws ParseError unless the list has at least one 1 and one 0.
void require_mixed(const RankedList& list);

/**
 * "15" -> 15, "25%" -> round-half-up(0.25 * total). Throws DomainError on
 * negative or malformed values (`name` appears in the message).
 */
std::int64_t resolve_count(const std::string& value, std::int64_t total, const std::string& name);

/// "%.12g"; the precision used for every number the CLI writes.
std::string format_number(double value);

nlohmann::ordered_json report_to_json(const TestReport& report);
/// Header row plus one data row with the JSON report's fields.
std::string report_to_csv(const TestReport& report);
/// n,k_n,hg_pvalue,fold_enrichment rows for every cutoff.
void write_per_cutoff_csv(std::ostream& out, const TestReport& report);

/// Flat key=value document (# comments allowed).
std::map<std::string, std::string> parse_key_values(std::istream& in);

void write_replicates_csv(std::ostream& out, const sim::SimulationSummary& summary);
nlohmann::ordered_json summary_to_json(const sim::ScenarioSpec& spec, const sim::SimulationSummary& summary);

/// Entry point shared by the executable and the tests. Returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xlmhg::cli

#endif  // XLMHG_CLI_HPP
