#include "xlmhg/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"

#include "xlmhg/errors.hpp"

namespace xlmhg::cli {
namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool parse_double(const std::string& text, double& value) {
    const std::string t = trim(text);
    if (t.empty()) return false;
    char* end = nullptr;
    value = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size() && std::isfinite(value);
}

std::int64_t parse_integer(const std::string& text, const std::string& name) {
    const std::string t = trim(text);
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(t, &used);
    } catch (const std::exception&) {
        throw DomainError(name + ": expected an integer, got '" + text + "'");
    }
    if (used != t.size()) throw DomainError(name + ": expected an integer, got '" + text + "'");
    return value;
}

double parse_real(const std::string& text, const std::string& name) {
    double value = 0.0;
    if (!parse_double(text, value)) throw DomainError(name + ": expected a number, got '" + text + "'");
    return value;
}

double number(double value) {
    return std::stod(format_number(value));
}

template <class T>
nlohmann::ordered_json optional_json(const std::optional<T>& value) {
    if (!value) return nullptr;
    if constexpr (std::is_floating_point_v<T>) {
        return number(*value);
    } else {
        return *value;
    }
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

std::string csv_field(const nlohmann::ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_number_float()) return format_number(v.get<double>());
    return v.dump();
}

// ---- test subcommand -------------------------------------------------------

struct TestArgs {
    std::string input;
    std::string membership;
    std::string x = "0";
    std::string l;
    std::string psi = "0.05";
    std::string per_cutoff;
    std::string output;
    std::string format = "json";
    bool bound_only = false;
    bool invert = false;
};

int run_test_command(const TestArgs& args, std::ostream& out) {
    RankedList list = load_input(args.input, args.membership);
    require_mixed(list);
    if (args.invert) list = list.reversed();

    TestParams params;
    params.X = resolve_count(args.x, list.ones(), "--x");
    params.L = args.l.empty() ? list.size() : resolve_count(args.l, list.size(), "--l");
    const double psi = parse_real(args.psi, "--psi");

    TestOptions options;
    options.bound_only = args.bound_only;
    options.per_cutoff = !args.per_cutoff.empty();
    const TestReport report = run_test(list, params, psi, options);

    std::string body;
    if (args.format == "csv") {
        body = report_to_csv(report);
    } else {
        body = report_to_json(report).dump(2) + "\n";
    }
    if (args.output.empty()) {
        out << body;
    } else {
        auto file = open_output(args.output);
        file << body;
    }
    if (options.per_cutoff) {
        auto file = open_output(args.per_cutoff);
        write_per_cutoff_csv(file, report);
    }
    return kOk;
}

// ---- sim subcommand --------------------------------------------------------

struct SimArgs {
    std::string config;
    std::map<std::string, std::string> overrides;  // lower-case key -> raw value
    std::string csv;
    std::string summary;
};

sim::ScenarioSpec build_spec(const SimArgs& args) {
    std::map<std::string, std::string> values;
    if (!args.config.empty()) {
        auto in = open_input(args.config);
        for (const auto& [key, value] : parse_key_values(in)) values[lower(key)] = value;
    }
    for (const auto& [key, value] : args.overrides) values[key] = value;

    static const std::unordered_set<std::string> known = {"scenario", "n",     "k",    "fold",  "outliers", "window",
                                                          "replicates", "seed", "x",    "l",     "alpha"};
    for (const auto& [key, value] : values) {
        if (!known.contains(key)) throw ParseError("unknown simulation setting '" + key + "'");
    }
    auto get = [&](const std::string& key) -> const std::string* {
        const auto it = values.find(key);
        return it == values.end() ? nullptr : &it->second;
    };

    sim::ScenarioSpec spec;
    if (const auto* v = get("scenario")) spec.kind = sim::parse_scenario(trim(*v));
    if (spec.kind == sim::Scenario::BroadEnrichment) {
        spec.N = 10000;
        spec.K = 500;
    }
    if (const auto* v = get("n")) spec.N = parse_integer(*v, "N");
    if (const auto* v = get("k")) spec.K = parse_integer(*v, "K");
    if (const auto* v = get("fold")) spec.fold = parse_real(*v, "fold");
    if (const auto* v = get("outliers")) spec.outliers = parse_integer(*v, "outliers");
    if (const auto* v = get("window")) spec.window = parse_integer(*v, "window");
    if (const auto* v = get("replicates")) spec.replicates = parse_integer(*v, "replicates");
    if (const auto* v = get("seed")) {
        const std::int64_t seed = parse_integer(*v, "seed");
        if (seed < 0) throw DomainError("seed must be non-negative");
        spec.seed = static_cast<std::uint64_t>(seed);
    }
    if (const auto* v = get("alpha")) spec.alpha = parse_real(*v, "alpha");
    spec.params.X = get("x") ? resolve_count(*get("x"), spec.K, "X") : 0;
    spec.params.L = get("l") ? resolve_count(*get("l"), spec.N, "L") : spec.N;
    return spec;
}

int run_sim_command(const SimArgs& args, std::ostream& out, std::ostream& err) {
    const sim::ScenarioSpec spec = build_spec(args);
    const sim::SimulationSummary summary = sim::simulate(spec);
    const std::string summary_text = summary_to_json(spec, summary).dump(2) + "\n";

    if (args.csv.empty()) {
        write_replicates_csv(out, summary);
    } else {
        auto file = open_output(args.csv);
        write_replicates_csv(file, summary);
    }
    if (!args.summary.empty()) {
        auto file = open_output(args.summary);
        file << summary_text;
    } else if (!args.csv.empty()) {
        out << summary_text;
    } else {
        err << summary_text;
    }
    return kOk;
}

}  // namespace

RankedList parse_plain_list(std::istream& in) {
    std::vector<std::uint8_t> labels;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string token = trim(line);
        if (token.empty()) continue;
        if (token == "0" || token == "1") {
            labels.push_back(token == "1" ? 1 : 0);
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": expected 0 or 1, got '" + token + "'");
        }
    }
    return RankedList(std::move(labels));
}

RankedList parse_labeled(std::istream& scores, std::istream& membership) {
    struct Row {
        std::string id;
        double score;
        std::size_t order;
    };
    std::vector<Row> rows;
    std::unordered_map<std::string, std::int64_t> seen;
    std::string line;
    std::int64_t line_no = 0;
    bool first = true;
    while (std::getline(scores, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const bool may_be_header = first;
        first = false;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 'item_id<TAB>score'");
        }
        const std::string id = trim(line.substr(0, tab));
        const std::string score_text = line.substr(tab + 1);
        double score = 0.0;
        if (!parse_double(score_text, score)) {
            if (may_be_header) continue;
            throw ParseError("line " + std::to_string(line_no) + ": score '" + trim(score_text) + "' is not a number");
        }
        if (id.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty item_id");
        if (const auto it = seen.find(id); it != seen.end()) {
            throw ParseError("line " + std::to_string(line_no) + ": duplicate item_id '" + id + "' (first seen on line " +
                             std::to_string(it->second) + ")");
        }
        seen.emplace(id, line_no);
        rows.push_back({id, score, rows.size()});
    }

    std::unordered_set<std::string> members;
    while (std::getline(membership, line)) {
        const std::string id = trim(line);
        if (!id.empty()) members.insert(id);
    }

    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.score > b.score; });
    std::vector<std::uint8_t> labels;
    labels.reserve(rows.size());
    for (const auto& row : rows) labels.push_back(members.contains(row.id) ? 1 : 0);
    return RankedList(std::move(labels));
}

RankedList load_input(const std::string& input_path, const std::string& membership_path) {
    auto in = open_input(input_path);
    try {
        if (membership_path.empty()) return parse_plain_list(in);
        auto members = open_input(membership_path);
        return parse_labeled(in, members);
    } catch (const ParseError& e) {
        throw ParseError(input_path + ": " + e.what());
    }
}

void require_mixed(const RankedList& list) {
    if (list.ones() == 0) throw ParseError("input contains no 1's");
    if (list.zeros() == 0) throw ParseError("input contains no 0's");
}

std::int64_t resolve_count(const std::string& value, std::int64_t total, const std::string& name) {
    std::string text = trim(value);
    if (!text.empty() && text.back() == '%') {
        text.pop_back();
        const double percent = parse_real(text, name);
        if (percent < 0.0) throw DomainError(name + " must not be negative, got '" + value + "'");
        return static_cast<std::int64_t>(std::floor(percent * static_cast<double>(total) / 100.0 + 0.5));
    }
    const std::int64_t count = parse_integer(text, name);
    if (count < 0) throw DomainError(name + " must not be negative, got '" + value + "'");
    return count;
}

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

nlohmann::ordered_json report_to_json(const TestReport& report) {
    nlohmann::ordered_json j;
    j["N"] = report.N;
    j["K"] = report.K;
    j["X"] = report.X;
    j["L"] = report.L;
    j["statistic"] = number(report.statistic);
    j["cutoff"] = report.cutoff;
    j["k_at_cutoff"] = report.k_at_cutoff;
    j["pvalue"] = optional_json(report.pvalue);
    j["lipson_bound"] = number(report.lipson_bound);
    j["escore"] = optional_json(report.escore);
    j["escore_cutoff"] = optional_json(report.escore_cutoff);
    j["psi"] = number(report.psi);
    return j;
}

std::string report_to_csv(const TestReport& report) {
    static const char* const fields[] = {"N",      "K",            "X",     "L",           "statistic", "cutoff",
                                         "k_at_cutoff", "pvalue", "lipson_bound", "escore", "escore_cutoff", "psi"};
    const nlohmann::ordered_json j = report_to_json(report);
    std::ostringstream out;
    for (std::size_t i = 0; i < std::size(fields); ++i) out << (i ? "," : "") << fields[i];
    out << "\n";
    for (std::size_t i = 0; i < std::size(fields); ++i) out << (i ? "," : "") << csv_field(j.at(fields[i]));
    out << "\n";
    return out.str();
}

void write_per_cutoff_csv(std::ostream& out, const TestReport& report) {
    out << "n,k_n,hg_pvalue,fold_enrichment\n";
    for (const auto& row : report.per_cutoff) {
        out << row.n << ',' << row.k << ',' << format_number(row.hg_pvalue) << ','
            << format_number(row.fold_enrichment) << '\n';
    }
}

std::map<std::string, std::string> parse_key_values(std::istream& in) {
    std::map<std::string, std::string> values;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = trim(line.substr(0, line.find('#')));
        if (content.empty()) continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos) {
            throw ParseError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        const std::string key = trim(content.substr(0, eq));
        if (key.empty()) throw ParseError("config line " + std::to_string(line_no) + ": empty key");
        values[key] = trim(content.substr(eq + 1));
    }
    return values;
}

void write_replicates_csv(std::ostream& out, const sim::SimulationSummary& summary) {
    out << "replicate,statistic,cutoff,pvalue\n";
    for (const auto& r : summary.replicates) {
        out << r.replicate << ',' << format_number(r.statistic) << ',' << r.cutoff << ',' << format_number(r.pvalue)
            << '\n';
    }
}

nlohmann::ordered_json summary_to_json(const sim::ScenarioSpec& spec, const sim::SimulationSummary& summary) {
    nlohmann::ordered_json j;
    j["scenario"] = sim::to_string(spec.kind);
    j["N"] = spec.N;
    j["K"] = spec.K;
    if (spec.kind == sim::Scenario::BroadEnrichment) {
        j["fold"] = number(spec.fold);
    } else {
        j["outliers"] = spec.outliers;
        j["window"] = spec.window;
    }
    j["X"] = spec.params.X;
    j["L"] = spec.params.L;
    j["replicates"] = spec.replicates;
    j["seed"] = spec.seed;
    j["rng"] = sim::kRngName;
    j["alpha"] = number(spec.alpha);
    j["fraction_significant"] = number(summary.fraction_significant);
    const auto& q = summary.pvalue_quantiles;
    j["pvalue_quantiles"] = {{"q05", number(q.q05)}, {"q25", number(q.q25)}, {"q50", number(q.q50)},
                             {"q75", number(q.q75)}, {"q95", number(q.q95)}};
    return j;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact mHG / XL-mHG enrichment tests for ranked binary lists"};
    app.require_subcommand(1);

    TestArgs test_args;
    auto* test = app.add_subcommand("test", "Run an XL-mHG test on one ranked list");
    test->add_option("--input", test_args.input, "Plain 0/1 list, or item_id<TAB>score TSV with --membership")
        ->required();
    test->add_option("--membership", test_args.membership, "File of item_ids marking the 1's");
    test->add_option("--x", test_args.x, "Minimum number of 1's above a cutoff (N or P% of K)");
    test->add_option("--l", test_args.l, "Lowest permitted cutoff (N or P% of N); default N");
    test->add_option("--psi", test_args.psi, "p-value threshold for the enrichment score");
    test->add_option("--per-cutoff", test_args.per_cutoff, "Write n,k_n,hg_pvalue,fold_enrichment CSV here");
    test->add_flag("--bound-only", test_args.bound_only, "Report only the K*s upper bound, skip the exact p-value");
    test->add_flag("--invert", test_args.invert, "Reverse the list (test for enrichment at the bottom)");
    test->add_option("--format", test_args.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    test->add_option("--output", test_args.output, "Write the report here instead of stdout");

    SimArgs sim_args;
    std::map<std::string, std::string> raw;
    auto* simc = app.add_subcommand("sim", "Monte-Carlo scenario simulation");
    simc->add_option("--config", sim_args.config, "key=value file with scenario settings");
    for (const char* key : {"scenario", "n", "k", "fold", "outliers", "window", "replicates", "seed", "x", "l", "alpha"}) {
        simc->add_option(std::string("--") + key, raw[key]);
    }
    simc->add_option("--csv", sim_args.csv, "Per-replicate CSV output (default stdout)");
    simc->add_option("--summary", sim_args.summary, "JSON summary output");

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    try {
        if (test->parsed()) return run_test_command(test_args, out);
        for (const auto& [key, value] : raw) {
            if (simc->count(std::string("--") + key) > 0) sim_args.overrides[key] = value;
        }
        return run_sim_command(sim_args, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
}

}  // namespace xlmhg::cli
