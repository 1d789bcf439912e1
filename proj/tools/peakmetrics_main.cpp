// Command-line front end: peak extraction, pairwise distances, peak-class
// queries, extremal constructions, and the theorem verification harness.
//
// Exit codes: 0 success / all checks pass, 1 verification failure or
// internal error, 2 input error, 3 inadmissible peak set, 4 cap exceeded.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "peakmetrics/constructions.hpp"
#include "peakmetrics/enumerate.hpp"
#include "peakmetrics/errors.hpp"
#include "peakmetrics/metrics.hpp"
#include "peakmetrics/peaks.hpp"
#include "peakmetrics/permutation.hpp"
#include "peakmetrics/verify.hpp"

namespace pm = peakmetrics;
using nlohmann::json;

namespace {

enum class Format { Plain, Json, Csv };

Format parse_format(const std::string& name) {
    if (name == "plain") return Format::Plain;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw pm::ParseError("unknown format \"" + name + "\" (expected plain, json, or csv)");
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string witness_text(const std::pair<pm::Permutation, pm::Permutation>& pair) {
    return pm::to_one_line(pair.first) + " | " + pm::to_one_line(pair.second);
}

pm::Caps caps_from_env() {
    pm::Caps caps;
    if (const char* raw = std::getenv("PEAKMETRICS_CAP")) {
        int value = 0;
        try {
            value = std::stoi(raw);
        } catch (const std::exception&) {
            throw pm::ParseError("PEAKMETRICS_CAP must be an integer, got \"" +
                                 std::string(raw) + "\"");
        }
        if (value < 1) throw pm::ParseError("PEAKMETRICS_CAP must be positive");
        caps.enumeration = value;
        caps.pairwise = std::min(caps.pairwise, value);
    }
    return caps;
}

json summary_json(const pm::DistanceSummary& row) {
    return json{{"n", row.n},
                {"peak_set", pm::to_string(row.s)},
                {"metric", pm::metric_name(row.metric)},
                {"class_size", row.class_size},
                {"min", row.min},
                {"max", row.max},
                {"min_witness", {pm::to_one_line(row.min_witness.first),
                                 pm::to_one_line(row.min_witness.second)}},
                {"max_witness", {pm::to_one_line(row.max_witness.first),
                                 pm::to_one_line(row.max_witness.second)}}};
}

void print_summaries(const std::vector<pm::DistanceSummary>& rows, Format format) {
    if (format == Format::Json) {
        json out = json::array();
        for (const auto& row : rows) out.push_back(summary_json(row));
        std::cout << out.dump() << "\n";
        return;
    }
    if (format == Format::Csv) {
        std::cout << "n,peak_set,metric,class_size,min,max,min_witness,max_witness\n";
        for (const auto& row : rows) {
            std::cout << row.n << ',' << csv_field(pm::to_string(row.s)) << ','
                      << pm::metric_name(row.metric) << ',' << row.class_size << ',' << row.min
                      << ',' << row.max << ',' << csv_field(witness_text(row.min_witness))
                      << ',' << csv_field(witness_text(row.max_witness)) << "\n";
        }
        return;
    }
    bool first = true;
    for (const auto& row : rows) {
        if (!first) std::cout << "\n";
        first = false;
        std::cout << "peak_set " << pm::to_string(row.s) << "\n"
                  << "n " << row.n << "\n"
                  << "metric " << pm::metric_name(row.metric) << "\n"
                  << "class_size " << row.class_size << "\n"
                  << "min " << row.min << "\n"
                  << "max " << row.max << "\n"
                  << "min_witness " << witness_text(row.min_witness) << "\n"
                  << "max_witness " << witness_text(row.max_witness) << "\n";
    }
}

void print_extremal(const pm::ExtremalPair& pair, const pm::PeakSet& s, int n, Format format) {
    if (format == Format::Json) {
        std::cout << json{{"metric", pm::metric_name(pair.metric)},
                          {"n", n},
                          {"peak_set", pm::to_string(s)},
                          {"claimed_distance", pair.claimed_distance},
                          {"a", pm::to_one_line(pair.a)},
                          {"b", pm::to_one_line(pair.b)}}
                         .dump()
                  << "\n";
        return;
    }
    if (format == Format::Csv) {
        std::cout << "metric,n,peak_set,claimed_distance,a,b\n"
                  << pm::metric_name(pair.metric) << ',' << n << ','
                  << csv_field(pm::to_string(s)) << ',' << pair.claimed_distance << ','
                  << pm::to_one_line(pair.a) << ',' << pm::to_one_line(pair.b) << "\n";
        return;
    }
    std::cout << "metric " << pm::metric_name(pair.metric) << "\n"
              << "n " << n << "\n"
              << "peak_set " << pm::to_string(s) << "\n"
              << "claimed_distance " << pair.claimed_distance << "\n"
              << "a " << pm::to_one_line(pair.a) << "\n"
              << "b " << pm::to_one_line(pair.b) << "\n";
}

void print_report(const pm::VerificationReport& report, Format format) {
    if (format == Format::Json) {
        std::cout << pm::to_json(report).dump() << "\n";
        return;
    }
    std::cout << (report.pass ? "PASS" : "FAIL") << " " << report.theorem_id << " n="
              << report.n_lo << ".." << report.n_hi << " (" << report.elapsed_ms << " ms)";
    if (report.seed) std::cout << " seed=" << *report.seed;
    if (!report.pass) std::cout << " counterexample=" << report.counterexample.dump();
    std::cout << "\n";
}

int exit_code_for(const std::exception& error) {
    if (dynamic_cast<const pm::InadmissibleSet*>(&error)) return 3;
    if (dynamic_cast<const pm::CapExceeded*>(&error)) return 4;
    if (dynamic_cast<const std::invalid_argument*>(&error)) return 2;
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hamming, l-infinity, and Kendall-Tau distances on the peak-set "
                 "classes P(S;n) of the symmetric group"};
    app.require_subcommand(1);

    std::string perm_text, perm_a, perm_b, metric_text, peakset_text, format_text = "plain";
    std::string kind_text = "max";
    int n = 0;
    bool want_path = false, want_members = false, allow_large = false;
    std::vector<std::string> theorem_ids{"all"};
    int n_max = 6;
    std::uint64_t seed = pm::kDefaultVerifySeed;

    CLI::App* cmd_peaks = app.add_subcommand("peaks", "Peak set of a permutation");
    cmd_peaks->add_option("perm", perm_text, "one-line notation, e.g. \"5 8 3 2 7 1 6 4\"")
        ->required();

    CLI::App* cmd_dist = app.add_subcommand("dist", "Distance between two permutations");
    cmd_dist->add_option("metric", metric_text, "hamming | linf | kendall")->required();
    cmd_dist->add_option("a", perm_a, "first permutation")->required();
    cmd_dist->add_option("b", perm_b, "second permutation")->required();
    cmd_dist->add_flag("--path", want_path,
                       "also print a minimal swap path (kendall only)");

    CLI::App* cmd_class = app.add_subcommand("class", "Size and members of P(S;n)");
    cmd_class->add_option("peak-set", peakset_text, "e.g. \"{2,4}\" or \"2,4\"; \"{}\" empty")
        ->required();
    cmd_class->add_option("n", n, "permutation size")->required();
    cmd_class->add_flag("--members", want_members, "list the members (plain/json)");
    cmd_class->add_option("--format", format_text, "plain | json | csv");

    CLI::App* cmd_summary =
        app.add_subcommand("summary", "Brute-force min/max distances over P(S;n)");
    cmd_summary->add_option("peak-set", peakset_text, "peak set")->required();
    cmd_summary->add_option("n", n, "permutation size")->required();
    cmd_summary->add_option("metric", metric_text, "hamming | linf | kendall | all")
        ->required();
    cmd_summary->add_option("--format", format_text, "plain | json | csv");
    cmd_summary->add_flag("--allow-large", allow_large,
                          "lift the pairwise cap up to the enumeration cap");

    CLI::App* cmd_extremal =
        app.add_subcommand("extremal", "Explicit extremal pair inside P(S;n)");
    cmd_extremal->add_option("peak-set", peakset_text, "peak set")->required();
    cmd_extremal->add_option("n", n, "permutation size")->required();
    cmd_extremal->add_option("metric", metric_text, "hamming | linf | kendall")->required();
    cmd_extremal->add_option("--kind", kind_text, "max (default) | min");
    cmd_extremal->add_option("--format", format_text, "plain | json | csv");

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "Check the closed-form theorems by brute force");
    cmd_verify->add_option("--theorem", theorem_ids,
                           "theorem id(s) or \"all\": metric_axioms, sn_extremes, "
                           "kt_equivalence, min_over_classes, max_kendall, max_linf, "
                           "max_hamming, partition, cardinality_divisibility");
    cmd_verify->add_option("--n-max", n_max, "largest n to check (default 6)");
    cmd_verify->add_option("--seed", seed, "seed for randomized spot checks");
    cmd_verify->add_option("--format", format_text, "plain | json");
    cmd_verify->add_flag("--allow-large", allow_large,
                         "lift the pairwise cap up to the enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& parse_error) {
        app.exit(parse_error);
        return 2;
    }

    try {
        pm::Caps caps = caps_from_env();
        const Format format = parse_format(format_text);

        if (app.got_subcommand(cmd_peaks)) {
            std::cout << pm::to_string(pm::peak_set(pm::parse_one_line(perm_text))) << "\n";
            return 0;
        }

        if (app.got_subcommand(cmd_dist)) {
            const pm::MetricKind metric = pm::parse_metric(metric_text);
            const pm::Permutation a = pm::parse_one_line(perm_a);
            const pm::Permutation b = pm::parse_one_line(perm_b);
            if (want_path && metric != pm::MetricKind::KendallTau)
                throw pm::ParseError("--path requires the kendall metric");
            std::cout << pm::distance(metric, a, b) << "\n";
            if (want_path) std::cout << "path: " << pm::to_string(pm::minimal_swap_path(a, b))
                                     << "\n";
            return 0;
        }

        if (app.got_subcommand(cmd_class)) {
            const pm::PeakSet s = pm::parse_peak_set(peakset_text);
            const pm::PeakClass cls = pm::peak_class(s, n, caps);
            const pm::ClassSize size = pm::class_size(s, n, caps);
            if (format == Format::Json) {
                json out{{"peak_set", pm::to_string(s)},
                         {"n", n},
                         {"size", size.size},
                         {"quotient", size.quotient}};
                if (want_members) {
                    json members = json::array();
                    for (const auto& member : cls.members)
                        members.push_back(pm::to_one_line(member));
                    out["members"] = members;
                }
                std::cout << out.dump() << "\n";
            } else if (format == Format::Csv) {
                std::cout << "peak_set,n,size,quotient\n"
                          << csv_field(pm::to_string(s)) << ',' << n << ',' << size.size << ','
                          << size.quotient << "\n";
            } else {
                std::cout << "peak_set " << pm::to_string(s) << "\n"
                          << "n " << n << "\n"
                          << "size " << size.size << "\n"
                          << "quotient " << size.quotient << "\n";
                if (want_members) {
                    for (const auto& member : cls.members)
                        std::cout << pm::to_one_line(member) << "\n";
                }
            }
            return 0;
        }

        if (app.got_subcommand(cmd_summary)) {
            const pm::PeakSet s = pm::parse_peak_set(peakset_text);
            if (!pm::is_admissible(s, n))
                throw pm::InadmissibleSet("peak set " + pm::to_string(s) +
                                          " is inadmissible for n = " + std::to_string(n));
            if (allow_large) caps.pairwise = caps.enumeration;
            std::vector<pm::DistanceSummary> rows;
            if (metric_text == "all") {
                for (const auto& row : pm::summarize_class(s, n, caps)) rows.push_back(row);
            } else {
                rows.push_back(pm::distance_summary(s, n, pm::parse_metric(metric_text), caps));
            }
            print_summaries(rows, format);
            return 0;
        }

        if (app.got_subcommand(cmd_extremal)) {
            const pm::PeakSet s = pm::parse_peak_set(peakset_text);
            const pm::MetricKind metric = pm::parse_metric(metric_text);
            pm::ExtremalKind kind;
            if (kind_text == "max") kind = pm::ExtremalKind::Max;
            else if (kind_text == "min") kind = pm::ExtremalKind::Min;
            else throw pm::ParseError("unknown --kind \"" + kind_text + "\"");
            const pm::ExtremalPair pair = pm::extremal_pair(kind, metric, s, n);
            if (pm::distance(metric, pair.a, pair.b) != pair.claimed_distance ||
                pm::peak_set(pair.a) != s || pm::peak_set(pair.b) != s)
                throw std::runtime_error("extremal construction failed its self-check");
            print_extremal(pair, s, n, format);
            return 0;
        }

        if (app.got_subcommand(cmd_verify)) {
            if (format == Format::Csv) throw pm::ParseError("verify supports plain or json");
            if (allow_large) {
                caps.pairwise = caps.enumeration;
                if (n_max > 8)
                    std::cerr << "warning: pairwise verification beyond n=8 may take a long"
                                 " time\n";
            }
            const auto reports = pm::run_verification(theorem_ids, n_max, seed, caps);
            bool all_pass = true;
            for (const auto& report : reports) {
                print_report(report, format);
                all_pass = all_pass && report.pass;
            }
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return exit_code_for(error);
    }
    return 0;
}
