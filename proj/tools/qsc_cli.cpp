// qsc: command-line front end for presenting and checking (quantum) cohomology rings.
//
//   qsc present    --input job.json [--format text|json] [--output file]
//   qsc correlator --input job.json [a b c]
//   qsc pairing    --input job.json
//   qsc check      --input job.json
//   qsc limit      --input job.json --mode classical|undeform
//   qsc gb         --input job.json

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsc/cli/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qsc::invalid_input("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace qsc::cli;

    CLI::App app{"Quantum (sheaf) cohomology rings: presentations, correlators and checks"};
    app.require_subcommand(1);
    std::string input, format = "text", output, mode;
    std::vector<std::string> exprs;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--input", input, "Job description (JSON)")->required();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", output, "Write output to this file instead of stdout");
    };
    auto* present = app.add_subcommand("present", "Relations, module basis and graded dimensions");
    auto* correlator = app.add_subcommand("correlator", "Three-point correlators and instanton coefficients");
    auto* pairing = app.add_subcommand("pairing", "Gram matrix of the trace pairing");
    auto* check = app.add_subcommand("check", "Deformation, omalous, regularity, Frobenius and closure checks");
    auto* limit = app.add_subcommand("limit", "Classical (q=0) or undeformed limit");
    auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of the relations");
    for (auto* s : {present, correlator, pairing, check, limit, gb}) common(s);
    correlator->add_option("exprs", exprs, "Three polynomial expressions");
    limit->add_option("--mode", mode, "classical or undeform")
        ->required()
        ->check(CLI::IsMember({"classical", "undeform"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_input_error;
    }

    try {
        Job job = parse_job(read_file(input));
        CommandOutput out;
        if (present->parsed())
            out = run_present(job);
        else if (correlator->parsed())
            out = run_correlator(job, exprs);
        else if (pairing->parsed())
            out = run_pairing(job);
        else if (check->parsed())
            out = run_check(job);
        else if (limit->parsed())
            out = run_limit(job, mode == "undeform" ? LimitMode::undeform : LimitMode::classical);
        else
            out = run_gb(job);

        std::string rendered = format == "json" ? out.data.dump(2) + "\n" : out.text;
        if (output.empty()) {
            std::cout << rendered;
        } else {
            std::ofstream f(output);
            if (!f) throw qsc::invalid_input("cannot write output file '" + output + "'");
            f << rendered;
        }
        return out.exit_code;
    } catch (const qsc::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const qsc::degenerate_presentation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_degenerate;
    } catch (const qsc::trace_degenerate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_degenerate;
    } catch (const qsc::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
