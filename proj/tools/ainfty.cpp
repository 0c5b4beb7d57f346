#include "ainf/commands.hpp"
#include "ainf/fixtures.hpp"
#include "ainf/parallel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ainf::Error(ainf::ErrorCode::SyntaxError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool input_error(ainf::ErrorCode c) {
    using ainf::ErrorCode;
    return c == ErrorCode::SyntaxError || c == ErrorCode::UnknownName || c == ErrorCode::DegreeMismatch ||
           c == ErrorCode::NotPrime || c == ErrorCode::UnknownFixture || c == ErrorCode::ArityMismatch ||
           c == ErrorCode::ModuleMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"A-infinity Hochschild homology toolkit"};
    app.require_subcommand(1);

    ainf::CommandOptions opts;
    int length = -1, max_r = -1, max_rs = -1;
    std::string degrees, csv_path, document;
    long prime = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("document", document, "structure document (JSON)")->required();
        sub->add_option("--length", length, "length cutoff L");
        sub->add_option("--max-r", max_r, "bound for the A-infinity equations");
        sub->add_option("--max-rs", max_rs, "bound r+s for bimodule and morphism equations");
        sub->add_option("--module", opts.module, "diagonal, tensor, dual or a named bimodule");
        sub->add_option("--degrees", degrees, "degree window A..B");
        sub->add_option("--csv", csv_path, "write the homology table as CSV");
        sub->add_option("--seed", opts.seed, "seed for the reordering check in verify");
        sub->add_flag("--timing", opts.timing, "report wall-clock time per step");
    };
    const std::vector<std::pair<std::string, std::string>> commands{
        {"validate", "check the A-infinity, bimodule and morphism equations"},
        {"hh", "Hochschild homology of F_L with coefficients in --module"},
        {"cohomology", "Hochschild cohomology of the arity-truncated cochain complex"},
        {"cup", "cup products of named cochains and the Leibniz check"},
        {"spectral", "E1 page of the length filtration and the comparison check"},
        {"verify", "run every identity check and report the first failure"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub);
        if (name == "cup") sub->add_option("cochains", opts.names, "two cochain names (default: all pairs)");
    }
    std::string fixture;
    auto* fix = app.add_subcommand("fixture", "print a built-in fixture document");
    fix->add_option("name", fixture)->required();
    fix->add_option("--prime", prime, "emit over Z/p instead of Z");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (fix->parsed()) {
            std::cout << ainf::emit_fixture(fixture, prime ? ainf::Ring::prime_field(prime) : ainf::Ring::integers());
            return 0;
        }
        const std::string command = app.get_subcommands().front()->get_name();
        if (length >= 0) opts.length = length;
        if (max_r >= 0) opts.max_r = max_r;
        if (max_rs >= 0) opts.max_rs = max_rs;
        if (!degrees.empty()) opts.degrees = ainf::parse_degree_range(degrees);
        ainf::Structure s = ainf::parse_document(read_file(document));
        ainf::Report rep = ainf::run_command(command, s, opts);
        std::cout << rep.text();
        if (!csv_path.empty()) {
            std::ofstream out(csv_path);
            if (!out) throw ainf::Error(ainf::ErrorCode::SyntaxError, "cannot write " + csv_path);
            out << rep.csv();
        }
        return rep.exit_code;
    } catch (const ainf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
