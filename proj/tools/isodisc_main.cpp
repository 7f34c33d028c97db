// Command-line front end: `isodisc disc|id|gid <file>`.
//
// Exit codes: 0 ok, 1 parse error (including unreadable input or an
// undeterminable format), 2 invalid matrix, 3 oracle budget exceeded.

#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <string>

#include <CLI11.hpp>

#include "isodisc/ferrers.hpp"
#include "isodisc/isodisc.hpp"
#include "isodisc/matrix.hpp"
#include "isodisc/oracle.hpp"
#include "isodisc/report.hpp"

namespace {

struct CommonArgs {
    std::string file;
    std::string format;  // empty: infer from extension
    bool json = false;
};

struct IdArgs : CommonArgs {
    bool transpose = false;
    bool general = false;
    bool oracle = false;
    bool emit_permutation = false;
    bool emit_matrix = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("file", args.file, "input matrix file")->required();
    cmd->add_option("-f,--format", args.format, "input format: dense, csv or edgelist")
        ->check(CLI::IsMember({"dense", "csv", "edgelist"}));
    cmd->add_flag("--json", args.json, "emit a machine-readable JSON document");
}

isodisc::Format resolve_format(const CommonArgs& args) {
    std::string name = args.format;
    if (name.empty()) {
        auto dot = args.file.rfind('.');
        std::string ext = dot == std::string::npos ? "" : args.file.substr(dot);
        if (ext == ".csv")
            name = "csv";
        else if (ext == ".txt")
            name = "dense";
        else if (ext == ".edges")
            name = "edgelist";
        else
            throw isodisc::ParseError(
                0, "cannot infer format from '" + args.file + "'; pass --format");
    }
    if (name == "dense") return isodisc::Format::dense;
    if (name == "csv") return isodisc::Format::csv;
    return isodisc::Format::edgelist;
}

std::string format_name(isodisc::Format f) {
    switch (f) {
        case isodisc::Format::dense: return "dense";
        case isodisc::Format::csv: return "csv";
        case isodisc::Format::edgelist: return "edgelist";
    }
    return "?";
}

isodisc::BinaryMatrix load_matrix(const CommonArgs& args, isodisc::Format format) {
    std::ifstream in(args.file);
    if (!in) throw isodisc::ParseError(0, "cannot open '" + args.file + "'");
    return isodisc::parse_matrix(in, format);
}

std::int64_t permutation_count(const isodisc::BinaryMatrix& canonical) {
    constexpr std::int64_t cap = std::numeric_limits<std::int64_t>::max() / 4;
    std::int64_t total = 1;
    for (const auto& block : isodisc::block_partition(canonical.col_sums()).blocks) {
        for (int i = 2; i <= block.size(); ++i) {
            if (total > cap / i) return cap;
            total *= i;
        }
    }
    return total;
}

int run_disc(const CommonArgs& args) {
    isodisc::Format format = resolve_format(args);
    isodisc::BinaryMatrix a = load_matrix(args, format);

    isodisc::DiscResult res;
    res.canonical = isodisc::canonicalize(a);
    res.disc = isodisc::disc(res.canonical.matrix);
    res.lower_bound = isodisc::lower_bound(res.canonical.matrix);

    isodisc::InputDescriptor in{args.file, format_name(format), false};
    std::cout << (args.json ? isodisc::render_disc_json(in, res)
                            : isodisc::render_disc_human(in, res));
    return 0;
}

int run_id(const IdArgs& args) {
    isodisc::Format format = resolve_format(args);
    isodisc::BinaryMatrix a = load_matrix(args, format);
    if (args.transpose) a = isodisc::transpose(a);

    isodisc::DiscrepancyReport rep = args.general
                                         ? isodisc::general_isomorphic_discrepancy(a)
                                         : isodisc::isomorphic_discrepancy(a);

    isodisc::IdRenderOptions opt;
    opt.emit_permutation = args.emit_permutation;
    opt.emit_matrix = args.emit_matrix;
    if (args.oracle) {
        isodisc::OracleOutcome outcome;
        outcome.id = isodisc::brute_force_id(a);
        outcome.permutations = permutation_count(rep.canonical.matrix);
        outcome.agrees = outcome.id == rep.id;
        opt.oracle = outcome;
    }

    isodisc::InputDescriptor in{args.file, format_name(format), args.transpose};
    std::cout << (args.json ? isodisc::render_id_json(in, rep, opt)
                            : isodisc::render_id_human(in, rep, opt));
    if (opt.oracle && !opt.oracle->agrees) {
        std::cerr << "error: oracle disagrees with the solver\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrepancy and isomorphic discrepancy of 0/1 matrices"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(isodisc::kToolVersion));

    CommonArgs disc_args;
    CLI::App* disc_cmd = app.add_subcommand(
        "disc", "minimum shifts to the staircase form (labeled metric)");
    add_common(disc_cmd, disc_args);

    IdArgs id_args;
    CLI::App* id_cmd = app.add_subcommand(
        "id", "minimum discrepancy over column relabelings within equal sums");
    add_common(id_cmd, id_args);
    id_cmd->add_flag("--transpose", id_args.transpose, "compute on the transpose");
    id_cmd->add_flag("--general", id_args.general,
                     "also compute the transposed value, their min and mean");
    id_cmd->add_flag("--oracle", id_args.oracle,
                     "cross-check with the exhaustive permutation oracle");
    id_cmd->add_flag("--emit-permutation", id_args.emit_permutation,
                     "print the witness column permutation");
    id_cmd->add_flag("--emit-matrix", id_args.emit_matrix, "print the witness matrix");

    IdArgs gid_args;
    CLI::App* gid_cmd = app.add_subcommand("gid", "alias for id --general");
    add_common(gid_cmd, gid_args);
    gid_cmd->add_flag("--transpose", gid_args.transpose, "compute on the transpose");
    gid_cmd->add_flag("--oracle", gid_args.oracle,
                      "cross-check with the exhaustive permutation oracle");
    gid_cmd->add_flag("--emit-permutation", gid_args.emit_permutation,
                      "print the witness column permutation");
    gid_cmd->add_flag("--emit-matrix", gid_args.emit_matrix, "print the witness matrix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (disc_cmd->parsed()) return run_disc(disc_args);
        if (id_cmd->parsed()) return run_id(id_args);
        gid_args.general = true;
        return run_id(gid_args);
    } catch (const isodisc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const isodisc::InvalidMatrixError& e) {
        std::cerr << "invalid matrix: " << e.what() << "\n";
        return 2;
    } catch (const isodisc::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
