#include "isodisc/report.hpp"

#include <sstream>

#include <json.hpp>

namespace isodisc {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json input_block(const InputDescriptor& in, const CanonicalForm& cf) {
    ordered_json j;
    j["path"] = in.path;
    j["format"] = in.format;
    j["transposed"] = in.transposed;
    j["rows"] = cf.matrix.rows;
    j["cols"] = cf.matrix.cols;
    j["canonicalized"] = !cf.is_identity();
    j["row_perm"] = cf.row_perm;
    j["col_perm"] = cf.col_perm;
    return j;
}

ordered_json document_head(const char* command, const InputDescriptor& in,
                           const CanonicalForm& cf) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["input"] = input_block(in, cf);
    return j;
}

void append_canonical_note(std::ostringstream& out, const CanonicalForm& cf) {
    if (!cf.is_identity())
        out << "note: input was reordered into canonical form (rows and columns"
               " sorted by non-increasing sums)\n";
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << v[i];
    }
    return out.str();
}

std::vector<std::string> dense_rows(const BinaryMatrix& a) {
    std::vector<std::string> rows;
    rows.reserve(a.rows);
    for (int i = 0; i < a.rows; ++i) {
        std::string r(a.cols, '0');
        for (int j = 0; j < a.cols; ++j) r[j] = static_cast<char>('0' + a.at(i, j));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

std::string render_disc_human(const InputDescriptor& in, const DiscResult& res) {
    std::ostringstream out;
    out << "input: " << res.canonical.matrix.rows << " x " << res.canonical.matrix.cols
        << " (" << in.format << (in.transposed ? ", transposed" : "") << ")\n";
    append_canonical_note(out, res.canonical);
    out << "disc: " << res.disc << "\n";
    out << "lower bound: " << res.lower_bound << "\n";
    return out.str();
}

std::string render_disc_json(const InputDescriptor& in, const DiscResult& res) {
    ordered_json j = document_head("disc", in, res.canonical);
    j["disc"] = res.disc;
    j["lower_bound"] = res.lower_bound;
    return j.dump(2) + "\n";
}

std::string render_id_human(const InputDescriptor& in, const DiscrepancyReport& rep,
                            const IdRenderOptions& opt) {
    std::ostringstream out;
    const BinaryMatrix& m = rep.canonical.matrix;
    out << "input: " << m.rows << " x " << m.cols << " (" << in.format
        << (in.transposed ? ", transposed" : "") << ")\n";
    append_canonical_note(out, rep.canonical);
    out << "disc: " << rep.disc << "\n";
    out << "lower bound: " << rep.lower_bound << "\n";
    out << "id: " << rep.id << "\n";
    if (!rep.per_block.empty()) {
        out << "blocks (column sum / size / weight / forced-constant):\n";
        for (const auto& b : rep.per_block) {
            int forced = 0;
            for (auto f : b.forced_constant) forced += f;
            out << "  " << b.value << "  " << b.size << "  " << b.weight << "  " << forced
                << " of " << b.size << "\n";
        }
    }
    if (rep.general) {
        out << "id (transpose): " << rep.general->id_transposed << "\n";
        out << "general min: " << rep.general->min << "\n";
        out << "general mean: " << rep.general->mean_num;
        if (rep.general->mean_den != 1) out << "/" << rep.general->mean_den;
        out << "\n";
    }
    if (opt.emit_permutation) {
        out << "sigma (canonical): " << join_ints(rep.sigma) << "\n";
        out << "column order (original indices): " << join_ints(rep.sigma_original) << "\n";
        if (m.col_labels) {
            out << "column order (labels):";
            const auto& canonical_labels = *m.col_labels;
            for (int j : rep.sigma) out << ' ' << canonical_labels[j];
            out << "\n";
        }
    }
    if (opt.emit_matrix) {
        out << "witness matrix:\n";
        for (const auto& row : dense_rows(rep.witness())) out << row << "\n";
    }
    if (opt.oracle) {
        out << "oracle: id " << opt.oracle->id << " over " << opt.oracle->permutations
            << " permutations, " << (opt.oracle->agrees ? "agrees" : "DISAGREES") << "\n";
    }
    return out.str();
}

std::string render_id_json(const InputDescriptor& in, const DiscrepancyReport& rep,
                           const IdRenderOptions& opt) {
    ordered_json j = document_head(rep.general ? "gid" : "id", in, rep.canonical);
    j["disc"] = rep.disc;
    j["lower_bound"] = rep.lower_bound;
    j["id"] = rep.id;
    ordered_json blocks = ordered_json::array();
    for (const auto& b : rep.per_block) {
        ordered_json jb;
        jb["value"] = b.value;
        jb["size"] = b.size;
        jb["weight"] = b.weight;
        jb["forced_constant"] = b.forced_constant;
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    j["sigma"] = rep.sigma;
    j["sigma_original"] = rep.sigma_original;
    if (rep.canonical.matrix.col_labels) {
        std::vector<std::string> order;
        for (int s : rep.sigma) order.push_back((*rep.canonical.matrix.col_labels)[s]);
        j["sigma_labels"] = std::move(order);
    }
    if (rep.general) {
        ordered_json g;
        g["id_transposed"] = rep.general->id_transposed;
        g["min"] = rep.general->min;
        g["mean"] = {{"num", rep.general->mean_num}, {"den", rep.general->mean_den}};
        j["general"] = std::move(g);
    }
    if (opt.oracle) {
        ordered_json o;
        o["id"] = opt.oracle->id;
        o["permutations"] = opt.oracle->permutations;
        o["agrees"] = opt.oracle->agrees;
        j["oracle"] = std::move(o);
    }
    if (opt.emit_matrix) j["witness_matrix"] = dense_rows(rep.witness());
    return j.dump(2) + "\n";
}

}  // namespace isodisc
