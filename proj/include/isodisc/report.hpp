#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "isodisc/isodisc.hpp"

namespace isodisc {

inline constexpr const char* kToolName = "isodisc";
inline constexpr const char* kToolVersion = "1.0.0";

struct InputDescriptor {
    std::string path;
    std::string format;      // "dense", "csv" or "edgelist"
    bool transposed = false;  // the matrix was transposed before computing
};

struct DiscResult {
    std::int64_t disc = 0;
    std::int64_t lower_bound = 0;
    CanonicalForm canonical;
};

struct OracleOutcome {
    std::int64_t id = 0;
    std::int64_t permutations = 0;  // size of the enumerated permutation set
    bool agrees = false;
};

struct IdRenderOptions {
    bool emit_permutation = false;
    bool emit_matrix = false;
    std::optional<OracleOutcome> oracle;
};

std::string render_disc_human(const InputDescriptor& in, const DiscResult& res);
std::string render_disc_json(const InputDescriptor& in, const DiscResult& res);

std::string render_id_human(const InputDescriptor& in, const DiscrepancyReport& rep,
                            const IdRenderOptions& opt);
std::string render_id_json(const InputDescriptor& in, const DiscrepancyReport& rep,
                           const IdRenderOptions& opt);

}  // namespace isodisc
