#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "constel/constellation.hpp"
#include "constel/coords.hpp"
#include "constel/cycle.hpp"

namespace constel {

// One surviving image of the constellation's point set at a given stage.
// gamma0 = parent gamma0 + lift_k * (previous stage primorial).
struct InstanceNode {
    mpz_class gamma0;
    int64_t stage = 0;
    OccKind kind = OccKind::driving_term;
    int64_t parent = -1;  // index into the previous stage's node list, -1 for the seed
    int64_t lift_k = 0;
};

struct BfsStage {
    int64_t stage = 0;
    bool truncated = false;
    std::vector<InstanceNode> nodes;  // sorted by gamma0
};

struct BfsOptions {
    // Per-stage node cap. When a stage overflows, the numerically smallest
    // gamma0 are kept, so a minimum over the survivors stays a valid
    // lower-bound probe.
    int64_t max_width = 1000000;
    // Append-only record log ("stage parent k kind" per node); enables
    // resuming long searches. Empty = no log.
    std::string log_path;
    bool progress = false;  // stage markers on stderr
};

struct BfsResult {
    std::vector<BfsStage> stages;  // stages[0] holds the seed
    bool truncated = false;
};

// Breadth-first search across sieve stages. Each node at stage p has exactly
// rho(s, q) children at the next prime q among its q lifts gamma0 + k*p#.
// Exactness is monotone: children of an exact instance are exact instances.
// The seed must be a surviving image at its stage.
BfsResult bfs_instances(const Constellation& s, const mpz_class& seed_gamma0,
                        int64_t seed_stage, int64_t up_to_prime,
                        const BfsOptions& opts = {});

// Continue an existing search to a later stage (used after a log reload).
void bfs_extend(const Constellation& s, BfsResult& result, int64_t up_to_prime,
                const BfsOptions& opts = {});

// Rebuild a BfsResult from the record log written by bfs_instances.
struct BfsLog {
    Constellation s;
    BfsResult result;
};
BfsLog read_bfs_log(const std::string& path);

// Follow the BFS while each stage has exactly one node and report the digits
// as primorial coordinates with base prime = seed stage. Stops at the first
// stage with rho != 1: terminal_stage is that prime, extinct means rho = 0
// there (possible only for inadmissible patterns). Requires the seed to be
// the unique occurrence at its own stage.
struct UniquePrefix {
    PrimorialCoords coords;
    int64_t terminal_stage = 0;
    bool extinct = false;
};
UniquePrefix unique_prefix(const Constellation& s, const mpz_class& seed_gamma0,
                           int64_t seed_stage);

// Smallest gamma0 among exact-instance nodes at the deepest explored stage.
// Empty when every node there is still a driving term. lower_bound_only is
// set when truncation may have dropped nodes.
struct MinExact {
    std::optional<mpz_class> gamma0;
    int64_t stage = 0;
    bool lower_bound_only = false;
};
MinExact min_exact_instance(const BfsResult& result);

}  // namespace constel
