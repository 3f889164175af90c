#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "pvc/graph.hpp"
#include "pvc/parity.hpp"

namespace pvc {

enum class SolveStatus { exact, bounds };

struct ChromaticResult {
    SolveStatus status = SolveStatus::exact;
    /// chi_p(G) when exact; otherwise the best lower bound (equals `lo`).
    std::size_t chi = 0;
    std::size_t lo = 0;
    std::size_t hi = 0;
    /// Valid colouring with `hi` colours (with `chi` colours when exact).
    Colouring witness;
    std::uint64_t nodes = 0;
    std::chrono::duration<double> wall_time{0};
};

struct SolverOptions {
    /// Wall-clock limit; unset means run to completion.
    std::optional<double> time_budget_seconds;
};

/// chi_p(G) by iterative deepening on k with a canonical depth-first colour
/// assignment (vertices by descending degree, ties by id; a vertex may use colour
/// c only if c <= 1 + largest colour used so far) and incremental rejection of
/// partial colourings that already contain a parity path through the vertex just
/// coloured. Throws InvalidInput on an empty or disconnected graph.
ChromaticResult chromatic_number(const Graph& g, const SolverOptions& options = {});

/// Independent oracle: for each k <= k_max, enumerates all colourings in
/// first-occurrence canonical form using exactly k colours and runs the full
/// verifier on each. Returns nullopt when no k <= k_max works.
std::optional<ChromaticResult> brute_force_chromatic(const Graph& g, std::size_t k_max);

}  // namespace pvc
