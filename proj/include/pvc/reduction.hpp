#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pvc/graph.hpp"
#include "pvc/parity.hpp"

namespace pvc {

/// The Hamiltonian-path gadget (G*, Col) built from a graph G on n vertices.
///
/// Vertex layout, 0-based: v'_i = i, v''_i = n + i, and the inner vertex v_{i,j}
/// (i != j) of the connecting path P_i = (v'_i, v_{i,0}, ..., v_{i,n-1}, v''_i)
/// sits at 2n + i(n-1) + (j < i ? j : j - 1). With 1-based i > j the colours are
/// Col(v'_i) = Col(v''_i) = i and Col(v_{i,j}) = Col(v_{j,i}) = (i-1)n + j.
/// The palette is k = n^2 - 1; only n + n(n-1)/2 of its colours occur.
struct GadgetInstance {
    Graph host;
    Colouring colouring;
    Graph source;

    std::size_t n() const noexcept { return source.order(); }
    Vertex first_copy(Vertex v) const { return v; }
    Vertex second_copy(Vertex v) const { return static_cast<Vertex>(n() + v); }
    /// v_{i,j}; throws InvalidParameter for i == j or out-of-range ids.
    Vertex inner(Vertex i, Vertex j) const;
    /// P_i from v'_i to v''_i.
    std::vector<Vertex> connecting_path(Vertex i) const;
};

/// Throws InvalidParameter when g has fewer than two vertices.
GadgetInstance build_hampath_gadget(const Graph& g);

/// Every structural invariant of the gadget that fails; empty when all hold.
std::vector<std::string> gadget_invariant_violations(const GadgetInstance& gadget);

/// A Hamiltonian path of g, if one exists (exhaustive DFS, lexicographically first).
std::optional<Path> find_hamiltonian_path(const Graph& g);
bool has_hamiltonian_path(const Graph& g);

/// Replaces each vertex of a Hamiltonian path of the source graph by its
/// connecting path, alternating orientation so that each junction stays inside
/// one copy; the first connecting path runs from G' to G''. The result uses
/// every colour an even number of times. Throws InvalidInput if `ham` is not a
/// Hamiltonian path of the source graph.
Path stitch_parity_path(const GadgetInstance& gadget, const Path& ham);

enum class ReductionStatus { consistent, inconsistent, inconclusive };

struct ReductionReport {
    ReductionStatus status = ReductionStatus::consistent;
    bool hamiltonian = false;
    std::optional<Path> hamiltonian_path;
    Verdict colouring_verdict = Verdict::valid;
    /// Parity path found by the search on the gadget.
    std::optional<ParityPathCertificate> searched_certificate;
    /// Parity path built from the Hamiltonian path, and whether it checks out.
    std::optional<ParityPathCertificate> stitched_certificate;
    bool stitched_valid = false;
    std::uint64_t expansions = 0;
    double seconds = 0.0;
    std::string details;
};

/// Checks that g has a Hamiltonian path exactly when the gadget colouring has a
/// parity path. A verification that exhausts `budget` yields `inconclusive`.
ReductionReport check_reduction_equivalence(const Graph& g, const SearchBudget& budget = {});

std::string to_string(ReductionStatus status);

}  // namespace pvc
