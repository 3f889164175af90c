#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pvc/graph.hpp"

namespace pvc {

using Colour = std::uint32_t;

/// Total map vertex -> colour in {1..k}.
class Colouring {
public:
    Colouring() = default;
    /// Throws InvalidParameter if k = 0 and InvalidInput if a colour is outside {1..k}.
    Colouring(std::size_t k, std::vector<Colour> colours);

    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return colours_.size(); }
    Colour operator[](Vertex v) const { return colours_.at(v); }
    const std::vector<Colour>& colours() const noexcept { return colours_; }
    /// Number of distinct colours actually used.
    std::size_t used() const;

    /// Restriction to a vertex subset listed in ascending-id order (for induced subgraphs).
    Colouring restrict_to(const std::vector<Vertex>& vertices) const;

    bool operator==(const Colouring&) const = default;

private:
    std::size_t k_ = 0;
    std::vector<Colour> colours_;
};

/// Length-k vector over GF(2). Bit i-1 holds the parity of colour i.
class ParityVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    ParityVector() = default;
    explicit ParityVector(std::size_t k) : k_(k), words_((k + kWordBits - 1) / kWordBits, 0) {}

    std::size_t k() const noexcept { return k_; }
    /// Toggles the coordinate of colour c (1-based).
    void flip(Colour c) {
        const std::size_t i = c - 1;
        words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
    }
    bool test(Colour c) const {
        const std::size_t i = c - 1;
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
    }
    bool is_zero() const noexcept {
        for (Word w : words_)
            if (w) return false;
        return true;
    }
    ParityVector& operator^=(const ParityVector& other);
    friend ParityVector operator^(ParityVector a, const ParityVector& b) { return a ^= b; }
    bool operator==(const ParityVector&) const = default;

    const std::vector<Word>& words() const noexcept { return words_; }
    /// Bits as a 0/1 vector, colour 1 first.
    std::vector<int> bits() const;
    std::string to_string() const;
    std::size_t hash() const noexcept;

private:
    std::size_t k_ = 0;
    std::vector<Word> words_;
};

struct ParityVectorHash {
    std::size_t operator()(const ParityVector& v) const noexcept { return v.hash(); }
};

/// pv(V). Throws InvalidInput on a vertex outside the colouring's domain.
ParityVector parity_vector(const Colouring& colouring, const std::vector<Vertex>& vertices);

/// A path all of whose colours occur an even number of times.
struct ParityPathCertificate {
    Path path;
    ParityVector vector;

    /// Re-validates the certificate: simple path in `g`, zero vector, even vertex count.
    bool verify(const Graph& g, const Colouring& colouring) const;
};

/// Tree verifier: prefix parity vectors from vertex 0 plus binary-lifting LCA,
/// scanning vertex pairs (u, v), u < v, in ascending order. Throws InvalidInput
/// unless `tree` is a tree.
std::optional<ParityPathCertificate> find_parity_path_tree(const Graph& tree, const Colouring& colouring);

constexpr std::uint64_t kDefaultSearchExpansions = 100'000'000;

struct SearchBudget {
    std::uint64_t max_expansions = kDefaultSearchExpansions;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static SearchBudget with_seconds(double seconds);
};

struct SearchOptions {
    /// Skip extensions that can no longer repair the parity of some odd colour
    /// because no vertex of that colour is reachable through unused vertices.
    bool prune_unreachable_colours = true;
};

enum class SearchStatus { found, none, budget_exhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<ParityPathCertificate> certificate;
    std::uint64_t expansions = 0;
};

/// Exhaustive DFS over simple paths from each start s (ascending), extending by
/// ascending neighbour id; a path is reported only when its end exceeds s, so
/// each unordered endpoint pair is examined once per path.
SearchResult find_parity_path_general(const Graph& g, const Colouring& colouring,
                                      const SearchBudget& budget = {},
                                      const SearchOptions& options = {});

enum class Verdict { valid, invalid, indeterminate };

struct VerifyResult {
    Verdict verdict = Verdict::valid;
    std::optional<ParityPathCertificate> certificate;
    std::uint64_t expansions = 0;
};

/// True iff no parity path exists. Trees go to the polynomial verifier, other graphs to the DFS.
VerifyResult is_parity_vertex_colouring(const Graph& g, const Colouring& colouring,
                                        const SearchBudget& budget = {},
                                        const SearchOptions& options = {});

/// Convenience: throws InternalError if the verdict is indeterminate.
bool is_valid_colouring(const Graph& g, const Colouring& colouring);

/// Throws InvalidInput unless the colouring covers exactly the vertices of `g`.
void require_compatible(const Graph& g, const Colouring& colouring);

}  // namespace pvc
