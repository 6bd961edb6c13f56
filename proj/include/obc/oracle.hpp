#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "obc/rational.hpp"

namespace obc::oracle {

// Leaf-depth multiset of a full binary tree, depths sorted ascending.
using DepthMultiset = std::vector<unsigned>;

inline constexpr std::uint32_t kMaxEnumerationQ = 14;

// Every distinct leaf-depth multiset of a full binary tree with q leaves,
// mapped to the number of trees realizing it (counts sum to Catalan(q-1)).
std::map<DepthMultiset, std::uint64_t> enumerate_code_trees(std::uint32_t q);

DyadicRational expected_length_of(const DepthMultiset& depths);
DyadicRational kraft_sum(const DepthMultiset& depths);

struct BruteForceResult {
    DyadicRational max_expected_length;
    std::vector<DepthMultiset> maximizers;
    std::uint64_t tree_count = 0; // with multiplicity, = Catalan(q-1)
};

BruteForceResult brute_force_max_expected_length(std::uint32_t q);

// One step of the optimality proof's exchange: split a shallowest leaf,
// merge the deepest sibling pair. Fires only when max - min >= 2 and
// strictly increases the expected length.
std::optional<DepthMultiset> exchange_improvement(const DepthMultiset& depths);

struct CertificateClause {
    std::string id;
    bool pass = false;
    std::string witness;
};

struct CertificateReport {
    std::uint32_t q = 0;
    std::vector<CertificateClause> clauses;
    bool all_pass() const;
    // One line per clause: "<id> q=<q> PASS|FAIL <witness>"
    std::string to_text() const;
};

// Checks the brute-force maximum against the closed form, the depth-spread
// bound, the n1/n2 split, and the constructed codebook's lengths.
CertificateReport certify_obc(std::uint32_t q);

} // namespace obc::oracle
