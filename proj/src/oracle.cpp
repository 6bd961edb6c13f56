#include "obc/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "obc/codebook.hpp"
#include "obc/errors.hpp"

namespace obc::oracle {

namespace {

void check_range(std::uint32_t q) {
    if (q < 2 || q > kMaxEnumerationQ)
        throw RangeError("enumeration supports q in [2, " + std::to_string(kMaxEnumerationQ) +
                         "], got " + std::to_string(q));
}

std::string multiset_to_string(const DepthMultiset& depths) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < depths.size(); ++i)
        os << (i ? "," : "") << depths[i];
    os << "}";
    return os.str();
}

// memo[q] maps each distinct leaf-depth multiset to the number of full
// binary trees with q leaves realizing it.
const std::map<DepthMultiset, std::uint64_t>& memoized_trees(std::uint32_t q) {
    static std::vector<std::map<DepthMultiset, std::uint64_t>> memo(kMaxEnumerationQ + 1);
    auto& entry = memo[q];
    if (!entry.empty())
        return entry;
    if (q == 1) {
        entry[{0}] = 1;
        return entry;
    }
    for (std::uint32_t k = 1; k < q; ++k) {
        const auto& left = memoized_trees(k);
        const auto& right = memoized_trees(q - k);
        for (const auto& [ld, lc] : left) {
            for (const auto& [rd, rc] : right) {
                DepthMultiset merged;
                merged.reserve(q);
                for (unsigned d : ld)
                    merged.push_back(d + 1);
                for (unsigned d : rd)
                    merged.push_back(d + 1);
                std::sort(merged.begin(), merged.end());
                entry[merged] += lc * rc;
            }
        }
    }
    return entry;
}

} // namespace

std::map<DepthMultiset, std::uint64_t> enumerate_code_trees(std::uint32_t q) {
    check_range(q);
    return memoized_trees(q);
}

DyadicRational expected_length_of(const DepthMultiset& depths) {
    DyadicRational sum;
    for (unsigned d : depths)
        sum = sum + DyadicRational(std::int64_t(d), d);
    return sum;
}

DyadicRational kraft_sum(const DepthMultiset& depths) {
    DyadicRational sum;
    for (unsigned d : depths)
        sum = sum + DyadicRational::pow2_inv(d);
    return sum;
}

BruteForceResult brute_force_max_expected_length(std::uint32_t q) {
    check_range(q);
    BruteForceResult res;
    for (const auto& [depths, count] : memoized_trees(q)) {
        res.tree_count += count;
        DyadicRational v = expected_length_of(depths);
        if (res.maximizers.empty() || res.max_expected_length < v) {
            res.max_expected_length = v;
            res.maximizers = {depths};
        } else if (v == res.max_expected_length) {
            res.maximizers.push_back(depths);
        }
    }
    return res;
}

std::optional<DepthMultiset> exchange_improvement(const DepthMultiset& depths) {
    if (depths.size() < 2 || kraft_sum(depths) != DyadicRational(1))
        throw InvalidCodeError("depth multiset " + multiset_to_string(depths) +
                               " is not a complete prefix code (Kraft sum != 1)");
    DepthMultiset sorted = depths;
    std::sort(sorted.begin(), sorted.end());
    unsigned lo = sorted.front();
    unsigned hi = sorted.back();
    if (hi - lo < 2)
        return std::nullopt;
    // Split one leaf at the minimum depth into two children, merge the
    // deepest sibling pair into its parent. Kraft is preserved and the
    // expected length gains 2^-lo - 2^-(hi-1) > 0.
    DepthMultiset next;
    next.reserve(sorted.size());
    next.push_back(lo + 1);
    next.push_back(lo + 1);
    next.push_back(hi - 1);
    next.insert(next.end(), sorted.begin() + 1, sorted.end() - 2);
    std::sort(next.begin(), next.end());
    return next;
}

bool CertificateReport::all_pass() const {
    for (const auto& c : clauses)
        if (!c.pass)
            return false;
    return true;
}

std::string CertificateReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : clauses)
        os << c.id << " q=" << q << " " << (c.pass ? "PASS" : "FAIL") << " " << c.witness << "\n";
    return os.str();
}

CertificateReport certify_obc(std::uint32_t q) {
    check_range(q);
    CertificateReport rep;
    rep.q = q;

    BruteForceResult bf = brute_force_max_expected_length(q);
    DyadicRational closed = expected_length(q);
    rep.clauses.push_back({"max_equals_closed_form", bf.max_expected_length == closed,
                           "oracle=" + bf.max_expected_length.to_string() +
                               " closed_form=" + closed.to_string()});

    bool spread_ok = true;
    for (const auto& m : bf.maximizers)
        if (m.back() - m.front() > 1)
            spread_ok = false;
    rep.clauses.push_back({"maximizer_spread_le_1", spread_ok,
                           "maximizers=" + std::to_string(bf.maximizers.size())});

    Codebook cb = build_obc(q);
    DepthMultiset expected;
    for (std::uint32_t i = 0; i < cb.n1; ++i)
        expected.push_back(cb.floor_log);
    for (std::uint32_t i = 0; i < cb.n2; ++i)
        expected.push_back(cb.floor_log + 1);
    std::sort(expected.begin(), expected.end());

    bool counts_ok = bf.maximizers.size() == 1;
    for (const auto& m : bf.maximizers)
        if (m != expected)
            counts_ok = false;
    rep.clauses.push_back({"unique_maximizer_matches_split", counts_ok,
                           "expected=" + multiset_to_string(expected)});

    DepthMultiset built;
    for (const Codeword& w : cb.words)
        built.push_back(w.length);
    std::sort(built.begin(), built.end());
    rep.clauses.push_back({"codebook_lengths_match", built == expected,
                           "built=" + multiset_to_string(built)});
    return rep;
}

} // namespace obc::oracle
