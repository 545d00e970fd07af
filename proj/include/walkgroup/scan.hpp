#pragma once

// Deterministic scans over weight spaces. Each supported step direction
// ranges over the fractions p/q in lowest terms with 1 <= p <= q <= D,
// ordered by (q, p); grids are normalized to sum 1 and classified. The
// enumeration is lexicographic over the support positions, so exhaustive
// runs need no seed; when the space exceeds the limit, indices are sampled
// with a seeded generator instead. Work items are independent and can run
// on several threads; results are merged in enumeration order, so output
// never depends on scheduling.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "walkgroup/classify.hpp"
#include "walkgroup/errors.hpp"
#include "walkgroup/qrt.hpp"
#include "walkgroup/weights.hpp"

namespace walkgroup {

struct ScanOptions {
    std::string support = "11111111";  // step_directions order; '1'/'x'/'*' = allowed
    int denominator_max = 2;
    std::optional<int> target_order;       // |H| to collect
    std::optional<std::uint64_t> limit;    // max instances; sampling above this
    int jobs = 1;
    std::uint64_t seed = 0;                // used only when sampling
    bool oracle_on_hits = false;
    bool collect_finite = false;           // keep every finite-order instance
    ClassifyOptions classify_options{};
};

struct ScanHit {
    Mat3 raw;  // pre-normalization weights
    GroupOrderResult result;
    std::optional<OrbitEstimate> oracle;
};

struct ScanOutcome {
    std::uint64_t space = 0;       // full enumeration size
    std::uint64_t enumerated = 0;  // instances actually classified
    bool sampled = false;
    std::map<std::string, std::size_t> histogram;
    std::vector<ScanHit> hits;
};

inline std::string verdict_key(const GroupOrderResult& r) {
    switch (r.verdict) {
        case Verdict::finite: return "finite:" + std::to_string(*r.group_order);
        case Verdict::infinite: return "infinite";
        case Verdict::degenerate:
            return std::string("degenerate:") + degenerate_reason_name(*r.reason);
    }
    return "unknown";
}

namespace detail {

inline std::vector<Rational> scan_values(int denominator_max) {
    std::vector<Rational> out;
    for (int q = 1; q <= denominator_max; ++q)
        for (int p = 1; p <= q; ++p)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    return out;
}

inline std::vector<std::size_t> support_positions(const std::string& mask) {
    if (mask.size() != step_directions.size())
        throw walk_error(errc::parse_error, "support mask must have 8 characters");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        const char ch = mask[i];
        if (ch == '1' || ch == 'x' || ch == '*')
            out.push_back(i);
        else if (ch != '0' && ch != '.' && ch != '-')
            throw walk_error(errc::parse_error,
                             std::string("bad support mask character '") + ch + "'");
    }
    if (out.empty()) throw walk_error(errc::parse_error, "empty support mask");
    return out;
}

// values^positions with overflow capping.
inline std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (out > UINT64_MAX / base) return UINT64_MAX;
        out *= base;
    }
    return out;
}

inline Mat3 grid_for_index(std::uint64_t index, const std::vector<Rational>& values,
                           const std::vector<std::size_t>& positions) {
    Mat3 raw{};
    // lexicographic: the first support position varies slowest
    std::uint64_t rest = index;
    const auto v = static_cast<std::uint64_t>(values.size());
    for (std::size_t k = positions.size(); k-- > 0;) {
        const auto [i, j] = step_directions[positions[k]];
        raw[static_cast<std::size_t>(1 - i)][static_cast<std::size_t>(1 - j)] = values[static_cast<std::size_t>(rest % v)];
        rest /= v;
    }
    return raw;
}

}  // namespace detail

inline ScanOutcome run_scan(const ScanOptions& options) {
    const std::vector<Rational> values = detail::scan_values(options.denominator_max);
    const std::vector<std::size_t> positions = detail::support_positions(options.support);
    ScanOutcome outcome;
    outcome.space = detail::checked_pow(values.size(), positions.size());

    std::vector<std::uint64_t> indices;
    if (options.limit && *options.limit < outcome.space) {
        outcome.sampled = true;
        std::mt19937_64 rng(options.seed);
        std::unordered_set<std::uint64_t> seen;
        while (indices.size() < *options.limit) {
            const std::uint64_t ix = rng() % outcome.space;
            if (seen.insert(ix).second) indices.push_back(ix);
        }
    } else {
        indices.resize(static_cast<std::size_t>(outcome.space));
        std::iota(indices.begin(), indices.end(), std::uint64_t{0});
    }
    outcome.enumerated = indices.size();

    struct Entry {
        Mat3 raw;
        GroupOrderResult result;
    };
    std::vector<std::optional<Entry>> entries(indices.size());

    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t k = first; k < indices.size(); k += stride) {
            Mat3 raw = detail::grid_for_index(indices[k], values, positions);
            GroupOrderResult r = classify(validate_weights(raw, /*normalize=*/true),
                                          options.classify_options);
            entries[k] = Entry{std::move(raw), std::move(r)};
        }
    };
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1 || indices.size() < 2) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(work, static_cast<std::size_t>(t), static_cast<std::size_t>(jobs));
        for (auto& th : pool) th.join();
    }

    for (auto& entry : entries) {
        const GroupOrderResult& r = entry->result;
        ++outcome.histogram[verdict_key(r)];
        const bool is_target = options.target_order && r.verdict == Verdict::finite &&
                               *r.group_order == *options.target_order;
        const bool keep = is_target || (options.collect_finite && r.verdict == Verdict::finite);
        if (!keep) continue;
        ScanHit hit{entry->raw, entry->result, std::nullopt};
        if (options.oracle_on_hits)
            hit.oracle = estimate_orbit_order(hit.result.weights, 16, mazur_max_order,
                                              options.seed);
        outcome.hits.push_back(std::move(hit));
    }
    return outcome;
}

}  // namespace walkgroup
