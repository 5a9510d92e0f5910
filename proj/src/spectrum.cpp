#include "sympair/spectrum.hpp"

#include <algorithm>
#include <thread>

namespace sympair {

std::uint64_t message_count_checked(const CodeSpec& spec, std::uint64_t ceiling) {
    std::uint64_t q = spec.field()->q(), total = 1;
    for (int i = 0; i < spec.k(); ++i) {
        if (total > ceiling / q) {
            throw TooLarge("message space " + std::to_string(spec.field()->q()) + "^" +
                           std::to_string(spec.k()) + " exceeds the ceiling " +
                           std::to_string(ceiling));
        }
        total *= q;
    }
    return total;
}

namespace {

// Tally pair weights of the codewords for message indices [lo, hi), where
// the index encodes the message coefficients base q with c_0 fastest. The
// range must be aligned to multiples of q so each worker owns whole c_0
// sweeps. For one fixed prefix (c_1..c_{k-1}) the evaluations of
// g = f - c_0 are computed once per point; each c_0 then costs n additions
// and one pass of zero-pair counting.
void tally_range(const CodeSpec& spec, std::uint64_t lo, std::uint64_t hi,
                 std::vector<std::uint64_t>& counts) {
    const Field& F = *spec.field();
    const std::uint64_t q = F.q();
    const int k = spec.k();
    const std::size_t n = spec.layout().size();

    std::vector<elem_t> points(n);
    for (std::size_t i = 0; i < n; ++i) points[i] = spec.layout()[i].value;

    std::vector<elem_t> high(std::size_t(k) - 1);  // c_1..c_{k-1}
    std::vector<elem_t> geval(n);
    std::vector<elem_t> entry(n);

    for (std::uint64_t prefix = lo / q; prefix < hi / q; ++prefix) {
        std::uint64_t rest = prefix;
        for (std::size_t j = 0; j + 1 < std::size_t(k); ++j) {
            high[j] = elem_t(rest % q);
            rest /= q;
        }
        for (std::size_t i = 0; i < n; ++i) {
            elem_t x = points[i], acc = 0;
            for (std::size_t j = std::size_t(k) - 1; j-- > 0;) {
                acc = F.add(F.mul(acc, x), high[j]);
            }
            geval[i] = F.mul(acc, x);  // g(x) = c_1 x + ... + c_{k-1} x^{k-1}
        }
        for (std::uint64_t c0 = 0; c0 < q; ++c0) {
            for (std::size_t i = 0; i < n; ++i) entry[i] = F.add(geval[i], elem_t(c0));
            int zero_pairs = 0;
            bool prev_zero = entry[n - 1] == 0;
            for (std::size_t i = 0; i < n; ++i) {
                bool z = entry[i] == 0;
                zero_pairs += prev_zero && z;
                prev_zero = z;
            }
            ++counts[n - std::size_t(zero_pairs)];
        }
    }
}

}  // namespace

WeightDistribution pair_weight_distribution(const CodeSpec& spec, const EnumOptions& opts) {
    const std::uint64_t q = spec.field()->q();
    const std::uint64_t total = message_count_checked(spec, opts.ceiling);
    const std::size_t n = spec.layout().size();

    unsigned jobs = opts.jobs > 0 ? unsigned(opts.jobs) : std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    const std::uint64_t prefixes = total / q;
    jobs = unsigned(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(prefixes, 1)));

    std::vector<std::vector<std::uint64_t>> tallies(jobs, std::vector<std::uint64_t>(n + 1, 0));
    if (jobs == 1) {
        tally_range(spec, 0, total, tallies[0]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            std::uint64_t lo = prefixes * w / jobs * q;
            std::uint64_t hi = prefixes * (w + 1) / jobs * q;
            workers.emplace_back(tally_range, std::cref(spec), lo, hi, std::ref(tallies[w]));
        }
        for (auto& th : workers) th.join();
    }

    WeightDistribution wd;
    for (std::size_t w = 0; w <= n; ++w) {
        std::uint64_t c = 0;
        for (const auto& t : tallies) c += t[w];
        if (c > 0) {
            wd.counts[int(w)] = c;
            wd.total += c;
        }
    }
    return wd;
}

int brute_min_pair_distance(const CodeSpec& spec, const EnumOptions& opts) {
    WeightDistribution wd = pair_weight_distribution(spec, opts);
    if (wd.counts.count(0) && wd.counts.at(0) > 1) return 0;  // message collision
    for (const auto& [w, c] : wd.counts) {
        if (w > 0 && c > 0) return w;
    }
    return 0;
}

namespace {

void check_closed_form_params(std::uint32_t q, int m, int k) {
    if (m <= k || m > int(q) - 2) {
        throw BadParams("closed form for k = " + std::to_string(k) + " needs " +
                        std::to_string(k) + " < m <= q-2, got m = " + std::to_string(m) +
                        ", q = " + std::to_string(q));
    }
}

std::uint64_t narrow(const BigInt& v) {
    if (v < 0 || v > BigInt(UINT64_MAX)) {
        throw TooLarge("count does not fit in 64 bits");
    }
    return v.convert_to<std::uint64_t>();
}

WeightDistribution distribution_from(const std::map<int, BigInt>& counts) {
    WeightDistribution wd;
    for (const auto& [w, c] : counts) {
        if (c == 0) continue;
        std::uint64_t cc = narrow(c);
        wd.counts[w] = cc;
        wd.total += cc;
    }
    return wd;
}

}  // namespace

WeightDistribution closed_form_a3(std::uint32_t q, int m) {
    check_closed_form_params(q, m, 3);
    const BigInt Q = q, M = m;
    std::map<int, BigInt> counts;
    counts[0] = 1;
    if (m % 2 == 0) {
        counts[2 * m - 1] = 2 * M * (Q - 1);
        counts[2 * m] = (Q * Q + Q - 2 * M + 1) * (Q - 1);
    } else {
        counts[2 * m - 2] = (2 * M - 1) * (Q - 1);
        counts[2 * m - 1] = (Q * Q + Q - 2 * M + 2) * (Q - 1);
    }
    return distribution_from(counts);
}

WeightDistribution closed_form_a4(std::uint32_t q, int m) {
    check_closed_form_params(q, m, 4);
    const BigInt Q = q, M = m;
    std::map<int, BigInt> counts;
    counts[0] = 1;
    if (m % 2 == 0) {
        counts[2 * m - 2] = M * M * (Q - 1);
        counts[2 * m - 1] = 2 * M * (Q + 1 - M) * (Q - 1);
        counts[2 * m] = (Q * Q * Q + Q * Q + Q + 1 + M * M - 2 * M * (Q + 1)) * (Q - 1);
    } else {
        // Odd m: the layout ends ..., beta2, alpha_m and wraps to alpha_1, so
        // three root patterns reach weight 2m-3 (two adjacent zero pairs):
        // a zero at an interior alpha flanked by the two vanishing marked
        // columns ((m-2)(q-1) polynomials), a pair of zeros among the alphas
        // adjacent to the one vanishing marked point (2*C(m-1,2)(q-1)), and a
        // zero at both wrap-adjacent alphas alpha_1, alpha_m next to a zero
        // marked column (2(q-1)). Hence the m^2-2m+2 below; the other two
        // weights follow by the same adjacency count and the q^4 total.
        counts[2 * m - 3] = (M * M - 2 * M + 2) * (Q - 1);
        counts[2 * m - 2] = ((2 * M - 1) * Q - 2 * M * M + 6 * M - 5) * (Q - 1);
        counts[2 * m - 1] = (Q * Q * Q + Q * Q + (2 - 2 * M) * Q + M * M - 4 * M + 4) * (Q - 1);
    }
    return distribution_from(counts);
}

DistributionDiff compare_distributions(const WeightDistribution& enumerated,
                                       const WeightDistribution& closed_form) {
    DistributionDiff diff;
    diff.match = true;
    for (const auto& [w, c] : enumerated.counts) diff.rows[w].enumerated = c;
    for (const auto& [w, c] : closed_form.counts) diff.rows[w].closed_form = c;
    for (const auto& [w, row] : diff.rows) {
        if (row.enumerated != row.closed_form) diff.match = false;
    }
    return diff;
}

std::map<int, EnumWitness> find_weight_witnesses(const CodeSpec& spec,
                                                 const std::set<int>& weights,
                                                 const EnumOptions& opts) {
    const Field& F = *spec.field();
    const std::uint64_t q = F.q();
    const std::uint64_t total = message_count_checked(spec, opts.ceiling);
    const std::size_t n = spec.layout().size();

    std::map<int, EnumWitness> found;
    if (weights.empty()) return found;

    std::vector<elem_t> coeffs(std::size_t(spec.k()));
    std::vector<elem_t> entry(n);
    for (std::uint64_t idx = 0; idx < total && found.size() < weights.size(); ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            coeffs[j] = elem_t(rest % q);
            rest /= q;
        }
        for (std::size_t i = 0; i < n; ++i) {
            elem_t x = spec.layout()[i].value, acc = 0;
            for (std::size_t j = coeffs.size(); j-- > 0;) {
                acc = F.add(F.mul(acc, x), coeffs[j]);
            }
            entry[i] = acc;
        }
        int zero_pairs = 0;
        bool prev_zero = entry[n - 1] == 0;
        for (std::size_t i = 0; i < n; ++i) {
            bool z = entry[i] == 0;
            zero_pairs += prev_zero && z;
            prev_zero = z;
        }
        int w = int(n) - zero_pairs;
        if (weights.count(w) && !found.count(w)) {
            found[w] = EnumWitness{idx, coeffs, entry, w};
        }
    }
    return found;
}

bool CensusTable::all_match() const {
    for (const CensusRow& r : rows) {
        if (r.enumerated != r.formula) return false;
    }
    return checks.membership && checks.disjoint && checks.partition;
}

CensusTable root_class_census(const FieldPtr& field, int m) {
    PointSet ps = default_points(field, m);
    return root_class_census(field, m, ps.beta1, ps.beta2, ps.alphas);
}

CensusTable root_class_census(const CodeSpec& spec) {
    return root_class_census(spec.field(), spec.m(), spec.beta1(), spec.beta2(),
                             spec.alphas());
}

}  // namespace sympair
