#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sympair/code.hpp"

namespace sympair {

struct EnumOptions {
    int jobs = 0;                          // worker threads; 0 = hardware count
    std::uint64_t ceiling = 100'000'000;   // refuse enumerations past this many messages
};

struct WeightDistribution {
    std::map<int, std::uint64_t> counts;  // pair weight -> number of codewords
    std::uint64_t total = 0;              // sum of counts
};

// q^k, guarded: throws TooLarge when the message space exceeds `ceiling`.
std::uint64_t message_count_checked(const CodeSpec& spec, std::uint64_t ceiling);

// Exhaustive pair-weight distribution over all q^k messages. Deterministic:
// the result is independent of opts.jobs (workers own disjoint index ranges
// and their tallies are merged by summation).
WeightDistribution pair_weight_distribution(const CodeSpec& spec,
                                            const EnumOptions& opts = {});

// Smallest pair weight over the nonzero codewords; 0 if distinct messages
// collide (rank < k), which no valid instance of this construction does.
int brute_min_pair_distance(const CodeSpec& spec, const EnumOptions& opts = {});

// Closed-form pair-weight distributions for k = 3 and k = 4 with the
// canonical layout. Both need m <= q-2; a3 needs m > 3, a4 needs m > 4.
// Even m (three weights for k=3, counts over weights 0, 2m-1, 2m):
//   a3: 1, 2m(q-1), (q^2+q-2m+1)(q-1)
// Odd m (weights 0, 2m-2, 2m-1):
//   a3: 1, (2m-1)(q-1), (q^2+q-2m+2)(q-1)
// and for k = 4, even m (weights 0, 2m-2, 2m-1, 2m):
//   a4: 1, m^2(q-1), 2m(q+1-m)(q-1), (q^3+q^2+q+1+m^2-2m(q+1))(q-1)
// odd m (weights 0, 2m-3, 2m-2, 2m-1):
//   a4: 1, (m^2-2m+2)(q-1), ((2m-1)q-2m^2+6m-5)(q-1),
//       (q^3+q^2+(2-2m)q+m^2-4m+4)(q-1)
// Every formula is cross-checked against the exhaustive enumeration in the
// tests; the odd-m k=4 coefficients count the weight-(2m-3) root patterns
// that the wrap-around adjacency of alpha_1 and alpha_m creates (see the
// comment in the implementation).
WeightDistribution closed_form_a3(std::uint32_t q, int m);
WeightDistribution closed_form_a4(std::uint32_t q, int m);

struct DiffRow {
    std::uint64_t enumerated = 0;
    std::uint64_t closed_form = 0;
};

struct DistributionDiff {
    bool match = false;
    std::map<int, DiffRow> rows;  // union of weights from both sides
};

DistributionDiff compare_distributions(const WeightDistribution& enumerated,
                                       const WeightDistribution& closed_form);

// First (smallest-index) codeword of each requested pair weight. Message
// index idx encodes the coefficients base q, constant coefficient fastest:
// c_j = (idx / q^j) mod q.
struct EnumWitness {
    std::uint64_t index = 0;
    std::vector<elem_t> coeffs;   // c_0..c_{k-1}
    std::vector<elem_t> entries;  // the codeword
    int weight = 0;
};

std::map<int, EnumWitness> find_weight_witnesses(const CodeSpec& spec,
                                                 const std::set<int>& weights,
                                                 const EnumOptions& opts = {});

// ---------------------------------------------------------------------------
// Root-class census.
//
// Fix two distinct marked points beta_1, beta_2 and m further points
// A = {alpha_1..alpha_m} (all distinct from the betas). The nonzero
// polynomials f of degree <= 3 split into four buckets by their values at
// the marked points:
//
//   bucket S:     f(beta_1) = f(beta_2) = 0          (q^2 - 1 of them)
//   bucket D(i):  f(beta_i) = 0, f(beta_j) != 0      (q^2(q-1) each)
//   bucket M:     f(beta_1) != 0, f(beta_2) != 0     (q^2(q-1)^2)
//
// Each bucket is refined into classes by root structure relative to
//   R_i = A          and W_i = F_q \ ({beta_j} u A)    for even m,
//   R_i = A_i        and W_i = F_q \ ({beta_j} u A_i)  for odd m,
// where A_1 = A \ {alpha_m}, A_2 = A \ {alpha_1} and j = 3-i. (Note W_i
// contains beta_i itself, which is how the classes below cover repeated
// roots at beta_i.) The census enumerates every class as an explicit set of
// polynomials, checks its size against the closed-form cardinality, checks
// each member lands in the claimed bucket, checks the classes inside each
// bucket are pairwise disjoint (the M classes are nested instead:
// M3 c M1 c M2 and M4 c M2), and checks they exactly fill their bucket.
//
//   S1       a(x-b1)(x-b2)                              q-1
//   S2       a(x-b1)(x-b2)(x-c), c not in A             (q-m)(q-1)
//   S3       a(x-b1)(x-b2)(x-c), c in A                 m(q-1)
//   D1(i)    a(x-bi)                                    q-1
//   D2(i)    a(x-bi)g, g monic irreducible quadratic    q(q-1)^2/2
//   D3(i)    a(x-bi)(x-r),        r in R_i              |R|(q-1)
//   D4(i)    a(x-bi)(x-w),        w in W_i              |W|(q-1)
//   D5(i)    a(x-bi)(x-r)^2,      r in R_i              |R|(q-1)
//   D6(i)    a(x-bi)(x-w)^2,      w in W_i              |W|(q-1)
//   D7(i)    a(x-bi)(x-r)(x-r'),  r != r' in R_i        C(|R|,2)(q-1)
//   D8(i)    a(x-bi)(x-r)(x-w),   r in R_i, w in W_i    |R||W|(q-1)
//   D9(i)    a(x-bi)(x-w)(x-w'),  w != w' in W_i        C(|W|,2)(q-1)
//   M1       deg <= 2, no marked root                   q(q-1)^2
//   M2       deg <= 3, no marked root                   q^2(q-1)^2
//   M3       a(x-alpha_1)(x-alpha_m)                    q-1
//   M4       a(x-alpha_1)(x-alpha_m)(x-c), c unmarked   (q-2)(q-1)
// ---------------------------------------------------------------------------

struct CensusRow {
    std::string label;        // "S1", "D3(2)", "M4", ...
    std::string pattern;      // the parametrization, as in the table above
    std::uint64_t enumerated = 0;
    std::uint64_t formula = 0;
};

struct CensusChecks {
    bool membership = false;  // every member lies in its claimed bucket
    bool disjoint = false;    // classes within S / D(1) / D(2) are pairwise disjoint
    bool partition = false;   // each bucket is exactly covered; buckets sum to q^4-1
};

struct CensusTable {
    std::uint32_t q = 0;
    int m = 0;
    std::vector<CensusRow> rows;
    CensusChecks checks;

    bool all_match() const;   // every row enumerated == formula and all checks hold
};

// Throws BadM unless 1 <= m <= q-2; the points must be distinct and the
// alphas must avoid both betas (BadPoints).
CensusTable root_class_census(const FieldPtr& field, int m, elem_t beta1, elem_t beta2,
                              const std::vector<elem_t>& alphas);

// Same with the canonical points from default_points.
CensusTable root_class_census(const FieldPtr& field, int m);

// Census over the spec's own points.
CensusTable root_class_census(const CodeSpec& spec);

}  // namespace sympair
