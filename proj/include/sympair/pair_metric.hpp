#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sympair/field.hpp"

namespace sympair {

// Pair read of x = (x_0,...,x_{n-1}): the length-n vector of overlapping
// adjacent pairs ((x_0,x_1), (x_1,x_2), ..., (x_{n-1},x_0)), wrapping
// around cyclically. Needs n >= 2 (throws TooShort).
std::vector<std::pair<elem_t, elem_t>> pair_read(std::span<const elem_t> x);

int hamming_weight(std::span<const elem_t> x);

// Number of coordinates of the pair read that differ from (0,0).
int pair_weight(std::span<const elem_t> x);

enum class RunKind { zero, nonzero };

struct Run {
    RunKind kind;
    int length;
};

// Decomposition of x into maximal runs of zero / nonzero entries.
struct Shape {
    // Runs as read left to right (no wrap-around).
    std::vector<Run> runs;
    // Zero runs of the cyclic sequence: the first and last linear runs merge
    // into one when both are zero runs.
    int cyclic_zero_runs = 0;

    int linear_run_count() const { return int(runs.size()); }
};

Shape shape_decompose(std::span<const elem_t> x);

// Lower bound on pair_weight for nonzero x (throws ZeroVector otherwise):
//
//     pair_weight(x) >= hamming_weight(x) + ceil((l-1)/2)
//
// where l is the number of maximal runs in the linear decomposition. The
// exact value is hamming_weight(x) + Z with Z the number of *cyclic* zero
// runs, so the slack is Z - ceil((l-1)/2). Note that for x_0 != 0 and
// x_{n-1} != 0 (where l is odd) the exact excess is (l-1)/2, not (l+1)/2:
// the wrap-around pair (x_{n-1},x_0) is nonzero but contributes no new
// nonzero pair position beyond the linear count. Only the inequality is
// guaranteed; tests check it exhaustively.
int shape_bound(std::span<const elem_t> x);

// d_p(x,y) = pair_weight(x-y), subtraction in F. Throws LengthMismatch for
// different lengths and FieldMismatch for entries outside F.
int pair_distance(const Field& F, std::span<const elem_t> x, std::span<const elem_t> y);

int hamming_distance(const Field& F, std::span<const elem_t> x, std::span<const elem_t> y);

}  // namespace sympair
