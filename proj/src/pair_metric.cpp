#include "sympair/pair_metric.hpp"

namespace sympair {

namespace {

void require_pairable(std::span<const elem_t> x) {
    if (x.size() < 2) {
        throw TooShort("pair metric needs length >= 2, got " + std::to_string(x.size()));
    }
}

}  // namespace

std::vector<std::pair<elem_t, elem_t>> pair_read(std::span<const elem_t> x) {
    require_pairable(x);
    std::vector<std::pair<elem_t, elem_t>> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.emplace_back(x[i], x[(i + 1) % x.size()]);
    }
    return out;
}

int hamming_weight(std::span<const elem_t> x) {
    int w = 0;
    for (elem_t v : x) w += v != 0;
    return w;
}

int pair_weight(std::span<const elem_t> x) {
    require_pairable(x);
    int w = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        w += x[i] != 0 || x[(i + 1) % x.size()] != 0;
    }
    return w;
}

Shape shape_decompose(std::span<const elem_t> x) {
    Shape s;
    for (elem_t v : x) {
        RunKind kind = v == 0 ? RunKind::zero : RunKind::nonzero;
        if (s.runs.empty() || s.runs.back().kind != kind) {
            s.runs.push_back({kind, 1});
        } else {
            ++s.runs.back().length;
        }
    }
    int z = 0;
    for (const Run& r : s.runs) z += r.kind == RunKind::zero;
    if (s.runs.size() >= 2 && s.runs.front().kind == RunKind::zero &&
        s.runs.back().kind == RunKind::zero) {
        --z;  // first and last merge when read cyclically
    }
    s.cyclic_zero_runs = z;
    return s;
}

int shape_bound(std::span<const elem_t> x) {
    int wh = hamming_weight(x);
    if (wh == 0) throw ZeroVector("shape_bound is stated for nonzero vectors");
    int l = shape_decompose(x).linear_run_count();
    return wh + l / 2;  // l/2 == ceil((l-1)/2) for l >= 1
}

int pair_distance(const Field& F, std::span<const elem_t> x, std::span<const elem_t> y) {
    if (x.size() != y.size()) {
        throw LengthMismatch("pair_distance: lengths " + std::to_string(x.size()) +
                             " vs " + std::to_string(y.size()));
    }
    require_pairable(x);
    std::vector<elem_t> diff(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        F.check_element(x[i]);
        F.check_element(y[i]);
        diff[i] = F.sub(x[i], y[i]);
    }
    return pair_weight(diff);
}

int hamming_distance(const Field& F, std::span<const elem_t> x, std::span<const elem_t> y) {
    if (x.size() != y.size()) {
        throw LengthMismatch("hamming_distance: lengths " + std::to_string(x.size()) +
                             " vs " + std::to_string(y.size()));
    }
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        F.check_element(x[i]);
        F.check_element(y[i]);
        d += x[i] != y[i];
    }
    return d;
}

}  // namespace sympair
