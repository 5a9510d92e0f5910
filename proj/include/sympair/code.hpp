#pragma once

#include <vector>

#include "sympair/polynomial.hpp"

namespace sympair {

// One coordinate of the evaluation layout: which point gets evaluated there.
struct EvalPoint {
    enum class Tag { alpha, beta1, beta2 };
    Tag tag;
    int alpha_index;  // 1-based position among the alphas; 0 for the betas
    elem_t value;
};

struct PointSet {
    elem_t beta1;
    elem_t beta2;
    std::vector<elem_t> alphas;
};

// Canonical choice: beta1 and beta2 are the first two field elements and the
// alphas are the next m. Throws BadM unless 1 <= m <= q-2.
PointSet default_points(const FieldPtr& field, int m);

// Parameters of one evaluation code: messages are the polynomials of degree
// <= k-1 over the field, evaluated at a length-n layout built from m points
// alpha_1..alpha_m and two interleaved points beta_1, beta_2.
//
// With t = floor((k-1)/2) alphas per block and m1 = floor(m/t), the layout is
//
//   block j (j = 1..B):  alpha_{(j-1)t+1}, ..., alpha_{jt}, then beta_1 for
//                        odd j and beta_2 for even j,
//   tail:                alpha_{tB+1}, ..., alpha_m,
//
// where B = m1 when m1 is even and B = m1 - 1 when odd (so the beta columns
// always come in beta_1/beta_2 pairs), giving n = m + B.
class CodeSpec {
  public:
    // Canonical points via default_points.
    CodeSpec(FieldPtr field, int k, int m);

    // Explicit points: beta1 != beta2, alphas distinct, disjoint from the
    // betas, exactly m of them. Requires 3 <= k < m <= q-2.
    CodeSpec(FieldPtr field, int k, int m, elem_t beta1, elem_t beta2,
             std::vector<elem_t> alphas);

    const FieldPtr& field() const { return field_; }
    int k() const { return k_; }
    int m() const { return m_; }
    int t() const { return t_; }
    int m1() const { return m1_; }
    int blocks() const { return blocks_; }
    int n() const { return n_; }
    elem_t beta1() const { return beta1_; }
    elem_t beta2() const { return beta2_; }
    const std::vector<elem_t>& alphas() const { return alphas_; }
    const std::vector<EvalPoint>& layout() const { return layout_; }

  private:
    void validate_and_finish();

    FieldPtr field_;
    int k_ = 0, m_ = 0, t_ = 0, m1_ = 0, blocks_ = 0, n_ = 0;
    elem_t beta1_ = 0, beta2_ = 0;
    std::vector<elem_t> alphas_;
    std::vector<EvalPoint> layout_;
};

// Evaluate the message polynomial at every layout point. Throws
// DegreeTooHigh for deg f > k-1 and FieldMismatch for a foreign field.
std::vector<elem_t> encode(const CodeSpec& spec, const Polynomial& f);

// Row i = encode(x^i), i = 0..k-1.
std::vector<std::vector<elem_t>> generator_matrix(const CodeSpec& spec);

// Row rank over F via Gaussian elimination.
int matrix_rank(const Field& F, std::vector<std::vector<elem_t>> rows);

// Minimum pair distance the construction promises: n - k + 2, equivalently
// m + m1 - k + 2 for even m1 and m + m1 - k + 1 for odd m1.
int theoretical_dp(const CodeSpec& spec);

// Largest size a length-n code of minimum pair distance dp can have:
// q^(n - dp + 2). Throws BadDp unless 2 <= dp <= n.
BigInt singleton_pair_cap(std::uint64_t q, int n, int dp);

// True when q^k codewords meet the cap for the given minimum pair
// distance, i.e. dp == n - k + 2.
bool is_mds_pair(const CodeSpec& spec, int dp);

}  // namespace sympair
