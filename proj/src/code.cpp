#include "sympair/code.hpp"

#include <algorithm>
#include <set>

namespace sympair {

PointSet default_points(const FieldPtr& field, int m) {
    int q = int(field->q());
    if (m < 1 || m > q - 2) {
        throw BadM("need 1 <= m <= q-2 = " + std::to_string(q - 2) + ", got m = " +
                   std::to_string(m));
    }
    PointSet ps;
    ps.beta1 = field->elements()[0];
    ps.beta2 = field->elements()[1];
    ps.alphas.assign(field->elements().begin() + 2, field->elements().begin() + 2 + m);
    return ps;
}

CodeSpec::CodeSpec(FieldPtr field, int k, int m) : field_(std::move(field)), k_(k), m_(m) {
    PointSet ps = default_points(field_, m);
    beta1_ = ps.beta1;
    beta2_ = ps.beta2;
    alphas_ = std::move(ps.alphas);
    validate_and_finish();
}

CodeSpec::CodeSpec(FieldPtr field, int k, int m, elem_t beta1, elem_t beta2,
                   std::vector<elem_t> alphas)
    : field_(std::move(field)),
      k_(k),
      m_(m),
      beta1_(beta1),
      beta2_(beta2),
      alphas_(std::move(alphas)) {
    validate_and_finish();
}

void CodeSpec::validate_and_finish() {
    int q = int(field_->q());
    if (k_ < 3) {
        throw BadDimension("dimension k must be at least 3, got " + std::to_string(k_));
    }
    if (m_ <= k_ || m_ > q - 2) {
        throw BadM("need k < m <= q-2, got k = " + std::to_string(k_) + ", m = " +
                   std::to_string(m_) + ", q = " + std::to_string(q));
    }
    field_->check_element(beta1_);
    field_->check_element(beta2_);
    if (beta1_ == beta2_) throw BadPoints("beta1 and beta2 must be distinct");
    if (int(alphas_.size()) != m_) {
        throw BadPoints("expected " + std::to_string(m_) + " alphas, got " +
                        std::to_string(alphas_.size()));
    }
    std::set<elem_t> seen;
    for (elem_t a : alphas_) {
        field_->check_element(a);
        if (a == beta1_ || a == beta2_) {
            throw BadPoints("alphas must avoid beta1 and beta2");
        }
        if (!seen.insert(a).second) throw BadPoints("alphas must be distinct");
    }

    t_ = (k_ - 1) / 2;
    m1_ = m_ / t_;
    blocks_ = m1_ % 2 == 0 ? m1_ : m1_ - 1;
    n_ = m_ + blocks_;

    layout_.clear();
    layout_.reserve(std::size_t(n_));
    int next_alpha = 0;  // 0-based into alphas_
    for (int j = 1; j <= blocks_; ++j) {
        for (int s = 0; s < t_; ++s, ++next_alpha) {
            layout_.push_back({EvalPoint::Tag::alpha, next_alpha + 1, alphas_[std::size_t(next_alpha)]});
        }
        if (j % 2 == 1) {
            layout_.push_back({EvalPoint::Tag::beta1, 0, beta1_});
        } else {
            layout_.push_back({EvalPoint::Tag::beta2, 0, beta2_});
        }
    }
    for (; next_alpha < m_; ++next_alpha) {
        layout_.push_back({EvalPoint::Tag::alpha, next_alpha + 1, alphas_[std::size_t(next_alpha)]});
    }
}

std::vector<elem_t> encode(const CodeSpec& spec, const Polynomial& f) {
    if (f.field().get() != spec.field().get()) {
        throw FieldMismatch("message over " + f.field()->label() + ", code over " +
                            spec.field()->label());
    }
    if (f.degree() > spec.k() - 1) {
        throw DegreeTooHigh("message degree " + std::to_string(f.degree()) +
                            " exceeds k-1 = " + std::to_string(spec.k() - 1));
    }
    std::vector<elem_t> out;
    out.reserve(spec.layout().size());
    for (const EvalPoint& pt : spec.layout()) out.push_back(f.eval(pt.value));
    return out;
}

std::vector<std::vector<elem_t>> generator_matrix(const CodeSpec& spec) {
    std::vector<std::vector<elem_t>> rows;
    rows.reserve(std::size_t(spec.k()));
    for (int i = 0; i < spec.k(); ++i) {
        rows.push_back(encode(spec, Polynomial::monomial(spec.field(), 1, i)));
    }
    return rows;
}

int matrix_rank(const Field& F, std::vector<std::vector<elem_t>> rows) {
    if (rows.empty()) return 0;
    std::size_t ncols = rows[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        elem_t inv = F.inv(rows[row][col]);
        for (std::size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            elem_t factor = F.mul(rows[r][col], inv);
            for (std::size_t c = col; c < ncols; ++c) {
                rows[r][c] = F.sub(rows[r][c], F.mul(factor, rows[row][c]));
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

int theoretical_dp(const CodeSpec& spec) {
    return spec.m1() % 2 == 0 ? spec.m() + spec.m1() - spec.k() + 2
                              : spec.m() + spec.m1() - spec.k() + 1;
}

BigInt singleton_pair_cap(std::uint64_t q, int n, int dp) {
    if (dp < 2 || dp > n) {
        throw BadDp("pair distance must satisfy 2 <= dp <= n, got dp = " +
                    std::to_string(dp) + ", n = " + std::to_string(n));
    }
    BigInt cap = 1;
    for (int i = 0; i < n - dp + 2; ++i) cap *= q;
    return cap;
}

bool is_mds_pair(const CodeSpec& spec, int dp) {
    BigInt size = 1;
    for (int i = 0; i < spec.k(); ++i) size *= spec.field()->q();
    return size == singleton_pair_cap(spec.field()->q(), spec.n(), dp);
}

}  // namespace sympair
