#include <array>
#include <set>

#include "sympair/spectrum.hpp"

namespace sympair {

namespace {

// Degree <= 3 polynomial as its padded coefficient tuple c_0..c_3.
using PolyKey = std::array<elem_t, 4>;
using PolySet = std::set<PolyKey>;

PolyKey key_of(const Polynomial& f) {
    return {f.coeff(0), f.coeff(1), f.coeff(2), f.coeff(3)};
}

elem_t eval_key(const Field& F, const PolyKey& c, elem_t x) {
    elem_t acc = 0;
    for (std::size_t i = 4; i-- > 0;) acc = F.add(F.mul(acc, x), c[i]);
    return acc;
}

int degree_of(const PolyKey& c) {
    for (int i = 3; i >= 0; --i) {
        if (c[std::size_t(i)] != 0) return i;
    }
    return -1;  // zero polynomial
}

bool sets_disjoint(const PolySet& a, const PolySet& b) {
    for (const PolyKey& k : a) {
        if (b.count(k)) return false;
    }
    return true;
}

struct ClassDef {
    std::string label;
    std::string pattern;
    PolySet polys;
    std::uint64_t formula = 0;
};

}  // namespace

CensusTable root_class_census(const FieldPtr& field, int m, elem_t beta1, elem_t beta2,
                              const std::vector<elem_t>& alphas) {
    const Field& F = *field;
    const std::uint64_t q = F.q();
    if (q > 64) {
        throw TooLarge("census enumerates all q^4 low-degree polynomials; q = " +
                       std::to_string(q) + " is past the supported 64");
    }
    if (m < 1 || m > int(q) - 2) {
        throw BadM("census needs 1 <= m <= q-2, got m = " + std::to_string(m));
    }
    F.check_element(beta1);
    F.check_element(beta2);
    if (beta1 == beta2) throw BadPoints("beta1 and beta2 must be distinct");
    if (int(alphas.size()) != m) {
        throw BadPoints("expected " + std::to_string(m) + " alphas, got " +
                        std::to_string(alphas.size()));
    }
    std::set<elem_t> alpha_set;
    for (elem_t a : alphas) {
        F.check_element(a);
        if (a == beta1 || a == beta2) throw BadPoints("alphas must avoid the betas");
        if (!alpha_set.insert(a).second) throw BadPoints("alphas must be distinct");
    }

    const bool even = m % 2 == 0;
    const std::vector<elem_t> nonzero(F.elements().begin() + 1, F.elements().end());
    const std::array<elem_t, 2> beta{beta1, beta2};

    // Per marked point i: the prescribed root pool R_i and the wildcard pool
    // W_i = F_q \ ({beta_j} u R_i), which deliberately keeps beta_i itself.
    std::array<std::vector<elem_t>, 2> R, W;
    for (int i = 0; i < 2; ++i) {
        if (even) {
            R[std::size_t(i)] = alphas;
        } else {
            R[std::size_t(i)] = alphas;
            // A_1 drops alpha_m, A_2 drops alpha_1
            if (i == 0) R[0].pop_back();
            else R[1].erase(R[1].begin());
        }
        std::set<elem_t> r_set(R[std::size_t(i)].begin(), R[std::size_t(i)].end());
        for (elem_t x : F.elements()) {
            if (x != beta[std::size_t(1 - i)] && !r_set.count(x)) {
                W[std::size_t(i)].push_back(x);
            }
        }
    }

    const std::uint64_t u = std::uint64_t(R[0].size());  // m or m-1
    const std::uint64_t v = std::uint64_t(W[0].size());  // q-1-u
    auto roots_class = [&](elem_t fixed, const std::vector<std::vector<elem_t>>& tails) {
        PolySet s;
        for (elem_t a : nonzero) {
            for (const auto& tail : tails) {
                std::vector<elem_t> roots{fixed};
                roots.insert(roots.end(), tail.begin(), tail.end());
                s.insert(key_of(Polynomial::from_roots(field, a, roots)));
            }
        }
        return s;
    };

    std::vector<ClassDef> classes;

    {  // S: both marked points are roots
        std::vector<std::vector<elem_t>> none{{}}, out_a, in_a;
        for (elem_t c : F.elements()) {
            if (alpha_set.count(c)) in_a.push_back({c});
            else out_a.push_back({c});
        }
        classes.push_back({"S1", "a(x-b1)(x-b2)", roots_class(beta1, {{beta2}}), q - 1});
        PolySet s2, s3;
        for (elem_t a : nonzero) {
            for (const auto& c : out_a) {
                s2.insert(key_of(Polynomial::from_roots(field, a, {beta1, beta2, c[0]})));
            }
            for (const auto& c : in_a) {
                s3.insert(key_of(Polynomial::from_roots(field, a, {beta1, beta2, c[0]})));
            }
        }
        classes.push_back({"S2", "a(x-b1)(x-b2)(x-c), c outside A", std::move(s2),
                           (q - std::uint64_t(m)) * (q - 1)});
        classes.push_back({"S3", "a(x-b1)(x-b2)(x-c), c in A", std::move(s3),
                           std::uint64_t(m) * (q - 1)});
    }

    // Monic irreducible quadratics, shared by both D2 classes.
    std::vector<Polynomial> irred2;
    for (elem_t g0 : F.elements()) {
        for (elem_t g1 : F.elements()) {
            Polynomial g(field, {g0, g1, 1});
            if (is_irreducible(g)) irred2.push_back(g);
        }
    }

    for (int i = 0; i < 2; ++i) {
        const std::string bi = "b" + std::to_string(i + 1);
        const std::string ri = "R" + std::to_string(i + 1);
        const std::string wi = "W" + std::to_string(i + 1);
        const elem_t b = beta[std::size_t(i)];
        const auto& Ri = R[std::size_t(i)];
        const auto& Wi = W[std::size_t(i)];
        auto tag = [&](const std::string& s) { return s + "(" + std::to_string(i + 1) + ")"; };

        classes.push_back({tag("D1"), "a(x-" + bi + ")", roots_class(b, {{}}), q - 1});

        PolySet d2;
        for (elem_t a : nonzero) {
            Polynomial lin = Polynomial::from_roots(field, a, {b});
            for (const Polynomial& g : irred2) d2.insert(key_of(lin * g));
        }
        classes.push_back({tag("D2"), "a(x-" + bi + ")g, g monic irreducible quadratic",
                           std::move(d2), q * (q - 1) * (q - 1) / 2});

        std::vector<std::vector<elem_t>> r1, w1, r2, w2, rr, rw, ww;
        for (elem_t r : Ri) {
            r1.push_back({r});
            r2.push_back({r, r});
        }
        for (elem_t w : Wi) {
            w1.push_back({w});
            w2.push_back({w, w});
        }
        for (std::size_t x = 0; x < Ri.size(); ++x) {
            for (std::size_t y = x + 1; y < Ri.size(); ++y) rr.push_back({Ri[x], Ri[y]});
        }
        for (elem_t r : Ri) {
            for (elem_t w : Wi) rw.push_back({r, w});
        }
        for (std::size_t x = 0; x < Wi.size(); ++x) {
            for (std::size_t y = x + 1; y < Wi.size(); ++y) ww.push_back({Wi[x], Wi[y]});
        }

        classes.push_back({tag("D3"), "a(x-" + bi + ")(x-r), r in " + ri,
                           roots_class(b, r1), u * (q - 1)});
        classes.push_back({tag("D4"), "a(x-" + bi + ")(x-w), w in " + wi,
                           roots_class(b, w1), v * (q - 1)});
        classes.push_back({tag("D5"), "a(x-" + bi + ")(x-r)^2, r in " + ri,
                           roots_class(b, r2), u * (q - 1)});
        classes.push_back({tag("D6"), "a(x-" + bi + ")(x-w)^2, w in " + wi,
                           roots_class(b, w2), v * (q - 1)});
        classes.push_back({tag("D7"), "a(x-" + bi + ")(x-r)(x-r'), r != r' in " + ri,
                           roots_class(b, rr), u * (u - 1) / 2 * (q - 1)});
        classes.push_back({tag("D8"), "a(x-" + bi + ")(x-r)(x-w), r in " + ri + ", w in " + wi,
                           roots_class(b, rw), u * v * (q - 1)});
        classes.push_back({tag("D9"), "a(x-" + bi + ")(x-w)(x-w'), w != w' in " + wi,
                           roots_class(b, ww), v * (v - 1) / 2 * (q - 1)});
    }

    {  // M: no marked root
        PolySet m1, m2;
        PolyKey c{0, 0, 0, 0};
        for (std::uint64_t idx = 1; idx < q * q * q * q; ++idx) {
            std::uint64_t rest = idx;
            for (std::size_t j = 0; j < 4; ++j) {
                c[j] = elem_t(rest % q);
                rest /= q;
            }
            if (eval_key(F, c, beta1) == 0 || eval_key(F, c, beta2) == 0) continue;
            m2.insert(c);
            if (c[3] == 0) m1.insert(c);
        }
        classes.push_back({"M1", "deg <= 2, f(b1) != 0, f(b2) != 0", std::move(m1),
                           q * (q - 1) * (q - 1)});
        classes.push_back({"M2", "deg <= 3, f(b1) != 0, f(b2) != 0", std::move(m2),
                           q * q * (q - 1) * (q - 1)});
        classes.push_back({"M3", "a(x-a1)(x-am)",
                           roots_class(alphas.front(), {{alphas.back()}}), q - 1});
        PolySet m4;
        for (elem_t a : nonzero) {
            for (elem_t c4 : F.elements()) {
                if (c4 == beta1 || c4 == beta2) continue;
                m4.insert(key_of(
                    Polynomial::from_roots(field, a, {alphas.front(), alphas.back(), c4})));
            }
        }
        classes.push_back({"M4", "a(x-a1)(x-am)(x-c), c != b1, b2", std::move(m4),
                           (q - 2) * (q - 1)});
    }

    // Buckets by brute force over the q^4 - 1 nonzero polynomials.
    std::uint64_t bucket_s = 0, bucket_m = 0;
    std::array<std::uint64_t, 2> bucket_d{0, 0};
    {
        PolyKey c{0, 0, 0, 0};
        for (std::uint64_t idx = 1; idx < q * q * q * q; ++idx) {
            std::uint64_t rest = idx;
            for (std::size_t j = 0; j < 4; ++j) {
                c[j] = elem_t(rest % q);
                rest /= q;
            }
            bool z1 = eval_key(F, c, beta1) == 0, z2 = eval_key(F, c, beta2) == 0;
            if (z1 && z2) ++bucket_s;
            else if (z1) ++bucket_d[0];
            else if (z2) ++bucket_d[1];
            else ++bucket_m;
        }
    }

    // Indices into `classes`: 0..2 = S, 3..11 = D(1), 12..20 = D(2), 21..24 = M.
    auto class_at = [&](std::size_t idx) -> const ClassDef& { return classes[idx]; };
    const std::size_t s_lo = 0, s_hi = 3, d1_lo = 3, d1_hi = 12, d2_lo = 12, d2_hi = 21;
    const std::size_t m1_idx = 21, m2_idx = 22, m3_idx = 23, m4_idx = 24;

    bool membership = true;
    for (std::size_t idx = s_lo; idx < s_hi; ++idx) {
        for (const PolyKey& k : class_at(idx).polys) {
            membership &= eval_key(F, k, beta1) == 0 && eval_key(F, k, beta2) == 0;
        }
    }
    for (int i = 0; i < 2; ++i) {
        elem_t bi = beta[std::size_t(i)], bj = beta[std::size_t(1 - i)];
        for (std::size_t idx = i == 0 ? d1_lo : d2_lo; idx < (i == 0 ? d1_hi : d2_hi); ++idx) {
            for (const PolyKey& k : class_at(idx).polys) {
                membership &= eval_key(F, k, bi) == 0 && eval_key(F, k, bj) != 0;
            }
        }
    }
    for (std::size_t idx : {m1_idx, m2_idx, m3_idx, m4_idx}) {
        for (const PolyKey& k : class_at(idx).polys) {
            membership &= eval_key(F, k, beta1) != 0 && eval_key(F, k, beta2) != 0;
        }
    }
    for (const PolyKey& k : class_at(m1_idx).polys) membership &= degree_of(k) <= 2;

    bool disjoint = true;
    auto family_disjoint = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t x = lo; x < hi; ++x) {
            for (std::size_t y = x + 1; y < hi; ++y) {
                if (!sets_disjoint(class_at(x).polys, class_at(y).polys)) return false;
            }
        }
        return true;
    };
    disjoint &= family_disjoint(s_lo, s_hi);
    disjoint &= family_disjoint(d1_lo, d1_hi);
    disjoint &= family_disjoint(d2_lo, d2_hi);

    bool partition = true;
    auto family_union_size = [&](std::size_t lo, std::size_t hi) {
        PolySet all;
        for (std::size_t idx = lo; idx < hi; ++idx) {
            all.insert(class_at(idx).polys.begin(), class_at(idx).polys.end());
        }
        return std::uint64_t(all.size());
    };
    partition &= family_union_size(s_lo, s_hi) == bucket_s;
    partition &= family_union_size(d1_lo, d1_hi) == bucket_d[0];
    partition &= family_union_size(d2_lo, d2_hi) == bucket_d[1];
    partition &= std::uint64_t(class_at(m2_idx).polys.size()) == bucket_m;
    auto subset = [&](std::size_t inner, std::size_t outer) {
        for (const PolyKey& k : class_at(inner).polys) {
            if (!class_at(outer).polys.count(k)) return false;
        }
        return true;
    };
    partition &= subset(m3_idx, m1_idx) && subset(m1_idx, m2_idx) && subset(m4_idx, m2_idx);
    partition &= bucket_s + bucket_d[0] + bucket_d[1] + bucket_m == q * q * q * q - 1;

    CensusTable table;
    table.q = F.q();
    table.m = m;
    for (const ClassDef& cd : classes) {
        table.rows.push_back({cd.label, cd.pattern, std::uint64_t(cd.polys.size()), cd.formula});
    }
    table.checks = {membership, disjoint, partition};
    return table;
}

}  // namespace sympair
