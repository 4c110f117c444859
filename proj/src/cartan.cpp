#include "nichols/cartan.hpp"

#include <algorithm>

#include "nichols/error.hpp"

namespace nichols {

namespace {

struct PowerIndex {
    std::optional<long> n; // minimal n >= 0 with base^n == rhs
    bool exact = true;
};

// Solve base^n = rhs for n >= 0, base of infinite multiplicative order.
PowerIndex power_index(const Scalar& base, const Scalar& rhs, unsigned cap) {
    auto mb = as_zeta_monomial(base);
    auto mr = as_zeta_monomial(rhs);
    if (mb && mb->qexp != 0) {
        // the q-exponent pins the only candidate
        if (!mr) return {std::nullopt, true};
        if (mr->qexp % mb->qexp != 0) return {std::nullopt, true};
        long n = mr->qexp / mb->qexp;
        if (n < 0) return {std::nullopt, true};
        if (base.pow(n) == rhs) return {n, true};
        return {std::nullopt, true};
    }
    if (mb) {
        // constant base of infinite order: |coeff| != 1, so |base^n| is
        // strictly monotone in n and the scan below terminates on its own
        if (!mr || mr->qexp != 0) return {std::nullopt, true};
        Rat ab = abs(mb->coeff), ar = abs(mr->coeff);
        bool growing = ab > 1;
        Rat p(1);
        for (long n = 0;; ++n) {
            if (growing ? p > ar : p < ar) return {std::nullopt, true};
            if (p == ar && base.pow(n) == rhs) return {n, true};
            p *= ab;
        }
    }
    // non-monomial base: bounded scan
    Scalar p = Scalar::one(base.level());
    for (long n = 0; n <= static_cast<long>(cap); ++n) {
        if (p == rhs) return {n, true};
        p = p * base;
    }
    return {std::nullopt, false};
}

} // namespace

CartanEntry cartan_entry(const BraidingMatrix& m, unsigned i, unsigned j, unsigned n_max) {
    Scalar qt = m.qtilde(i, j); // checks indices and i != j
    if (qt.is_one()) return {true, 0, true};
    const Scalar& qii = m.at(i, i);
    Order o = order_of(qii);
    if (o.finite()) {
        if (o.value == 1) return {false, 0, true}; // q_ii = 1, no factor ever vanishes
        Scalar p = Scalar::one(qii.level());
        for (unsigned n = 0; n + 1 < o.value; ++n) {
            if ((p * qt).is_one()) return {true, -static_cast<long>(n), true};
            p = p * qii;
        }
        return {true, -static_cast<long>(o.value - 1), true}; // (N)_{q_ii} = 0
    }
    PowerIndex pi = power_index(qii, qt.inverse(), n_max);
    if (pi.n) return {true, -*pi.n, true};
    return {false, 0, pi.exact};
}

std::optional<std::vector<std::vector<long>>> cartan_type_exponents(const BraidingMatrix& m,
                                                                    unsigned n_max) {
    unsigned th = m.theta();
    std::vector<std::vector<long>> a(th, std::vector<long>(th, 0));
    for (unsigned i = 0; i < th; ++i) {
        a[i][i] = 2;
        const Scalar& qii = m.at(i, i);
        Order o = order_of(qii);
        for (unsigned j = 0; j < th; ++j) {
            if (i == j) continue;
            Scalar qt = m.qtilde(i, j);
            if (qt.is_one()) continue; // a_ij = 0
            if (o.finite()) {
                // scan the window (-N, 0]; qt != 1 rules out exponent 0
                bool hit = false;
                Scalar p = qii.inverse();
                for (unsigned n = 1; n < o.value; ++n) {
                    if (p == qt) {
                        a[i][j] = -static_cast<long>(n);
                        hit = true;
                        break;
                    }
                    p = p * qii.inverse();
                }
                if (!hit) return std::nullopt;
            } else {
                PowerIndex pi = power_index(qii, qt.inverse(), n_max);
                if (!pi.n) return std::nullopt;
                a[i][j] = -*pi.n;
            }
        }
    }
    return a;
}

/* ---- generalized Cartan matrix classification ---- */

const char* gcm_class_name(GcmClass c) {
    switch (c) {
        case GcmClass::Finite: return "finite";
        case GcmClass::Affine: return "affine";
        case GcmClass::Indefinite: return "indefinite";
        case GcmClass::NotApplicable: return "not applicable";
    }
    return "?";
}

namespace {

void check_gcm_shape(const std::vector<std::vector<long>>& a) {
    size_t th = a.size();
    if (th == 0) fail(Err::BadInput, "empty matrix");
    for (size_t i = 0; i < th; ++i) {
        if (a[i].size() != th) fail(Err::BadInput, "matrix must be square");
        if (a[i][i] != 2) fail(Err::BadInput, "diagonal entries must equal 2");
        for (size_t j = 0; j < th; ++j)
            if (i != j && a[i][j] > 0) fail(Err::BadInput, "off-diagonal entries must be <= 0");
    }
}

std::vector<std::vector<unsigned>> gcm_components(const std::vector<std::vector<long>>& a) {
    size_t th = a.size();
    std::vector<int> comp(th, -1);
    int next = 0;
    for (size_t s = 0; s < th; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<size_t> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            for (size_t w = 0; w < th; ++w)
                if (comp[w] < 0 && (a[v][w] != 0 || a[w][v] != 0)) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    std::vector<std::vector<unsigned>> out(static_cast<size_t>(next));
    for (size_t v = 0; v < th; ++v) out[static_cast<size_t>(comp[v])].push_back(static_cast<unsigned>(v));
    return out;
}

// d_i > 0 with d_i a_ij = d_j a_ji; input connected
std::vector<Rat> symmetrizer(const std::vector<std::vector<long>>& a) {
    size_t th = a.size();
    std::vector<Rat> d(th, Rat(0));
    d[0] = 1;
    std::vector<size_t> stack{0};
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        for (size_t w = 0; w < th; ++w) {
            if (v == w || (a[v][w] == 0 && a[w][v] == 0)) continue;
            if (a[v][w] == 0 || a[w][v] == 0)
                fail(Err::NotSymmetrizable, "zero entry paired with a nonzero transpose entry");
            Rat dw = d[v] * Rat(a[v][w]) / Rat(a[w][v]);
            if (d[w] == 0) {
                d[w] = dw;
                stack.push_back(w);
            } else if (d[w] != dw) {
                fail(Err::NotSymmetrizable, "inconsistent symmetrizer along a cycle");
            }
        }
    }
    for (auto& x : d) {
        if (x <= 0) fail(Err::NotSymmetrizable, "symmetrizer must be positive");
        x.canonicalize();
    }
    return d;
}

// determinant of the leading k x k block, exact rational Gaussian elimination
Rat leading_minor(std::vector<std::vector<Rat>> b, size_t k) {
    Rat det(1);
    for (size_t c = 0; c < k; ++c) {
        size_t piv = c;
        while (piv < k && b[piv][c] == 0) ++piv;
        if (piv == k) return Rat(0);
        if (piv != c) {
            std::swap(b[piv], b[c]);
            det = -det;
        }
        det *= b[c][c];
        for (size_t r = c + 1; r < k; ++r) {
            if (b[r][c] == 0) continue;
            Rat f = b[r][c] / b[c][c];
            for (size_t cc = c; cc < k; ++cc) b[r][cc] -= f * b[c][cc];
        }
    }
    det.canonicalize();
    return det;
}

} // namespace

GcmClass classify_gcm(const std::vector<std::vector<long>>& a) {
    check_gcm_shape(a);
    size_t th = a.size();
    if (gcm_components(a).size() > 1) fail(Err::Decomposable, "matrix must be indecomposable");
    std::vector<Rat> d = symmetrizer(a);
    std::vector<std::vector<Rat>> b(th, std::vector<Rat>(th));
    for (size_t i = 0; i < th; ++i)
        for (size_t j = 0; j < th; ++j) b[i][j] = d[i] * Rat(a[i][j]);
    bool head_pd = true; // leading minors 1..th-1 all positive
    for (size_t k = 1; k < th; ++k)
        if (leading_minor(b, k) <= 0) {
            head_pd = false;
            break;
        }
    Rat full = leading_minor(b, th);
    if (head_pd && full > 0) return GcmClass::Finite;
    // positive semidefinite with 1-dim kernel iff the (th-1)-block is
    // positive definite and the full determinant vanishes (interlacing)
    if (head_pd && full == 0) return GcmClass::Affine;
    return GcmClass::Indefinite;
}

std::vector<std::pair<std::vector<unsigned>, GcmClass>> classify_gcm_components(
    const std::vector<std::vector<long>>& a) {
    check_gcm_shape(a);
    std::vector<std::pair<std::vector<unsigned>, GcmClass>> out;
    for (const auto& verts : gcm_components(a)) {
        std::vector<std::vector<long>> sub(verts.size(), std::vector<long>(verts.size()));
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = 0; j < verts.size(); ++j) sub[i][j] = a[verts[i]][verts[j]];
        out.emplace_back(verts, classify_gcm(sub));
    }
    return out;
}

CartanData cartan_data(const BraidingMatrix& m, unsigned n_max) {
    unsigned th = m.theta();
    CartanData data;
    data.c.assign(th, std::vector<long>(th, 0));
    data.reflectable.assign(th, true);
    for (unsigned i = 0; i < th; ++i) {
        data.c[i][i] = 2;
        for (unsigned j = 0; j < th; ++j) {
            if (i == j) continue;
            CartanEntry e = cartan_entry(m, i, j, n_max);
            if (!e.reflectable) {
                data.reflectable[i] = false;
                if (!e.exact) data.bounded = true;
            } else {
                data.c[i][j] = e.value;
            }
        }
    }
    data.cartan_exponents = cartan_type_exponents(m, n_max);
    if (data.cartan_exponents) {
        try {
            data.gcm_class = classify_gcm(*data.cartan_exponents);
        } catch (const ToolError&) {
            data.gcm_class = GcmClass::NotApplicable; // decomposable or not symmetrizable
        }
    }
    return data;
}

} // namespace nichols
