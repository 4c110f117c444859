#include "nichols/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

#include "nichols/error.hpp"

namespace nichols {

namespace {

using IntMat = std::vector<std::vector<long>>;

// Row i of the Cartan matrix, or nullopt with *exact telling whether the
// failure was definitive or only a bounded scan.
std::optional<std::vector<long>> cartan_row(const BraidingMatrix& m, unsigned i, unsigned n_max,
                                            bool* exact) {
    unsigned th = m.theta();
    std::vector<long> row(th, 0);
    row[i] = 2;
    for (unsigned j = 0; j < th; ++j) {
        if (j == i) continue;
        CartanEntry e = cartan_entry(m, i, j, n_max);
        if (!e.reflectable) {
            if (exact) *exact = e.exact;
            return std::nullopt;
        }
        row[j] = e.value;
    }
    if (exact) *exact = true;
    return row;
}

BraidingMatrix reflect_with_row(const BraidingMatrix& m, const std::vector<long>& row,
                                unsigned i) {
    unsigned th = m.theta();
    std::vector<Scalar> t;
    t.reserve(size_t(th) * th);
    for (unsigned j = 0; j < th; ++j)
        for (unsigned k = 0; k < th; ++k)
            t.push_back(m.at(j, k) * m.at(i, k).pow(-row[j]) * m.at(j, i).pow(-row[k]) *
                        m.at(i, i).pow(row[j] * row[k]));
    return BraidingMatrix::raw(th, std::move(t));
}

IntMat identity_map(unsigned th) {
    IntMat s(th, std::vector<long>(th, 0));
    for (unsigned i = 0; i < th; ++i) s[i][i] = 1;
    return s;
}

IntMat compose(const IntMat& a, const IntMat& b) { // apply b, then a
    size_t th = a.size();
    IntMat c(th, std::vector<long>(th, 0));
    for (size_t r = 0; r < th; ++r)
        for (size_t k = 0; k < th; ++k) {
            if (a[r][k] == 0) continue;
            for (size_t col = 0; col < th; ++col) c[r][col] += a[r][k] * b[k][col];
        }
    return c;
}

bool is_identity(const IntMat& s) {
    for (size_t r = 0; r < s.size(); ++r)
        for (size_t c = 0; c < s.size(); ++c)
            if (s[r][c] != (r == c ? 1 : 0)) return false;
    return true;
}

bool is_unipotent(const IntMat& s) {
    size_t th = s.size();
    IntMat n = s;
    for (size_t i = 0; i < th; ++i) n[i][i] -= 1;
    IntMat p = n;
    for (size_t k = 1; k < th; ++k) p = compose(p, n);
    for (const auto& row : p)
        for (long v : row)
            if (v != 0) return false;
    return true;
}

enum class Sign { Positive, Negative, Mixed };

Sign sign_of(const std::vector<long>& v) {
    bool pos = false, neg = false;
    for (long x : v) {
        if (x > 0) pos = true;
        if (x < 0) neg = true;
    }
    if (pos && !neg) return Sign::Positive;
    if (neg && !pos) return Sign::Negative;
    return Sign::Mixed;
}

std::optional<unsigned> root_height(const Scalar& q) {
    Order o = order_of(q);
    if (o.finite() && o.value >= 2) return o.value;
    return std::nullopt;
}

struct NodeState {
    BraidingMatrix matrix;
    IntMat w; // composed root map, seed coordinates -> these coordinates
    std::vector<std::optional<std::vector<long>>> rows; // Cartan rows, filled on expansion
    std::map<std::vector<long>, Scalar> roots;
};

using RootQueue = std::deque<std::pair<unsigned, std::vector<long>>>;

struct Enumerator {
    Caps caps;
    bool rank2_connected = false;
    std::vector<NodeState> nodes;
    std::vector<GroupoidEdge> edges;
    std::map<std::string, unsigned> index_of; // diagram key -> node index
    std::deque<unsigned> todo;
    std::optional<std::pair<Verdict, std::string>> outcome;

    explicit Enumerator(const Caps& c) : caps(c) {}

    void stop(Verdict v, std::string reason) {
        if (!outcome) outcome = {v, std::move(reason)};
    }

    // Per-matrix detectors, then append. nullopt when a verdict stopped the run.
    std::optional<unsigned> add_node(BraidingMatrix m, IntMat w) {
        unsigned th = m.theta();
        for (unsigned i = 0; i < th; ++i) {
            if (!m.at(i, i).is_one()) continue;
            for (unsigned j = 0; j < th; ++j)
                if (j != i && !m.qtilde(i, j).is_one()) {
                    stop(Verdict::InfiniteDetected, "diagonal entry 1 at a connected vertex");
                    return std::nullopt;
                }
        }
        if (auto a = cartan_type_exponents(m, caps.cartan_n_max)) {
            try {
                for (const auto& comp : classify_gcm_components(*a))
                    if (comp.second == GcmClass::Affine) {
                        stop(Verdict::InfiniteDetected, "affine");
                        return std::nullopt;
                    }
            } catch (const ToolError&) {
                // exponent matrix outside the classifier's scope
            }
        }
        if (nodes.size() >= caps.max_matrices) {
            stop(Verdict::CapExceeded, "matrix cap");
            return std::nullopt;
        }
        unsigned idx = static_cast<unsigned>(nodes.size());
        nodes.push_back(NodeState{std::move(m), std::move(w),
                                  std::vector<std::optional<std::vector<long>>>(th), {}});
        todo.push_back(idx);
        return idx;
    }

    void expand(unsigned u, unsigned i) {
        bool exact = true;
        auto row = cartan_row(nodes[u].matrix, i, caps.cartan_n_max, &exact);
        if (!row) {
            if (exact)
                stop(Verdict::InfiniteDetected, "not reflectable");
            else
                stop(Verdict::CapExceeded, "Cartan scan cap");
            return;
        }
        nodes[u].rows[i] = *row;
        BraidingMatrix r = reflect_with_row(nodes[u].matrix, *row, i);
        std::string k = diagram(r).key();
        unsigned v;
        auto it = index_of.find(k);
        if (it == index_of.end()) {
            auto added = add_node(std::move(r), compose(simple_reflection(*row, i), nodes[u].w));
            if (!added) return;
            v = *added;
            index_of.emplace(std::move(k), v);
        } else {
            v = it->second;
            if (v == 0) {
                // loop back to the seed: composed map seed -> seed
                IntMat loop = compose(simple_reflection(*row, i), nodes[u].w);
                if (!is_identity(loop) && is_unipotent(loop)) {
                    stop(Verdict::InfiniteDetected, "shear");
                    return;
                }
            }
        }
        edges.push_back(GroupoidEdge{u, i, v});
    }

    void run_matrix_phase(const BraidingMatrix& seed) {
        rank2_connected = seed.theta() == 2 && !seed.qtilde(0, 1).is_one();
        auto first = add_node(seed, identity_map(seed.theta()));
        if (!first) return;
        index_of[diagram(seed).key()] = *first;
        while (!todo.empty() && !outcome) {
            unsigned u = todo.front();
            todo.pop_front();
            unsigned th = nodes[u].matrix.theta();
            for (unsigned i = 0; i < th && !outcome; ++i) expand(u, i);
        }
    }

    void insert_root(unsigned u, std::vector<long> beta, Scalar q, RootQueue& work) {
        long h = 0;
        for (long x : beta) h += x;
        if (h > caps.max_root_height) {
            stop(Verdict::CapExceeded, "root height cap");
            return;
        }
        auto [it, fresh] = nodes[u].roots.emplace(std::move(beta), std::move(q));
        if (!fresh) return;
        if (rank2_connected && it->second.is_one()) {
            stop(Verdict::InfiniteDetected, "root with self-braiding 1");
            return;
        }
        work.emplace_back(u, it->first);
    }

    void transport(unsigned src, const std::vector<long>& beta, unsigned dst,
                   std::vector<long> img, RootQueue& work) {
        Sign s = sign_of(img);
        if (s == Sign::Negative) return;
        if (s != Sign::Positive) throw std::logic_error("reflected root with mixed signs");
        Scalar q = bicharacter(nodes[dst].matrix, img, img);
        if (!(q == nodes[src].roots.at(beta)))
            throw std::logic_error("root self-braiding not constant along an edge");
        insert_root(dst, std::move(img), std::move(q), work);
    }

    void run_root_phase() {
        if (outcome) return;
        RootQueue work;
        for (unsigned u = 0; u < nodes.size() && !outcome; ++u) {
            unsigned th = nodes[u].matrix.theta();
            for (unsigned j = 0; j < th && !outcome; ++j) {
                std::vector<long> a(th, 0);
                a[j] = 1;
                insert_root(u, std::move(a), nodes[u].matrix.at(j, j), work);
            }
        }
        while (!work.empty() && !outcome) {
            auto [u, beta] = std::move(work.front());
            work.pop_front();
            for (const GroupoidEdge& e : edges) {
                if (outcome) return;
                if (e.from != u && e.to != u) continue;
                // crossing away from u always uses the reflection computed at u
                unsigned dst = e.from == u ? e.to : e.from;
                const auto& row = nodes[u].rows[e.vertex];
                if (!row) throw std::logic_error("recorded edge lost its Cartan row");
                transport(u, beta, dst, apply_map(simple_reflection(*row, e.vertex), beta), work);
            }
        }
    }

    GroupoidReport report() {
        GroupoidReport rep;
        rep.edges = std::move(edges);
        if (outcome) {
            rep.verdict = outcome->first;
            rep.reason = std::move(outcome->second);
        } else {
            rep.verdict = Verdict::FiniteSystem;
        }
        rep.nodes.reserve(nodes.size());
        for (NodeState& n : nodes) {
            GroupoidNode out{std::move(n.matrix), {}};
            out.roots.reserve(n.roots.size());
            for (auto& [coords, q] : n.roots) {
                Root r;
                r.coords = coords;
                r.height = root_height(q);
                r.q_beta = std::move(q);
                out.roots.push_back(std::move(r));
            }
            rep.nodes.push_back(std::move(out));
        }
        return rep;
    }
};

// One diagonal entry of finite order, the other not, connected. The shapes
// compatible with a finite root orbit are ord 2 against qtilde in
// {q^-1, q^-2} and ord 3 against qtilde = q^-1, q the other diagonal entry.
std::optional<std::string> semigeneric_violation(const BraidingMatrix& m) {
    Scalar qt = m.qtilde(0, 1);
    if (qt.is_one()) return std::nullopt;
    Order o0 = order_of(m.at(0, 0)), o1 = order_of(m.at(1, 1));
    if (!o0.finite() && !o1.finite()) return std::string("semigeneric filter");
    if (o0.finite() && o1.finite()) return std::nullopt;
    unsigned n = o0.finite() ? o0.value : o1.value;
    const Scalar& qg = o0.finite() ? m.at(1, 1) : m.at(0, 0);
    bool ok = (n == 2 && (qt == qg.pow(-1) || qt == qg.pow(-2))) || (n == 3 && qt == qg.pow(-1));
    if (!ok) return std::string("semigeneric filter");
    return std::nullopt;
}

} // namespace

BraidingMatrix reflect_matrix(const BraidingMatrix& m, unsigned i, unsigned n_max) {
    if (i >= m.theta()) fail(Err::IndexOutOfRange, "reflection vertex out of range");
    auto row = cartan_row(m, i, n_max, nullptr);
    if (!row)
        fail(Err::NotReflectable, "Cartan row " + std::to_string(i + 1) + " is undefined");
    return reflect_with_row(m, *row, i);
}

std::vector<std::vector<long>> simple_reflection(const std::vector<long>& c_row, unsigned i) {
    size_t th = c_row.size();
    if (i >= th) fail(Err::IndexOutOfRange, "reflection vertex out of range");
    IntMat s = identity_map(static_cast<unsigned>(th));
    for (size_t j = 0; j < th; ++j) s[i][j] = (j == i ? 1 : 0) - c_row[j];
    return s;
}

std::vector<long> apply_map(const std::vector<std::vector<long>>& s, const std::vector<long>& v) {
    size_t th = s.size();
    if (v.size() != th) fail(Err::BadInput, "coordinate length mismatch");
    std::vector<long> out(th, 0);
    for (size_t r = 0; r < th; ++r)
        for (size_t c = 0; c < th; ++c) out[r] += s[r][c] * v[c];
    return out;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::FiniteSystem: return "finite-system";
        case Verdict::InfiniteDetected: return "infinite-detected";
        case Verdict::CapExceeded: return "cap-exceeded";
    }
    return "?";
}

std::string GkValue::str() const {
    switch (kind) {
        case Finite: return std::to_string(value);
        case Infinite: return "infinite";
        default: return "unknown";
    }
}

GroupoidReport enumerate(const BraidingMatrix& m, const Caps& caps) {
    Enumerator e(caps);
    e.run_matrix_phase(m);
    e.run_root_phase();
    return e.report();
}

GkValue gk_dimension(const GroupoidReport& report) {
    if (report.verdict == Verdict::InfiniteDetected) return GkValue{GkValue::Infinite, 0};
    if (report.verdict == Verdict::CapExceeded) return GkValue{GkValue::Unknown, 0};
    unsigned n = 0;
    for (const Root& r : report.nodes.at(0).roots)
        if (!r.height) ++n;
    return GkValue{GkValue::Finite, n};
}

Rank2Decision decide_rank2(const BraidingMatrix& m, const Caps& caps) {
    if (m.theta() != 2) fail(Err::BadInput, "rank-2 decision needs theta == 2");
    const Scalar one = Scalar::one();
    const Scalar& q11 = m.at(0, 0);
    const Scalar& q22 = m.at(1, 1);
    const Scalar qt = m.qtilde(0, 1);
    const bool connected = !qt.is_one();

    auto infinite = [](std::string reason) {
        return Rank2Decision{false, std::move(reason), std::nullopt};
    };

    CartanEntry c12 = cartan_entry(m, 0, 1, caps.cartan_n_max);
    CartanEntry c21 = cartan_entry(m, 1, 0, caps.cartan_n_max);
    if ((!c12.reflectable && c12.exact) || (!c21.reflectable && c21.exact))
        return infinite("not reflectable");
    if (c12.reflectable && c21.reflectable && c12.value <= -3 && c21.value <= -3)
        return infinite("Cartan entries at most -3");

    Scalar q4 = q11.pow(4);
    if (!q4.is_one() && qt == q4 && q22 == q4) return infinite("q11^4 family");

    if (connected) {
        // p_mm = -1 with y_{mm+1} != 0 forces a double root for mm >= 1; the
        // mm = 0 case is excluded since x2^2 vanishes identically once
        // q22 = -1, independently of y_1.  The sequence p_mm is periodic in
        // mm with period dividing the cyclotomic level, so a bounded scan is
        // enough for torsion input and a sound partial check otherwise
        unsigned bound = std::min<unsigned>(std::max<unsigned>(m.level(), 16u), 256u);
        for (unsigned mm = 1; mm <= bound; ++mm) {
            Scalar pm = q11.pow(long(mm) * long(mm)) * qt.pow(mm) * q22;
            if (!(pm + one).is_zero()) continue;
            if (!(q_factorial(mm + 1, q11) * mu(mm + 1, q11, qt)).is_zero())
                return infinite("double root");
        }
    }

    if (connected) {
        Scalar f1 = q_int(2, q11) * (one - q11 * qt);
        Scalar f2 = q_int(2, q22) * (one - qt * q22);
        if (!f1.is_zero() && !f2.is_zero() && !(q11 * qt * qt * q22 + one).is_zero())
            return infinite("w0 obstruction");
    }

    if (connected && classify_class(m) == BraidClass::Semigeneric) {
        Order o0 = order_of(q11), o1 = order_of(q22);
        if (o0.finite() && o1.finite() && c12.reflectable) {
            // torsion diagonal with an infinite-order edge: one reflection
            // moves a diagonal entry out of torsion
            if (auto why = semigeneric_violation(reflect_matrix(m, 0, caps.cartan_n_max)))
                return infinite(*why);
        } else if (auto why = semigeneric_violation(m)) {
            return infinite(*why);
        }
    }

    GroupoidReport rep = enumerate(m, caps);
    if (rep.verdict == Verdict::FiniteSystem) {
        Rank2Decision d;
        d.finite = true;
        d.report = std::move(rep);
        return d;
    }
    if (rep.verdict == Verdict::InfiniteDetected) return infinite(rep.reason);
    fail(Err::CapExceeded, rep.reason);
}

} // namespace nichols
