#include "nichols/braiding.hpp"

#include <algorithm>
#include <sstream>

#include "nichols/error.hpp"

namespace nichols {

void BraidingMatrix::check_shape() const {
    if (theta_ == 0) fail(Err::BadInput, "rank must be at least 1");
    if (entries_.size() != static_cast<size_t>(theta_) * theta_)
        fail(Err::BadInput, "expected " + std::to_string(theta_) + "x" + std::to_string(theta_) +
                                " entries");
    for (const auto& e : entries_)
        if (e.is_zero()) fail(Err::InvalidEntry, "braiding entries must be nonzero");
}

void BraidingMatrix::lift_entries() {
    unsigned M = 1;
    for (const auto& e : entries_) M = lcm_u(M, e.level());
    for (auto& e : entries_) e = e.lifted(M);
    m_ = M;
}

BraidingMatrix::BraidingMatrix(unsigned theta, std::vector<Scalar> entries) {
    theta_ = theta;
    entries_ = std::move(entries);
    check_shape();
    for (unsigned i = 0; i < theta_; ++i)
        if (at(i, i).is_one())
            fail(Err::InvalidDiagonal, "q_" + std::to_string(i + 1) + std::to_string(i + 1) +
                                           " must differ from 1");
    lift_entries();
}

BraidingMatrix BraidingMatrix::raw(unsigned theta, std::vector<Scalar> entries) {
    BraidingMatrix m;
    m.theta_ = theta;
    m.entries_ = std::move(entries);
    m.check_shape();
    m.lift_entries();
    return m;
}

const Scalar& BraidingMatrix::at(unsigned i, unsigned j) const {
    if (i >= theta_ || j >= theta_) fail(Err::IndexOutOfRange, "vertex index out of range");
    return entries_[static_cast<size_t>(i) * theta_ + j];
}

Scalar BraidingMatrix::qtilde(unsigned i, unsigned j) const {
    if (i >= theta_ || j >= theta_) fail(Err::IndexOutOfRange, "vertex index out of range");
    if (i == j) fail(Err::EqualIndices, "qtilde needs two distinct vertices");
    return at(i, j) * at(j, i);
}

bool BraidingMatrix::diagonal_valid() const {
    for (unsigned i = 0; i < theta_; ++i)
        if (at(i, i).is_one()) return false;
    return true;
}

std::string BraidingMatrix::key() const {
    std::ostringstream os;
    os << theta_ << "@" << m_;
    for (const auto& e : entries_) os << "#" << e.key();
    return os.str();
}

bool BraidingMatrix::operator==(const BraidingMatrix& b) const {
    if (theta_ != b.theta_) return false;
    for (size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != b.entries_[k]) return false;
    return true;
}

BraidingMatrix BraidingMatrix::from_json(const nlohmann::json& j) {
    if (!j.is_object()) fail(Err::BadInput, "matrix JSON must be an object");
    if (!j.contains("cyclotomic_order") || !j.contains("theta") || !j.contains("entries"))
        fail(Err::BadInput, "matrix JSON needs cyclotomic_order, theta, entries");
    if (!j["cyclotomic_order"].is_number_unsigned() || j["cyclotomic_order"].get<unsigned>() == 0)
        fail(Err::BadInput, "cyclotomic_order must be a positive integer");
    if (!j["theta"].is_number_unsigned() || j["theta"].get<unsigned>() == 0)
        fail(Err::BadInput, "theta must be a positive integer");
    unsigned M = j["cyclotomic_order"].get<unsigned>();
    unsigned theta = j["theta"].get<unsigned>();
    const auto& rows = j["entries"];
    if (!rows.is_array() || rows.size() != theta)
        fail(Err::BadInput, "entries must be an array of theta rows");
    std::vector<Scalar> entries;
    entries.reserve(static_cast<size_t>(theta) * theta);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != theta)
            fail(Err::BadInput, "each entries row must have theta literals");
        for (const auto& cell : row) {
            if (!cell.is_string()) fail(Err::BadInput, "entries must be scalar literals");
            entries.push_back(Scalar::parse(cell.get<std::string>(), M));
        }
    }
    return BraidingMatrix(theta, std::move(entries));
}

nlohmann::json BraidingMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned i = 0; i < theta_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (unsigned j = 0; j < theta_; ++j) row.push_back(at(i, j).str());
        rows.push_back(std::move(row));
    }
    return {{"cyclotomic_order", m_}, {"theta", theta_}, {"entries", std::move(rows)}};
}

/* ---- diagrams ---- */

DynkinDiagram diagram(const BraidingMatrix& m) {
    DynkinDiagram d;
    d.theta = m.theta();
    d.vertex_labels.reserve(d.theta);
    for (unsigned i = 0; i < d.theta; ++i) d.vertex_labels.push_back(m.at(i, i));
    for (unsigned i = 0; i < d.theta; ++i)
        for (unsigned j = i + 1; j < d.theta; ++j) {
            Scalar t = m.qtilde(i, j);
            if (!t.is_one()) d.edges.emplace(std::make_pair(i, j), std::move(t));
        }
    return d;
}

bool DynkinDiagram::has_edge(unsigned i, unsigned j) const {
    if (i > j) std::swap(i, j);
    return edges.count({i, j}) != 0;
}

const Scalar& DynkinDiagram::edge_label(unsigned i, unsigned j) const {
    if (i > j) std::swap(i, j);
    auto it = edges.find({i, j});
    if (it == edges.end()) fail(Err::BadInput, "no edge between the given vertices");
    return it->second;
}

std::vector<std::vector<unsigned>> DynkinDiagram::components() const {
    std::vector<int> comp(theta, -1);
    int next = 0;
    for (unsigned start = 0; start < theta; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<unsigned> stack{start};
        comp[start] = next;
        while (!stack.empty()) {
            unsigned v = stack.back();
            stack.pop_back();
            for (unsigned w = 0; w < theta; ++w)
                if (comp[w] < 0 && has_edge(v, w)) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    std::vector<std::vector<unsigned>> out(static_cast<size_t>(next));
    for (unsigned v = 0; v < theta; ++v) out[static_cast<size_t>(comp[v])].push_back(v);
    return out;
}

std::string DynkinDiagram::key() const {
    std::ostringstream os;
    os << theta;
    for (const auto& v : vertex_labels) os << "#" << v.key();
    for (const auto& [e, lab] : edges) os << "#" << e.first << "," << e.second << ":" << lab.key();
    return os.str();
}

Scalar bicharacter(const BraidingMatrix& m, const std::vector<long>& u,
                   const std::vector<long>& v) {
    if (u.size() != m.theta() || v.size() != m.theta())
        fail(Err::BadInput, "degree vectors must have length theta");
    Scalar r = Scalar::one(m.level());
    for (unsigned i = 0; i < m.theta(); ++i) {
        if (u[i] == 0) continue;
        for (unsigned j = 0; j < m.theta(); ++j) {
            if (v[j] == 0) continue;
            r = r * m.at(i, j).pow(u[i] * v[j]);
        }
    }
    return r;
}

/* ---- trichotomy ---- */

const char* braid_class_name(BraidClass c) {
    switch (c) {
        case BraidClass::Torsion: return "torsion";
        case BraidClass::Generic: return "generic";
        case BraidClass::Semigeneric: return "semigeneric";
    }
    return "?";
}

BraidClass classify_class(const BraidingMatrix& m) {
    bool all_finite = true, diag_infinite = true, edges_free = true;
    for (unsigned i = 0; i < m.theta(); ++i) {
        Order o = order_of(m.at(i, i));
        if (o.kind == Order::Finite)
            diag_infinite = false;
        else
            all_finite = false;
    }
    for (unsigned i = 0; i < m.theta(); ++i)
        for (unsigned j = i + 1; j < m.theta(); ++j) {
            Scalar t = m.qtilde(i, j);
            Order o = order_of(t);
            if (o.kind == Order::Finite) {
                if (o.value > 1) edges_free = false;
            } else {
                all_finite = false;
            }
        }
    if (all_finite) return BraidClass::Torsion;
    if (diag_infinite && edges_free) return BraidClass::Generic;
    return BraidClass::Semigeneric;
}

} // namespace nichols
