#include "nichols/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "nichols/error.hpp"

namespace nichols {

Degree word_degree(unsigned theta, const Word& w) {
    Degree d(theta, 0);
    for (uint8_t l : w) {
        if (l >= theta) fail(Err::IndexOutOfRange, "letter outside the alphabet");
        ++d[l];
    }
    return d;
}

/* ---- FreeElement ---- */

FreeElement FreeElement::unit(unsigned theta) {
    FreeElement e(theta);
    e.add({}, Scalar::one());
    return e;
}

FreeElement FreeElement::generator(unsigned theta, unsigned i) {
    if (i >= theta) fail(Err::IndexOutOfRange, "generator index out of range");
    FreeElement e(theta);
    e.add({static_cast<uint8_t>(i)}, Scalar::one());
    return e;
}

FreeElement FreeElement::term(unsigned theta, const Word& w, const Scalar& c) {
    (void)word_degree(theta, w); // letter validation
    FreeElement e(theta);
    e.add(w, c);
    return e;
}

Scalar FreeElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero() : it->second;
}

void FreeElement::add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreeElement FreeElement::operator-() const {
    FreeElement e(theta_);
    for (const auto& [w, c] : terms_) e.terms_.emplace(w, -c);
    return e;
}

static void check_same_theta(unsigned a, unsigned b) {
    if (a != b) fail(Err::BadInput, "elements live over different ranks");
}

FreeElement operator+(const FreeElement& a, const FreeElement& b) {
    check_same_theta(a.theta_, b.theta_);
    FreeElement e = a;
    for (const auto& [w, c] : b.terms_) e.add(w, c);
    return e;
}

FreeElement operator-(const FreeElement& a, const FreeElement& b) { return a + (-b); }

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    check_same_theta(a.theta_, b.theta_);
    FreeElement e(a.theta_);
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            e.add(w, c * d);
        }
    return e;
}

FreeElement operator*(const Scalar& c, const FreeElement& a) {
    FreeElement e(a.theta_);
    if (c.is_zero()) return e;
    for (const auto& [w, d] : a.terms_) e.terms_.emplace(w, c * d);
    return e;
}

FreeElement FreeElement::pow(unsigned e) const {
    FreeElement r = unit(theta_);
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

bool FreeElement::operator==(const FreeElement& b) const {
    return theta_ == b.theta_ && terms_ == b.terms_;
}

std::optional<Degree> FreeElement::uniform_degree() const {
    if (terms_.empty()) return std::nullopt;
    Degree d = word_degree(theta_, terms_.begin()->first);
    for (const auto& [w, c] : terms_)
        if (word_degree(theta_, w) != d) return std::nullopt;
    return d;
}

std::string FreeElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        if (w.empty()) {
            os << cs;
            continue;
        }
        if (cs != "1") os << "(" << cs << ")*";
        for (size_t p = 0; p < w.size(); ++p) {
            if (p) os << "*";
            os << "x" << static_cast<unsigned>(w[p]) + 1;
        }
    }
    return os.str();
}

/* ---- TensorElement ---- */

void TensorElement::add(const Word& l, const Word& r, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(l, r);
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
    check_same_theta(a.theta_, b.theta_);
    TensorElement e = a;
    for (const auto& [k, c] : b.terms_) e.add(k.first, k.second, c);
    return e;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) {
    check_same_theta(a.theta_, b.theta_);
    TensorElement e = a;
    for (const auto& [k, c] : b.terms_) e.add(k.first, k.second, -c);
    return e;
}

bool TensorElement::operator==(const TensorElement& b) const {
    return theta_ == b.theta_ && terms_ == b.terms_;
}

TensorElement TensorElement::left_degree_part(const Degree& d) const {
    TensorElement e(theta_);
    for (const auto& [k, c] : terms_)
        if (word_degree(theta_, k.first) == d) e.add(k.first, k.second, c);
    return e;
}

std::vector<Degree> TensorElement::left_degrees() const {
    std::vector<Degree> out;
    for (const auto& [k, c] : terms_) {
        Degree d = word_degree(theta_, k.first);
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
    }
    return out;
}

TensorElement tensor_of(const FreeElement& a, const FreeElement& b) {
    check_same_theta(a.theta(), b.theta());
    TensorElement e(a.theta());
    for (const auto& [u, c] : a.terms())
        for (const auto& [v, d] : b.terms()) e.add(u, v, c * d);
    return e;
}

/* ---- operators on T(V) ---- */

FreeElement derivation(const BraidingMatrix& m, unsigned i, const FreeElement& x) {
    if (i >= m.theta()) fail(Err::IndexOutOfRange, "derivation index out of range");
    check_same_theta(m.theta(), x.theta());
    FreeElement out(x.theta());
    for (const auto& [w, c] : x.terms()) {
        for (size_t p = 0; p < w.size(); ++p) {
            if (w[p] != i) continue;
            Scalar f = c;
            for (size_t k = p + 1; k < w.size(); ++k) f = f * m.at(i, w[k]);
            Word rest;
            rest.reserve(w.size() - 1);
            rest.insert(rest.end(), w.begin(), w.begin() + static_cast<long>(p));
            rest.insert(rest.end(), w.begin() + static_cast<long>(p) + 1, w.end());
            out.add(rest, f);
        }
    }
    return out;
}

FreeElement ad_x1(const BraidingMatrix& m, const FreeElement& x) {
    if (x.is_zero()) return x;
    check_same_theta(m.theta(), x.theta());
    auto deg = x.uniform_degree();
    if (!deg) fail(Err::InhomogeneousInput, "adjoint needs a homogeneous argument");
    Degree a1(m.theta(), 0);
    a1[0] = 1;
    Scalar b = bicharacter(m, a1, *deg);
    FreeElement x1 = FreeElement::generator(m.theta(), 0);
    return x1 * x - b * (x * x1);
}

TensorElement coproduct(const BraidingMatrix& m, const FreeElement& x) {
    check_same_theta(m.theta(), x.theta());
    TensorElement out(x.theta());
    for (const auto& [w, c] : x.terms()) {
        std::map<std::pair<Word, Word>, Scalar> acc;
        acc.emplace(std::make_pair(Word{}, Word{}), c);
        for (uint8_t l : w) {
            std::map<std::pair<Word, Word>, Scalar> next;
            Degree al(m.theta(), 0);
            al[l] = 1;
            for (const auto& [uv, cc] : acc) {
                // (u (x) v)(x_l (x) 1) picks up bq(deg v, alpha_l)
                Scalar f = cc * bicharacter(m, word_degree(m.theta(), uv.second), al);
                Word ul = uv.first;
                ul.push_back(l);
                auto [it1, ins1] = next.try_emplace(std::make_pair(std::move(ul), uv.second), f);
                if (!ins1) it1->second += f;
                Word vl = uv.second;
                vl.push_back(l);
                auto [it2, ins2] = next.try_emplace(std::make_pair(uv.first, std::move(vl)), cc);
                if (!ins2) it2->second += cc;
            }
            acc = std::move(next);
        }
        for (const auto& [uv, cc] : acc) out.add(uv.first, uv.second, cc);
    }
    return out;
}

/* ---- rank-2 builders ---- */

static void need_rank2(const BraidingMatrix& m) {
    if (m.theta() != 2) fail(Err::BadInput, "this construction needs rank 2");
}

Degree beta_degree(unsigned mm) { return Degree{static_cast<long>(mm), 1}; }

Scalar p_value(const BraidingMatrix& m, unsigned mm) {
    need_rank2(m);
    Degree b = beta_degree(mm);
    return bicharacter(m, b, b);
}

FreeElement y_element(const BraidingMatrix& m, unsigned k) {
    need_rank2(m);
    if (k > 31) fail(Err::DegreeTooLarge, "y_k grows exponentially; k is capped at 31");
    FreeElement e = FreeElement::generator(2, 1);
    for (unsigned s = 0; s < k; ++s) e = ad_x1(m, e);
    return e;
}

FreeElement w_element(const BraidingMatrix& m, unsigned mm) {
    need_rank2(m);
    FreeElement lo = y_element(m, mm), hi = y_element(m, mm + 2);
    Scalar q = bicharacter(m, beta_degree(mm + 2), beta_degree(mm));
    return hi * lo - q * (lo * hi);
}

FreeElement wtilde_element(const BraidingMatrix& m, unsigned mm) {
    need_rank2(m);
    Scalar p1 = p_value(m, mm + 1);
    Scalar den = Scalar::one() + p1;
    if (den.is_zero())
        fail(Err::DenominatorVanishes, "wtilde needs p_{m+1} != -1");
    const Scalar& q11 = m.at(0, 0);
    Scalar coef = bicharacter(m, beta_degree(mm + 1), beta_degree(mm)) *
                  q_int(mm + 2, q11) * (Scalar::one() - q11.pow(mm + 1) * m.qtilde(0, 1)) / den;
    FreeElement y1 = y_element(m, mm + 1);
    return w_element(m, mm) - coef * (y1 * y1);
}

FreeElement Y_element(const BraidingMatrix& m, unsigned t, unsigned n, unsigned N) {
    need_rank2(m);
    if (N < 2) fail(Err::OutOfRange, "the order N must be at least 2");
    Scalar q = p_value(m, n);
    Order o = order_of(q);
    if (!o.finite() || o.value != N)
        fail(Err::OutOfRange, "p_n must be a primitive root of unity of order N");
    if (t > N - 1) fail(Err::OutOfRange, "t must satisfy 0 <= t <= N-1");
    Scalar base = m.at(0, 0).pow(static_cast<long>(n)) * m.at(0, 1); // q11^n q12
    FreeElement yn = y_element(m, n), yn1 = y_element(m, n + 1);
    FreeElement sum(2);
    for (unsigned j = 0; j <= t; ++j) {
        Scalar c = base.pow(-static_cast<long>(j)) * q_int_product(j + 1, N - 1 - t + j, q);
        sum = sum + c * (yn.pow(t - j) * yn1 * yn.pow(j));
    }
    return sum;
}

/* ---- oracle ---- */

namespace {

bool vanishes_rec(const BraidingMatrix& m, const FreeElement& e, unsigned remaining) {
    if (e.is_zero()) return true;
    if (remaining == 0) return false; // a surviving constant
    for (unsigned i = 0; i < m.theta(); ++i)
        if (!vanishes_rec(m, derivation(m, i, e), remaining - 1)) return false;
    return true;
}

} // namespace

bool is_zero_in_nichols(const BraidingMatrix& m, const FreeElement& x, unsigned max_degree) {
    if (x.is_zero()) return true;
    check_same_theta(m.theta(), x.theta());
    auto deg = x.uniform_degree();
    if (!deg) fail(Err::InhomogeneousInput, "the oracle needs a homogeneous element");
    long total = 0;
    for (long d : *deg) total += d;
    if (total > static_cast<long>(max_degree))
        fail(Err::DegreeTooLarge, "total degree exceeds max_degree");
    return vanishes_rec(m, x, static_cast<unsigned>(total));
}

namespace {

void enumerate_words(Degree& left, Word& acc, std::vector<Word>& out) {
    bool done = true;
    for (size_t i = 0; i < left.size(); ++i) {
        if (left[i] > 0) {
            done = false;
            --left[i];
            acc.push_back(static_cast<uint8_t>(i));
            enumerate_words(left, acc, out);
            acc.pop_back();
            ++left[i];
        }
    }
    if (done) out.push_back(acc);
}

// rank of a square scalar matrix by exact Gaussian elimination
unsigned matrix_rank(std::vector<std::vector<Scalar>> a) {
    size_t n = a.size();
    unsigned rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t piv = row;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[row]);
        for (size_t r = row + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Scalar f = a[r][col] / a[row][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

unsigned graded_dim(const BraidingMatrix& m, const Degree& degree, unsigned max_degree) {
    if (degree.size() != m.theta()) fail(Err::BadInput, "degree must have length theta");
    long total = 0;
    for (long d : degree) {
        if (d < 0) fail(Err::BadInput, "degree entries must be nonnegative");
        total += d;
    }
    if (total > static_cast<long>(max_degree))
        fail(Err::DegreeTooLarge, "total degree exceeds max_degree");
    if (total == 0) return 1;
    std::vector<Word> words;
    Degree left = degree;
    Word acc;
    enumerate_words(left, acc, words);
    size_t n = words.size();
    std::vector<std::vector<Scalar>> pairing(n, std::vector<Scalar>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            FreeElement e = FreeElement::term(m.theta(), words[c], Scalar::one());
            for (uint8_t l : words[r]) e = derivation(m, l, e);
            pairing[r][c] = e.coeff({});
        }
    return matrix_rank(std::move(pairing));
}

/* ---- element mini-language ---- */

namespace {

struct ElementParser {
    const BraidingMatrix& m;
    const std::string& s;
    size_t pos = 0;

    [[noreturn]] void err(const std::string& why) const {
        fail(Err::ParseError, "'" + s + "' at " + std::to_string(pos) + ": " + why);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    void expect(char c) {
        if (!eat(c)) err(std::string("expected '") + c + "'");
    }

    unsigned uinteger() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) err("expected a nonnegative integer");
        return static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
    }

    FreeElement expr() {
        bool neg = eat('-');
        FreeElement e = product();
        if (neg) e = -e;
        for (;;) {
            if (eat('+'))
                e = e + product();
            else if (eat('-'))
                e = e - product();
            else
                return e;
        }
    }

    FreeElement product() {
        FreeElement e = factor();
        while (eat('*')) e = e * factor();
        return e;
    }

    FreeElement factor() {
        FreeElement e = primary();
        if (peek() == '^') {
            ++pos;
            if (peek() == '-') err("negative powers are not defined in T(V)");
            e = e.pow(uinteger());
        }
        return e;
    }

    FreeElement primary() {
        char c = peek();
        if (c == '-') {
            ++pos;
            return -factor();
        }
        if (c == '(') {
            ++pos;
            FreeElement e = expr();
            expect(')');
            return e;
        }
        if (c == 'x') {
            ++pos;
            unsigned i = uinteger();
            if (i == 0 || i > m.theta()) err("generator index out of range");
            return FreeElement::generator(m.theta(), i - 1);
        }
        if (s.compare(pos, 7, "wtilde(") == 0) {
            pos += 7;
            unsigned k = uinteger();
            expect(')');
            return wtilde_element(m, k);
        }
        if (c == 'y' || c == 'w') {
            ++pos;
            expect('(');
            unsigned k = uinteger();
            expect(')');
            return c == 'y' ? y_element(m, k) : w_element(m, k);
        }
        if (c == 'Y') {
            ++pos;
            expect('(');
            unsigned t = uinteger();
            expect(',');
            unsigned n = uinteger();
            expect(',');
            unsigned N = uinteger();
            expect(')');
            return Y_element(m, t, n, N);
        }
        // scalar atom: digits, '/', '^', 'z', 'q'; '-' only right after '^'
        size_t start = pos;
        while (pos < s.size()) {
            char ch = s[pos];
            bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '^' ||
                      ch == 'z' || ch == 'q' || (ch == '-' && pos > start && s[pos - 1] == '^');
            if (!ok) break;
            ++pos;
        }
        if (pos == start) err("expected a factor");
        Scalar v = Scalar::parse(s.substr(start, pos - start), m.level());
        return v * FreeElement::unit(m.theta());
    }
};

} // namespace

FreeElement parse_element(const BraidingMatrix& m, const std::string& src) {
    ElementParser p{m, src};
    FreeElement e = p.expr();
    p.skip_ws();
    if (p.pos != src.size()) p.err("trailing characters");
    return e;
}

} // namespace nichols
