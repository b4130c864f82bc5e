#include "tautring/taut_expression.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tautring {

TautMonomial TautMonomial::unit(int n) {
    TautMonomial m;
    m.points = n;
    m.k_exp.assign(static_cast<std::size_t>(n), 0);
    return m;
}

TautMonomial TautMonomial::K(int n, int i, unsigned power) {
    TautMonomial m = unit(n);
    if (i < 1 || i > n) throw std::invalid_argument("K: point index out of range");
    m.k_exp[static_cast<std::size_t>(i) - 1] = power;
    return m;
}

TautMonomial TautMonomial::D(int n, int i, int j) {
    TautMonomial m = unit(n);
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("D: bad point pair");
    m.diagonals.emplace_back(std::min(i, j), std::max(i, j));
    return m;
}

TautMonomial TautMonomial::kappa_class(int n, MultiIndex mi) {
    TautMonomial m = unit(n);
    m.kappa = std::move(mi);
    return m;
}

TautMonomial TautMonomial::lambda_class(int n, unsigned i) {
    TautMonomial m = unit(n);
    if (i > 0) m.lambda = MultiIndex::unit(i);
    return m;
}

unsigned TautMonomial::degree() const {
    unsigned d = 0;
    for (unsigned e : k_exp) d += e;
    d += static_cast<unsigned>(diagonals.size());
    d += kappa.degree();
    d += lambda.degree();
    return d;
}

TautMonomial TautMonomial::operator*(const TautMonomial& o) const {
    if (points != o.points) throw std::invalid_argument("monomial product: ambient mismatch");
    TautMonomial r = *this;
    for (std::size_t i = 0; i < k_exp.size(); ++i) r.k_exp[i] += o.k_exp[i];
    r.diagonals.insert(r.diagonals.end(), o.diagonals.begin(), o.diagonals.end());
    r.kappa = kappa + o.kappa;
    r.lambda = lambda + o.lambda;
    r.canonicalize();
    return r;
}

TautMonomial TautMonomial::pulled_back_to(int n) const {
    if (n < points) throw std::invalid_argument("pullback: cannot drop points");
    TautMonomial r = *this;
    r.points = n;
    r.k_exp.resize(static_cast<std::size_t>(n), 0);
    return r;
}

bool TautMonomial::involves_point(int i) const {
    if (k_exp[static_cast<std::size_t>(i) - 1] > 0) return true;
    for (const auto& [a, b] : diagonals)
        if (a == i || b == i) return true;
    return false;
}

void TautMonomial::canonicalize() { std::sort(diagonals.begin(), diagonals.end()); }

std::string TautMonomial::label() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << '*';
        first = false;
    };
    for (std::size_t i = 0; i < k_exp.size(); ++i) {
        if (!k_exp[i]) continue;
        sep();
        os << 'K';
        if (points > 1) os << (i + 1);
        if (k_exp[i] > 1) os << '^' << k_exp[i];
    }
    for (std::size_t i = 0; i < diagonals.size();) {
        std::size_t j = i;
        while (j < diagonals.size() && diagonals[j] == diagonals[i]) ++j;
        sep();
        os << 'D' << diagonals[i].first << ',' << diagonals[i].second;
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    if (!kappa.is_zero()) {
        sep();
        os << kappa.label();
    }
    if (!lambda.is_zero()) {
        const auto& e = lambda.exponents();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            sep();
            os << 'l' << (i + 1);
            if (e[i] > 1) os << '^' << e[i];
        }
    }
    if (first) return "1";
    return os.str();
}

TautExpression TautExpression::unit(int n) { return of(TautMonomial::unit(n)); }

TautExpression TautExpression::of(TautMonomial m, Rational c) {
    TautExpression e(m.points);
    e.add_term(std::move(m), c);
    return e;
}

void TautExpression::add_term(TautMonomial m, const Rational& c) {
    if (c == 0) return;
    if (m.points != points_) throw std::invalid_argument("add_term: ambient mismatch");
    auto [it, fresh] = terms_.emplace(std::move(m), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TautExpression& TautExpression::operator+=(const TautExpression& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && points_ == 0) points_ = o.points_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TautExpression& TautExpression::operator-=(const TautExpression& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TautExpression TautExpression::operator+(const TautExpression& o) const {
    TautExpression r = *this;
    r += o;
    return r;
}

TautExpression TautExpression::operator-(const TautExpression& o) const {
    TautExpression r = *this;
    r -= o;
    return r;
}

TautExpression TautExpression::operator*(const TautExpression& o) const {
    TautExpression r(std::max(points_, o.points_));
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

TautExpression TautExpression::operator*(const Rational& c) const {
    TautExpression r(points_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

TautExpression TautExpression::pulled_back_to(int n) const {
    TautExpression r(n);
    for (const auto& [m, c] : terms_) r.add_term(m.pulled_back_to(n), c);
    return r;
}

std::string TautExpression::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << '*' << m.label();
    }
    return os.str();
}

TautExpression delta_sum(int n, int m) {
    TautExpression e(n);
    for (int i = 1; i < m; ++i) e.add_term(TautMonomial::D(n, i, m), 1);
    return e;
}

namespace {

struct Rewrite {
    // SquareDiag: D_{a,b}^2 -> -K_a D_{a,b} (a < b).
    // DistinctPair: with D_{a,p} present and a < p, D_{b,p} -> D_{a,b}.
    // MoveK: with D_{a,p} present and a < p, K_p -> K_a.
    enum Kind { SquareDiag, DistinctPair, MoveK } kind;
    int a = 0, b = 0, p = 0;
};

// All applicable Harris-Mumford rewrites, at every point.  Each rule is
// oriented towards smaller point indices, so rewriting terminates; the
// normal form is a disjoint union of diagonal "stars" rooted at the
// minimum point of each component, with all K-powers at the roots.
std::vector<Rewrite> applicable(const TautMonomial& m) {
    std::vector<Rewrite> out;
    const auto& ds = m.diagonals;
    // squares (repeated adjacent entries in the sorted list)
    for (std::size_t i = 0; i + 1 < ds.size(); ++i)
        if (ds[i] == ds[i + 1] && (i == 0 || ds[i - 1] != ds[i]))
            out.push_back({Rewrite::SquareDiag, ds[i].first, ds[i].second, 0});
    // distinct diagonals sharing a point
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j) {
            if (ds[i] == ds[j]) continue;
            for (int p : {ds[i].first, ds[i].second}) {
                if (p != ds[j].first && p != ds[j].second) continue;
                int a = ds[i].first == p ? ds[i].second : ds[i].first;
                int b = ds[j].first == p ? ds[j].second : ds[j].first;
                if (a < p) out.push_back({Rewrite::DistinctPair, a, b, p});
                if (b < p) out.push_back({Rewrite::DistinctPair, b, a, p});
            }
        }
    // K at a point with a smaller diagonal partner
    for (const auto& [a, b] : ds)
        if (m.k_power(b) > 0) {
            Rewrite rw{Rewrite::MoveK, a, 0, b};
            bool dup = false;
            for (const auto& prev : out)
                dup = dup || (prev.kind == Rewrite::MoveK && prev.a == rw.a && prev.p == rw.p);
            if (!dup) out.push_back(rw);
        }
    return out;
}

void erase_one_diagonal(TautMonomial& m, int i, int j) {
    auto it = std::find(m.diagonals.begin(), m.diagonals.end(),
                        std::make_pair(std::min(i, j), std::max(i, j)));
    m.diagonals.erase(it);
}

} // namespace

TautExpression normalize(const TautMonomial& mono, const RewriteChooser& choose) {
    const int n = mono.points;
    TautExpression result(n);
    std::vector<std::pair<TautMonomial, Rational>> work{{mono, 1}};
    while (!work.empty()) {
        auto [m, c] = work.back();
        work.pop_back();
        auto rewrites = applicable(m);
        if (rewrites.empty()) {
            result.add_term(std::move(m), c);
            continue;
        }
        const Rewrite rw = rewrites[choose ? choose(rewrites.size()) % rewrites.size() : 0];
        switch (rw.kind) {
            case Rewrite::SquareDiag: {
                // D_{a,b}^2 = -K_a D_{a,b}
                TautMonomial t = m;
                erase_one_diagonal(t, rw.a, rw.b);
                t.k_exp[static_cast<std::size_t>(rw.a) - 1] += 1;
                work.emplace_back(std::move(t), -c);
                break;
            }
            case Rewrite::DistinctPair: {
                // restricted to D_{a,p}: D_{b,p} = D_{a,b}  (a < p)
                TautMonomial t = m;
                erase_one_diagonal(t, rw.b, rw.p);
                t.diagonals.emplace_back(std::min(rw.a, rw.b), std::max(rw.a, rw.b));
                t.canonicalize();
                work.emplace_back(std::move(t), c);
                break;
            }
            case Rewrite::MoveK: {
                // restricted to D_{a,p}: K_p = K_a  (a < p), one power at a time
                TautMonomial t = m;
                t.k_exp[static_cast<std::size_t>(rw.p) - 1] -= 1;
                t.k_exp[static_cast<std::size_t>(rw.a) - 1] += 1;
                work.emplace_back(std::move(t), c);
                break;
            }
        }
    }
    return result;
}

TautExpression normalize(const TautExpression& e, const RewriteChooser& choose) {
    TautExpression result(e.points());
    for (const auto& [m, c] : e.terms()) result += normalize(m, choose) * c;
    return result;
}

TautExpression pushforward(const TautExpression& e, unsigned g) {
    const int n = e.points();
    if (n < 1) throw std::invalid_argument("pushforward: nothing to forget");
    TautExpression norm = normalize(e);
    TautExpression result(n - 1);
    for (const auto& [m, c] : norm.terms()) {
        unsigned kn = m.k_power(n);
        int diag_partner = 0;
        for (const auto& [a, b] : m.diagonals) {
            if (b == n) diag_partner = a;
        }
        TautMonomial down = m;
        down.points = n - 1;
        down.k_exp.pop_back();
        if (diag_partner != 0) {
            // single D_{i,n}, no K_n after normalization
            erase_one_diagonal(down, diag_partner, n);
            result.add_term(std::move(down), c);
        } else if (kn >= 1) {
            if (kn == 1) {
                result.add_term(std::move(down), c * Rational(2 * g - 2));  // kappa_0
            } else {
                down.kappa = down.kappa + MultiIndex::unit(kn - 1);
                result.add_term(std::move(down), c);
            }
        }
        // pure pullback: pushes to zero
    }
    return result;
}

} // namespace tautring
