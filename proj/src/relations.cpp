#include "tautring/relations.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tautring/chern.hpp"

namespace tautring {

bool Relation::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

std::string Relation::pretty(const std::vector<CgMonomial>& basis) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        Rational c = coeffs[k];
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = abs(c);
        if (a != 1)
            os << a.get_str() << '*' << basis[k].label();
        else
            os << basis[k].label();
    }
    if (first) os << '0';
    os << " = 0";
    return os.str();
}

void normalize_relation_vector(std::vector<Rational>& v) {
    Integer lcm = 1;
    for (const auto& c : v) {
        Integer t;
        mpz_lcm(t.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        lcm = t;
    }
    Integer content = 0;
    for (auto& c : v) {
        c *= Rational(lcm);
        c.canonicalize();
        Integer t;
        mpz_gcd(t.get_mpz_t(), content.get_mpz_t(), c.get_num().get_mpz_t());
        content = t;
    }
    if (content == 0) return;  // zero vector
    int sign = 0;
    for (const auto& c : v) {
        if (c != 0) {
            sign = sgn(c) > 0 ? 1 : -1;
            break;
        }
    }
    Rational scale = Rational(sign) / Rational(content);
    for (auto& c : v) {
        c *= scale;
        c.canonicalize();
    }
}

std::vector<TautMonomial> faber_monomials(unsigned g, unsigned i, unsigned j) {
    const int n = 2 * static_cast<int>(g) - 1;
    const long q = 2L * g + 2L * i - 2L * j - 1;
    if (q < 1 || q > n) throw std::invalid_argument("faber_monomials: q out of range");
    TautMonomial m0 = TautMonomial::unit(n);
    for (long t = 2; t <= q; ++t) m0.diagonals.emplace_back(1, static_cast<int>(t));
    for (long a = q + 1; a + 1 <= n; a += 2)
        m0.diagonals.emplace_back(static_cast<int>(a), static_cast<int>(a + 1));
    m0.canonicalize();
    std::vector<TautMonomial> out{m0};
    TautMonomial cur = m0;
    for (long r = 0; r + 3 <= q; ++r) {
        // replace D_{1,q-r} by D_{q-r,q-r+1}
        const int p = static_cast<int>(q - r);
        auto it = std::find(cur.diagonals.begin(), cur.diagonals.end(), std::make_pair(1, p));
        if (it == cur.diagonals.end())
            throw std::logic_error("faber_monomials: replacement target missing");
        *it = {p, p + 1};
        cur.canonicalize();
        out.push_back(cur);
    }
    const unsigned want = i + 2 * g - 2 - j;
    for (const auto& m : out) {
        if (m.degree() != want) throw std::logic_error("faber_monomials: degree mismatch");
    }
    return out;
}

namespace {

// pi_{2*}...pi_{n*}(M * c_k(F_n)) on the universal curve, interleaving the
// pushforwards with the Chern recursion so c_k(F_n) is never expanded.
TautExpression push_with_chern(const TautMonomial& mono, unsigned k, unsigned g) {
    const int n = 2 * static_cast<int>(g) - 1;
    std::vector<TautExpression> state(k + 1, TautExpression::zero(n));
    state[k] = TautExpression::of(mono);
    for (int m = n; m >= 2; --m) {
        TautExpression edge =
            TautExpression::of(TautMonomial::K(m, m)) - delta_sum(m, m);
        std::vector<TautExpression> next(k + 1, TautExpression::zero(m - 1));
        for (unsigned t = 0; t <= k; ++t) {
            if (state[t].is_zero()) continue;
            next[t] += pushforward(state[t], g);
            if (t >= 1) next[t - 1] += pushforward(state[t] * edge, g);
        }
        state = std::move(next);
    }
    // c_0(F_1) = 1, c_1(F_1) = K_1, higher parts vanish.
    TautExpression result = state[0];
    if (k >= 1) result += state[1] * TautExpression::of(TautMonomial::K(1, 1));
    return result;
}

} // namespace

Relation push_relation(unsigned g, unsigned i, unsigned j, const TautMonomial& mono) {
    const int n = 2 * static_cast<int>(g) - 1;
    if (j < g) throw std::invalid_argument("push_relation: need j >= g (vanishing range)");
    if (mono.points != n) throw std::invalid_argument("push_relation: monomial must live on C_g^{2g-1}");
    if (mono.degree() != i + 2 * g - 2 - j)
        throw std::invalid_argument("push_relation: deg(M) must be i + 2g - 2 - j");

    // c_j(F_n - E) = sum_t (-1)^t lambda_t c_{j-t}(F_n); the lambda factors
    // are pulled back from M_g, so they are attached after the pushforwards.
    TautExpression rel(1);
    for (unsigned t = 0; t <= std::min(j, g); ++t) {
        TautExpression part = push_with_chern(mono, j - t, g);
        if (part.is_zero()) continue;
        Rational sign = (t % 2 == 0) ? 1 : -1;
        rel += part * TautExpression::of(TautMonomial::lambda_class(1, t), sign);
    }
    rel = lambda_to_kappa(rel, g);

    auto basis = enumerate_cg_monomials(i);
    std::map<std::pair<unsigned, MultiIndex>, std::size_t> index;
    for (std::size_t b = 0; b < basis.size(); ++b)
        index.emplace(std::make_pair(basis[b].k_power, basis[b].kappa), b);

    Relation r;
    r.genus = g;
    r.degree = i;
    r.chern_index = j;
    r.monomial = mono.label();
    r.coeffs.assign(basis.size(), Rational(0));
    for (const auto& [m, c] : rel.terms()) {
        if (!m.diagonals.empty() || !m.lambda.is_zero())
            throw std::logic_error("push_relation: unreduced class survived the pushdown");
        auto it = index.find(std::make_pair(m.k_power(1), m.kappa));
        if (it == index.end())
            throw std::logic_error("push_relation: result not homogeneous of degree i");
        r.coeffs[it->second] = c;
    }
    normalize_relation_vector(r.coeffs);
    return r;
}

std::size_t rref_in_place(std::vector<std::vector<Rational>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = Rational(1) / m[rank][c];
        for (auto& e : m[rank]) {
            e *= inv;
            e.canonicalize();
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = 0; k < cols; ++k) {
                m[r][k] -= f * m[rank][k];
                m[r][k].canonicalize();
            }
        }
        ++rank;
    }
    m.resize(rank);
    return rank;
}

std::optional<std::vector<Rational>> RelationSpace::reduce(std::vector<Rational> v) const {
    for (const auto& row : rref) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        if (lead == row.size()) continue;
        if (v[lead] == 0) continue;
        Rational f = v[lead];
        for (std::size_t k = 0; k < v.size(); ++k) {
            v[k] -= f * row[k];
            v[k].canonicalize();
        }
    }
    for (const auto& c : v)
        if (c != 0) return v;
    return std::nullopt;
}

bool RelationSpace::contains(const std::vector<Rational>& v) const {
    return !reduce(v).has_value();
}

std::string RelationSpace::to_json() const {
    nlohmann::json j;
    j["genus"] = genus;
    j["degree"] = degree;
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& b : basis) labels.push_back(b.label());
    j["basis"] = std::move(labels);
    nlohmann::json rows_json = nlohmann::json::array();
    nlohmann::json recipes = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& c : r.coeffs) row.push_back(c.get_str());
        rows_json.push_back(std::move(row));
        recipes.push_back({{"j", r.chern_index}, {"monomial", r.monomial}});
    }
    j["rows"] = std::move(rows_json);
    j["recipes"] = std::move(recipes);
    return j.dump();
}

RelationSpace relation_space(unsigned g, unsigned i, unsigned budget) {
    RelationSpace space;
    space.genus = g;
    space.degree = i;
    space.basis = enumerate_cg_monomials(i);
    if (i == 0) return space;  // no feasible j: relations start above degree 0

    // q = 2g+2i-2j-1 >= 1 bounds the useful chern indices.
    const unsigned j_feasible_max = g + i - 1;
    const unsigned j_max = std::min(g + budget, j_feasible_max);
    for (unsigned j = g; j <= j_max; ++j) {
        for (const auto& mono : faber_monomials(g, i, j)) {
            Relation rel = push_relation(g, i, j, mono);
            if (rel.is_zero()) continue;
            auto residual = space.reduce(rel.coeffs);
            if (!residual) continue;
            space.rows.push_back(rel);
            space.rref.push_back(std::move(*residual));
            rref_in_place(space.rref);
        }
    }
    space.budget_exhausted = j_max < j_feasible_max;
    return space;
}

} // namespace tautring
