#include "tautring/liu_xu.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tautring/numeric.hpp"

namespace tautring {

Rational LiuXuTable::beta(const MultiIndex& m) {
    std::lock_guard<std::mutex> lock(mu_);
    return beta_locked(m);
}

Rational LiuXuTable::beta_locked(const MultiIndex& m) {
    if (m.is_zero()) return 1;
    auto it = beta_.find(m);
    if (it != beta_.end()) return it->second;
    // Isolate the m' = m term: (-1)^{||m||} beta_m = -(rest).
    Rational rest = 0;
    for_each_split(m, [&](const MultiIndex& m1, const MultiIndex& m2) {
        if (m1 == m) return;
        Rational sign = (m1.weight() % 2 == 0) ? 1 : -1;
        Rational den(m2.index_factorial() * double_factorial(2L * m2.degree() + 1));
        rest += sign * beta_locked(m1) / den;
    });
    Rational b = (m.weight() % 2 == 0) ? -rest : rest;
    b.canonicalize();
    beta_.emplace(m, b);
    return b;
}

Rational LiuXuTable::gamma(const MultiIndex& m) const {
    Rational sign = (m.weight() % 2 == 0) ? 1 : -1;
    Rational g = sign / Rational(m.index_factorial() * double_factorial(2L * m.degree() + 1));
    g.canonicalize();
    return g;
}

Rational LiuXuTable::c_constant(const MultiIndex& m) {
    std::lock_guard<std::mutex> lock(mu_);
    return c_locked(m);
}

Rational LiuXuTable::c_locked(const MultiIndex& m) {
    auto it = c_.find(m);
    if (it != c_.end()) return it->second;
    Rational acc = 0;
    for_each_split(m, [&](const MultiIndex& m1, const MultiIndex& m2) {
        if (m1.is_zero()) return;  // factor 2|m'| vanishes
        acc += Rational(2 * m1.degree()) * beta_locked(m1) * gamma(m2);
    });
    acc.canonicalize();
    c_.emplace(m, acc);
    return acc;
}

Rational LiuXuTable::f_constant(unsigned g, const MultiIndex& m) {
    if (g < 2) throw std::invalid_argument("f_constant: genus must be >= 2");
    if (m.degree() > g - 2) throw std::invalid_argument("f_constant: |m| exceeds g-2");
    std::lock_guard<std::mutex> lock(mu_);
    return f_locked(g, m);
}

Rational LiuXuTable::f_locked(unsigned g, const MultiIndex& m) {
    if (m.is_zero()) return 1;
    auto key = std::make_pair(g, m);
    auto it = f_.find(key);
    if (it != f_.end()) return it->second;
    Rational acc = 0;
    for_each_split(m, [&](const MultiIndex& m1, const MultiIndex& m2) {
        if (m1.is_zero()) return;
        acc += c_locked(m1) * f_locked(g, m2);
    });
    Rational f = Rational(g - 1) * acc / Rational(m.degree());
    f.canonicalize();
    f_.emplace(key, f);
    return f;
}

Rational LiuXuTable::r_value(unsigned g, const MultiIndex& m) {
    if (g < 2) throw std::invalid_argument("r_value: genus must be >= 2");
    if (m.degree() != g - 2) {
        std::ostringstream os;
        os << "r_value: |m| = " << m.degree() << " but g-2 = " << (g - 2);
        throw std::invalid_argument(os.str());
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(g, m);
    auto it = r_.find(key);
    if (it != r_.end()) return it->second;
    Rational r = Rational(double_factorial(2L * g - 3) * m.index_factorial()) /
                 Rational(2 * g - 2) * f_locked(g, m);
    r.canonicalize();
    r_.emplace(key, r);
    return r;
}

void LiuXuTable::save(const std::string& path) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file: " + path);
    for (const auto& [m, v] : beta_) out << "beta " << m.encode() << ' ' << v.get_str() << '\n';
    for (const auto& [m, v] : c_) out << "c " << m.encode() << ' ' << v.get_str() << '\n';
    for (const auto& [k, v] : f_)
        out << "f " << k.first << ' ' << k.second.encode() << ' ' << v.get_str() << '\n';
    for (const auto& [k, v] : r_)
        out << "r " << k.first << ' ' << k.second.encode() << ' ' << v.get_str() << '\n';
}

void LiuXuTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read cache file: " + path);
    std::lock_guard<std::mutex> lock(mu_);
    std::string line;
    std::size_t lineno = 0;
    auto insert = [&](auto& map, auto key, const Rational& v) {
        auto [it, fresh] = map.emplace(std::move(key), v);
        if (!fresh && it->second != v) {
            throw std::runtime_error("cache conflict at " + path + ":" + std::to_string(lineno));
        }
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string kind;
        is >> kind;
        if (kind == "beta" || kind == "c") {
            std::string mi, val;
            if (!(is >> mi >> val)) throw std::runtime_error("bad cache line " + std::to_string(lineno));
            if (kind == "beta")
                insert(beta_, MultiIndex::decode(mi), parse_rational(val));
            else
                insert(c_, MultiIndex::decode(mi), parse_rational(val));
        } else if (kind == "f" || kind == "r") {
            unsigned g;
            std::string mi, val;
            if (!(is >> g >> mi >> val)) throw std::runtime_error("bad cache line " + std::to_string(lineno));
            auto key = std::make_pair(g, MultiIndex::decode(mi));
            if (kind == "f")
                insert(f_, key, parse_rational(val));
            else
                insert(r_, key, parse_rational(val));
        } else {
            throw std::runtime_error("unknown cache record '" + kind + "' at line " +
                                     std::to_string(lineno));
        }
    }
}

namespace {

// kappa_sigma(dbar) for one permutation, given as image array.
MultiIndex cycle_type_index(const std::vector<unsigned>& dbar, const std::vector<int>& perm) {
    const int k = static_cast<int>(dbar.size());
    std::vector<bool> seen(k, false);
    MultiIndex prod;
    for (int s = 0; s < k; ++s) {
        if (seen[s]) continue;
        unsigned cycle_sum = 0;
        int cur = s;
        while (!seen[cur]) {
            seen[cur] = true;
            cycle_sum += dbar[cur];
            cur = perm[cur];
        }
        prod = prod + MultiIndex::unit(cycle_sum);
    }
    return prod;
}

} // namespace

bool sk_sum_check(LiuXuTable& table, unsigned g, const std::vector<unsigned>& dbar) {
    if (g < 2) throw std::invalid_argument("sk_sum_check: genus must be >= 2");
    unsigned total = std::accumulate(dbar.begin(), dbar.end(), 0u);
    if (total != g - 2) throw std::invalid_argument("sk_sum_check: parts must sum to g-2");
    for (unsigned d : dbar)
        if (d == 0) throw std::invalid_argument("sk_sum_check: parts must be positive");

    const int k = static_cast<int>(dbar.size());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Rational lhs = 0;
    do {
        lhs += table.r_value(g, cycle_type_index(dbar, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));

    Integer den_prod = 1;
    for (unsigned d : dbar) den_prod *= double_factorial(2L * d + 1);
    Rational rhs = Rational(factorial(2UL * g - 3 + dbar.size()) * double_factorial(2L * g - 1)) /
                   Rational(factorial(2UL * g - 1) * den_prod);
    rhs.canonicalize();
    return lhs == rhs;
}

} // namespace tautring
