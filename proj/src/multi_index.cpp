#include "tautring/multi_index.hpp"

#include <sstream>
#include <stdexcept>

namespace tautring {

namespace {
void trim(std::vector<unsigned>& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}
} // namespace

MultiIndex::MultiIndex(std::vector<unsigned> exponents) : e_(std::move(exponents)) {
    trim(e_);
}

unsigned MultiIndex::operator[](std::size_t part) const {
    if (part == 0 || part > e_.size()) return 0;
    return e_[part - 1];
}

unsigned MultiIndex::degree() const {
    unsigned d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += static_cast<unsigned>(i + 1) * e_[i];
    return d;
}

unsigned MultiIndex::weight() const {
    unsigned w = 0;
    for (unsigned x : e_) w += x;
    return w;
}

Integer MultiIndex::index_factorial() const {
    Integer f = 1;
    for (unsigned x : e_) {
        Integer t;
        mpz_fac_ui(t.get_mpz_t(), x);
        f *= t;
    }
    return f;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    std::vector<unsigned> e(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = (i < e_.size() ? e_[i] : 0) + (i < o.e_.size() ? o.e_[i] : 0);
    }
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
    if (!contains(o)) throw std::invalid_argument("MultiIndex subtraction would go negative");
    std::vector<unsigned> e(e_);
    for (std::size_t i = 0; i < o.e_.size(); ++i) e[i] -= o.e_[i];
    return MultiIndex(std::move(e));
}

bool MultiIndex::contains(const MultiIndex& o) const {
    if (o.e_.size() > e_.size()) return false;
    for (std::size_t i = 0; i < o.e_.size(); ++i)
        if (o.e_[i] > e_[i]) return false;
    return true;
}

MultiIndex MultiIndex::unit(unsigned part) {
    if (part == 0) throw std::invalid_argument("kappa part index must be >= 1");
    std::vector<unsigned> e(part, 0);
    e[part - 1] = 1;
    return MultiIndex(std::move(e));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& o) const {
    return e_ <=> o.e_;
}

std::string MultiIndex::encode() const {
    if (e_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) os << ',';
        os << e_[i];
    }
    return os.str();
}

MultiIndex MultiIndex::decode(const std::string& text) {
    std::vector<unsigned> e;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad multi-index encoding: " + text);
        std::size_t pos = 0;
        unsigned long v = std::stoul(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad multi-index encoding: " + text);
        e.push_back(static_cast<unsigned>(v));
    }
    return MultiIndex(std::move(e));
}

std::string MultiIndex::label() const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << 'k' << (i + 1);
        if (e_[i] > 1) os << '^' << e_[i];
    }
    return os.str();
}

bool kappa_less(const MultiIndex& a, const MultiIndex& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
}

void for_each_split(const MultiIndex& m,
                    const std::function<void(const MultiIndex&, const MultiIndex&)>& fn) {
    const auto& e = m.exponents();
    std::vector<unsigned> part(e.size(), 0);
    while (true) {
        std::vector<unsigned> rest(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) rest[i] = e[i] - part[i];
        fn(MultiIndex(part), MultiIndex(std::move(rest)));
        // odometer over the hyper-rectangle prod (m_i + 1)
        std::size_t i = 0;
        for (; i < e.size(); ++i) {
            if (part[i] < e[i]) {
                ++part[i];
                break;
            }
            part[i] = 0;
        }
        if (i == e.size()) break;
    }
}

} // namespace tautring
