#include "braidlift/ncpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace braidlift {

DegreeVector deg_add(const DegreeVector& a, const DegreeVector& b) {
    DegreeVector r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

int deg_total(const DegreeVector& d) {
    int s = 0;
    for (int x : d) s += x;
    return s;
}

int Alphabet::find(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name) return (int)i;
    return -1;
}

long Alphabet::bichar_exp(const std::vector<int32_t>& m, const DegreeVector& d) const {
    long e = 0;
    for (size_t i = 0; i < m.size() && i < qexp.size(); ++i) {
        if (m[i] == 0) continue;
        for (size_t j = 0; j < d.size(); ++j) {
            if (d[j] == 0) continue;
            e += (long)m[i] * d[j] * qexp[i][j];
        }
    }
    return e;
}

Cyc Alphabet::bichar(const DegreeVector& d, const DegreeVector& e) const {
    std::vector<int32_t> m(d.begin(), d.end());
    return zeta_pow(bichar_exp(m, e));
}

Cyc Alphabet::g_move_scalar(const std::vector<int32_t>& m, const uint16_t* span,
                            size_t len) const {
    if (m.empty()) return Cyc::one(order);
    DegreeVector acc(theta, 0);
    for (size_t i = 0; i < len; ++i) {
        const Generator& g = gens[span[i]];
        if (gmove[(int)g.block] == ExchangeMode::Bichar)
            acc = deg_add(acc, g.multideg);
        else if (gmove[(int)g.block] == ExchangeMode::None)
            throw std::runtime_error("no G exchange defined for block of " + g.name);
    }
    return zeta_pow(bichar_exp(m, acc));
}

Cyc Alphabet::sort_scalar(uint16_t a, uint16_t b) const {
    const Generator& ga = gens[a];
    const Generator& gb = gens[b];
    ExchangeMode mode = sort_mode[(int)ga.block][(int)gb.block];
    switch (mode) {
        case ExchangeMode::Trivial: return Cyc::one(order);
        case ExchangeMode::Bichar: return bichar(ga.multideg, gb.multideg);
        default:
            throw std::runtime_error("no exchange rule between " + ga.name + " and " + gb.name);
    }
}

void Alphabet::check() const {
    for (size_t i = 1; i < gens.size(); ++i) {
        auto key = [](const Generator& g) { return std::make_pair((int)g.block, g.index); };
        if (!(key(gens[i - 1]) < key(gens[i])))
            throw std::runtime_error("alphabet letters not in canonical (block, index) order");
    }
}

namespace {

void normalize_g(std::vector<int32_t>& g) {
    bool all0 = true;
    for (auto x : g)
        if (x != 0) { all0 = false; break; }
    if (all0) g.clear();
}

}  // namespace

Word make_word(const Alphabet& al, std::vector<uint16_t> ls, std::vector<int32_t> g) {
    Word w;
    w.ls = std::move(ls);
    if (!g.empty()) g.resize(al.theta, 0);
    normalize_g(g);
    w.g = std::move(g);
    w.deg = 0;
    for (auto id : w.ls) w.deg += al.gens[id].degree;
    return w;
}

Word g_word(const Alphabet& al, std::vector<int32_t> g) { return make_word(al, {}, std::move(g)); }

bool word_less(const Word& a, const Word& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.ls != b.ls) return std::lexicographical_compare(a.ls.begin(), a.ls.end(),
                                                          b.ls.begin(), b.ls.end());
    return std::lexicographical_compare(a.g.begin(), a.g.end(), b.g.begin(), b.g.end());
}

int block_degree(const Alphabet& al, const Word& w, Block b) {
    int d = 0;
    for (auto id : w.ls)
        if (al.gens[id].block == b) d += al.gens[id].degree;
    return d;
}

std::string word_str(const Alphabet& al, const Word& w) {
    // canonical print slots: A letters, G part, then Y/X letters
    std::ostringstream os;
    bool first = true;
    auto emit_run = [&](const std::string& name, int count) {
        if (count == 0) return;
        if (!first) os << "*";
        first = false;
        os << name;
        if (count != 1) os << "^" << count;
    };
    size_t i = 0;
    auto flush_letters = [&](bool (*pred)(Block)) {
        while (i < w.ls.size() && pred(al.gens[w.ls[i]].block)) {
            uint16_t id = w.ls[i];
            int count = 0;
            while (i < w.ls.size() && w.ls[i] == id) { ++count; ++i; }
            emit_run(al.gens[id].name, count);
        }
    };
    flush_letters([](Block b) { return b == Block::A; });
    for (int j = 0; j < (int)w.g.size(); ++j)
        if (w.g[j] != 0) emit_run(al.gnames[j], w.g[j]);
    flush_letters([](Block) { return true; });
    if (first) return "1";
    return os.str();
}

NcPoly NcPoly::monomial(const Alphabet* al, Word w, Coefficient c) {
    NcPoly p(al);
    p.add_term(w, c);
    return p;
}

NcPoly NcPoly::letter(const Alphabet* al, uint16_t id) {
    return monomial(al, make_word(*al, {id}), Coefficient::one(al->order));
}

NcPoly NcPoly::one(const Alphabet* al) {
    return monomial(al, make_word(*al, {}), Coefficient::one(al->order));
}

int NcPoly::degree() const {
    if (t_.empty()) return -1;
    return t_.rbegin()->first.deg;
}

void NcPoly::add_term(const Word& w, const Coefficient& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

NcPoly NcPoly::operator-() const {
    NcPoly r(al_);
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    if (!al_) al_ = o.al_;
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    if (!al_) al_ = o.al_;
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
}

NcPoly& NcPoly::scale(const Coefficient& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    std::map<Word, Coefficient, WordCmp> out;
    for (const auto& [w, v] : t_) {
        Coefficient p = v * c;
        if (!p.is_zero()) out.emplace(w, std::move(p));
    }
    t_ = std::move(out);
    return *this;
}

NcPoly& NcPoly::scale(const Cyc& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [w, v] : t_) v.scale(c);
    return *this;
}

const std::pair<const Word, Coefficient>& NcPoly::leading() const {
    if (t_.empty()) throw std::runtime_error("leading term of zero polynomial");
    return *t_.rbegin();
}

NcPoly NcPoly::component_by_block_degree(Block b, int d) const {
    NcPoly r(al_);
    for (const auto& [w, c] : t_)
        if (block_degree(*al_, w, b) == d) r.t_.emplace(w, c);
    return r;
}

int NcPoly::max_block_degree(Block b) const {
    int m = -1;
    for (const auto& [w, c] : t_) m = std::max(m, block_degree(*al_, w, b));
    return m;
}

std::pair<Cyc, Word> word_mul(const Alphabet& al, const Word& a, const Word& b) {
    Cyc scalar = al.g_move_scalar(a.g, b.ls.data(), b.ls.size());
    Word w;
    w.ls.reserve(a.ls.size() + b.ls.size());
    w.ls = a.ls;
    w.ls.insert(w.ls.end(), b.ls.begin(), b.ls.end());
    std::vector<int32_t> g(std::max(a.g.size(), b.g.size()), 0);
    for (size_t i = 0; i < a.g.size(); ++i) g[i] += a.g[i];
    for (size_t i = 0; i < b.g.size(); ++i) g[i] += b.g[i];
    normalize_g(g);
    w.g = std::move(g);
    w.deg = a.deg + b.deg;
    return {scalar, w};
}

NcPoly mul_free(const NcPoly& a, const NcPoly& b) {
    const Alphabet* al = a.al_ ? a.al_ : b.al_;
    NcPoly r(al);
    for (const auto& [wa, ca] : a.t_) {
        for (const auto& [wb, cb] : b.t_) {
            auto [s, w] = word_mul(*al, wa, wb);
            Coefficient c = ca * cb;
            c.scale(s);
            r.add_term(w, c);
        }
    }
    return r;
}

NcPoly NcPoly::map_letters(const Alphabet* target, const std::vector<uint16_t>& letter_map) const {
    NcPoly r(target);
    for (const auto& [w, c] : t_) {
        std::vector<uint16_t> ls;
        ls.reserve(w.ls.size());
        for (auto id : w.ls) ls.push_back(letter_map[id]);
        r.add_term(make_word(*target, std::move(ls), w.g), c);
    }
    return r;
}

Coefficient NcPoly::coeff(const Word& w) const {
    auto it = t_.find(w);
    if (it == t_.end()) return Coefficient(al_ ? al_->order : 1);
    return it->second;
}

std::string NcPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        if (!it->first.is_identity()) os << "*" << word_str(*al_, it->first);
    }
    return os.str();
}

}  // namespace braidlift
