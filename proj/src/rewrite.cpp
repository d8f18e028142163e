#include "braidlift/rewrite.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace braidlift {

namespace {

std::atomic<bool> g_parallel{true};

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int this_thread() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

bool contains_factor(const std::vector<uint16_t>& hay, const std::vector<uint16_t>& needle) {
    if (needle.size() > hay.size()) return false;
    for (size_t i = 0; i + needle.size() <= hay.size(); ++i)
        if (std::equal(needle.begin(), needle.end(), hay.begin() + i)) return true;
    return false;
}

}  // namespace

void set_parallel_reduction(bool on) { g_parallel = on; }
bool parallel_reduction_enabled() { return g_parallel; }

NcPoly RewriteRule::as_relation(const Alphabet& al) const {
    NcPoly p = -rhs;
    p.add_term(make_word(al, lhs), Coefficient::one(al.order));
    return p;
}

size_t RewriteSystem::VecHash::operator()(const std::vector<uint16_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t x : v) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

RewriteSystem::RewriteSystem(std::shared_ptr<const Alphabet> al, int degree_bound)
    : al_(std::move(al)), degree_bound_(degree_bound) {
    first_letter_index_.resize(al_->gens.size());
    caches_.resize(std::max(1, max_threads()));
}

std::vector<const RewriteRule*> RewriteSystem::rules() const {
    std::vector<const RewriteRule*> out;
    for (const auto& r : rules_)
        if (r.alive) out.push_back(&r);
    return out;
}

const RewriteRule* RewriteSystem::rule_for_lhs(const std::vector<uint16_t>& lhs) const {
    for (const auto& r : rules_)
        if (r.alive && r.lhs == lhs) return &r;
    return nullptr;
}

void RewriteSystem::rebuild_index() {
    for (auto& v : first_letter_index_) v.clear();
    for (const auto& r : rules_)
        if (r.alive) first_letter_index_[r.lhs[0]].push_back(r.id);
}

void RewriteSystem::clear_caches() const {
    for (auto& c : caches_) c.clear();
}

RewriteSystem::Cache& RewriteSystem::cache_for_thread() const {
    return caches_[this_thread() % caches_.size()];
}

bool RewriteSystem::find_redex(const uint16_t* ls, size_t n, size_t skip_to, size_t* pos,
                               const RewriteRule** rule) const {
    for (size_t i = skip_to; i < n; ++i) {
        for (int rid : first_letter_index_[ls[i]]) {
            const RewriteRule& r = rules_[rid];
            if (r.lhs.size() > n - i) continue;
            if (std::equal(r.lhs.begin(), r.lhs.end(), ls + i)) {
                *pos = i;
                *rule = &r;
                return true;
            }
        }
    }
    return false;
}

bool RewriteSystem::word_irreducible(const std::vector<uint16_t>& ls) const {
    size_t pos;
    const RewriteRule* r;
    return !find_redex(ls.data(), ls.size(), 0, &pos, &r);
}

const NcPoly& RewriteSystem::word_nf_ls(const std::vector<uint16_t>& ls, Cache& cache,
                                        int depth) const {
    if (depth > 200000) throw AlgebraError(AlgebraError::Kind::Orientation,
                                           "reduction does not terminate");
    auto it = cache.find(ls);
    if (it != cache.end()) return it->second;

    size_t pos;
    const RewriteRule* rule;
    NcPoly out(al_.get());
    if (!find_redex(ls.data(), ls.size(), 0, &pos, &rule)) {
        out = NcPoly::monomial(al_.get(), make_word(*al_, ls), Coefficient::one(al_->order));
    } else {
        const uint16_t* suffix = ls.data() + pos + rule->lhs.size();
        size_t suffix_len = ls.size() - pos - rule->lhs.size();
        for (const auto& [rw, rc] : rule->rhs.terms()) {
            Cyc scalar = al_->g_move_scalar(rw.g, suffix, suffix_len);
            std::vector<uint16_t> nls;
            nls.reserve(pos + rw.ls.size() + suffix_len);
            nls.insert(nls.end(), ls.begin(), ls.begin() + pos);
            nls.insert(nls.end(), rw.ls.begin(), rw.ls.end());
            nls.insert(nls.end(), suffix, suffix + suffix_len);
            const NcPoly& sub = word_nf_ls(nls, cache, depth + 1);
            Coefficient c = rc.scaled(scalar);
            for (const auto& [sw, sc] : sub.terms()) {
                Word w = sw;
                if (!rw.g.empty()) {
                    std::vector<int32_t> g(std::max(w.g.size(), rw.g.size()), 0);
                    for (size_t i = 0; i < w.g.size(); ++i) g[i] += w.g[i];
                    for (size_t i = 0; i < rw.g.size(); ++i) g[i] += rw.g[i];
                    w = make_word(*al_, w.ls, std::move(g));
                }
                out.add_term(w, c * sc);
            }
        }
    }
    return cache.emplace(ls, std::move(out)).first->second;
}

NcPoly RewriteSystem::word_nf(const Word& w) const {
    Cache& cache = cache_for_thread();
    const NcPoly& base = word_nf_ls(w.ls, cache, 0);
    if (w.g.empty()) return base;
    NcPoly out(al_.get());
    for (const auto& [bw, bc] : base.terms()) {
        std::vector<int32_t> g(std::max(bw.g.size(), w.g.size()), 0);
        for (size_t i = 0; i < bw.g.size(); ++i) g[i] += bw.g[i];
        for (size_t i = 0; i < w.g.size(); ++i) g[i] += w.g[i];
        out.add_term(make_word(*al_, bw.ls, std::move(g)), bc);
    }
    return out;
}

void RewriteSystem::check_degree(const NcPoly& p) const {
    if (completed_up_to_ >= 0 && p.degree() > completed_up_to_)
        throw AlgebraError(AlgebraError::Kind::DegreeOverflow,
                           "degree " + std::to_string(p.degree()) +
                               " exceeds completed degree " + std::to_string(completed_up_to_));
}

NcPoly RewriteSystem::reduce_terms_serial(const std::vector<std::pair<Word, Coefficient>>& terms,
                                          Cache& cache) const {
    NcPoly out(al_.get());
    for (const auto& [w, c] : terms) {
        const NcPoly& base = word_nf_ls(w.ls, cache, 0);
        for (const auto& [bw, bc] : base.terms()) {
            Word nw = bw;
            if (!w.g.empty()) {
                std::vector<int32_t> g(std::max(bw.g.size(), w.g.size()), 0);
                for (size_t i = 0; i < bw.g.size(); ++i) g[i] += bw.g[i];
                for (size_t i = 0; i < w.g.size(); ++i) g[i] += w.g[i];
                nw = make_word(*al_, bw.ls, std::move(g));
            }
            out.add_term(nw, c * bc);
        }
    }
    return out;
}

NcPoly RewriteSystem::reduce_terms_omp(const std::vector<std::pair<Word, Coefficient>>& terms) const {
#ifdef _OPENMP
    int nt = max_threads();
    std::vector<NcPoly> partial((size_t)nt, NcPoly(al_.get()));
#pragma omp parallel num_threads(nt)
    {
        int tid = this_thread();
        Cache& cache = caches_[tid % caches_.size()];
        NcPoly local(al_.get());
#pragma omp for schedule(dynamic, 16)
        for (long i = 0; i < (long)terms.size(); ++i) {
            std::vector<std::pair<Word, Coefficient>> one{terms[i]};
            local += reduce_terms_serial(one, cache);
        }
        partial[tid] = std::move(local);
    }
    NcPoly out(al_.get());
    for (auto& p : partial) out += p;
    return out;
#else
    return reduce_terms_serial(terms, cache_for_thread());
#endif
}

NcPoly RewriteSystem::reduce_terms(std::vector<std::pair<Word, Coefficient>> terms) const {
#ifdef _OPENMP
    if (g_parallel && terms.size() >= 64 && max_threads() > 1) return reduce_terms_omp(terms);
#endif
    return reduce_terms_serial(terms, cache_for_thread());
}

NcPoly RewriteSystem::reduce_serial(const NcPoly& p) const {
    check_degree(p);
    std::vector<std::pair<Word, Coefficient>> terms(p.terms().begin(), p.terms().end());
    return reduce_terms_serial(terms, cache_for_thread());
}

NcPoly RewriteSystem::reduce_parallel(const NcPoly& p) const {
    check_degree(p);
    std::vector<std::pair<Word, Coefficient>> terms(p.terms().begin(), p.terms().end());
    return reduce_terms_omp(terms);
}

NcPoly RewriteSystem::reduce(const NcPoly& p) const {
    check_degree(p);
    std::vector<std::pair<Word, Coefficient>> terms(p.terms().begin(), p.terms().end());
    return reduce_terms(std::move(terms));
}

NcPoly RewriteSystem::reduce_naive(const NcPoly& p, const std::vector<int>* rule_order,
                                   bool rightmost) const {
    std::vector<int> order;
    if (rule_order) {
        order = *rule_order;
    } else {
        for (const auto& r : rules_)
            if (r.alive) order.push_back(r.id);
    }
    NcPoly cur = p;
    while (true) {
        bool changed = false;
        for (const auto& [w, c] : cur.terms()) {
            // find a redex under the given strategy
            size_t n = w.ls.size();
            bool found = false;
            size_t fpos = 0;
            int frule = -1;
            for (size_t step = 0; step < n && !found; ++step) {
                size_t i = rightmost ? n - 1 - step : step;
                for (int rid : order) {
                    const RewriteRule& r = rules_[rid];
                    if (!r.alive || r.lhs.size() > n - i) continue;
                    if (std::equal(r.lhs.begin(), r.lhs.end(), w.ls.begin() + i)) {
                        found = true;
                        fpos = i;
                        frule = rid;
                        break;
                    }
                }
            }
            if (!found) continue;
            const RewriteRule& r = rules_[frule];
            Word head = w;
            Coefficient hc = c;
            cur.add_term(head, -hc);  // remove the term
            const uint16_t* suffix = head.ls.data() + fpos + r.lhs.size();
            size_t suffix_len = head.ls.size() - fpos - r.lhs.size();
            for (const auto& [rw, rc] : r.rhs.terms()) {
                Cyc scalar = al_->g_move_scalar(rw.g, suffix, suffix_len);
                std::vector<uint16_t> nls;
                nls.insert(nls.end(), head.ls.begin(), head.ls.begin() + fpos);
                nls.insert(nls.end(), rw.ls.begin(), rw.ls.end());
                nls.insert(nls.end(), suffix, suffix + suffix_len);
                std::vector<int32_t> g(std::max({head.g.size(), rw.g.size()}), 0);
                for (size_t i = 0; i < head.g.size(); ++i) g[i] += head.g[i];
                for (size_t i = 0; i < rw.g.size(); ++i) g[i] += rw.g[i];
                Coefficient nc = hc * rc;
                nc.scale(scalar);
                cur.add_term(make_word(*al_, std::move(nls), std::move(g)), nc);
            }
            changed = true;
            break;  // restart scan: the map changed under us
        }
        if (!changed) break;
    }
    return cur;
}

NcPoly RewriteSystem::multiply(const NcPoly& a, const NcPoly& b) const {
    std::vector<std::pair<Word, Coefficient>> tasks;
    tasks.reserve(a.term_count() * b.term_count());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            auto [s, w] = word_mul(*al_, wa, wb);
            if (completed_up_to_ >= 0 && w.deg > completed_up_to_)
                throw AlgebraError(AlgebraError::Kind::DegreeOverflow,
                                   "product degree " + std::to_string(w.deg) +
                                       " exceeds completed degree");
            Coefficient c = ca * cb;
            c.scale(s);
            if (!c.is_zero()) tasks.emplace_back(std::move(w), std::move(c));
        }
    }
    return reduce_terms(std::move(tasks));
}

NcPoly RewriteSystem::power(const NcPoly& p, int e) const {
    NcPoly acc = NcPoly::one(al_.get());
    for (int i = 0; i < e; ++i) acc = multiply(acc, p);
    return acc;
}

std::vector<long long> RewriteSystem::irreducible_by_degree(int max_deg) const {
    std::vector<long long> counts(max_deg + 1, 0);
    std::vector<uint16_t> word;
    // collect lhs lengths for suffix checks
    std::vector<const RewriteRule*> alive = rules();
    auto tail_reducible = [&](const std::vector<uint16_t>& w) {
        for (const auto* r : alive) {
            if (r->lhs.size() > w.size()) continue;
            if (std::equal(r->lhs.begin(), r->lhs.end(), w.end() - r->lhs.size())) return true;
        }
        return false;
    };
    struct Rec {
        const RewriteSystem* sys;
        std::vector<long long>* counts;
        int max_deg;
        std::vector<uint16_t> w;
        decltype(tail_reducible)* tail;
        void go(int deg) {
            (*counts)[deg]++;
            for (uint16_t id = 0; id < sys->al().gens.size(); ++id) {
                int nd = deg + sys->al().gens[id].degree;
                if (nd > max_deg) continue;
                w.push_back(id);
                if (!(*tail)(w)) go(nd);
                w.pop_back();
            }
        }
    } rec{this, &counts, max_deg, {}, &tail_reducible};
    rec.go(0);
    return counts;
}

long long RewriteSystem::count_irreducible(int max_deg) const {
    auto v = irreducible_by_degree(max_deg);
    long long s = 0;
    for (auto x : v) s += x;
    return s;
}

void RewriteSystem::add_relation(NcPoly rel, std::deque<NcPoly>& pending,
                                 std::vector<int>* added) {
    rel = reduce_terms_serial({rel.terms().begin(), rel.terms().end()}, cache_for_thread());
    if (rel.is_zero()) return;
    const auto& [lead_w, lead_c0] = rel.leading();
    if (lead_w.deg == 0)
        throw AlgebraError(AlgebraError::Kind::Inconsistency,
                           "derived constant relation: " + rel.str() + " = 0");
    NcPoly shifted(al_.get());
    if (!lead_w.g.empty()) {
        // multiply on the right by the inverse G monomial so the leading
        // word becomes G-free; no scalar is picked up
        std::vector<int32_t> shift = lead_w.g;
        for (auto& x : shift) x = -x;
        for (const auto& [w, c] : rel.terms()) {
            std::vector<int32_t> g(std::max(w.g.size(), shift.size()), 0);
            for (size_t i = 0; i < w.g.size(); ++i) g[i] += w.g[i];
            for (size_t i = 0; i < shift.size(); ++i) g[i] += shift[i];
            shifted.add_term(make_word(*al_, w.ls, std::move(g)), c);
        }
        rel = std::move(shifted);
    }
    const auto& [lhs_w, lhs_c] = rel.leading();
    Cyc lc;
    if (!lhs_c.is_scalar(&lc))
        throw AlgebraError(AlgebraError::Kind::Orientation,
                           "leading coefficient involves deformation parameters: " + rel.str());
    NcPoly rhs = rel;
    rhs.add_term(lhs_w, -lhs_c);
    rhs = -rhs;
    rhs.scale(lc.inverse());
    for (const auto& [w, c] : rhs.terms()) {
        if (w.ls == lhs_w.ls)
            throw AlgebraError(AlgebraError::Kind::Orientation,
                               "relation differs from its leading word by a group factor only");
        if (!word_less(w, lhs_w))
            throw AlgebraError(AlgebraError::Kind::Orientation, "rhs not below lhs");
    }

    int id = (int)rules_.size();
    rules_.push_back(RewriteRule{id, lhs_w.ls, lhs_w.deg, rhs, true});
    if (added) added->push_back(id);

    // displace rules whose lhs contains the new lhs
    for (auto& r : rules_) {
        if (!r.alive || r.id == id) continue;
        if (contains_factor(r.lhs, lhs_w.ls)) {
            r.alive = false;
            pending.push_back(r.as_relation(*al_));
        }
    }
    rebuild_index();
    clear_caches();
    // keep the surviving right-hand sides fully reduced
    for (auto& r : rules_) {
        if (!r.alive || r.id == id) continue;
        bool red = false;
        for (const auto& [w, c] : r.rhs.terms()) {
            size_t pos;
            const RewriteRule* rr;
            if (find_redex(w.ls.data(), w.ls.size(), 0, &pos, &rr)) {
                red = true;
                break;
            }
        }
        if (red) {
            r.rhs = reduce_terms_serial({r.rhs.terms().begin(), r.rhs.terms().end()},
                                        cache_for_thread());
            clear_caches();
        }
    }
}

RewriteSystem complete(std::shared_ptr<const Alphabet> al, std::vector<NcPoly> relations,
                       int degree_bound, std::vector<NcPoly>* def_prefix) {
    RewriteSystem sys(al, degree_bound);

    struct Overlap {
        int deg, i, j, k;
        bool operator>(const Overlap& o) const {
            return std::tie(deg, i, j, k) > std::tie(o.deg, o.i, o.j, o.k);
        }
    };
    std::priority_queue<Overlap, std::vector<Overlap>, std::greater<Overlap>> overlaps;

    auto enqueue_pairs = [&](int id) {
        const RewriteRule& a = sys.rules_[id];
        for (const auto& b : sys.rules_) {
            if (!b.alive) continue;
            for (int dir = 0; dir < 2; ++dir) {
                const RewriteRule& l = dir == 0 ? a : b;
                const RewriteRule& r = dir == 0 ? b : a;
                if (dir == 1 && l.id == r.id) continue;
                int maxk = (int)std::min(l.lhs.size(), r.lhs.size()) - 1;
                for (int k = 1; k <= maxk; ++k) {
                    if (!std::equal(r.lhs.begin(), r.lhs.begin() + k, l.lhs.end() - k)) continue;
                    int deg = l.lhs_deg;
                    for (size_t t = k; t < r.lhs.size(); ++t)
                        deg += al->gens[r.lhs[t]].degree;
                    if (deg <= degree_bound) overlaps.push(Overlap{deg, l.id, r.id, k});
                }
            }
        }
    };

    std::deque<NcPoly> pending;
    if (def_prefix)
        for (auto& p : *def_prefix) pending.push_back(p);
    for (auto& p : relations) {
        if (p.is_zero()) continue;
        if (p.degree() > degree_bound)
            throw AlgebraError(AlgebraError::Kind::DegreeOverflow,
                               "relation degree exceeds completion bound");
        pending.push_back(p);
    }

    auto drain = [&]() {
        while (!pending.empty()) {
            NcPoly p = std::move(pending.front());
            pending.pop_front();
            std::vector<int> added;
            sys.add_relation(std::move(p), pending, &added);
            for (int id : added) enqueue_pairs(id);
        }
    };

    drain();
    while (!overlaps.empty()) {
        Overlap o = overlaps.top();
        overlaps.pop();
        const RewriteRule& ri = sys.rules_[o.i];
        const RewriteRule& rj = sys.rules_[o.j];
        if (!ri.alive || !rj.alive) continue;
        // w = lhs_i . tail = head . lhs_j ; S-polynomial from the two reductions
        std::vector<uint16_t> tail(rj.lhs.begin() + o.k, rj.lhs.end());
        std::vector<uint16_t> head(ri.lhs.begin(), ri.lhs.end() - o.k);
        NcPoly left = mul_free(ri.rhs, NcPoly::monomial(al.get(), make_word(*al, tail),
                                                        Coefficient::one(al->order)));
        NcPoly right = mul_free(NcPoly::monomial(al.get(), make_word(*al, head),
                                                 Coefficient::one(al->order)),
                                rj.rhs);
        NcPoly s = left - right;
        if (!s.is_zero()) {
            pending.push_back(std::move(s));
            drain();
        }
    }

    sys.completed_up_to_ = degree_bound;
    sys.clear_caches();
    return sys;
}

}  // namespace braidlift
