#pragma once

#include <deque>
#include <memory>
#include <unordered_map>
#include <vector>

#include "braidlift/error.hpp"
#include "braidlift/ncpoly.hpp"

namespace braidlift {

/// Toggle for the OpenMP batch-reduction path; the serial kernel is always
/// available and is what the parallel path must agree with.
void set_parallel_reduction(bool on);
bool parallel_reduction_enabled();

struct RewriteRule {
    int id;
    std::vector<uint16_t> lhs;  // G-free leading word
    int lhs_deg;
    NcPoly rhs;  // strictly below lhs in the monomial order
    bool alive = true;

    NcPoly as_relation(const Alphabet& al) const;  // lhs - rhs
};

/// Oriented, degree-truncated rule set. Confluent on words of total degree
/// <= completed_up_to() once complete() has run. Immutable afterwards;
/// reductions may then be called from several threads.
class RewriteSystem {
  public:
    RewriteSystem(std::shared_ptr<const Alphabet> al, int degree_bound);

    const Alphabet& al() const { return *al_; }
    std::shared_ptr<const Alphabet> alphabet_ptr() const { return al_; }
    int degree_bound() const { return degree_bound_; }
    int completed_up_to() const { return completed_up_to_; }

    std::vector<const RewriteRule*> rules() const;
    const RewriteRule* rule_for_lhs(const std::vector<uint16_t>& lhs) const;

    /// Memoized normal form; dispatches to the OpenMP path for large inputs.
    NcPoly reduce(const NcPoly& p) const;
    NcPoly reduce_serial(const NcPoly& p) const;
    NcPoly reduce_parallel(const NcPoly& p) const;
    /// Dense reference reducer: no indexing, no memoization; optional rule
    /// priority permutation and position strategy for confluence witnesses.
    NcPoly reduce_naive(const NcPoly& p, const std::vector<int>* rule_order = nullptr,
                        bool rightmost = false) const;

    NcPoly word_nf(const Word& w) const;
    bool word_irreducible(const std::vector<uint16_t>& ls) const;

    NcPoly multiply(const NcPoly& a, const NcPoly& b) const;
    NcPoly power(const NcPoly& p, int e) const;

    std::vector<long long> irreducible_by_degree(int max_deg) const;
    long long count_irreducible(int max_deg) const;

    void clear_caches() const;

  private:
    friend RewriteSystem complete(std::shared_ptr<const Alphabet> al,
                                  std::vector<NcPoly> relations, int degree_bound,
                                  std::vector<NcPoly>* def_prefix);

    std::shared_ptr<const Alphabet> al_;
    int degree_bound_;
    int completed_up_to_ = -1;
    std::vector<RewriteRule> rules_;  // indexed by id; dead rules keep their slot
    std::vector<std::vector<int>> first_letter_index_;

    struct VecHash {
        size_t operator()(const std::vector<uint16_t>& v) const;
    };
    using Cache = std::unordered_map<std::vector<uint16_t>, NcPoly, VecHash>;
    mutable std::vector<Cache> caches_;

    Cache& cache_for_thread() const;
    bool find_redex(const uint16_t* ls, size_t n, size_t skip_to, size_t* pos,
                    const RewriteRule** rule) const;
    const NcPoly& word_nf_ls(const std::vector<uint16_t>& ls, Cache& cache, int depth) const;
    NcPoly reduce_terms_serial(const std::vector<std::pair<Word, Coefficient>>& terms,
                               Cache& cache) const;
    NcPoly reduce_terms_omp(const std::vector<std::pair<Word, Coefficient>>& terms) const;
    NcPoly reduce_terms(std::vector<std::pair<Word, Coefficient>> terms) const;

    void rebuild_index();
    /// Reduce, orient and insert a relation; displaced rules are re-queued.
    void add_relation(NcPoly rel, std::deque<NcPoly>& pending, std::vector<int>* added);
    void check_degree(const NcPoly& p) const;
};

/// Truncated noncommutative Buchberger completion. All critical pairs of
/// total degree <= degree_bound are resolved. def_prefix, when given, is a
/// set of relations installed before the others (letter definitions).
RewriteSystem complete(std::shared_ptr<const Alphabet> al, std::vector<NcPoly> relations,
                       int degree_bound, std::vector<NcPoly>* def_prefix = nullptr);

}  // namespace braidlift
