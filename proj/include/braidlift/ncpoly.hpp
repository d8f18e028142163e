#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "braidlift/coeff.hpp"

namespace braidlift {

/// Generator blocks in canonical order. Words sort block A letters first,
/// then the group part, then Y, then X.
enum class Block : uint8_t { A = 0, G = 1, Y = 2, X = 3 };

using DegreeVector = std::vector<int>;

DegreeVector deg_add(const DegreeVector& a, const DegreeVector& b);
int deg_total(const DegreeVector& d);

struct Generator {
    std::string name;
    Block block;
    int index;  // position within its block; letter ids follow (block, index) order
    int degree;
    DegreeVector multideg;
};

enum class ExchangeMode : uint8_t { None = 0, Trivial = 1, Bichar = 2 };

/// A block-partitioned generator alphabet. Group-like generators are not
/// letters: the G part of a word is an integer exponent vector. Exchange of
/// the G part with letters, and sorting between blocks, is scalar-valued and
/// controlled by the mode tables.
struct Alphabet {
    int theta = 0;
    int order = 1;
    std::vector<std::vector<int>> qexp;  // q_ij = zeta^qexp[i][j]
    std::vector<Generator> gens;         // id = position; sorted by (block, index)
    bool has_g = false;
    std::vector<std::string> gnames;

    ExchangeMode sort_mode[4][4] = {};  // [left block][right block], left > right
    ExchangeMode gmove[4] = {};         // moving the G part right across a letter

    int find(const std::string& name) const;
    const Generator& gen(int id) const { return gens[id]; }
    long bichar_exp(const std::vector<int32_t>& m, const DegreeVector& d) const;
    Cyc zeta_pow(long e) const { return Cyc::zeta(order, e); }
    Cyc bichar(const DegreeVector& d, const DegreeVector& e) const;

    /// Scalar picked up when g^m moves right across the letters of span.
    Cyc g_move_scalar(const std::vector<int32_t>& m, const uint16_t* span, size_t len) const;
    /// Scalar for sorting letter a to the right of letter b (a currently left
    /// of b, blocks out of order): a b -> scalar * b a.
    Cyc sort_scalar(uint16_t a, uint16_t b) const;

    void check() const;  // invariants: id ordering, q_ii != 1 not enforced here
};

/// A word: non-G letters in sequence plus a G exponent vector that sits,
/// by convention, at the end of the word. An empty g vector means no G part.
struct Word {
    std::vector<uint16_t> ls;
    std::vector<int32_t> g;
    int deg = 0;

    bool operator==(const Word& o) const { return ls == o.ls && g == o.g; }
    bool is_identity() const { return ls.empty() && g.empty(); }
};

Word make_word(const Alphabet& al, std::vector<uint16_t> ls, std::vector<int32_t> g = {});
Word g_word(const Alphabet& al, std::vector<int32_t> g);

/// Strict total order: graded, then letter-sequence lex (ids follow block
/// precedence A < G < Y < X and index within block), then G part.
bool word_less(const Word& a, const Word& b);

int block_degree(const Alphabet& al, const Word& w, Block b);
std::string word_str(const Alphabet& al, const Word& w);

struct WordCmp {
    bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

/// Noncommutative polynomial: canonical words with nonzero Coefficients.
class NcPoly {
  public:
    NcPoly() : al_(nullptr) {}
    explicit NcPoly(const Alphabet* al) : al_(al) {}
    static NcPoly monomial(const Alphabet* al, Word w, Coefficient c);
    static NcPoly letter(const Alphabet* al, uint16_t id);
    static NcPoly one(const Alphabet* al);

    const Alphabet* alphabet() const { return al_; }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    int degree() const;  // max term degree; -1 for 0

    void add_term(const Word& w, const Coefficient& c);
    NcPoly operator-() const;
    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    NcPoly& scale(const Coefficient& c);
    NcPoly& scale(const Cyc& c);

    bool operator==(const NcPoly& o) const { return t_ == o.t_; }
    bool operator!=(const NcPoly& o) const { return !(*this == o); }

    /// Largest term in the monomial order; polynomial must be nonzero.
    const std::pair<const Word, Coefficient>& leading() const;

    const std::map<Word, Coefficient, WordCmp>& terms() const { return t_; }

    /// Sum of the terms whose total degree in the given block equals d.
    NcPoly component_by_block_degree(Block b, int d) const;
    int max_block_degree(Block b) const;

    /// Free product (concatenation with G bookkeeping), no reduction.
    friend NcPoly mul_free(const NcPoly& a, const NcPoly& b);

    NcPoly map_letters(const Alphabet* target, const std::vector<uint16_t>& letter_map) const;
    Coefficient coeff(const Word& w) const;

    std::string str() const;

  private:
    const Alphabet* al_;
    std::map<Word, Coefficient, WordCmp> t_;
};

/// a.g moved across b's letters, words concatenated: returns the exchange
/// scalar and the concatenated word.
std::pair<Cyc, Word> word_mul(const Alphabet& al, const Word& a, const Word& b);

}  // namespace braidlift
