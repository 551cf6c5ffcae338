#ifndef PACHNER_GROUPS_HPP
#define PACHNER_GROUPS_HPP

#include "pachner/gale.hpp"
#include "pachner/word.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace pachner {

enum class Flavor { plain, oriented };

// Cyclic-orientation convention for the letters of oriented gon relators.
//
//   geometric - default. A generator carries the relative orientation
//               t = parity(P-sequence) xor parity(Q-sequence), invariant
//               under simultaneous transpositions of both parts; order-6
//               diagram letters additionally carry reference twists derived
//               from explicit realizations of the two diagrams and frozen
//               here. Reproduces the 120 / 1440 / 90 / 91 numbers.
//   circular  - relative orientation from the diagram's counterclockwise
//               traversal alone (no reference twist). Uncalibrated.
//   sorted    - every relator letter in the sorted-order class. Uncalibrated.
enum class OrientationPolicy { geometric, circular, sorted };

OrientationPolicy parse_policy(const std::string& name);

// Permutation parity of seq relative to its sorted order (0 even, 1 odd).
int sequence_parity(const std::vector<int>& seq);

// Canonical representative: sequences sorted, min(P) < min(Q) with the
// exponent adjusted via a_{Q,P} = a_{P,Q}^{-1}; oriented letters get an
// explicit twist (from the suffix when present, otherwise from the written
// sequence orders). Idempotent.
Letter canonicalize(const Letter& letter, Flavor flavor);

// Generator validity for the alphabet A_n^k.
void check_letter(const Letter& letter, int n, int k);

// Far commutativity: all four strict containment failures hold.
bool commutes_far(const Letter& a, const Letter& b);

// Canonical generator list for Gamma_n^k (plain) or Gamma~_n^k (oriented).
std::vector<Letter> generators(int n, int k, Flavor flavor);

// relation_word with orientation bits attached per the policy.
Word oriented_relation_word(const StandardGaleDiagram& diagram,
                            const std::vector<int>& m, OrientationPolicy policy);

// Finitely presented group with streamed relators.
struct Presentation {
    int n = 0;
    int k = 0;
    Flavor flavor = Flavor::plain;
    OrientationPolicy policy = OrientationPolicy::geometric;
    // Optional extra relator pack for k = 4 matching the involutive variant
    // of the group (off by default): squares of generators plus the two
    // commutation families on six distinct labels.
    bool involutive_pack = false;

    Presentation(int n_, int k_, Flavor f = Flavor::plain,
                 OrientationPolicy p = OrientationPolicy::geometric);

    std::vector<Letter> generator_list() const { return generators(n, k, flavor); }

    // (k+1)-gon relators: every standard diagram of order k+1, every injective
    // (k+1)-tuple of labels, in deterministic order.
    void for_each_gon_relator(const std::function<void(const Word&)>& fn) const;
    long long gon_relator_count() const;

    // Far-commutativity relators [g, h] over unordered generator pairs.
    void for_each_far_relator(const std::function<void(const Word&)>& fn) const;

    // All relator families (gon, far commutativity, optional k=4 pack).
    void for_each_relator(const std::function<void(const Word&)>& fn) const;
};

// Z2 chain supported on (d+1)-subsets of {1..n}.
struct Chain {
    int n = 0;
    int d = 0;
    std::set<std::vector<int>> support;

    bool is_zero() const { return support.empty(); }
    void toggle(const std::vector<int>& subset);
    Chain& operator+=(const Chain& o);
    bool operator==(const Chain& o) const {
        return n == o.n && d == o.d && support == o.support;
    }
    std::string str() const;
};

// Boundary of a formal simplex: all facets of S, coefficients in Z2.
Chain boundary(const std::vector<int>& s, int n);

// psi(a_{P,Q}) = boundary(P u Q); extended additively over the word
// (exponents are invisible mod 2).
Chain psi(const Word& word, int n, int d);

// Free reduction over canonical letters: cancel adjacent inverse pairs.
Word free_reduce(const Word& word, Flavor flavor);

// --- Z2 linear algebra over the generator coordinates ------------------

class GeneratorIndex {
  public:
    GeneratorIndex(int n, int k, Flavor flavor);

    int size() const { return static_cast<int>(index_.size()); }
    // Index of the canonical form of `letter`; throws bad_params on foreign letters.
    int index_of(const Letter& letter) const;
    Flavor flavor() const { return flavor_; }

  private:
    std::map<std::string, int> index_;
    Flavor flavor_;
};

using BitRow = std::vector<std::uint64_t>;

class Z2Echelon {
  public:
    explicit Z2Echelon(int columns);
    // Returns true if the row increased the rank.
    bool add(BitRow row);
    BitRow reduce(BitRow row) const;
    static bool is_zero(const BitRow& row);
    int rank() const { return rank_; }

  private:
    int words_;
    int rank_ = 0;
    std::vector<BitRow> rows_; // indexed by pivot bit
    std::vector<bool> have_;
};

BitRow abelianized_row(const Word& word, const GeneratorIndex& gens);

// Rank over Z2 of the abelianized gon relators (far commutativity abelianizes
// to zero and is skipped), plus optional extra word rows.
int abelianization_rank_z2(const Presentation& pres,
                           const std::vector<Word>& extra_words = {});

// True iff the word's abelianized row lies outside the relator span.
bool is_nontrivial_ab_z2(const Word& word, const Presentation& pres);

} // namespace pachner

#endif
