#include "pachner/groups.hpp"

#include "pachner/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace pachner {

OrientationPolicy parse_policy(const std::string& name) {
    if (name == "geometric") return OrientationPolicy::geometric;
    if (name == "circular") return OrientationPolicy::circular;
    if (name == "sorted") return OrientationPolicy::sorted;
    throw bad_params("unknown orientation policy '" + name + "'");
}

int sequence_parity(const std::vector<int>& seq) {
    int parity = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) parity ^= 1;
    return parity;
}

namespace {

void check_disjoint_sets(const Letter& l) {
    for (int a : l.p)
        for (int b : l.q)
            if (a == b) throw bad_params("letter: P and Q intersect at " + std::to_string(a));
    auto has_dup = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) != v.end();
    };
    if (l.p.size() < 2 || l.q.size() < 2)
        throw bad_params("letter: both parts need at least two labels");
    if (has_dup(l.p) || has_dup(l.q)) throw bad_params("letter: repeated label");
}

} // namespace

Letter canonicalize(const Letter& letter, Flavor flavor) {
    check_disjoint_sets(letter);
    Letter out;
    out.exponent = letter.exponent;
    out.p = letter.p;
    out.q = letter.q;
    if (flavor == Flavor::oriented) {
        out.has_twist = true;
        out.twist = letter.has_twist
                        ? letter.twist
                        : (sequence_parity(letter.p) ^ sequence_parity(letter.q));
    }
    std::sort(out.p.begin(), out.p.end());
    std::sort(out.q.begin(), out.q.end());
    if (out.p[0] > out.q[0]) {
        std::swap(out.p, out.q);
        out.exponent = -out.exponent;
    }
    return out;
}

void check_letter(const Letter& letter, int n, int k) {
    check_disjoint_sets(letter);
    if (static_cast<int>(letter.p.size() + letter.q.size()) != k)
        throw bad_params("letter: |P u Q| must equal k");
    for (int a : letter.p)
        if (a < 1 || a > n) throw bad_params("letter: label out of range");
    for (int a : letter.q)
        if (a < 1 || a > n) throw bad_params("letter: label out of range");
}

bool commutes_far(const Letter& a, const Letter& b) {
    const Letter ca = canonicalize(a, Flavor::plain);
    const Letter cb = canonicalize(b, Flavor::plain);
    auto inter = [](const std::vector<int>& x, const std::vector<int>& y) {
        std::size_t c = 0;
        for (int v : x)
            if (std::binary_search(y.begin(), y.end(), v)) ++c;
        return c;
    };
    std::vector<int> sup_a = ca.p, sup_b = cb.p;
    sup_a.insert(sup_a.end(), ca.q.begin(), ca.q.end());
    sup_b.insert(sup_b.end(), cb.q.begin(), cb.q.end());
    std::sort(sup_a.begin(), sup_a.end());
    std::sort(sup_b.begin(), sup_b.end());
    return inter(ca.p, sup_b) < ca.p.size() && inter(ca.q, sup_b) < ca.q.size() &&
           inter(cb.p, sup_a) < cb.p.size() && inter(cb.q, sup_a) < cb.q.size();
}

std::vector<Letter> generators(int n, int k, Flavor flavor) {
    const int min_k = flavor == Flavor::oriented ? 5 : 4;
    if (k < min_k || k > n)
        throw bad_params("generators: need " + std::to_string(min_k) + " <= k <= n");
    std::vector<Letter> out;
    for (const auto& support : label_subsets(n, k)) {
        // Canonical role order puts the least label of the support in P.
        std::vector<int> rest(support.begin() + 1, support.end());
        for (int psize = 2; psize <= k - 2; ++psize) {
            for (const auto& pick : label_subsets(k - 1, psize - 1)) {
                std::vector<int> p = {support[0]};
                std::vector<bool> used(rest.size(), false);
                for (int idx : pick) {
                    p.push_back(rest[static_cast<std::size_t>(idx - 1)]);
                    used[static_cast<std::size_t>(idx - 1)] = true;
                }
                std::vector<int> q;
                for (std::size_t i = 0; i < rest.size(); ++i)
                    if (!used[i]) q.push_back(rest[i]);
                if (flavor == Flavor::plain) {
                    out.emplace_back(p, q, 1);
                } else {
                    for (int t = 0; t < 2; ++t) {
                        Letter l(p, q, 1);
                        l.has_twist = true;
                        l.twist = t;
                        out.push_back(std::move(l));
                    }
                }
            }
        }
    }
    return out;
}

namespace {

// Reference twists for the two order-6 standard diagrams, rays 1..6, derived
// from geometric realizations; see README for the calibration they pin down.
const std::map<std::vector<int>, std::array<int, 6>>& order6_twists() {
    static const std::map<std::vector<int>, std::array<int, 6>> table = {
        {{0, 1, 3, 5, 8, 10}, {0, 0, 1, 0, 0, 1}},
        {{0, 1, 4, 5, 8, 9}, {1, 1, 1, 1, 1, 1}},
    };
    return table;
}

} // namespace

Word oriented_relation_word(const StandardGaleDiagram& diagram,
                            const std::vector<int>& m, OrientationPolicy policy) {
    Word word = relation_word(diagram, m);
    const std::array<int, 6>* twists = nullptr;
    if (policy == OrientationPolicy::geometric && diagram.order == 6) {
        auto it = order6_twists().find(diagram.slots);
        if (it != order6_twists().end()) twists = &it->second;
    }
    for (std::size_t i = 0; i < word.size(); ++i) {
        Letter& l = word[i];
        l.has_twist = true;
        switch (policy) {
            case OrientationPolicy::sorted:
                l.twist = 0;
                break;
            case OrientationPolicy::circular:
            case OrientationPolicy::geometric:
                l.twist = sequence_parity(l.p) ^ sequence_parity(l.q);
                if (twists) l.twist ^= (*twists)[i];
                break;
        }
    }
    return word;
}

Presentation::Presentation(int n_, int k_, Flavor f, OrientationPolicy p)
    : n(n_), k(k_), flavor(f), policy(p) {
    const int min_k = flavor == Flavor::oriented ? 5 : 4;
    if (k < min_k || k > n)
        throw bad_params("presentation: need " + std::to_string(min_k) + " <= k <= n");
}

void Presentation::for_each_gon_relator(const std::function<void(const Word&)>& fn) const {
    const auto diagrams = enumerate_standard_diagrams(k + 1);
    for (const auto& diagram : diagrams) {
        for (const auto& subset : label_subsets(n, k + 1)) {
            std::vector<int> tuple = subset;
            do {
                fn(flavor == Flavor::plain ? relation_word(diagram, tuple)
                                           : oriented_relation_word(diagram, tuple, policy));
            } while (std::next_permutation(tuple.begin(), tuple.end()));
        }
    }
}

long long Presentation::gon_relator_count() const {
    long long tuples = 1;
    for (int i = 0; i < k + 1; ++i) tuples *= (n - i);
    return count_standard_diagrams(k + 1) * tuples;
}

void Presentation::for_each_far_relator(const std::function<void(const Word&)>& fn) const {
    const auto gens = generator_list();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (!commutes_far(gens[i], gens[j])) continue;
            Word w = {gens[i], gens[j], gens[i].inverse(), gens[j].inverse()};
            fn(w);
        }
}

void Presentation::for_each_relator(const std::function<void(const Word&)>& fn) const {
    for_each_gon_relator(fn);
    for_each_far_relator(fn);
    if (involutive_pack && k == 4) {
        const auto gens = generator_list();
        for (const auto& g : gens) fn(Word{g, g});
        auto inter = [](const std::vector<int>& x, const std::vector<int>& y) {
            std::size_t c = 0;
            for (int v : x)
                if (std::binary_search(y.begin(), y.end(), v)) ++c;
            return c;
        };
        // Since the squares make every generator involutive, role order is
        // immaterial; match the two commutation patterns under either reading.
        auto matches = [&](const Letter& a, const Letter& b) {
            for (const auto& [pa, qa] : {std::pair(a.p, a.q), std::pair(a.q, a.p)})
                for (const auto& [pb, qb] : {std::pair(b.p, b.q), std::pair(b.q, b.p)}) {
                    // shared pair: a_{m1m2,m3m4} and a_{m1m2,m5m6}, |{m3,m4} n {m5,m6}| <= 1
                    if (pa == pb && inter(qa, qb) <= 1) return true;
                    // linked pair: a_{m1m2,m3m4} and a_{m1m5,m2m6}, all labels distinct
                    if (inter(pa, pb) == 1) {
                        int m2 = -1;
                        for (int v : pa)
                            if (!std::binary_search(pb.begin(), pb.end(), v)) m2 = v;
                        std::vector<int> sup_a = pa;
                        sup_a.insert(sup_a.end(), qa.begin(), qa.end());
                        std::sort(sup_a.begin(), sup_a.end());
                        if (std::binary_search(qb.begin(), qb.end(), m2) &&
                            inter(pb, sup_a) == 1 && inter(qb, sup_a) == 1)
                            return true;
                    }
                }
            return false;
        };
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                if (matches(gens[i], gens[j]) || matches(gens[j], gens[i]))
                    fn(Word{gens[i], gens[j], gens[i].inverse(), gens[j].inverse()});
    }
}

void Chain::toggle(const std::vector<int>& subset) {
    auto it = support.find(subset);
    if (it == support.end())
        support.insert(subset);
    else
        support.erase(it);
}

Chain& Chain::operator+=(const Chain& o) {
    if (n != o.n || d != o.d) throw dimension_mismatch("chain: mixed (n, d)");
    for (const auto& s : o.support) toggle(s);
    return *this;
}

std::string Chain::str() const {
    if (support.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : support) {
        if (!first) os << " + ";
        first = false;
        for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    }
    return os.str();
}

Chain boundary(const std::vector<int>& s, int n) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw bad_arity("boundary: repeated label");
    if (sorted.size() < 2) throw bad_arity("boundary: need at least two labels");
    Chain c;
    c.n = n;
    c.d = static_cast<int>(sorted.size()) - 2;
    for (std::size_t drop = 0; drop < sorted.size(); ++drop) {
        std::vector<int> facet;
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (i != drop) facet.push_back(sorted[i]);
        c.toggle(facet);
    }
    return c;
}

Chain psi(const Word& word, int n, int d) {
    Chain c;
    c.n = n;
    c.d = d;
    for (const auto& l : word) {
        std::vector<int> support = l.p;
        support.insert(support.end(), l.q.begin(), l.q.end());
        std::sort(support.begin(), support.end());
        if (static_cast<int>(support.size()) != d + 2)
            throw bad_arity("psi: letter support must have d+2 labels");
        c += boundary(support, n);
    }
    return c;
}

Word free_reduce(const Word& word, Flavor flavor) {
    Word out;
    for (const auto& l : word) {
        Letter c = canonicalize(l, flavor);
        if (!out.empty()) {
            const Letter& top = out.back();
            if (top.p == c.p && top.q == c.q && top.exponent == -c.exponent &&
                top.twist == c.twist) {
                out.pop_back();
                continue;
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

std::string generator_key(const Letter& canonical) {
    std::ostringstream os;
    for (int v : canonical.p) os << v << ",";
    os << "|";
    for (int v : canonical.q) os << v << ",";
    if (canonical.has_twist) os << ";" << canonical.twist;
    return os.str();
}

} // namespace

GeneratorIndex::GeneratorIndex(int n, int k, Flavor flavor) : flavor_(flavor) {
    int i = 0;
    for (const auto& g : generators(n, k, flavor)) index_[generator_key(g)] = i++;
}

int GeneratorIndex::index_of(const Letter& letter) const {
    const Letter c = canonicalize(letter, flavor_);
    auto it = index_.find(generator_key(c));
    if (it == index_.end())
        throw bad_params("letter " + to_string(letter) + " is not a generator here");
    return it->second;
}

Z2Echelon::Z2Echelon(int columns)
    : words_((columns + 63) / 64), have_(static_cast<std::size_t>(columns), false) {
    rows_.resize(static_cast<std::size_t>(columns));
}

bool Z2Echelon::is_zero(const BitRow& row) {
    for (auto w : row)
        if (w) return false;
    return true;
}

namespace {

int top_bit(const BitRow& row) {
    for (int w = static_cast<int>(row.size()) - 1; w >= 0; --w) {
        if (!row[static_cast<std::size_t>(w)]) continue;
        return w * 64 + (63 - __builtin_clzll(row[static_cast<std::size_t>(w)]));
    }
    return -1;
}

void xor_into(BitRow& a, const BitRow& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

} // namespace

bool Z2Echelon::add(BitRow row) {
    for (;;) {
        const int p = top_bit(row);
        if (p < 0) return false;
        if (!have_[static_cast<std::size_t>(p)]) {
            have_[static_cast<std::size_t>(p)] = true;
            rows_[static_cast<std::size_t>(p)] = std::move(row);
            ++rank_;
            return true;
        }
        xor_into(row, rows_[static_cast<std::size_t>(p)]);
    }
}

BitRow Z2Echelon::reduce(BitRow row) const {
    for (;;) {
        const int p = top_bit(row);
        if (p < 0 || !have_[static_cast<std::size_t>(p)]) return row;
        xor_into(row, rows_[static_cast<std::size_t>(p)]);
    }
}

BitRow abelianized_row(const Word& word, const GeneratorIndex& gens) {
    BitRow row(static_cast<std::size_t>((gens.size() + 63) / 64), 0);
    for (const auto& l : word) {
        const int i = gens.index_of(l);
        row[static_cast<std::size_t>(i / 64)] ^= 1ULL << (i % 64);
    }
    return row;
}

int abelianization_rank_z2(const Presentation& pres, const std::vector<Word>& extra_words) {
    GeneratorIndex gens(pres.n, pres.k, pres.flavor);
    Z2Echelon ech(gens.size());
    pres.for_each_gon_relator([&](const Word& w) { ech.add(abelianized_row(w, gens)); });
    for (const auto& w : extra_words) ech.add(abelianized_row(w, gens));
    return ech.rank();
}

bool is_nontrivial_ab_z2(const Word& word, const Presentation& pres) {
    GeneratorIndex gens(pres.n, pres.k, pres.flavor);
    Z2Echelon ech(gens.size());
    pres.for_each_gon_relator([&](const Word& w) { ech.add(abelianized_row(w, gens)); });
    return !Z2Echelon::is_zero(ech.reduce(abelianized_row(word, gens)));
}

} // namespace pachner
