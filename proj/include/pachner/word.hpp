#ifndef PACHNER_WORD_HPP
#define PACHNER_WORD_HPP

#include <string>
#include <vector>

namespace pachner {

// Generator a_{P,Q}^exponent. The label sequences are kept as written; any
// canonicalization (role order, cyclic orientation) is the groups module's
// job. For oriented groups the written order of each sequence carries the
// cyclic orientation; alternatively an explicit two-sign suffix fixes it.
struct Letter {
    std::vector<int> p, q;
    int exponent = 1;
    bool has_twist = false; // explicit orientation suffix present
    int twist = 0;          // relative orientation bit when has_twist

    Letter() = default;
    Letter(std::vector<int> p_, std::vector<int> q_, int e = 1)
        : p(std::move(p_)), q(std::move(q_)), exponent(e) {}

    Letter inverse() const {
        Letter l = *this;
        l.exponent = -l.exponent;
        return l;
    }

    bool operator==(const Letter& o) const {
        return p == o.p && q == o.q && exponent == o.exponent &&
               has_twist == o.has_twist && twist == o.twist;
    }
};

using Word = std::vector<Letter>;

// Reversed word with every letter inverted.
Word inverse(const Word& w);

// Text format: a[3,5|1,6,4]^-1, optional orientation suffix a[3,5|1,4,6;+-].
std::string to_string(const Letter& l);
std::string to_string(const Word& w);
Letter parse_letter(const std::string& s);
Word parse_word(const std::string& s);

} // namespace pachner

#endif
