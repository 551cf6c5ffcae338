#include "pachner/rational.hpp"

#include "pachner/errors.hpp"

namespace pachner {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r(s);
            r.canonicalize();
            return r;
        }
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw parse_error("malformed rational: " + s);
        Rational r(num + "/" + den);
        if (r.get_den() == 0) throw parse_error("zero denominator: " + s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational: " + s);
    }
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace pachner
