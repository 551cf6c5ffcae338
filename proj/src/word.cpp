#include "pachner/word.hpp"

#include "pachner/errors.hpp"

#include <sstream>

namespace pachner {

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

std::string to_string(const Letter& l) {
    std::ostringstream os;
    os << "a[";
    for (std::size_t i = 0; i < l.p.size(); ++i) os << (i ? "," : "") << l.p[i];
    os << "|";
    for (std::size_t i = 0; i < l.q.size(); ++i) os << (i ? "," : "") << l.q[i];
    if (l.has_twist) os << ";+" << (l.twist ? "-" : "+");
    os << "]";
    if (l.exponent == -1) os << "^-1";
    return os.str();
}

std::string to_string(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << to_string(w[i]);
    return os.str();
}

namespace {

std::vector<int> parse_labels(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) throw parse_error("empty label in letter: " + s);
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw parse_error("bad label '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw parse_error("empty label block: " + s);
    return out;
}

} // namespace

Letter parse_letter(const std::string& s) {
    if (s.size() < 6 || s.substr(0, 2) != "a[")
        throw parse_error("letter must start with 'a[': " + s);
    const auto close = s.find(']');
    if (close == std::string::npos) throw parse_error("letter missing ']': " + s);

    std::string body = s.substr(2, close - 2);
    Letter l;
    const auto semi = body.find(';');
    if (semi != std::string::npos) {
        const std::string suffix = body.substr(semi + 1);
        body = body.substr(0, semi);
        if (suffix.size() != 2 || (suffix[0] != '+' && suffix[0] != '-') ||
            (suffix[1] != '+' && suffix[1] != '-'))
            throw parse_error("orientation suffix must be two signs: " + s);
        l.has_twist = true;
        l.twist = (suffix[0] != suffix[1]) ? 1 : 0;
    }
    const auto bar = body.find('|');
    if (bar == std::string::npos) throw parse_error("letter missing '|': " + s);
    l.p = parse_labels(body.substr(0, bar));
    l.q = parse_labels(body.substr(bar + 1));

    const std::string tail = s.substr(close + 1);
    if (tail.empty())
        l.exponent = 1;
    else if (tail == "^-1" || tail == "^{-1}")
        l.exponent = -1;
    else if (tail == "^1")
        l.exponent = 1;
    else
        throw parse_error("bad exponent '" + tail + "' in letter " + s);
    return l;
}

Word parse_word(const std::string& s) {
    Word w;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) w.push_back(parse_letter(tok));
    return w;
}

} // namespace pachner
