#include "logtb/numbers.hpp"

#include <limits>

namespace logtb {

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

std::string format_rational(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
    const size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!looks_like_integer(text)) throw ParseError("bad rational: '" + text + "'");
        return Rational(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!looks_like_integer(num) || !looks_like_integer(den))
        throw ParseError("bad rational: '" + text + "'");
    const Int d(den);
    if (d.is_zero()) throw ParseError("zero denominator in '" + text + "'");
    return Rational(Int(num), d);
}

std::string format_int(const Int& v) { return v.str(); }

Int parse_int(const std::string& text) {
    if (!looks_like_integer(text)) throw ParseError("bad integer: '" + text + "'");
    return Int(text);
}

std::int64_t to_int64_checked(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi) throw ParseError("integer out of range for serialization: " + v.str());
    return v.convert_to<std::int64_t>();
}

}  // namespace logtb
