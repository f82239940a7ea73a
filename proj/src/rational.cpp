#include "qf/rational.hpp"

#include "qf/errors.hpp"

#include <cctype>
#include <sstream>

namespace qf {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw input_error("empty rational");
    std::size_t i = 0;
    auto digits = [&](const char* what) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw input_error(std::string("expected ") + what + " in rational '" + text + "'");
        return text.substr(start, i - start);
    };
    bool neg = false;
    if (text[i] == '-') { neg = true; ++i; }
    else if (text[i] == '+') ++i;
    BigInt num(digits("numerator"));
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = BigInt(digits("denominator"));
        if (den == 0) throw input_error("zero denominator in rational '" + text + "'");
    }
    if (i != text.size()) throw input_error("trailing characters in rational '" + text + "'");
    if (neg) num = -num;
    return Rational(num, den);
}

std::string show_rational(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace qf
