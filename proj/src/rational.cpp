#include "brk/rational.hpp"

namespace brkit {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
    for (char ch : text) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' ||
              ch == '+' || ch == '/'))
            throw std::invalid_argument("parse_rat: bad character in '" + text + "'");
    }
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("parse_rat: cannot parse '" + text + "'");
    if (sgn(r.get_den()) <= 0)
        throw std::invalid_argument("parse_rat: nonpositive denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

}  // namespace brkit
