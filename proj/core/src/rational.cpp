#include <bihom/errors.hpp>
#include <bihom/rational.hpp>

#include <cctype>

namespace bihom {

namespace {

bool parse_integer_part(const std::string& s, std::size_t begin, std::size_t end) {
    if (begin >= end) return false;
    std::size_t i = begin;
    if (s[i] == '-' || s[i] == '+') ++i;
    if (i >= end) return false;
    for (; i < end; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat rat_from_string(const std::string& s) {
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!parse_integer_part(s, 0, s.size()))
            throw ParseError("bad rational literal: '" + s + "'");
    } else {
        if (!parse_integer_part(s, 0, slash) || !parse_integer_part(s, slash + 1, s.size()))
            throw ParseError("bad rational literal: '" + s + "'");
        if (s.find('/', slash + 1) != std::string::npos)
            throw ParseError("bad rational literal: '" + s + "'");
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("bad rational literal: '" + s + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw ParseError("zero denominator in rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    return r.get_str(); // canonical form; "/1" is already omitted by GMP
}

} // namespace bihom
