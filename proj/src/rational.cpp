#include "lie/rational.hpp"

#include <ostream>

namespace lie {

Rat Rat::parse(const std::string& s) {
    if (s.empty()) fail(Error::Kind::invalid_argument, "Rat::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        fail(Error::Kind::invalid_argument, "Rat::parse: bad rational '" + s + "'");
    if (q.get_den() == 0)
        fail(Error::Kind::invalid_argument, "Rat::parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rat(q);
}

long Rat::to_long() const {
    if (!is_integer()) fail(Error::Kind::invalid_argument, "Rat::to_long: not an integer");
    mpz_class n = num();
    if (!n.fits_slong_p()) fail(Error::Kind::size_cap, "Rat::to_long: out of range");
    return n.get_si();
}

mpz_class Rat::to_mpz() const {
    if (!is_integer()) fail(Error::Kind::invalid_argument, "Rat::to_mpz: not an integer");
    return num();
}

mpz_class Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

std::string Rat::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace lie
