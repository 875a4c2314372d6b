#include "lie/gaussian.hpp"
#include "lie/sqrt2.hpp"

#include <ostream>
#include <sstream>

namespace lie {

std::string CRat::str() const {
    if (im.is_zero()) return re.str();
    std::ostringstream os;
    if (!re.is_zero()) os << re.str() << (im.sign() > 0 ? "+" : "");
    if (im == Rat(1)) os << "i";
    else if (im == Rat(-1)) os << "-i";
    else os << im.str() << "i";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CRat& c) { return os << c.str(); }

std::string Rat2::str() const {
    if (b.is_zero()) return a.str();
    std::ostringstream os;
    if (!a.is_zero()) os << a.str() << (b.sign() > 0 ? "+" : "");
    if (b == Rat(1)) os << "s2";
    else if (b == Rat(-1)) os << "-s2";
    else os << b.str() << "*s2";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rat2& x) { return os << x.str(); }

} // namespace lie
