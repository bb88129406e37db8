#include "qamgolay/gaussian_int.hpp"

#include <sstream>

namespace qamgolay {

std::string GaussianInt::str() const {
    std::ostringstream os;
    if (im == 0) {
        os << re;
    } else if (re == 0) {
        os << im << "i";
    } else {
        os << re << (im > 0 ? "+" : "") << im << "i";
    }
    return os.str();
}

} // namespace qamgolay
