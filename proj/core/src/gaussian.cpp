#include "tmzv/gaussian.hpp"

namespace tmzv {

GaussianRational i_pow(unsigned n) {
  switch (n % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::string GaussianRational::str() const { return re.str() + " + (" + im.str() + ")i"; }

}  // namespace tmzv
