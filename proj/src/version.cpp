#include "wavelab/version.hpp"

#include <boost/version.hpp>
#include <fftw3.h>

namespace wavelab {

std::string library_version() { return WAVELAB_VERSION; }

std::string fftw_version() { return ::fftw_version; }

std::string boost_version() {
  return std::to_string(BOOST_VERSION / 100000) + "." + std::to_string(BOOST_VERSION / 100 % 1000) +
         "." + std::to_string(BOOST_VERSION % 100);
}

std::string compiler_version() {
#if defined(__clang__)
  return "clang " __clang_version__;
#elif defined(__GNUC__)
  return "gcc " __VERSION__;
#else
  return "unknown";
#endif
}

}  // namespace wavelab
