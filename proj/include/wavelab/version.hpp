#pragma once

#include <string>

namespace wavelab {

std::string library_version();
/// Version string reported by the linked FFTW.
std::string fftw_version();
/// "major.minor.patch" of the Boost headers the library was built with.
std::string boost_version();
std::string compiler_version();

}  // namespace wavelab
