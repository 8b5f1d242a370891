#ifndef MONODROMY_VERSION_HPP
#define MONODROMY_VERSION_HPP

namespace monodromy {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace monodromy

#endif
