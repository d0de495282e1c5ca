// SPDX-License-Identifier: MIT
#ifndef URG_VERSION_HPP
#define URG_VERSION_HPP

#define URG_VERSION_MAJOR 1
#define URG_VERSION_MINOR 0
#define URG_VERSION_PATCH 0
#define URG_VERSION_STRING "1.0.0"

namespace urg {
inline const char* version() { return URG_VERSION_STRING; }
}  // namespace urg

#endif  // URG_VERSION_HPP
