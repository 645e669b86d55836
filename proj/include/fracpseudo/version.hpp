#ifndef FRACPSEUDO_VERSION_HPP
#define FRACPSEUDO_VERSION_HPP

namespace fracpseudo {

inline constexpr const char* version = "0.1.0";

}

#endif
