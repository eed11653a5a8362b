#pragma once

#include <string>

namespace pcong {

using int128 = __int128;

/* libstdc++ has no operator<< for __int128, so coefficient values go through
   this when they end up in reports or error messages. */
std::string to_string(int128 v);

}  // namespace pcong
