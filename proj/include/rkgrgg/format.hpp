#pragma once

#include <string>

namespace rkgrgg {

/// Shortest decimal text that round-trips to the same double ("0.2", not
/// "0.200000"). Non-finite values print as "nan", "inf" or "-inf".
std::string format_double(double v);

/// printf-style "%.<digits>g".
std::string format_general(double v, int digits);

}  // namespace rkgrgg
