#ifndef CHIVAR_NUMFORMAT_HPP
#define CHIVAR_NUMFORMAT_HPP

#include <cstdint>
#include <string>

namespace chivar {

// Locale-independent decimal rendering for CSV cells: 17 significant digits,
// '.' separator, no trailing zeros (std::to_chars general format).
std::string g17(double value);

std::string format_int(std::int64_t value);

} // namespace chivar

#endif
