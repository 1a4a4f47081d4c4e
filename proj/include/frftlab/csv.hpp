#ifndef FRFTLAB_CSV_HPP
#define FRFTLAB_CSV_HPP

#include <iosfwd>
#include <string>

#include "frftlab/types.hpp"

namespace frftlab {

// Signal file format: header "t,re,im", one row per grid point in grid order,
// >= 12 significant digits. Readers verify uniform spacing to relative 1e-9.

void write_signal_csv(std::ostream& os, const Signal& f);
void write_signal_csv(const std::string& path, const Signal& f);

Signal read_signal_csv(std::istream& is, const std::string& name = "<stream>");
Signal read_signal_csv(const std::string& path);

}  // namespace frftlab

#endif
