#ifndef WAVEDECAY_IO_HPP
#define WAVEDECAY_IO_HPP

#include <span>
#include <string>
#include <vector>

namespace wavedecay {

// shortest round-trip decimal form (filenames, config echoes)
std::string format_double(double v);

// scientific notation with 17 significant digits (CSV payloads)
std::string format_sci17(double v);

// two-column CSV with a header row
void write_csv(const std::string& path, const std::string& header,
               std::span<const double> col0, std::span<const double> col1);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace wavedecay

#endif
