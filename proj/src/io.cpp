#include "wavedecay/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "wavedecay/errors.hpp"

namespace wavedecay {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return {buf, res.ptr};
}

std::string format_sci17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

void write_csv(const std::string& path, const std::string& header,
               std::span<const double> col0, std::span<const double> col1) {
    std::ofstream out(path);
    if (!out) throw error("cannot open '" + path + "' for writing");
    out << header << "\n";
    for (std::size_t i = 0; i < col0.size(); ++i)
        out << format_sci17(col0[i]) << "," << format_sci17(col1[i]) << "\n";
    if (!out) throw error("write failed for '" + path + "'");
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw error("write failed for '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace wavedecay
