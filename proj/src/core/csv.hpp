#pragma once

#include <fstream>
#include <iosfwd>
#include <string>
#include <vector>

namespace sevo::csv {

// Shortest round-trippable decimal form; identical input bits give identical
// text, which is what makes repeated runs byte-comparable.
std::string fmt(double v);
std::string fmt(int v);
std::string fmt(std::size_t v);

class Writer {
public:
    explicit Writer(const std::string& path);
    void header(const std::vector<std::string>& names);
    void row(const std::vector<std::string>& cells);
    // Convenience: formats every double with fmt().
    void row_values(const std::vector<double>& values);

private:
    std::ofstream out_;
};

}  // namespace sevo::csv
