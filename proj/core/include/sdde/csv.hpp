#pragma once

#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace sdde {

/// UTF-8 CSV with '#'-prefixed header comments. Doubles are written with
/// the shortest round-trip representation, so equal configs produce
/// byte-identical files.
class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path);

    void comment(const std::string& text);
    void header(const std::vector<std::string>& columns);
    void row(std::span<const double> values);

    static std::string format(double value);

  private:
    std::ofstream out_;
};

}  // namespace sdde
