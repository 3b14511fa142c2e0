#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(ZLADDER_FIXTURE_DIR) + "/" + name;
}

// zeros.csv: "# zeta-zeros v1" then one height per line.
inline std::vector<double> load_zeros() {
    std::ifstream in(fixture_path("zeros.csv"));
    if (!in) throw std::runtime_error("missing fixtures/zeros.csv");
    std::string line;
    std::getline(in, line);
    if (line != "# zeta-zeros v1")
        throw std::runtime_error("zeros.csv: unexpected header: " + line);
    std::vector<double> zeros;
    while (std::getline(in, line))
        if (!line.empty()) zeros.push_back(std::stod(line));
    return zeros;
}

struct ZFixture {
    double t, z;
};

inline std::vector<ZFixture> load_z_values() {
    std::ifstream in(fixture_path("z_values.csv"));
    if (!in) throw std::runtime_error("missing fixtures/z_values.csv");
    std::string line;
    std::getline(in, line);
    if (line != "# z-values v1")
        throw std::runtime_error("z_values.csv: unexpected header: " + line);
    std::vector<ZFixture> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        out.push_back({std::stod(line.substr(0, comma)),
                       std::stod(line.substr(comma + 1))});
    }
    return out;
}

}  // namespace testutil
