#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "zq2/errors.hpp"
#include "zq2/ladder.hpp"

namespace zq2 {
namespace {

void format_header(char* buf, size_t n, const LadderTable::Params& p) {
    std::snprintf(buf, n,
                  "# ladder-table v1 grid_step=%.15g t_floor=%.15g "
                  "t_max=%.15g c0=%.15g rho=%.15g order=%d\n",
                  p.grid_step, p.t_floor, p.t_max, p.c0, p.rho, p.quad_order);
}

void format_row(char* buf, size_t n, const LadderRow& r) {
    std::snprintf(buf, n, "%.15g,%.15g,%.15g,%.15g\n", r.t, r.i, r.phi1,
                  r.phi1_prime);
}

// Single serialization path feeds both save() and the digest, so the digest
// always matches the cache file bytes.
void serialize(const LadderTable::Params& p, const std::vector<LadderRow>& rows,
               const std::function<void(const char*, size_t)>& sink) {
    char buf[256];
    format_header(buf, sizeof buf, p);
    sink(buf, std::char_traits<char>::length(buf));
    for (const LadderRow& r : rows) {
        format_row(buf, sizeof buf, r);
        sink(buf, std::char_traits<char>::length(buf));
    }
}

}  // namespace

void LadderTable::compute_digest() {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
    serialize(params_, rows_, [&h](const char* s, size_t n) {
        for (size_t i = 0; i < n; ++i) {
            h ^= std::uint8_t(s[i]);
            h *= 1099511628211ULL;
        }
    });
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", (unsigned long long)h);
    digest_ = out;
}

void LadderTable::validate_rows() {
    if (rows_.size() < 2) throw FormatError("ladder table: too few rows");
    const double step = params_.grid_step;
    double prev_i = -1.0;
    for (size_t j = 0; j < rows_.size(); ++j) {
        const LadderRow& r = rows_[j];
        if (j > 0 && std::abs(r.t - rows_[j - 1].t - step) > 1e-6 * step)
            throw FormatError(detail::msg("ladder table: grid spacing broken at t=", r.t));
        if (r.i < prev_i)
            throw FormatError(detail::msg("ladder table: I decreases at t=", r.t));
        prev_i = r.i;
        if (r.t >= 1e3 && r.phi1 >= r.t)
            throw FormatError(detail::msg("ladder table: phi1 >= t at t=", r.t));
    }
    // Coarse monotonicity: pick the smallest step in {1,2,4,8,16} units on
    // which strided phi1 increases strictly for t >= 1e3 (below that the
    // asymptotics behind phi1 have not set in; the transform operations
    // require T >= 1e3 anyway). Unit steps can fail near weak Z stretches,
    // e.g. around t ~ 1001.5 where a unit of I gains only ~0.76.
    coarse_stride_rows_ = 0;
    for (int units : {1, 2, 4, 8, 16}) {
        const size_t stride =
            std::max<size_t>(1, size_t(std::lround(double(units) / step)));
        bool ok = true;
        for (size_t j = stride; j < rows_.size() && ok; j += stride)
            if (rows_[j].t - step * double(stride) >= 1e3 &&
                rows_[j].phi1 <= rows_[j - stride].phi1)
                ok = false;
        if (ok) {
            coarse_stride_rows_ = stride;
            break;
        }
    }
    if (coarse_stride_rows_ == 0)
        throw FormatError(
            "ladder table: phi1 not increasing even at 16-unit steps; "
            "table corrupt");
}

void LadderTable::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
    if (!out) throw IoError(detail::msg("cannot open ", path.string(), " for writing"));
    serialize(params_, rows_, [&out](const char* s, size_t n) { out.write(s, long(n)); });
    out.flush();
    if (!out) throw IoError(detail::msg("write failed for ", path.string()));
}

LadderTable LadderTable::load(const std::filesystem::path& path,
                              const RunConfig& cfg) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(detail::msg("cannot open ", path.string()));

    std::string header;
    if (!std::getline(in, header))
        throw FormatError("ladder table: empty file");

    LadderTable table;
    table.cfg_ = cfg;
    LadderTable::Params& p = table.params_;
    {
        std::istringstream hs(header);
        std::string hash, name, version;
        hs >> hash >> name >> version;
        if (hash != "#" || name != "ladder-table" || version != "v1")
            throw FormatError(detail::msg("ladder table: bad header '", header, "'"));
        std::string kv;
        int seen = 0;
        while (hs >> kv) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw FormatError(detail::msg("ladder table: bad header field '", kv, "'"));
            const std::string key = kv.substr(0, eq);
            const double val = std::strtod(kv.c_str() + eq + 1, nullptr);
            if (key == "grid_step") p.grid_step = val;
            else if (key == "t_floor") p.t_floor = val;
            else if (key == "t_max") p.t_max = val;
            else if (key == "c0") p.c0 = val;
            else if (key == "rho") p.rho = val;
            else if (key == "order") p.quad_order = int(val);
            else throw FormatError(detail::msg("ladder table: unknown header field '", key, "'"));
            ++seen;
        }
        if (seen != 6)
            throw FormatError("ladder table: header must carry exactly 6 parameters");
    }
    if (p.grid_step <= 0 || p.t_max <= p.t_floor)
        throw FormatError("ladder table: inconsistent header parameters");

    table.cfg_.rho = p.rho;
    table.cfg_.t_floor = p.t_floor;
    table.cfg_.c0 = p.c0;

    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        LadderRow r;
        char* end = nullptr;
        const char* s = line.c_str();
        r.t = std::strtod(s, &end);
        if (*end != ',') throw FormatError(detail::msg("ladder table: bad row '", line, "'"));
        r.i = std::strtod(end + 1, &end);
        if (*end != ',') throw FormatError(detail::msg("ladder table: bad row '", line, "'"));
        r.phi1 = std::strtod(end + 1, &end);
        if (*end != ',') throw FormatError(detail::msg("ladder table: bad row '", line, "'"));
        r.phi1_prime = std::strtod(end + 1, &end);
        table.rows_.push_back(r);
    }
    const size_t expected =
        size_t((p.t_max - p.t_floor) / p.grid_step + 1e-9) + 1;
    if (table.rows_.size() != expected)
        throw FormatError(detail::msg("ladder table: expected ", expected,
                                      " rows, found ", table.rows_.size()));
    if (std::abs(table.rows_.front().t - p.t_floor) > 1e-9 ||
        std::abs(table.rows_.back().t - p.t_max) > 1e-6)
        throw FormatError("ladder table: row range disagrees with header");
    table.validate_rows();
    table.compute_digest();
    return table;
}

}  // namespace zq2
