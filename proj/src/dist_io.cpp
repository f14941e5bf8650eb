#include "mcube/dist_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include <json.hpp>

namespace mcube {

namespace {

constexpr char kMagic[4] = {'M', 'C', 'D', '1'};
constexpr int kJsonDimCap = 16;

static_assert(std::endian::native == std::endian::little,
              "MCD1 serialization assumes a little-endian host");

void check_dim_for_size(int n, std::size_t count, const std::filesystem::path& path) {
    if (n < 1 || n > kMaxDim || count != (std::uint64_t{1} << n))
        throw io_error("table size does not match dimension in " + path.string());
}

}  // namespace

void write_table(const std::filesystem::path& path, int n, const std::vector<double>& values,
                 TableFormat format) {
    if (n < 1 || values.size() != (std::uint64_t{1} << n))
        throw io_error("refusing to write table whose size does not match n");
    if (format == TableFormat::Json) {
        if (n > kJsonDimCap) throw io_error("JSON table format is limited to n <= 16");
        nlohmann::json j;
        j["n"] = n;
        j["probs"] = values;
        std::ofstream out(path);
        if (!out) throw io_error("cannot open " + path.string() + " for writing");
        out << j.dump() << '\n';
        if (!out) throw io_error("write failed for " + path.string());
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    out.write(kMagic, 4);
    const std::uint32_t dim = static_cast<std::uint32_t>(n);
    out.write(reinterpret_cast<const char*>(&dim), 4);
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size() * sizeof(double)));
    if (!out) throw io_error("write failed for " + path.string());
}

RawTable read_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string());
    char magic[4] = {};
    in.read(magic, 4);
    if (in.gcount() == 4 && std::memcmp(magic, kMagic, 4) == 0) {
        std::uint32_t dim = 0;
        in.read(reinterpret_cast<char*>(&dim), 4);
        if (!in || dim < 1 || dim > static_cast<std::uint32_t>(kMaxDim))
            throw io_error("bad MCD1 header in " + path.string());
        RawTable t;
        t.n = static_cast<int>(dim);
        t.values.resize(std::uint64_t{1} << t.n);
        in.read(reinterpret_cast<char*>(t.values.data()),
                static_cast<std::streamsize>(t.values.size() * sizeof(double)));
        if (!in || in.gcount() != static_cast<std::streamsize>(t.values.size() * sizeof(double)))
            throw io_error("truncated MCD1 payload in " + path.string());
        char extra = 0;
        if (in.read(&extra, 1), in.gcount() != 0)
            throw io_error("trailing bytes after MCD1 payload in " + path.string());
        return t;
    }
    // JSON fallback.
    in.close();
    std::ifstream jin(path);
    if (!jin) throw io_error("cannot open " + path.string());
    nlohmann::json j;
    try {
        jin >> j;
    } catch (const nlohmann::json::exception& e) {
        throw io_error("neither MCD1 nor JSON table: " + path.string() + " (" + e.what() + ")");
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("probs"))
        throw io_error("JSON table needs fields n and probs: " + path.string());
    RawTable t;
    t.n = j["n"].get<int>();
    if (t.n < 1 || t.n > kJsonDimCap)
        throw io_error("JSON table format is limited to n <= 16: " + path.string());
    t.values = j["probs"].get<std::vector<double>>();
    check_dim_for_size(t.n, t.values.size(), path);
    return t;
}

DenseDistribution read_distribution(const std::filesystem::path& path, int dense_cap) {
    RawTable t = read_table(path);
    try {
        return make_distribution(t.n, std::move(t.values), dense_cap);
    } catch (const std::invalid_argument& e) {
        throw io_error("file " + path.string() + " is not a valid distribution: " + e.what());
    }
}

}  // namespace mcube
