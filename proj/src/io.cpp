#include "ringforge/io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace ringforge {
namespace {

void write_all(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

std::string read_all(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path.string());
    return bytes;
}

// PGM header token reader: skips whitespace and '#' comments.
struct TokenReader {
    const std::string& s;
    std::size_t pos = 0;

    void skip_space_and_comments() {
        while (pos < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[pos]))) {
                ++pos;
            } else if (s[pos] == '#') {
                while (pos < s.size() && s[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    std::string token() {
        skip_space_and_comments();
        std::size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw IoError("pgm: truncated header");
        return s.substr(start, pos - start);
    }

    int int_token(const char* what) {
        std::string t = token();
        try {
            std::size_t used = 0;
            int v = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            return v;
        } catch (const std::exception&) {
            throw IoError(std::string("pgm: malformed ") + what + " field");
        }
    }
};

void put_u64_le(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint64_t get_u64_le(const std::string& s, std::size_t pos) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(s[pos + i])) << (8 * i);
    return v;
}

} // namespace

void save_pgm(const Image& img, const std::filesystem::path& path) {
    require_single_channel(img, "save_pgm");
    std::string bytes;
    bytes += "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    bytes.reserve(bytes.size() + img.data.size());
    for (double v : img.data) {
        long q = std::lround(v * 255.0); // rounds halves away from zero
        q = std::clamp(q, 0L, 255L);
        bytes.push_back(static_cast<char>(static_cast<unsigned char>(q)));
    }
    write_all(path, bytes);
}

Image load_pgm(const std::filesystem::path& path) {
    const std::string bytes = read_all(path);
    TokenReader r{bytes};
    if (r.token() != "P5") throw IoError("pgm: bad magic (expected P5)");
    const int width = r.int_token("width");
    const int height = r.int_token("height");
    const int maxval = r.int_token("maxval");
    if (width <= 0 || height <= 0) throw IoError("pgm: non-positive dimensions");
    if (maxval != 255) throw IoError("pgm: unsupported maxval (must be 255)");
    // Exactly one whitespace byte separates the header from the raster.
    if (r.pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[r.pos])))
        throw IoError("pgm: missing raster separator");
    ++r.pos;
    const std::size_t need = static_cast<std::size_t>(width) * height;
    if (bytes.size() - r.pos < need) throw IoError("pgm: truncated raster");
    Image img(height, width);
    for (std::size_t i = 0; i < need; ++i)
        img.data[i] = static_cast<unsigned char>(bytes[r.pos + i]) / 255.0;
    return img;
}

void save_tensor(const Tensor& t, const std::filesystem::path& path) {
    if (t.rank() == 0 || t.rank() > 4)
        throw ValidationError("save_tensor: rank must be between 1 and 4");
    std::string bytes = "RFT1";
    bytes.push_back(static_cast<char>(t.rank()));
    for (std::size_t e : t.shape) put_u64_le(bytes, e);
    for (double v : t.data) {
        const auto u = std::bit_cast<std::uint32_t>(static_cast<float>(v));
        for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<char>((u >> (8 * i)) & 0xFF));
    }
    write_all(path, bytes);
}

Tensor load_tensor(const std::filesystem::path& path) {
    const std::string bytes = read_all(path);
    if (bytes.size() < 5 || bytes.compare(0, 4, "RFT1") != 0)
        throw IoError("rft: bad magic");
    const int rank = static_cast<unsigned char>(bytes[4]);
    if (rank == 0 || rank > 4) throw IoError("rft: unsupported rank");
    std::size_t pos = 5;
    if (bytes.size() < pos + 8u * rank) throw IoError("rft: truncated extents");
    std::vector<std::size_t> shape(rank);
    for (int i = 0; i < rank; ++i) {
        shape[i] = static_cast<std::size_t>(get_u64_le(bytes, pos));
        pos += 8;
        if (shape[i] == 0) throw IoError("rft: zero extent");
    }
    const std::size_t n = Tensor::numel_of(shape);
    if (bytes.size() < pos + 4 * n) throw IoError("rft: truncated payload");
    if (bytes.size() > pos + 4 * n) throw IoError("rft: trailing bytes after payload");
    Tensor t(shape);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t u = 0;
        for (int b = 0; b < 4; ++b)
            u |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[pos + 4 * i + b]))
                 << (8 * b);
        t.data[i] = static_cast<double>(std::bit_cast<float>(u));
    }
    return t;
}

} // namespace ringforge
