#include "gneighbor/pgm.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <limits>

namespace gneighbor {

PgmError::PgmError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
      offset_(offset) {}

namespace {

// Cursor over a PNM byte buffer. Header tokens are separated by whitespace;
// a '#' starts a comment running to end of line.
class Cursor {
public:
    explicit Cursor(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

    std::size_t pos() const { return pos_; }
    bool eof() const { return pos_ >= bytes_.size(); }

    void skip_space_and_comments() {
        while (!eof()) {
            std::uint8_t c = bytes_[pos_];
            if (c == '#') {
                while (!eof() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(c)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    // Parses a non-negative decimal integer token.
    long parse_uint(const char* what) {
        skip_space_and_comments();
        if (eof())
            throw PgmError(std::string("unexpected end of file reading ") + what, pos_);
        if (!std::isdigit(bytes_[pos_]))
            throw PgmError(std::string("malformed ") + what, pos_);
        long value = 0;
        while (!eof() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > std::numeric_limits<int>::max())
                throw PgmError(std::string(what) + " out of range", pos_);
            ++pos_;
        }
        return value;
    }

    std::uint8_t next_byte(const char* what) {
        if (eof())
            throw PgmError(std::string("truncated payload reading ") + what, pos_);
        return bytes_[pos_++];
    }

private:
    const std::vector<std::uint8_t>& bytes_;
    std::size_t pos_ = 0;
};

struct PnmHeader {
    char magic;  // '2', '3', '5', '6'
    int width;
    int height;
};

PnmHeader parse_header(Cursor& cur) {
    if (cur.eof() || cur.next_byte("magic") != 'P')
        throw PgmError("not a PNM file: missing 'P' magic", 0);
    std::uint8_t kind = cur.next_byte("magic");
    if (kind != '2' && kind != '3' && kind != '5' && kind != '6')
        throw PgmError("unsupported PNM variant P" + std::string(1, char(kind)), 1);

    long w = cur.parse_uint("width");
    long h = cur.parse_uint("height");
    if (w <= 0 || h <= 0)
        throw PgmError("degenerate image dimensions " + std::to_string(w) + "x" +
                           std::to_string(h),
                       cur.pos());
    cur.skip_space_and_comments();
    std::size_t maxval_at = cur.pos();
    long maxval = cur.parse_uint("maxval");
    if (maxval != 255)
        throw PgmError("unsupported maxval " + std::to_string(maxval) +
                           " (only 255 is supported)",
                       maxval_at);
    return {static_cast<char>(kind), static_cast<int>(w), static_cast<int>(h)};
}

std::uint8_t parse_ascii_sample(Cursor& cur) {
    cur.skip_space_and_comments();
    std::size_t at = cur.pos();
    long v = cur.parse_uint("sample");
    if (v > 255)
        throw PgmError("sample value " + std::to_string(v) + " exceeds maxval", at);
    return static_cast<std::uint8_t>(v);
}

GrayImage decode(const std::vector<std::uint8_t>& bytes, bool allow_color) {
    Cursor cur(bytes);
    PnmHeader hdr = parse_header(cur);
    bool color = (hdr.magic == '3' || hdr.magic == '6');
    bool binary = (hdr.magic == '5' || hdr.magic == '6');
    if (color && !allow_color)
        throw PgmError("PPM color input where PGM grayscale is required", 1);

    std::size_t n = static_cast<std::size_t>(hdr.width) * hdr.height;
    GrayImage img(hdr.width, hdr.height);

    if (binary) {
        // Exactly one whitespace byte separates maxval from the payload.
        std::uint8_t sep = cur.next_byte("payload");
        if (!std::isspace(sep))
            throw PgmError("missing whitespace before binary payload", cur.pos() - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (color) {
                std::uint8_t r = cur.next_byte("payload");
                std::uint8_t g = cur.next_byte("payload");
                std::uint8_t b = cur.next_byte("payload");
                img.pixels[i] = luma(r, g, b);
            } else {
                img.pixels[i] = cur.next_byte("payload");
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            if (color) {
                std::uint8_t r = parse_ascii_sample(cur);
                std::uint8_t g = parse_ascii_sample(cur);
                std::uint8_t b = parse_ascii_sample(cur);
                img.pixels[i] = luma(r, g, b);
            } else {
                img.pixels[i] = parse_ascii_sample(cur);
            }
        }
    }
    return img;
}

}  // namespace

GrayImage load_pgm(const std::vector<std::uint8_t>& bytes) {
    return decode(bytes, /*allow_color=*/false);
}

GrayImage load_pnm(const std::vector<std::uint8_t>& bytes) {
    return decode(bytes, /*allow_color=*/true);
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img, bool binary) {
    if (img.width <= 0 || img.height <= 0 ||
        img.pixels.size() != static_cast<std::size_t>(img.width) * img.height)
        throw std::invalid_argument("save_pgm: empty or inconsistent image");

    std::string header = std::string(binary ? "P5" : "P2") + "\n" +
                         std::to_string(img.width) + " " + std::to_string(img.height) +
                         "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    if (binary) {
        out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    } else {
        std::string body;
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                body += std::to_string(img.at(x, y));
                body += (x + 1 == img.width) ? '\n' : ' ';
            }
        }
        out.insert(out.end(), body.begin(), body.end());
    }
    return out;
}

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

GrayImage load_pgm_file(const std::string& path) { return load_pgm(read_file(path)); }

GrayImage load_pnm_file(const std::string& path) { return load_pnm(read_file(path)); }

void save_pgm_file(const GrayImage& img, const std::string& path, bool binary) {
    auto bytes = save_pgm(img, binary);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open file for writing: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

}  // namespace gneighbor
