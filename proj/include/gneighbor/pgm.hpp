#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gneighbor/image.hpp"

namespace gneighbor {

/// Parse failure with the byte offset where the problem was detected.
class PgmError : public std::runtime_error {
public:
    PgmError(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Decodes a PGM file (P2 ASCII or P5 binary), maxval 255 only.
GrayImage load_pgm(const std::vector<std::uint8_t>& bytes);

/// Encodes as P5 (binary=true) or P2 (binary=false), maxval 255.
/// load_pgm(save_pgm(img)) reproduces img bit-exactly.
std::vector<std::uint8_t> save_pgm(const GrayImage& img, bool binary = true);

/// Decodes PGM (P2/P5) directly, or PPM (P3/P6) via integer luma conversion.
GrayImage load_pnm(const std::vector<std::uint8_t>& bytes);

GrayImage load_pgm_file(const std::string& path);
GrayImage load_pnm_file(const std::string& path);
void save_pgm_file(const GrayImage& img, const std::string& path, bool binary = true);

}  // namespace gneighbor
