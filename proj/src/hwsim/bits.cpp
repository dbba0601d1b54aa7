#include "gneighbor/hwsim.hpp"

#include <stdexcept>

namespace gneighbor::hw {

BitWord to_bits(unsigned value, int width) {
    if (width <= 0 || width > 31)
        throw std::invalid_argument("to_bits: width must be in [1, 31]");
    if (value >> width)
        throw std::invalid_argument("to_bits: value does not fit in width");
    BitWord bits(width);
    for (int i = 0; i < width; ++i)
        bits[i] = (value >> (width - 1 - i)) & 1u;
    return bits;
}

unsigned bits_to_value(const BitWord& bits) {
    unsigned value = 0;
    for (bool b : bits)
        value = (value << 1) | unsigned(b);
    return value;
}

std::string bits_to_string(const BitWord& bits) {
    std::string s;
    s.reserve(bits.size());
    for (bool b : bits)
        s += b ? '1' : '0';
    return s;
}

BitWord bits_from_string(const std::string& s) {
    BitWord bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bits_from_string: expected only '0'/'1'");
        bits.push_back(c == '1');
    }
    return bits;
}

}  // namespace gneighbor::hw
