#include "gneighbor/hwsim.hpp"

#include <stdexcept>

namespace gneighbor::hw {

MtlCell MtlCell::nor_cell(int inputs, LogicLevels levels) {
    if (inputs < 1)
        throw std::invalid_argument("MtlCell: need at least one input");
    // NOR: output high only when every input is low. The smallest nonzero
    // V_A is v_low + (v_high - v_low)/n, so the threshold sits halfway
    // between v_low and that level.
    MtlCell cell;
    cell.input_count = inputs;
    cell.levels = levels;
    cell.inverter_threshold = levels.v_low + (levels.v_high - levels.v_low) / (2.0 * inputs);
    return cell;
}

MtlCell MtlCell::nand_cell(int inputs, LogicLevels levels) {
    if (inputs < 1)
        throw std::invalid_argument("MtlCell: need at least one input");
    // NAND: output low only when every input is high, so the threshold sits
    // halfway between the all-high average and the one-low average.
    MtlCell cell;
    cell.input_count = inputs;
    cell.levels = levels;
    cell.inverter_threshold = levels.v_high - (levels.v_high - levels.v_low) / (2.0 * inputs);
    return cell;
}

MtlCell MtlCell::inverter(LogicLevels levels) { return nor_cell(1, levels); }

bool mtl_eval(const MtlCell& cell, const std::vector<bool>& inputs) {
    if (static_cast<int>(inputs.size()) != cell.input_count)
        throw std::invalid_argument("mtl_eval: input count mismatch");
    double sum = 0.0;
    for (bool b : inputs)
        sum += cell.levels.voltage(b);
    double v_avg = sum / cell.input_count;
    bool below = v_avg < cell.inverter_threshold;
    return cell.output_inverted ? below : !below;
}

namespace {

bool nand2(bool a, bool b) {
    static const MtlCell cell = MtlCell::nand_cell(2);
    return mtl_eval(cell, {a, b});
}

bool nor2(bool a, bool b) {
    static const MtlCell cell = MtlCell::nor_cell(2);
    return mtl_eval(cell, {a, b});
}

bool not1(bool a) {
    static const MtlCell cell = MtlCell::inverter();
    return mtl_eval(cell, {a});
}

}  // namespace

bool xor_tlg(bool a, bool b) {
    bool t = nand2(a, b);
    return nand2(nand2(a, t), nand2(b, t));
}

BitWord xor_word(const BitWord& a, const BitWord& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("xor_word: width mismatch");
    BitWord out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = xor_tlg(a[i], b[i]);
    return out;
}

bool compare_leq(const BitWord& d_bits, const BitWord& g_bits) {
    if (d_bits.size() != g_bits.size())
        throw std::invalid_argument("compare_leq: width mismatch");

    // MSB-first iterative comparator cell:
    //   leq(i..n) = (d_i < g_i) OR ((d_i == g_i) AND leq(i+1..n))
    // unrolled from the LSB, every operation an MTL gate:
    //   lt  = AND(NOT d, g)          -> inverter + NAND + inverter
    //   eq  = NOT(XOR(d, g))         -> four NANDs + inverter
    //   acc = OR(lt, AND(eq, acc))   -> NAND + inverter + NOR + inverter
    bool acc = true;  // empty suffixes are equal, and d == g counts as <=
    for (std::size_t i = d_bits.size(); i-- > 0;) {
        bool d = d_bits[i];
        bool g = g_bits[i];
        bool lt = not1(nand2(not1(d), g));
        bool eq = not1(xor_tlg(d, g));
        bool keep = not1(nand2(eq, acc));
        acc = not1(nor2(lt, keep));
    }
    return acc;
}

}  // namespace gneighbor::hw
