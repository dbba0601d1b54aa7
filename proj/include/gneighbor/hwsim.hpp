#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace gneighbor::hw {

/// Bit values 0 and 1 are carried as the voltage levels V_L and V_H.
struct LogicLevels {
    double v_low = 0.0;
    double v_high = 2.5;

    double voltage(bool bit) const { return bit ? v_high : v_low; }
};

// ---------------------------------------------------------------------------
// Bit words. All words are MSB-first; the ASCII rendering matches that order
// ("0111" is decimal 7).
// ---------------------------------------------------------------------------

using BitWord = std::vector<bool>;

BitWord to_bits(unsigned value, int width);
unsigned bits_to_value(const BitWord& bits);
std::string bits_to_string(const BitWord& bits);
BitWord bits_from_string(const std::string& s);

// ---------------------------------------------------------------------------
// Memristor device: two-state behavioral threshold switching.
// ---------------------------------------------------------------------------

enum class MemristorState {
    HighResistance,  // bit 0
    LowResistance,   // bit 1
};

struct MemristorDevice {
    MemristorState state = MemristorState::HighResistance;
    double v_threshold = 1.088;  // volts
    double r_on = 0.125e6;       // ohms
    double r_off = 1.14e6;       // ohms

    double resistance() const {
        return state == MemristorState::LowResistance ? r_on : r_off;
    }
    bool operator==(const MemristorDevice&) const = default;
};

/// Applies a voltage pulse: v >= +v_threshold switches ON, v <= -v_threshold
/// switches OFF, anything in between leaves the state untouched.
MemristorDevice device_step(MemristorDevice d, double v_applied);

// ---------------------------------------------------------------------------
// Memristive threshold logic (MTL) cell: inputs averaged into an ideal
// threshold inverter. The inverter threshold placement selects NOR or NAND.
// ---------------------------------------------------------------------------

struct MtlCell {
    int input_count = 2;
    double inverter_threshold = 0.0;  // volts
    bool output_inverted = true;      // the cell's CMOS inverter output
    LogicLevels levels;

    static MtlCell nor_cell(int inputs, LogicLevels levels = {});
    static MtlCell nand_cell(int inputs, LogicLevels levels = {});
    static MtlCell inverter(LogicLevels levels = {});  // 1-input NOR
};

/// V_A = mean input voltage; output is V_H when V_A < inverter_threshold
/// (inverting threshold device), V_L otherwise.
bool mtl_eval(const MtlCell& cell, const std::vector<bool>& inputs);

/// Two-input XOR composed of four MTL NAND cells:
///   t = NAND(a, b); XOR(a, b) = NAND(NAND(a, t), NAND(b, t)).
/// Every gate is evaluated through mtl_eval.
bool xor_tlg(bool a, bool b);

/// Word-level XOR: one xor_tlg gate per bit position.
BitWord xor_word(const BitWord& a, const BitWord& b);

/// MSB-first magnitude comparison, 1 iff unsigned(d) <= unsigned(g), built
/// only from MTL NAND/NOR cells and inverters.
bool compare_leq(const BitWord& d_bits, const BitWord& g_bits);

// ---------------------------------------------------------------------------
// Memristor crossbar with the two-cycle half-select write protocol and
// resistive-divider read.
// ---------------------------------------------------------------------------

struct CrossbarParams {
    double v_write = 2.0;  // V_w; V_w > V_thr and V_w/2 < V_thr
    double v_read = 1.0;   // V_r < V_thr, non-destructive
    double r_load = std::sqrt(0.125e6 * 1.14e6);  // geometric mean of R_on/R_off
    double v_t2 = 0.5;     // read-inverter threshold
    MemristorDevice device;  // prototype for every cell
};

class Crossbar {
public:
    Crossbar(int rows, int cols, CrossbarParams params = {});

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const CrossbarParams& params() const { return params_; }
    MemristorState state(int row, int col) const;

    /// Writes the whole matrix row by row, two voltage cycles per row.
    /// Cycle 1 sets the target-1 devices, cycle 2 resets the target-0
    /// devices; every device receives its actual cycle voltage through
    /// device_step and half-selected devices are checked untouched.
    void write(const std::vector<BitWord>& bits);

    /// Resistive-divider read: bit = [v_read * r_load / (r + r_load) > v_t2].
    /// The read pulse goes through device_step, so a destructive read would
    /// be detected rather than assumed away.
    bool read(int row, int col);

    /// Node voltage seen by the read inverter, for inspection.
    double read_node_voltage(int row, int col) const;

    BitWord read_row(int row);

private:
    int rows_;
    int cols_;
    CrossbarParams params_;
    std::vector<MemristorDevice> devices_;  // row-major

    MemristorDevice& device_at(int row, int col);
    const MemristorDevice& device_at(int row, int col) const;
    void apply_cycle(const std::vector<double>& v_rows,
                     const std::vector<double>& v_cols);
};

// ---------------------------------------------------------------------------
// SRAM latch gated by a word line.
// ---------------------------------------------------------------------------

class SramCell {
public:
    bool word_line() const { return word_line_; }
    void set_word_line(bool asserted) { word_line_ = asserted; }

    /// Latches the bit. Throws if the word line is deasserted; the stored
    /// value is untouched in that case.
    void write(bool bit);

    /// Returns the stored bit without changing it. Throws if the word line
    /// is deasserted.
    bool read() const;

private:
    bool stored_ = false;
    bool word_line_ = false;
};

// ---------------------------------------------------------------------------
// Per-pixel G-neighbor identification pipeline:
// XOR distance -> crossbar storage -> threshold array -> bit-by-bit
// comparison -> SRAM. Output equals [(ref ^ neighbor) <= g].
// ---------------------------------------------------------------------------

struct PipelineTrace {
    BitWord reference;
    BitWord neighbor;
    BitWord distance;        // xor_word output
    BitWord distance_read;   // read back from the first crossbar
    BitWord threshold_read;  // read back from the threshold crossbar
    bool is_gneighbor = false;
    bool sram_bit = false;
};

bool pipeline_pixel(std::uint8_t ref, std::uint8_t neighbor, std::uint8_t g);
bool pipeline_pixel(std::uint8_t ref, std::uint8_t neighbor, std::uint8_t g,
                    PipelineTrace& trace);

// ---------------------------------------------------------------------------
// Area / power ledger.
// ---------------------------------------------------------------------------

struct AreaPowerEntry {
    std::string name;
    double area_um2 = 0.0;
    double power_mw = 0.0;
};

struct AreaPowerLedger {
    std::vector<AreaPowerEntry> entries;

    /// The reference single-pixel-pair circuit blocks, scaled linearly for
    /// `pixels` parallel units.
    static AreaPowerLedger reference(int pixels = 1);

    double total_area() const;
    double total_power() const;
};

std::string area_power_report_text(const AreaPowerLedger& ledger);
std::string area_power_report_csv(const AreaPowerLedger& ledger);
std::string area_power_report_json(const AreaPowerLedger& ledger);

}  // namespace gneighbor::hw
