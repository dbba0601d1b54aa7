#include "gneighbor/hwsim.hpp"

#include <stdexcept>

namespace gneighbor::hw {

MemristorDevice device_step(MemristorDevice d, double v_applied) {
    if (v_applied >= d.v_threshold) {
        d.state = MemristorState::LowResistance;
    } else if (v_applied <= -d.v_threshold) {
        d.state = MemristorState::HighResistance;
    }
    return d;
}

Crossbar::Crossbar(int rows, int cols, CrossbarParams params)
    : rows_(rows), cols_(cols), params_(params),
      devices_(static_cast<std::size_t>(rows) * cols, params.device) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("Crossbar: dimensions must be positive");
    const double v_thr = params_.device.v_threshold;
    if (!(params_.v_write > v_thr))
        throw std::invalid_argument("Crossbar: v_write must exceed the switching threshold");
    if (!(params_.v_write / 2.0 < v_thr))
        throw std::invalid_argument(
            "Crossbar: v_write/2 must stay below the switching threshold "
            "(half-selected cells would be disturbed)");
    if (!(params_.v_read < v_thr))
        throw std::invalid_argument("Crossbar: v_read must be below the switching threshold");
    if (params_.r_load <= 0.0)
        throw std::invalid_argument("Crossbar: r_load must be positive");
}

MemristorDevice& Crossbar::device_at(int row, int col) {
    return devices_[static_cast<std::size_t>(row) * cols_ + col];
}

const MemristorDevice& Crossbar::device_at(int row, int col) const {
    return devices_[static_cast<std::size_t>(row) * cols_ + col];
}

MemristorState Crossbar::state(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw std::out_of_range("Crossbar: index out of range");
    return device_at(row, col).state;
}

void Crossbar::apply_cycle(const std::vector<double>& v_rows,
                           const std::vector<double>& v_cols) {
    // The row wire is the positive device terminal.
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            device_at(i, j) = device_step(device_at(i, j), v_rows[i] - v_cols[j]);
}

void Crossbar::write(const std::vector<BitWord>& bits) {
    if (static_cast<int>(bits.size()) != rows_)
        throw std::invalid_argument("Crossbar::write: row count mismatch");
    for (const auto& row : bits)
        if (static_cast<int>(row.size()) != cols_)
            throw std::invalid_argument("Crossbar::write: column count mismatch");

    const double half = params_.v_write / 2.0;
    std::vector<double> v_rows(rows_, 0.0);
    std::vector<double> v_cols(cols_, 0.0);

    for (int r = 0; r < rows_; ++r) {
        // Target-1 columns are pulled to -V_w/2 for both cycles; only the
        // selected row voltage flips between the cycles.
        for (int j = 0; j < cols_; ++j)
            v_cols[j] = bits[r][j] ? -half : +half;

        for (int cycle = 0; cycle < 2; ++cycle) {
            std::vector<MemristorDevice> before = devices_;
            for (int i = 0; i < rows_; ++i)
                v_rows[i] = (i == r) ? (cycle == 0 ? +half : -half) : 0.0;
            apply_cycle(v_rows, v_cols);

            // Half-selected devices (every row but r) must be untouched.
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                for (int j = 0; j < cols_; ++j)
                    if (!(device_at(i, j) == before[static_cast<std::size_t>(i) * cols_ + j]))
                        throw std::logic_error("Crossbar::write: half-selected device disturbed");
            }
            // Cycle 2 must not flip the ones written in cycle 1.
            if (cycle == 1) {
                for (int j = 0; j < cols_; ++j) {
                    if (bits[r][j] &&
                        device_at(r, j).state != MemristorState::LowResistance)
                        throw std::logic_error("Crossbar::write: cycle 2 erased a written bit");
                }
            }
        }
    }
}

double Crossbar::read_node_voltage(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw std::out_of_range("Crossbar: index out of range");
    const MemristorDevice& d = device_at(row, col);
    return params_.v_read * params_.r_load / (d.resistance() + params_.r_load);
}

bool Crossbar::read(int row, int col) {
    double v_node = read_node_voltage(row, col);
    // Drive the read pulse through the device model; v_read sits below the
    // switching threshold so the state must come back unchanged.
    MemristorDevice& d = device_at(row, col);
    MemristorDevice after = device_step(d, params_.v_read);
    if (!(after == d))
        throw std::logic_error("Crossbar::read: read pulse disturbed the device");
    d = after;
    return v_node > params_.v_t2;
}

BitWord Crossbar::read_row(int row) {
    BitWord out(cols_);
    for (int j = 0; j < cols_; ++j)
        out[j] = read(row, j);
    return out;
}

void SramCell::write(bool bit) {
    if (!word_line_)
        throw std::logic_error("SramCell: write with word line deasserted");
    stored_ = bit;
}

bool SramCell::read() const {
    if (!word_line_)
        throw std::logic_error("SramCell: read with word line deasserted");
    return stored_;
}

}  // namespace gneighbor::hw
