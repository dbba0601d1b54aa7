#include "gneighbor/hwsim.hpp"

namespace gneighbor::hw {

bool pipeline_pixel(std::uint8_t ref, std::uint8_t neighbor, std::uint8_t g) {
    PipelineTrace trace;
    return pipeline_pixel(ref, neighbor, g, trace);
}

bool pipeline_pixel(std::uint8_t ref, std::uint8_t neighbor, std::uint8_t g,
                    PipelineTrace& trace) {
    constexpr int kWidth = 8;
    trace.reference = to_bits(ref, kWidth);
    trace.neighbor = to_bits(neighbor, kWidth);

    // Stage 1: distance through eight parallel XOR threshold logic gates.
    trace.distance = xor_word(trace.reference, trace.neighbor);

    // Stage 2: distance word into the first crossbar, threshold word into
    // the second. One 8-column row per stored word.
    Crossbar distance_array(1, kWidth);
    distance_array.write({trace.distance});
    Crossbar threshold_array(1, kWidth);
    threshold_array.write({to_bits(g, kWidth)});

    // Stage 3: element-wise read-back of both words.
    trace.distance_read = distance_array.read_row(0);
    trace.threshold_read = threshold_array.read_row(0);

    // Stage 4: bit-by-bit magnitude comparison.
    trace.is_gneighbor = compare_leq(trace.distance_read, trace.threshold_read);

    // Stage 5: latch the decision into SRAM and read it out.
    SramCell sram;
    sram.set_word_line(true);
    sram.write(trace.is_gneighbor);
    trace.sram_bit = sram.read();
    sram.set_word_line(false);
    return trace.sram_bit;
}

}  // namespace gneighbor::hw
