#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>

#include "gneighbor/filter.hpp"
#include "gneighbor/hwsim.hpp"
#include "gneighbor/hwverify.hpp"
#include "gneighbor/metrics.hpp"
#include "gneighbor/noise.hpp"
#include "gneighbor/pgm.hpp"

namespace py = pybind11;
using namespace gneighbor;

namespace {

using U8Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

GrayImage to_image(const U8Array& arr) {
    if (arr.ndim() != 2)
        throw std::invalid_argument("expected a 2-D uint8 array (height x width)");
    GrayImage img(static_cast<int>(arr.shape(1)), static_cast<int>(arr.shape(0)));
    std::memcpy(img.pixels.data(), arr.data(), img.pixels.size());
    return img;
}

py::array_t<std::uint8_t> to_array(const GrayImage& img) {
    py::array_t<std::uint8_t> arr({img.height, img.width});
    std::memcpy(arr.mutable_data(), img.pixels.data(), img.pixels.size());
    return arr;
}

Aggregator parse_aggregator(const std::string& s) {
    if (s == "mean") return Aggregator::Mean;
    if (s == "median") return Aggregator::Median;
    throw std::invalid_argument("aggregator must be 'mean' or 'median'");
}

DistanceMode parse_distance(const std::string& s) {
    if (s == "abs") return DistanceMode::Abs;
    if (s == "xor") return DistanceMode::Xor;
    throw std::invalid_argument("distance must be 'abs' or 'xor'");
}

PaddingMode parse_padding(const std::string& s) {
    if (s == "zero") return PaddingMode::Zero;
    if (s == "replicate") return PaddingMode::Replicate;
    throw std::invalid_argument("padding must be 'zero' or 'replicate'");
}

FilterConfig make_config(int window, int threshold, const std::string& aggregator,
                         const std::string& distance, const std::string& padding,
                         bool adaptive) {
    FilterConfig cfg;
    cfg.window = window;
    cfg.threshold = threshold;
    cfg.aggregator = parse_aggregator(aggregator);
    cfg.distance = parse_distance(distance);
    cfg.padding = parse_padding(padding);
    cfg.adaptive = adaptive;
    cfg.validate();
    return cfg;
}

py::dict report_to_dict(const QualityReport& r) {
    py::dict d;
    d["mse"] = r.mse;
    d["psnr_db"] = r.psnr;
    d["ssim"] = r.ssim;
    d["ssim_l"] = r.luminance;
    d["ssim_c"] = r.contrast;
    d["ssim_s"] = r.structure;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Variable-pixel G-neighbor denoising filter, quality metrics, "
              "and a behavioral memristive pipeline simulator";

    // --- imaging -----------------------------------------------------------
    m.def(
        "load_pgm",
        [](py::bytes data) {
            std::string s = data;
            return to_array(load_pgm({s.begin(), s.end()}));
        },
        py::arg("data"), "Decode a PGM (P2/P5) byte string to a 2-D uint8 array.");
    m.def(
        "load_pnm",
        [](py::bytes data) {
            std::string s = data;
            return to_array(load_pnm({s.begin(), s.end()}));
        },
        py::arg("data"), "Decode PGM, or PPM color via integer luma.");
    m.def(
        "save_pgm",
        [](const U8Array& arr, bool binary) {
            auto bytes = save_pgm(to_image(arr), binary);
            return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
        },
        py::arg("image"), py::arg("binary") = true,
        "Encode a 2-D uint8 array as PGM bytes (P5, or P2 when binary=False).");
    m.def(
        "add_salt_pepper",
        [](const U8Array& arr, double density, std::uint64_t seed) {
            return to_array(add_salt_pepper(to_image(arr), {density, seed}));
        },
        py::arg("image"), py::arg("density") = 0.05, py::arg("seed") = 0,
        "Corrupt ~density of the pixels with 0/255 impulses, reproducibly.");
    m.def(
        "pad",
        [](const U8Array& arr, int radius, const std::string& padding) {
            return to_array(pad(to_image(arr), radius, parse_padding(padding)));
        },
        py::arg("image"), py::arg("radius"), py::arg("padding") = "zero");

    // --- filtering ----------------------------------------------------------
    m.def(
        "filter_image",
        [](const U8Array& arr, int window, int threshold, const std::string& aggregator,
           const std::string& distance, const std::string& padding, bool adaptive) {
            return to_array(filter_image(
                to_image(arr),
                make_config(window, threshold, aggregator, distance, padding, adaptive)));
        },
        py::arg("image"), py::arg("window") = 3, py::arg("threshold") = 13,
        py::arg("aggregator") = "mean", py::arg("distance") = "abs",
        py::arg("padding") = "zero", py::arg("adaptive") = true,
        "Variable-pixel G-neighbor filter (or square filter when adaptive=False).");
    m.def(
        "square_filter",
        [](const U8Array& arr, int window, const std::string& aggregator,
           const std::string& padding) {
            return to_array(square_filter(to_image(arr), window,
                                          parse_aggregator(aggregator),
                                          parse_padding(padding)));
        },
        py::arg("image"), py::arg("window") = 3, py::arg("aggregator") = "mean",
        py::arg("padding") = "zero");
    m.def(
        "gneighbor_mask",
        [](const U8Array& window, int threshold, const std::string& distance) {
            if (window.ndim() != 2 || window.shape(0) != window.shape(1))
                throw std::invalid_argument("window must be square");
            int w = static_cast<int>(window.shape(0));
            std::vector<std::uint8_t> vals(window.data(), window.data() + w * w);
            NeighborMask mask = gneighbor_mask(vals, w, threshold, parse_distance(distance));
            py::array_t<bool> out({w, w});
            for (int i = 0; i < w * w; ++i)
                out.mutable_data()[i] = mask.cells[i];
            return out;
        },
        py::arg("window"), py::arg("threshold") = 13, py::arg("distance") = "abs",
        "Boolean G-neighbor mask of a w*w window around its center pixel.");
    m.def(
        "pixel_distance",
        [](int a, int b, const std::string& distance) {
            if (a < 0 || a > 255 || b < 0 || b > 255)
                throw std::invalid_argument("intensities must be 8-bit");
            return pixel_distance(static_cast<std::uint8_t>(a),
                                  static_cast<std::uint8_t>(b), parse_distance(distance));
        },
        py::arg("a"), py::arg("b"), py::arg("distance") = "abs");

    // --- metrics -------------------------------------------------------------
    py::class_<CircleRoi>(m, "CircleRoi")
        .def(py::init<int, int, int>(), py::arg("center_x"), py::arg("center_y"),
             py::arg("radius"))
        .def_readwrite("center_x", &CircleRoi::center_x)
        .def_readwrite("center_y", &CircleRoi::center_y)
        .def_readwrite("radius", &CircleRoi::radius);
    py::class_<RectRoi>(m, "RectRoi")
        .def(py::init<int, int, int, int>(), py::arg("row_lo"), py::arg("row_hi"),
             py::arg("col_lo"), py::arg("col_hi"))
        .def_readwrite("row_lo", &RectRoi::row_lo)
        .def_readwrite("row_hi", &RectRoi::row_hi)
        .def_readwrite("col_lo", &RectRoi::col_lo)
        .def_readwrite("col_hi", &RectRoi::col_hi);

    m.def(
        "evaluate",
        [](const U8Array& reference, const U8Array& distorted,
           const std::optional<RoiSpec>& roi) {
            return report_to_dict(evaluate(to_image(reference), to_image(distorted), roi));
        },
        py::arg("reference"), py::arg("distorted"), py::arg("roi") = py::none(),
        "MSE, PSNR (dB, inf for identical), and SSIM with l/c/s components.");
    m.def(
        "roi_mask",
        [](const RoiSpec& roi, int width, int height) {
            auto mask = roi_mask(roi, width, height);
            py::array_t<bool> out({height, width});
            for (std::size_t i = 0; i < mask.size(); ++i)
                out.mutable_data()[i] = mask[i];
            return out;
        },
        py::arg("roi"), py::arg("width"), py::arg("height"));
    m.def("psnr_from_ssim", &psnr_from_ssim, py::arg("ssim"), py::arg("covariance"),
          "PSNR predicted from SSIM and 0-255-scale covariance (diagnostic).");

    // --- hardware simulator ---------------------------------------------------
    m.def(
        "pipeline_pixel",
        [](int ref, int neighbor, int g) {
            if (ref < 0 || ref > 255 || neighbor < 0 || neighbor > 255 || g < 0 || g > 255)
                throw std::invalid_argument("pipeline_pixel arguments must be 8-bit");
            return hw::pipeline_pixel(static_cast<std::uint8_t>(ref),
                                      static_cast<std::uint8_t>(neighbor),
                                      static_cast<std::uint8_t>(g));
        },
        py::arg("ref"), py::arg("neighbor"), py::arg("g"),
        "Full gate-level pipeline: XOR distance, crossbar storage, bit-by-bit "
        "comparison, SRAM latch. Returns the G-neighbor decision bit.");
    m.def(
        "hw_xor",
        [](unsigned a, unsigned b, int width) {
            return hw::bits_to_value(hw::xor_word(hw::to_bits(a, width), hw::to_bits(b, width)));
        },
        py::arg("a"), py::arg("b"), py::arg("width") = 8,
        "Word XOR through the MTL gate netlist.");
    m.def(
        "hw_compare_leq",
        [](unsigned d, unsigned g, int width) {
            return hw::compare_leq(hw::to_bits(d, width), hw::to_bits(g, width));
        },
        py::arg("d"), py::arg("g"), py::arg("width") = 8,
        "MSB-first gate-level magnitude comparison d <= g.");

    py::class_<hw::Crossbar>(m, "Crossbar")
        .def(py::init<int, int>(), py::arg("rows"), py::arg("cols"))
        .def_property_readonly("rows", &hw::Crossbar::rows)
        .def_property_readonly("cols", &hw::Crossbar::cols)
        .def(
            "write",
            [](hw::Crossbar& xbar, const std::vector<std::vector<bool>>& bits) {
                std::vector<hw::BitWord> words(bits.begin(), bits.end());
                xbar.write(words);
            },
            py::arg("bits"))
        .def("read", &hw::Crossbar::read, py::arg("row"), py::arg("col"))
        .def("read_node_voltage", &hw::Crossbar::read_node_voltage, py::arg("row"),
             py::arg("col"));

    m.def(
        "area_power",
        [](int pixels) {
            auto ledger = hw::AreaPowerLedger::reference(pixels);
            py::dict d;
            py::list blocks;
            for (const auto& e : ledger.entries) {
                py::dict b;
                b["block"] = e.name;
                b["area_um2"] = e.area_um2;
                b["power_mw"] = e.power_mw;
                blocks.append(b);
            }
            d["blocks"] = blocks;
            d["total_area_um2"] = ledger.total_area();
            d["total_power_mw"] = ledger.total_power();
            return d;
        },
        py::arg("pixels") = 1, "Per-block area/power ledger with totals.");
    m.def(
        "hw_verify",
        [](int bits, const std::vector<unsigned>& thresholds) {
            auto res = hw::verify_pipeline(bits, thresholds);
            py::dict d;
            d["suite"] = res.suite;
            d["cases"] = res.cases;
            d["failures"] = res.failures;
            d["counterexamples"] = res.counterexamples;
            return d;
        },
        py::arg("bits") = 4, py::arg("thresholds") = std::vector<unsigned>{0, 7, 15},
        "Exhaustive pipeline-vs-XOR-compare equivalence run.");
}
