#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gneighbor/filter.hpp"
#include "gneighbor/hwsim.hpp"
#include "gneighbor/hwverify.hpp"
#include "gneighbor/metrics.hpp"
#include "gneighbor/noise.hpp"
#include "gneighbor/pgm.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gneighbor;

namespace {

const std::map<std::string, Aggregator> kAggregators{
    {"mean", Aggregator::Mean}, {"median", Aggregator::Median}};
const std::map<std::string, DistanceMode> kDistances{
    {"abs", DistanceMode::Abs}, {"xor", DistanceMode::Xor}};
const std::map<std::string, PaddingMode> kPaddings{
    {"zero", PaddingMode::Zero}, {"replicate", PaddingMode::Replicate}};

std::string aggregator_name(Aggregator a) {
    return a == Aggregator::Mean ? "mean" : "median";
}
std::string distance_name(DistanceMode d) {
    return d == DistanceMode::Abs ? "abs" : "xor";
}
std::string padding_name(PaddingMode p) {
    return p == PaddingMode::Zero ? "zero" : "replicate";
}

int threshold_from_norm(double t) {
    return static_cast<int>(std::floor(t * 255.0 + 0.5));
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

// Filter options shared by denoise and sweep.
struct FilterArgs {
    FilterConfig cfg;
    double threshold_norm = -1.0;  // set when --threshold-norm is used

    void attach(CLI::App* cmd, bool with_threshold) {
        cmd->add_option("--window,-w", cfg.window, "window size (odd, >= 3)")
            ->capture_default_str();
        if (with_threshold) {
            auto* t = cmd->add_option("--threshold,-t", cfg.threshold,
                                      "similarity threshold on the 0-255 scale")
                          ->check(CLI::Range(0, 255))
                          ->capture_default_str();
            cmd->add_option("--threshold-norm", threshold_norm,
                            "similarity threshold on the 0-1 scale")
                ->check(CLI::Range(0.0, 1.0))
                ->excludes(t);
        }
        cmd->add_option("--filter,-f", cfg.aggregator, "aggregation: mean|median")
            ->transform(CLI::CheckedTransformer(kAggregators, CLI::ignore_case))
            ->default_str("mean");
        cmd->add_option("--distance", cfg.distance, "pixel distance: abs|xor")
            ->transform(CLI::CheckedTransformer(kDistances, CLI::ignore_case))
            ->default_str("abs");
        cmd->add_option("--padding", cfg.padding, "border handling: zero|replicate")
            ->transform(CLI::CheckedTransformer(kPaddings, CLI::ignore_case))
            ->default_str("zero");
        cmd->add_flag("--adaptive,!--no-adaptive", cfg.adaptive,
                      "G-neighbor mask (default) vs full square window");
    }

    FilterConfig resolve() {
        if (threshold_norm >= 0.0)
            cfg.threshold = threshold_from_norm(threshold_norm);
        cfg.validate();
        return cfg;
    }
};

json config_echo(const std::string& command, const FilterConfig& cfg) {
    return json{{"command", command},
                {"window", cfg.window},
                {"threshold", cfg.threshold},
                {"threshold_norm", cfg.threshold / 255.0},
                {"filter", aggregator_name(cfg.aggregator)},
                {"distance", distance_name(cfg.distance)},
                {"padding", padding_name(cfg.padding)},
                {"adaptive", cfg.adaptive}};
}

std::optional<RoiSpec> parse_roi(const std::vector<int>& circle,
                                 const std::vector<int>& rect) {
    if (!circle.empty())
        return RoiSpec{CircleRoi{circle[0], circle[1], circle[2]}};
    if (!rect.empty())
        return RoiSpec{RectRoi{rect[0], rect[1], rect[2], rect[3]}};
    return std::nullopt;
}

std::string report_text(const QualityReport& r) {
    std::string out;
    out += "mse:    " + format_number(r.mse) + "\n";
    out += "psnr:   " + format_number(r.psnr) + " dB\n";
    out += "ssim:   " + format_number(r.ssim) + "\n";
    out += "  l/c/s: " + format_number(r.luminance) + " " +
           format_number(r.contrast) + " " + format_number(r.structure) + "\n";
    return out;
}

// ---------------------------------------------------------------------------

int run_noise(const std::string& in, const std::string& out, double density,
              std::uint64_t seed, bool ascii) {
    GrayImage img = load_pnm_file(in);
    GrayImage noisy = add_salt_pepper(img, {density, seed});
    save_pgm_file(noisy, out, !ascii);
    json echo{{"command", "noise"}, {"in", in},     {"out", out},
              {"density", density}, {"seed", seed}, {"width", img.width},
              {"height", img.height}};
    std::cout << echo.dump() << "\n";
    return 0;
}

int run_denoise(const std::string& in, const std::string& out, FilterArgs& args,
                bool ascii) {
    FilterConfig cfg = args.resolve();
    GrayImage img = load_pnm_file(in);
    GrayImage filtered = filter_image(img, cfg);
    save_pgm_file(filtered, out, !ascii);
    json echo = config_echo("denoise", cfg);
    echo["in"] = in;
    echo["out"] = out;
    std::cout << echo.dump() << "\n";
    return 0;
}

int run_evaluate(const std::string& ref_path, const std::string& dist_path,
                 const std::optional<RoiSpec>& roi, const std::string& format) {
    GrayImage ref = load_pnm_file(ref_path);
    GrayImage dist = load_pnm_file(dist_path);
    QualityReport rep = evaluate(ref, dist, roi);
    if (format == "json")
        std::cout << report_to_json(rep) << "\n";
    else if (format == "csv")
        std::cout << report_to_csv(rep);
    else
        std::cout << report_text(rep);
    return 0;
}

int run_sweep(std::vector<std::string> corpus, const std::string& corpus_dir,
              double lo, double hi, double step, double density,
              std::uint64_t seed, FilterArgs& args, const std::string& out_path) {
    if (corpus.empty()) {
        std::string dir = corpus_dir;
        if (dir.empty()) {
            if (const char* env = std::getenv("GNEIGHBOR_CORPUS_DIR"))
                dir = env;
        }
        if (!dir.empty()) {
            for (const auto& entry : fs::directory_iterator(dir))
                if (entry.path().extension() == ".pgm")
                    corpus.push_back(entry.path().string());
            std::sort(corpus.begin(), corpus.end());
        }
    }
    if (corpus.empty())
        throw std::runtime_error(
            "sweep: no corpus images (use --corpus, --corpus-dir, or GNEIGHBOR_CORPUS_DIR)");
    if (step <= 0.0 || hi < lo)
        throw std::runtime_error("sweep: need step > 0 and hi >= lo");

    struct Entry {
        std::string name;
        GrayImage clean;
        GrayImage noisy;
    };
    std::vector<Entry> images;
    for (const auto& path : corpus) {
        try {
            GrayImage clean = load_pnm_file(path);
            GrayImage noisy = add_salt_pepper(clean, {density, seed});
            images.push_back({fs::path(path).filename().string(), std::move(clean),
                              std::move(noisy)});
        } catch (const std::exception& e) {
            std::cerr << "warning: skipping " << path << ": " << e.what() << "\n";
        }
    }
    if (images.empty())
        throw std::runtime_error("sweep: no readable corpus images");

    const int steps = static_cast<int>(std::floor((hi - lo) / step + 0.5)) + 1;
    std::string csv = "threshold,image,mse,psnr_db,ssim\n";
    for (int i = 0; i < steps; ++i) {
        double t = lo + i * step;
        FilterConfig cfg = args.cfg;
        cfg.threshold = threshold_from_norm(t);
        cfg.validate();

        double sum_mse = 0, sum_psnr = 0, sum_ssim = 0;
        for (const auto& entry : images) {
            GrayImage filtered = filter_image(entry.noisy, cfg);
            QualityReport rep = evaluate(entry.clean, filtered);
            csv += format_number(t) + "," + entry.name + "," + format_number(rep.mse) +
                   "," + format_number(rep.psnr) + "," + format_number(rep.ssim) + "\n";
            sum_mse += rep.mse;
            sum_psnr += rep.psnr;
            sum_ssim += rep.ssim;
        }
        double n = static_cast<double>(images.size());
        csv += format_number(t) + ",(mean)," + format_number(sum_mse / n) + "," +
               format_number(sum_psnr / n) + "," + format_number(sum_ssim / n) + "\n";
    }
    write_text(out_path, csv);
    return 0;
}

int run_hwverify(int bits, bool exhaustive, const std::string& format) {
    using namespace gneighbor::hw;
    std::vector<unsigned> thresholds =
        bits == 4 ? std::vector<unsigned>{0, 7, 15} : std::vector<unsigned>{0, 13, 255};

    std::vector<VerifyResult> suites;
    suites.push_back(verify_mtl_truth_table());
    suites.push_back(verify_xor_gate());
    suites.push_back(verify_xor_words(exhaustive ? bits : std::min(bits, 4)));
    suites.push_back(verify_comparator(exhaustive ? bits : std::min(bits, 4)));
    suites.push_back(verify_crossbar_roundtrip(8, 8, exhaustive ? 1000 : 100, 1));
    if (exhaustive) {
        suites.push_back(verify_pipeline(bits, thresholds));
    } else {
        // restricted sweep: threshold words only, exhaustive pairs at width 4
        suites.push_back(verify_pipeline(4, {0, 7, 15}));
    }

    bool all_ok = true;
    if (format == "json") {
        json j = json::array();
        for (const auto& s : suites) {
            j.push_back({{"suite", s.suite},
                         {"cases", s.cases},
                         {"failures", s.failures},
                         {"counterexamples", s.counterexamples}});
            all_ok = all_ok && s.ok();
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& s : suites) {
            std::cout << (s.ok() ? "PASS" : "FAIL") << " " << s.suite << ": "
                      << (s.cases - s.failures) << "/" << s.cases << "\n";
            for (const auto& ce : s.counterexamples)
                std::cout << "  counterexample: " << ce << "\n";
            all_ok = all_ok && s.ok();
        }
    }
    return all_ok ? 0 : 1;
}

int run_hwreport(const std::string& format, int pixels) {
    using namespace gneighbor::hw;
    AreaPowerLedger ledger = AreaPowerLedger::reference(pixels);
    if (format == "json")
        std::cout << area_power_report_json(ledger) << "\n";
    else if (format == "csv")
        std::cout << area_power_report_csv(ledger);
    else
        std::cout << area_power_report_text(ledger);
    if (pixels != 1 && format == "text")
        std::cout << "(" << pixels
                  << " pixel units; linear scaling is a model assumption)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variable-pixel G-neighbor denoising filter and memristive "
                 "hardware pipeline simulator"};
    app.require_subcommand(1);

    // noise
    auto* noise = app.add_subcommand("noise", "add salt-and-pepper noise to an image");
    std::string noise_in, noise_out;
    double noise_density = 0.05;
    std::uint64_t noise_seed = 42;
    bool noise_ascii = false;
    noise->add_option("--in,-i", noise_in, "input image (PGM/PPM)")->required();
    noise->add_option("--out,-o", noise_out, "output PGM path")->required();
    noise->add_option("--density,-d", noise_density, "fraction of pixels corrupted")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    noise->add_option("--seed,-s", noise_seed, "RNG seed")->capture_default_str();
    noise->add_flag("--ascii", noise_ascii, "write P2 instead of P5");

    // denoise
    auto* denoise = app.add_subcommand("denoise", "run the G-neighbor filter");
    std::string dn_in, dn_out;
    bool dn_ascii = false;
    FilterArgs dn_args;
    denoise->add_option("--in,-i", dn_in, "input image (PGM/PPM)")->required();
    denoise->add_option("--out,-o", dn_out, "output PGM path")->required();
    dn_args.attach(denoise, /*with_threshold=*/true);
    denoise->add_flag("--ascii", dn_ascii, "write P2 instead of P5");

    // evaluate
    auto* eval = app.add_subcommand("evaluate", "image quality metrics");
    std::string ev_ref, ev_dist, ev_format = "text";
    std::vector<int> ev_circle, ev_rect;
    eval->add_option("--ref,-r", ev_ref, "reference image")->required();
    eval->add_option("--dist,-d", ev_dist, "distorted image")->required();
    auto* oc = eval->add_option("--roi-circle", ev_circle,
                                "reduced-reference circle: cx cy radius")
                   ->expected(3);
    eval->add_option("--roi-rect", ev_rect,
                     "reduced-reference rectangle: row_lo row_hi col_lo col_hi")
        ->expected(4)
        ->excludes(oc);
    eval->add_option("--format", ev_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // sweep
    auto* sweep = app.add_subcommand("sweep", "threshold sweep over a corpus");
    std::vector<std::string> sw_corpus;
    std::string sw_corpus_dir, sw_out = "-";
    double sw_lo = 0.0, sw_hi = 0.3, sw_step = 0.01, sw_density = 0.05;
    std::uint64_t sw_seed = 42;
    FilterArgs sw_args;
    sweep->add_option("--corpus", sw_corpus, "image paths");
    sweep->add_option("--corpus-dir", sw_corpus_dir,
                      "directory of .pgm images (or GNEIGHBOR_CORPUS_DIR)");
    sweep->add_option("--lo", sw_lo, "first threshold, 0-1 scale")->capture_default_str();
    sweep->add_option("--hi", sw_hi, "last threshold, 0-1 scale")->capture_default_str();
    sweep->add_option("--step", sw_step, "threshold increment")->capture_default_str();
    sweep->add_option("--density,-d", sw_density, "salt-and-pepper density")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    sweep->add_option("--seed,-s", sw_seed, "noise RNG seed")->capture_default_str();
    sweep->add_option("--out,-o", sw_out, "CSV output path ('-' = stdout)")
        ->capture_default_str();
    sw_args.attach(sweep, /*with_threshold=*/false);

    // hwverify
    auto* hwv = app.add_subcommand("hwverify", "gate-level equivalence suites");
    int hv_bits = 8;
    bool hv_exhaustive = false;
    std::string hv_format = "text";
    hwv->add_option("--bits,-b", hv_bits, "word width: 4 or 8")
        ->check(CLI::IsMember({4, 8}))
        ->capture_default_str();
    hwv->add_flag("--exhaustive", hv_exhaustive, "run the full 8-bit input spaces");
    hwv->add_option("--format", hv_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // hwreport
    auto* hwr = app.add_subcommand("hwreport", "area and power ledger");
    std::string hr_format = "text";
    int hr_pixels = 1;
    hwr->add_option("--format", hr_format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    hwr->add_option("--pixels", hr_pixels, "parallel pixel units")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (noise->parsed())
            return run_noise(noise_in, noise_out, noise_density, noise_seed, noise_ascii);
        if (denoise->parsed())
            return run_denoise(dn_in, dn_out, dn_args, dn_ascii);
        if (eval->parsed())
            return run_evaluate(ev_ref, ev_dist, parse_roi(ev_circle, ev_rect), ev_format);
        if (sweep->parsed())
            return run_sweep(sw_corpus, sw_corpus_dir, sw_lo, sw_hi, sw_step, sw_density,
                             sw_seed, sw_args, sw_out);
        if (hwv->parsed())
            return run_hwverify(hv_bits, hv_exhaustive, hv_format);
        if (hwr->parsed())
            return run_hwreport(hr_format, hr_pixels);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
