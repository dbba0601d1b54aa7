#include "gneighbor/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace gneighbor {

namespace {

void require_same_size(const NormImage& a, const NormImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("metric: image dimensions differ");
}

// Statistics over the selected pixels, accumulated in a fixed order so
// reports are reproducible.
struct RegionStats {
    std::size_t n = 0;
    double mean_a = 0, mean_b = 0;
    double var_a = 0, var_b = 0;  // population variance
    double cov = 0;
    double mse = 0;
};

RegionStats region_stats(const NormImage& a, const NormImage& b,
                         const std::optional<RoiSpec>& roi) {
    require_same_size(a, b);
    std::vector<bool> mask;
    if (roi)
        mask = roi_mask(*roi, a.width, a.height);

    RegionStats st;
    double sum_a = 0, sum_b = 0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        if (roi && !mask[i]) continue;
        sum_a += a.pixels[i];
        sum_b += b.pixels[i];
        ++st.n;
    }
    if (st.n == 0)
        throw std::invalid_argument("metric: empty region");
    st.mean_a = sum_a / st.n;
    st.mean_b = sum_b / st.n;

    double ssq_a = 0, ssq_b = 0, scov = 0, serr = 0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        if (roi && !mask[i]) continue;
        double da = a.pixels[i] - st.mean_a;
        double db = b.pixels[i] - st.mean_b;
        ssq_a += da * da;
        ssq_b += db * db;
        scov += da * db;
        double e = a.pixels[i] - b.pixels[i];
        serr += e * e;
    }
    st.var_a = ssq_a / st.n;
    st.var_b = ssq_b / st.n;
    st.cov = scov / st.n;
    st.mse = serr / st.n;
    return st;
}

}  // namespace

std::vector<bool> roi_mask(const RoiSpec& spec, int width, int height) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("roi_mask: degenerate image dimensions");
    std::vector<bool> mask(static_cast<std::size_t>(width) * height, false);
    std::size_t count = 0;

    if (const auto* c = std::get_if<CircleRoi>(&spec)) {
        long r2 = static_cast<long>(c->radius) * c->radius;
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                long dx = x - c->center_x;
                long dy = y - c->center_y;
                if (dx * dx + dy * dy <= r2) {
                    mask[static_cast<std::size_t>(y) * width + x] = true;
                    ++count;
                }
            }
        }
    } else {
        const auto& r = std::get<RectRoi>(spec);
        int row_lo = std::max(r.row_lo, 0);
        int row_hi = std::min(r.row_hi, height - 1);
        int col_lo = std::max(r.col_lo, 0);
        int col_hi = std::min(r.col_hi, width - 1);
        for (int y = row_lo; y <= row_hi; ++y) {
            for (int x = col_lo; x <= col_hi; ++x) {
                mask[static_cast<std::size_t>(y) * width + x] = true;
                ++count;
            }
        }
    }
    if (count == 0)
        throw std::invalid_argument("roi_mask: region selects no pixels");
    return mask;
}

double mse(const NormImage& a, const NormImage& b,
           const std::optional<RoiSpec>& roi) {
    return region_stats(a, b, roi).mse;
}

double psnr(const NormImage& a, const NormImage& b,
            const std::optional<RoiSpec>& roi) {
    double m = mse(a, b, roi);
    if (m == 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(1.0 / m);
}

SsimResult ssim(const NormImage& a, const NormImage& b, const SsimConstants& k,
                const std::optional<RoiSpec>& roi, SsimFormula formula) {
    if (k.c1 <= 0 || k.c2 <= 0 || k.c3 <= 0)
        throw std::invalid_argument("ssim: stabilizers must be positive");
    RegionStats st = region_stats(a, b, roi);
    if (st.n < 2)
        throw std::invalid_argument("ssim: region must have at least 2 pixels");

    double sd_a = std::sqrt(st.var_a);
    double sd_b = std::sqrt(st.var_b);

    SsimResult r;
    if (formula == SsimFormula::Standard) {
        r.luminance = (2 * st.mean_a * st.mean_b + k.c1) /
                      (st.mean_a * st.mean_a + st.mean_b * st.mean_b + k.c1);
        r.contrast = (2 * sd_a * sd_b + k.c2) / (st.var_a + st.var_b + k.c2);
    } else {
        r.luminance = (2 * st.mean_a * st.mean_b + k.c1) /
                      (st.mean_a + st.mean_b + k.c1);
        r.contrast = (2 * sd_a * sd_b + k.c2) / (sd_a + sd_b + k.c2);
    }
    r.structure = (st.cov + k.c3) / (sd_a * sd_b + k.c3);
    r.ssim = r.luminance * r.contrast * r.structure;
    return r;
}

double psnr_from_ssim(double ssim_value, double covariance) {
    if (ssim_value <= 0.0 || ssim_value >= 1.0)
        throw std::domain_error("psnr_from_ssim: ssim must be in (0, 1)");
    if (covariance <= 0.0)
        throw std::domain_error("psnr_from_ssim: covariance must be positive");
    return 10.0 * std::log10(255.0 * 255.0 / (2.0 * covariance)) +
           10.0 * std::log10(ssim_value / (1.0 - ssim_value));
}

QualityReport evaluate(const GrayImage& reference, const GrayImage& distorted,
                       const std::optional<RoiSpec>& roi, const SsimConstants& k) {
    NormImage a = normalize(reference);
    NormImage b = normalize(distorted);
    QualityReport rep;
    rep.mse = mse(a, b, roi);
    rep.psnr = rep.mse == 0.0 ? std::numeric_limits<double>::infinity()
                              : 10.0 * std::log10(1.0 / rep.mse);
    SsimResult s = ssim(a, b, k, roi);
    rep.ssim = s.ssim;
    rep.luminance = s.luminance;
    rep.contrast = s.contrast;
    rep.structure = s.structure;
    rep.roi = roi;
    return rep;
}

std::string format_number(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

namespace {

nlohmann::json roi_to_json(const std::optional<RoiSpec>& roi) {
    if (!roi)
        return nullptr;
    if (const auto* c = std::get_if<CircleRoi>(&*roi)) {
        return {{"type", "circle"},
                {"center_x", c->center_x},
                {"center_y", c->center_y},
                {"radius", c->radius}};
    }
    const auto& r = std::get<RectRoi>(*roi);
    return {{"type", "rectangle"},
            {"row_lo", r.row_lo},
            {"row_hi", r.row_hi},
            {"col_lo", r.col_lo},
            {"col_hi", r.col_hi}};
}

std::string roi_to_csv(const std::optional<RoiSpec>& roi) {
    if (!roi)
        return "";
    if (const auto* c = std::get_if<CircleRoi>(&*roi)) {
        return "circle(" + std::to_string(c->center_x) + ";" +
               std::to_string(c->center_y) + ";" + std::to_string(c->radius) + ")";
    }
    const auto& r = std::get<RectRoi>(*roi);
    return "rectangle(" + std::to_string(r.row_lo) + ";" + std::to_string(r.row_hi) +
           ";" + std::to_string(r.col_lo) + ";" + std::to_string(r.col_hi) + ")";
}

nlohmann::json number_or_inf(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return v;
}

}  // namespace

std::string report_to_json(const QualityReport& report) {
    nlohmann::json j{{"mse", report.mse},
                     {"psnr_db", number_or_inf(report.psnr)},
                     {"ssim", report.ssim},
                     {"ssim_l", report.luminance},
                     {"ssim_c", report.contrast},
                     {"ssim_s", report.structure},
                     {"roi", roi_to_json(report.roi)}};
    return j.dump(2);
}

std::string report_to_csv(const QualityReport& report, bool with_header) {
    std::string out;
    if (with_header)
        out += "mse,psnr_db,ssim,ssim_l,ssim_c,ssim_s,roi\n";
    out += format_number(report.mse) + "," + format_number(report.psnr) + "," +
           format_number(report.ssim) + "," + format_number(report.luminance) + "," +
           format_number(report.contrast) + "," + format_number(report.structure) +
           "," + roi_to_csv(report.roi) + "\n";
    return out;
}

}  // namespace gneighbor
