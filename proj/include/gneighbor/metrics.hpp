#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gneighbor/image.hpp"

namespace gneighbor {

/// SSIM stabilizer constants. Defaults are the standard choices for a
/// dynamic range of 1 (normalized images): c1 = (0.01)^2, c2 = (0.03)^2,
/// c3 = c2 / 2.
struct SsimConstants {
    double c1 = 1.0e-4;
    double c2 = 9.0e-4;
    double c3 = 4.5e-4;
};

/// Which luminance/contrast denominators to use. Standard is the squared
/// form; PaperLiteral keeps the unsquared denominators for auditing.
enum class SsimFormula {
    Standard,
    PaperLiteral,
};

/// Region of interest for reduced-reference evaluation. x is the column
/// index, y the row index, both 0-based. Rectangle bounds are inclusive and
/// clamped to the image.
struct CircleRoi {
    int center_x = 0;
    int center_y = 0;
    int radius = 0;
};
struct RectRoi {
    int row_lo = 0;
    int row_hi = 0;
    int col_lo = 0;
    int col_hi = 0;
};
using RoiSpec = std::variant<CircleRoi, RectRoi>;

struct SsimResult {
    double ssim = 0.0;
    double luminance = 0.0;
    double contrast = 0.0;
    double structure = 0.0;
};

struct QualityReport {
    double mse = 0.0;
    double psnr = 0.0;  // dB; +infinity when mse == 0
    double ssim = 0.0;
    double luminance = 0.0;
    double contrast = 0.0;
    double structure = 0.0;
    std::optional<RoiSpec> roi;
};

/// Boolean pixel-selection mask for a ROI. Throws if the selection is empty.
std::vector<bool> roi_mask(const RoiSpec& spec, int width, int height);

double mse(const NormImage& a, const NormImage& b,
           const std::optional<RoiSpec>& roi = std::nullopt);

/// 10*log10(1 / MSE) on normalized images; +infinity when MSE is zero.
double psnr(const NormImage& a, const NormImage& b,
            const std::optional<RoiSpec>& roi = std::nullopt);

/// Global-statistics SSIM over the (ROI-restricted) region.
SsimResult ssim(const NormImage& a, const NormImage& b,
                const SsimConstants& k = {},
                const std::optional<RoiSpec>& roi = std::nullopt,
                SsimFormula formula = SsimFormula::Standard);

/// PSNR predicted from SSIM and covariance on the 0-255 scale. Diagnostic
/// only. Domain: ssim_value in (0, 1), covariance > 0.
double psnr_from_ssim(double ssim_value, double covariance);

/// Normalizes both images, then computes all metrics (ROI-restricted when
/// given). Excluded pixels contribute nothing to any sum.
QualityReport evaluate(const GrayImage& reference, const GrayImage& distorted,
                       const std::optional<RoiSpec>& roi = std::nullopt,
                       const SsimConstants& k = {});

/// Locale-independent number rendering shared by the JSON/CSV emitters.
/// +infinity renders as "inf".
std::string format_number(double v);

std::string report_to_json(const QualityReport& report);
std::string report_to_csv(const QualityReport& report, bool with_header = true);

}  // namespace gneighbor
