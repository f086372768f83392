#include "annustitch/unwrap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "annustitch/error.hpp"
#include "annustitch/kernels.hpp"

namespace annustitch {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::pair<double, double> annulus_radii(const GrayImage& img, Point2d center, double tau) {
    if (center.x < 0.0 || center.y < 0.0 || center.x > img.width - 1 ||
        center.y > img.height - 1) {
        throw Error(ErrorCode::CenterOutOfBounds,
                    "center (" + std::to_string(center.x) + ", " + std::to_string(center.y) +
                        ") outside image");
    }
    const double r_max = std::min(std::min(center.x, center.y),
                                  std::min(img.width - 1 - center.x, img.height - 1 - center.y));

    double r_min = 0.0;
    for (int y = 0; y < img.height; ++y) {
        const float* row = img.row(y);
        for (int x = 0; x < img.width; ++x) {
            if (row[x] < tau) {
                const double d = std::hypot(x - center.x, y - center.y);
                r_min = std::max(r_min, d);
            }
        }
    }
    if (!(r_min < r_max)) {
        throw Error(ErrorCode::DegenerateAnnulus,
                    "dark region radius " + std::to_string(r_min) + " >= outer radius " +
                        std::to_string(r_max));
    }
    return {r_min, r_max};
}

UnwrapSpec make_unwrap_spec(const GrayImage& img, Point2d center, double tau) {
    const auto [r_min, r_max] = annulus_radii(img, center, tau);
    UnwrapSpec spec;
    spec.cx = center.x;
    spec.cy = center.y;
    spec.r_min = r_min;
    spec.r_max = r_max;
    spec.n_theta = std::max(8, static_cast<int>(std::lround(kTwoPi * r_max)));
    spec.n_r = std::max(2, static_cast<int>(std::lround(r_max - r_min)));
    return spec;
}

void validate_spec(const UnwrapSpec& spec, const GrayImage& img) {
    if (!(spec.r_min >= 0.0) || !(spec.r_min < spec.r_max)) {
        throw Error(ErrorCode::SpecImageMismatch, "requires 0 <= r_min < r_max");
    }
    if (spec.n_theta < 8 || spec.n_r < 2) {
        throw Error(ErrorCode::SpecImageMismatch, "requires n_theta >= 8 and n_r >= 2");
    }
    const double margin = 1e-9;
    if (spec.cx - spec.r_max < -margin || spec.cy - spec.r_max < -margin ||
        spec.cx + spec.r_max > img.width - 1 + margin ||
        spec.cy + spec.r_max > img.height - 1 + margin) {
        throw Error(ErrorCode::SpecImageMismatch, "outer circle exceeds image bounds");
    }
}

GrayImage unwrap(const GrayImage& img, const UnwrapSpec& spec) {
    validate_spec(spec, img);
    GrayImage out(spec.n_theta, spec.n_r);

    const double dr = (spec.r_max - spec.r_min) / (spec.n_r - 1);
    const double dtheta = kTwoPi / spec.n_theta;
    const double xhi = img.width - 1;
    const double yhi = img.height - 1;

    std::vector<float> xs(static_cast<std::size_t>(spec.n_theta));
    std::vector<float> ys(static_cast<std::size_t>(spec.n_theta));
    std::vector<double> cos_t(static_cast<std::size_t>(spec.n_theta));
    std::vector<double> sin_t(static_cast<std::size_t>(spec.n_theta));
    for (int j = 0; j < spec.n_theta; ++j) {
        const double theta = j * dtheta;
        cos_t[static_cast<std::size_t>(j)] = std::cos(theta);
        sin_t[static_cast<std::size_t>(j)] = std::sin(theta);
    }

    for (int i = 0; i < spec.n_r; ++i) {
        const double r = spec.r_min + i * dr;
        for (int j = 0; j < spec.n_theta; ++j) {
            // guaranteed in-bounds by validate_spec; the clamp only absorbs
            // the last-ulp excursions of r*cos/sin arithmetic
            const double x = std::clamp(spec.cx + r * cos_t[static_cast<std::size_t>(j)], 0.0, xhi);
            const double y = std::clamp(spec.cy + r * sin_t[static_cast<std::size_t>(j)], 0.0, yhi);
            xs[static_cast<std::size_t>(j)] = static_cast<float>(x);
            ys[static_cast<std::size_t>(j)] = static_cast<float>(y);
        }
        kernels::bilinear_gather(img.pixels.data(), img.width, img.height, xs.data(), ys.data(),
                                 out.row(i), static_cast<std::size_t>(spec.n_theta), 0.0f);
    }
    return out;
}

GrayImage rewrap(const GrayImage& strip, const UnwrapSpec& spec, int canvas_width,
                 int canvas_height) {
    if (strip.width != spec.n_theta || strip.height != spec.n_r) {
        throw Error(ErrorCode::SpecImageMismatch,
                    "strip dimensions do not match spec (n_r x n_theta)");
    }
    if (canvas_width <= 0 || canvas_height <= 0) {
        throw Error(ErrorCode::InvalidArgument, "canvas dimensions must be positive");
    }

    // extend the strip by one wrapped column so plain bilinear sampling
    // covers the theta seam
    GrayImage ext(strip.width + 1, strip.height);
    for (int y = 0; y < strip.height; ++y) {
        const float* src = strip.row(y);
        float* dst = ext.row(y);
        std::copy(src, src + strip.width, dst);
        dst[strip.width] = src[0];
    }

    GrayImage out(canvas_width, canvas_height);
    const double row_scale = (spec.n_r - 1) / (spec.r_max - spec.r_min);
    const double col_scale = spec.n_theta / kTwoPi;

    std::vector<float> cols(static_cast<std::size_t>(canvas_width));
    std::vector<float> rows(static_cast<std::size_t>(canvas_width));
    for (int y = 0; y < canvas_height; ++y) {
        const double dy = y - spec.cy;
        for (int x = 0; x < canvas_width; ++x) {
            const double dx = x - spec.cx;
            const double r = std::hypot(dx, dy);
            if (r < spec.r_min || r > spec.r_max) {
                cols[static_cast<std::size_t>(x)] = -1.0f; // outside -> fill
                rows[static_cast<std::size_t>(x)] = -1.0f;
                continue;
            }
            double theta = std::atan2(dy, dx);
            if (theta < 0.0) theta += kTwoPi;
            cols[static_cast<std::size_t>(x)] =
                static_cast<float>(std::min(theta * col_scale, static_cast<double>(spec.n_theta)));
            rows[static_cast<std::size_t>(x)] = static_cast<float>(
                std::clamp((r - spec.r_min) * row_scale, 0.0, static_cast<double>(spec.n_r - 1)));
        }
        kernels::bilinear_gather(ext.pixels.data(), ext.width, ext.height, cols.data(),
                                 rows.data(), out.row(y), static_cast<std::size_t>(canvas_width),
                                 0.0f);
    }
    return out;
}

} // namespace annustitch
