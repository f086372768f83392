#include "annustitch/depth_geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <numbers>

#include <Eigen/Dense>

#include "annustitch/error.hpp"
#include "annustitch/kernels.hpp"

namespace annustitch {

double otsu_threshold(const GrayImage& img) {
    std::array<std::size_t, 256> hist{};
    for (float v : img.pixels) {
        const long b = std::clamp<long>(std::lround(v), 0, 255);
        ++hist[static_cast<std::size_t>(b)];
    }
    const double total = static_cast<double>(img.pixels.size());

    double sum_all = 0.0;
    for (int i = 0; i < 256; ++i) sum_all += static_cast<double>(i) * hist[i];

    double best = -1.0;
    int best_lo = 0;
    int best_hi = 0;
    double w0 = 0.0;
    double sum0 = 0.0;
    for (int k = 0; k < 256; ++k) {
        w0 += static_cast<double>(hist[k]);
        sum0 += static_cast<double>(k) * hist[k];
        const double w1 = total - w0;
        if (w0 == 0.0 || w1 == 0.0) continue;
        const double m0 = sum0 / w0;
        const double m1 = (sum_all - sum0) / w1;
        const double between = w0 * w1 * (m0 - m1) * (m0 - m1);
        if (between > best + 1e-12 * std::max(1.0, best)) {
            best = between;
            best_lo = best_hi = k;
        } else if (std::abs(between - best) <= 1e-12 * std::max(1.0, best)) {
            best_hi = k;
        }
    }
    if (best < 0.0) {
        // constant image: no split exists; put the threshold just below the value
        return static_cast<double>(std::clamp<long>(std::lround(img.pixels.empty() ? 0.0f : img.pixels[0]), 0, 255));
    }
    return 0.5 * (best_lo + best_hi) + 0.5;
}

BinaryMask threshold_mask(const GrayImage& img, double tau) {
    BinaryMask mask(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        mask.values[i] = img.pixels[i] < tau ? 1 : 0;
    }
    return mask;
}

namespace {

// Moore neighborhood, clockwise on screen starting at west.
constexpr std::array<Point2i, 8> kMooreDirs = {{
    {-1, 0}, {-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1},
}};

int moore_dir_index(Point2i delta) {
    for (int i = 0; i < 8; ++i) {
        if (kMooreDirs[i] == delta) return i;
    }
    return 0; // unreachable for adjacent pixels
}

} // namespace

Contour largest_component_contour(const BinaryMask& mask) {
    const int w = mask.width;
    const int h = mask.height;
    std::vector<std::int32_t> label(static_cast<std::size_t>(w) * h, 0);
    std::int32_t next_label = 0;
    std::size_t best_size = 0;
    std::int32_t best_label = 0;
    Point2i best_start{0, 0};

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            if (!mask.values[idx] || label[idx]) continue;
            const std::int32_t id = ++next_label;
            std::size_t size = 0;
            std::deque<Point2i> queue{{x, y}};
            label[idx] = id;
            while (!queue.empty()) {
                const Point2i p = queue.front();
                queue.pop_front();
                ++size;
                for (const auto& d : kMooreDirs) {
                    const int nx = p.x + d.x;
                    const int ny = p.y + d.y;
                    if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                    const std::size_t nidx = static_cast<std::size_t>(ny) * w + nx;
                    if (mask.values[nidx] && !label[nidx]) {
                        label[nidx] = id;
                        queue.push_back({nx, ny});
                    }
                }
            }
            if (size > best_size) {
                best_size = size;
                best_label = id;
                best_start = {x, y}; // raster-first pixel of the component
            }
        }
    }
    if (best_size == 0) {
        throw Error(ErrorCode::EmptyMask, "no pixel below threshold");
    }

    auto is_fg = [&](Point2i p) {
        if (p.x < 0 || p.y < 0 || p.x >= w || p.y >= h) return false;
        return label[static_cast<std::size_t>(p.y) * w + p.x] == best_label;
    };

    Contour contour;
    contour.points.push_back(best_start);
    Point2i current = best_start;
    Point2i backtrack{best_start.x - 1, best_start.y}; // background by raster-first scan
    const Point2i initial_backtrack = backtrack;
    std::size_t safety = 8 * (best_size + 4);

    while (safety-- > 0) {
        const int dir_b = moore_dir_index({backtrack.x - current.x, backtrack.y - current.y});
        Point2i prev_bg = backtrack;
        Point2i found{0, 0};
        bool hit = false;
        for (int i = 1; i <= 8; ++i) {
            const auto& d = kMooreDirs[(dir_b + i) % 8];
            const Point2i cand{current.x + d.x, current.y + d.y};
            if (is_fg(cand)) {
                found = cand;
                hit = true;
                break;
            }
            prev_bg = cand;
        }
        if (!hit) break; // isolated pixel
        backtrack = prev_bg;
        current = found;
        if (current == best_start && backtrack == initial_backtrack) break;
        contour.points.push_back(current);
    }
    return contour;
}

namespace {

struct Conic {
    // A x^2 + B xy + C y^2 + D x + E y + F = 0
    double A, B, C, D, E, F;
};

Ellipse conic_to_ellipse(Conic c) {
    if (c.A + c.C < 0.0) {
        c = {-c.A, -c.B, -c.C, -c.D, -c.E, -c.F};
    }
    const double den = c.B * c.B - 4.0 * c.A * c.C;
    if (!(den < 0.0)) {
        throw Error(ErrorCode::DegenerateContour, "conic is not an ellipse");
    }
    const double cx = (2.0 * c.C * c.D - c.B * c.E) / den;
    const double cy = (2.0 * c.A * c.E - c.B * c.D) / den;
    const double fc = c.A * cx * cx + c.B * cx * cy + c.C * cy * cy + c.D * cx + c.E * cy + c.F;

    const double t = c.A + c.C;
    const double s = std::sqrt((c.A - c.C) * (c.A - c.C) + c.B * c.B);
    const double l1 = 0.5 * (t + s); // larger eigenvalue -> shorter axis
    const double l2 = 0.5 * (t - s);
    if (!(l2 > 0.0) || !(-fc > 0.0)) {
        throw Error(ErrorCode::DegenerateContour, "degenerate ellipse parameters");
    }

    Ellipse e;
    e.cx = cx;
    e.cy = cy;
    e.semi_major = std::sqrt(-fc / l2);
    e.semi_minor = std::sqrt(-fc / l1);

    double angle;
    if (c.B == 0.0) {
        angle = c.A <= c.C ? 0.0 : std::numbers::pi / 2.0;
    } else {
        angle = std::atan2(l2 - c.A, 0.5 * c.B); // eigenvector of the smaller eigenvalue
    }
    angle = std::fmod(angle, std::numbers::pi);
    if (angle < 0.0) angle += std::numbers::pi;
    if (angle >= std::numbers::pi) angle = 0.0;
    e.angle = angle;

    if (!std::isfinite(e.cx) || !std::isfinite(e.cy) || !std::isfinite(e.semi_major) ||
        !std::isfinite(e.semi_minor) || e.semi_minor <= 0.0) {
        throw Error(ErrorCode::DegenerateContour, "non-finite ellipse parameters");
    }
    return e;
}

} // namespace

Ellipse fit_ellipse(const Contour& contour) {
    const auto& pts = contour.points;
    const std::size_t n = pts.size();
    if (n < 5) {
        throw Error(ErrorCode::DegenerateContour,
                    "ellipse fit needs >= 5 points, got " + std::to_string(n));
    }

    // center the data for conditioning; fold the shift back at the end
    double mx = 0.0, my = 0.0;
    for (const auto& p : pts) {
        mx += p.x;
        my += p.y;
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    Eigen::MatrixXd d1(n, 3), d2(n, 3);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = pts[i].x - mx;
        const double y = pts[i].y - my;
        d1(static_cast<Eigen::Index>(i), 0) = x * x;
        d1(static_cast<Eigen::Index>(i), 1) = x * y;
        d1(static_cast<Eigen::Index>(i), 2) = y * y;
        d2(static_cast<Eigen::Index>(i), 0) = x;
        d2(static_cast<Eigen::Index>(i), 1) = y;
        d2(static_cast<Eigen::Index>(i), 2) = 1.0;
    }

    const Eigen::Matrix3d s1 = d1.transpose() * d1;
    const Eigen::Matrix3d s2 = d1.transpose() * d2;
    const Eigen::Matrix3d s3 = d2.transpose() * d2;

    Eigen::FullPivLU<Eigen::Matrix3d> lu(s3);
    if (!lu.isInvertible()) {
        throw Error(ErrorCode::DegenerateContour, "collinear or degenerate contour");
    }
    const Eigen::Matrix3d t = -lu.solve(s2.transpose());
    const Eigen::Matrix3d m_full = s1 + s2 * t;

    Eigen::Matrix3d m;
    m.row(0) = m_full.row(2) / 2.0;  // C^-1 for the ellipse constraint matrix
    m.row(1) = -m_full.row(1);
    m.row(2) = m_full.row(0) / 2.0;

    Eigen::EigenSolver<Eigen::Matrix3d> solver(m);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::DegenerateContour, "eigen decomposition failed");
    }

    Eigen::Vector3d a1 = Eigen::Vector3d::Zero();
    bool found = false;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(solver.eigenvalues()[i].imag()) > 1e-9) continue;
        const Eigen::Vector3d v = solver.eigenvectors().col(i).real();
        const double cond = 4.0 * v(0) * v(2) - v(1) * v(1);
        if (cond > 0.0) {
            a1 = v;
            found = true;
            break;
        }
    }
    if (!found) {
        throw Error(ErrorCode::DegenerateContour, "no ellipse solution for contour");
    }
    const Eigen::Vector3d a2 = t * a1;

    // conic in centered coords -> original coords
    const double A = a1(0), B = a1(1), C = a1(2);
    const double d = a2(0), e = a2(1), f = a2(2);
    Conic conic;
    conic.A = A;
    conic.B = B;
    conic.C = C;
    conic.D = d - 2.0 * A * mx - B * my;
    conic.E = e - B * mx - 2.0 * C * my;
    conic.F = f + A * mx * mx + B * mx * my + C * my * my - d * mx - e * my;
    return conic_to_ellipse(conic);
}

GrayImage rotate_image(const GrayImage& img, double angle) {
    if (angle == 0.0) return img;
    GrayImage out(img.width, img.height);
    const double cx = 0.5 * (img.width - 1);
    const double cy = 0.5 * (img.height - 1);
    // inverse map: source = c + R(-angle) * (p - c)
    const double cos_a = std::cos(-angle);
    const double sin_a = std::sin(-angle);

    std::vector<float> xs(static_cast<std::size_t>(img.width));
    std::vector<float> ys(static_cast<std::size_t>(img.width));
    for (int y = 0; y < img.height; ++y) {
        const double dy = y - cy;
        for (int x = 0; x < img.width; ++x) {
            const double dx = x - cx;
            xs[static_cast<std::size_t>(x)] = static_cast<float>(cx + cos_a * dx - sin_a * dy);
            ys[static_cast<std::size_t>(x)] = static_cast<float>(cy + sin_a * dx + cos_a * dy);
        }
        kernels::bilinear_gather(img.pixels.data(), img.width, img.height, xs.data(), ys.data(),
                                 out.row(y), static_cast<std::size_t>(img.width), 0.0f);
    }
    return out;
}

RotationResult rotate_to_canonical(const GrayImage& img, const Ellipse& ellipse,
                                   double min_axis_ratio) {
    if (ellipse.circle_ambiguous(min_axis_ratio)) {
        return {img, 0.0};
    }
    const double applied = -ellipse.angle;
    return {rotate_image(img, applied), applied};
}

Point2d deepest_point(const GrayImage& img, double tau) {
    double sx = 0.0, sy = 0.0;
    std::size_t count = 0;
    for (int y = 0; y < img.height; ++y) {
        const float* row = img.row(y);
        for (int x = 0; x < img.width; ++x) {
            if (row[x] < tau) {
                sx += x;
                sy += y;
                ++count;
            }
        }
    }
    if (count == 0) {
        throw Error(ErrorCode::NoDarkRegion, "no pixel below threshold " + std::to_string(tau));
    }
    return {sx / static_cast<double>(count), sy / static_cast<double>(count)};
}

} // namespace annustitch
