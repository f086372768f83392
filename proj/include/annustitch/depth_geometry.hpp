#pragma once

#include <vector>

#include "annustitch/image.hpp"

namespace annustitch {

/// Fitted dark-region geometry. angle is the major-axis direction in
/// radians, normalized to [0, pi) (image coordinates, y down).
struct Ellipse {
    double cx = 0.0;
    double cy = 0.0;
    double semi_major = 0.0; // a >= b > 0
    double semi_minor = 0.0;
    double angle = 0.0;

    /// Orientation is numerically meaningless near circularity.
    bool circle_ambiguous(double min_axis_ratio) const {
        return semi_major < min_axis_ratio * semi_minor;
    }
};

/// Closed boundary trace, 8-connected consecutive points.
struct Contour {
    std::vector<Point2i> points;
};

struct RotationResult {
    GrayImage image;
    double applied_angle = 0.0; // radians actually applied (0 when skipped)
};

/// Otsu's threshold over a 256-bin histogram. Returns the midpoint of the
/// argmax run plus 0.5, so integer-valued pixels at the chosen level fall
/// on the dark side of a strict `value < tau` test.
double otsu_threshold(const GrayImage& img);

/// mask[p] = true iff img[p] < tau.
BinaryMask threshold_mask(const GrayImage& img, double tau);

/// Boundary of the largest 8-connected true component (Moore neighbor
/// tracing, Jacob's stopping criterion). Throws EmptyMask when the mask has
/// no true pixel.
Contour largest_component_contour(const BinaryMask& mask);

/// Direct least-squares conic fit constrained to an ellipse
/// (Halir-Flusser formulation). Throws DegenerateContour for fewer than 5
/// points or point sets that admit no ellipse (e.g. collinear).
Ellipse fit_ellipse(const Contour& contour);

/// Rotates img about its center by -ellipse.angle (bilinear, zero fill)
/// so the fitted major axis becomes horizontal. Skipped (angle 0) when the
/// ellipse is circle-ambiguous at min_axis_ratio.
RotationResult rotate_to_canonical(const GrayImage& img, const Ellipse& ellipse,
                                   double min_axis_ratio = 1.05);

/// Rotates img about its center by `angle` radians, bilinear with zero fill.
GrayImage rotate_image(const GrayImage& img, double angle);

/// Unweighted centroid of {p : img[p] < tau}. Throws NoDarkRegion when no
/// pixel is below tau.
Point2d deepest_point(const GrayImage& img, double tau);

} // namespace annustitch
