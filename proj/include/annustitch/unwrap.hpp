#pragma once

#include "annustitch/image.hpp"

namespace annustitch {

/// Geometry of the annulus-to-rectangle map: center and radii of the two
/// concentric circles plus the sampling resolution of the output strip
/// (rows sample radius, columns sample angle).
struct UnwrapSpec {
    double cx = 0.0;
    double cy = 0.0;
    double r_min = 0.0;
    double r_max = 0.0;
    int n_theta = 0; // columns, angular samples over [0, 2*pi)
    int n_r = 0;     // rows, radial samples over [r_min, r_max]
};

/// Largest circle around `center` that stays inside the image, and the
/// radius of the smallest circle enclosing every below-threshold pixel.
/// Throws CenterOutOfBounds / DegenerateAnnulus.
std::pair<double, double> annulus_radii(const GrayImage& img, Point2d center, double tau);

/// annulus_radii plus the default sampling resolution: about one pixel per
/// angular arc step and per radial step.
UnwrapSpec make_unwrap_spec(const GrayImage& img, Point2d center, double tau);

/// Throws unless spec is self-consistent and its outer circle fits in img.
void validate_spec(const UnwrapSpec& spec, const GrayImage& img);

/// Polar resampling of the annular region into an n_r x n_theta strip.
/// Output row i, column j samples the source at
///   r = r_min + i*(r_max-r_min)/(n_r-1),  theta = j*2*pi/n_theta,
///   x = cx + r*cos(theta),  y = cy + r*sin(theta)
/// with bilinear interpolation. Theta runs counterclockwise from the +x
/// axis in image coordinates (y down).
GrayImage unwrap(const GrayImage& img, const UnwrapSpec& spec);

/// Inverse polar map of a strip onto a canvas_width x canvas_height canvas;
/// pixels outside the annulus are zero. The angular axis wraps.
GrayImage rewrap(const GrayImage& strip, const UnwrapSpec& spec, int canvas_width,
                 int canvas_height);

} // namespace annustitch
