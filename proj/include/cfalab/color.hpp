// Copyright Contributors to the cfalab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "cfalab/image.hpp"
#include "cfalab/linalg.hpp"

namespace cfalab {

/// 3x3 color correction matrix. Must be invertible; the inverse is computed
/// once on demand and failures surface as exceptions.
class ColorMatrix {
public:
    ColorMatrix() : m_(Mat::identity(3)) {}
    explicit ColorMatrix(const std::array<std::array<double, 3>, 3>& rows);

    double operator()(int r, int c) const { return m_(r, c); }
    const Mat& mat() const { return m_; }

    ColorMatrix inverted() const;

    std::array<double, 3> apply(const std::array<double, 3>& v) const;

    /// The CCM used by the evaluation pipeline (rows sum to one, so neutral
    /// gray maps to itself in both directions).
    static ColorMatrix mobile_sensor_ccm();

private:
    explicit ColorMatrix(Mat m) : m_(std::move(m)) {}
    Mat m_;
};

/// A sensor channel set (RGB, RGBW or LMS) together with its
/// luminance/chrominance basis and the scene-RGB -> channel response mix.
///
/// The basis functionals live in the rows of basis(): row 0 is the
/// luminance weights, rows 1..n-1 the chroma directions. channels_to_basis
/// evaluates those functionals; basis_to_channels inverts them.
class ColorSystem {
public:
    ColorSystem() = default;
    ColorSystem(std::vector<std::string> names,
                std::vector<double> luminance_weights,
                std::vector<std::vector<double>> chroma_basis,
                std::vector<std::array<double, 3>> sensitivity_mix);

    int channels() const { return static_cast<int>(names_.size()); }
    int chroma_count() const { return channels() - 1; }
    const std::vector<std::string>& channel_names() const { return names_; }
    const std::vector<double>& luminance_weights() const { return lum_; }
    const std::vector<std::vector<double>>& chroma_basis() const { return chromas_; }
    const std::vector<std::array<double, 3>>& sensitivity_mix() const { return mix_; }

    const Mat& basis() const { return basis_; }
    const Mat& basis_inverse() const { return basis_inv_; }

    std::vector<double> channels_to_basis(const std::vector<double>& pixel) const;
    std::vector<double> basis_to_channels(const std::vector<double>& coords) const;

    /// Channel signals for a linear scene RGB pixel.
    std::vector<double> scene_to_channels(const std::array<double, 3>& rgb) const;
    /// Least-squares scene RGB from channel signals (uses all channels).
    std::array<double, 3> channels_to_scene(const std::vector<double>& ch) const;

    int channel_index(const std::string& name) const;

    bool operator==(const ColorSystem& o) const {
        return names_ == o.names_ && lum_ == o.lum_ && chromas_ == o.chromas_ && mix_ == o.mix_;
    }

    // The three channel families used by the catalog. W and the LMS responses
    // are synthesized mixes (the source material never states filter
    // spectra); they affect image simulation only.
    static const ColorSystem& bayer_rgb();
    static const ColorSystem& rgbw();
    static const ColorSystem& lms();

private:
    std::vector<std::string> names_;
    std::vector<double> lum_;
    std::vector<std::vector<double>> chromas_;
    std::vector<std::array<double, 3>> mix_;
    Mat basis_;      // rows: lum, chroma_1..chroma_{n-1}
    Mat basis_inv_;
    Mat mix_pinv_;   // 3 x n
};

// ---- sRGB transfer (IEC 61966-2-1 constants) --------------------------------

/// Scalar electro-optical transfer, [0,1] -> linear.
double srgb_decode_value(double encoded);
/// Scalar inverse transfer, linear [0,1] -> encoded.
double srgb_encode_value(double linear);

/// Decodes an encoded-sRGB image to linear-scene. Out-of-range samples are an
/// error naming the offending index.
PlanarImage srgb_decode(const PlanarImage& img);

struct EncodeResult {
    PlanarImage image;
    size_t clipped = 0;  // samples clipped into [0,1] before encoding
};

/// Encodes a linear image to sRGB, clipping to [0,1] first (count reported).
EncodeResult srgb_encode(const PlanarImage& img);

// ---- per-pixel matrix / basis application -----------------------------------

/// Per-pixel 3x3 matrix multiply; with `inverse` the matrix inverse is
/// computed once and applied instead.
PlanarImage apply_color_matrix(const PlanarImage& img, const ColorMatrix& m, bool inverse);

/// Per-pixel channels -> (l, c1..c_{n-1}) basis planes.
PlanarImage image_to_basis(const PlanarImage& img, const ColorSystem& cs);
/// Inverse of image_to_basis.
PlanarImage image_from_basis(const PlanarImage& coords, const ColorSystem& cs);

// ---- quality metric ----------------------------------------------------------

inline constexpr double kPsnrCapDb = 99.0;  // reported for identical images

/// 10*log10(peak^2 / MSE) over all samples, capped at kPsnrCapDb.
double psnr(const PlanarImage& a, const PlanarImage& b, double peak = 1.0);

/// PSNR over the region that excludes `border` pixels on every side.
double psnr_interior(const PlanarImage& a, const PlanarImage& b, int border, double peak = 1.0);

}  // namespace cfalab
