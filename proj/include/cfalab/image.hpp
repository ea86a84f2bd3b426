// Copyright Contributors to the cfalab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfalab {

/// Signal domain a PlanarImage lives in. Conversions between domains are
/// explicit operations; loaders tag encoded-sRGB unless a sidecar says
/// otherwise.
enum class Domain {
    EncodedSrgb,
    LinearScene,
    LinearSensor,
};

std::string to_string(Domain d);

/// Multi-channel float image, channel-planar layout (samples indexed
/// [channel][y][x]). Samples are float32; accumulating math elsewhere runs
/// in double.
class PlanarImage {
public:
    PlanarImage() = default;

    PlanarImage(int width, int height, int channels, Domain domain, float fill = 0.0f)
        : width_(width), height_(height), channels_(channels), domain_(domain) {
        if (width <= 0 || height <= 0 || channels <= 0)
            throw std::invalid_argument("PlanarImage: dimensions must be positive");
        samples_.assign(static_cast<size_t>(width) * height * channels, fill);
    }

    int width() const { return width_; }
    int height() const { return height_; }
    int channels() const { return channels_; }
    Domain domain() const { return domain_; }
    void set_domain(Domain d) { domain_ = d; }

    size_t sample_count() const { return samples_.size(); }

    float& at(int c, int y, int x) { return samples_[index(c, y, x)]; }
    float at(int c, int y, int x) const { return samples_[index(c, y, x)]; }

    std::span<float> plane(int c) {
        return {samples_.data() + static_cast<size_t>(c) * width_ * height_,
                static_cast<size_t>(width_) * height_};
    }
    std::span<const float> plane(int c) const {
        return {samples_.data() + static_cast<size_t>(c) * width_ * height_,
                static_cast<size_t>(width_) * height_};
    }

    std::span<float> samples() { return samples_; }
    std::span<const float> samples() const { return samples_; }

    bool same_shape(const PlanarImage& o) const {
        return width_ == o.width_ && height_ == o.height_ && channels_ == o.channels_;
    }

    /// Mean over every sample (double accumulation).
    double mean() const;

    /// Extracts one channel as a single-plane image.
    PlanarImage extract_plane(int c) const;

private:
    size_t index(int c, int y, int x) const {
        return (static_cast<size_t>(c) * height_ + y) * width_ + x;
    }

    int width_ = 0;
    int height_ = 0;
    int channels_ = 0;
    Domain domain_ = Domain::EncodedSrgb;
    std::vector<float> samples_;
};

}  // namespace cfalab
