#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "docuforge/errors.hpp"

namespace docuforge {

// Declared value range of an image. Files are always 8-bit; the networks
// consume the signed range.
enum class Range { U8, Unit, Signed };

double range_min(Range r);
double range_max(Range r);
const char* range_name(Range r);

// H x W x C pixel array with a declared value range, interleaved channels.
// Channels: 1 = gray, 2 = gray+alpha (procedural logos), 3 = RGB, 4 = RGBA.
struct ImageTensor {
    int height = 0;
    int width = 0;
    int channels = 0;
    Range range = Range::U8;
    std::vector<double> values;  // row-major, interleaved

    ImageTensor() = default;
    ImageTensor(int h, int w, int c, Range r, double fill = 0.0)
        : height(h), width(w), channels(c), range(r),
          values(static_cast<size_t>(h) * w * c, fill) {}

    double at(int y, int x, int c = 0) const {
        return values[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    double& at(int y, int x, int c = 0) {
        return values[(static_cast<size_t>(y) * width + x) * channels + c];
    }

    size_t pixel_count() const { return static_cast<size_t>(height) * width; }
    bool same_shape(const ImageTensor& o) const {
        return height == o.height && width == o.width && channels == o.channels;
    }

    // Throws InvalidArgument when a field or value violates the invariants.
    void validate() const;
};

// PNG decode; 8-bit gray/GA/RGB/RGBA, always returned in the U8 range.
ImageTensor load_image(const std::filesystem::path& path);

// PNG encode; values are converted to uint8 with round-half-away-from-zero.
void save_image(const ImageTensor& img, const std::filesystem::path& path);

// Affine map between declared ranges. Identity when target == img.range.
ImageTensor normalize(const ImageTensor& img, Range target);

struct ImagePatch {
    ImageTensor image;
    int y = 0;  // origin offset in the source image
    int x = 0;
};

// All aligned size x size windows at the given stride plus edge-flush
// windows, so the whole image is covered.
std::vector<ImagePatch> extract_patches(const ImageTensor& img, int size, int stride);

// Mean squared difference over all pixels and channels, in range units.
double mse(const ImageTensor& a, const ImageTensor& b);

enum class PsnrMode { Standard, PaperEq1 };

struct PsnrResult {
    double mse = 0.0;
    double peak = 0.0;
    double psnr_db = 0.0;  // +infinity when mse == 0
    PsnrMode mode = PsnrMode::Standard;
};

// Standard mode: 10*log10(peak^2/mse). PaperEq1 mode: 20*log10(peak/mse).
// peak is the declared range maximum, not the observed image maximum.
PsnrResult psnr(const ImageTensor& reference, const ImageTensor& test,
                PsnrMode mode = PsnrMode::Standard);

// {"path": ..., "mse": ..., "peak": ..., "psnr_db": ..., "mode": ...}
std::string psnr_record_json(const PsnrResult& r, const std::string& path);

}  // namespace docuforge
