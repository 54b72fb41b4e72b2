#include "docuforge/image.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <limits>

#include "json.hpp"

namespace docuforge {

double range_min(Range r) { return r == Range::Signed ? -1.0 : 0.0; }

double range_max(Range r) {
    switch (r) {
        case Range::U8: return 255.0;
        case Range::Unit: return 1.0;
        case Range::Signed: return 1.0;
    }
    return 0.0;
}

const char* range_name(Range r) {
    switch (r) {
        case Range::U8: return "uint8";
        case Range::Unit: return "unit";
        case Range::Signed: return "signed";
    }
    return "?";
}

void ImageTensor::validate() const {
    if (height < 1 || width < 1)
        throw InvalidArgument("ImageTensor: height and width must be >= 1");
    if (channels < 1 || channels > 4)
        throw InvalidArgument("ImageTensor: channels must be in {1,2,3,4}");
    if (values.size() != static_cast<size_t>(height) * width * channels)
        throw InvalidArgument("ImageTensor: value buffer does not match shape");
    const double lo = range_min(range), hi = range_max(range);
    for (double v : values) {
        if (!(v >= lo && v <= hi))
            throw InvalidArgument("ImageTensor: value outside declared range");
    }
}

ImageTensor load_image(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path))
        throw NotFoundError("no such file: " + path.string());

    png_image im{};
    im.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&im, path.string().c_str())) {
        std::string msg = im.message;
        png_image_free(&im);
        throw DecodeError("png decode failed for " + path.string() + ": " + msg);
    }

    const int channels = PNG_IMAGE_PIXEL_CHANNELS(im.format);
    switch (channels) {
        case 1: im.format = PNG_FORMAT_GRAY; break;
        case 2: im.format = PNG_FORMAT_GA; break;
        case 3: im.format = PNG_FORMAT_RGB; break;
        default: im.format = PNG_FORMAT_RGBA; break;
    }

    std::vector<png_byte> buf(PNG_IMAGE_SIZE(im));
    if (!png_image_finish_read(&im, nullptr, buf.data(), 0, nullptr)) {
        std::string msg = im.message;
        png_image_free(&im);
        throw DecodeError("png decode failed for " + path.string() + ": " + msg);
    }

    ImageTensor out(static_cast<int>(im.height), static_cast<int>(im.width),
                    PNG_IMAGE_PIXEL_CHANNELS(im.format), Range::U8);
    for (size_t i = 0; i < buf.size(); ++i) out.values[i] = buf[i];
    return out;
}

static png_byte to_byte(double v, Range r) {
    double u;
    switch (r) {
        case Range::U8: u = v; break;
        case Range::Unit: u = v * 255.0; break;
        case Range::Signed: u = (v + 1.0) * 0.5 * 255.0; break;
        default: u = v;
    }
    long b = std::lround(u);
    if (b < 0) b = 0;
    if (b > 255) b = 255;
    return static_cast<png_byte>(b);
}

void save_image(const ImageTensor& img, const std::filesystem::path& path) {
    img.validate();

    png_image im{};
    im.version = PNG_IMAGE_VERSION;
    im.width = static_cast<png_uint_32>(img.width);
    im.height = static_cast<png_uint_32>(img.height);
    switch (img.channels) {
        case 1: im.format = PNG_FORMAT_GRAY; break;
        case 2: im.format = PNG_FORMAT_GA; break;
        case 3: im.format = PNG_FORMAT_RGB; break;
        default: im.format = PNG_FORMAT_RGBA; break;
    }

    std::vector<png_byte> buf(img.values.size());
    for (size_t i = 0; i < buf.size(); ++i) buf[i] = to_byte(img.values[i], img.range);

    if (!png_image_write_to_file(&im, path.string().c_str(), 0, buf.data(), 0, nullptr)) {
        std::string msg = im.message;
        png_image_free(&im);
        throw IoError("png write failed for " + path.string() + ": " + msg);
    }
}

ImageTensor normalize(const ImageTensor& img, Range target) {
    if (img.range == target) return img;
    const double in_lo = range_min(img.range), in_hi = range_max(img.range);
    const double out_lo = range_min(target), out_hi = range_max(target);
    const double scale = (out_hi - out_lo) / (in_hi - in_lo);

    ImageTensor out = img;
    out.range = target;
    for (double& v : out.values) v = out_lo + (v - in_lo) * scale;
    return out;
}

static std::vector<int> axis_origins(int dim, int size, int stride) {
    std::vector<int> o;
    for (int p = 0; p + size <= dim; p += stride) o.push_back(p);
    if (o.empty() || o.back() + size < dim) o.push_back(dim - size);
    return o;
}

std::vector<ImagePatch> extract_patches(const ImageTensor& img, int size, int stride) {
    if (size < 1 || size > img.height || size > img.width)
        throw InvalidArgument("extract_patches: size larger than image");
    if (stride < 1) throw InvalidArgument("extract_patches: stride must be >= 1");

    const auto ys = axis_origins(img.height, size, stride);
    const auto xs = axis_origins(img.width, size, stride);

    std::vector<ImagePatch> patches;
    patches.reserve(ys.size() * xs.size());
    for (int oy : ys) {
        for (int ox : xs) {
            ImagePatch p;
            p.y = oy;
            p.x = ox;
            p.image = ImageTensor(size, size, img.channels, img.range);
            for (int y = 0; y < size; ++y)
                for (int x = 0; x < size; ++x)
                    for (int c = 0; c < img.channels; ++c)
                        p.image.at(y, x, c) = img.at(oy + y, ox + x, c);
            patches.push_back(std::move(p));
        }
    }
    return patches;
}

double mse(const ImageTensor& a, const ImageTensor& b) {
    if (!a.same_shape(b) || a.range != b.range)
        throw InvalidArgument("mse: images must share shape and range");
    double acc = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i) {
        const double d = a.values[i] - b.values[i];
        acc += d * d;
    }
    return acc / static_cast<double>(a.values.size());
}

PsnrResult psnr(const ImageTensor& reference, const ImageTensor& test, PsnrMode mode) {
    PsnrResult r;
    r.mse = mse(reference, test);
    r.peak = range_max(reference.range);
    r.mode = mode;
    if (r.mse == 0.0) {
        r.psnr_db = std::numeric_limits<double>::infinity();
    } else if (mode == PsnrMode::Standard) {
        r.psnr_db = 10.0 * std::log10(r.peak * r.peak / r.mse);
    } else {
        r.psnr_db = 20.0 * std::log10(r.peak / r.mse);
    }
    return r;
}

std::string psnr_record_json(const PsnrResult& r, const std::string& path) {
    nlohmann::json j;
    j["path"] = path;
    j["mse"] = r.mse;
    j["peak"] = r.peak;
    if (std::isinf(r.psnr_db))
        j["psnr_db"] = "inf";
    else
        j["psnr_db"] = r.psnr_db;
    j["mode"] = r.mode == PsnrMode::Standard ? "standard" : "paper-eq1";
    return j.dump();
}

}  // namespace docuforge
