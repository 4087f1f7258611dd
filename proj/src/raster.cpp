#include "placer/raster.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <sstream>

#include "placer/errors.hpp"

namespace placer {

Image crop_raster(const Image& img, const PixelRect& bbox) {
    if (bbox.x0 < 0 || bbox.y0 < 0 || bbox.x1 > img.width || bbox.y1 > img.height ||
        bbox.x0 >= bbox.x1 || bbox.y0 >= bbox.y1) {
        throw FormatError("crop bbox [" + std::to_string(bbox.x0) + "," + std::to_string(bbox.y0) +
                          "," + std::to_string(bbox.x1) + "," + std::to_string(bbox.y1) +
                          ") outside " + std::to_string(img.width) + "x" +
                          std::to_string(img.height) + " image");
    }
    Image out(bbox.width(), bbox.height());
    for (int y = bbox.y0; y < bbox.y1; ++y) {
        std::memcpy(out.at(0, y - bbox.y0), img.at(bbox.x0, y), static_cast<std::size_t>(out.width) * 3);
    }
    return out;
}

std::string encode_ppm(const Image& img) {
    std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
    return out;
}

namespace {

// Reads one whitespace-delimited token, skipping '#' comment lines.
std::string next_token(std::string_view bytes, std::size_t& pos) {
    while (pos < bytes.size()) {
        if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
            ++pos;
        } else if (bytes[pos] == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        } else {
            break;
        }
    }
    const std::size_t start = pos;
    while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
    return std::string(bytes.substr(start, pos - start));
}

} // namespace

Image decode_ppm(std::string_view bytes) {
    std::size_t pos = 0;
    if (next_token(bytes, pos) != "P6") throw FormatError("not a P6 ppm");
    int w = 0, h = 0, maxval = 0;
    try {
        w = std::stoi(next_token(bytes, pos));
        h = std::stoi(next_token(bytes, pos));
        maxval = std::stoi(next_token(bytes, pos));
    } catch (const std::exception&) {
        throw FormatError("malformed ppm header");
    }
    if (w <= 0 || h <= 0 || maxval != 255) throw FormatError("unsupported ppm header");
    ++pos; // single whitespace after maxval
    const std::size_t need = static_cast<std::size_t>(w) * h * 3;
    if (bytes.size() - pos < need) throw FormatError("truncated ppm payload");
    Image img(w, h);
    std::memcpy(img.pixels.data(), bytes.data() + pos, need);
    return img;
}

Image read_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return decode_ppm(buf.str());
}

void write_ppm(const Image& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    const std::string bytes = encode_ppm(img);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

} // namespace placer
