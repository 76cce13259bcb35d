#include "cytoeval/mask.hpp"

#include <algorithm>
#include <cmath>

#include "cytoeval/errors.hpp"

namespace cytoeval {

namespace {

void require_dims(int64_t width, int64_t height) {
  if (width <= 0 || height <= 0) {
    throw GeometryError("mask dimensions must be positive, got " + std::to_string(width) +
                        "x" + std::to_string(height));
  }
}

}  // namespace

BinaryMask BinaryMask::from_runs(int64_t width, int64_t height, std::vector<uint64_t> runs) {
  require_dims(width, height);
  if (runs.empty()) throw CodecError("mask needs at least one run");
  uint64_t total = 0;
  for (size_t i = 0; i < runs.size(); ++i) {
    if (runs[i] == 0 && i != 0) {
      throw CodecError("zero-length run at position " + std::to_string(i) +
                       " (only the leading background run may be zero)");
    }
    total += runs[i];
  }
  if (total != static_cast<uint64_t>(width) * static_cast<uint64_t>(height)) {
    throw CodecError("runs sum to " + std::to_string(total) + ", expected " +
                     std::to_string(width * height));
  }
  BinaryMask m;
  m.width_ = width;
  m.height_ = height;
  m.runs_ = std::move(runs);
  return m;
}

bool BinaryMask::empty() const {
  for (size_t i = 1; i < runs_.size(); i += 2) {
    if (runs_[i] > 0) return false;
  }
  return true;
}

BinaryMask rle_encode(const Bitmap& bitmap) {
  require_dims(bitmap.width, bitmap.height);
  std::vector<uint64_t> runs;
  uint64_t run = 0;
  bool value = false;
  for (int64_t x = 0; x < bitmap.width; ++x) {
    for (int64_t y = 0; y < bitmap.height; ++y) {
      if (bitmap.at(x, y) != value) {
        runs.push_back(run);
        run = 0;
        value = !value;
      }
      ++run;
    }
  }
  runs.push_back(run);
  return BinaryMask::from_runs(bitmap.width, bitmap.height, std::move(runs));
}

Bitmap rle_decode(const BinaryMask& mask) {
  Bitmap out(mask.width(), mask.height());
  uint64_t pos = 0;
  bool value = false;
  const int64_t h = mask.height();
  for (uint64_t run : mask.runs()) {
    if (value) {
      for (uint64_t k = 0; k < run; ++k) {
        const uint64_t p = pos + k;
        const int64_t x = static_cast<int64_t>(p) / h;
        const int64_t y = static_cast<int64_t>(p) % h;
        out.set(x, y, true);
      }
    }
    pos += run;
    value = !value;
  }
  return out;
}

std::string rle_compress(const BinaryMask& mask) {
  std::string token;
  const auto& runs = mask.runs();
  for (size_t i = 0; i < runs.size(); ++i) {
    int64_t x = static_cast<int64_t>(runs[i]);
    if (i >= 2) x -= static_cast<int64_t>(runs[i - 2]);
    bool more = true;
    while (more) {
      int64_t chunk = x & 0x1f;
      x >>= 5;
      more = (chunk & 0x10) ? x != -1 : x != 0;
      if (more) chunk |= 0x20;
      token.push_back(static_cast<char>(chunk + 48));
    }
  }
  return token;
}

BinaryMask rle_decompress(const std::string& token, int64_t width, int64_t height) {
  require_dims(width, height);
  std::vector<uint64_t> runs;
  size_t i = 0;
  while (i < token.size()) {
    int64_t x = 0;
    int shift = 0;
    bool more = true;
    while (more) {
      if (i >= token.size()) throw CodecError("token truncated mid-value");
      const int chunk = token[i] - 48;
      if (chunk < 0 || chunk > 63) {
        throw CodecError("token character out of range at position " + std::to_string(i));
      }
      if (shift >= 64) throw CodecError("token value overflows 64 bits");
      x |= static_cast<int64_t>(chunk & 0x1f) << shift;
      more = (chunk & 0x20) != 0;
      ++i;
      shift += 5;
      if (!more && (chunk & 0x10) && shift < 64) {
        x |= ~int64_t{0} << shift;  // sign-extend
      }
    }
    if (runs.size() >= 2) x += static_cast<int64_t>(runs[runs.size() - 2]);
    if (x < 0) throw CodecError("negative run length after delta reconstruction");
    runs.push_back(static_cast<uint64_t>(x));
  }
  return BinaryMask::from_runs(width, height, std::move(runs));
}

namespace {

// One edge crossing of the horizontal line y=cy, computed with the exact
// expression the point test uses so both agree bit for bit.
inline bool edge_crossing(const Point& a, const Point& b, double cy, double* cx) {
  if ((a.y > cy) == (b.y > cy)) return false;
  *cx = a.x + (cy - a.y) / (b.y - a.y) * (b.x - a.x);
  return true;
}

Polygon clamp_polygon(const Polygon& poly, int64_t width, int64_t height) {
  Polygon out = poly;
  for (auto& v : out.vertices) {
    v.x = std::clamp(v.x, 0.0, static_cast<double>(width));
    v.y = std::clamp(v.y, 0.0, static_cast<double>(height));
  }
  return out;
}

}  // namespace

bool point_in_polygon(const Polygon& poly, double x, double y) {
  const auto& v = poly.vertices;
  bool inside = false;
  for (size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    double cx = 0.0;
    if (edge_crossing(v[j], v[i], y, &cx) && x < cx) inside = !inside;
  }
  return inside;
}

BinaryMask polygon_rasterize(const Polygon& poly, int64_t width, int64_t height) {
  require_dims(width, height);
  if (poly.vertices.size() < 3) {
    throw GeometryError("polygon needs at least 3 vertices, got " +
                        std::to_string(poly.vertices.size()));
  }
  const Polygon p = clamp_polygon(poly, width, height);
  Bitmap out(width, height);
  std::vector<double> crossings;
  const auto& v = p.vertices;
  for (int64_t row = 0; row < height; ++row) {
    const double cy = static_cast<double>(row) + 0.5;
    crossings.clear();
    for (size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
      double cx = 0.0;
      if (edge_crossing(v[j], v[i], cy, &cx)) crossings.push_back(cx);
    }
    if (crossings.empty()) continue;
    std::sort(crossings.begin(), crossings.end());
    for (int64_t col = 0; col < width; ++col) {
      const double cx = static_cast<double>(col) + 0.5;
      // Parity of crossings strictly right of the center; identical to the
      // per-point even-odd test above.
      const auto beyond = std::upper_bound(crossings.begin(), crossings.end(), cx);
      if ((crossings.end() - beyond) % 2 != 0) out.set(col, row, true);
    }
  }
  return rle_encode(out);
}

double mask_iou(const BinaryMask& a, const BinaryMask& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw GeometryError("mask IoU requires equal dimensions");
  }
  const auto& ra = a.runs();
  const auto& rb = b.runs();
  uint64_t inter = 0;
  uint64_t uni = 0;
  size_t ia = 0, ib = 0;
  uint64_t ca = ra[0], cb = rb[0];
  bool va = false, vb = false;
  uint64_t remaining = static_cast<uint64_t>(a.width()) * static_cast<uint64_t>(a.height());
  while (remaining > 0) {
    while (ca == 0 && ia + 1 < ra.size()) {
      ca = ra[++ia];
      va = !va;
    }
    while (cb == 0 && ib + 1 < rb.size()) {
      cb = rb[++ib];
      vb = !vb;
    }
    const uint64_t step = std::min(std::min(ca, cb), remaining);
    if (va || vb) {
      uni += step;
      if (va && vb) inter += step;
    }
    ca -= step;
    cb -= step;
    remaining -= step;
  }
  if (uni == 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

uint64_t mask_area(const BinaryMask& m) {
  uint64_t area = 0;
  const auto& runs = m.runs();
  for (size_t i = 1; i < runs.size(); i += 2) area += runs[i];
  return area;
}

BBox mask_to_bbox(const BinaryMask& m) {
  const auto& runs = m.runs();
  const int64_t h = m.height();
  int64_t xmin = m.width(), xmax = -1, ymin = h, ymax = -1;
  uint64_t pos = 0;
  bool value = false;
  for (uint64_t run : runs) {
    if (value && run > 0) {
      const int64_t start = static_cast<int64_t>(pos);
      const int64_t end = static_cast<int64_t>(pos + run - 1);
      const int64_t xs = start / h;
      const int64_t xe = end / h;
      xmin = std::min(xmin, xs);
      xmax = std::max(xmax, xe);
      if (xs == xe) {
        ymin = std::min(ymin, start % h);
        ymax = std::max(ymax, end % h);
      } else {
        ymin = 0;
        ymax = h - 1;
      }
    }
    pos += run;
    value = !value;
  }
  if (xmax < 0) throw ValidationError("bounding box of an empty mask");
  return BBox{xmin, ymin, xmax - xmin + 1, ymax - ymin + 1};
}

double bbox_iou(const BBox& a, const BBox& b) {
  const double iw = std::min<double>(a.x + a.w, b.x + b.w) - std::max<double>(a.x, b.x);
  const double ih = std::min<double>(a.y + a.h, b.y + b.h) - std::max<double>(a.y, b.y);
  if (iw <= 0.0 || ih <= 0.0) return 0.0;
  const double inter = iw * ih;
  const double uni = static_cast<double>(a.w) * a.h + static_cast<double>(b.w) * b.h - inter;
  return inter / uni;
}

}  // namespace cytoeval
