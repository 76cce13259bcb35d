#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cytoeval {

/// Dense boolean pixel grid, row-major storage: px[y * width + x].
struct Bitmap {
  int64_t width = 0;
  int64_t height = 0;
  std::vector<uint8_t> px;

  Bitmap() = default;
  Bitmap(int64_t w, int64_t h) : width(w), height(h), px(static_cast<size_t>(w * h), 0) {}

  bool at(int64_t x, int64_t y) const { return px[static_cast<size_t>(y * width + x)] != 0; }
  void set(int64_t x, int64_t y, bool v) { px[static_cast<size_t>(y * width + x)] = v ? 1 : 0; }

  bool operator==(const Bitmap&) const = default;
};

/// Run-length-encoded binary mask. Runs are column-major (all pixels of
/// column 0 top to bottom, then column 1, ...) and alternate background /
/// foreground starting with background; only the leading background run may
/// be zero. Run lengths are 64-bit so images of at least 2^31 pixels encode.
class BinaryMask {
 public:
  BinaryMask() = default;

  /// Validates all representation invariants; throws GeometryError for bad
  /// dimensions and CodecError for malformed runs.
  static BinaryMask from_runs(int64_t width, int64_t height, std::vector<uint64_t> runs);

  int64_t width() const { return width_; }
  int64_t height() const { return height_; }
  const std::vector<uint64_t>& runs() const { return runs_; }

  bool empty() const;  // no foreground pixels

  bool operator==(const BinaryMask&) const = default;

 private:
  int64_t width_ = 0;
  int64_t height_ = 0;
  std::vector<uint64_t> runs_;
};

/// Closed polygon outline with sub-pixel vertices; the edge from the last
/// vertex back to the first is implicit.
struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

struct Polygon {
  std::vector<Point> vertices;
  bool operator==(const Polygon&) const = default;
};

/// Axis-aligned pixel box; w and h are positive extents.
struct BBox {
  int64_t x = 0;
  int64_t y = 0;
  int64_t w = 0;
  int64_t h = 0;
  bool operator==(const BBox&) const = default;
};

BinaryMask rle_encode(const Bitmap& bitmap);
Bitmap rle_decode(const BinaryMask& mask);

/// Compact text token for a mask's runs. Runs are delta-transformed
/// (d[0]=runs[0], d[1]=runs[1], d[i]=runs[i]-runs[i-2] for i>=2), each signed
/// delta is emitted little-endian in 5-bit groups inside 6-bit chunks whose
/// bit 5 flags continuation, and each chunk serializes as one character with
/// code chunk+48.
std::string rle_compress(const BinaryMask& mask);
BinaryMask rle_decompress(const std::string& token, int64_t width, int64_t height);

/// Pixel-center rasterization under the even-odd rule: pixel (i, j) is
/// foreground iff its center (i+0.5, j+0.5) lies inside the polygon.
/// Vertices are clamped into [0,width]x[0,height] first.
BinaryMask polygon_rasterize(const Polygon& poly, int64_t width, int64_t height);

/// Even-odd point-in-polygon test used by the rasterizer; exposed so masks
/// can be checked pixel by pixel against the same geometric rule.
bool point_in_polygon(const Polygon& poly, double x, double y);

/// |a intersect b| / |a union b|; 0 when both masks are empty.
double mask_iou(const BinaryMask& a, const BinaryMask& b);

uint64_t mask_area(const BinaryMask& m);

/// Tight foreground bounding box; throws ValidationError on an empty mask.
BBox mask_to_bbox(const BinaryMask& m);

/// Continuous rectangle-intersection IoU.
double bbox_iou(const BBox& a, const BBox& b);

}  // namespace cytoeval
