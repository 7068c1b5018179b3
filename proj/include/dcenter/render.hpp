#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace dcenter {

struct Viewport {
  std::complex<double> center{0.0, 0.0};
  double half_width = 2.0;  ///< half of the horizontal extent; vertical extent follows the aspect ratio
  unsigned width = 512;
  unsigned height = 512;
  unsigned max_iter = 256;
  double escape_radius = 4.0;

  double pixel_size() const { return 2.0 * half_width / width; }
  /// Complex coordinate of the centre of pixel (x, y); row 0 is the top.
  std::complex<double> pixel_point(unsigned x, unsigned y) const;
};

constexpr unsigned kMaxPixelsPerSide = 8192;

/// Throws Error{Domain} when the viewport cannot be rendered for degree d.
void validate_viewport(const Viewport& vp, unsigned d);

/// Row-major mask, 1 where the orbit of the pixel stays below the escape
/// radius for max_iter steps.
std::vector<std::uint8_t> julia_interior_mask(std::complex<double> c, unsigned d, const Viewport& vp);

struct RenderOptions {
  unsigned overlay_orbit = 0;  ///< mark z_1..z_n of the critical orbit when n > 0
};

/// Binary PPM ("P6\n<w> <h>\n255\n" + RGB bytes). Interior pixels are black.
std::vector<std::uint8_t> render_julia_ppm(std::complex<double> c, unsigned d, const Viewport& vp,
                                           const RenderOptions& options = {});

/// Writes render_julia_ppm to out_path; Error{Io} if the file cannot be written.
void render_julia(std::complex<double> c, unsigned d, const Viewport& vp, const std::string& out_path,
                  const RenderOptions& options = {});

}  // namespace dcenter
