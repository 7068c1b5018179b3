#include "dcenter/render.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "dcenter/dynamics.hpp"
#include "dcenter/error.hpp"
#include "dcenter/parallel.hpp"

namespace dcenter {

std::complex<double> Viewport::pixel_point(unsigned x, unsigned y) const {
  const double px = pixel_size();
  return {center.real() + (x + 0.5 - width / 2.0) * px, center.imag() + (height / 2.0 - y - 0.5) * px};
}

void validate_viewport(const Viewport& vp, unsigned d) {
  if (d < 2) throw Error(ErrorKind::Domain, "render: d must be >= 2");
  if (vp.width == 0 || vp.height == 0 || vp.width > kMaxPixelsPerSide || vp.height > kMaxPixelsPerSide)
    throw Error(ErrorKind::Domain, "render: pixel dimensions must be in [1, 8192]");
  if (!(vp.half_width > 0.0) || !std::isfinite(vp.half_width)) throw Error(ErrorKind::Domain, "render: half_width must be positive");
  if (vp.max_iter == 0) throw Error(ErrorKind::Domain, "render: max_iter must be positive");
  if (!(vp.escape_radius >= std::pow(2.0, 1.0 / (d - 1))))
    throw Error(ErrorKind::Domain, "render: escape_radius must be at least 2^(1/(d-1))");
}

namespace {

// Iterations before escape, or max_iter if the orbit stays bounded.
unsigned escape_time(std::complex<double> z, std::complex<double> c, unsigned d, unsigned max_iter, double radius2) {
  for (unsigned it = 0; it < max_iter; ++it) {
    if (std::norm(z) > radius2) return it;
    std::complex<double> pw = z;
    for (unsigned e = 1; e < d; ++e) pw *= z;
    z = pw + c;
  }
  return std::norm(z) > radius2 ? max_iter - 1 : max_iter;
}

std::vector<unsigned> escape_times(std::complex<double> c, unsigned d, const Viewport& vp) {
  validate_viewport(vp, d);
  std::vector<unsigned> times(std::size_t{vp.width} * vp.height);
  const double radius2 = vp.escape_radius * vp.escape_radius;
  parallel_for(vp.height, worker_count(), [&](std::size_t y) {
    for (unsigned x = 0; x < vp.width; ++x)
      times[y * vp.width + x] = escape_time(vp.pixel_point(x, static_cast<unsigned>(y)), c, d, vp.max_iter, radius2);
  });
  return times;
}

}  // namespace

std::vector<std::uint8_t> julia_interior_mask(std::complex<double> c, unsigned d, const Viewport& vp) {
  const auto times = escape_times(c, d, vp);
  std::vector<std::uint8_t> mask(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) mask[i] = times[i] == vp.max_iter ? 1 : 0;
  return mask;
}

std::vector<std::uint8_t> render_julia_ppm(std::complex<double> c, unsigned d, const Viewport& vp,
                                           const RenderOptions& options) {
  const auto times = escape_times(c, d, vp);
  const std::string header = "P6\n" + std::to_string(vp.width) + " " + std::to_string(vp.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const std::size_t offset = out.size();
  out.resize(offset + times.size() * 3);
  for (std::size_t i = 0; i < times.size(); ++i) {
    std::uint8_t* px = &out[offset + 3 * i];
    if (times[i] == vp.max_iter) {
      px[0] = px[1] = px[2] = 0;
      continue;
    }
    // Exterior: light background shaded by escape time, never pure black.
    const double t = std::sqrt(static_cast<double>(times[i]) / vp.max_iter);
    const auto shade = static_cast<std::uint8_t>(255 - std::lround(175.0 * t));
    px[0] = shade;
    px[1] = shade;
    px[2] = static_cast<std::uint8_t>(std::min(255L, static_cast<long>(shade) + 20));
  }

  if (options.overlay_orbit > 0) {
    const auto orbit = critical_orbit(c, d, options.overlay_orbit);
    const double px_size = vp.pixel_size();
    for (const auto& z : orbit.points) {
      const double fx = (z.real() - vp.center.real()) / px_size + vp.width / 2.0;
      const double fy = vp.height / 2.0 - (z.imag() - vp.center.imag()) / px_size;
      const long cx = static_cast<long>(std::floor(fx));
      const long cy = static_cast<long>(std::floor(fy));
      for (long dy = -2; dy <= 2; ++dy) {
        for (long dx = -2; dx <= 2; ++dx) {
          if (dx != 0 && dy != 0) continue;  // plus-shaped marker
          const long x = cx + dx;
          const long y = cy + dy;
          if (x < 0 || y < 0 || x >= static_cast<long>(vp.width) || y >= static_cast<long>(vp.height)) continue;
          std::uint8_t* px = &out[offset + 3 * (static_cast<std::size_t>(y) * vp.width + static_cast<std::size_t>(x))];
          px[0] = 230;
          px[1] = 30;
          px[2] = 30;
        }
      }
    }
  }
  return out;
}

void render_julia(std::complex<double> c, unsigned d, const Viewport& vp, const std::string& out_path,
                  const RenderOptions& options) {
  const auto bytes = render_julia_ppm(c, d, vp, options);
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::Io, "render_julia: cannot open '" + out_path + "' for writing");
  file.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw Error(ErrorKind::Io, "render_julia: failed writing '" + out_path + "'");
}

}  // namespace dcenter
