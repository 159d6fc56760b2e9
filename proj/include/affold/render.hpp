#pragma once

// Static SVG pictures of the rank <= 2 affine hyperplane arrangement with the
// periodic orientation, the fundamental alcove, and walks or folded paths.
//
// Points are taken on the coroot basis and placed in the plane through a
// Cholesky factor of the symmetrized Cartan matrix, so angles between walls are
// the true ones. Rank 1 is drawn as a horizontal strip.

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "affold/affine.hpp"
#include "affold/folding.hpp"

namespace affold {

struct SceneStyle {
  double size = 640;
  bool root_labels = true;
  bool orientation_marks = true;
};

struct SceneSpec {
  AffineWeylGroup group;
  /// Largest |k| of the drawn hyperplanes H_{alpha + k delta}.
  int radius = 2;
  std::vector<FoldedPath> paths;
  /// Unfolded walks, drawn as paths of crossings only.
  std::vector<Word> walks;
  SceneStyle style{};
};

namespace detail {

using Vec2 = std::array<double, 2>;

inline std::string fmt(double x)
{
  if (std::fabs(x) < 0.005) x = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

inline std::string fmt(const Vec2& p) { return fmt(p[0]) + "," + fmt(p[1]); }

class Canvas {
 public:
  Canvas(const AffineWeylGroup& W, int radius, double size) : W_(W), size_(size)
  {
    const auto& d = W.root_system().datum();
    n_ = d.n;
    if (n_ > 2) throw std::invalid_argument("render supports rank <= 2 only, got rank " + std::to_string(n_));
    // S = diag(eps) A is symmetric positive definite; rows of its Cholesky
    // factor place the coroots h_i in the plane.
    double s[2][2] = {{0, 0}, {0, 0}};
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) s[i][j] = d.symmetrizer[static_cast<std::size_t>(i)].get_d() * d.entry(i, j);
    if (n_ == 1) {
      basis_[0] = {std::sqrt(s[0][0]), 0};
    } else {
      const double l00 = std::sqrt(s[0][0]);
      const double l10 = s[1][0] / l00;
      basis_[0] = {l00, 0};
      basis_[1] = {l10, std::sqrt(s[1][1] - l10 * l10)};
    }
    // every hyperplane with |k| <= radius crosses the disc of radius reach_
    double min_norm = 1e300;
    for (const auto& a : W.root_system().positive_roots()) min_norm = std::min(min_norm, norm(normal(a)));
    reach_ = (radius + 0.75) / min_norm;
    scale_ = (size_ / 2 - 24) / reach_;
  }

  int rank() const { return n_; }
  double reach() const { return reach_; }

  /// Euclidean point of x = sum x_i h_i.
  Vec2 embed(const std::vector<double>& x) const
  {
    Vec2 p{0, 0};
    for (int i = 0; i < n_; ++i) {
      p[0] += x[static_cast<std::size_t>(i)] * basis_[static_cast<std::size_t>(i)][0];
      p[1] += x[static_cast<std::size_t>(i)] * basis_[static_cast<std::size_t>(i)][1];
    }
    return p;
  }
  Vec2 embed(const RationalPoint& x) const
  {
    std::vector<double> d;
    for (const auto& c : x) d.push_back(c.get_d());
    return embed(d);
  }

  /// Euclidean normal N with <x, alpha> = N . embed(x).
  Vec2 normal(const FiniteRoot& a) const
  {
    const auto& rs = W_.root_system();
    std::array<double, 2> c{0, 0};
    for (int j = 0; j < n_; ++j) c[static_cast<std::size_t>(j)] = rs.pairing(Coweight{rs.unit(j)}, a);
    if (n_ == 1) return {c[0] / basis_[0][0], 0};
    // solve B^T N = c where B has rows basis_
    const double a00 = basis_[0][0], a01 = basis_[1][0], a10 = basis_[0][1], a11 = basis_[1][1];
    const double det = a00 * a11 - a01 * a10;
    return {(c[0] * a11 - a01 * c[1]) / det, (a00 * c[1] - a10 * c[0]) / det};
  }

  static double norm(const Vec2& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1]); }

  /// To SVG user units (y axis points down).
  Vec2 screen(const Vec2& p) const { return {size_ / 2 + scale_ * p[0], size_ / 2 - scale_ * p[1]}; }
  double scale() const { return scale_; }

 private:
  const AffineWeylGroup& W_;
  int n_ = 0;
  double size_;
  std::array<Vec2, 2> basis_{};
  double reach_ = 1;
  double scale_ = 1;
};

inline Vec2 lerp(const Vec2& a, const Vec2& b, double s) { return {a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])}; }

// Triangle pointing along dir, centered at p.
inline std::string arrow_head(const Vec2& p, Vec2 dir, double len)
{
  const double n = Canvas::norm(dir);
  if (n == 0) dir = {1, 0};
  else dir = {dir[0] / n, dir[1] / n};
  const Vec2 perp{-dir[1], dir[0]};
  const Vec2 tip{p[0] + dir[0] * len / 2, p[1] + dir[1] * len / 2};
  const Vec2 l{p[0] - dir[0] * len / 2 + perp[0] * len / 2, p[1] - dir[1] * len / 2 + perp[1] * len / 2};
  const Vec2 r{p[0] - dir[0] * len / 2 - perp[0] * len / 2, p[1] - dir[1] * len / 2 - perp[1] * len / 2};
  return "M" + fmt(tip) + " L" + fmt(l) + " L" + fmt(r) + " Z";
}

// Small U turn at the wall point p, opening back along -dir.
inline std::string hook(const Vec2& p, Vec2 dir, double len)
{
  const double n = Canvas::norm(dir);
  if (n == 0) dir = {1, 0};
  else dir = {dir[0] / n, dir[1] / n};
  const Vec2 perp{-dir[1], dir[0]};
  const Vec2 a{p[0] - dir[0] * len + perp[0] * len / 2, p[1] - dir[1] * len + perp[1] * len / 2};
  const Vec2 b{p[0] - dir[0] * len - perp[0] * len / 2, p[1] - dir[1] * len - perp[1] * len / 2};
  const Vec2 c1{p[0] + perp[0] * len / 2, p[1] + perp[1] * len / 2};
  const Vec2 c2{p[0] - perp[0] * len / 2, p[1] - perp[1] * len / 2};
  return "M" + fmt(a) + " L" + fmt(c1) + " Q" + fmt(p) + " " + fmt(c2) + " L" + fmt(b);
}

inline std::string escape_label(const std::string& s)
{
  std::string out;
  for (char c : s) out += (c == '<') ? "&lt;" : (c == '>') ? "&gt;" : (c == '&') ? "&amp;" : std::string(1, c);
  return out;
}

}  // namespace detail

/// Hyperplanes, orientation marks and the fundamental alcove, plus every
/// overlay in spec.
inline std::string render_arrangement(const SceneSpec& spec)
{
  using detail::fmt;
  using detail::Vec2;
  if (spec.radius < 1) throw std::invalid_argument("render: radius must be >= 1");
  const AffineWeylGroup& W = spec.group;
  const detail::Canvas cv(W, spec.radius, spec.style.size);
  const double px = cv.scale();
  const std::string size = fmt(spec.style.size);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  out += "<style>\n"
         ".hyperplane{stroke:#555;stroke-width:1}\n"
         ".strip{stroke:#999;stroke-width:1}\n"
         ".alcove-fundamental{fill:#f2c94c;fill-opacity:0.6;stroke:none}\n"
         ".orient{font:11px sans-serif;fill:#888}\n"
         ".label{font:9px sans-serif;fill:#446}\n"
         ".walk{fill:none;stroke:#c0392b;stroke-width:2}\n"
         ".crossing-arrow{fill:#c0392b}\n"
         ".fold-hook{fill:none;stroke:#2c3e50;stroke-width:2}\n"
         "</style>\n";
  out += "<rect width=\"" + size + "\" height=\"" + size + "\" fill=\"white\"/>\n";

  // fundamental alcove first so the walls sit on top of it
  {
    const Alcove a0 = W.alcove_position(W.identity());
    out += "<polygon class=\"alcove-fundamental\" points=\"";
    if (cv.rank() == 1) {
      const double x0 = cv.screen(cv.embed(a0.vertices[0]))[0], x1 = cv.screen(cv.embed(a0.vertices[1]))[0];
      const double y = spec.style.size / 2;
      out += fmt(Vec2{x0, y - 14}) + " " + fmt(Vec2{x1, y - 14}) + " " + fmt(Vec2{x1, y + 14}) + " " + fmt(Vec2{x0, y + 14});
    } else {
      for (std::size_t i = 0; i < a0.vertices.size(); ++i) out += (i ? " " : "") + fmt(cv.screen(cv.embed(a0.vertices[i])));
    }
    out += "\"/>\n";
  }

  if (cv.rank() == 1) {
    const double y = spec.style.size / 2;
    out += "<line class=\"strip\" x1=\"" + fmt(cv.screen({-cv.reach(), 0})[0]) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
           fmt(cv.screen({cv.reach(), 0})[0]) + "\" y2=\"" + fmt(y) + "\"/>\n";
  }

  for (const auto& alpha : W.root_system().positive_roots()) {
    const Vec2 N = cv.normal(alpha);
    const double nn = detail::Canvas::norm(N);
    const Vec2 unit{N[0] / nn, N[1] / nn};
    const Vec2 dir{-unit[1], unit[0]};
    for (int k = -spec.radius; k <= spec.radius; ++k) {
      // <x, alpha> + k = 0
      const double dist = -k / nn;
      const Vec2 foot{unit[0] * dist, unit[1] * dist};
      Vec2 p, q;
      if (cv.rank() == 1) {
        p = cv.screen(foot);
        q = p;
        p[1] -= 18;
        q[1] += 18;
      } else {
        const double half = std::sqrt(std::max(0.0, cv.reach() * cv.reach() - dist * dist));
        p = cv.screen({foot[0] - dir[0] * half, foot[1] - dir[1] * half});
        q = cv.screen({foot[0] + dir[0] * half, foot[1] + dir[1] * half});
      }
      const AffineRoot h{alpha, k};
      out += "<line class=\"hyperplane\" data-root=\"" + W.to_string(h) + "\" x1=\"" + fmt(p[0]) + "\" y1=\"" +
             fmt(p[1]) + "\" x2=\"" + fmt(q[0]) + "\" y2=\"" + fmt(q[1]) + "\"/>\n";
      if (spec.style.orientation_marks) {
        // the positive side is where <x, alpha> + k increases
        const double off = 7 / px;
        const Vec2 at = cv.rank() == 1 ? foot : Vec2{foot[0] + dir[0] * (cv.reach() - 0.25 * cv.reach() / (spec.radius + 1)),
                                                    foot[1] + dir[1] * (cv.reach() - 0.25 * cv.reach() / (spec.radius + 1))};
        const Vec2 plus = cv.screen({at[0] + unit[0] * off, at[1] + unit[1] * off});
        const Vec2 minus = cv.screen({at[0] - unit[0] * off, at[1] - unit[1] * off});
        const double dy = cv.rank() == 1 ? -22 : 4;
        out += "<text class=\"orient\" text-anchor=\"middle\" x=\"" + fmt(plus[0]) + "\" y=\"" + fmt(plus[1] + dy) + "\">+</text>\n";
        out += "<text class=\"orient\" text-anchor=\"middle\" x=\"" + fmt(minus[0]) + "\" y=\"" + fmt(minus[1] + dy) +
               "\">&#8722;</text>\n";
      }
      if (spec.style.root_labels) {
        const Vec2 at = cv.rank() == 1 ? Vec2{q[0], q[1] + 12} : q;
        out += "<text class=\"label\" text-anchor=\"middle\" x=\"" + fmt(at[0]) + "\" y=\"" + fmt(at[1]) + "\">H(" +
               detail::escape_label(W.to_string(h)) + ")</text>\n";
      }
    }
  }

  // overlays
  auto center = [&](const AffineWeylElement& g) -> Vec2 {
    const Vec2 p = cv.screen(cv.embed(W.alcove_position(g).barycenter));
    return cv.rank() == 1 ? Vec2{p[0], spec.style.size / 2} : p;
  };
  auto draw = [&](const Word& word, const std::vector<StepKind>& kinds, const std::string& id) {
    std::vector<Vec2> pts;
    std::string glyphs;
    AffineWeylElement v = W.identity();
    pts.push_back(center(v));
    for (std::size_t k = 0; k < word.size(); ++k) {
      const AffineWeylElement next = W.mul(v, W.simple_reflection(word[k]));
      const Vec2 from = center(v), across = center(next);
      const Vec2 wall = detail::lerp(from, across, 0.5);
      const Vec2 dir{across[0] - from[0], across[1] - from[1]};
      pts.push_back(wall);
      if (kinds[k] == StepKind::Fold) {
        glyphs += "<path class=\"fold-hook\" data-step=\"" + std::to_string(k + 1) + "\" d=\"" + detail::hook(wall, dir, 7) + "\"/>\n";
        pts.push_back(from);
      } else {
        glyphs += "<path class=\"crossing-arrow\" data-step=\"" + std::to_string(k + 1) + "\" data-kind=\"" +
                  std::string(1, step_code(kinds[k])) + "\" d=\"" + detail::arrow_head(wall, dir, 9) + "\"/>\n";
        v = next;
        pts.push_back(across);
      }
    }
    out += "<g class=\"overlay\" id=\"" + id + "\">\n<polyline class=\"walk\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? " " : "") + fmt(pts[i]);
    out += "\"/>\n" + glyphs + "</g>\n";
  };
  for (std::size_t i = 0; i < spec.walks.size(); ++i) {
    for (int j : spec.walks[i])
      if (j < 0 || j > W.rank()) throw std::invalid_argument("render: walk letter out of range");
    // a plain walk crosses every wall it meets
    std::vector<StepKind> kinds;
    AffineWeylElement v = W.identity();
    for (int j : spec.walks[i]) {
      kinds.push_back(step_options(W, v, j) == StepOption::ForcedPositive ? StepKind::PositiveCrossing : StepKind::ZeroCrossing);
      v = W.mul(v, W.simple_reflection(j));
    }
    draw(spec.walks[i], kinds, "walk" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < spec.paths.size(); ++i) {
    const auto& p = spec.paths[i];
    if (p.kinds.size() != p.type_word.size()) throw std::invalid_argument("render: path kinds do not match its word");
    for (int j : p.type_word)
      if (j < 0 || j > W.rank()) throw std::invalid_argument("render: path does not belong to this group");
    draw(p.type_word, p.kinds, "path" + std::to_string(i + 1));
  }
  out += "</svg>\n";
  return out;
}

/// The arrangement of spec with one folded path drawn over it.
inline std::string render_path(const FoldedPath& path, SceneSpec spec)
{
  spec.paths = {path};
  spec.walks.clear();
  return render_arrangement(spec);
}

}  // namespace affold
