#include "akh/planar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <deque>

namespace akh {

namespace bmp = boost::multiprecision;

FaceData faces(const AnnularDiagram& d) {
  if (d.crossing_count() == 0) throw DomainError("faces need at least one crossing");
  if (!is_connected(d)) throw DomainError("diagram is disconnected");
  const int na = d.arc_count();
  FaceData fd;
  fd.left_face_forward.assign(na, -1);
  fd.left_face_backward.assign(na, -1);
  auto slot_of = [&](Dart x) { return x.forward ? d.arc(x.arc).head : d.arc(x.arc).tail; };
  auto face_ref = [&](Dart x) -> int& { return x.forward ? fd.left_face_forward[x.arc] : fd.left_face_backward[x.arc]; };
  for (int a = 0; a < na; ++a) {
    for (bool fw : {true, false}) {
      Dart start{a, fw};
      if (face_ref(start) >= 0) continue;
      const int id = static_cast<int>(fd.faces.size());
      std::vector<Dart> cycle;
      Dart cur = start;
      do {
        face_ref(cur) = id;
        cycle.push_back(cur);
        Endpoint e = slot_of(cur);
        int s = (e.slot + 3) % 4;
        int b = d.crossing(e.crossing).arcs[s];
        cur = Dart{b, d.arc(b).tail == Endpoint{e.crossing, s}};
      } while (!(cur == start));
      fd.faces.push_back(std::move(cycle));
    }
  }
  if (static_cast<int>(fd.faces.size()) != d.crossing_count() + 2)
    throw InvariantError("face count violates the Euler formula", std::to_string(fd.faces.size()) + " faces");
  fd.corner.resize(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int k = 0; k < 4; ++k) {
      int s = (k + 1) % 4;
      int b = d.crossing(c).arcs[s];
      bool fw = d.arc(b).head == Endpoint{c, s};
      fd.corner[c][k] = fw ? fd.left_face_forward[b] : fd.left_face_backward[b];
    }
  return fd;
}

Checkerboard checkerboard_and_M(const AnnularDiagram& d) {
  Checkerboard cb;
  cb.faces = faces(d);
  const int nf = static_cast<int>(cb.faces.faces.size());
  std::vector<int> colour(nf, -1);
  std::vector<std::vector<int>> adj(nf);
  for (int a = 0; a < d.arc_count(); ++a) {
    int x = cb.faces.left_face_forward[a], y = cb.faces.left_face_backward[a];
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  const int seed = cb.faces.corner[0][1];
  colour[seed] = 1;
  std::deque<int> queue{seed};
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int g : adj[f]) {
      if (colour[g] < 0) {
        colour[g] = 1 - colour[f];
        queue.push_back(g);
      } else if (colour[g] == colour[f]) {
        throw InvariantError("faces admit no checkerboard colouring", "face " + std::to_string(f));
      }
    }
  }
  cb.white.assign(colour.begin(), colour.end());
  const int m = d.marked();
  cb.axis_face = d.axis_left() ? cb.faces.left_face_forward[m] : cb.faces.left_face_backward[m];
  if (d.ray_total() % 2 == 1)
    cb.M = 0;
  else
    cb.M = cb.white[cb.axis_face] ? 1 : -1;
  return cb;
}

int signature_of(const std::vector<std::vector<long long>>& symmetric) {
  using Q = bmp::cpp_rational;
  const std::size_t n = symmetric.size();
  std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = symmetric[i][j];
  int sig = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] == 0) {
      std::size_t swap_with = n;
      for (std::size_t j = i + 1; j < n; ++j)
        if (a[j][j] != 0) { swap_with = j; break; }
      if (swap_with < n) {
        std::swap(a[i], a[swap_with]);
        for (auto& row : a) std::swap(row[i], row[swap_with]);
      } else {
        std::size_t partner = n;
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) { partner = j; break; }
        if (partner == n) continue;
        // replace e_i by e_i + e_j: diagonal becomes 2 a_ij
        for (std::size_t k = 0; k < n; ++k) a[i][k] += a[partner][k];
        for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][partner];
      }
    }
    const Q p = a[i][i];
    sig += p > 0 ? 1 : -1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[j][i] == 0) continue;
      const Q factor = a[j][i] / p;
      for (std::size_t k = i + 1; k < n; ++k) a[j][k] -= factor * a[i][k];
    }
    for (std::size_t j = i + 1; j < n; ++j) a[j][i] = a[i][j] = 0;
  }
  return sig;
}

long long abs_determinant(const std::vector<std::vector<long long>>& square) {
  using Z = bmp::cpp_int;
  const std::size_t n = square.size();
  if (n == 0) return 1;
  std::vector<std::vector<Z>> a(n, std::vector<Z>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = square[i][j];
  Z prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  Z det = a[n - 1][n - 1];
  if (negate) det = -det;
  return static_cast<long long>(bmp::abs(det));
}

GoeritzData goeritz(const AnnularDiagram& d, bool swap_colors) {
  GoeritzData g;
  if (d.crossing_count() == 0) {
    if (d.arc_count() != 1) throw DomainError("diagram is disconnected");
    g.determinant = 1;
    return g;
  }
  g.coloring = checkerboard_and_M(d);
  if (swap_colors)
    for (auto& w : g.coloring.white) w = !w;
  std::vector<int> white_index(g.coloring.white.size(), -1);
  int nw = 0;
  for (std::size_t f = 0; f < g.coloring.white.size(); ++f)
    if (g.coloring.white[f]) white_index[f] = nw++;
  g.matrix.assign(nw, std::vector<long long>(nw, 0));
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& corner = g.coloring.faces.corner[c];
    const bool zero_joins_white = g.coloring.white[corner[1]];
    const int eta = zero_joins_white ? -1 : 1;
    // The oriented smoothing is the 0-smoothing at positive crossings.
    const bool oriented_is_zero = d.crossing(c).sign > 0;
    const bool oriented_joins_white = oriented_is_zero == zero_joins_white;
    if (!oriented_joins_white) g.mu += eta;
    const int x = white_index[zero_joins_white ? corner[1] : corner[0]];
    const int y = white_index[zero_joins_white ? corner[3] : corner[2]];
    if (x == y) continue;
    g.matrix[x][y] -= eta;
    g.matrix[y][x] -= eta;
    g.matrix[x][x] += eta;
    g.matrix[y][y] += eta;
  }
  std::vector<std::vector<long long>> reduced;
  for (int i = 1; i < nw; ++i) reduced.emplace_back(g.matrix[i].begin() + 1, g.matrix[i].end());
  g.signature = signature_of(reduced) - g.mu;
  g.determinant = abs_determinant(reduced);
  return g;
}

}  // namespace akh
