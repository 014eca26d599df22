#include "maxlab/function_family.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace maxlab {

const char* TestFunction::kind_name(Kind k) {
  switch (k) {
    case Kind::gaussian: return "gaussian";
    case Kind::indicator: return "indicator";
    case Kind::bump_sum: return "bump_sum";
    case Kind::plateau: return "plateau";
  }
  return "?";
}

TestFunction::Kind TestFunction::kind_from_name(const std::string& name) {
  if (name == "gaussian") return Kind::gaussian;
  if (name == "indicator") return Kind::indicator;
  if (name == "bump_sum") return Kind::bump_sum;
  if (name == "plateau") return Kind::plateau;
  throw std::invalid_argument("TestFunction: unknown kind " + name);
}

GridFunction materialize(const TestFunction& tf, const WeightedGrid& grid) {
  const int d = grid.dimension();
  GridFunction out(grid.size(), 0.0);
  switch (tf.kind) {
    case TestFunction::Kind::gaussian: {
      // params: d centers then one sigma
      if (tf.params.size() != static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("gaussian: bad params");
      const double sigma = tf.params.back();
      for (std::size_t j = 0; j < out.size(); ++j) {
        double q = 0.0;
        for (int a = 0; a < d; ++a) {
          const double dx = grid.node_coord(j, a) - tf.params[static_cast<std::size_t>(a)];
          q += dx * dx;
        }
        out[j] = std::exp(-q / (2.0 * sigma * sigma));
      }
      break;
    }
    case TestFunction::Kind::indicator: {
      // params: d lows then d highs
      if (tf.params.size() != 2 * static_cast<std::size_t>(d))
        throw std::invalid_argument("indicator: bad params");
      for (std::size_t j = 0; j < out.size(); ++j) {
        bool in = true;
        for (int a = 0; a < d; ++a) {
          const double x = grid.node_coord(j, a);
          if (x < tf.params[static_cast<std::size_t>(a)] ||
              x > tf.params[static_cast<std::size_t>(d + a)])
            in = false;
        }
        out[j] = in ? 1.0 : 0.0;
      }
      break;
    }
    case TestFunction::Kind::bump_sum: {
      // params: triples (center, sigma, amplitude); isotropic bumps centered
      // on the diagonal point (c, ..., c)
      if (tf.params.empty() || tf.params.size() % 3 != 0)
        throw std::invalid_argument("bump_sum: bad params");
      for (std::size_t j = 0; j < out.size(); ++j) {
        double v = 0.0;
        for (std::size_t b = 0; b < tf.params.size(); b += 3) {
          const double c = tf.params[b], s = tf.params[b + 1], amp = tf.params[b + 2];
          double q = 0.0;
          for (int a = 0; a < d; ++a) {
            const double dx = grid.node_coord(j, a) - c;
            q += dx * dx;
          }
          v += amp * std::exp(-q / (2.0 * s * s));
        }
        out[j] = std::abs(v);
      }
      break;
    }
    case TestFunction::Kind::plateau: {
      // params: halfwidth, edge; 1 inside, cosine rolloff over the edge band
      if (tf.params.size() != 2) throw std::invalid_argument("plateau: bad params");
      const double hw = tf.params[0], edge = tf.params[1];
      for (std::size_t j = 0; j < out.size(); ++j) {
        double v = 1.0;
        for (int a = 0; a < d; ++a) {
          const double ax = std::abs(grid.node_coord(j, a));
          if (ax <= hw) continue;
          if (ax >= hw + edge) {
            v = 0.0;
            break;
          }
          v *= 0.5 * (1.0 + std::cos(M_PI * (ax - hw) / edge));
        }
        out[j] = v;
      }
      break;
    }
  }
  return out;
}

TestFunction random_test_function(Rng& rng, const WeightedGrid& grid, double support) {
  const int d = grid.dimension();
  TestFunction tf;
  const int pick = rng.uniform_int(0, 2);
  if (pick == 0) {
    tf.kind = TestFunction::Kind::gaussian;
    for (int a = 0; a < d; ++a) tf.params.push_back(rng.uniform(-support / 2, support / 2));
    tf.params.push_back(rng.uniform(0.2, 0.25 * support));
  } else if (pick == 1) {
    tf.kind = TestFunction::Kind::indicator;
    std::vector<double> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
      const double c = rng.uniform(-support / 2, support / 2);
      const double w = rng.uniform(0.1, 0.5 * support);
      lo[static_cast<std::size_t>(a)] = c - w;
      hi[static_cast<std::size_t>(a)] = c + w;
    }
    tf.params.insert(tf.params.end(), lo.begin(), lo.end());
    tf.params.insert(tf.params.end(), hi.begin(), hi.end());
  } else {
    tf.kind = TestFunction::Kind::bump_sum;
    for (int b = 0; b < 3; ++b) {
      tf.params.push_back(rng.uniform(-support / 2, support / 2));
      tf.params.push_back(rng.uniform(0.15, 0.2 * support));
      tf.params.push_back(rng.uniform(0.2, 2.0));
    }
  }
  return tf;
}

std::vector<double> random_finite_function(Rng& rng, std::size_t n) {
  std::vector<double> f(n, 0.0);
  const int shape = rng.uniform_int(0, 2);
  if (shape == 0) {
    for (double& v : f) v = rng.uniform();
  } else if (shape == 1) {
    for (double& v : f) {
      const double u = rng.uniform();
      v = u * u * u;  // spiky
    }
  } else {
    f[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n) - 1))] =
        rng.uniform(0.5, 2.0);
  }
  return f;
}

}  // namespace maxlab
