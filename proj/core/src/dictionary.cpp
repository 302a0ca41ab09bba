#include "pdrb/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pdrb/metric.hpp"
#include "pdrb/parallel.hpp"

namespace pdrb {

void validate_dictionary(const Dictionary& dictionary) {
  if (dictionary.atoms.size() < 2) throw std::invalid_argument("a dictionary needs at least two atoms");
  for (const auto& a : dictionary.atoms)
    if (a.empty()) throw std::invalid_argument("dictionary atoms must not be empty");
}

void validate_coefficients(std::span<const double> lam, std::size_t m) {
  if (lam.size() != m) throw std::invalid_argument("coefficient vector length differs from the atom count");
  double sum = 0.0;
  for (double w : lam) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("coefficients must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("coefficients must sum to 1");
}

namespace {

struct Sym2 {
  double xx = 0.0, xy = 0.0, yy = 0.0;
};

Point2 apply(const Sym2& m, Point2 v) { return {m.xx * v.x + m.xy * v.y, m.xy * v.x + m.yy * v.y}; }

Point2 solve(const Sym2& m, Point2 v) {
  const double det = m.xx * m.yy - m.xy * m.xy;
  return {(m.yy * v.x - m.xy * v.y) / det, (m.xx * v.y - m.xy * v.x) / det};
}

double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }

double power(double r, double q) { return q == 2.0 ? r * r : std::pow(r, q); }

// Hessian of ||x - t||^q with respect to x at d = x - t != 0.
Sym2 hessian_term(Point2 d, double q) {
  const double r = norm(d);
  const double s = q * std::pow(r, q - 2.0);
  const double nx = d.x / r, ny = d.y / r;
  return {s * (1.0 + (q - 2.0) * nx * nx), s * (q - 2.0) * nx * ny, s * (1.0 + (q - 2.0) * ny * ny)};
}

Point2 power_gradient(Point2 d, double q) {
  const double r = norm(d);
  if (r == 0.0) return {};
  return (q * std::pow(r, q - 2.0)) * d;
}

std::vector<double> normalized(std::span<const double> lam, std::size_t m) {
  validate_coefficients(lam, m);
  double sum = 0.0;
  for (double w : lam) sum += w;
  std::vector<double> out(lam.begin(), lam.end());
  for (double& w : out) w /= sum;
  return out;
}

BarycenterConfig reconstruction_config(const BarycenterConfig& config, const std::vector<double>& lam, double q) {
  BarycenterConfig c = config;
  c.q = q;
  c.weights = lam;
  c.init = BarycenterInit::at(static_cast<std::size_t>(std::max_element(lam.begin(), lam.end()) - lam.begin()));
  return c;
}

std::vector<double> softmax(std::span<const double> theta) {
  const double top = *std::max_element(theta.begin(), theta.end());
  std::vector<double> out(theta.size());
  double sum = 0.0;
  for (std::size_t j = 0; j < theta.size(); ++j) sum += out[j] = std::exp(theta[j] - top);
  for (double& w : out) w /= sum;
  return out;
}

// Ground barycenter refined by guarded Newton steps, so that finite
// differences of the surrogate are not swamped by solver tolerance.
Point2 solve_ground(const std::vector<Point2>& targets, const std::vector<double>& weights, double q) {
  if (std::all_of(targets.begin(), targets.end(), [&](Point2 t) { return t == targets.front(); }))
    return targets.front();
  const GroundProblem problem(targets, weights, q);
  if (q == 2.0) return weighted_mean(problem);
  Point2 x = ground_barycenter(problem, {1e-13, 100'000}).point;
  Point2 gx = v_q_gradient(problem, x);
  for (int it = 0; it < 50; ++it) {
    Sym2 h;
    bool singular = false;
    for (std::size_t j = 0; j < targets.size(); ++j) {
      const Point2 d = x - targets[j];
      if (norm(d) == 0.0) {
        singular = true;
        break;
      }
      const Sym2 m = hessian_term(d, q);
      h = {h.xx + weights[j] * m.xx, h.xy + weights[j] * m.xy, h.yy + weights[j] * m.yy};
    }
    if (singular) break;
    const Point2 next = x - solve(h, gx);
    const Point2 gnext = v_q_gradient(problem, next);
    // Values flatten out near the minimum long before the point settles, so
    // progress is judged on the gradient instead.
    if (!(norm(gnext) < norm(gx)) || next == x) break;
    x = next;
    gx = gnext;
  }
  return x;
}

using AtomCoords = std::vector<std::vector<Point2>>;

struct FrozenTarget {
  bool variable = false;  // an atom point (atom index = position in the slot)
  std::size_t source = 0;
  Point2 fixed;
};

struct FrozenSlot {
  std::vector<FrozenTarget> targets;  // one per atom
  Point2 outer;                       // matched point of the input
};

struct FrozenInput {
  std::vector<FrozenSlot> slots;
  double constant = 0.0;  // cost of input points matched to the diagonal
  std::vector<double> lam;
};

Point2 diagonal_target(Point2 matched, DiagramPoint self, DiagonalCost mode) {
  return mode == DiagonalCost::Perpendicular ? to_point(project_to_diagonal(self)) : matched;
}

FrozenInput capture_input(const Dictionary& dictionary, std::vector<double> lam, const PersistenceDiagram& x,
                          double q, const BarycenterConfig& config) {
  const auto bary = compute_barycenter(dictionary.atoms, reconstruction_config(config, lam, q)).diagram;
  const auto pts = bary.points();
  const auto mode = config.diagonal_cost;
  const auto matching = match_to_ensemble(pts, dictionary.atoms, lam, q, mode);
  const auto outer = optimal_plan(pts, x.points(), q, mode);

  FrozenInput in;
  in.lam = std::move(lam);
  for (std::size_t k = 0; k < outer.pair.size(); ++k) {
    const auto& right = outer.pair.right[outer.assignment.permutation[k]];
    if (k >= pts.size()) {
      in.constant += transport_cost(outer.pair.left[k], right, q, mode);
      continue;
    }
    FrozenSlot slot;
    for (const auto& t : matching.targets[k]) {
      FrozenTarget ft;
      ft.variable = !t.diagonal;
      ft.source = t.source;
      ft.fixed = t.diagonal ? diagonal_target(t.point, pts[k], mode) : t.point;
      slot.targets.push_back(ft);
    }
    slot.outer = right.on_diagonal() ? diagonal_target(to_point(right.point), pts[k], mode) : to_point(right.point);
    in.slots.push_back(std::move(slot));
  }
  return in;
}

struct SlotState {
  Point2 b;
  std::vector<std::size_t> atoms;  // atom index of each positive-weight target
  std::vector<Point2> targets;
  std::vector<double> weights;
};

SlotState solve_slot(const FrozenSlot& slot, const AtomCoords& coords, std::span<const double> lam, double q) {
  SlotState s;
  double total = 0.0;
  for (std::size_t j = 0; j < slot.targets.size(); ++j) {
    if (lam[j] <= 0.0) continue;
    const auto& t = slot.targets[j];
    s.atoms.push_back(j);
    s.targets.push_back(t.variable ? coords[j][t.source] : t.fixed);
    s.weights.push_back(lam[j]);
    total += lam[j];
  }
  for (double& w : s.weights) w /= total;
  s.b = solve_ground(s.targets, s.weights, q);
  return s;
}

double input_energy(const FrozenInput& in, const AtomCoords& coords, std::span<const double> lam, double q) {
  double e = in.constant;
  for (const auto& slot : in.slots) e += power(norm(solve_slot(slot, coords, lam, q).b - slot.outer), q);
  return e;
}

struct FrozenModel {
  std::vector<FrozenInput> inputs;
  AtomCoords coords;
  double q = 2.0;
};

FrozenModel capture(const Dictionary& dictionary, std::span<const CoefficientVector> coefficients,
                    std::span<const PersistenceDiagram> ensemble, double q, const BarycenterConfig& config) {
  validate_dictionary(dictionary);
  if (!(q > 1.0) || !std::isfinite(q)) throw std::invalid_argument("dictionary gradients need a finite q > 1");
  if (coefficients.size() != ensemble.size())
    throw std::invalid_argument("one coefficient vector per input diagram is required");
  const std::size_t m = dictionary.atoms.size();
  std::vector<std::vector<double>> lams;
  for (const auto& c : coefficients) lams.push_back(normalized(c, m));

  FrozenModel model;
  model.q = q;
  model.inputs.resize(ensemble.size());
  parallel_for(ensemble.size(), [&](std::size_t l) {
    model.inputs[l] = capture_input(dictionary, lams[l], ensemble[l], q, config);
  });
  for (const auto& a : dictionary.atoms) {
    std::vector<Point2> pts;
    for (const auto& p : a.points()) pts.push_back(to_point(p));
    model.coords.push_back(std::move(pts));
  }
  return model;
}

EncodingGradient zero_gradient(const FrozenModel& model) {
  EncodingGradient g;
  for (const auto& a : model.coords) g.atoms.emplace_back(a.size());
  for (const auto& in : model.inputs) g.logits.emplace_back(in.lam.size(), 0.0);
  return g;
}

EncodingGradient analytic_gradient(const FrozenModel& model) {
  const double q = model.q;
  const std::size_t n = model.inputs.size();
  std::vector<EncodingGradient> parts(n);
  std::vector<double> energies(n);

  parallel_for(n, [&](std::size_t l) {
    const auto& in = model.inputs[l];
    EncodingGradient g = zero_gradient(model);
    std::vector<double> dlam(in.lam.size(), 0.0);
    double e = in.constant;

    for (const auto& slot : in.slots) {
      const SlotState s = solve_slot(slot, model.coords, in.lam, q);
      e += power(norm(s.b - slot.outer), q);
      const Point2 u = power_gradient(s.b - slot.outer, q);
      if (u == Point2{}) continue;

      auto add_to_atom = [&](std::size_t i, Point2 value) {
        const auto& t = slot.targets[s.atoms[i]];
        if (!t.variable) return;
        auto& cell = g.atoms[s.atoms[i]][t.source];
        cell = cell + value;
      };

      std::vector<std::size_t> coincident;
      for (std::size_t i = 0; i < s.targets.size(); ++i)
        if (s.targets[i] == s.b) coincident.push_back(i);

      if (!coincident.empty()) {
        // b sits on the targets: its first-order motion follows the coincident
        // targets with weights w^(1/(q-1)), and the weights have no effect.
        double total = 0.0;
        for (auto i : coincident) total += std::pow(s.weights[i], 1.0 / (q - 1.0));
        for (auto i : coincident) add_to_atom(i, (std::pow(s.weights[i], 1.0 / (q - 1.0)) / total) * u);
        continue;
      }

      Sym2 h;
      std::vector<Sym2> terms;
      for (std::size_t i = 0; i < s.targets.size(); ++i) {
        const Sym2 mi = hessian_term(s.b - s.targets[i], q);
        terms.push_back(mi);
        h = {h.xx + s.weights[i] * mi.xx, h.xy + s.weights[i] * mi.xy, h.yy + s.weights[i] * mi.yy};
      }
      const Point2 v = solve(h, u);
      for (std::size_t i = 0; i < s.targets.size(); ++i) {
        add_to_atom(i, s.weights[i] * apply(terms[i], v));
        dlam[s.atoms[i]] -= dot(power_gradient(s.b - s.targets[i], q), v);
      }
    }

    double mean = 0.0;
    for (std::size_t j = 0; j < dlam.size(); ++j) mean += in.lam[j] * dlam[j];
    for (std::size_t j = 0; j < dlam.size(); ++j) g.logits[l][j] = in.lam[j] * (dlam[j] - mean);
    energies[l] = e;
    parts[l] = std::move(g);
  });

  EncodingGradient total = zero_gradient(model);
  for (std::size_t l = 0; l < n; ++l) {
    total.energy += energies[l];
    for (std::size_t j = 0; j < total.atoms.size(); ++j)
      for (std::size_t p = 0; p < total.atoms[j].size(); ++p)
        total.atoms[j][p] = total.atoms[j][p] + parts[l].atoms[j][p];
    total.logits[l] = parts[l].logits[l];
  }
  return total;
}

}  // namespace

PersistenceDiagram reconstruct(const Dictionary& dictionary, std::span<const double> lam, double q,
                               const BarycenterConfig& config) {
  validate_dictionary(dictionary);
  const auto weights = normalized(lam, dictionary.atoms.size());
  return compute_barycenter(dictionary.atoms, reconstruction_config(config, weights, q)).diagram;
}

double encoding_energy(const Dictionary& dictionary, std::span<const CoefficientVector> coefficients,
                       std::span<const PersistenceDiagram> ensemble, double q, const BarycenterConfig& config) {
  validate_dictionary(dictionary);
  if (coefficients.size() != ensemble.size())
    throw std::invalid_argument("one coefficient vector per input diagram is required");
  for (const auto& c : coefficients) validate_coefficients(c, dictionary.atoms.size());
  std::vector<double> costs(ensemble.size());
  parallel_for(ensemble.size(), [&](std::size_t l) {
    costs[l] = wasserstein_cost(reconstruct(dictionary, coefficients[l], q, config), ensemble[l], q,
                                config.diagonal_cost);
  });
  double total = 0.0;
  for (double c : costs) total += c;
  return total;
}

EncodingGradient frozen_plan_gradient(const Dictionary& dictionary, std::span<const CoefficientVector> coefficients,
                                      std::span<const PersistenceDiagram> ensemble, double q,
                                      const BarycenterConfig& config) {
  return analytic_gradient(capture(dictionary, coefficients, ensemble, q, config));
}

EncodingGradient finite_difference_gradient(const Dictionary& dictionary,
                                            std::span<const CoefficientVector> coefficients,
                                            std::span<const PersistenceDiagram> ensemble, double q, double h,
                                            const BarycenterConfig& config) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const FrozenModel model = capture(dictionary, coefficients, ensemble, q, config);
  EncodingGradient g = zero_gradient(model);
  const std::size_t n = model.inputs.size();

  std::vector<double> energies(n);
  parallel_for(n, [&](std::size_t l) {
    energies[l] = input_energy(model.inputs[l], model.coords, model.inputs[l].lam, q);
  });
  for (double e : energies) g.energy += e;

  auto total_energy = [&](const AtomCoords& coords) {
    std::vector<double> parts(n);
    parallel_for(n, [&](std::size_t l) { parts[l] = input_energy(model.inputs[l], coords, model.inputs[l].lam, q); });
    double e = 0.0;
    for (double p : parts) e += p;
    return e;
  };

  AtomCoords coords = model.coords;
  for (std::size_t j = 0; j < coords.size(); ++j)
    for (std::size_t p = 0; p < coords[j].size(); ++p) {
      for (double Point2::*axis : {&Point2::x, &Point2::y}) {
        const double saved = coords[j][p].*axis;
        coords[j][p].*axis = saved + h;
        const double plus = total_energy(coords);
        coords[j][p].*axis = saved - h;
        const double minus = total_energy(coords);
        coords[j][p].*axis = saved;
        g.atoms[j][p].*axis = (plus - minus) / (2.0 * h);
      }
    }

  parallel_for(n, [&](std::size_t l) {
    const auto& in = model.inputs[l];
    std::vector<double> theta(in.lam.size());
    for (std::size_t j = 0; j < theta.size(); ++j)
      theta[j] = in.lam[j] > 0.0 ? std::log(in.lam[j]) : -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < theta.size(); ++j) {
      if (in.lam[j] <= 0.0) continue;
      const double saved = theta[j];
      theta[j] = saved + h;
      const double plus = input_energy(in, model.coords, softmax(theta), q);
      theta[j] = saved - h;
      const double minus = input_energy(in, model.coords, softmax(theta), q);
      theta[j] = saved;
      g.logits[l][j] = (plus - minus) / (2.0 * h);
    }
  });
  return g;
}

double fd_gradient_check(const Dictionary& dictionary, std::span<const CoefficientVector> coefficients,
                         std::span<const PersistenceDiagram> ensemble, double q, double h,
                         const BarycenterConfig& config) {
  const auto an = frozen_plan_gradient(dictionary, coefficients, ensemble, q, config);
  const auto fd = finite_difference_gradient(dictionary, coefficients, ensemble, q, h, config);
  double scale = 0.0, diff = 0.0;
  auto visit = [&](double a, double f) {
    scale = std::max(scale, std::abs(a));
    diff = std::max(diff, std::abs(a - f));
  };
  for (std::size_t j = 0; j < an.atoms.size(); ++j)
    for (std::size_t p = 0; p < an.atoms[j].size(); ++p) {
      visit(an.atoms[j][p].x, fd.atoms[j][p].x);
      visit(an.atoms[j][p].y, fd.atoms[j][p].y);
    }
  for (std::size_t l = 0; l < an.logits.size(); ++l)
    for (std::size_t j = 0; j < an.logits[l].size(); ++j) visit(an.logits[l][j], fd.logits[l][j]);
  return scale > 0.0 ? diff / scale : diff;
}

namespace {

Dictionary to_dictionary(const AtomCoords& coords) {
  Dictionary d;
  for (const auto& a : coords) {
    std::vector<DiagramPoint> pts;
    for (auto p : a) pts.push_back(to_diagram_point(p));
    d.atoms.emplace_back(std::move(pts));
  }
  return d;
}

std::vector<CoefficientVector> to_coefficients(const std::vector<std::vector<double>>& logits) {
  std::vector<CoefficientVector> out;
  for (const auto& t : logits) out.push_back(softmax(t));
  return out;
}

}  // namespace

EncodingResult encode(std::span<const PersistenceDiagram> ensemble, std::size_t m, double q,
                      const EncodeConfig& config, std::uint64_t seed) {
  if (ensemble.empty()) throw std::invalid_argument("cannot encode an empty ensemble");
  if (m < 2 || m > ensemble.size()) throw std::invalid_argument("the atom count must satisfy 2 <= m <= N");
  if (!(q > 1.0) || !std::isfinite(q)) throw std::invalid_argument("encoding needs a finite q > 1");
  const std::size_t n = ensemble.size();

  const auto clusters = kmeans(ensemble, m, q, config.kmeans, seed);
  AtomCoords coords;
  for (const auto& c : clusters.centroids) {
    if (c.empty()) throw std::domain_error("k-means produced an empty atom");
    std::vector<Point2> pts;
    for (const auto& p : c.points()) pts.push_back(to_point(p));
    coords.push_back(std::move(pts));
  }

  std::vector<std::vector<double>> logits(n, std::vector<double>(m, 0.0));
  {
    std::vector<double> d(n * m);
    parallel_for(n * m, [&](std::size_t idx) {
      d[idx] = wasserstein_distance(ensemble[idx / m], clusters.centroids[idx % m], q, config.barycenter.diagonal_cost);
    });
    double mean = 0.0;
    for (double v : d) mean += v;
    mean /= static_cast<double>(d.size());
    if (mean > 0.0)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < m; ++j) logits[l][j] = -d[l * m + j] / (config.temperature * mean);
  }

  const BarycenterConfig& bary = config.barycenter;
  auto energy_of = [&](const AtomCoords& c, const std::vector<std::vector<double>>& t) {
    return encoding_energy(to_dictionary(c), to_coefficients(t), ensemble, q, bary);
  };

  EncodingResult result;
  double energy = energy_of(coords, logits);
  result.energy_trace.push_back(energy);

  std::size_t dim = n * m;
  for (const auto& a : coords) dim += 2 * a.size();
  std::vector<double> first(dim, 0.0), second(dim, 0.0);
  std::size_t adam_steps = 0;
  double rate_scale = 1.0;
  std::vector<double> grad;

  for (std::size_t epoch = 1; epoch <= config.max_epochs && energy > 0.0; ++epoch) {
    result.epochs = epoch;
    if (grad.empty()) {
      const auto g = frozen_plan_gradient(to_dictionary(coords), to_coefficients(logits), ensemble, q, bary);
      for (const auto& a : g.atoms)
        for (auto p : a) {
          grad.push_back(p.x);
          grad.push_back(p.y);
        }
      for (const auto& row : g.logits) grad.insert(grad.end(), row.begin(), row.end());
      if (std::all_of(grad.begin(), grad.end(), [](double v) { return v == 0.0; })) {
        result.energy_trace.push_back(energy);
        result.converged = true;
        break;
      }
    }

    const auto step = static_cast<double>(adam_steps + 1);
    std::vector<double> m1(dim), m2(dim), delta(dim);
    const std::size_t atom_dim = dim - n * m;
    for (std::size_t i = 0; i < dim; ++i) {
      m1[i] = config.beta1 * first[i] + (1.0 - config.beta1) * grad[i];
      m2[i] = config.beta2 * second[i] + (1.0 - config.beta2) * grad[i] * grad[i];
      const double mhat = m1[i] / (1.0 - std::pow(config.beta1, step));
      const double vhat = m2[i] / (1.0 - std::pow(config.beta2, step));
      const double rate = i < atom_dim ? config.atom_rate : config.logit_rate;
      delta[i] = rate * rate_scale * mhat / (std::sqrt(vhat) + config.adam_epsilon);
    }

    AtomCoords next_coords = coords;
    auto next_logits = logits;
    std::size_t i = 0;
    for (auto& a : next_coords)
      for (auto& p : a) {
        p.x -= delta[i++];
        p.y -= delta[i++];
        if (p.y < p.x) p.x = p.y = 0.5 * (p.x + p.y);
      }
    for (auto& row : next_logits)
      for (auto& t : row) t -= delta[i++];

    const double candidate = energy_of(next_coords, next_logits);
    if (candidate <= energy) {
      const double change = (energy - candidate) / energy;
      coords = std::move(next_coords);
      logits = std::move(next_logits);
      first = std::move(m1);
      second = std::move(m2);
      ++adam_steps;
      energy = candidate;
      rate_scale *= config.grow;
      grad.clear();
      result.energy_trace.push_back(energy);
      if (change < config.relative_tolerance) {
        result.converged = true;
        break;
      }
    } else {
      ++result.rejected_steps;
      rate_scale *= config.shrink;
      result.energy_trace.push_back(energy);
      if (rate_scale < config.min_rate_scale) break;
    }
  }

  result.dictionary = to_dictionary(coords);
  result.coefficients = to_coefficients(logits);
  return result;
}

PlanarLayout planar_layout_from_distances(double d12, double d13, double d23,
                                          std::span<const CoefficientVector> coefficients) {
  for (double d : {d12, d13, d23})
    if (!(d >= 0.0) || !std::isfinite(d)) throw std::invalid_argument("layout distances must be finite and >= 0");
  if (d12 == 0.0) throw std::domain_error("the first two atoms coincide; the layout is undefined");

  PlanarLayout out;
  const double x3 = (d12 * d12 + d13 * d13 - d23 * d23) / (2.0 * d12);
  double radicand = d13 * d13 - x3 * x3;
  if (radicand < 0.0) {
    radicand = 0.0;
    out.clamped = true;
  }
  out.vertices = {Point2{0.0, 0.0}, Point2{d12, 0.0}, Point2{x3, std::sqrt(radicand)}};
  for (const auto& lam : coefficients) {
    validate_coefficients(lam, 3);
    Point2 p{};
    for (std::size_t j = 0; j < 3; ++j) p = p + lam[j] * out.vertices[j];
    out.points.push_back(p);
  }
  return out;
}

PlanarLayout planar_layout(const Dictionary& dictionary, std::span<const CoefficientVector> coefficients, double q) {
  if (dictionary.atoms.size() != 3) throw std::invalid_argument("the planar layout needs exactly three atoms");
  const auto& a = dictionary.atoms;
  return planar_layout_from_distances(wasserstein_distance(a[0], a[1], q), wasserstein_distance(a[0], a[2], q),
                                      wasserstein_distance(a[1], a[2], q), coefficients);
}

double separation_score(std::span<const Point2> points, std::span<const std::size_t> labels) {
  if (points.size() != labels.size()) throw std::invalid_argument("one label per layout point is required");
  double inter = std::numeric_limits<double>::infinity(), intra = 0.0;
  bool has_inter = false;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double d = norm(points[i] - points[j]);
      if (labels[i] == labels[j]) {
        intra = std::max(intra, d);
      } else {
        inter = std::min(inter, d);
        has_inter = true;
      }
    }
  if (!has_inter) throw std::invalid_argument("separation needs at least two classes");
  return intra > 0.0 ? inter / intra : std::numeric_limits<double>::infinity();
}

}  // namespace pdrb
