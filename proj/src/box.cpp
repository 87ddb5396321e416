#include "boxspace/box.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace boxspace {

int BoxSpace::total_points() const {
  int n = 0;
  for (const BoxComponent& c : components) n += c.metric.size();
  return n;
}

int BoxSpace::offset(int comp) const {
  int n = 0;
  for (int c = 0; c < comp; ++c) n += components[c].metric.size();
  return n;
}

std::pair<int, int> BoxSpace::locate(int flat) const {
  int comp = 0;
  while (flat >= components[comp].metric.size()) {
    flat -= components[comp].metric.size();
    ++comp;
  }
  return {comp, flat};
}

double BoxSpace::chain_position(int comp) const {
  double pos = 0.0;
  for (int k = 0; k < comp; ++k) pos += gaps[k];
  return pos;
}

double BoxSpace::distance(int x, int y) const {
  auto [cx, lx] = locate(x);
  auto [cy, ly] = locate(y);
  if (cx == cy) return components[cx].metric.at(lx, ly);
  if (cx > cy) {
    std::swap(cx, cy);
    std::swap(lx, ly);
  }
  double d = components[cx].metric.at(lx, components[cx].basepoint) +
             components[cy].metric.at(components[cy].basepoint, ly);
  for (int k = cx; k < cy; ++k) d += gaps[k];
  return d;
}

std::vector<double> default_gaps(const std::vector<BoxComponent>& components) {
  std::vector<double> gaps;
  for (size_t k = 0; k + 1 < components.size(); ++k)
    gaps.push_back(std::max(components[k].metric.diameter(),
                            components[k + 1].metric.diameter()) +
                   1.0);
  return gaps;
}

BoxSpace assemble(std::vector<BoxComponent> components) {
  std::vector<double> gaps = default_gaps(components);
  return assemble(std::move(components), std::move(gaps));
}

BoxSpace assemble(std::vector<BoxComponent> components, std::vector<double> gaps) {
  if (components.empty()) fail(ErrorCode::InvalidArgument, "box space needs components");
  for (const BoxComponent& c : components) {
    if (c.metric.size() == 0) fail(ErrorCode::InvalidArgument, "empty component");
    if (c.basepoint < 0 || c.basepoint >= c.metric.size())
      fail(ErrorCode::InvalidArgument, "component basepoint out of range");
  }
  if (gaps.size() + 1 != components.size())
    fail(ErrorCode::InvalidArgument, "need one gap per consecutive pair");
  for (size_t k = 0; k + 1 < components.size(); ++k) {
    double bound = std::max(components[k].metric.diameter(),
                            components[k + 1].metric.diameter());
    if (!(gaps[k] > bound))
      fail(ErrorCode::GapTooSmall, "gap " + std::to_string(gaps[k]) +
                                       " at position " + std::to_string(k) +
                                       " must exceed " + std::to_string(bound));
  }
  return BoxSpace{std::move(components), std::move(gaps)};
}

MetricMatrix global_metric(const BoxSpace& b) {
  int n = b.total_points();
  MetricMatrix m(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) m.set(x, y, b.distance(x, y));
  return m;
}

EnvelopePair distortion_envelope(const MetricMatrix& d1, const MetricMatrix& d2) {
  if (d1.size() != d2.size())
    fail(ErrorCode::MismatchedPointSets, "envelope needs a shared point set");
  int n = d1.size();

  std::map<double, std::pair<double, double>> by_t;  // t -> (min d2, max d2)
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double a = d1.at(i, j), b = d2.at(i, j);
      auto it = by_t.find(a);
      if (it == by_t.end())
        by_t.emplace(a, std::pair{b, b});
      else {
        it->second.first = std::min(it->second.first, b);
        it->second.second = std::max(it->second.second, b);
      }
    }

  EnvelopePair env;
  for (const auto& [t, mm] : by_t) {
    env.t.push_back(t);
    env.rho_minus.push_back(mm.first);
    env.rho_plus.push_back(mm.second);
  }
  // rho_plus: prefix max over d1 <= t; rho_minus: suffix min over d1 >= t
  for (size_t i = 1; i < env.t.size(); ++i)
    env.rho_plus[i] = std::max(env.rho_plus[i], env.rho_plus[i - 1]);
  for (size_t i = env.t.size() - 1; i-- > 0;)
    env.rho_minus[i] = std::min(env.rho_minus[i], env.rho_minus[i + 1]);

  for (size_t i = 1; i < env.t.size(); ++i) {
    if (env.rho_minus[i] < env.rho_minus[i - 1]) env.monotone = false;
    if (env.rho_plus[i] < env.rho_plus[i - 1]) env.monotone = false;
    if (env.t[i] > 0.0 && env.rho_minus[i] <= 0.0) env.positive = false;
  }
  return env;
}

}  // namespace boxspace
