#include "conic/complexes.hpp"

#include <algorithm>
#include <stdexcept>

namespace conic {

long long ComplexProfile::multiplicity(const LatticePoint& q, int degree) const {
  auto it = degrees.find(degree);
  if (it == degrees.end()) return 0;
  auto jt = it->second.find(q);
  return jt == it->second.end() ? 0 : jt->second;
}

ComplexProfile build_profile(const ComplexContext& ctx, const LatticePoint& P) {
  ComplexProfile prof;
  prof.point = P;
  prof.degrees[0][P] = 1;
  for (const PathSpec& path : valid_paths_into(ctx, P)) {
    if (path.length == 0) continue;
    if (!std::binary_search(ctx.points().begin(), ctx.points().end(), path.start))
      throw std::logic_error("valid path starts outside the zonotope");
    prof.degrees[path.length][path.start] += 1;
  }
  return prof;
}

ComplexProfile substitute(const ComplexProfile& K, const LatticePoint& j, const ComplexProfile& Kj) {
  if (j == K.point) throw SelfSubstitution("substitute: cannot splice a profile into its own point");
  if (Kj.point != j) throw std::invalid_argument("substitute: profile/point mismatch");
  ComplexProfile out;
  out.point = K.point;
  out.degrees[0][K.point] = 1;
  for (const auto& [deg, entries] : K.degrees) {
    if (deg == 0) continue;
    for (const auto& [q, mult] : entries) {
      if (q == j) {
        for (const auto& [d, sub_entries] : Kj.degrees) {
          if (d == 0) continue;
          for (const auto& [p, m] : sub_entries) out.degrees[deg + d - 1][p] += mult * m;
        }
      } else {
        out.degrees[deg][q] += mult;
      }
    }
  }
  for (auto it = out.degrees.begin(); it != out.degrees.end();)
    it = it->second.empty() ? out.degrees.erase(it) : std::next(it);
  return out;
}

Analysis::Analysis(const ComplexContext& ctx) : ctx_(ctx) {
  const auto& pts = ctx.points();
  profiles_.reserve(pts.size());
  for (const LatticePoint& p : pts) profiles_.push_back(build_profile(ctx, p));
  appears_in_.resize(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::set<int> targets;
    for (const auto& [deg, entries] : profiles_[i].degrees) {
      if (deg == 0) continue;
      for (const auto& [q, mult] : entries) {
        (void)mult;
        auto it = std::lower_bound(pts.begin(), pts.end(), q);
        targets.insert(static_cast<int>(it - pts.begin()));
      }
    }
    appears_in_[i].assign(targets.begin(), targets.end());
  }
}

const ComplexProfile& Analysis::profile(const LatticePoint& P) const {
  const auto& pts = ctx_.points();
  auto it = std::lower_bound(pts.begin(), pts.end(), P);
  if (it == pts.end() || *it != P) throw PointOutsideZonotope("profile: not a zonotope lattice point");
  return profiles_[static_cast<std::size_t>(it - pts.begin())];
}

LockReport Analysis::check_lockable(const std::set<LatticePoint>& I) const {
  if (I.empty()) throw EmptySet("check_lockable: empty set");
  const auto& pts = ctx_.points();
  std::vector<bool> in_I(pts.size(), false);
  for (const LatticePoint& p : I) {
    auto it = std::lower_bound(pts.begin(), pts.end(), p);
    if (it == pts.end() || *it != p) throw PointOutsideZonotope("check_lockable: set member outside zonotope");
    in_I[static_cast<std::size_t>(it - pts.begin())] = true;
  }

  // Complement points reachable from I, expanding only through complement
  // nodes. These are exactly the profiles that must be spliced away.
  std::vector<bool> reached(pts.size(), false);
  std::vector<int> stack;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (in_I[i])
      for (int t : appears_in_[i])
        if (!in_I[t] && !reached[t]) {
          reached[t] = true;
          stack.push_back(t);
        }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int t : appears_in_[v])
      if (!in_I[t] && !reached[t]) {
        reached[t] = true;
        stack.push_back(t);
      }
  }

  // Cycle detection on the reached complement subgraph (self-loops count).
  LockReport rep;
  std::vector<int> color(pts.size(), 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> parent(pts.size(), -1);
  int cycle_from = -1, cycle_to = -1;
  std::vector<int> dfs;
  for (std::size_t s = 0; s < pts.size() && cycle_from < 0; ++s) {
    if (!reached[s] || color[s] != 0) continue;
    dfs.assign(1, static_cast<int>(s));
    std::vector<std::size_t> edge_pos(pts.size(), 0);
    color[s] = 1;
    while (!dfs.empty() && cycle_from < 0) {
      int v = dfs.back();
      bool advanced = false;
      while (edge_pos[v] < appears_in_[v].size()) {
        int t = appears_in_[v][edge_pos[v]++];
        if (!reached[t]) continue;
        if (color[t] == 1) {
          cycle_from = v;
          cycle_to = t;
          break;
        }
        if (color[t] == 0) {
          color[t] = 1;
          parent[t] = v;
          dfs.push_back(t);
          advanced = true;
          break;
        }
      }
      if (cycle_from >= 0) break;
      if (!advanced) {
        color[v] = 2;
        dfs.pop_back();
      }
    }
  }

  if (cycle_from >= 0) {
    std::vector<int> cyc{cycle_to};
    for (int v = cycle_from; v != cycle_to; v = parent[v]) cyc.push_back(v);
    std::reverse(cyc.begin() + 1, cyc.end());
    for (int v : cyc) rep.cycle_witness.push_back(pts[v]);
    rep.lockable = false;
    return rep;
  }

  // Splice bottom-up: every reached complement profile is resolved before
  // anything that mentions it.
  std::map<LatticePoint, ComplexProfile> spliced;
  std::vector<int> order;
  {
    std::vector<int> state(pts.size(), 0);
    std::vector<int> stk;
    for (std::size_t s = 0; s < pts.size(); ++s) {
      if (!reached[s] || state[s] != 0) continue;
      stk.push_back(static_cast<int>(s));
      while (!stk.empty()) {
        int v = stk.back();
        if (state[v] == 0) {
          state[v] = 1;
          for (int t : appears_in_[v])
            if (reached[t] && state[t] == 0) stk.push_back(t);
        } else {
          stk.pop_back();
          if (state[v] == 1) {
            state[v] = 2;
            order.push_back(v);
          }
        }
      }
    }
  }
  for (int v : order) {
    ComplexProfile prof = profiles_[v];
    for (int t : appears_in_[v])
      if (reached[t] && t != v) prof = substitute(prof, pts[t], spliced.at(pts[t]));
    spliced.emplace(pts[v], std::move(prof));
  }

  rep.lockable = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!in_I[i]) continue;
    ComplexProfile prof = profiles_[i];
    for (int t : appears_in_[i])
      if (reached[t]) prof = substitute(prof, pts[t], spliced.at(pts[t]));
    rep.final_profiles.emplace(pts[i], std::move(prof));
  }
  return rep;
}

LockReport Analysis::check_incredulous(const std::set<LatticePoint>& I) const {
  LockReport rep = check_lockable(I);
  if (!rep.lockable) return rep;
  rep.incredulous = true;
  for (const auto& [p, prof] : rep.final_profiles) {
    (void)p;
    if (prof.length() != ctx_.top_dim()) {
      rep.incredulous = false;
      break;
    }
  }
  return rep;
}

}  // namespace conic
