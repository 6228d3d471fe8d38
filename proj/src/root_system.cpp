#include "symdex/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "symdex/exact_linalg.hpp"

namespace symdex::roots {

namespace {

using IVec = std::vector<int>;

long long dot(const IVec& a, const IVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

IVec unit(int dim, int i, int v = 1) {
  IVec e(dim, 0);
  e[i] = v;
  return e;
}

struct Model {
  std::vector<IVec> simples;  // ambient coordinates of a_1..a_r
  std::vector<IVec> roots;    // all roots, ambient coordinates
};

// Classical families in orthonormal coordinates; F4/E8 are scaled by 2 so
// that every coordinate is an integer. E6/E7 are the E8 roots supported on
// the first six/seven simple roots.
Model classical_model(Kind k, int r) {
  Model m;
  switch (k) {
    case Kind::A: {
      int n = r + 1;
      for (int i = 0; i < r; ++i) {
        IVec v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        m.simples.push_back(v);
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) {
            IVec v(n, 0);
            v[i] = 1;
            v[j] = -1;
            m.roots.push_back(v);
          }
      break;
    }
    case Kind::B:
    case Kind::C:
    case Kind::D:
    case Kind::BC: {
      for (int i = 0; i + 1 < r; ++i) {
        IVec v(r, 0);
        v[i] = 1;
        v[i + 1] = -1;
        m.simples.push_back(v);
      }
      if (k == Kind::B || k == Kind::BC) {
        m.simples.push_back(unit(r, r - 1));
      } else if (k == Kind::C) {
        m.simples.push_back(unit(r, r - 1, 2));
      } else {  // D
        IVec v(r, 0);
        v[r - 2] = 1;
        v[r - 1] = 1;
        m.simples.push_back(v);
      }
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          if (i == j) continue;
          IVec v(r, 0);
          v[i] = 1;
          v[j] = -1;
          m.roots.push_back(v);
          if (i < j) {
            IVec w(r, 0);
            w[i] = 1;
            w[j] = 1;
            m.roots.push_back(w);
            m.roots.push_back(IVec{[&] {
              IVec u(r, 0);
              u[i] = -1;
              u[j] = -1;
              return u;
            }()});
          }
        }
      if (k == Kind::B || k == Kind::BC)
        for (int i = 0; i < r; ++i) {
          m.roots.push_back(unit(r, i));
          m.roots.push_back(unit(r, i, -1));
        }
      if (k == Kind::C || k == Kind::BC)
        for (int i = 0; i < r; ++i) {
          m.roots.push_back(unit(r, i, 2));
          m.roots.push_back(unit(r, i, -2));
        }
      break;
    }
    default:
      throw std::logic_error("classical_model: not a classical kind");
  }
  return m;
}

Model g2_model() {
  Model m;
  m.simples = {{1, -1, 0}, {-2, 1, 1}};
  auto add = [&](IVec v) {
    m.roots.push_back(v);
    for (int& x : v) x = -x;
    m.roots.push_back(v);
  };
  add({1, -1, 0});
  add({0, 1, -1});
  add({1, 0, -1});
  add({-2, 1, 1});
  add({-1, 2, -1});
  add({-1, -1, 2});
  return m;
}

Model f4_model() {  // coordinates doubled
  Model m;
  m.simples = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
  for (int i = 0; i < 4; ++i) {
    m.roots.push_back(unit(4, i, 2));
    m.roots.push_back(unit(4, i, -2));
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          IVec v(4, 0);
          v[i] = 2 * si;
          v[j] = 2 * sj;
          m.roots.push_back(v);
        }
  for (int mask = 0; mask < 16; ++mask) {
    IVec v(4);
    for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
    m.roots.push_back(v);
  }
  return m;
}

Model e8_model() {  // coordinates doubled
  Model m;
  m.simples = {{1, -1, -1, -1, -1, -1, -1, 1},
               {2, 2, 0, 0, 0, 0, 0, 0},
               {-2, 2, 0, 0, 0, 0, 0, 0},
               {0, -2, 2, 0, 0, 0, 0, 0},
               {0, 0, -2, 2, 0, 0, 0, 0},
               {0, 0, 0, -2, 2, 0, 0, 0},
               {0, 0, 0, 0, -2, 2, 0, 0},
               {0, 0, 0, 0, 0, -2, 2, 0}};
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          IVec v(8, 0);
          v[i] = 2 * si;
          v[j] = 2 * sj;
          m.roots.push_back(v);
        }
  for (int mask = 0; mask < 256; ++mask) {
    int minus = __builtin_popcount(mask);
    if (minus % 2 != 0) continue;
    IVec v(8);
    for (int i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
    m.roots.push_back(v);
  }
  return m;
}

// Highest root coefficients, by type.
Root table_highest(RootSystemType t) {
  int r = t.rank;
  std::vector<int> c(r, 0);
  switch (t.kind) {
    case Kind::A:
      c.assign(r, 1);
      break;
    case Kind::B:
      c.assign(r, 2);
      c[0] = 1;
      break;
    case Kind::C:
      c.assign(r, 2);
      c[r - 1] = 1;
      break;
    case Kind::D:
      c.assign(r, 2);
      c[0] = 1;
      c[r - 2] = 1;
      c[r - 1] = 1;
      break;
    case Kind::BC:
      c.assign(r, 2);
      break;
    case Kind::E6:
      c = {1, 2, 2, 3, 2, 1};
      break;
    case Kind::E7:
      c = {2, 2, 3, 4, 3, 2, 1};
      break;
    case Kind::E8:
      c = {2, 3, 4, 6, 5, 4, 3, 2};
      break;
    case Kind::F4:
      c = {2, 3, 4, 2};
      break;
    case Kind::G2:
      c = {3, 2};
      break;
  }
  return Root{c};
}

}  // namespace

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::C: return "C";
    case Kind::D: return "D";
    case Kind::BC: return "BC";
    case Kind::E6: return "E6";
    case Kind::E7: return "E7";
    case Kind::E8: return "E8";
    case Kind::F4: return "F4";
    case Kind::G2: return "G2";
  }
  return "?";
}

bool RootSystemType::valid(Kind k, int rank) {
  switch (k) {
    case Kind::A: return rank >= 1;
    case Kind::B: return rank >= 2;
    case Kind::C: return rank >= 3;
    case Kind::D: return rank >= 4;
    case Kind::BC: return rank >= 1;
    case Kind::E6: return rank == 6;
    case Kind::E7: return rank == 7;
    case Kind::E8: return rank == 8;
    case Kind::F4: return rank == 4;
    case Kind::G2: return rank == 2;
  }
  return false;
}

RootSystemType RootSystemType::make(Kind k, int rank) {
  if (!valid(k, rank))
    throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for kind " +
                                kind_name(k));
  return RootSystemType{k, rank};
}

std::string RootSystemType::str() const { return kind_name(kind) + std::to_string(rank); }

std::string length_class_name(LengthClass c) {
  switch (c) {
    case LengthClass::Single: return "single";
    case LengthClass::Long: return "long";
    case LengthClass::Short: return "short";
    case LengthClass::BcMedium: return "bc_medium";
    case LengthClass::BcShort: return "bc_short";
    case LengthClass::BcDouble: return "bc_double";
  }
  return "?";
}

std::string Root::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coeffs[i]);
  }
  return s + ")";
}

RootSystem::RootSystem(RootSystemType t) : type_(t) {
  Model m;
  int keep_rank = t.rank;
  switch (t.kind) {
    case Kind::G2: m = g2_model(); break;
    case Kind::F4: m = f4_model(); break;
    case Kind::E6:
    case Kind::E7:
    case Kind::E8: m = e8_model(); break;
    default: m = classical_model(t.kind, t.rank); break;
  }
  int model_rank = static_cast<int>(m.simples.size());

  // simple-root coordinates via one exact solve per root
  std::vector<RatVec> cols;
  for (const auto& s : m.simples) cols.emplace_back(s.begin(), s.end());
  std::vector<std::pair<Root, long long>> pos;  // (coeffs, squared length)
  for (const auto& v : m.roots) {
    RatVec b(v.begin(), v.end());
    RatVec x = solve_exact(cols, b);
    std::vector<int> c(model_rank);
    for (int i = 0; i < model_rank; ++i) {
      if (!x[i].is_integer()) throw std::logic_error("root generation: non-integer coefficient");
      c[i] = static_cast<int>(x[i].num());
    }
    bool nonneg = std::all_of(c.begin(), c.end(), [](int a) { return a >= 0; });
    if (!nonneg) continue;
    // E6/E7 are cut out of E8 by support
    bool supported = true;
    for (int i = keep_rank; i < model_rank; ++i)
      if (c[i] != 0) supported = false;
    if (!supported) continue;
    c.resize(keep_rank);
    pos.emplace_back(Root{std::move(c)}, dot(v, v));
  }
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());

  // length classes
  std::set<long long> lens;
  for (const auto& [root, l2] : pos) lens.insert(l2);
  std::set<Root> posset;
  for (const auto& [root, l2] : pos) posset.insert(root);
  for (const auto& [root, l2] : pos) {
    LengthClass cls;
    if (t.kind == Kind::BC) {
      if (posset.count(2 * root))
        cls = LengthClass::BcShort;
      else if ([&] {
                 bool even = true;
                 for (int c : root.coeffs) even = even && c % 2 == 0;
                 Root half = root;
                 for (int& c : half.coeffs) c /= 2;
                 return even && posset.count(half) > 0;
               }())
        cls = LengthClass::BcDouble;
      else
        cls = LengthClass::BcMedium;
    } else if (lens.size() == 1) {
      cls = LengthClass::Single;
    } else {
      cls = (l2 == *lens.rbegin()) ? LengthClass::Long : LengthClass::Short;
    }
    positive_.push_back(root);
    classes_.emplace(root, cls);
  }

  highest_ = table_highest(t);
  if (!classes_.count(highest_)) throw std::logic_error("highest root not in generated set");
  for (const auto& x : positive_)
    for (std::size_t i = 0; i < x.coeffs.size(); ++i)
      if (x.coeffs[i] > highest_.coeffs[i])
        throw std::logic_error("generated root exceeds highest root");

  // Cartan matrix from the ambient model
  int r = keep_rank;
  cartan_.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long long num = 2 * dot(m.simples[i], m.simples[j]);
      long long den = dot(m.simples[j], m.simples[j]);
      if (num % den != 0) throw std::logic_error("non-integral Cartan entry");
      cartan_[i][j] = static_cast<int>(num / den);
    }
}

const RootSystem& RootSystem::get(RootSystemType t) {
  static std::mutex mu;
  static std::map<RootSystemType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end())
    it = cache.emplace(t, std::unique_ptr<RootSystem>(new RootSystem(t))).first;
  return *it->second;
}

bool RootSystem::is_root(const Root& x) const {
  if (is_positive(x)) return true;
  return classes_.count(-x) > 0;
}

LengthClass RootSystem::class_of(const Root& x) const {
  auto it = classes_.find(x);
  if (it != classes_.end()) return it->second;
  it = classes_.find(-x);
  if (it != classes_.end()) return it->second;
  throw std::domain_error("not a root of " + type_.str() + ": " + x.str());
}

bool RootSystem::adjacent(int i, int j) const {
  return i != j && cartan_[i - 1][j - 1] != 0;
}

std::set<Root> positive_roots(RootSystemType t) {
  const auto& rs = RootSystem::get(t);
  return {rs.positive().begin(), rs.positive().end()};
}

Root highest_root(RootSystemType t) { return RootSystem::get(t).highest(); }

LengthClass length_class_of(RootSystemType t, const Root& x) {
  return RootSystem::get(t).class_of(x);
}

namespace {

// Classifies one connected component of a subdiagram and lays its nodes out
// in canonical Bourbaki order. `nodes` are 1-based ambient labels.
SubsystemComponent classify_component(const RootSystem& amb, std::vector<int> nodes) {
  SubsystemComponent comp;
  const auto& cartan = amb.cartan();
  const int n = static_cast<int>(nodes.size());
  std::sort(nodes.begin(), nodes.end());

  auto edge_weight = [&](int a, int b) {
    return cartan[a - 1][b - 1] * cartan[b - 1][a - 1];
  };
  auto neighbors = [&](int a) {
    std::vector<int> out;
    for (int b : nodes)
      if (b != a && edge_weight(a, b) > 0) out.push_back(b);
    return out;
  };

  // positive ambient roots supported on the component
  std::set<int> node_set(nodes.begin(), nodes.end());
  for (const auto& x : amb.positive()) {
    bool ok = true;
    for (std::size_t i = 0; i < x.coeffs.size(); ++i)
      if (x.coeffs[i] != 0 && !node_set.count(static_cast<int>(i) + 1)) ok = false;
    if (ok) comp.positive.push_back(x);
  }

  bool non_reduced = false;
  std::set<Root> posset(comp.positive.begin(), comp.positive.end());
  for (const auto& x : comp.positive)
    if (posset.count(2 * x)) non_reduced = true;

  // squared lengths relative to the ambient model, recovered from the Cartan
  // matrix: (x,x)/(a_j,a_j) is determined by cartan entries, so we rank roots
  // by the integer 2(x,x)/min length. Simpler: use the ambient class map.
  auto sublen_rank = [&](const Root& x) {
    // 0 = shortest ... ; derive from ambient length class ordering per kind
    LengthClass c = amb.class_of(x);
    switch (c) {
      case LengthClass::Single: return 1;
      case LengthClass::Short: return 0;
      case LengthClass::Long: return 1;
      case LengthClass::BcShort: return 0;
      case LengthClass::BcMedium: return 1;
      case LengthClass::BcDouble: return 2;
    }
    return 1;
  };

  // --- determine type and canonical node order ---
  std::vector<int> order;
  Kind kind;

  std::vector<int> branch;
  for (int a : nodes)
    if (neighbors(a).size() >= 3) branch.push_back(a);

  if (n == 1) {
    kind = non_reduced ? Kind::BC : Kind::A;
    order = nodes;
  } else if (!branch.empty()) {
    // D or E shape
    int b = branch[0];
    auto arms = neighbors(b);
    std::vector<std::vector<int>> arm_nodes;  // from branch outward
    for (int first : arms) {
      std::vector<int> arm{first};
      int prev = b, cur = first;
      while (true) {
        auto nb = neighbors(cur);
        int next = -1;
        for (int x : nb)
          if (x != prev) next = x;
        if (next < 0) break;
        arm.push_back(next);
        prev = cur;
        cur = next;
      }
      arm_nodes.push_back(arm);
    }
    std::sort(arm_nodes.begin(), arm_nodes.end(),
              [](const auto& a, const auto& bb) {
                if (a.size() != bb.size()) return a.size() < bb.size();
                return a.front() < bb.front();
              });
    std::vector<std::size_t> lens;
    for (auto& a : arm_nodes) lens.push_back(a.size());
    if (lens.size() != 3) throw std::logic_error("unexpected branch valency");
    if (lens[0] == 1 && lens[1] == 1) {
      // D_n: long arm reversed, then branch, then the two leaves. Among arms
      // of maximal length prefer the one with the smallest label, so the full
      // diagram maps to itself identically (matters for D4).
      kind = Kind::D;
      std::size_t li = 0;
      for (std::size_t i = 0; i < arm_nodes.size(); ++i)
        if (arm_nodes[i].size() == arm_nodes.back().size()) {
          li = i;
          break;
        }
      const auto long_arm = arm_nodes[li];
      std::vector<int> leaves;
      for (std::size_t i = 0; i < arm_nodes.size(); ++i)
        if (i != li) leaves.push_back(arm_nodes[i][0]);
      std::sort(leaves.begin(), leaves.end());
      order.assign(long_arm.rbegin(), long_arm.rend());
      order.push_back(b);
      order.insert(order.end(), leaves.begin(), leaves.end());
    } else if (lens[0] == 1 && lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4) {
      kind = lens[2] == 2 ? Kind::E6 : (lens[2] == 3 ? Kind::E7 : Kind::E8);
      const auto& a13 = arm_nodes[1];  // canonical a3, a1
      const auto& tail = arm_nodes[2];
      order = {a13[1], arm_nodes[0][0], a13[0], b};
      order.insert(order.end(), tail.begin(), tail.end());
    } else {
      throw std::logic_error("unrecognized branched subdiagram");
    }
  } else {
    // chain: locate the ends and any multiple edge
    std::vector<int> ends;
    for (int a : nodes)
      if (neighbors(a).size() <= 1) ends.push_back(a);
    if (ends.size() != 2) throw std::logic_error("chain without two ends");
    auto walk = [&](int start) {
      std::vector<int> path{start};
      int prev = -1, cur = start;
      while (static_cast<int>(path.size()) < n) {
        for (int x : neighbors(cur))
          if (x != prev) {
            path.push_back(x);
            prev = cur;
            cur = x;
            break;
          }
      }
      return path;
    };
    std::vector<int> path = walk(std::min(ends[0], ends[1]));

    int multi_pos = -1, multi_w = 1;
    for (int i = 0; i + 1 < n; ++i) {
      int w = edge_weight(path[i], path[i + 1]);
      if (w > 1) {
        multi_pos = i;
        multi_w = w;
      }
    }

    if (non_reduced) {
      // BC_n: the node carrying doubled roots goes last
      kind = Kind::BC;
      int special = -1;
      for (int a : nodes) {
        Root alpha{std::vector<int>(amb.rank(), 0)};
        alpha.coeffs[a - 1] = 1;
        if (posset.count(2 * alpha)) special = a;
      }
      if (special < 0) throw std::logic_error("BC component without doubled simple root");
      if (path.back() != special) std::reverse(path.begin(), path.end());
      if (path.back() != special) throw std::logic_error("doubled node not at chain end");
      order = path;
    } else if (multi_w == 3) {
      kind = Kind::G2;  // canonical order: short node first
      order = path;
      if (sublen_rank(Root{[&] {
            std::vector<int> c(amb.rank(), 0);
            c[order[0] - 1] = 1;
            return c;
          }()}) > sublen_rank(Root{[&] {
            std::vector<int> c(amb.rank(), 0);
            c[order[1] - 1] = 1;
            return c;
          }()}))
        std::reverse(order.begin(), order.end());
    } else if (multi_pos >= 0 && multi_pos > 0 && multi_pos + 2 < n) {
      // interior double edge: F4, long end first
      kind = Kind::F4;
      if (n != 4) throw std::logic_error("interior double edge in non-F4 chain");
      auto rank_of = [&](int node) {
        std::vector<int> c(amb.rank(), 0);
        c[node - 1] = 1;
        return sublen_rank(Root{c});
      };
      if (rank_of(path.front()) < rank_of(path.back()))
        std::reverse(path.begin(), path.end());
      order = path;
    } else if (multi_pos >= 0) {
      // double edge at an end: B (short end) or C (long end), special node last
      if (multi_pos == 0 && n > 2) std::reverse(path.begin(), path.end());
      auto rank_of = [&](int node) {
        std::vector<int> c(amb.rank(), 0);
        c[node - 1] = 1;
        return sublen_rank(Root{c});
      };
      bool end_short = rank_of(path.back()) < rank_of(path[n - 2]);
      if (n == 2) {
        // C2 is normalized to B2: long node first
        kind = Kind::B;
        if (rank_of(path[0]) < rank_of(path[1])) std::reverse(path.begin(), path.end());
        order = path;
      } else {
        kind = end_short ? Kind::B : Kind::C;
        order = path;
      }
    } else {
      kind = Kind::A;
      order = path;
    }
  }

  comp.type = RootSystemType::make(kind, n);
  comp.nodes = order;

  // class representatives by relative length / doubling pattern
  const RootSystem& canon = RootSystem::get(comp.type);
  std::set<LengthClass> want;
  for (const auto& x : canon.positive()) want.insert(canon.class_of(x));
  for (LengthClass cls : want) {
    const Root* rep = nullptr;
    for (const auto& x : comp.positive) {
      bool match = false;
      if (cls == LengthClass::Single) {
        match = true;
      } else if (cls == LengthClass::BcShort) {
        match = posset.count(2 * x) > 0;
      } else if (cls == LengthClass::BcDouble) {
        bool even = std::all_of(x.coeffs.begin(), x.coeffs.end(),
                                [](int c) { return c % 2 == 0; });
        if (even) {
          Root half = x;
          for (int& c : half.coeffs) c /= 2;
          match = posset.count(half) > 0;
        }
      } else if (cls == LengthClass::BcMedium) {
        bool even = std::all_of(x.coeffs.begin(), x.coeffs.end(),
                                [](int c) { return c % 2 == 0; });
        Root half = x;
        if (even)
          for (int& c : half.coeffs) c /= 2;
        match = !posset.count(2 * x) && !(even && posset.count(half));
      } else {
        // Long/Short within the component by relative ambient length
        int lo = 1 << 30, hi = -1;
        for (const auto& y : comp.positive) {
          lo = std::min(lo, sublen_rank(y));
          hi = std::max(hi, sublen_rank(y));
        }
        match = sublen_rank(x) == (cls == LengthClass::Long ? hi : lo);
      }
      if (match) {
        rep = &x;
        break;
      }
    }
    if (!rep) throw std::logic_error("no representative for class in subsystem component");
    comp.class_reps.emplace(cls, *rep);
  }

  // classification cross-check: rank, root count and length spectrum
  if (canon.positive().size() != comp.positive.size())
    throw std::logic_error("subsystem classification: root count mismatch for " +
                           comp.type.str());
  std::map<LengthClass, int> canon_spec, sub_spec;
  for (const auto& x : canon.positive()) canon_spec[canon.class_of(x)]++;
  for (const auto& x : comp.positive) {
    LengthClass cls;
    if (want.count(LengthClass::Single)) {
      cls = LengthClass::Single;
    } else if (want.count(LengthClass::BcMedium) || want.count(LengthClass::BcShort)) {
      if (posset.count(2 * x))
        cls = LengthClass::BcShort;
      else {
        bool even = std::all_of(x.coeffs.begin(), x.coeffs.end(),
                                [](int c) { return c % 2 == 0; });
        Root half = x;
        if (even)
          for (int& c : half.coeffs) c /= 2;
        cls = (even && posset.count(half)) ? LengthClass::BcDouble : LengthClass::BcMedium;
      }
    } else {
      int lo = 1 << 30, hi = -1;
      for (const auto& y : comp.positive) {
        lo = std::min(lo, sublen_rank(y));
        hi = std::max(hi, sublen_rank(y));
      }
      cls = sublen_rank(x) == hi ? LengthClass::Long : LengthClass::Short;
    }
    sub_spec[cls]++;
    comp.root_class.emplace(x, cls);
  }
  if (sub_spec != canon_spec)
    throw std::logic_error("subsystem classification: length spectrum mismatch for " +
                           comp.type.str());
  return comp;
}

}  // namespace

std::vector<SubsystemComponent> subsystem(RootSystemType t, const std::set<int>& phi) {
  const auto& rs = RootSystem::get(t);
  for (int i : phi)
    if (i < 1 || i > t.rank) throw std::invalid_argument("subsystem: node out of range");

  // split phi into connected components of the induced diagram
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (int start : phi) {
    if (seen.count(start)) continue;
    std::vector<int> stack{start}, comp;
    seen.insert(start);
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      comp.push_back(a);
      for (int b : phi)
        if (!seen.count(b) && rs.adjacent(a, b)) {
          seen.insert(b);
          stack.push_back(b);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  std::sort(comps.begin(), comps.end());

  std::vector<SubsystemComponent> out;
  for (auto& c : comps) out.push_back(classify_component(rs, c));
  return out;
}

std::vector<std::vector<int>> diagram_automorphisms(RootSystemType t) {
  int r = t.rank;
  std::vector<int> id(r);
  std::iota(id.begin(), id.end(), 1);
  std::vector<std::vector<int>> out{id};
  auto add = [&](std::vector<int> p) { out.push_back(std::move(p)); };

  switch (t.kind) {
    case Kind::A:
      if (r >= 2) {
        std::vector<int> rev(id.rbegin(), id.rend());
        add(rev);
      }
      break;
    case Kind::D:
      if (r == 4) {
        // S3 on the three outer nodes {1,3,4}
        const int outer[3] = {1, 3, 4};
        int perm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (int p = 1; p < 6; ++p) {
          std::vector<int> q = id;
          for (int i = 0; i < 3; ++i) q[outer[i] - 1] = outer[perm3[p][i]];
          add(q);
        }
      } else {
        std::vector<int> q = id;
        std::swap(q[r - 2], q[r - 1]);
        add(q);
      }
      break;
    case Kind::E6: {
      std::vector<int> q = {6, 2, 5, 4, 3, 1};
      add(q);
      break;
    }
    default:
      break;  // trivial group
  }
  return out;
}

int canonical_node(RootSystemType t, int node) {
  int best = node;
  for (const auto& p : diagram_automorphisms(t)) best = std::min(best, p[node - 1]);
  return best;
}

}  // namespace symdex::roots
