#include "pds/emit.h"

#include <algorithm>
#include <functional>
#include <sstream>

namespace pds {

namespace {

struct Term {
  Minutes coef;
  std::string var;
};

class LpWriter {
 public:
  void comment(const std::string& text) { head_ << "\\ " << text << "\n"; }

  void row(const std::string& name, const std::vector<Term>& terms, const char* sense, Minutes rhs) {
    body_ << " " << name << ":";
    int on_line = 0;
    bool first = true;
    for (const Term& t : terms) {
      if (t.coef == 0) continue;
      if (on_line == 8) {
        body_ << "\n   ";
        on_line = 0;
      }
      const Minutes mag = t.coef < 0 ? -t.coef : t.coef;
      if (first) {
        body_ << (t.coef < 0 ? " -" : "");
      } else {
        body_ << (t.coef < 0 ? " -" : " +");
      }
      body_ << " ";
      if (mag != 1) body_ << mag << " ";
      body_ << t.var;
      first = false;
      ++on_line;
    }
    if (first) body_ << " 0 " << (terms.empty() ? std::string("alpha") : terms.front().var);
    body_ << " " << sense << " " << rhs << "\n";
    ++rows_;
  }

  std::string text(const std::string& objective, const std::vector<std::string>& bounds,
                   const std::vector<std::string>& binaries, const std::vector<std::string>& generals) const {
    std::ostringstream out;
    out << head_.str();
    out << "Minimize\n obj: " << objective << "\nSubject To\n" << body_.str();
    out << "Bounds\n";
    for (const auto& b : bounds) out << " " << b << "\n";
    auto list = [&](const char* title, const std::vector<std::string>& vars) {
      if (vars.empty()) return;
      out << title << "\n";
      for (std::size_t i = 0; i < vars.size(); ++i) out << " " << vars[i] << ((i % 8 == 7 || i + 1 == vars.size()) ? "\n" : "");
    };
    list("Binaries", binaries);
    list("Generals", generals);
    out << "End\n";
    return out.str();
  }

 private:
  std::ostringstream head_;
  std::ostringstream body_;
  int rows_ = 0;
};

std::string join(const std::vector<Vertex>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string w(int k, Vertex i, Vertex j) { return "w_" + std::to_string(k) + "_" + std::to_string(i) + "_" + std::to_string(j); }
std::string u(int k, Vertex j) { return "u_" + std::to_string(k) + "_" + std::to_string(j); }
std::string z(Vertex j, int g) { return "z_" + std::to_string(j) + "_" + std::to_string(g); }
std::string y(Vertex i, Vertex j) { return "y_" + std::to_string(i) + "_" + std::to_string(j); }
std::string f(Vertex i, Vertex j) { return "f_" + std::to_string(i) + "_" + std::to_string(j); }
std::string T(Vertex j) { return "T_" + std::to_string(j); }

int sec_limit(const EmitterConfig& cfg) {
  switch (cfg.sec_mode) {
    case SecMode::none: return 0;
    case SecMode::pairs_and_triples: return 3;
    case SecMode::all_up_to: return cfg.sec_max;
  }
  return 0;
}

std::string sec_name(const std::vector<Vertex>& set, int k) {
  std::string name = "sec_" + join(set, "_") + "_" + std::to_string(k);
  if (name.size() <= 255) return name;
  const std::size_t h = std::hash<std::string>{}(join(set, ","));
  std::ostringstream hex;
  hex << "sec_h" << std::hex << h << "_" << std::dec << k;
  return hex.str();
}

void validate(const Instance& inst, const EmitterConfig& cfg) {
  const int s = cfg.s == 0 ? inst.s() : cfg.s;
  if (s < 1) throw InputError("emitter config: s must be >= 1");
  if (cfg.big_m < 0) throw InputError("emitter config: big_M must be >= 0");
  if (cfg.big_m != 0 && cfg.big_m < default_big_m(inst))
    throw InputError("emitter config: big_M " + std::to_string(cfg.big_m) + " is below the safe horizon " + std::to_string(default_big_m(inst)));
  if (cfg.sec_mode == SecMode::all_up_to && (cfg.sec_max < 2 || cfg.sec_max > 5))
    throw InputError("emitter config: all_up_to needs a subset size limit in [2, 5]");
}

}  // namespace

Minutes default_big_m(const Instance& inst) {
  Minutes m = 0;
  for (Vertex j : inst.drone_eligible_customers()) {
    Minutes longest = 0;
    for (int g = inst.q(j); g <= inst.p(j); ++g) longest = std::max(longest, inst.drone_time(j, g));
    m += longest;
  }
  return m;
}

std::vector<std::vector<Vertex>> emitted_sec_sets(const Instance& inst, const EmitterConfig& cfg) {
  const int limit = std::min(sec_limit(cfg), inst.n());
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  std::function<void(Vertex, int)> rec = [&](Vertex from, int size) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (Vertex v = from; v <= inst.n(); ++v) {
      cur.push_back(v);
      rec(v + 1, size);
      cur.pop_back();
    }
  };
  for (int size = 2; size <= limit; ++size) rec(1, size);
  return out;
}

std::string emit_milp(const Instance& inst, const EmitterConfig& cfg) {
  validate(inst, cfg);
  const int s = cfg.s == 0 ? inst.s() : cfg.s;
  const Minutes big_m = cfg.big_m == 0 ? default_big_m(inst) : cfg.big_m;
  const int n = inst.n();
  const auto cf = inst.drone_eligible_customers();
  const auto ct = inst.truck_only_customers();
  std::vector<Vertex> cf0{kDepot};
  cf0.insert(cf0.end(), cf.begin(), cf.end());

  LpWriter lp;
  lp.comment("PDSVRP-c makespan model for instance " + inst.name());
  lp.comment("n=" + std::to_string(n) + " m=" + std::to_string(inst.m()) + " s=" + std::to_string(s) + " big_M=" + std::to_string(big_m));
  const int limit = std::min(sec_limit(cfg), n);
  if (limit < 2 && n >= 2) {
    lp.comment("No subtour elimination rows are written; lazy separation of subtour cuts is required for correctness.");
  } else if (limit < n && n >= 2) {
    lp.comment("Subtour elimination rows cover subsets of size <= " + std::to_string(limit) +
               " only; lazy separation of the remaining subtour cuts is required for correctness.");
  } else {
    lp.comment("All subtour elimination rows are present; no lazy separation needed.");
  }

  for (int k = 1; k <= s; ++k) {
    std::vector<Term> t{{1, "alpha"}};
    for (Vertex i = 0; i <= n; ++i)
      for (Vertex j = 0; j <= n; ++j)
        if (i != j) t.push_back({-inst.truck_time(i, j), w(k, i, j)});
    lp.row("tour_" + std::to_string(k), t, ">=", 0);
  }
  for (Vertex j : cf) lp.row("cmpl_" + std::to_string(j), {{1, "alpha"}, {-1, T(j)}}, ">=", 0);
  for (Vertex j : cf) {
    std::vector<Term> t;
    for (int k = 1; k <= s; ++k) t.push_back({1, u(k, j)});
    for (int g = inst.q(j); g <= inst.p(j); ++g) t.push_back({1, z(j, g)});
    lp.row("asg_" + std::to_string(j), t, "=", 1);
  }
  for (Vertex j : ct) {
    std::vector<Term> t;
    for (int k = 1; k <= s; ++k) t.push_back({1, u(k, j)});
    lp.row("truck_" + std::to_string(j), t, "=", 1);
  }
  for (int k = 1; k <= s; ++k)
    for (Vertex j = 1; j <= n; ++j)
      lp.row("use_" + std::to_string(j) + "_" + std::to_string(k), {{1, u(k, j)}, {-1, u(k, kDepot)}}, "<=", 0);
  for (int k = 1; k <= s; ++k) {
    for (Vertex j = 0; j <= n; ++j) {
      std::vector<Term> t;
      for (Vertex i = 0; i <= n; ++i)
        if (i != j) t.push_back({1, w(k, i, j)});
      for (Vertex l = 0; l <= n; ++l)
        if (l != j) t.push_back({1, w(k, j, l)});
      t.push_back({-2, u(k, j)});
      lp.row("deg_" + std::to_string(j) + "_" + std::to_string(k), t, "=", 0);
      // deg_ alone only fixes the total degree; a directed circuit also
      // needs as many arcs in as out.
      std::vector<Term> b;
      for (Vertex i = 0; i <= n; ++i)
        if (i != j) b.push_back({1, w(k, i, j)});
      for (Vertex l = 0; l <= n; ++l)
        if (l != j) b.push_back({-1, w(k, j, l)});
      lp.row("bal_" + std::to_string(j) + "_" + std::to_string(k), b, "=", 0);
    }
  }
  const auto secs = emitted_sec_sets(inst, cfg);
  for (int k = 1; k <= s; ++k) {
    for (const auto& set : secs) {
      std::vector<Term> t;
      for (Vertex i : set)
        for (Vertex j : set)
          if (i != j) t.push_back({1, w(k, i, j)});
      lp.row(sec_name(set, k), t, "<=", static_cast<Minutes>(set.size()) - 1);
    }
  }
  for (Vertex i : cf0) {
    for (Vertex j : cf0) {
      if (i == j) continue;
      const std::string arc = std::to_string(i) + "_" + std::to_string(j);
      lp.row("flo_" + arc, {{1, f(i, j)}, {-inst.m(), y(i, j)}}, "<=", 0);
      lp.row("fhi_" + arc, {{1, y(i, j)}, {-1, f(i, j)}}, "<=", 0);
    }
  }
  for (Vertex i : cf0) {
    for (Vertex j : cf) {
      if (i == j) continue;
      std::vector<Term> t{{1, T(j)}, {-1, T(i)}, {-big_m, y(i, j)}};
      for (int g = inst.q(j); g <= inst.p(j); ++g) t.push_back({-inst.drone_time(j, g), z(j, g)});
      lp.row("sync_" + std::to_string(i) + "_" + std::to_string(j), t, ">=", -big_m);
    }
  }
  // Drone flow: at most m drones leave the depot, a g-drone mission receives
  // g units, and flow is conserved everywhere.
  {
    std::vector<Term> t;
    for (Vertex j : cf) t.push_back({1, f(kDepot, j)});
    if (!t.empty()) lp.row("dout", t, "<=", inst.m());
  }
  for (Vertex j : cf) {
    std::vector<Term> t;
    for (Vertex i : cf0)
      if (i != j) t.push_back({1, f(i, j)});
    for (int g = inst.q(j); g <= inst.p(j); ++g) t.push_back({-g, z(j, g)});
    lp.row("dflow_" + std::to_string(j), t, "=", 0);
  }
  if (!cf.empty()) {
    for (Vertex j : cf0) {
      std::vector<Term> t;
      for (Vertex i : cf0)
        if (i != j) t.push_back({1, f(i, j)});
      for (Vertex l : cf0)
        if (l != j) t.push_back({-1, f(j, l)});
      lp.row("dcons_" + std::to_string(j), t, "=", 0);
    }
  }
  if (cfg.include_va && !cf.empty()) {
    std::vector<Term> t{{inst.m(), "alpha"}};
    for (Vertex j : cf)
      for (int g = inst.q(j); g <= inst.p(j); ++g) t.push_back({-g * inst.drone_time(j, g), z(j, g)});
    lp.row("va", t, ">=", 0);
  }

  std::vector<std::string> bounds{"alpha >= 0"};
  std::vector<std::string> binaries;
  std::vector<std::string> generals;
  if (!cf.empty())
    for (Vertex j : cf0) bounds.push_back(T(j) + " >= 0");
  for (Vertex i : cf0)
    for (Vertex j : cf0)
      if (i != j && !cf.empty()) {
        bounds.push_back("0 <= " + f(i, j) + " <= " + std::to_string(inst.m()));
        generals.push_back(f(i, j));
      }
  for (int k = 1; k <= s; ++k)
    for (Vertex i = 0; i <= n; ++i)
      for (Vertex j = 0; j <= n; ++j)
        if (i != j) binaries.push_back(w(k, i, j));
  for (Vertex j : cf)
    for (int g = inst.q(j); g <= inst.p(j); ++g) binaries.push_back(z(j, g));
  for (int k = 1; k <= s; ++k)
    for (Vertex j = 0; j <= n; ++j) binaries.push_back(u(k, j));
  for (Vertex i : cf0)
    for (Vertex j : cf0)
      if (i != j && !cf.empty()) binaries.push_back(y(i, j));
  return lp.text("alpha", bounds, binaries, generals);
}

}  // namespace pds
