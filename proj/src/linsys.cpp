#include "conic/linsys.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace conic {

void LinearSystem::add(RatVec a, Rat b, RelOp op) {
  if (static_cast<int>(a.size()) != vars_) throw std::invalid_argument("LinearSystem: row length mismatch");
  rels_.push_back(LinRel{std::move(a), std::move(b), op});
}

void LinearSystem::add_ge(RatVec a, Rat b) {
  for (Rat& c : a) c = -c;
  add(std::move(a), -b, RelOp::Le);
}

void LinearSystem::add_gt(RatVec a, Rat b) {
  for (Rat& c : a) c = -c;
  add(std::move(a), -b, RelOp::Lt);
}

bool satisfies(const LinearSystem& s, const RatVec& x) {
  for (const LinRel& r : s.relations()) {
    Rat v = 0;
    for (int j = 0; j < s.vars(); ++j) v += r.a[j] * x[j];
    switch (r.op) {
      case RelOp::Eq:
        if (v != r.b) return false;
        break;
      case RelOp::Le:
        if (v > r.b) return false;
        break;
      case RelOp::Lt:
        if (v >= r.b) return false;
        break;
    }
  }
  return true;
}

namespace {

struct Row {
  IntVec a;  // content 1, so equal rows dedupe to one pool entry
  Rat b;
  bool strict;
};

using RowKey = std::vector<std::string>;

RowKey key_of(const IntVec& a) {
  RowKey k;
  k.reserve(a.size());
  for (const Int& x : a) k.push_back(x.str());
  return k;
}

class FourierMotzkin {
 public:
  explicit FourierMotzkin(const LinearSystem& s) : vars_(s.vars()) {
    for (const LinRel& r : s.relations()) {
      if (r.op == RelOp::Eq)
        eq_rows_.push_back(r);
      else
        push_ineq(r.a, r.b, r.op == RelOp::Lt);
      if (infeasible_) return;
    }
    eliminate_equalities();
    if (infeasible_) return;
    eliminate_inequalities();
  }

  bool feasible() const { return !infeasible_; }

  std::optional<RatVec> witness() const {
    if (infeasible_) return std::nullopt;
    RatVec x(vars_, Rat(0));
    // FM records were pushed while eliminating the highest variable first;
    // walk them backwards so every bound row only references assigned vars.
    for (auto it = fm_records_.rbegin(); it != fm_records_.rend(); ++it) {
      const FmRec& rec = *it;
      bool has_lo = false, has_hi = false;
      Rat lo = 0, hi = 0;
      for (const Row& r : rec.lower) {
        Rat v = eval_bound(r, rec.var, x);
        if (!has_lo || v > lo) lo = v;
        has_lo = true;
      }
      for (const Row& r : rec.upper) {
        Rat v = eval_bound(r, rec.var, x);
        if (!has_hi || v < hi) hi = v;
        has_hi = true;
      }
      if (has_lo && has_hi)
        x[rec.var] = (lo == hi) ? lo : (lo + hi) / 2;
      else if (has_lo)
        x[rec.var] = lo + 1;
      else if (has_hi)
        x[rec.var] = hi - 1;
    }
    for (auto it = eq_records_.rbegin(); it != eq_records_.rend(); ++it) {
      Rat v = it->b;
      for (int j = 0; j < vars_; ++j)
        if (it->coeff[j] != 0) v -= it->coeff[j] * x[j];
      x[it->var] = v / it->pivot;
    }
    return x;
  }

 private:
  struct EqRec {
    int var;
    RatVec coeff;  // pivot*x[var] + coeff.x = b with coeff[var] == 0
    Rat pivot, b;
  };
  struct FmRec {
    int var;
    std::vector<Row> lower, upper;
  };

  static Rat eval_bound(const Row& r, int var, const RatVec& x) {
    Rat rest = 0;
    for (std::size_t j = 0; j < r.a.size(); ++j)
      if (static_cast<int>(j) != var && r.a[j] != 0) rest += Rat(r.a[j]) * x[j];
    return (r.b - rest) / Rat(r.a[var]);
  }

  void push_ineq(const RatVec& a, const Rat& b, bool strict) {
    Int mult = 1;
    for (const Rat& c : a) mult = lcm(mult, rat_den(c));
    IntVec ia(a.size());
    Int g = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      ia[j] = rat_num(a[j]) * (mult / rat_den(a[j]));
      g = gcd(g, ia[j]);
    }
    Rat nb = b * Rat(mult);
    if (g == 0) {
      if (!(strict ? nb > 0 : nb >= 0)) infeasible_ = true;
      return;
    }
    for (Int& v : ia) v /= g;
    nb /= Rat(g);
    RowKey k = key_of(ia);
    auto it = pool_.find(k);
    if (it == pool_.end()) {
      pool_.emplace(std::move(k), Row{std::move(ia), std::move(nb), strict});
      return;
    }
    Row& r = it->second;
    if (nb < r.b) {
      r.b = std::move(nb);
      r.strict = strict;
    } else if (nb == r.b) {
      r.strict = r.strict || strict;
    }
  }

  void eliminate_equalities() {
    std::vector<LinRel> pending = std::move(eq_rows_);
    while (!pending.empty()) {
      LinRel r = std::move(pending.back());
      pending.pop_back();
      int piv = -1;
      for (int j = vars_ - 1; j >= 0; --j)
        if (r.a[j] != 0) {
          piv = j;
          break;
        }
      if (piv < 0) {
        if (r.b != 0) {
          infeasible_ = true;
          return;
        }
        continue;
      }
      EqRec rec;
      rec.var = piv;
      rec.pivot = r.a[piv];
      rec.coeff = r.a;
      rec.coeff[piv] = 0;
      rec.b = r.b;
      for (LinRel& other : pending) substitute(other.a, other.b, rec);
      std::map<RowKey, Row> old;
      old.swap(pool_);
      for (auto& [k, row] : old) {
        (void)k;
        RatVec a(row.a.size());
        for (std::size_t j = 0; j < a.size(); ++j) a[j] = Rat(row.a[j]);
        Rat b = row.b;
        substitute(a, b, rec);
        push_ineq(a, b, row.strict);
        if (infeasible_) return;
      }
      eq_records_.push_back(std::move(rec));
    }
  }

  void substitute(RatVec& a, Rat& b, const EqRec& rec) const {
    if (a[rec.var] == 0) return;
    Rat factor = a[rec.var] / rec.pivot;
    a[rec.var] = 0;
    for (int j = 0; j < vars_; ++j)
      if (rec.coeff[j] != 0) a[j] -= factor * rec.coeff[j];
    b -= factor * rec.b;
  }

  void eliminate_inequalities() {
    for (int v = vars_ - 1; v >= 0; --v) {
      FmRec rec;
      rec.var = v;
      std::map<RowKey, Row> rest;
      for (auto& [k, row] : pool_) {
        if (row.a[v] > 0)
          rec.upper.push_back(row);
        else if (row.a[v] < 0)
          rec.lower.push_back(row);
        else
          rest.emplace(k, row);
      }
      pool_.swap(rest);
      for (const Row& lo : rec.lower) {
        for (const Row& up : rec.upper) {
          Rat s_lo = Rat(up.a[v]);
          Rat s_up = Rat(-lo.a[v]);
          RatVec a(vars_, Rat(0));
          for (int j = 0; j < vars_; ++j) a[j] = s_lo * Rat(lo.a[j]) + s_up * Rat(up.a[j]);
          Rat b = s_lo * lo.b + s_up * up.b;
          push_ineq(a, b, lo.strict || up.strict);
          if (infeasible_) return;
        }
      }
      fm_records_.push_back(std::move(rec));
    }
  }

  int vars_;
  bool infeasible_ = false;
  std::vector<LinRel> eq_rows_;
  std::map<RowKey, Row> pool_;
  std::vector<EqRec> eq_records_;
  std::vector<FmRec> fm_records_;
};

}  // namespace

bool feasible(const LinearSystem& s) { return FourierMotzkin(s).feasible(); }

std::optional<RatVec> feasible_witness(const LinearSystem& s) { return FourierMotzkin(s).witness(); }

}  // namespace conic
