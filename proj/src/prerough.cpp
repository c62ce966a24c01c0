#include "rys/prerough.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "rys/posets.hpp"

namespace rys {

namespace {

// Unique least upper (or greatest lower) bound of {a, b} under leq, if any:
// the candidate below (above) every other candidate.
std::optional<std::size_t> bound_of(const std::vector<std::vector<bool>>& leq,
                                    std::size_t a, std::size_t b, bool upper) {
  const std::size_t n = leq.size();
  std::vector<std::size_t> cands;
  for (std::size_t c = 0; c < n; ++c) {
    const bool ok = upper ? (leq[a][c] && leq[b][c]) : (leq[c][a] && leq[c][b]);
    if (ok) cands.push_back(c);
  }
  for (std::size_t c : cands) {
    bool extremal = true;
    for (std::size_t d : cands)
      if (upper ? !leq[c][d] : !leq[d][c]) {
        extremal = false;
        break;
      }
    if (extremal) return c;
  }
  return std::nullopt;
}

void fill_tables(PreRoughAlgebra& q) {
  const std::size_t n = q.size();
  q.join.assign(n, std::vector<std::optional<std::size_t>>(n));
  q.meet.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      q.join[a][b] = bound_of(q.leq, a, b, true);
      q.meet[a][b] = bound_of(q.leq, a, b, false);
    }
}

std::vector<bool> membership(std::size_t n, const std::vector<std::size_t>& elems) {
  std::vector<bool> in(n, false);
  for (std::size_t e : elems) in.at(e) = true;
  return in;
}

FilterRecord classify_subset(const PreRoughAlgebra& q, std::vector<std::size_t> elems) {
  std::sort(elems.begin(), elems.end());
  const std::size_t n = q.size();
  const std::vector<bool> in = membership(n, elems);
  FilterRecord r;
  r.elements = std::move(elems);

  r.o_filter = true;
  for (std::size_t x = 0; x < n && r.o_filter; ++x) {
    if (!in[x]) continue;
    for (std::size_t y = 0; y < n && r.o_filter; ++y)
      if (q.leq[x][y] && !in[y]) r.o_filter = false;
  }

  r.l_filter = r.o_filter;
  for (std::size_t x = 0; x < n && r.l_filter; ++x)
    if (in[x] && !in[q.L[x]]) r.l_filter = false;

  r.lattice = r.l_filter;
  for (std::size_t a = 0; a < n && r.lattice; ++a) {
    if (!in[a]) continue;
    for (std::size_t b = 0; b < n && r.lattice; ++b) {
      if (!in[b]) continue;
      const auto j = q.join[a][b];
      const auto m = q.meet[a][b];
      if (!j || !in[*j] || !m || !in[*m]) r.lattice = false;
    }
  }

  // The prime hypothesis deliberately exempts joins equal to the top.
  r.prime = r.l_filter;
  for (std::size_t a = 0; a < n && r.prime; ++a)
    for (std::size_t b = 0; b < n && r.prime; ++b) {
      const auto j = q.join[a][b];
      if (!j || *j == q.one || !in[*j]) continue;
      if (!in[a] && !in[b]) r.prime = false;
    }

  r.cofine = true;
  for (std::size_t x = 0; x < n && r.cofine; ++x) {
    if (x == q.one) continue;
    bool covered = false;
    for (std::size_t e : r.elements)
      if (e != q.one && q.leq[x][e]) {
        covered = true;
        break;
      }
    if (!covered) r.cofine = false;
  }

  r.nontrivial =
      !(r.elements.size() == 1 && r.elements[0] == q.one) && r.elements.size() != n;
  return r;
}

std::vector<std::size_t> kplus_of(const PreRoughAlgebra& q,
                                  const std::vector<std::size_t>& k) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < q.size(); ++y) {
    bool ok = true;
    for (std::size_t x : k) {
      const auto j = q.join[x][y];
      if (!j || *j != q.one) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(y);
  }
  return out;
}

// Bounded, distributive and complemented lattice check for a small explicit
// poset; used for the supremal-family order reports.
bool is_boolean_poset(std::size_t n, const std::vector<std::vector<bool>>& leq) {
  if (n == 0) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) return false;
      for (std::size_t c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c]) return false;
    }
  }
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto j = bound_of(leq, a, b, true);
      const auto m = bound_of(leq, a, b, false);
      if (!j || !m) return false;
      join[a][b] = *j;
      meet[a][b] = *m;
    }
  std::size_t bottom = 0, top = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (leq[a][bottom]) bottom = a;
    if (leq[top][a]) top = a;
  }
  for (std::size_t a = 0; a < n; ++a)
    if (!leq[bottom][a] || !leq[a][top]) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]) return false;
  for (std::size_t a = 0; a < n; ++a) {
    bool complemented = false;
    for (std::size_t b = 0; b < n && !complemented; ++b)
      if (join[a][b] == top && meet[a][b] == bottom) complemented = true;
    if (!complemented) return false;
  }
  return true;
}

}  // namespace

bool PreRoughAlgebra::tables_total() const {
  for (const auto& row : join)
    for (const auto& v : row)
      if (!v) return false;
  for (const auto& row : meet)
    for (const auto& v : row)
      if (!v) return false;
  return !join.empty();
}

PreRoughAlgebra quotient_by_rough_equality(const ApproximationSpace& space) {
  if (space.relation.kind() != RelationKind::Equivalence)
    throw std::invalid_argument("rough-equality quotient needs an equivalence space");
  const std::size_t n = space.universe->size();
  if (n > 16) throw std::invalid_argument("universe too large for quotient enumeration");
  const Granulation g = granulation_from_relation(space.relation);

  PreRoughAlgebra q;
  for (std::uint64_t m = 0; m < (1ull << n); ++m) {
    const Subset a(space.universe, m);
    const Subset l = lower_approx(g, a);
    const Subset u = upper_approx(g, a);
    bool seen = false;
    for (const auto& o : q.objects)
      if (o.lower.mask() == l.mask() && o.upper.mask() == u.mask()) {
        seen = true;
        break;
      }
    if (!seen) q.objects.push_back({l, u, a});
  }
  const std::size_t k = q.objects.size();
  if (k > 64) throw std::invalid_argument("quotient carrier too large");

  for (const auto& o : q.objects) {
    if (lower_approx(g, o.representative).mask() != o.lower.mask() ||
        upper_approx(g, o.representative).mask() != o.upper.mask())
      throw std::logic_error("rough object representative does not realize its pair");
    q.labels.push_back("(" + o.lower.to_string() + "," + o.upper.to_string() + ")");
  }

  q.leq.assign(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      q.leq[a][b] = q.objects[a].lower.subset_of(q.objects[b].lower) &&
                    q.objects[a].upper.subset_of(q.objects[b].upper);
  fill_tables(q);
  if (!q.tables_total())
    throw std::runtime_error("rough-equality order is not a lattice order");

  auto find = [&](std::uint64_t lmask, std::uint64_t umask) {
    for (std::size_t i = 0; i < k; ++i)
      if (q.objects[i].lower.mask() == lmask && q.objects[i].upper.mask() == umask)
        return i;
    throw std::logic_error("quotient is not closed under the unary operations");
  };
  for (std::size_t i = 0; i < k; ++i) {
    const auto& o = q.objects[i];
    q.L.push_back(find(o.lower.mask(), o.lower.mask()));
    q.U.push_back(find(o.upper.mask(), o.upper.mask()));
    q.neg.push_back(find(o.upper.complement().mask(), o.lower.complement().mask()));
  }
  q.zero = find(0, 0);
  q.one = find(space.universe->full_mask(), space.universe->full_mask());
  return q;
}

PreRoughAxiomReport check_prerough_axioms(const PreRoughAlgebra& q) {
  const std::size_t n = q.size();
  PreRoughAxiomReport rep;
  auto add = [&](const std::string& name, bool holds, const std::string& detail) {
    rep.axioms.push_back({name, holds, holds ? "" : detail});
    rep.all_pass = rep.all_pass && holds;
  };
  auto at = [&](std::size_t i) { return q.labels[i]; };

  bool order_ok = true;
  std::string order_detail;
  for (std::size_t a = 0; a < n && order_ok; ++a) {
    if (!q.leq[a][a]) {
      order_ok = false;
      order_detail = "not reflexive at " + at(a);
    }
    if (order_ok && (!q.leq[q.zero][a] || !q.leq[a][q.one])) {
      order_ok = false;
      order_detail = "bounds miss " + at(a);
    }
    for (std::size_t b = 0; b < n && order_ok; ++b) {
      if (a != b && q.leq[a][b] && q.leq[b][a]) {
        order_ok = false;
        order_detail = "not antisymmetric at " + at(a) + ", " + at(b);
        break;
      }
      if (q.join[a][b] != bound_of(q.leq, a, b, true) || !q.join[a][b] ||
          q.meet[a][b] != bound_of(q.leq, a, b, false) || !q.meet[a][b]) {
        order_ok = false;
        order_detail = "no unique bound for " + at(a) + ", " + at(b);
        break;
      }
      for (std::size_t c = 0; c < n; ++c)
        if (q.leq[a][b] && q.leq[b][c] && !q.leq[a][c]) {
          order_ok = false;
          order_detail = "not transitive at " + at(a) + ", " + at(b) + ", " + at(c);
          break;
        }
    }
  }
  add("bounded-lattice-order", order_ok, order_detail);

  auto scan1 = [&](const std::string& name, auto prop) {
    for (std::size_t a = 0; a < n; ++a)
      if (!prop(a)) {
        add(name, false, "at " + at(a));
        return;
      }
    add(name, true, "");
  };
  scan1("L-contraction", [&](std::size_t a) { return q.leq[q.L[a]][a]; });
  scan1("L-idempotent", [&](std::size_t a) { return q.L[q.L[a]] == q.L[a]; });

  auto scan2 = [&](const std::string& name, auto prop) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!prop(a, b)) {
          add(name, false, "at " + at(a) + ", " + at(b));
          return;
        }
    add(name, true, "");
  };
  scan2("L-meet-distribution", [&](std::size_t a, std::size_t b) {
    const auto m = q.meet[a][b];
    const auto lm = q.meet[q.L[a]][q.L[b]];
    if (!m || !lm) return true;  // captured by the lattice-order entry
    return q.L[*m] == *lm;
  });
  scan2("L-join-distribution", [&](std::size_t a, std::size_t b) {
    const auto j = q.join[a][b];
    const auto lj = q.join[q.L[a]][q.L[b]];
    if (!j || !lj) return true;
    return q.L[*j] == *lj;
  });
  add("L-top", q.L[q.one] == q.one, "at " + at(q.one));
  scan1("UL-collapse", [&](std::size_t a) { return q.U[q.L[a]] == q.L[a]; });
  scan1("negation-involution", [&](std::size_t a) { return q.neg[q.neg[a]] == a; });
  scan1("U-duality", [&](std::size_t a) { return q.U[a] == q.neg[q.L[q.neg[a]]]; });
  scan2("order-determined-by-LU", [&](std::size_t a, std::size_t b) {
    if (q.leq[q.L[a]][q.L[b]] && q.leq[q.U[a]][q.U[b]]) return static_cast<bool>(q.leq[a][b]);
    return true;
  });

  rep.distributivity = {"lattice-distributivity", true, ""};
  for (std::size_t a = 0; a < n && rep.distributivity.holds; ++a)
    for (std::size_t b = 0; b < n && rep.distributivity.holds; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto bc = q.join[b][c];
        if (!bc) continue;
        const auto lhs = q.meet[a][*bc];
        const auto ab = q.meet[a][b];
        const auto ac = q.meet[a][c];
        if (!lhs || !ab || !ac) continue;
        const auto rhs = q.join[*ab][*ac];
        if (!rhs || *lhs != *rhs) {
          rep.distributivity.holds = false;
          rep.distributivity.detail = "at " + at(a) + ", " + at(b) + ", " + at(c);
          break;
        }
      }
  return rep;
}

std::vector<FilterRecord> enumerate_filters(const PreRoughAlgebra& q,
                                            std::size_t max_size) {
  const std::size_t n = q.size();
  if (n > max_size) throw std::invalid_argument("carrier exceeds the filter enumeration bound");
  auto leq = [&](std::size_t a, std::size_t b) { return static_cast<bool>(q.leq[a][b]); };

  std::vector<FilterRecord> out;
  for (const auto& holds : enumerate_up_sets(n, leq)) {
    std::vector<std::size_t> elems;
    for (std::size_t i = 0; i < n; ++i)
      if (holds[i]) elems.push_back(i);
    if (elems.empty()) continue;  // vacuous filter, excluded by convention
    out.push_back(classify_subset(q, elems));
  }
  std::sort(out.begin(), out.end(), [](const FilterRecord& a, const FilterRecord& b) {
    if (a.elements.size() != b.elements.size())
      return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });

  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!out[i].lattice) continue;
    const std::vector<std::size_t> kp = kplus_of(q, out[i].elements);
    for (auto& rec : out)
      if (rec.elements == kp && !rec.supremal_of) {
        rec.supremal_of = i;
        break;
      }
  }
  return out;
}

std::vector<FilterRecord> enumerate_ideals(const PreRoughAlgebra& q,
                                           std::size_t max_size) {
  PreRoughAlgebra rev;
  rev.labels = q.labels;
  const std::size_t n = q.size();
  rev.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rev.leq[a][b] = q.leq[b][a];
  rev.join = q.meet;
  rev.meet = q.join;
  rev.L = q.U;
  rev.U = q.L;
  rev.neg = q.neg;
  rev.zero = q.one;
  rev.one = q.zero;
  return enumerate_filters(rev, max_size);
}

InducedSystem induced_structure(const PreRoughAlgebra& q, const FilterRecord& k) {
  if (!k.l_filter) throw std::invalid_argument("induced structure needs an L-filter");
  const std::size_t n = q.size();
  const std::vector<bool> in = membership(n, k.elements);
  InducedSystem sys;
  sys.elements = k.elements;

  sys.join_total = true;
  for (std::size_t a : k.elements)
    for (std::size_t b : k.elements) {
      const auto j = q.join[a][b];
      if (!j || !in[*j]) sys.join_total = false;
    }

  sys.closed_under_L = true;
  sys.closed_under_U = true;
  for (std::size_t x : k.elements) {
    if (!in[q.L[x]]) sys.closed_under_L = false;
    if (!in[q.U[x]]) sys.closed_under_U = false;
    if (!sys.neg_escape && !in[q.neg[x]]) sys.neg_escape = x;
  }

  if (k.lattice) {
    sys.distributive_lattice = true;
    for (std::size_t a : k.elements)
      for (std::size_t b : k.elements)
        for (std::size_t c : k.elements) {
          const auto bc = q.join[b][c];
          const auto lhs = bc ? q.meet[a][*bc] : std::optional<std::size_t>{};
          const auto ab = q.meet[a][b];
          const auto ac = q.meet[a][c];
          const auto rhs = (ab && ac) ? q.join[*ab][*ac] : std::optional<std::size_t>{};
          if (!lhs || !rhs || *lhs != *rhs) sys.distributive_lattice = false;
        }
  }

  // Weak equality: both sides equal whenever both land inside K.
  auto in_meet = [&](std::size_t a, std::size_t b) -> std::optional<std::size_t> {
    const auto m = q.meet[a][b];
    if (m && in[*m]) return m;
    return std::nullopt;
  };
  sys.weak_L_meet = true;
  sys.weak_absorption = true;
  sys.weak_distributivity = true;
  for (std::size_t a : k.elements)
    for (std::size_t b : k.elements) {
      const auto lhs = in_meet(a, b);
      const auto rhs = in_meet(q.L[a], q.L[b]);
      if (lhs && rhs && q.L[*lhs] != *rhs) sys.weak_L_meet = false;
      const auto yx = in_meet(b, a);
      if (yx) {
        const auto abs = q.join[a][*yx];
        if (!abs || *abs != a) sys.weak_absorption = false;
      }
      for (std::size_t c : k.elements) {
        // x | (y & z) against (x | y) & (x | z)
        const auto yz = in_meet(b, c);
        const auto xy = q.join[a][b];
        const auto xz = q.join[a][c];
        if (yz && xy && xz) {
          const auto l = q.join[a][*yz];
          const auto r = in_meet(*xy, *xz);
          if (l && r && *l != *r) sys.weak_distributivity = false;
        }
        // x & (y | z) against (x & y) | (x & z)
        const auto jyz = q.join[b][c];
        const auto l2 = jyz ? in_meet(a, *jyz) : std::optional<std::size_t>{};
        const auto mxy = in_meet(a, b);
        const auto mxz = in_meet(a, c);
        const auto r2 = (mxy && mxz) ? q.join[*mxy][*mxz] : std::optional<std::size_t>{};
        if (l2 && r2 && *l2 != *r2) sys.weak_distributivity = false;
      }
    }
  return sys;
}

SupremalResult supremal(const PreRoughAlgebra& q, const FilterRecord& k) {
  if (!k.lattice) throw std::invalid_argument("supremal analysis needs a lattice L-filter");
  SupremalResult res;
  res.kplus = kplus_of(q, k.elements);
  res.kplus_is_lattice_l_filter = classify_subset(q, res.kplus).lattice;
  res.k_cofine = classify_subset(q, k.elements).cofine;
  const bool trivial = res.kplus.size() == 1 && res.kplus[0] == q.one;
  res.cofine_iff_kplus_trivial = (res.k_cofine == trivial);
  return res;
}

SupremalFamilyReport supremal_family(const PreRoughAlgebra& q) {
  SupremalFamilyReport rep;
  for (const auto& rec : enumerate_filters(q, q.size()))
    if (rec.lattice) {
      rep.lattice_l_filters.push_back(rec);
      rep.kplus.push_back(kplus_of(q, rec.elements));
    }
  for (const auto& kp : rep.kplus)
    if (std::find(rep.supremal_filters.begin(), rep.supremal_filters.end(), kp) ==
        rep.supremal_filters.end())
      rep.supremal_filters.push_back(kp);
  std::sort(rep.supremal_filters.begin(), rep.supremal_filters.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  const std::size_t m = rep.supremal_filters.size();
  auto contains_all = [](const std::vector<std::size_t>& small,
                         const std::vector<std::size_t>& large) {
    return std::includes(large.begin(), large.end(), small.begin(), small.end());
  };
  std::vector<std::vector<bool>> incl(m, std::vector<bool>(m, false));
  std::vector<std::vector<bool>> dual(m, std::vector<bool>(m, false));
  std::vector<std::vector<std::size_t>> kp2(m);
  for (std::size_t i = 0; i < m; ++i) kp2[i] = kplus_of(q, rep.supremal_filters[i]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      incl[i][j] = contains_all(rep.supremal_filters[i], rep.supremal_filters[j]);
      dual[i][j] = contains_all(kp2[j], kp2[i]);
    }
  rep.inclusion_order_boolean = is_boolean_poset(m, incl);
  rep.dual_order_boolean = is_boolean_poset(m, dual);

  std::ostringstream note;
  note << rep.lattice_l_filters.size() << " lattice L-filters, " << m
       << " supremal; inclusion and K+ orders "
       << (incl == dual ? "coincide" : "differ") << " as relations";
  rep.note = note.str();
  return rep;
}

std::optional<std::pair<std::size_t, std::size_t>> incomparability_search(
    const PreRoughAlgebra& q, const FilterRecord& k) {
  if (!k.lattice || !k.nontrivial)
    throw std::invalid_argument("incomparability search needs a nontrivial lattice L-filter");
  const std::size_t n = q.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (a == q.one) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (b == q.one) continue;
      const auto j = q.join[a][b];
      if (!j) continue;
      bool all_incomparable = true;
      for (std::size_t c : k.elements) {
        if (c == q.one) continue;
        if (q.leq[*j][c] || q.leq[c][*j]) {
          all_incomparable = false;
          break;
        }
      }
      if (all_incomparable) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

namespace {

PreRoughConstruction finish_construction(PreRoughAlgebra alg) {
  PreRoughConstruction out{std::move(alg), {}, true, false, {}};
  out.bounds_unique = out.algebra.tables_total();
  out.axioms = check_prerough_axioms(out.algebra);
  for (const auto& rec : enumerate_filters(out.algebra, out.algebra.size()))
    if (rec.lattice && rec.nontrivial) {
      out.has_nontrivial_lattice_l_filter = true;
      out.nontrivial_witness = rec.elements;
      break;
    }
  return out;
}

}  // namespace

PreRoughConstruction paste(const PreRoughAlgebra& q) {
  const std::size_t n = q.size();
  std::size_t stamp = 1;
  for (const auto& lab : q.labels) {
    if (lab.size() < 2 || lab[0] != 'p') continue;
    bool digits = true;
    for (std::size_t i = 1; i < lab.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(lab[i]))) digits = false;
    if (digits) ++stamp;
  }

  PreRoughAlgebra out;
  out.labels = q.labels;
  out.labels.push_back("p" + std::to_string(stamp));
  out.labels.push_back("q" + std::to_string(stamp));
  const std::size_t p = n, pq = n + 1;

  out.leq.assign(n + 2, std::vector<bool>(n + 2, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.leq[a][b] = q.leq[a][b];
  for (std::size_t m : {p, pq}) {
    out.leq[m][m] = true;
    out.leq[q.zero][m] = true;
    out.leq[m][q.one] = true;
  }
  out.L = q.L;
  out.U = q.U;
  out.neg = q.neg;
  out.L.insert(out.L.end(), {q.zero, q.zero});
  out.U.insert(out.U.end(), {q.one, q.one});
  out.neg.insert(out.neg.end(), {pq, p});
  out.zero = q.zero;
  out.one = q.one;
  fill_tables(out);
  return finish_construction(std::move(out));
}

PreRoughConstruction product(const PreRoughAlgebra& q1, const PreRoughAlgebra& q2) {
  const std::size_t n1 = q1.size(), n2 = q2.size();
  PreRoughAlgebra out;
  auto id = [&](std::size_t a, std::size_t b) { return a * n2 + b; };
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b) {
      out.labels.push_back("(" + q1.labels[a] + "," + q2.labels[b] + ")");
      out.L.push_back(id(q1.L[a], q2.L[b]));
      out.U.push_back(id(q1.U[a], q2.U[b]));
      out.neg.push_back(id(q1.neg[a], q2.neg[b]));
    }
  const std::size_t n = n1 * n2;
  out.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t a1 = 0; a1 < n1; ++a1)
    for (std::size_t a2 = 0; a2 < n2; ++a2)
      for (std::size_t b1 = 0; b1 < n1; ++b1)
        for (std::size_t b2 = 0; b2 < n2; ++b2)
          out.leq[id(a1, a2)][id(b1, b2)] = q1.leq[a1][b1] && q2.leq[a2][b2];
  out.zero = id(q1.zero, q2.zero);
  out.one = id(q1.one, q2.one);
  fill_tables(out);
  return finish_construction(std::move(out));
}

OcprSystem ocpr_build(const PreRoughAlgebra& q, const FilterRecord& k) {
  if (!k.l_filter) throw std::invalid_argument("an OCPR system needs an L-filter");
  const std::size_t n = q.size();
  const std::vector<bool> in = membership(n, k.elements);

  OcprSystem sys;
  sys.base = q;
  sys.k = k.elements;
  sys.cup.assign(n, std::vector<std::optional<std::size_t>>(n));
  sys.cap.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto j = q.join[a][b];
      if (j && in[*j]) sys.cup[a][b] = j;
      const auto m = q.meet[a][b];
      if (m && in[*m]) sys.cap[a][b] = m;
    }

  sys.lhd.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      sys.lhd[a][b] = a == b || (sys.cap[a][b] && *sys.cap[a][b] == a) ||
                      (sys.cup[a][b] && *sys.cup[a][b] == b);

  sys.partial_order = true;
  for (std::size_t a = 0; a < n; ++a) {
    if (!sys.lhd[a][a]) sys.partial_order = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && sys.lhd[a][b] && sys.lhd[b][a]) sys.partial_order = false;
      for (std::size_t c = 0; c < n; ++c)
        if (sys.lhd[a][b] && sys.lhd[b][c] && !sys.lhd[a][c]) sys.partial_order = false;
    }
  }

  sys.lu_compatible = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (sys.lhd[a][b] && (!sys.lhd[q.L[a]][q.L[b]] || !sys.lhd[q.U[a]][q.U[b]]))
        sys.lu_compatible = false;

  sys.k_restriction_matches = true;
  for (std::size_t a : k.elements)
    for (std::size_t b : k.elements)
      if (sys.lhd[a][b] != static_cast<bool>(q.leq[a][b])) sys.k_restriction_matches = false;

  for (std::size_t x = 0; x < n && !sys.absorption_failure; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto inner = sys.cap[y][x];
      const auto whole = inner ? sys.cup[x][*inner] : std::optional<std::size_t>{};
      if (!inner || !whole || *whole != x) {
        sys.absorption_failure = std::make_pair(x, y);
        break;
      }
    }
  return sys;
}

EmbeddingReport cofine_embedding(const PreRoughAlgebra& q, const FilterRecord& k) {
  if (!k.l_filter || !k.cofine)
    throw std::invalid_argument("the forgetful embedding needs a cofine L-filter");
  const std::size_t n = q.size();
  const std::vector<bool> in = membership(n, k.elements);

  EmbeddingReport rep;
  rep.identity_case = k.elements.size() == n;
  rep.preserves_order = true;
  rep.preserves_l = true;
  rep.preserves_u = true;
  rep.preserves_join = true;
  rep.preserves_meet_where_defined = true;
  rep.neg_closed = true;
  for (std::size_t a : k.elements) {
    if (!in[q.L[a]]) rep.preserves_l = false;
    if (!in[q.U[a]]) rep.preserves_u = false;
    if (!in[q.neg[a]]) {
      rep.neg_closed = false;
      if (!rep.neg_drop_witness) rep.neg_drop_witness = a;
    }
    for (std::size_t b : k.elements) {
      const auto j = q.join[a][b];
      if (!j || !in[*j]) rep.preserves_join = false;
      const auto m = q.meet[a][b];
      if (m && in[*m] && bound_of(q.leq, a, b, false) != m)
        rep.preserves_meet_where_defined = false;
    }
  }
  rep.closed_morphism = rep.preserves_order && rep.preserves_l && rep.preserves_u &&
                        rep.preserves_join && rep.preserves_meet_where_defined;
  return rep;
}

}  // namespace rys
