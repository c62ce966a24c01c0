#include "rys/comparison.hpp"

#include <algorithm>
#include <stdexcept>

namespace rys {

namespace {

void require_parallel(const Correspondence& f, const Correspondence& h) {
  if (f.source != h.source || f.target != h.target)
    throw std::invalid_argument("correspondences must share source and target");
}

std::vector<Subset> admissible_bases(const Rys& source) {
  AtomStructure atoms = atom_structure(source);
  std::vector<Subset> out;
  for (std::size_t idx : atoms.x_c) out.push_back(source.carrier[idx]);
  return out;
}

// The defining inclusions at one z for a fixed witness.
bool holds_at(const Correspondence& f, const Correspondence& h, ComparisonKind kind,
              const Subset& z, std::size_t i, std::size_t j) {
  const Rys& tgt = *f.target;
  Subset fz = f.image(z);
  Subset hz = h.image(z);
  auto leq = [&](const Subset& a, const Subset& b) { return tgt.parthood(a, b); };
  switch (kind) {
    case ComparisonKind::ThetaLu:
      return leq(tgt.approx[i].lower(hz), fz) && leq(fz, tgt.approx[i].upper(hz));
    case ComparisonKind::ThetaUu:
      return leq(tgt.approx[i].upper(hz), fz) && leq(fz, tgt.approx[j].upper(hz));
    case ComparisonKind::OmegaL:
      return leq(tgt.approx[i].lower(hz), fz);
    case ComparisonKind::OmegaU:
      return leq(tgt.approx[i].upper(hz), fz);
    case ComparisonKind::OL:
      return leq(fz, tgt.approx[i].lower(hz));
    case ComparisonKind::OU:
      return leq(fz, tgt.approx[i].upper(hz));
  }
  return false;
}

}  // namespace

std::string to_string(ComparisonKind kind) {
  switch (kind) {
    case ComparisonKind::ThetaLu: return "theta-lu";
    case ComparisonKind::ThetaUu: return "theta-uu";
    case ComparisonKind::OmegaL: return "omega-l";
    case ComparisonKind::OmegaU: return "omega-u";
    case ComparisonKind::OL: return "o-l";
    case ComparisonKind::OU: return "o-u";
  }
  return "theta-lu";
}

ComparisonKind comparison_kind_from_string(const std::string& s) {
  if (s == "theta-lu") return ComparisonKind::ThetaLu;
  if (s == "theta-uu") return ComparisonKind::ThetaUu;
  if (s == "omega-l") return ComparisonKind::OmegaL;
  if (s == "omega-u") return ComparisonKind::OmegaU;
  if (s == "o-l") return ComparisonKind::OL;
  if (s == "o-u") return ComparisonKind::OU;
  throw std::invalid_argument("unknown comparison kind: " + s);
}

bool check_witness(const Correspondence& f, const Correspondence& h, ComparisonKind kind,
                   const ComparisonWitness& witness) {
  require_parallel(f, h);
  const Rys& src = *f.source;
  const std::size_t j = witness.j.value_or(witness.i);
  for (const auto& z : src.carrier) {
    if (!src.parthood(witness.z0, z)) continue;
    if (!holds_at(f, h, kind, z, witness.i, j)) return false;
  }
  return true;
}

ComparisonVerdict related(const Correspondence& f, const Correspondence& h,
                          ComparisonKind kind) {
  require_parallel(f, h);
  ComparisonVerdict verdict;
  verdict.kind = kind;

  std::vector<Subset> bases = admissible_bases(*f.source);
  if (bases.empty()) {
    verdict.reason = "no admissible z0";
    return verdict;
  }

  const std::size_t npairs = f.target->approx.size();
  const bool two_indices = kind == ComparisonKind::ThetaUu;
  for (const auto& z0 : bases)
    for (std::size_t i = 0; i < npairs; ++i)
      for (std::size_t j = 0; j < (two_indices ? npairs : 1); ++j) {
        ComparisonWitness w{z0, i, std::nullopt};
        if (two_indices) w.j = j;
        if (check_witness(f, h, kind, w)) {
          verdict.holds = true;
          verdict.witness = w;
          return verdict;
        }
      }
  verdict.reason = "no witness over X_c";
  return verdict;
}

bool symmetric_theta(const Correspondence& f, const Correspondence& h) {
  return related(f, h, ComparisonKind::ThetaLu).holds &&
         related(h, f, ComparisonKind::ThetaLu).holds;
}

MuClass mu_class(const Correspondence& h, MuFlavor flavor,
                 const std::vector<Correspondence>& pool) {
  ClassificationCertificate cert = classify(h);
  const bool ok = flavor == MuFlavor::Morphisms ? cert.is_morphism : cert.is_closed_morphism;
  if (!ok) throw std::invalid_argument("mu-class base must be a morphism of the flavor");

  MuClass out;
  out.base = h;
  out.flavor = flavor;
  for (const auto& c : pool) {
    require_parallel(c, h);
    ClassificationCertificate cc = classify(c);
    const bool morph =
        flavor == MuFlavor::Morphisms ? cc.is_morphism : cc.is_closed_morphism;
    if (morph && related(c, h, ComparisonKind::ThetaLu).holds) out.members.push_back(c);
  }
  return out;
}

namespace {

MuOpResult checked_member(const MuClass& cls, Correspondence candidate) {
  ClassificationCertificate cert = classify(candidate);
  const bool morph = cls.flavor == MuFlavor::Morphisms ? cert.is_morphism
                                                       : cert.is_closed_morphism;
  if (!morph)
    return {std::nullopt, candidate.name + " is not a morphism"};
  if (!related(candidate, cls.base, ComparisonKind::ThetaLu).holds)
    return {std::nullopt, candidate.name + " is not theta-lu related to the base"};
  return {std::move(candidate), "member"};
}

}  // namespace

MuOpResult mu_plus(const MuClass& cls, const Correspondence& f, const Correspondence& g) {
  require_parallel(f, cls.base);
  require_parallel(g, cls.base);
  Correspondence out;
  out.source = f.source;
  out.target = f.target;
  out.name = "(" + f.name + " + " + g.name + ")";
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    Subset v = f.target->oplus(f.target->element(f.table[i]), g.target->element(g.table[i]));
    out.table.push_back(f.target->carrier_index(v));
  }
  return checked_member(cls, std::move(out));
}

MuOpResult mu_cdot(const MuClass& cls, const Correspondence& f, const Correspondence& g) {
  require_parallel(f, cls.base);
  require_parallel(g, cls.base);
  Correspondence out;
  out.source = f.source;
  out.target = f.target;
  out.name = "(" + f.name + " . " + g.name + ")";
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    Subset v = f.target->odot(f.target->element(f.table[i]), g.target->element(g.table[i]));
    out.table.push_back(f.target->carrier_index(v));
  }
  return checked_member(cls, std::move(out));
}

MuOpResult mu_iota(const MuClass& cls) {
  Correspondence out;
  out.source = cls.base.source;
  out.target = cls.base.target;
  out.name = "iota";
  const std::size_t top = cls.base.target->carrier_index(cls.base.target->top);
  out.table.assign(cls.base.source->carrier.size(), top);
  return checked_member(cls, std::move(out));
}

ClassOrder class_order(const MuClass& cls) {
  const std::size_t n = cls.members.size();
  ClassOrder out;
  out.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.leq[i][j] = pointwise_leq(cls.members[i], cls.members[j]);

  out.member_class.assign(n, 0);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size() && !placed; ++c) {
      const std::size_t r = reps[c];
      if (out.leq[i][r] && out.leq[r][i]) {
        out.member_class[i] = c;
        out.classes[c].push_back(i);
        placed = true;
      }
    }
    if (!placed) {
      out.member_class[i] = reps.size();
      reps.push_back(i);
      out.classes.push_back({i});
    }
  }

  const std::size_t q = reps.size();
  out.quotient_leq.assign(q, std::vector<bool>(q, false));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      out.quotient_leq[a][b] = out.leq[reps[a]][reps[b]];
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      if (a != b && out.quotient_leq[a][b] && out.quotient_leq[b][a])
        out.quotient_antisymmetric = false;
  return out;
}

FilterAgreement filter_agreement(const Correspondence& f, const Correspondence& g,
                                 const Subset& z0) {
  require_parallel(f, g);
  if (f.source != f.target)
    throw std::invalid_argument("filter agreement is about self-maps");
  const Rys& sys = *f.source;
  if (!sys.granulation.is_partition())
    throw std::invalid_argument("filter agreement needs a classical system");

  std::vector<Subset> bases = admissible_bases(sys);
  if (std::find(bases.begin(), bases.end(), z0) == bases.end())
    throw std::invalid_argument("z0 must avoid coatoms and bounds");

  FilterAgreement out{z0};
  bool witnessed = false;
  for (std::size_t i = 0; i < sys.approx.size() && !witnessed; ++i) {
    if (check_witness(g, f, ComparisonKind::ThetaLu, ComparisonWitness{z0, i, {}})) {
      out.approx_index = i;
      witnessed = true;
    }
  }
  if (!witnessed)
    throw std::invalid_argument("z0 does not witness g theta-lu related to f");

  out.f_smooth_morphism = in_family(f, Family{FamilyBase::Snc, true, true});
  out.g_subnatural = in_family(g, Family{FamilyBase::Snc, false, false});

  for (const auto& x : sys.carrier)
    if (sys.parthood(z0, x)) out.filter.push_back(x);
  for (const auto& d : definite_elements(sys.granulation, DefiniteKind::Both)) {
    if (!sys.parthood(z0, d)) continue;
    out.checked.push_back(d);
    Subset fd = f.image(d);
    Subset gd = g.image(d);
    if (!(fd == gd)) {
      out.agree = false;
      out.mismatches.push_back("at " + d.to_string() + ": f gives " + fd.to_string() +
                               ", g gives " + gd.to_string());
    }
  }
  return out;
}

namespace {

// oplus/odot must be the join/meet of the parthood order.
void require_lattice(const Rys& sys, const char* side) {
  for (const auto& a : sys.carrier)
    for (const auto& b : sys.carrier) {
      Subset join = sys.oplus(a, b);
      Subset meet = sys.odot(a, b);
      bool join_ok = sys.parthood(a, join) && sys.parthood(b, join);
      bool meet_ok = sys.parthood(meet, a) && sys.parthood(meet, b);
      if (join_ok && meet_ok)
        for (const auto& c : sys.carrier) {
          if (sys.parthood(a, c) && sys.parthood(b, c)) join_ok &= sys.parthood(join, c);
          if (sys.parthood(c, a) && sys.parthood(c, b)) meet_ok &= sys.parthood(c, meet);
        }
      if (!join_ok || !meet_ok)
        throw std::invalid_argument(std::string(side) +
                                    " operations do not match a lattice order");
    }
}

}  // namespace

LatticeOpReport lattice_pointwise_ops(const Correspondence& f,
                                      const std::vector<Correspondence>& pool,
                                      bool require_smooth) {
  require_lattice(*f.source, "source");
  require_lattice(*f.target, "target");

  const Family family{FamilyBase::Snc, require_smooth, true};
  LatticeOpReport out;
  std::vector<Correspondence> members;
  std::vector<ComparisonWitness> witnesses;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    require_parallel(pool[i], f);
    if (!in_family(pool[i], family)) continue;
    ComparisonVerdict v = related(pool[i], f, ComparisonKind::ThetaLu);
    if (!v.holds) continue;
    out.member_indices.push_back(i);
    members.push_back(pool[i]);
    witnesses.push_back(*v.witness);
  }

  std::vector<Subset> bases = admissible_bases(*f.source);
  auto verify = [&](Correspondence cand, const std::string& op, std::size_t gi,
                    std::size_t hi, const std::optional<Subset>& quick) {
    LatticeOpEntry e;
    e.op = op;
    e.g = gi;
    e.h = hi;
    if (quick &&
        std::find(bases.begin(), bases.end(), *quick) != bases.end() &&
        check_witness(cand, f, ComparisonKind::ThetaLu,
                      ComparisonWitness{*quick, witnesses[gi].i, {}})) {
      e.sandwiched = true;
      e.joint_witness_used = true;
      e.note = "witness " + quick->to_string();
    } else {
      ComparisonVerdict v = related(cand, f, ComparisonKind::ThetaLu);
      e.sandwiched = v.holds;
      e.note = v.holds ? "fallback witness " + v.witness->z0.to_string()
                       : "no witness over X_c";
    }
    e.family_member = in_family(cand, family);
    out.all_sandwiched = out.all_sandwiched && e.sandwiched;
    out.all_family_members = out.all_family_members && e.family_member;
    out.entries.push_back(std::move(e));
  };

  const Rys& tgt = *f.target;
  for (std::size_t gi = 0; gi < members.size(); ++gi) {
    for (std::size_t hi = gi; hi < members.size(); ++hi) {
      Subset joint = f.source->oplus(witnesses[gi].z0, witnesses[hi].z0);
      Correspondence join, meet;
      join.source = meet.source = f.source;
      join.target = meet.target = f.target;
      join.name = "(" + members[gi].name + " | " + members[hi].name + ")";
      meet.name = "(" + members[gi].name + " & " + members[hi].name + ")";
      for (std::size_t x = 0; x < members[gi].table.size(); ++x) {
        Subset a = tgt.element(members[gi].table[x]);
        Subset b = tgt.element(members[hi].table[x]);
        join.table.push_back(tgt.carrier_index(tgt.oplus(a, b)));
        meet.table.push_back(tgt.carrier_index(tgt.odot(a, b)));
      }
      verify(join, "oplus", gi, hi, joint);
      verify(meet, "odot", gi, hi, joint);
    }
    Correspondence lo, hi_map;
    lo.source = hi_map.source = f.source;
    lo.target = hi_map.target = f.target;
    lo.name = members[gi].name + "^L";
    hi_map.name = members[gi].name + "^U";
    for (std::size_t x = 0; x < members[gi].table.size(); ++x) {
      Subset v = tgt.element(members[gi].table[x]);
      lo.table.push_back(tgt.carrier_index(tgt.approx[0].lower(v)));
      hi_map.table.push_back(tgt.carrier_index(tgt.approx[0].upper(v)));
    }
    verify(lo, "lower", gi, gi, witnesses[gi].z0);
    verify(hi_map, "upper", gi, gi, witnesses[gi].z0);
  }
  return out;
}

}  // namespace rys
