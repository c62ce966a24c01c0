#include "rys/correspondence.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace rys {

std::string Term::render(const std::vector<std::string>& seed_names) const {
  switch (kind) {
    case Kind::Seed:
      return seed_names.at(seed);
    case Kind::Oplus:
      return "(" + left->render(seed_names) + " | " + right->render(seed_names) + ")";
    case Kind::Odot:
      return "(" + left->render(seed_names) + " & " + right->render(seed_names) + ")";
    case Kind::Complement:
      return "~" + left->render(seed_names);
  }
  return "";
}

TermOps signature_ops(const Rys& target) {
  return TermOps{true, true, target.complement_op.has_value()};
}

bool GeneratedSubalgebra::contains(const Subset& s) const { return term_for(s) != nullptr; }

const Term* GeneratedSubalgebra::term_for(const Subset& s) const {
  for (const auto& e : elements)
    if (e.value == s) return &e.term;
  return nullptr;
}

std::string GeneratedSubalgebra::describe(const Subset& s) const {
  const Term* t = term_for(s);
  return t ? t->render(seed_names) : std::string();
}

GeneratedSubalgebra generated_subalgebra(const Rys& target, const std::vector<Subset>& seeds,
                                         TermOps ops, std::vector<std::string> seed_names) {
  if (ops.use_complement && !target.complement_op)
    throw std::invalid_argument("complement requested but the target defines none");
  if (seed_names.empty())
    for (const auto& s : seeds) seed_names.push_back(s.to_string());
  if (seed_names.size() != seeds.size())
    throw std::invalid_argument("seed name list does not match the seeds");

  GeneratedSubalgebra out;
  out.seed_names = std::move(seed_names);
  std::map<std::uint64_t, std::size_t> index;
  auto add = [&](const Subset& v, Term t) {
    if (index.count(v.mask())) return false;
    index.emplace(v.mask(), out.elements.size());
    out.elements.push_back({v, std::move(t)});
    return true;
  };
  auto wrap = [](const Term& t) { return std::make_shared<const Term>(t); };

  for (std::size_t i = 0; i < seeds.size(); ++i)
    add(seeds[i], Term{Term::Kind::Seed, i, nullptr, nullptr});

  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = out.elements.size();
    for (std::size_t i = 0; i < n; ++i) {
      // Copy before add(): push_back may reallocate the element vector.
      const Subset av = out.elements[i].value;
      const auto at = wrap(out.elements[i].term);
      if (ops.use_complement)
        grew |= add((*target.complement_op)(av),
                    Term{Term::Kind::Complement, 0, at, nullptr});
      for (std::size_t j = 0; j < n; ++j) {
        const Subset bv = out.elements[j].value;
        const auto bt = wrap(out.elements[j].term);
        if (ops.use_oplus)
          grew |= add(target.oplus(av, bv), Term{Term::Kind::Oplus, 0, at, bt});
        if (ops.use_odot)
          grew |= add(target.odot(av, bv), Term{Term::Kind::Odot, 0, at, bt});
      }
    }
  }
  return out;
}

Subset Correspondence::image(const Subset& s) const {
  return target->element(table.at(source->carrier_index(s)));
}

std::string to_string(ExtensionPolicy policy) {
  switch (policy) {
    case ExtensionPolicy::ExplicitTotal: return "explicit-total";
    case ExtensionPolicy::OplusExtension: return "oplus-extension";
    case ExtensionPolicy::IdentityElsewhere: return "identity-elsewhere";
  }
  return "explicit-total";
}

ExtensionPolicy extension_policy_from_string(const std::string& s) {
  if (s == "explicit-total") return ExtensionPolicy::ExplicitTotal;
  if (s == "oplus-extension") return ExtensionPolicy::OplusExtension;
  if (s == "identity-elsewhere") return ExtensionPolicy::IdentityElsewhere;
  throw std::invalid_argument("unknown extension policy: " + s);
}

Correspondence make_correspondence(RysPtr source, RysPtr target,
                                   const std::vector<std::pair<Subset, Subset>>& rows,
                                   ExtensionPolicy policy, std::string name) {
  const std::size_t n = source->carrier.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(n, kUnset);
  for (const auto& [from, to] : rows) {
    std::size_t i = source->carrier_index(from);
    std::size_t j = target->carrier_index(to);
    if (table[i] != kUnset && table[i] != j)
      throw std::invalid_argument("conflicting rows for " + from.to_string());
    table[i] = j;
  }

  switch (policy) {
    case ExtensionPolicy::ExplicitTotal:
      for (std::size_t i = 0; i < n; ++i)
        if (table[i] == kUnset)
          throw std::invalid_argument("explicit-total map misses " +
                                      source->element(i).to_string());
      break;
    case ExtensionPolicy::OplusExtension: {
      if (!target->bottom)
        throw std::invalid_argument("oplus-extension needs a bottom in the target");
      std::vector<std::size_t> singleton_image(source->universe->size(), kUnset);
      for (std::size_t e = 0; e < source->universe->size(); ++e) {
        std::size_t i = source->carrier_index(Subset::singleton(source->universe, e));
        if (table[i] == kUnset)
          throw std::invalid_argument("oplus-extension misses the image of {" +
                                      source->universe->name(e) + "}");
        singleton_image[e] = table[i];
      }
      for (std::size_t i = 0; i < n; ++i) {
        Subset acc = *target->bottom;
        for (std::size_t e = 0; e < source->universe->size(); ++e)
          if (source->element(i).contains(e))
            acc = target->oplus(acc, target->element(singleton_image[e]));
        std::size_t j = target->carrier_index(acc);
        if (table[i] != kUnset && table[i] != j)
          throw std::invalid_argument("row for " + source->element(i).to_string() +
                                      " conflicts with its oplus-extension");
        table[i] = j;
      }
      break;
    }
    case ExtensionPolicy::IdentityElsewhere: {
      if (!source->universe->same_elements(*target->universe))
        throw std::invalid_argument("identity-elsewhere needs matching universes");
      for (std::size_t i = 0; i < n; ++i)
        if (table[i] == kUnset)
          table[i] = target->carrier_index(Subset(target->universe, source->element(i).mask()));
      break;
    }
  }
  return Correspondence{std::move(source), std::move(target), std::move(table),
                        std::move(name)};
}

std::vector<Granule> seeds_for(const Correspondence& c, std::size_t source_element) {
  if (source_element >= c.source->universe->size())
    throw std::invalid_argument("source element out of range");
  Subset img = c.image(Subset::singleton(c.source->universe, source_element));
  std::vector<Granule> out;
  const bool partition = c.target->granulation.is_partition();
  for (const auto& g : c.target->granulation.granules()) {
    if (partition ? g.members.meets(img)
                  : (g.generator.has_value() && img.contains(*g.generator)))
      out.push_back(g);
  }
  return out;
}

namespace {

// Distinct-members granules must have distinct images; duplicated members
// (neighbourhood granulations keep them) are the same set and do not count.
bool injective_on_granules(const Correspondence& c) {
  const auto& gs = c.source->granulation.granules();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (gs[i].members == gs[j].members) continue;
      if (c.image(gs[i].members) == c.image(gs[j].members)) return false;
    }
  return true;
}

std::optional<MorphismWitness> morphism_failure(const Correspondence& c, const BinaryOp& op_src,
                                                const BinaryOp& op_tgt, const char* symbol) {
  const auto& carrier = c.source->carrier;
  for (std::size_t a = 0; a < carrier.size(); ++a)
    for (std::size_t b = a; b < carrier.size(); ++b) {
      Subset combined = c.image(op_src(carrier[a], carrier[b]));
      Subset pointwise = op_tgt(c.image(carrier[a]), c.image(carrier[b]));
      if (!(combined == pointwise)) {
        return MorphismWitness{
            a, b,
            "phi(" + carrier[a].to_string() + " " + symbol + " " + carrier[b].to_string() +
                ") = " + combined.to_string() + " but pointwise " + symbol + " gives " +
                pointwise.to_string()};
      }
    }
  return std::nullopt;
}

Subset class_of(const Rys& sys, std::size_t element) {
  for (const auto& g : sys.granulation.granules())
    if (g.members.contains(element)) return g.members;
  throw std::invalid_argument("element lies in no granule");
}

// Union / intersection of the target blocks meeting s; an empty block family
// makes the union empty and the intersection the whole universe.
Subset cup_beta(const Rys& target, const Subset& s) {
  Subset acc = Subset::empty_set(target.universe);
  for (const auto& g : target.granulation.granules())
    if (g.members.meets(s)) acc = acc.set_union(g.members);
  return acc;
}

Subset cap_beta(const Rys& target, const Subset& s) {
  Subset acc = Subset::full_set(target.universe);
  bool any = false;
  for (const auto& g : target.granulation.granules())
    if (g.members.meets(s)) {
      acc = acc.set_intersection(g.members);
      any = true;
    }
  return any ? acc : Subset::full_set(target.universe);
}

std::optional<std::string> partition_case_impl(const Correspondence& c,
                                               std::vector<std::string>* all);

}  // namespace

ClassificationCertificate classify(const Correspondence& c) {
  ClassificationCertificate cert;
  const Rys& src = *c.source;
  const Rys& tgt = *c.target;

  std::set<std::size_t> images(c.table.begin(), c.table.end());
  cert.injective = images.size() == c.table.size();
  cert.injective_on_granules = injective_on_granules(c);

  TermOps sig = signature_ops(tgt);
  std::vector<Subset> all_granules;
  std::vector<std::string> granule_names;
  for (const auto& g : tgt.granulation.granules()) {
    all_granules.push_back(g.members);
    granule_names.push_back(g.name);
  }
  GeneratedSubalgebra over_all = generated_subalgebra(tgt, all_granules, sig, granule_names);

  cert.granule_images_term_representable = true;
  cert.seeds_singleton_generated = true;
  for (const auto& g : src.granulation.granules()) {
    Subset img = c.image(g.members);
    std::string witness = over_all.describe(img);
    if (witness.empty()) {
      cert.granule_images_term_representable = false;
      witness = "image " + img.to_string() + " has no term over the target granules";
    }
    cert.granule_witnesses[g.name] = witness;

    // Condition 3: the same image over the granules generated by phi({x}).
    // Granules without a recorded generator pool the seeds of their members.
    std::vector<Subset> seeds;
    std::vector<std::string> seed_names;
    auto add_seeds = [&](std::size_t element) {
      for (const auto& s : seeds_for(c, element)) {
        bool dup = false;
        for (const auto& have : seeds) dup = dup || have == s.members;
        if (!dup) {
          seeds.push_back(s.members);
          seed_names.push_back(s.name);
        }
      }
    };
    if (g.generator) {
      add_seeds(*g.generator);
    } else {
      for (std::size_t e = 0; e < src.universe->size(); ++e)
        if (g.members.contains(e)) add_seeds(e);
    }
    if (!generated_subalgebra(tgt, seeds, sig, seed_names).contains(img))
      cert.seeds_singleton_generated = false;
  }

  cert.is_pon = cert.granule_images_term_representable;
  cert.is_pnc = cert.is_pon && cert.injective_on_granules;
  cert.is_snc =
      cert.injective && cert.granule_images_term_representable && cert.seeds_singleton_generated;

  cert.oplus_witness = morphism_failure(c, src.oplus, tgt.oplus, "|");
  cert.odot_witness = morphism_failure(c, src.odot, tgt.odot, "&");
  cert.is_oplus_morphism = !cert.oplus_witness.has_value();
  cert.is_odot_morphism = !cert.odot_witness.has_value();
  cert.is_morphism = cert.is_oplus_morphism && cert.is_odot_morphism;
  // All operations in this workbench are total, so the closed variant
  // imposes nothing extra.
  cert.is_closed_morphism = cert.is_morphism;

  cert.smooth = true;
  for (const auto& b : definite_elements(src.granulation, DefiniteKind::Both)) {
    Subset img = c.image(b);
    bool definite = false;
    for (const auto& ap : tgt.approx)
      if (ap.lower(img) == img && ap.upper(img) == img) {
        definite = true;
        break;
      }
    if (!definite) {
      cert.smooth = false;
      break;
    }
  }

  if (src.granulation.is_partition() && tgt.granulation.is_partition() && cert.is_snc)
    cert.partition_case = partition_case_impl(c, &cert.partition_case_all);
  if (src.granulation.is_partition() && tgt.granulation.style() == GranulationStyle::Block)
    cert.block_case = block_case(c, false, &cert.block_case_all);
  return cert;
}

bool trivial_on_granules(const Correspondence& c) {
  const auto& granules = c.source->granulation.granules();
  if (granules.empty()) return true;
  Subset first = c.image(granules[0].members);
  bool bound = first == c.target->top ||
               (c.target->bottom.has_value() && first == *c.target->bottom);
  if (!bound) return false;
  for (const auto& g : granules)
    if (!(c.image(g.members) == first)) return false;
  return true;
}

namespace {

std::optional<std::string> partition_case_impl(const Correspondence& c,
                                               std::vector<std::string>* all) {
  const Rys& src = *c.source;
  const Rys& tgt = *c.target;
  auto upper2 = [&](const Subset& s) { return upper_approx(tgt.granulation, s); };
  auto compl2 = [&](const Subset& s) { return (*tgt.complement_op)(s); };
  const bool has_compl = tgt.complement_op.has_value();
  const std::size_t n = src.universe->size();

  auto holds = [&](int variant) {
    for (std::size_t x = 0; x < n; ++x) {
      Subset lhs = c.image(class_of(src, x));
      Subset join = Subset::empty_set(tgt.universe);
      for (std::size_t y = 0; y < n; ++y)
        if (class_of(src, x).contains(y))
          join = join.set_union(upper2(c.image(Subset::singleton(src.universe, y))));
      Subset rhs = lhs;
      switch (variant) {
        case 1: rhs = upper2(c.image(Subset::singleton(src.universe, x))); break;
        case 2: rhs = compl2(upper2(c.image(Subset::singleton(src.universe, x)))); break;
        case 3: rhs = join; break;
        case 4: rhs = compl2(join); break;
      }
      if (!(lhs == rhs)) return false;
    }
    return true;
  };

  std::optional<std::string> first;
  for (int v = 1; v <= 4; ++v) {
    if ((v == 2 || v == 4) && !has_compl) continue;
    if (holds(v)) {
      std::string label = "B" + std::to_string(v);
      if (!first) first = label;
      if (all) all->push_back(label);
    }
  }
  return first;
}

}  // namespace

std::optional<std::string> partition_case(const Correspondence& c,
                                          std::vector<std::string>* all) {
  if (!c.source->granulation.is_partition() || !c.target->granulation.is_partition())
    throw std::invalid_argument("partition cases need partitions on both sides");
  if (!classify(c).is_snc)
    throw std::invalid_argument("partition cases are defined for SNCs");
  return partition_case_impl(c, all);
}

std::optional<std::string> block_case(const Correspondence& c, bool inner_y,
                                      std::vector<std::string>* all) {
  const Rys& src = *c.source;
  const Rys& tgt = *c.target;
  if (!src.granulation.is_partition() ||
      tgt.granulation.style() != GranulationStyle::Block)
    throw std::invalid_argument("block cases need a partition source and block target");

  auto compl2 = [&](const Subset& s) { return (*tgt.complement_op)(s); };
  const bool has_compl = tgt.complement_op.has_value();
  const std::size_t n = src.universe->size();
  auto phi_singleton = [&](std::size_t e) {
    return c.image(Subset::singleton(src.universe, e));
  };

  auto holds = [&](int variant) {
    for (std::size_t x = 0; x < n; ++x) {
      Subset cls = class_of(src, x);
      Subset lhs = c.image(cls);
      // Iterated forms quantify y over [x]; the printed theorem keeps
      // phi({x}) inside, the variant reading uses phi({y}).
      auto inner = [&](std::size_t y) { return phi_singleton(inner_y ? y : x); };
      Subset join_cup = Subset::empty_set(tgt.universe);
      Subset meet_cup = Subset::full_set(tgt.universe);
      Subset join_cap = Subset::empty_set(tgt.universe);
      for (std::size_t y = 0; y < n; ++y) {
        if (!cls.contains(y)) continue;
        join_cup = join_cup.set_union(cup_beta(tgt, inner(y)));
        meet_cup = meet_cup.set_intersection(cup_beta(tgt, inner(y)));
        join_cap = join_cap.set_union(cap_beta(tgt, inner(y)));
      }
      Subset rhs = lhs;
      switch (variant) {
        case 1: rhs = cup_beta(tgt, phi_singleton(x)); break;
        case 2: rhs = compl2(cup_beta(tgt, phi_singleton(x))); break;
        case 3: rhs = cap_beta(tgt, phi_singleton(x)); break;
        case 4: rhs = compl2(cap_beta(tgt, phi_singleton(x))); break;
        case 5: rhs = join_cup; break;
        case 6: rhs = compl2(join_cup); break;
        case 7: rhs = meet_cup; break;
        case 8: rhs = compl2(join_cap); break;
      }
      if (!(lhs == rhs)) return false;
    }
    return true;
  };

  std::optional<std::string> first;
  for (int v = 1; v <= 8; ++v) {
    if ((v == 2 || v == 4 || v == 6 || v == 8) && !has_compl) continue;
    if (holds(v)) {
      std::string label = "C" + std::to_string(v);
      if (!first) first = label;
      if (all) all->push_back(label);
    }
  }
  return first;
}

ApproxInclusionReport approx_inclusion_report(const Correspondence& c) {
  const Rys& src = *c.source;
  const Rys& tgt = *c.target;
  if (!src.granulation.is_partition())
    throw std::invalid_argument("approx inclusion report needs a classical source");
  if (tgt.granulation.style() != GranulationStyle::Block &&
      tgt.granulation.style() != GranulationStyle::SuccessorNeighborhood)
    throw std::invalid_argument("approx inclusion report needs a tolerance target");

  ApproxInclusionReport out;
  for (const auto& tp : tgt.approx) {
    ApproxInclusionReport::PerPair row{true, true, true, ""};
    for (const auto& sp : src.approx)
      for (const auto& a : src.carrier) {
        Subset img = c.image(a);
        Subset low_src = c.image(sp.lower(a));
        Subset up_src = c.image(sp.upper(a));
        if (!low_src.subset_of(tp.lower(img))) {
          row.lower_inclusion = false;
          if (row.detail.empty())
            row.detail = "phi(" + a.to_string() + "^l) exceeds the target lower approximation";
        }
        if (!up_src.subset_of(tp.upper(img))) {
          row.upper_inclusion = false;
          if (row.detail.empty())
            row.detail = "phi(" + a.to_string() + "^u) exceeds the target upper approximation";
        }
        if (!(low_src == tp.lower(img)) || !(up_src == tp.upper(img))) row.equality = false;
      }
    out.pairs.push_back(std::move(row));
  }

  ClassificationCertificate cert = classify(c);
  bool granule_condition = true;
  for (std::size_t x = 0; x < src.universe->size(); ++x) {
    Subset lhs = c.image(class_of(src, x));
    Subset rhs = cup_beta(tgt, c.image(Subset::singleton(src.universe, x)));
    if (!(lhs == rhs)) {
      granule_condition = false;
      break;
    }
  }
  out.hypothesis = cert.is_snc && cert.is_oplus_morphism && granule_condition;
  out.zero_one_preserving_morphism =
      cert.is_morphism && src.bottom.has_value() && tgt.bottom.has_value() &&
      c.image(*src.bottom) == *tgt.bottom && c.image(src.top) == tgt.top;
  return out;
}

RepresentabilityReport definite_representability(const Correspondence& c) {
  const Rys& src = *c.source;
  const Rys& tgt = *c.target;
  if (!src.granulation.is_partition())
    throw std::invalid_argument("definite representability needs a classical source");

  std::vector<Subset> granules;
  std::vector<std::string> names;
  for (const auto& g : tgt.granulation.granules()) {
    granules.push_back(g.members);
    names.push_back(g.name);
  }
  GeneratedSubalgebra plain =
      generated_subalgebra(tgt, granules, TermOps{true, true, false}, names);
  GeneratedSubalgebra with_sig = generated_subalgebra(tgt, granules, signature_ops(tgt), names);
  GeneratedSubalgebra unions =
      generated_subalgebra(tgt, granules, TermOps{true, false, false}, names);

  RepresentabilityReport out;
  out.ok = out.ok_with_complement = out.pure_union_ok = true;
  for (const auto& b : definite_elements(src.granulation, DefiniteKind::Both)) {
    RepresentabilityReport::Entry e{b, c.image(b), false, false, false, ""};
    const bool image_is_bottom = tgt.bottom.has_value() && e.image == *tgt.bottom;
    // The empty join representing bottom needs no granules at all.
    e.representable = plain.contains(e.image) || image_is_bottom;
    e.with_complement = with_sig.contains(e.image) || image_is_bottom;
    e.pure_union = unions.contains(e.image) || image_is_bottom;
    e.term = plain.describe(e.image);
    if (e.term.empty()) e.term = with_sig.describe(e.image);
    if (e.term.empty() && image_is_bottom) e.term = "(empty union)";
    out.ok = out.ok && e.representable;
    out.ok_with_complement = out.ok_with_complement && e.with_complement;
    out.pure_union_ok = out.pure_union_ok && e.pure_union;
    out.entries.push_back(std::move(e));
  }
  return out;
}

AlphaBetaBounds alpha_beta_bounds(const Correspondence& c) {
  if (!c.source->granulation.is_partition() || !c.target->granulation.is_partition())
    throw std::invalid_argument("alpha/beta bounds need classical systems");
  // The worked collapse map preserves joins but not meets, so joins are the
  // operative requirement here.
  ClassificationCertificate cert = classify(c);
  if (!cert.is_oplus_morphism)
    throw std::invalid_argument("alpha/beta bounds need a join morphism");

  AlphaBetaBounds out;
  bool have_ratio = false;
  const auto& carrier = c.source->carrier;
  for (std::size_t i = 0; i < carrier.size(); ++i)
    for (std::size_t j = 0; j < carrier.size(); ++j) {
      Ratio k1 = rough_inclusion_k(carrier[i], carrier[j]);
      Ratio k2 = rough_inclusion_k(c.image(carrier[i]), c.image(carrier[j]));
      // Alternative reading: the right-hand bound scales the target-side
      // measure evaluated at (X,Y); one formula, so the same number.
      Ratio k1_alt = rough_inclusion_k(carrier[i], carrier[j]);
      if (k1 == Ratio(0)) {
        if (k2 > Ratio(0) && !out.beta_infinite) {
          out.beta_infinite = true;
          out.beta_witness = std::make_pair(i, j);
        }
        if (k2 > Ratio(0)) out.beta_alt_infinite = out.beta_alt_infinite || k1_alt == Ratio(0);
        continue;
      }
      Ratio ratio = k2 / k1;
      Ratio ratio_alt = k2 / k1_alt;
      if (!have_ratio) {
        out.alpha = out.beta = ratio;
        out.alpha_alt = out.beta_alt = ratio_alt;
        out.alpha_witness = std::make_pair(i, j);
        if (!out.beta_infinite) out.beta_witness = std::make_pair(i, j);
        have_ratio = true;
        continue;
      }
      if (ratio < out.alpha) {
        out.alpha = ratio;
        out.alpha_witness = std::make_pair(i, j);
      }
      if (!out.beta_infinite && ratio > out.beta) {
        out.beta = ratio;
        out.beta_witness = std::make_pair(i, j);
      }
      out.alpha_alt = std::min(out.alpha_alt, ratio_alt);
      if (!out.beta_alt_infinite) out.beta_alt = std::max(out.beta_alt, ratio_alt);
    }
  return out;
}

std::string to_string(const Family& family) {
  std::string base;
  switch (family.base) {
    case FamilyBase::Poc: base = family.oplus_morphism ? "POM" : "POC"; break;
    case FamilyBase::Pnc: base = family.oplus_morphism ? "PNM" : "PNC"; break;
    case FamilyBase::Snc: base = family.oplus_morphism ? "SM" : "SNC"; break;
  }
  return family.smooth ? base + "_s" : base;
}

bool in_family(const ClassificationCertificate& cert, const Family& family) {
  bool base = false;
  switch (family.base) {
    case FamilyBase::Poc: base = cert.is_pon; break;
    case FamilyBase::Pnc: base = cert.is_pnc; break;
    case FamilyBase::Snc: base = cert.is_snc; break;
  }
  if (family.smooth) base = base && cert.smooth;
  if (family.oplus_morphism) base = base && cert.is_oplus_morphism;
  return base;
}

bool in_family(const Correspondence& c, const Family& family) {
  return in_family(classify(c), family);
}

namespace {

void require_parallel(const Correspondence& f, const Correspondence& g) {
  if (f.source != g.source || f.target != g.target)
    throw std::invalid_argument("pointwise operations need a shared source and target");
}

PointwiseResult verified(Correspondence h, const Family& family) {
  if (in_family(h, family)) return {std::move(h), "member of " + to_string(family)};
  return {std::nullopt, "result leaves " + to_string(family)};
}

}  // namespace

PointwiseResult pointwise_oplus(const Correspondence& f, const Correspondence& g,
                                const Family& family) {
  require_parallel(f, g);
  Correspondence h{f.source, f.target, {}, "(" + f.name + "|" + g.name + ")"};
  for (std::size_t i = 0; i < f.table.size(); ++i)
    h.table.push_back(f.target->carrier_index(
        f.target->oplus(f.target->element(f.table[i]), g.target->element(g.table[i]))));
  return verified(std::move(h), family);
}

PointwiseResult pointwise_odot(const Correspondence& f, const Correspondence& g,
                               const Family& family) {
  require_parallel(f, g);
  Correspondence h{f.source, f.target, {}, "(" + f.name + "&" + g.name + ")"};
  for (std::size_t i = 0; i < f.table.size(); ++i)
    h.table.push_back(f.target->carrier_index(
        f.target->odot(f.target->element(f.table[i]), g.target->element(g.table[i]))));
  return verified(std::move(h), family);
}

PointwiseResult pointwise_complement(const Correspondence& f, const Family& family) {
  if (!f.target->complement_op)
    throw std::invalid_argument("target defines no complement");
  Correspondence h{f.source, f.target, {}, "~(" + f.name + ")"};
  for (std::size_t i = 0; i < f.table.size(); ++i)
    h.table.push_back(
        f.target->carrier_index((*f.target->complement_op)(f.target->element(f.table[i]))));
  return verified(std::move(h), family);
}

PointwiseResult pointwise_lower(const Correspondence& f, const Family& family,
                                std::size_t pair_index) {
  const auto& ap = f.target->approx.at(pair_index);
  Correspondence h{f.source, f.target, {}, "(" + f.name + ")^l"};
  for (std::size_t i = 0; i < f.table.size(); ++i)
    h.table.push_back(f.target->carrier_index(ap.lower(f.target->element(f.table[i]))));
  return verified(std::move(h), family);
}

PointwiseResult pointwise_upper(const Correspondence& f, const Family& family,
                                std::size_t pair_index) {
  const auto& ap = f.target->approx.at(pair_index);
  Correspondence h{f.source, f.target, {}, "(" + f.name + ")^u"};
  for (std::size_t i = 0; i < f.table.size(); ++i)
    h.table.push_back(f.target->carrier_index(ap.upper(f.target->element(f.table[i]))));
  return verified(std::move(h), family);
}

bool pointwise_leq(const Correspondence& f, const Correspondence& g) {
  require_parallel(f, g);
  for (std::size_t i = 0; i < f.table.size(); ++i)
    if (!f.target->parthood(f.target->element(f.table[i]), g.target->element(g.table[i])))
      return false;
  return true;
}

namespace {

Correspondence from_element_images(RysPtr source, RysPtr target, std::uint64_t base_mask,
                                   const std::vector<std::uint64_t>& element_masks,
                                   std::string name) {
  std::vector<std::size_t> table;
  table.reserve(source->carrier.size());
  for (const auto& s : source->carrier) {
    std::uint64_t m = base_mask;
    for (std::size_t e = 0; e < element_masks.size(); ++e)
      if (s.contains(e)) m |= element_masks[e];
    table.push_back(target->carrier_index(Subset(target->universe, m)));
  }
  return Correspondence{std::move(source), std::move(target), std::move(table),
                        std::move(name)};
}

}  // namespace

std::vector<Correspondence> enumerate_morphisms(RysPtr source, RysPtr target,
                                                std::size_t limit) {
  const std::size_t n = source->universe->size();
  const std::size_t m = target->universe->size();
  std::vector<Correspondence> out;
  for (std::uint64_t t0 = 0; t0 <= target->universe->full_mask(); ++t0) {
    // Every target element outside T0 belongs to at most one singleton image.
    std::vector<std::size_t> free_bits;
    for (std::size_t b = 0; b < m; ++b)
      if (!((t0 >> b) & 1u)) free_bits.push_back(b);
    std::vector<std::size_t> owner(free_bits.size(), 0);  // 0 = unused, k = x_{k-1}
    for (;;) {
      std::vector<std::uint64_t> element_masks(n, t0);
      for (std::size_t b = 0; b < free_bits.size(); ++b)
        if (owner[b] > 0) element_masks[owner[b] - 1] |= std::uint64_t{1} << free_bits[b];
      out.push_back(from_element_images(source, target, t0, element_masks,
                                        "mor" + std::to_string(out.size())));
      if (limit && out.size() >= limit) return out;
      // Next owner assignment in mixed-radix order.
      std::size_t pos = 0;
      while (pos < owner.size() && owner[pos] == n) owner[pos++] = 0;
      if (pos == owner.size()) break;
      ++owner[pos];
    }
    if (t0 == target->universe->full_mask()) break;
  }
  return out;
}

std::vector<Correspondence> enumerate_oplus_morphisms(RysPtr source, RysPtr target,
                                                      std::size_t limit) {
  const std::size_t n = source->universe->size();
  const std::size_t m = target->universe->size();
  std::vector<Correspondence> out;
  for (std::uint64_t t0 = 0; t0 <= target->universe->full_mask(); ++t0) {
    std::vector<std::size_t> free_bits;
    for (std::size_t b = 0; b < m; ++b)
      if (!((t0 >> b) & 1u)) free_bits.push_back(b);
    const std::uint64_t per = std::uint64_t{1} << free_bits.size();
    std::vector<std::uint64_t> choice(n, 0);  // subset of the free bits per element
    for (;;) {
      std::vector<std::uint64_t> element_masks(n, t0);
      for (std::size_t e = 0; e < n; ++e)
        for (std::size_t b = 0; b < free_bits.size(); ++b)
          if ((choice[e] >> b) & 1u) element_masks[e] |= std::uint64_t{1} << free_bits[b];
      out.push_back(from_element_images(source, target, t0, element_masks,
                                        "omor" + std::to_string(out.size())));
      if (limit && out.size() >= limit) return out;
      std::size_t pos = 0;
      while (pos < n && choice[pos] + 1 == per) choice[pos++] = 0;
      if (pos == n) break;
      ++choice[pos];
    }
    if (t0 == target->universe->full_mask()) break;
  }
  return out;
}

std::vector<Correspondence> enumerate_injective_maps(RysPtr source, RysPtr target,
                                                     std::size_t limit) {
  const std::size_t n = source->carrier.size();
  const std::size_t m = target->carrier.size();
  if (m < n) return {};
  if (!limit) {
    double count = 1;
    for (std::size_t k = 0; k < n; ++k) count *= static_cast<double>(m - k);
    if (count > 5e6)
      throw std::invalid_argument("too many injective maps to enumerate; pass a limit");
  }
  std::vector<Correspondence> out;
  std::vector<std::size_t> table(n, 0);
  std::vector<bool> used(m, false);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (limit && out.size() >= limit) return false;
    if (i == n) {
      out.push_back(Correspondence{source, target, table,
                                   "inj" + std::to_string(out.size())});
      return !(limit && out.size() >= limit);
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j]) continue;
      used[j] = true;
      table[i] = j;
      bool keep = self(self, i + 1);
      used[j] = false;
      if (!keep) return false;
    }
    return true;
  };
  rec(rec, 0);
  return out;
}

std::vector<Correspondence> sample_correspondences(RysPtr source, RysPtr target,
                                                   std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, target->carrier.size() - 1);
  std::vector<Correspondence> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::size_t> table(source->carrier.size());
    for (auto& t : table) t = pick(rng);
    out.push_back(Correspondence{source, target, std::move(table),
                                 "sample" + std::to_string(k)});
  }
  return out;
}

}  // namespace rys
