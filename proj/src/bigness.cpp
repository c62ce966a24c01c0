#include "rys/bigness.hpp"

#include <algorithm>
#include <stdexcept>

#include "rys/posets.hpp"

namespace rys {

std::string to_string(DeltaVariant variant) {
  switch (variant) {
    case DeltaVariant::D1: return "delta1";
    case DeltaVariant::D2: return "delta2";
    case DeltaVariant::D3: return "delta3";
    case DeltaVariant::D4: return "delta4";
    case DeltaVariant::D5: return "delta5";
  }
  return "delta1";
}

DeltaVariant delta_variant_from_string(const std::string& s) {
  if (s == "delta1") return DeltaVariant::D1;
  if (s == "delta2") return DeltaVariant::D2;
  if (s == "delta3") return DeltaVariant::D3;
  if (s == "delta4") return DeltaVariant::D4;
  if (s == "delta5") return DeltaVariant::D5;
  throw std::invalid_argument("unknown delta variant: " + s);
}

std::string to_string(BignessAxiom axiom) {
  switch (axiom) {
    case BignessAxiom::B1: return "B1";
    case BignessAxiom::B2: return "B2";
    case BignessAxiom::B3: return "B3";
    case BignessAxiom::BC1: return "BC1";
    case BignessAxiom::BC2: return "BC2";
    case BignessAxiom::BC3: return "BC3";
    case BignessAxiom::BC4: return "BC4";
    case BignessAxiom::BC5: return "BC5";
    case BignessAxiom::BC6: return "BC6";
  }
  return "B1";
}

BignessAxiom bigness_axiom_from_string(const std::string& s) {
  for (auto a : {BignessAxiom::B1, BignessAxiom::B2, BignessAxiom::B3, BignessAxiom::BC1,
                 BignessAxiom::BC2, BignessAxiom::BC3, BignessAxiom::BC4, BignessAxiom::BC5,
                 BignessAxiom::BC6})
    if (to_string(a) == s) return a;
  throw std::invalid_argument("unknown bigness axiom: " + s);
}

std::vector<Subset> BignessPredicate::members() const {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < holds.size(); ++i)
    if (holds[i]) out.push_back(rys->carrier[i]);
  return out;
}

BignessPredicate extensional_predicate(RysPtr rys, const std::vector<Subset>& members) {
  BignessPredicate out;
  out.rys = rys;
  out.holds.assign(rys->carrier.size(), false);
  out.origin = BignessOrigin::Extensional;
  for (const auto& m : members) out.holds[rys->carrier_index(m)] = true;
  return out;
}

BignessPredicate delta_predicate(RysPtr rys, const Subset& x0, DeltaVariant variant) {
  rys->carrier_index(x0);  // membership check
  const auto& ap = rys->approx.at(0);

  auto definite_in = [&](DefiniteKind kind) {
    for (const auto& d : definite_elements(rys->granulation, kind))
      if (d == x0) return true;
    return false;
  };
  switch (variant) {
    case DeltaVariant::D3:
      if (!definite_in(DefiniteKind::Lower))
        throw std::invalid_argument("delta3 needs a lower-definite x0");
      break;
    case DeltaVariant::D4:
      if (!definite_in(DefiniteKind::Both))
        throw std::invalid_argument("delta4 needs an lu-definite x0");
      break;
    case DeltaVariant::D5:
      if (!definite_in(DefiniteKind::Upper))
        throw std::invalid_argument("delta5 needs an upper-definite x0");
      break;
    default:
      break;
  }

  BignessPredicate out;
  out.rys = rys;
  out.origin = BignessOrigin::Delta;
  out.x0 = x0;
  out.variant = variant;
  out.holds.assign(rys->carrier.size(), false);
  Subset x0l = ap.lower(x0);
  for (std::size_t i = 0; i < rys->carrier.size(); ++i) {
    const Subset& x = rys->carrier[i];
    Subset xl = ap.lower(x);
    bool big = false;
    switch (variant) {
      case DeltaVariant::D1: {
        big = true;
        for (const auto& y : rys->carrier)
          if (rys->parthood(x0, y) && !rys->parthood(y, xl)) {
            big = false;
            break;
          }
        break;
      }
      case DeltaVariant::D2:
        big = rys->parthood(x0, x) && rys->parthood(x0l, xl);
        break;
      case DeltaVariant::D3:
      case DeltaVariant::D4:
      case DeltaVariant::D5:
        big = rys->parthood(x0, xl);
        break;
    }
    out.holds[i] = big;
  }
  return out;
}

BignessPredicate upset_predicate(RysPtr rys, const Subset& x0) {
  rys->carrier_index(x0);
  BignessPredicate out;
  out.rys = rys;
  out.origin = BignessOrigin::UpSet;
  out.x0 = x0;
  out.holds.assign(rys->carrier.size(), false);
  for (std::size_t i = 0; i < rys->carrier.size(); ++i)
    out.holds[i] = rys->parthood(x0, rys->carrier[i]);
  return out;
}

BignessAxiomReport check_bigness_axiom(const BignessPredicate& big, BignessAxiom axiom) {
  const Rys& sys = *big.rys;
  const auto& carrier = sys.carrier;
  const std::size_t n = carrier.size();
  auto is_big = [&](const Subset& s) { return big.holds[sys.carrier_index(s)]; };

  BignessAxiomReport rep;
  rep.axiom = axiom;
  auto fail = [&](std::vector<Subset> tuple, std::string detail) {
    rep.holds = false;
    rep.counterexample = std::move(tuple);
    rep.detail = std::move(detail);
  };

  switch (axiom) {
    case BignessAxiom::B1:
      for (std::size_t x = 0; x < n && rep.holds; ++x)
        for (std::size_t a = 0; a < n && rep.holds; ++a)
          if (big.holds[a] && sys.part_of(a, x) && !big.holds[x])
            fail({carrier[a], carrier[x]},
                 carrier[a].to_string() + " is big but " + carrier[x].to_string() +
                     " above it is not");
      break;
    case BignessAxiom::B2:
      for (std::size_t x = 0; x < n && rep.holds; ++x)
        if (big.holds[x] && !is_big(sys.approx.at(0).upper(carrier[x])))
          fail({carrier[x]}, "upper approximation of " + carrier[x].to_string() +
                                 " is not big");
      break;
    case BignessAxiom::B3:
      for (std::size_t x = 0; x < n && rep.holds; ++x)
        for (std::size_t a = 0; a < n && rep.holds; ++a)
          for (std::size_t b = 0; b < n && rep.holds; ++b)
            if (big.holds[x] && sys.part_of(x, a) && sys.part_of(a, b) && !big.holds[b])
              fail({carrier[x], carrier[a], carrier[b]}, "two steps above leave the predicate");
      break;
    case BignessAxiom::BC1:
      for (std::size_t a = 0; a < n && rep.holds; ++a)
        for (std::size_t b = 0; b < n && rep.holds; ++b)
          if (big.holds[a] && big.holds[b] && !is_big(sys.oplus(carrier[a], carrier[b])))
            fail({carrier[a], carrier[b]}, "join of big elements is not big");
      break;
    case BignessAxiom::BC2:
      for (std::size_t a = 0; a < n && rep.holds; ++a)
        for (std::size_t b = 0; b < n && rep.holds; ++b)
          if (big.holds[a] && is_big(sys.oplus(carrier[a], carrier[b])) && !big.holds[b])
            fail({carrier[a], carrier[b]}, "join with a big element is big but the part is not");
      break;
    case BignessAxiom::BC3:
      for (std::size_t a = 0; a < n && rep.holds; ++a)
        if (big.holds[a] && !is_big(sys.oplus(carrier[a], carrier[a])))
          fail({carrier[a]}, "self-join of a big element is not big");
      break;
    case BignessAxiom::BC4:
      for (std::size_t a = 0; a < n && rep.holds; ++a)
        for (std::size_t b = 0; b < n && rep.holds; ++b)
          if (big.holds[a] && big.holds[b] && !is_big(sys.odot(carrier[a], carrier[b])))
            fail({carrier[a], carrier[b]}, "meet of big elements is not big");
      break;
    case BignessAxiom::BC5:
      for (std::size_t a = 0; a < n && rep.holds; ++a)
        if (is_big(sys.oplus(carrier[a], carrier[a])) && !big.holds[a])
          fail({carrier[a]}, "self-join is big but the element is not");
      break;
    case BignessAxiom::BC6:
      for (std::size_t a = 0; a < n && rep.holds; ++a)
        for (std::size_t b = 0; b < n && rep.holds; ++b)
          for (std::size_t c = 0; c < n && rep.holds; ++c)
            if (big.holds[b] && sys.part_of(a, b) && sys.part_of(b, c) &&
                !is_big(sys.odot(carrier[b], carrier[c])))
              fail({carrier[a], carrier[b], carrier[c]},
                   "meet with an upper bound leaves the predicate");
      break;
  }
  return rep;
}

ImplicationMatrix implication_matrix(const std::vector<BignessPredicate>& family,
                                     const std::vector<BignessAxiom>& axioms) {
  ImplicationMatrix out;
  out.axioms = axioms;
  const std::size_t k = axioms.size();

  std::vector<std::vector<bool>> sat(family.size(), std::vector<bool>(k, false));
  for (std::size_t p = 0; p < family.size(); ++p)
    for (std::size_t a = 0; a < k; ++a)
      sat[p][a] = check_bigness_axiom(family[p], axioms[a]).holds;

  out.counterexample.assign(k, std::vector<std::optional<std::size_t>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t p = 0; p < family.size(); ++p)
        if (sat[p][i] && !sat[p][j]) {
          out.counterexample[i][j] = p;
          break;
        }
  return out;
}

std::vector<BignessPredicate> enumerate_up_closed_predicates(RysPtr rys, std::size_t limit) {
  auto leq = [&](std::size_t a, std::size_t b) {
    return rys->parthood(rys->carrier[a], rys->carrier[b]);
  };
  std::vector<BignessPredicate> out;
  for (auto& mask : enumerate_up_sets(rys->carrier.size(), leq, limit)) {
    BignessPredicate p;
    p.rys = rys;
    p.origin = BignessOrigin::Extensional;
    p.holds = std::move(mask);
    out.push_back(std::move(p));
  }
  return out;
}

GrowthVerdict rough_growth(const Correspondence& f, const Correspondence& g,
                           const BignessPredicate& big) {
  if (f.source != g.source || f.target != g.target)
    throw std::invalid_argument("growth comparison needs parallel correspondences");
  if (big.rys != f.source)
    throw std::invalid_argument("the bigness predicate must live on the common source");

  const Rys& src = *f.source;
  const Rys& tgt = *f.target;
  GrowthVerdict out;
  for (const auto& y : src.carrier) {
    Subset yl = src.approx.at(0).lower(y);
    Subset fy = f.image(y);
    Subset gy = g.image(y);
    Subset fyl = tgt.approx.at(0).lower(fy);
    Subset fyu = tgt.approx.at(0).upper(fy);
    for (std::size_t xi = 0; xi < src.carrier.size(); ++xi) {
      const Subset& x = src.carrier[xi];
      if (!(src.parthood(x, yl) && big.holds[xi])) continue;
      if (!(tgt.parthood(fyl, gy) && tgt.parthood(gy, fyu))) {
        out.holds = false;
        out.witness = {x, y};
        out.detail = "at y = " + y.to_string() + ": g gives " + gy.to_string() +
                     ", outside [" + fyl.to_string() + ", " + fyu.to_string() + "]";
        return out;
      }
    }
  }
  return out;
}

}  // namespace rys
