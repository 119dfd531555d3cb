//! Morphism translation across the duality and the round-trip isomorphisms.
//!
//! * A [`SteinbergMorphism`] is an element map preserving products, zero,
//!   the marked sets, orthogonal suprema and the expectation (plus sums on
//!   ring carriers).
//! * An [`EtaleMorphism`] is a star-bijective functor defined on a
//!   subgroupoid of its source.
//! * A [`PierceMorphism`] from `ρ` to `ρ'` pairs an étale morphism `φ` from
//!   a subgroupoid of the base of `ρ'` into the base of `ρ` with a bundle
//!   morphism `β` from the pullback `ρ_φ` into `ρ'`.
//!
//! [`functor_u`] sends a Steinberg morphism to the Pierce morphism
//! `(π̄, π̲)` between the dual bundles, [`functor_s`] sends a Pierce
//! morphism to `β_* ∘ φ*` between the section carriers, and [`eta`] /
//! [`epsilon`] build the natural isomorphisms witnessing that the two
//! directions invert each other.

use crate::bundle::{validate_bundle, validate_ringoid_bundle, FiniteBundle, FiniteRingoidBundle};
use crate::category::{validate_category, validate_groupoid, FiniteGroupoid};

use crate::relations::{self, RelationCache};
use crate::sections::{self, Section, SectionStructure};
use crate::structured::StructuredData;
use crate::ultrafilter_bundle::{self, BuiltBundle, DualBundleError, UltrafilterBundle};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualityError {
    #[error(transparent)]
    Dual(#[from] DualBundleError),
    #[error("preimage closure of ultrafilter {u} is not an ultrafilter")]
    NotUltrafilter { u: usize },
    #[error("class map is ill-defined at ({a}, {b}) over ultrafilter {u}")]
    IllDefined { a: usize, b: usize, u: usize },
    #[error("morphism endpoints do not match for composition")]
    DomainMismatch,
    #[error("the representation of element {a} is not a carrier section")]
    HatMissing { a: usize },
    #[error("transported section has no index in the target carrier")]
    TransportMissing,
    #[error("section set over base arrow {g} is not an ultrafilter")]
    EvaluationNotUltrafilter { g: usize },
}

// ---------------------------------------------------------------------------
// Morphism values.

/// An element map between structured carriers. Equality is extensional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinbergMorphism {
    pub source: StructuredData,
    pub target: StructuredData,
    pub map: Vec<usize>,
}

pub fn identity_steinberg(d: &StructuredData) -> SteinbergMorphism {
    SteinbergMorphism {
        source: d.clone(),
        target: d.clone(),
        map: (0..d.size()).collect(),
    }
}

pub fn compose_steinberg(
    m2: &SteinbergMorphism,
    m1: &SteinbergMorphism,
) -> Result<SteinbergMorphism, DualityError> {
    if m1.target != m2.source {
        return Err(DualityError::DomainMismatch);
    }
    Ok(SteinbergMorphism {
        source: m1.source.clone(),
        target: m2.target.clone(),
        map: m1.map.iter().map(|&a| m2.map[a]).collect(),
    })
}

/// One law of a morphism report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismCheck {
    pub law: &'static str,
    pub pass: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismReport {
    pub checks: Vec<MorphismCheck>,
}

impl MorphismReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&MorphismCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

fn check(law: &'static str, witness: Option<Vec<usize>>) -> MorphismCheck {
    MorphismCheck { law, pass: witness.is_none(), witness }
}

/// Exhaustive law check for a Steinberg morphism.
pub fn validate_steinberg_morphism(m: &SteinbergMorphism) -> MorphismReport {
    let (src, tgt, f) = (&m.source, &m.target, &m.map);
    let n = src.size();
    let mut checks = Vec::new();

    let mut w = None;
    'mult: for a in 0..n {
        for b in 0..n {
            if f[src.mul(a, b)] != tgt.mul(f[a], f[b]) {
                w = Some(vec![a, b]);
                break 'mult;
            }
        }
    }
    checks.push(check("multiplicative", w));

    let zero_w = match (src.zero(), tgt.zero()) {
        (Some(z), Some(z2)) if f[z] == z2 => None,
        (Some(z), _) => Some(vec![z]),
        (None, _) => None,
    };
    checks.push(check("zero-preserved", zero_w));

    checks.push(check(
        "s-preserved",
        src.s_set().iter().find(|&&s| !tgt.in_s(f[s])).map(|&s| vec![s]),
    ));
    checks.push(check(
        "z-preserved",
        src.z_set().iter().find(|&&z| !tgt.in_z(f[z])).map(|&z| vec![z]),
    ));

    let mut w = None;
    'sup: for &a in src.s_set() {
        for &b in src.s_set() {
            if relations::orthogonal(src, a, b) != Ok(true) {
                continue;
            }
            let Some(sup) = relations::supremum(src, a, b) else { continue };
            if relations::orthogonal(tgt, f[a], f[b]) != Ok(true)
                || relations::supremum(tgt, f[a], f[b]) != Some(f[sup])
            {
                w = Some(vec![a, b]);
                break 'sup;
            }
        }
    }
    checks.push(check("orthosuprema-preserved", w));

    checks.push(check(
        "expectation-compatible",
        (0..n).find(|&a| f[src.phi(a)] != tgt.phi(f[a])).map(|a| vec![a]),
    ));

    if let (Some(rs), Some(rt)) = (src.carrier.ring(), tgt.carrier.ring()) {
        let mut w = None;
        'add: for a in 0..n {
            for b in 0..n {
                if f[rs.add(a, b)] != rt.add(f[a], f[b]) {
                    w = Some(vec![a, b]);
                    break 'add;
                }
            }
        }
        checks.push(check("additive", w));
    }

    MorphismReport { checks }
}

/// A partial functor between groupoids, carried on its ambient source;
/// `map[g] = None` off the domain. Equality is extensional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaleMorphism {
    pub source: FiniteGroupoid,
    pub target: FiniteGroupoid,
    pub map: Vec<Option<usize>>,
}

impl EtaleMorphism {
    pub fn domain(&self) -> Vec<usize> {
        (0..self.source.size()).filter(|&g| self.map[g].is_some()).collect()
    }

    pub fn identity(g: &FiniteGroupoid) -> Self {
        EtaleMorphism {
            source: g.clone(),
            target: g.clone(),
            map: (0..g.size()).map(Some).collect(),
        }
    }
}

/// Functor laws, subgroupoid domain, and star-bijectivity on every domain
/// unit.
pub fn validate_etale_morphism(m: &EtaleMorphism) -> MorphismReport {
    let (g1, g2, f) = (&m.source, &m.target, &m.map);
    let dom = m.domain();
    let in_dom = |g: usize| f[g].is_some();
    let mut checks = Vec::new();

    checks.push(check(
        "domain-subgroupoid",
        dom.iter()
            .find(|&&g| {
                !in_dom(g1.src(g))
                    || !in_dom(g1.rng(g))
                    || !in_dom(g1.inv(g))
                    || dom.iter().any(|&h| {
                        g1.composable(g, h) && in_dom(h) && !in_dom(g1.comp(g, h))
                    })
            })
            .map(|&g| vec![g]),
    ));

    let mut w = None;
    'functor: for &g in &dom {
        if f[g1.src(g)] != Some(g2.src(f[g].unwrap()))
            || f[g1.rng(g)] != Some(g2.rng(f[g].unwrap()))
        {
            w = Some(vec![g]);
            break 'functor;
        }
        for &h in &dom {
            if g1.composable(g, h)
                && g2.try_comp(f[g].unwrap(), f[h].unwrap()) != f[g1.comp(g, h)]
            {
                w = Some(vec![g, h]);
                break 'functor;
            }
        }
    }
    checks.push(check("functor", w));

    let mut w = None;
    'stars: for &e in &dom {
        if !g1.is_unit(e) {
            continue;
        }
        let fe = f[e].unwrap();
        let star_pairs: [(Vec<usize>, Vec<usize>); 2] = [
            (
                dom.iter().copied().filter(|&g| g1.src(g) == e).collect(),
                (0..g2.size()).filter(|&h| g2.src(h) == fe).collect(),
            ),
            (
                dom.iter().copied().filter(|&g| g1.rng(g) == e).collect(),
                (0..g2.size()).filter(|&h| g2.rng(h) == fe).collect(),
            ),
        ];
        for (star, star2) in star_pairs {
            let mut images: Vec<usize> = star.iter().map(|&g| f[g].unwrap()).collect();
            images.sort_unstable();
            images.dedup();
            if images.len() != star.len() || images != star2 {
                w = Some(vec![e]);
                break 'stars;
            }
        }
    }
    checks.push(check("star-bijective", w));

    MorphismReport { checks }
}

// ---------------------------------------------------------------------------
// Pullback bundles.

/// A pullback `ρ_φ` with its pair bookkeeping: the base is the domain of
/// `φ` reindexed as its own groupoid, and total arrows are pairs `(g, c)`
/// with `φ(g) = ρ(c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pullback {
    pub bundle: FiniteBundle,
    pub ringoid: Option<FiniteRingoidBundle>,
    /// Per pullback total arrow: (ambient base arrow of φ's source, ρ-total arrow).
    pub pairs: Vec<(usize, usize)>,
    /// Per pullback base arrow: the ambient arrow it embeds to.
    pub base_arrows: Vec<usize>,
    pub pair_index: BTreeMap<(usize, usize), usize>,
}

impl Pullback {
    pub fn base_position(&self, ambient: usize) -> Option<usize> {
        self.base_arrows.binary_search(&ambient).ok()
    }
}

/// Pulls `rho` back along `phi`. When the fiberwise addition of `rho` is
/// supplied the pullback carries it too.
pub fn pullback_bundle(
    phi: &EtaleMorphism,
    rho: &FiniteBundle,
    ringoid: Option<&FiniteRingoidBundle>,
) -> Pullback {
    let dom = phi.domain();
    let base_arrows = dom.clone();
    let reb = |ambient: usize| base_arrows.binary_search(&ambient).unwrap();

    // Domain as its own groupoid.
    let names = dom.iter().map(|&g| phi.source.name(g).to_string()).collect();
    let src = dom.iter().map(|&g| reb(phi.source.src(g))).collect();
    let rng = dom.iter().map(|&g| reb(phi.source.rng(g))).collect();
    let compose = dom
        .iter()
        .map(|&g| {
            dom.iter()
                .map(|&h| phi.source.try_comp(g, h).map(reb))
                .collect()
        })
        .collect();
    let cat = validate_category(names, src, rng, compose).expect("domain subgroupoid");
    let inv = dom.iter().map(|&g| reb(phi.source.inv(g))).collect();
    let base = validate_groupoid(cat, inv).expect("domain subgroupoid");

    // Total arrows: matching pairs, ordered by (g, c).
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for &g in &dom {
        for c in 0..rho.total().size() {
            if phi.map[g] == Some(rho.rho(c)) {
                pairs.push((g, c));
            }
        }
    }
    pairs.sort_unstable();
    let pair_index: BTreeMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    let names = pairs
        .iter()
        .map(|&(g, c)| format!("({},{})", phi.source.name(g), rho.total().name(c)))
        .collect();
    let src = pairs
        .iter()
        .map(|&(g, c)| pair_index[&(phi.source.src(g), rho.total().src(c))])
        .collect();
    let rng = pairs
        .iter()
        .map(|&(g, c)| pair_index[&(phi.source.rng(g), rho.total().rng(c))])
        .collect();
    let compose = pairs
        .iter()
        .map(|&(g, c)| {
            pairs
                .iter()
                .map(|&(h, e)| match (phi.source.try_comp(g, h), rho.total().try_comp(c, e)) {
                    (Some(gh), Some(ce)) => Some(pair_index[&(gh, ce)]),
                    _ => None,
                })
                .collect()
        })
        .collect();
    let total = validate_category(names, src, rng, compose).expect("pullback category");
    let rho_table = pairs.iter().map(|&(g, _)| reb(g)).collect();
    let zero = dom
        .iter()
        .map(|&g| pair_index[&(g, rho.zero_at(phi.map[g].unwrap()))])
        .collect();
    let bundle =
        validate_bundle(total, base, rho_table, zero).expect("pullback bundle laws");

    let ringoid = ringoid.map(|rb| {
        let fibers: Vec<Vec<usize>> =
            (0..bundle.base().size()).map(|g| bundle.fiber(g)).collect();
        let fadd = fibers
            .iter()
            .map(|fiber| {
                fiber
                    .iter()
                    .map(|&x| {
                        fiber
                            .iter()
                            .map(|&y| {
                                let sum = rb.fadd(pairs[x].1, pairs[y].1);
                                let arrow = pair_index[&(pairs[x].0, sum)];
                                fiber.binary_search(&arrow).unwrap()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        validate_ringoid_bundle(bundle.clone(), fibers, fadd).expect("pullback fiber sums")
    });

    Pullback { bundle, ringoid, pairs, base_arrows, pair_index }
}

/// A Pierce morphism from `source` to `target`: `phi` from a subgroupoid of
/// the target base into the source base, and `beta` from the pullback of the
/// source along `phi` into the target total category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PierceMorphism {
    pub source: FiniteBundle,
    pub target: FiniteBundle,
    pub source_ringoid: Option<FiniteRingoidBundle>,
    pub target_ringoid: Option<FiniteRingoidBundle>,
    pub phi: EtaleMorphism,
    pub pullback: Pullback,
    pub beta: Vec<usize>,
}

pub fn identity_pierce(
    bundle: &FiniteBundle,
    ringoid: Option<&FiniteRingoidBundle>,
) -> PierceMorphism {
    let phi = EtaleMorphism::identity(bundle.base());
    let pullback = pullback_bundle(&phi, bundle, ringoid);
    let beta = pullback.pairs.iter().map(|&(_, c)| c).collect();
    PierceMorphism {
        source: bundle.clone(),
        target: bundle.clone(),
        source_ringoid: ringoid.cloned(),
        target_ringoid: ringoid.cloned(),
        phi,
        pullback,
        beta,
    }
}

/// Bundle-morphism laws for the `beta` part, plus the étale laws for `phi`.
pub fn validate_pierce_morphism(p: &PierceMorphism) -> MorphismReport {
    let mut report = validate_etale_morphism(&p.phi);
    let pb = &p.pullback;
    let total = pb.bundle.total();
    let n = total.size();
    let beta_ok = p.beta.len() == n && p.beta.iter().all(|&c| c < p.target.total().size());
    if !beta_ok {
        report.checks.push(check("beta-shape", Some(vec![])));
        return report;
    }

    // ρ' ∘ β агrees with the ambient base arrow of the pullback.
    report.checks.push(check(
        "projection-compatible",
        (0..n)
            .find(|&x| p.target.rho(p.beta[x]) != pb.pairs[x].0)
            .map(|x| vec![x]),
    ));

    let mut w = None;
    'functor: for x in 0..n {
        if total.is_unit(x) && !p.target.total().is_unit(p.beta[x]) {
            w = Some(vec![x]);
            break 'functor;
        }
        for y in 0..n {
            if let Some(xy) = total.try_comp(x, y) {
                if p.target.total().try_comp(p.beta[x], p.beta[y]) != Some(p.beta[xy]) {
                    w = Some(vec![x, y]);
                    break 'functor;
                }
            }
        }
    }
    report.checks.push(check("beta-functor", w));

    report.checks.push(check(
        "zero-preserved",
        (0..pb.bundle.base().size())
            .find(|&g| {
                let ambient = pb.base_arrows[g];
                p.beta[pb.bundle.zero_at(g)] != p.target.zero_at(ambient)
            })
            .map(|g| vec![g]),
    ));

    if let (Some(prb), Some(trb)) = (&pb.ringoid, &p.target_ringoid) {
        let mut w = None;
        'add: for x in 0..n {
            for y in 0..n {
                if pb.bundle.rho(x) == pb.bundle.rho(y)
                    && p.beta[prb.fadd(x, y)] != trb.fadd(p.beta[x], p.beta[y])
                {
                    w = Some(vec![x, y]);
                    break 'add;
                }
            }
        }
        report.checks.push(check("beta-additive", w));
    }

    report
}

pub fn compose_pierce(
    p2: &PierceMorphism,
    p1: &PierceMorphism,
) -> Result<PierceMorphism, DualityError> {
    if p1.target != p2.source {
        return Err(DualityError::DomainMismatch);
    }
    // φ = φ1 ∘ φ2: defined where φ2 lands inside dom(φ1).
    let map: Vec<Option<usize>> = (0..p2.phi.source.size())
        .map(|g| p2.phi.map[g].and_then(|h| p1.phi.map[h]))
        .collect();
    let phi = EtaleMorphism {
        source: p2.phi.source.clone(),
        target: p1.phi.target.clone(),
        map,
    };
    let pullback = pullback_bundle(&phi, &p1.source, p1.source_ringoid.as_ref());
    let beta = pullback
        .pairs
        .iter()
        .map(|&(g2, c)| {
            let mid = p2.phi.map[g2].expect("composite domain");
            let c1 = p1.beta[p1.pullback.pair_index[&(mid, c)]];
            p2.beta[p2.pullback.pair_index[&(g2, c1)]]
        })
        .collect();
    Ok(PierceMorphism {
        source: p1.source.clone(),
        target: p2.target.clone(),
        source_ringoid: p1.source_ringoid.clone(),
        target_ringoid: p2.target_ringoid.clone(),
        phi,
        pullback,
        beta,
    })
}

// ---------------------------------------------------------------------------
// The bundle functor U on morphisms.

/// The Pierce morphism induced by a Steinberg morphism: the backwards
/// ultrafilter map `U ↦ π⁻¹[U]^<` on the bases and the forward class map
/// `[a, π̲(U)] ↦ [π(a), U]` on the pullback.
pub struct InducedPierce {
    pub pierce: PierceMorphism,
    pub source_dual: UltrafilterBundle,
    pub target_dual: UltrafilterBundle,
}

/// The backwards ultrafilter map only (the base part of [`functor_u`]).
pub fn induced_groupoid_map(
    m: &SteinbergMorphism,
    src_dual: &UltrafilterBundle,
    tgt_dual: &UltrafilterBundle,
) -> Result<EtaleMorphism, DualityError> {
    let src = &m.source;
    let map: Vec<Option<usize>> = tgt_dual
        .ug
        .ultrafilters
        .iter()
        .enumerate()
        .map(|(u, ultra)| {
            let preimage: Vec<usize> =
                (0..src.size()).filter(|&a| src.in_s(a) && ultra.contains(m.map[a])).collect();
            if preimage.is_empty() {
                return Ok(None);
            }
            let closed = relations::up_set(src, &preimage);
            match src_dual.ug.ultrafilters.iter().position(|f| f.members == closed) {
                Some(i) => Ok(Some(i)),
                None => Err(DualityError::NotUltrafilter { u }),
            }
        })
        .collect::<Result<_, _>>()?;
    Ok(EtaleMorphism {
        source: tgt_dual.ug.groupoid.clone(),
        target: src_dual.ug.groupoid.clone(),
        map,
    })
}

/// Full object + morphism translation `U(π)`, building both dual bundles.
pub fn functor_u(m: &SteinbergMorphism) -> Result<InducedPierce, DualityError> {
    let src_rel = RelationCache::new(&m.source);
    let tgt_rel = RelationCache::new(&m.target);
    let source_dual = ultrafilter_bundle::build_bundle(&m.source, &src_rel)?;
    let target_dual = ultrafilter_bundle::build_bundle(&m.target, &tgt_rel)?;
    let phi = induced_groupoid_map(m, &source_dual, &target_dual)?;

    let src_ringoid = source_dual.ringoid().cloned();
    let pullback = pullback_bundle(&phi, source_dual.bundle(), src_ringoid.as_ref());

    // Well-definedness of the class map on every pair of class members.
    for (u, flag) in phi.map.iter().enumerate() {
        let Some(su) = *flag else { continue };
        for class in &source_dual.fibers[su] {
            let image_pos =
                target_dual.class_position(u, m.map[class.canonical]);
            for &x in &class.members {
                if target_dual.class_position(u, m.map[x]) != image_pos {
                    return Err(DualityError::IllDefined {
                        a: class.canonical,
                        b: x,
                        u,
                    });
                }
            }
        }
    }

    let beta = pullback
        .pairs
        .iter()
        .map(|&(u, c)| {
            let (_, pos) = source_dual.class_of[c];
            let su = phi.map[u].unwrap();
            let a = source_dual.fibers[su][pos].canonical;
            target_dual.arrow(u, m.map[a])
        })
        .collect();

    let pierce = PierceMorphism {
        source: source_dual.bundle().clone(),
        target: target_dual.bundle().clone(),
        source_ringoid: src_ringoid,
        target_ringoid: target_dual.ringoid().cloned(),
        phi,
        pullback,
        beta,
    };
    Ok(InducedPierce { pierce, source_dual, target_dual })
}

// ---------------------------------------------------------------------------
// The section functor S on morphisms.

/// Section carrier of a bundle: the ring of all sections for a ringoid
/// bundle, the semigroup of slice-supported sections otherwise.
pub fn section_structure_of(
    bundle: &FiniteBundle,
    ringoid: Option<&FiniteRingoidBundle>,
) -> SectionStructure {
    match ringoid {
        Some(rb) => sections::section_structure_ring(rb),
        None => sections::section_structure_cat(bundle),
    }
}

/// `(β_* ∘ φ*)(x)` pointwise: `g' ↦ β(g', x(φ(g')))`, zero off the domain.
pub fn transport_section(p: &PierceMorphism, x: &Section) -> Section {
    let values = (0..p.target.base().size())
        .map(|g| match p.phi.map[g] {
            Some(h) => p.beta[p.pullback.pair_index[&(g, x.values[h])]],
            None => p.target.zero_at(g),
        })
        .collect();
    Section { values }
}

/// The pullback-section map `φ*` as a Steinberg morphism from the sections
/// of `rho` to the sections of the pullback.
pub fn pullback_sections(
    phi: &EtaleMorphism,
    rho: &FiniteBundle,
    ringoid: Option<&FiniteRingoidBundle>,
) -> Result<SteinbergMorphism, DualityError> {
    let pb = pullback_bundle(phi, rho, ringoid);
    let st_src = section_structure_of(rho, ringoid);
    let st_tgt = section_structure_of(&pb.bundle, pb.ringoid.as_ref());
    let map = st_src
        .sections
        .iter()
        .map(|x| {
            let values = (0..pb.bundle.base().size())
                .map(|g| {
                    let ambient = pb.base_arrows[g];
                    pb.pair_index[&(ambient, x.values[phi.map[ambient].unwrap()])]
                })
                .collect();
            st_tgt
                .index_of(&Section { values })
                .ok_or(DualityError::TransportMissing)
        })
        .collect::<Result<_, _>>()?;
    Ok(SteinbergMorphism { source: st_src.data, target: st_tgt.data, map })
}

/// The pushforward-section map `β_*` as a Steinberg morphism from the
/// sections of the pullback to the sections of the target.
pub fn pushforward_sections(p: &PierceMorphism) -> Result<SteinbergMorphism, DualityError> {
    let pb = &p.pullback;
    let st_src = section_structure_of(&pb.bundle, pb.ringoid.as_ref());
    let st_tgt = section_structure_of(&p.target, p.target_ringoid.as_ref());
    let map = st_src
        .sections
        .iter()
        .map(|x| {
            let values = (0..p.target.base().size())
                .map(|g| match pb.base_position(g) {
                    Some(pos) => p.beta[x.values[pos]],
                    None => p.target.zero_at(g),
                })
                .collect();
            st_tgt
                .index_of(&Section { values })
                .ok_or(DualityError::TransportMissing)
        })
        .collect::<Result<_, _>>()?;
    Ok(SteinbergMorphism { source: st_src.data, target: st_tgt.data, map })
}

/// `S(ρ', β, φ, ρ) = β_* ∘ φ*` between the section carriers.
pub fn functor_s(p: &PierceMorphism) -> Result<SteinbergMorphism, DualityError> {
    let st_src = section_structure_of(&p.source, p.source_ringoid.as_ref());
    let st_tgt = section_structure_of(&p.target, p.target_ringoid.as_ref());
    let map = st_src
        .sections
        .iter()
        .map(|x| {
            st_tgt
                .index_of(&transport_section(p, x))
                .ok_or(DualityError::TransportMissing)
        })
        .collect::<Result<_, _>>()?;
    Ok(SteinbergMorphism { source: st_src.data, target: st_tgt.data, map })
}

// ---------------------------------------------------------------------------
// η and ε.

/// The representation `a ↦ â` packaged as a morphism onto the section
/// carrier of the dual bundle, with bijectivity witnesses.
pub struct EtaResult {
    pub morphism: SteinbergMorphism,
    pub dual: UltrafilterBundle,
    pub sections: SectionStructure,
    pub injective: bool,
    pub surjective: bool,
    pub witness: Option<Vec<usize>>,
}

pub fn eta(d: &StructuredData, rel: &RelationCache) -> Result<EtaResult, DualityError> {
    let dual = ultrafilter_bundle::build_bundle(d, rel)?;
    let st = match &dual.built {
        BuiltBundle::Ringoid(rb) => sections::section_structure_ring(rb),
        BuiltBundle::Category(b) => sections::section_structure_cat(b),
    };
    // In the semigroup case the map is defined on S; with the section
    // carrier being exactly the slice-supported sections, both sides carry S
    // as the whole carrier. In the ring case both carriers are full.
    let mut map = Vec::with_capacity(d.size());
    let mut witness = None;
    for a in 0..d.size() {
        let h = ultrafilter_bundle::hat(&dual, a);
        match st.index_of(&h) {
            Some(i) => map.push(i),
            None => return Err(DualityError::HatMissing { a }),
        }
    }
    let mut seen = vec![false; st.data.size()];
    let mut injective = true;
    let mut hit = 0usize;
    for (a, &i) in map.iter().enumerate() {
        if seen[i] {
            injective = false;
            let other = map.iter().position(|&j| j == i).unwrap();
            witness.get_or_insert(vec![other, a]);
        } else {
            seen[i] = true;
            hit += 1;
        }
    }
    let surjective = hit == st.data.size();
    if !surjective && witness.is_none() {
        witness = (0..st.data.size()).find(|&i| !seen[i]).map(|i| vec![i]);
    }
    let morphism = SteinbergMorphism { source: d.clone(), target: st.data.clone(), map };
    Ok(EtaResult { morphism, dual, sections: st, injective, surjective, witness })
}

/// Evaluation of sections at base arrows, packaged as a Pierce morphism from
/// the dual bundle of the section carrier back onto the original bundle.
pub struct EpsilonResult {
    pub pierce: PierceMorphism,
    pub sections: SectionStructure,
    pub dual: UltrafilterBundle,
    pub groupoid_iso: bool,
    pub bundle_iso: bool,
}

pub fn epsilon(
    bundle: &FiniteBundle,
    ringoid: Option<&FiniteRingoidBundle>,
) -> Result<EpsilonResult, DualityError> {
    let st = section_structure_of(bundle, ringoid);
    let rel = RelationCache::new(&st.data);
    let dual = ultrafilter_bundle::build_bundle(&st.data, &rel)?;
    let core = bundle.core_arrows();

    // ε_ρ(g) = the set of slice-supported sections invertible at g.
    let map: Vec<Option<usize>> = (0..bundle.base().size())
        .map(|g| {
            let members: Vec<usize> = st
                .data
                .s_set()
                .iter()
                .copied()
                .filter(|&i| core.binary_search(&st.sections[i].values[g]).is_ok())
                .collect();
            match dual.ug.ultrafilters.iter().position(|u| u.members == members) {
                Some(i) => Ok(Some(i)),
                None => Err(DualityError::EvaluationNotUltrafilter { g }),
            }
        })
        .collect::<Result<_, _>>()?;
    let phi = EtaleMorphism {
        source: bundle.base().clone(),
        target: dual.ug.groupoid.clone(),
        map,
    };
    let groupoid_iso = {
        let mut images: Vec<usize> = phi.map.iter().flatten().copied().collect();
        images.sort_unstable();
        images.dedup();
        images.len() == bundle.base().size()
            && images.len() == dual.ug.groupoid.size()
            && validate_etale_morphism(&phi).all_pass()
    };

    let dual_ringoid = dual.ringoid().cloned();
    let pullback = pullback_bundle(&phi, dual.bundle(), dual_ringoid.as_ref());
    let beta: Vec<usize> = pullback
        .pairs
        .iter()
        .map(|&(g, c)| {
            let (u, pos) = dual.class_of[c];
            debug_assert_eq!(Some(u), phi.map[g]);
            let section_index = dual.fibers[u][pos].canonical;
            st.sections[section_index].values[g]
        })
        .collect();

    let bundle_iso = {
        let mut images = beta.clone();
        images.sort_unstable();
        images.dedup();
        images.len() == beta.len() && images.len() == bundle.total().size()
    };

    let pierce = PierceMorphism {
        source: dual.bundle().clone(),
        target: bundle.clone(),
        source_ringoid: dual_ringoid,
        target_ringoid: ringoid.cloned(),
        phi,
        pullback,
        beta,
    };
    Ok(EpsilonResult { pierce, sections: st, dual, groupoid_iso, bundle_iso })
}

/// The evaluation criterion: two sections agree at `g` exactly when they are
/// equivalent over the ultrafilter of sections invertible at `g`.
pub fn epsilon_matches_equivalence(eps: &EpsilonResult, bundle: &FiniteBundle) -> bool {
    let st = &eps.sections;
    (0..bundle.base().size()).all(|g| {
        let u = eps.pierce.phi.map[g].unwrap();
        let ultra = &eps.dual.ug.ultrafilters[u];
        st.data.s_set().iter().all(|&a| {
            st.data.s_set().iter().all(|&b| {
                let pointwise = st.sections[a].values[g] == st.sections[b].values[g];
                pointwise == ultrafilter_bundle::equivalent(&st.data, a, b, ultra)
            })
        })
    })
}

// ---------------------------------------------------------------------------
// Naturality.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalityReport {
    pub checks: Vec<MorphismCheck>,
}

impl NaturalityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// The η-naturality square: `η ∘ π = (π̄)_* ∘ (π̲)* ∘ η`, elementwise over
/// the source carrier and every target ultrafilter.
pub fn check_naturality(m: &SteinbergMorphism) -> Result<NaturalityReport, DualityError> {
    let induced = functor_u(m)?;
    let mut w = None;
    'outer: for a in 0..m.source.size() {
        let lhs = ultrafilter_bundle::hat(&induced.target_dual, m.map[a]);
        let rhs = transport_section(
            &induced.pierce,
            &ultrafilter_bundle::hat(&induced.source_dual, a),
        );
        for u in 0..lhs.values.len() {
            if lhs.values[u] != rhs.values[u] {
                w = Some(vec![a, u]);
                break 'outer;
            }
        }
    }
    Ok(NaturalityReport { checks: vec![check("eta-naturality", w)] })
}

/// The ε-naturality squares of a Pierce morphism `p : ρ → ρ'`:
///
/// * base: `ε_ρ ∘ φ = (β_* ∘ φ*)̲ ∘ ε_{ρ'}` as partial maps on the base
///   of `ρ'`;
/// * total: `β • ε^ρ = ε^{ρ'} • (β_* ∘ φ*)‾` pointwise on the pullback.
pub fn check_naturality_pierce(p: &PierceMorphism) -> Result<NaturalityReport, DualityError> {
    let eps_src = epsilon(&p.source, p.source_ringoid.as_ref())?;
    let eps_tgt = epsilon(&p.target, p.target_ringoid.as_ref())?;
    let spi = functor_s(p)?;
    let induced = functor_u(&spi)?;

    // Base square over every base arrow of ρ'.
    let mut base_w = None;
    for g in 0..p.target.base().size() {
        let lhs = p.phi.map[g].map(|h| eps_src.pierce.phi.map[h].unwrap());
        let e = eps_tgt.pierce.phi.map[g].unwrap();
        let rhs = induced.pierce.phi.map[e];
        if lhs != rhs {
            base_w = Some(vec![g]);
            break;
        }
    }

    // Total square over every pullback pair (g, x) with x in the fiber of
    // the source dual bundle over ε_ρ(φ(g)).
    let mut total_w = None;
    'total: for g in 0..p.target.base().size() {
        let Some(h) = p.phi.map[g] else { continue };
        let u0 = eps_src.pierce.phi.map[h].unwrap();
        for x in eps_src.dual.bundle().fiber(u0) {
            // LHS: evaluate at (h, x) through ε^ρ, then push through β.
            let c1 = eps_src.pierce.beta[eps_src.pierce.pullback.pair_index[&(h, x)]];
            let lhs = p.beta[p.pullback.pair_index[&(g, c1)]];
            // RHS: push the class through (β_* ∘ φ*)‾ at ε_{ρ'}(g), then
            // evaluate through ε^{ρ'}.
            let e = eps_tgt.pierce.phi.map[g].unwrap();
            let x2 = induced.pierce.beta[induced.pierce.pullback.pair_index[&(e, x)]];
            let rhs = eps_tgt.pierce.beta[eps_tgt.pierce.pullback.pair_index[&(g, x2)]];
            if lhs != rhs {
                total_w = Some(vec![g, x]);
                break 'total;
            }
        }
    }

    Ok(NaturalityReport {
        checks: vec![
            check("epsilon-base-naturality", base_w),
            check("epsilon-total-naturality", total_w),
        ],
    })
}
