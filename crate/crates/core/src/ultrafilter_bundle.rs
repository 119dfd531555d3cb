//! The dual bundle of a structured carrier: equivalence classes of carrier
//! elements over each ultrafilter form the total category, projecting onto
//! the ultrafilter groupoid.
//!
//! The equivalence over a filter `F` is
//!
//! ```text
//! a ~_F b  ⟺  ∃ s ∈ F* (Φ(as) = Φ(bs) and Φ(sa) = Φ(sb))
//! ```
//!
//! and arrows are pairs `[a, U]` (class of `a`, ultrafilter `U`) with
//! `[a, U][b, V] = [a'b, U·V]` computed through a representative `a'` of the
//! class of `a` dominated by a member of `U`. The representative found by
//! exhaustive search is cross-checked against the expectation formula
//! `Φ(a m') m` built from the principal generator `m` of `U`.

use crate::bundle::{validate_bundle, validate_ringoid_bundle, FiniteBundle, FiniteRingoidBundle};
use crate::category::validate_category;
use crate::filters::{self, Filter, FilterError, UltrafilterGroupoid};
use crate::relations::{self, RelationCache};
use crate::sections::Section;
use crate::structured::StructuredData;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualBundleError {
    #[error("carrier fails the Steinberg laws (first failure: {law})")]
    ProfileFailed { law: String },
    #[error(transparent)]
    Filter(#[from] FilterError),
    #[error("no representative of class {class} over ultrafilter {ultrafilter} is dominated by a member")]
    RepresentativeNotFound { class: usize, ultrafilter: usize },
    #[error("fiber addition is ill-defined at ({a}, {b}) over ultrafilter {ultrafilter}")]
    IllDefinedAddition { a: usize, b: usize, ultrafilter: usize },
    #[error("assembled bundle failed validation: {0}")]
    Assembly(String),
}

/// Two-sided filter equivalence with witnesses in the dual.
pub fn equivalent(d: &StructuredData, a: usize, b: usize, f: &Filter) -> bool {
    let dual = filters::filter_dual(d, f);
    equivalent_with_dual(d, a, b, &dual)
}

fn equivalent_with_dual(d: &StructuredData, a: usize, b: usize, dual: &[usize]) -> bool {
    dual.iter().any(|&s| {
        d.phi(d.mul(a, s)) == d.phi(d.mul(b, s)) && d.phi(d.mul(s, a)) == d.phi(d.mul(s, b))
    })
}

/// One equivalence class of carrier elements over an ultrafilter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberClass {
    pub ultrafilter: usize,
    pub members: Vec<usize>,
    pub canonical: usize,
}

pub enum BuiltBundle {
    Category(FiniteBundle),
    Ringoid(FiniteRingoidBundle),
}

/// The assembled dual bundle with its class bookkeeping.
pub struct UltrafilterBundle {
    pub ug: UltrafilterGroupoid,
    /// Per ultrafilter: the fiber classes, ordered by canonical member.
    pub fibers: Vec<Vec<FiberClass>>,
    pub built: BuiltBundle,
    /// `arrow_of[u][class_pos]` is the total-arrow index.
    pub arrow_of: Vec<Vec<usize>>,
    /// Per total arrow: (ultrafilter index, class position).
    pub class_of: Vec<(usize, usize)>,
}

impl UltrafilterBundle {
    pub fn bundle(&self) -> &FiniteBundle {
        match &self.built {
            BuiltBundle::Category(b) => b,
            BuiltBundle::Ringoid(rb) => rb.bundle(),
        }
    }

    pub fn ringoid(&self) -> Option<&FiniteRingoidBundle> {
        match &self.built {
            BuiltBundle::Ringoid(rb) => Some(rb),
            BuiltBundle::Category(_) => None,
        }
    }

    /// Position of the class of element `a` in the fiber over ultrafilter `u`.
    pub fn class_position(&self, u: usize, a: usize) -> usize {
        self.fibers[u]
            .iter()
            .position(|c| c.members.binary_search(&a).is_ok())
            .expect("classes partition the carrier")
    }

    /// Total arrow of `[a, U]`.
    pub fn arrow(&self, u: usize, a: usize) -> usize {
        self.arrow_of[u][self.class_position(u, a)]
    }
}

fn partition_classes(d: &StructuredData, u_index: usize, dual: &[usize]) -> Vec<FiberClass> {
    let mut classes: Vec<FiberClass> = Vec::new();
    for a in 0..d.size() {
        match classes
            .iter_mut()
            .find(|c| equivalent_with_dual(d, c.canonical, a, dual))
        {
            Some(c) => c.members.push(a),
            None => classes.push(FiberClass {
                ultrafilter: u_index,
                members: vec![a],
                canonical: a,
            }),
        }
    }
    classes
}

/// The representative formula `Φ(a m') m` from the principal generator `m`
/// of the ultrafilter and a witness `m'` of `m < m`.
fn formula_representative(
    d: &StructuredData,
    rel: &RelationCache,
    u: &Filter,
    a: usize,
) -> Option<usize> {
    let m = u.generator?;
    let m_prime = rel.dom_witness[m][m]?;
    Some(d.mul(d.phi(d.mul(a, m_prime)), m))
}

/// Builds the dual bundle. The carrier must pass the Steinberg semigroup
/// laws (ring laws for ring carriers); the result is a validated bundle
/// (ringoid bundle in the ring case) over the ultrafilter groupoid.
pub fn build_bundle(
    d: &StructuredData,
    rel: &RelationCache,
) -> Result<UltrafilterBundle, DualBundleError> {
    use crate::axioms::{check_profile, Profile, ProfileInput};
    let profile = if d.carrier.is_ring() {
        Profile::SteinbergRing
    } else {
        Profile::SteinbergSemigroup
    };
    let report = check_profile(&ProfileInput::Structured(d), profile)
        .map_err(|e| DualBundleError::ProfileFailed { law: e.to_string() })?;
    if let Some(c) = report.failures().first() {
        return Err(DualBundleError::ProfileFailed { law: c.law.to_string() });
    }

    let ug = filters::ultrafilter_groupoid(d, rel)?;
    let k = ug.ultrafilters.len();
    let duals: Vec<Vec<usize>> =
        ug.ultrafilters.iter().map(|u| filters::filter_dual(d, u)).collect();
    let fibers: Vec<Vec<FiberClass>> =
        (0..k).map(|u| partition_classes(d, u, &duals[u])).collect();

    // Arrow enumeration: all classes in (ultrafilter, class) order.
    let mut arrow_of: Vec<Vec<usize>> = Vec::with_capacity(k);
    let mut class_of: Vec<(usize, usize)> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    for (u, classes) in fibers.iter().enumerate() {
        let mut row = Vec::with_capacity(classes.len());
        for (pos, c) in classes.iter().enumerate() {
            row.push(class_of.len());
            class_of.push((u, pos));
            names.push(format!("[{},{}]", d.name(c.canonical), ug.groupoid.name(u)));
        }
        arrow_of.push(row);
    }
    let n_arrows = class_of.len();
    let class_pos = |u: usize, a: usize| -> usize {
        fibers[u]
            .iter()
            .position(|c| c.members.binary_search(&a).is_ok())
            .expect("classes partition the carrier")
    };

    // A representative of the class, inside S and dominated by a member of
    // the ultrafilter; found by exhaustive search, cross-checked against the
    // expectation formula.
    let representative = |u: usize, pos: usize| -> Result<usize, DualBundleError> {
        let class = &fibers[u][pos];
        let found = class
            .members
            .iter()
            .copied()
            .find(|&x| {
                d.in_s(x) && ug.ultrafilters[u].members.iter().any(|&t| rel.dom[x][t])
            })
            .ok_or(DualBundleError::RepresentativeNotFound {
                class: class.canonical,
                ultrafilter: u,
            })?;
        if let Some(f) = formula_representative(d, rel, &ug.ultrafilters[u], class.canonical) {
            debug_assert!(
                equivalent_with_dual(d, f, found, &duals[u]),
                "formula representative disagrees with the search"
            );
        }
        Ok(found)
    };

    let zero = d.zero().expect("Steinberg carriers have a zero");
    let mut src = vec![0usize; n_arrows];
    let mut rng = vec![0usize; n_arrows];
    for (arrow, &(u, _pos)) in class_of.iter().enumerate() {
        let su = ug.groupoid.src(u);
        let ru = ug.groupoid.rng(u);
        let uz = relations::set_right_units(d, &ug.ultrafilters[u].members);
        let zu = relations::set_left_units(d, &ug.ultrafilters[u].members);
        let z_src = uz.first().copied().unwrap_or(zero);
        let z_rng = zu.first().copied().unwrap_or(zero);
        src[arrow] = arrow_of[su][class_pos(su, z_src)];
        rng[arrow] = arrow_of[ru][class_pos(ru, z_rng)];
    }

    let mut compose: Vec<Vec<Option<usize>>> = vec![vec![None; n_arrows]; n_arrows];
    for (i, &(u, upos)) in class_of.iter().enumerate() {
        for (j, &(v, vpos)) in class_of.iter().enumerate() {
            if let Some(uv) = ug.groupoid.try_comp(u, v) {
                let a = representative(u, upos)?;
                let b = fibers[v][vpos].canonical;
                let prod = d.mul(a, b);
                compose[i][j] = Some(arrow_of[uv][class_pos(uv, prod)]);
            }
        }
    }

    let total = validate_category(names, src, rng, compose)
        .map_err(|e| DualBundleError::Assembly(e.to_string()))?;
    let rho: Vec<usize> = class_of.iter().map(|&(u, _)| u).collect();
    let zero_section: Vec<usize> =
        (0..k).map(|u| arrow_of[u][class_pos(u, zero)]).collect();
    let bundle = validate_bundle(total, ug.groupoid.clone(), rho, zero_section)
        .map_err(|e| DualBundleError::Assembly(e.to_string()))?;

    let built = if let Some(ring) = d.carrier.ring() {
        // Fiberwise addition on classes, with well-definedness asserted over
        // every representative pair.
        let fiber_lists: Vec<Vec<usize>> = (0..k).map(|u| bundle.fiber(u)).collect();
        let mut fadd: Vec<Vec<Vec<usize>>> = Vec::with_capacity(k);
        for u in 0..k {
            let list = &fiber_lists[u];
            let m = list.len();
            let mut table = vec![vec![0usize; m]; m];
            for (i, &ai) in list.iter().enumerate() {
                for (j, &aj) in list.iter().enumerate() {
                    let (_, pi) = class_of[ai];
                    let (_, pj) = class_of[aj];
                    let ca = &fibers[u][pi];
                    let cb = &fibers[u][pj];
                    let sum_pos = class_pos(u, ring.add(ca.canonical, cb.canonical));
                    for &x in &ca.members {
                        for &y in &cb.members {
                            if class_pos(u, ring.add(x, y)) != sum_pos {
                                return Err(DualBundleError::IllDefinedAddition {
                                    a: x,
                                    b: y,
                                    ultrafilter: u,
                                });
                            }
                        }
                    }
                    let sum_arrow = arrow_of[u][sum_pos];
                    table[i][j] = list.binary_search(&sum_arrow).unwrap();
                }
            }
            fadd.push(table);
        }
        BuiltBundle::Ringoid(
            validate_ringoid_bundle(bundle, fiber_lists, fadd)
                .map_err(|e| DualBundleError::Assembly(e.to_string()))?,
        )
    } else {
        BuiltBundle::Category(bundle)
    };

    Ok(UltrafilterBundle { ug, fibers, built, arrow_of, class_of })
}

/// The representation `a ↦ â`: the section `U ↦ [a, U]` of the dual bundle.
pub fn hat(ub: &UltrafilterBundle, a: usize) -> Section {
    let values = (0..ub.ug.ultrafilters.len()).map(|u| ub.arrow(u, a)).collect();
    Section { values }
}

/// Structural laws of the built bundle, re-derived for verification:
/// invertible arrows are exactly the member classes, units are the Z-unit
/// classes over unit ultrafilters, and sources are witnessed by every right
/// unit of the ultrafilter.
pub fn structural_laws_hold(d: &StructuredData, ub: &UltrafilterBundle) -> bool {
    let bundle = ub.bundle();
    let core = bundle.core_arrows();
    let core_ok = (0..bundle.total().size()).all(|arrow| {
        let (u, pos) = ub.class_of[arrow];
        let touches = ub.fibers[u][pos]
            .members
            .iter()
            .any(|&m| ub.ug.ultrafilters[u].contains(m));
        touches == core.binary_search(&arrow).is_ok()
    });

    let units_ok = (0..bundle.total().size()).all(|arrow| {
        let (u, pos) = ub.class_of[arrow];
        let uz = relations::set_right_units(d, &ub.ug.ultrafilters[u].members);
        let is_unit_class = ub.ug.unit_flags[u]
            && ub.fibers[u][pos].members.iter().any(|&m| uz.binary_search(&m).is_ok());
        is_unit_class == bundle.total().is_unit(arrow)
    });

    let sources_ok = (0..ub.ug.ultrafilters.len()).all(|u| {
        let uz = relations::set_right_units(d, &ub.ug.ultrafilters[u].members);
        let su = ub.ug.groupoid.src(u);
        uz.iter()
            .all(|&z| ub.arrow(su, z) == bundle.total().src(ub.arrow_of[u][0]))
    });

    core_ok && units_ok && sources_ok
}
