//! Filters and ultrafilters of the `S`-part of a structured carrier, and the
//! groupoid they form under the coset operations
//!
//! ```text
//! s(U) = (U*U)^<    r(U) = (UU*)^<    U·V = (UV)^<    U⁻¹ = U*
//! ```
//!
//! A filter is a non-empty `F ⊆ S` with `a, b ∈ F ⟺ ∃f ∈ F (f < a, b)`.
//! On a finite carrier directedness iterates down to a minimum `m ∈ F` with
//! `m < m`, so every filter is principal: `F = m^< = {x : m < x}`. The
//! enumeration uses that reduction; [`brute_force_filters`] is the
//! independent subset-enumeration oracle that certifies it on small carriers.
//!
//! Filter operations refuse to run when the carrier fails the
//! well-structured laws, since their correctness assumes that profile.

use crate::axioms::{self, Profile, ProfileInput};
use crate::category::{validate_category, validate_groupoid, FiniteGroupoid};
use crate::exec;
use crate::relations::{self, RelationCache};
use crate::structured::StructuredData;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FilterError {
    #[error("carrier fails the well-structured laws (first failure: {law})")]
    ProfileFailed { law: String },
    #[error("the carrier has no absorbing element")]
    NoZero,
    #[error("coset operation left the ultrafilter set (arrows {u}, {v})")]
    NotClosed { u: usize, v: usize },
}

/// A filter stored as its sorted member set; the generator is advisory
/// metadata (the minimum found during enumeration).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Filter {
    pub members: Vec<usize>,
    pub generator: Option<usize>,
}

impl Filter {
    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_proper(&self, d: &StructuredData) -> bool {
        match d.zero() {
            Some(z) => !self.contains(z),
            None => true,
        }
    }
}

fn require_well_structured(d: &StructuredData) -> Result<(), FilterError> {
    let report = axioms::check_profile(
        &ProfileInput::Structured(d),
        Profile::WellStructuredSemimodule,
    )
    .expect("structured input");
    match report.failures().first() {
        None => Ok(()),
        Some(c) => Err(FilterError::ProfileFailed { law: c.law.to_string() }),
    }
}

/// The defining biconditional, checked literally over `S × S`:
/// `a, b ∈ F ⟺ ∃f ∈ F (f < a and f < b)`.
pub fn is_filter(d: &StructuredData, rel: &RelationCache, members: &[usize]) -> bool {
    if members.is_empty() {
        return false;
    }
    let mut inside = vec![false; d.size()];
    for &m in members {
        inside[m] = true;
    }
    d.s_set().iter().all(|&a| {
        d.s_set().iter().all(|&b| {
            let lhs = inside[a] && inside[b];
            let rhs = members.iter().any(|&f| rel.dom[f][a] && rel.dom[f][b]);
            lhs == rhs
        })
    })
}

/// The coset-style condition `Φ[F F*] F ⊆ F`.
pub fn coset_condition(d: &StructuredData, members: &[usize]) -> bool {
    let dual = relations::dual_set(d, members);
    members.iter().all(|&f1| {
        dual.iter().all(|&s| {
            members
                .iter()
                .all(|&f2| members.binary_search(&d.mul(d.phi(d.mul(f1, s)), f2)).is_ok())
        })
    })
}

fn principal_members(d: &StructuredData, rel: &RelationCache, m: usize) -> Vec<usize> {
    d.s_set().iter().copied().filter(|&x| rel.dom[m][x]).collect()
}

/// All filters, via the principal-filter reduction, sorted by member list.
pub fn enumerate_filters(
    d: &StructuredData,
    rel: &RelationCache,
) -> Result<Vec<Filter>, FilterError> {
    require_well_structured(d)?;
    let mut out: Vec<Filter> = Vec::new();
    for &m in &relations::s_dagger(d) {
        let members = principal_members(d, rel, m);
        if members.is_empty() || out.iter().any(|f| f.members == members) {
            continue;
        }
        if is_filter(d, rel, &members) && coset_condition(d, &members) {
            out.push(Filter { members, generator: Some(m) });
        }
    }
    out.sort();
    Ok(out)
}

/// Independent oracle: enumerate all `2^|S|` subsets and keep those
/// satisfying the defining biconditional. Only usable on small carriers.
pub fn brute_force_filters(d: &StructuredData, rel: &RelationCache) -> Vec<Vec<usize>> {
    brute_force_impl(d, rel, false)
}

/// Sequential twin of [`brute_force_filters`]; same result.
pub fn brute_force_filters_seq(d: &StructuredData, rel: &RelationCache) -> Vec<Vec<usize>> {
    brute_force_impl(d, rel, true)
}

fn brute_force_impl(d: &StructuredData, rel: &RelationCache, seq: bool) -> Vec<Vec<usize>> {
    let s = d.s_set();
    let k = s.len();
    assert!(k <= 20, "subset enumeration is only feasible for small S");
    let test = |mask: usize| -> Option<Vec<usize>> {
        if mask == 0 {
            return None;
        }
        let members: Vec<usize> =
            (0..k).filter(|&i| mask & (1 << i) != 0).map(|i| s[i]).collect();
        if is_filter(d, rel, &members) {
            Some(members)
        } else {
            None
        }
    };
    let found: Vec<Option<Vec<usize>>> = if seq {
        exec::map_seq(1 << k, test)
    } else {
        exec::map(1 << k, test)
    };
    let mut out: Vec<Vec<usize>> = found.into_iter().flatten().collect();
    out.sort();
    out
}

/// Maximal proper filters, sorted by member list.
pub fn enumerate_ultrafilters(
    d: &StructuredData,
    rel: &RelationCache,
) -> Result<Vec<Filter>, FilterError> {
    if d.zero().is_none() {
        return Err(FilterError::NoZero);
    }
    let filters = enumerate_filters(d, rel)?;
    let proper: Vec<&Filter> = filters.iter().filter(|f| f.is_proper(d)).collect();
    let is_subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
    Ok(proper
        .iter()
        .filter(|f| {
            proper
                .iter()
                .all(|g| !(is_subset(&f.members, &g.members) && f.members != g.members))
        })
        .map(|f| (*f).clone())
        .collect())
}

/// The dual `F*` of a filter: all elements serving as domination witnesses
/// for some member.
pub fn filter_dual(d: &StructuredData, f: &Filter) -> Vec<usize> {
    relations::dual_set(d, &f.members)
}

/// `(F G)^<`: elementwise products, then up-closure under domination.
pub fn filter_product_members(d: &StructuredData, f: &[usize], g: &[usize]) -> Vec<usize> {
    let mut products: Vec<usize> = Vec::with_capacity(f.len() * g.len());
    for &a in f {
        for &b in g {
            products.push(d.mul(a, b));
        }
    }
    products.sort_unstable();
    products.dedup();
    relations::up_set(d, &products)
}

/// `s(F) = (F* F)^<`.
pub fn filter_source(d: &StructuredData, f: &Filter) -> Vec<usize> {
    filter_product_members(d, &filter_dual(d, f), &f.members)
}

/// `r(F) = (F F*)^<`.
pub fn filter_range(d: &StructuredData, f: &Filter) -> Vec<usize> {
    filter_product_members(d, &f.members, &filter_dual(d, f))
}

/// A unit filter is Φ-invariant: `Φ[F] ⊆ F`.
pub fn is_unit_filter(d: &StructuredData, f: &Filter) -> bool {
    f.members.iter().all(|&a| f.contains(d.phi(a)))
}

/// The ultrafilter groupoid: arrows are the ultrafilters, composition is the
/// coset product where sources and ranges match.
#[derive(Debug, Clone)]
pub struct UltrafilterGroupoid {
    pub groupoid: FiniteGroupoid,
    pub ultrafilters: Vec<Filter>,
    /// Per arrow: is this a Φ-invariant (unit) ultrafilter?
    pub unit_flags: Vec<bool>,
}

fn filter_label(d: &StructuredData, members: &[usize]) -> String {
    let names: Vec<&str> = members.iter().map(|&m| d.name(m)).collect();
    format!("{{{}}}", names.join(","))
}

pub fn ultrafilter_groupoid(
    d: &StructuredData,
    rel: &RelationCache,
) -> Result<UltrafilterGroupoid, FilterError> {
    let ultrafilters = enumerate_ultrafilters(d, rel)?;
    let k = ultrafilters.len();
    let index_of = |members: &[usize]| -> Option<usize> {
        ultrafilters.iter().position(|u| u.members == members)
    };

    let mut src = Vec::with_capacity(k);
    let mut rng = Vec::with_capacity(k);
    let mut inv = Vec::with_capacity(k);
    for (i, u) in ultrafilters.iter().enumerate() {
        let s = filter_source(d, u);
        let r = filter_range(d, u);
        let dual = filter_dual(d, u);
        src.push(index_of(&s).ok_or(FilterError::NotClosed { u: i, v: i })?);
        rng.push(index_of(&r).ok_or(FilterError::NotClosed { u: i, v: i })?);
        inv.push(index_of(&dual).ok_or(FilterError::NotClosed { u: i, v: i })?);
    }

    let mut compose: Vec<Vec<Option<usize>>> = vec![vec![None; k]; k];
    for i in 0..k {
        for j in 0..k {
            if src[i] == rng[j] {
                let prod =
                    filter_product_members(d, &ultrafilters[i].members, &ultrafilters[j].members);
                compose[i][j] =
                    Some(index_of(&prod).ok_or(FilterError::NotClosed { u: i, v: j })?);
            }
        }
    }

    let names = ultrafilters.iter().map(|u| filter_label(d, &u.members)).collect();
    let cat = validate_category(names, src, rng, compose)
        .map_err(|_| FilterError::NotClosed { u: 0, v: 0 })?;
    let groupoid =
        validate_groupoid(cat, inv).map_err(|_| FilterError::NotClosed { u: 0, v: 0 })?;
    let unit_flags = ultrafilters.iter().map(|u| is_unit_filter(d, u)).collect();
    Ok(UltrafilterGroupoid { groupoid, ultrafilters, unit_flags })
}

/// Per-ultrafilter diagnostics: primality with respect to orthogonal
/// Z-invertible elements, the Φ-collapse witness, and the Z-inverse
/// membership criterion `a ∈ U ⟺ 0 ∉ Φ[U s]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UltrafilterPropertyReport {
    pub prime: bool,
    pub prime_witness: Option<(usize, usize)>,
    /// Least `u ∈ F` with `Φ(u) = 0` or `Φ(u) = u`, with the invariant flag.
    pub phi_witness: Option<(usize, bool)>,
    pub membership_criterion: bool,
    pub membership_witness: Option<(usize, usize)>,
}

pub fn ultrafilter_properties(
    d: &StructuredData,
    rel: &RelationCache,
    f: &Filter,
) -> UltrafilterPropertyReport {
    let zero = d.zero().expect("property checks need a zero");
    let dagger = relations::s_dagger(d);

    let mut prime = true;
    let mut prime_witness = None;
    'outer: for &a in &dagger {
        for &b in &dagger {
            if rel.orth[a][b] {
                if let Some(sup) = relations::supremum(d, a, b) {
                    if f.contains(sup) && !f.contains(a) && !f.contains(b) {
                        prime = false;
                        prime_witness = Some((a, b));
                        break 'outer;
                    }
                }
            }
        }
    }

    let phi_witness = f
        .members
        .iter()
        .copied()
        .find(|&u| d.phi(u) == zero || d.phi(u) == u)
        .map(|u| (u, d.phi(u) == u));

    let mut membership_criterion = true;
    let mut membership_witness = None;
    'pairs: for &s in &dagger {
        for &a in &rel.zinv[s] {
            let in_u = f.contains(a);
            let nonzero = f.members.iter().all(|&u| d.phi(d.mul(u, s)) != zero);
            if in_u != nonzero {
                membership_criterion = false;
                membership_witness = Some((a, s));
                break 'pairs;
            }
        }
    }

    UltrafilterPropertyReport {
        prime,
        prime_witness,
        phi_witness,
        membership_criterion,
        membership_witness,
    }
}
