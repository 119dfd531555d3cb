//! Bundles: a projection functor from a total category onto a base groupoid
//! with a zero section, and the ringoid variant with fiberwise addition.
//!
//! On a finite discrete carrier the projection is automatically étale and the
//! base automatically Hausdorff and compactly based, so the validated data
//! here is exactly the isofibration + zero-section + core-surjectivity laws.

use crate::category::{core, FiniteCategory, FiniteGroupoid};
use crate::exec;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BundleError {
    #[error("table shape mismatch ({0})")]
    BadShape(String),
    #[error("rho is not a functor (witness arrow pair ({a}, {b}))")]
    NotFunctor { a: usize, b: usize },
    #[error("rho is not injective on units ({e1} and {e2} collide)")]
    NotIsofibration { e1: usize, e2: usize },
    #[error("zero-section law fails at base arrow {g} (total witness {witness:?})")]
    ZeroLawFails { g: usize, witness: Option<usize> },
    #[error("base arrow {g} has no invertible preimage")]
    CoreNotSurjective { g: usize },
    #[error("fibers do not partition the total category ({0})")]
    BadFibers(String),
    #[error("fiber over base arrow {g} is not an abelian group with the zero section as identity")]
    BadFiberGroup { g: usize },
    #[error("product fails to distribute over fiber sums (witness arrows ({a}, {b}, {c}))")]
    NotFiberDistributive { a: usize, b: usize, c: usize },
}

/// A validated bundle: `rho` maps total arrows onto base arrows, is a functor
/// and an isofibration, the zero section absorbs, and every base arrow has an
/// invertible preimage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteBundle {
    total: FiniteCategory,
    base: FiniteGroupoid,
    rho: Vec<usize>,
    zero: Vec<usize>,
}

impl FiniteBundle {
    pub fn total(&self) -> &FiniteCategory {
        &self.total
    }

    pub fn base(&self) -> &FiniteGroupoid {
        &self.base
    }

    #[inline]
    pub fn rho(&self, c: usize) -> usize {
        self.rho[c]
    }

    pub fn rho_table(&self) -> &[usize] {
        &self.rho
    }

    /// The zero section `g ↦ 0_g`.
    #[inline]
    pub fn zero_at(&self, g: usize) -> usize {
        self.zero[g]
    }

    pub fn zero_table(&self) -> &[usize] {
        &self.zero
    }

    /// Total arrows sitting over `g`, sorted.
    pub fn fiber(&self, g: usize) -> Vec<usize> {
        (0..self.total.size()).filter(|&c| self.rho[c] == g).collect()
    }

    pub fn core_arrows(&self) -> Vec<usize> {
        core(&self.total).expect("validated total category").0
    }
}

/// Checks all bundle laws, returning the value or the first violated law with
/// a witness arrow.
pub fn validate_bundle(
    total: FiniteCategory,
    base: FiniteGroupoid,
    rho: Vec<usize>,
    zero: Vec<usize>,
) -> Result<FiniteBundle, BundleError> {
    let nc = total.size();
    let ng = base.size();
    if rho.len() != nc || rho.iter().any(|&g| g >= ng) {
        return Err(BundleError::BadShape("rho".into()));
    }
    if zero.len() != ng || zero.iter().any(|&c| c >= nc) {
        return Err(BundleError::BadShape("zero".into()));
    }

    // Functor: units to units, composites to composites. Unit preservation is
    // checked as rho(src a) = src(rho a) and dually, which also pins the unit
    // images.
    for a in 0..nc {
        if base.src(rho[a]) != rho[total.src(a)] || base.rng(rho[a]) != rho[total.rng(a)] {
            return Err(BundleError::NotFunctor { a, b: a });
        }
    }
    for a in 0..nc {
        for b in 0..nc {
            if let Some(ab) = total.try_comp(a, b) {
                match base.try_comp(rho[a], rho[b]) {
                    Some(gh) if gh == rho[ab] => {}
                    _ => return Err(BundleError::NotFunctor { a, b }),
                }
            }
        }
    }

    // Isofibration = injective on total units.
    let units = total.units();
    for (i, &e1) in units.iter().enumerate() {
        for &e2 in &units[i + 1..] {
            if rho[e1] == rho[e2] {
                return Err(BundleError::NotIsofibration { e1, e2 });
            }
        }
    }

    // Zero section: a genuine section that absorbs on both sides.
    for g in 0..ng {
        if rho[zero[g]] != g {
            return Err(BundleError::ZeroLawFails { g, witness: None });
        }
    }
    for a in 0..nc {
        for g in 0..ng {
            if base.src(rho[a]) == base.rng(g) {
                let target = zero[base.comp(rho[a], g)];
                if total.try_comp(a, zero[g]) != Some(target) {
                    return Err(BundleError::ZeroLawFails { g, witness: Some(a) });
                }
            }
            if base.src(g) == base.rng(rho[a]) {
                let target = zero[base.comp(g, rho[a])];
                if total.try_comp(zero[g], a) != Some(target) {
                    return Err(BundleError::ZeroLawFails { g, witness: Some(a) });
                }
            }
        }
    }

    // Core-surjectivity: rho[C^×] = G.
    let (core_arrows, _) = core(&total).map_err(|e| BundleError::BadShape(e.to_string()))?;
    for g in 0..ng {
        if !core_arrows.iter().any(|&c| rho[c] == g) {
            return Err(BundleError::CoreNotSurjective { g });
        }
    }

    let bundle = FiniteBundle { total, base, rho, zero };
    debug_assert!(units_biject(&bundle));
    Ok(bundle)
}

/// rho restricted to total units is a bijection onto base units. This follows
/// from the validated laws; exposed so tests can assert it directly.
pub fn units_biject(b: &FiniteBundle) -> bool {
    let tu = b.total.units();
    let bu = b.base.units();
    if tu.len() != bu.len() {
        return false;
    }
    let mut images: Vec<usize> = tu.iter().map(|&e| b.rho[e]).collect();
    images.sort_unstable();
    images.dedup();
    images == bu
}

/// A bundle whose fibers are abelian groups (identity = the zero section)
/// over which products distribute on both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRingoidBundle {
    bundle: FiniteBundle,
    fibers: Vec<Vec<usize>>,
    /// Per base arrow, addition over positions in the fiber list.
    fadd: Vec<Vec<Vec<usize>>>,
}

impl FiniteRingoidBundle {
    pub fn bundle(&self) -> &FiniteBundle {
        &self.bundle
    }

    pub fn fibers(&self) -> &[Vec<usize>] {
        &self.fibers
    }

    pub fn fadd_tables(&self) -> &Vec<Vec<Vec<usize>>> {
        &self.fadd
    }

    fn fiber_pos(&self, g: usize, c: usize) -> usize {
        self.fibers[g].binary_search(&c).expect("arrow in its fiber")
    }

    /// Fiberwise sum of two total arrows over the same base arrow.
    pub fn fadd(&self, a: usize, b: usize) -> usize {
        let g = self.bundle.rho(a);
        assert_eq!(g, self.bundle.rho(b), "fiber sum across distinct fibers");
        self.fibers[g][self.fadd[g][self.fiber_pos(g, a)][self.fiber_pos(g, b)]]
    }

    /// Fiberwise additive inverse.
    pub fn fneg(&self, a: usize) -> usize {
        let g = self.bundle.rho(a);
        let zero = self.bundle.zero_at(g);
        self.fibers[g]
            .iter()
            .copied()
            .find(|&b| self.fadd(a, b) == zero)
            .expect("abelian group fiber")
    }
}

pub fn validate_ringoid_bundle(
    bundle: FiniteBundle,
    fibers: Vec<Vec<usize>>,
    fadd: Vec<Vec<Vec<usize>>>,
) -> Result<FiniteRingoidBundle, BundleError> {
    let ng = bundle.base().size();
    if fibers.len() != ng || fadd.len() != ng {
        return Err(BundleError::BadFibers("length".into()));
    }
    for g in 0..ng {
        if fibers[g] != bundle.fiber(g) {
            return Err(BundleError::BadFibers(format!("fiber over {g}")));
        }
        let k = fibers[g].len();
        if fadd[g].len() != k || fadd[g].iter().any(|r| r.len() != k || r.iter().any(|&e| e >= k)) {
            return Err(BundleError::BadFibers(format!("fadd table over {g}")));
        }
    }
    // Abelian group per fiber with the zero section as identity.
    for g in 0..ng {
        let k = fibers[g].len();
        let t = &fadd[g];
        let zp = fibers[g]
            .binary_search(&bundle.zero_at(g))
            .map_err(|_| BundleError::BadFiberGroup { g })?;
        let assoc = exec::all(k * k * k, |i| {
            let (a, b, c) = exec::untriple(i, k);
            t[t[a][b]][c] == t[a][t[b][c]]
        });
        let comm = (0..k).all(|a| (0..k).all(|b| t[a][b] == t[b][a]));
        let ident = (0..k).all(|a| t[zp][a] == a);
        let inv = (0..k).all(|a| (0..k).any(|b| t[a][b] == zp));
        if !(assoc && comm && ident && inv) {
            return Err(BundleError::BadFiberGroup { g });
        }
    }
    let rb = FiniteRingoidBundle { bundle, fibers, fadd };
    // Two-sided distributivity of composition over fiber sums.
    let total = rb.bundle.total();
    let nc = total.size();
    if let Some(w) = exec::find_min(nc * nc * nc, |i| {
        let (a, b, c) = exec::untriple(i, nc);
        // (a + b) ∘ c = a∘c + b∘c for a, b in one fiber, c composable.
        if rb.bundle.rho(a) == rb.bundle.rho(b) && total.composable(a, c) {
            let lhs = total.comp(rb.fadd(a, b), c);
            let rhs = rb.fadd(total.comp(a, c), total.comp(b, c));
            if lhs != rhs {
                return Some((a, b, c));
            }
        }
        // c ∘ (a + b) = c∘a + c∘b.
        if rb.bundle.rho(a) == rb.bundle.rho(b) && total.composable(c, a) {
            let lhs = total.comp(c, rb.fadd(a, b));
            let rhs = rb.fadd(total.comp(c, a), total.comp(c, b));
            if lhs != rhs {
                return Some((a, b, c));
            }
        }
        None
    }) {
        return Err(BundleError::NotFiberDistributive { a: w.0, b: w.1, c: w.2 });
    }
    Ok(rb)
}
