//! Structured carriers: a semigroup or ring `A` with a marked subsemigroup
//! `S`, a marked subset `Z ⊆ S`, and an expectation `Φ : A → S`.
//!
//! Construction validates shape only (index ranges, sortedness, `Z ⊆ S`,
//! `Φ` landing in `S`); the algebraic laws live in [`crate::axioms`], so
//! deliberately broken values can exist for diagnostics.
//!
//! When the carrier is a ring, `(A, S)` is treated as a semimodule: relation
//! and law scans only ever form products with at least one factor in `S`.

use crate::semigroup::{FiniteRing, FiniteSemigroup};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Carrier {
    Semigroup(FiniteSemigroup),
    Ring(FiniteRing),
}

impl Carrier {
    pub fn size(&self) -> usize {
        match self {
            Carrier::Semigroup(s) => s.size(),
            Carrier::Ring(r) => r.size(),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            Carrier::Semigroup(s) => s.mul(a, b),
            Carrier::Ring(r) => r.mul(a, b),
        }
    }

    pub fn zero(&self) -> Option<usize> {
        match self {
            Carrier::Semigroup(s) => s.zero(),
            Carrier::Ring(r) => Some(r.zero()),
        }
    }

    pub fn name(&self, i: usize) -> &str {
        match self {
            Carrier::Semigroup(s) => s.name(i),
            Carrier::Ring(r) => r.name(i),
        }
    }

    pub fn names(&self) -> &[String] {
        match self {
            Carrier::Semigroup(s) => s.names(),
            Carrier::Ring(r) => r.names(),
        }
    }

    pub fn is_ring(&self) -> bool {
        matches!(self, Carrier::Ring(_))
    }

    pub fn ring(&self) -> Option<&FiniteRing> {
        match self {
            Carrier::Ring(r) => Some(r),
            _ => None,
        }
    }

    pub fn add(&self, a: usize, b: usize) -> Option<usize> {
        self.ring().map(|r| r.add(a, b))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructuredError {
    #[error("subset {0} is not a sorted deduplicated index list into the carrier")]
    BadSubset(&'static str),
    #[error("Z must be contained in S")]
    ZNotInS,
    #[error("S must be non-empty")]
    EmptyS,
    #[error("Phi must be a total map into S (fails at {a})")]
    PhiNotIntoS { a: usize },
    #[error("Phi table length does not match the carrier")]
    PhiShape,
}

/// `(A, S, Z, Φ)` with syntactic sets: `s_set` and `z_set` are sorted index
/// lists, `phi` is a flat table over the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredData {
    pub carrier: Carrier,
    s_set: Vec<usize>,
    z_set: Vec<usize>,
    phi: Vec<usize>,
    s_mask: Vec<bool>,
    z_mask: Vec<bool>,
    d_mask: Vec<bool>,
}

fn sorted_subset(v: &[usize], n: usize) -> bool {
    v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|&e| e < n)
}

impl StructuredData {
    pub fn new(
        carrier: Carrier,
        s_set: Vec<usize>,
        z_set: Vec<usize>,
        phi: Vec<usize>,
    ) -> Result<Self, StructuredError> {
        let n = carrier.size();
        if !sorted_subset(&s_set, n) {
            return Err(StructuredError::BadSubset("S"));
        }
        if !sorted_subset(&z_set, n) {
            return Err(StructuredError::BadSubset("Z"));
        }
        if s_set.is_empty() {
            return Err(StructuredError::EmptyS);
        }
        if z_set.iter().any(|z| s_set.binary_search(z).is_err()) {
            return Err(StructuredError::ZNotInS);
        }
        if phi.len() != n {
            return Err(StructuredError::PhiShape);
        }
        if let Some(a) = (0..n).find(|&a| s_set.binary_search(&phi[a]).is_err()) {
            return Err(StructuredError::PhiNotIntoS { a });
        }
        let mut s_mask = vec![false; n];
        let mut z_mask = vec![false; n];
        let mut d_mask = vec![false; n];
        for &s in &s_set {
            s_mask[s] = true;
        }
        for &z in &z_set {
            z_mask[z] = true;
        }
        for &r in &phi {
            d_mask[r] = true;
        }
        Ok(StructuredData { carrier, s_set, z_set, phi, s_mask, z_mask, d_mask })
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.carrier.mul(a, b)
    }

    #[inline]
    pub fn phi(&self, a: usize) -> usize {
        self.phi[a]
    }

    pub fn phi_table(&self) -> &[usize] {
        &self.phi
    }

    pub fn zero(&self) -> Option<usize> {
        self.carrier.zero()
    }

    pub fn s_set(&self) -> &[usize] {
        &self.s_set
    }

    pub fn z_set(&self) -> &[usize] {
        &self.z_set
    }

    #[inline]
    pub fn in_s(&self, a: usize) -> bool {
        self.s_mask[a]
    }

    #[inline]
    pub fn in_z(&self, a: usize) -> bool {
        self.z_mask[a]
    }

    /// `ran(Φ)`, sorted. By idempotency this is `{a : Φ(a) = a}` on valid
    /// data, but it is computed as the literal image so diagnostics work on
    /// broken inputs too.
    pub fn d_set(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.phi.to_vec();
        d.sort_unstable();
        d.dedup();
        d
    }

    #[inline]
    pub fn in_d(&self, a: usize) -> bool {
        self.d_mask[a]
    }

    pub fn name(&self, i: usize) -> &str {
        self.carrier.name(i)
    }

    /// Idempotents of `Z`, sorted.
    pub fn ez_set(&self) -> Vec<usize> {
        self.z_set
            .iter()
            .copied()
            .filter(|&z| self.mul(z, z) == z)
            .collect()
    }

    /// The multiplicative restriction to `S` as its own structured semigroup,
    /// with the index maps between parent and restriction.
    pub fn restrict_to_s(&self) -> Restriction {
        let to_parent = self.s_set.clone();
        let mut from_parent = vec![None; self.size()];
        for (i, &p) in to_parent.iter().enumerate() {
            from_parent[p] = Some(i);
        }
        let names = to_parent.iter().map(|&p| self.name(p).to_string()).collect();
        let k = to_parent.len();
        let mult: Vec<Vec<usize>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let p = self.mul(to_parent[i], to_parent[j]);
                        from_parent[p].expect("S closed under multiplication")
                    })
                    .collect()
            })
            .collect();
        let zero = self.zero().and_then(|z| from_parent[z]);
        let sg = crate::semigroup::validate_semigroup(names, mult, zero)
            .expect("restriction of a valid carrier");
        let s_set: Vec<usize> = (0..k).collect();
        let z_set = self
            .z_set
            .iter()
            .map(|&z| from_parent[z].expect("Z inside S"))
            .collect();
        let phi = to_parent
            .iter()
            .map(|&p| from_parent[self.phi(p)].expect("Phi lands in S"))
            .collect();
        let data = StructuredData::new(Carrier::Semigroup(sg), s_set, z_set, phi)
            .expect("restriction shape");
        Restriction { data, to_parent, from_parent }
    }
}

/// The `S`-restriction of a structured carrier together with its index maps.
pub struct Restriction {
    pub data: StructuredData,
    pub to_parent: Vec<usize>,
    pub from_parent: Vec<Option<usize>>,
}

/// A quasi-Cartan pair: a ring carrier `A` over a declared scalar ring, with
/// the commutative subalgebra stored explicitly next to the structured data
/// (whose `Z` field holds the subalgebra's idempotents).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiCartanPair {
    pub data: StructuredData,
    /// The subalgebra of the pair, sorted carrier indices.
    pub z_subalgebra: Vec<usize>,
    pub scalars: FiniteRing,
    /// Scalar action table, `action[r][a]` in carrier indices.
    pub action: Vec<Vec<usize>>,
}
