//! The restriction (`≤`), domination (`<`) and orthogonality (`⊥`) relations
//! on a structured carrier, decided by exhaustive witness scans, together
//! with Z-inverses, duals, supports, normalizers, orthogonal suprema and
//! relative complements.
//!
//! Definitions (all witnesses range over the marked sets, so semimodule
//! products always have a factor in `S`):
//!
//! * `a ≤ b`  ⟺  ∃ y, z ∈ Z with `yb = ya = a = az = bz`.
//! * `a <_s b` ⟺  `as, sa ∈ ran(Φ)`, `bs, sb ∈ Z` and `bsa = a = asb`.
//! * `a < b`  ⟺  some `s ∈ S` witnesses `a <_s b`.
//! * `a ⊥ b`  ⟺  ∃ y, z ∈ Z with `ya = a = az` and `yb = 0 = bz`.
//!
//! Witness selection is always the least element index, so every optional
//! witness is deterministic.

use crate::exec;
use crate::structured::StructuredData;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationError {
    #[error("the carrier has no absorbing element")]
    NoZero,
    #[error("elements {a} and {b} are not orthogonal")]
    NotOrthogonal { a: usize, b: usize },
    #[error("element {0} is not in Z")]
    NotInZ(usize),
    #[error("restriction does not hold between {y} and {z}")]
    NotRestriction { y: usize, z: usize },
}

pub fn restriction(d: &StructuredData, a: usize, b: usize) -> bool {
    d.z_set().iter().any(|&y| {
        d.mul(y, b) == a && d.mul(y, a) == a
    }) && d.z_set().iter().any(|&z| d.mul(a, z) == a && d.mul(b, z) == a)
}

/// Checks the four membership conditions and `bsa = a = asb` exactly.
/// The witness `s` must lie in `S`; anything else is a contract violation.
pub fn dominates_witnessed(d: &StructuredData, a: usize, s: usize, b: usize) -> bool {
    assert!(d.in_s(s), "domination witnesses must lie in S");
    let (as_, sa) = (d.mul(a, s), d.mul(s, a));
    if !d.in_d(as_) || !d.in_d(sa) {
        return false;
    }
    let (bs, sb) = (d.mul(b, s), d.mul(s, b));
    if !d.in_z(bs) || !d.in_z(sb) {
        return false;
    }
    d.mul(bs, a) == a && d.mul(as_, b) == a
}

/// Least-index witness for `a < b`, if any.
pub fn dominates(d: &StructuredData, a: usize, b: usize) -> Option<usize> {
    d.s_set()
        .iter()
        .copied()
        .find(|&s| dominates_witnessed(d, a, s, b))
}

pub fn orthogonal(d: &StructuredData, a: usize, b: usize) -> Result<bool, RelationError> {
    let zero = d.zero().ok_or(RelationError::NoZero)?;
    let left = d
        .z_set()
        .iter()
        .any(|&y| d.mul(y, a) == a && d.mul(y, b) == zero);
    let right = d
        .z_set()
        .iter()
        .any(|&z| d.mul(a, z) == a && d.mul(b, z) == zero);
    Ok(left && right)
}

/// `{s ∈ S : asa = a, sas = s, as ∈ Z, sa ∈ Z}`, sorted.
pub fn z_inverses(d: &StructuredData, a: usize) -> Vec<usize> {
    d.s_set()
        .iter()
        .copied()
        .filter(|&s| {
            let (as_, sa) = (d.mul(a, s), d.mul(s, a));
            d.in_z(as_)
                && d.in_z(sa)
                && d.mul(as_, a) == a
                && d.mul(sa, s) == s
        })
        .collect()
}

/// The dual `T* = {a ∈ S : ∃ t ∈ T, s ∈ S with t <_a s}`, sorted.
/// `dual_set(∅) = ∅` (vacuous existential).
pub fn dual_set(d: &StructuredData, t: &[usize]) -> Vec<usize> {
    d.s_set()
        .iter()
        .copied()
        .filter(|&a| {
            t.iter().any(|&tt| {
                d.s_set()
                    .iter()
                    .any(|&s| dominates_witnessed(d, tt, a, s))
            })
        })
        .collect()
}

/// `a^Z = {z ∈ Z : az = a}`, sorted.
pub fn right_units(d: &StructuredData, a: usize) -> Vec<usize> {
    d.z_set().iter().copied().filter(|&z| d.mul(a, z) == a).collect()
}

/// `^Z a = {z ∈ Z : za = a}`, sorted.
pub fn left_units(d: &StructuredData, a: usize) -> Vec<usize> {
    d.z_set().iter().copied().filter(|&z| d.mul(z, a) == a).collect()
}

/// `T^Z = {z ∈ Z : ∃ t ∈ T, tz = t}`, sorted.
pub fn set_right_units(d: &StructuredData, t: &[usize]) -> Vec<usize> {
    d.z_set()
        .iter()
        .copied()
        .filter(|&z| t.iter().any(|&tt| d.mul(tt, z) == tt))
        .collect()
}

/// `^Z T = {z ∈ Z : ∃ t ∈ T, zt = t}`, sorted.
pub fn set_left_units(d: &StructuredData, t: &[usize]) -> Vec<usize> {
    d.z_set()
        .iter()
        .copied()
        .filter(|&z| t.iter().any(|&tt| d.mul(z, tt) == tt))
        .collect()
}

fn minimum_under_restriction(d: &StructuredData, candidates: &[usize]) -> Option<usize> {
    candidates
        .iter()
        .copied()
        .find(|&m| candidates.iter().all(|&c| restriction(d, m, c)))
}

/// Source-support: the `≤`-minimum of `a^Z`.
pub fn source_support(d: &StructuredData, a: usize) -> Option<usize> {
    minimum_under_restriction(d, &right_units(d, a))
}

/// Range-support: the `≤`-minimum of `^Z a`.
pub fn range_support(d: &StructuredData, a: usize) -> Option<usize> {
    minimum_under_restriction(d, &left_units(d, a))
}

/// Both supports, when they exist: `(source, range)`.
pub fn supports(d: &StructuredData, a: usize) -> Option<(usize, usize)> {
    Some((source_support(d, a)?, range_support(d, a)?))
}

/// Common upper bounds of `a` and `b` in `S` under `≤`, sorted.
fn upper_bounds(d: &StructuredData, a: usize, b: usize) -> Vec<usize> {
    d.s_set()
        .iter()
        .copied()
        .filter(|&s| restriction(d, a, s) && restriction(d, b, s))
        .collect()
}

/// The supremum of an orthogonal pair: the unique `≤`-minimum of the common
/// upper bounds in `S`, when it exists.
pub fn orthosupremum(
    d: &StructuredData,
    a: usize,
    b: usize,
) -> Result<Option<usize>, RelationError> {
    if !orthogonal(d, a, b)? {
        return Err(RelationError::NotOrthogonal { a, b });
    }
    Ok(minimum_under_restriction(d, &upper_bounds(d, a, b)))
}

/// Supremum without the orthogonality gate: the unique `≤`-minimum of the
/// common upper bounds in `S`, when it exists.
pub fn supremum(d: &StructuredData, a: usize, b: usize) -> Option<usize> {
    minimum_under_restriction(d, &upper_bounds(d, a, b))
}

/// The relative complement: the unique `w ∈ Z` with `yw = 0` and
/// `y ∨ w = z`, for `y ≤ z` in `Z`.
pub fn complement(
    d: &StructuredData,
    y: usize,
    z: usize,
) -> Result<Option<usize>, RelationError> {
    if !d.in_z(y) {
        return Err(RelationError::NotInZ(y));
    }
    if !d.in_z(z) {
        return Err(RelationError::NotInZ(z));
    }
    if !restriction(d, y, z) {
        return Err(RelationError::NotRestriction { y, z });
    }
    let zero = d.zero().ok_or(RelationError::NoZero)?;
    Ok(d.z_set().iter().copied().find(|&w| {
        d.mul(y, w) == zero && supremum(d, y, w) == Some(z)
    }))
}

/// Setwise normalizers `T^N = {a : aT = Ta}`, sorted over the carrier.
pub fn normalizers(d: &StructuredData, t: &[usize]) -> Vec<usize> {
    (0..d.size())
        .filter(|&a| {
            let mut left: Vec<usize> = t.iter().map(|&x| d.mul(a, x)).collect();
            let mut right: Vec<usize> = t.iter().map(|&x| d.mul(x, a)).collect();
            left.sort_unstable();
            left.dedup();
            right.sort_unstable();
            right.dedup();
            left == right
        })
        .collect()
}

/// Elementwise commutant `T^C = {a : at = ta for every t ∈ T}`, sorted.
pub fn commutant(d: &StructuredData, t: &[usize]) -> Vec<usize> {
    (0..d.size())
        .filter(|&a| t.iter().all(|&x| d.mul(a, x) == d.mul(x, a)))
        .collect()
}

/// `S^† = {a ∈ S : a < a}`, the Z-invertible elements, sorted.
pub fn s_dagger(d: &StructuredData) -> Vec<usize> {
    d.s_set()
        .iter()
        .copied()
        .filter(|&a| dominates(d, a, a).is_some())
        .collect()
}

/// `S^≥ = {s ∈ S : s ≤ s}`, sorted.
pub fn s_reflexive(d: &StructuredData) -> Vec<usize> {
    d.s_set()
        .iter()
        .copied()
        .filter(|&a| restriction(d, a, a))
        .collect()
}

/// `S^> = {a ∈ S : a < b for some b ∈ S}` — the dominated elements, sorted.
pub fn s_dominated(d: &StructuredData) -> Vec<usize> {
    d.s_set()
        .iter()
        .copied()
        .filter(|&a| d.s_set().iter().any(|&b| dominates(d, a, b).is_some()))
        .collect()
}

/// Up-closure into `S`: `T^< = {x ∈ S : ∃ t ∈ T, t < x}` (members of `T`
/// may lie anywhere in the carrier).
pub fn up_set(d: &StructuredData, t: &[usize]) -> Vec<usize> {
    d.s_set()
        .iter()
        .copied()
        .filter(|&x| t.iter().any(|&tt| dominates(d, tt, x).is_some()))
        .collect()
}

/// Eagerly computed relation matrices over the carrier. Built once, then
/// read-only; rows are computed independently so construction parallelizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCache {
    pub leq: Vec<Vec<bool>>,
    pub dom: Vec<Vec<bool>>,
    pub orth: Vec<Vec<bool>>,
    /// Least-index domination witness per pair, where `dom` holds.
    pub dom_witness: Vec<Vec<Option<usize>>>,
    /// Z-inverse sets per element.
    pub zinv: Vec<Vec<usize>>,
}

impl RelationCache {
    pub fn new(d: &StructuredData) -> Self {
        Self::build(d, false)
    }

    /// Sequential twin of [`RelationCache::new`]; same result.
    pub fn new_sequential(d: &StructuredData) -> Self {
        Self::build(d, true)
    }

    fn build(d: &StructuredData, seq: bool) -> Self {
        let n = d.size();
        let has_zero = d.zero().is_some();
        let row = |a: usize| -> (Vec<bool>, Vec<bool>, Vec<bool>, Vec<Option<usize>>) {
            let mut leq = vec![false; n];
            let mut orth = vec![false; n];
            let mut dom = vec![false; n];
            let mut wit = vec![None; n];
            for b in 0..n {
                leq[b] = restriction(d, a, b);
                if has_zero {
                    orth[b] = orthogonal(d, a, b).unwrap();
                }
                wit[b] = dominates(d, a, b);
                dom[b] = wit[b].is_some();
            }
            (leq, dom, orth, wit)
        };
        let rows = if seq { exec::map_seq(n, row) } else { exec::map(n, row) };
        let mut cache = RelationCache {
            leq: Vec::with_capacity(n),
            dom: Vec::with_capacity(n),
            orth: Vec::with_capacity(n),
            dom_witness: Vec::with_capacity(n),
            zinv: Vec::new(),
        };
        for (leq, dom, orth, wit) in rows {
            cache.leq.push(leq);
            cache.dom.push(dom);
            cache.orth.push(orth);
            cache.dom_witness.push(wit);
        }
        cache.zinv = if seq {
            exec::map_seq(n, |a| z_inverses(d, a))
        } else {
            exec::map(n, |a| z_inverses(d, a))
        };
        cache
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn dom(&self, a: usize, b: usize) -> bool {
        self.dom[a][b]
    }

    pub fn orth(&self, a: usize, b: usize) -> bool {
        self.orth[a][b]
    }
}
