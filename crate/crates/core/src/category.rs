//! Finite categories and groupoids as partial composition tables.
//!
//! Arrows compose as functions: `a ∘ b` is defined exactly when
//! `src(a) = rng(b)`. The composition table stores an explicit `None` for
//! undefined pairs; composing an undefined pair through [`FiniteCategory::comp`]
//! is a contract violation, not a silent zero.

use crate::exec;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CategoryError {
    #[error("table shape does not match the arrow list ({0})")]
    BadShape(String),
    #[error("src/rng of arrow {a} does not land on a unit")]
    NotAUnit { a: usize },
    #[error("unit {e} is not idempotent under src/rng")]
    BadUnit { e: usize },
    #[error("composition defined-pattern wrong at ({a}, {b})")]
    BadPattern { a: usize, b: usize },
    #[error("src/rng of composite ({a}, {b}) is wrong")]
    BadComposite { a: usize, b: usize },
    #[error("unit law fails at arrow {a}")]
    UnitLawFails { a: usize },
    #[error("associativity fails at ({a}, {b}, {c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("arrow {a} has two distinct inverses")]
    NonUniqueInverse { a: usize },
    #[error("arrow {a} is not invertible")]
    NotInvertible { a: usize },
    #[error("declared inverse of arrow {a} is wrong")]
    BadInverse { a: usize },
}

/// A finite category: arrows with source/range maps landing in units and a
/// partial composition table defined exactly on composable pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    names: Vec<String>,
    src: Vec<usize>,
    rng: Vec<usize>,
    compose: Vec<Vec<Option<usize>>>,
}

impl FiniteCategory {
    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn src(&self, a: usize) -> usize {
        self.src[a]
    }

    #[inline]
    pub fn rng(&self, a: usize) -> usize {
        self.rng[a]
    }

    pub fn src_table(&self) -> &[usize] {
        &self.src
    }

    pub fn rng_table(&self) -> &[usize] {
        &self.rng
    }

    pub fn compose_table(&self) -> &Vec<Vec<Option<usize>>> {
        &self.compose
    }

    pub fn composable(&self, a: usize, b: usize) -> bool {
        self.src[a] == self.rng[b]
    }

    /// Composite `a ∘ b`. Panics on non-composable pairs: callers must check
    /// `composable` first.
    #[inline]
    pub fn comp(&self, a: usize, b: usize) -> usize {
        self.compose[a][b]
            .unwrap_or_else(|| panic!("composing non-composable arrows {a} and {b}"))
    }

    pub fn try_comp(&self, a: usize, b: usize) -> Option<usize> {
        self.compose[a][b]
    }

    /// The derived unit set `{src(a)} ∪ {rng(a)}`, sorted.
    pub fn units(&self) -> Vec<usize> {
        let mut u: Vec<usize> = self.src.iter().chain(self.rng.iter()).copied().collect();
        u.sort_unstable();
        u.dedup();
        u
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.src[a] == a && self.rng[a] == a
    }
}

/// Invertible arrows with their (unique) inverses.
///
/// Returns the sorted core and, per arrow, its inverse when invertible.
pub fn core(cat: &FiniteCategory) -> Result<(Vec<usize>, Vec<Option<usize>>), CategoryError> {
    let n = cat.size();
    let mut inv: Vec<Option<usize>> = vec![None; n];
    for (a, slot) in inv.iter_mut().enumerate() {
        for b in 0..n {
            if cat.composable(b, a)
                && cat.composable(a, b)
                && cat.comp(b, a) == cat.src(a)
                && cat.comp(a, b) == cat.rng(a)
            {
                if let Some(prev) = *slot {
                    if prev != b {
                        return Err(CategoryError::NonUniqueInverse { a });
                    }
                } else {
                    *slot = Some(b);
                }
            }
        }
    }
    let arrows = (0..n).filter(|&a| inv[a].is_some()).collect();
    Ok((arrows, inv))
}

pub fn validate_category(
    names: Vec<String>,
    src: Vec<usize>,
    rng: Vec<usize>,
    compose: Vec<Vec<Option<usize>>>,
) -> Result<FiniteCategory, CategoryError> {
    let n = names.len();
    if src.len() != n || rng.len() != n || compose.len() != n {
        return Err(CategoryError::BadShape("src/rng/compose length".into()));
    }
    for (i, row) in compose.iter().enumerate() {
        if row.len() != n {
            return Err(CategoryError::BadShape(format!("compose row {i}")));
        }
        if row.iter().flatten().any(|&e| e >= n) {
            return Err(CategoryError::BadShape(format!("compose row {i} out of range")));
        }
    }
    if src.iter().chain(rng.iter()).any(|&e| e >= n) {
        return Err(CategoryError::BadShape("src/rng out of range".into()));
    }
    let cat = FiniteCategory { names, src, rng, compose };
    for a in 0..n {
        let (e, f) = (cat.src(a), cat.rng(a));
        if !cat.is_unit(e) || !cat.is_unit(f) {
            return Err(CategoryError::NotAUnit { a });
        }
    }
    for a in 0..n {
        for b in 0..n {
            let defined = cat.try_comp(a, b).is_some();
            if defined != cat.composable(a, b) {
                return Err(CategoryError::BadPattern { a, b });
            }
            if let Some(ab) = cat.try_comp(a, b) {
                if cat.src(ab) != cat.src(b) || cat.rng(ab) != cat.rng(a) {
                    return Err(CategoryError::BadComposite { a, b });
                }
            }
        }
    }
    for a in 0..n {
        if cat.try_comp(a, cat.src(a)) != Some(a) || cat.try_comp(cat.rng(a), a) != Some(a) {
            return Err(CategoryError::UnitLawFails { a });
        }
    }
    if let Some((a, b, c)) = exec::find_min(n * n * n, |i| {
        let (a, b, c) = exec::untriple(i, n);
        match (cat.try_comp(a, b), cat.try_comp(b, c)) {
            (Some(ab), Some(bc)) => {
                if cat.try_comp(ab, c) != cat.try_comp(a, bc) {
                    Some((a, b, c))
                } else {
                    None
                }
            }
            _ => None,
        }
    }) {
        return Err(CategoryError::NonAssociative { a, b, c });
    }
    Ok(cat)
}

/// A finite groupoid: a category in which every arrow is invertible, with the
/// inverse map stored totally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    cat: FiniteCategory,
    inv: Vec<usize>,
}

impl FiniteGroupoid {
    pub fn category(&self) -> &FiniteCategory {
        &self.cat
    }

    pub fn size(&self) -> usize {
        self.cat.size()
    }

    pub fn name(&self, a: usize) -> &str {
        self.cat.name(a)
    }

    #[inline]
    pub fn src(&self, a: usize) -> usize {
        self.cat.src(a)
    }

    #[inline]
    pub fn rng(&self, a: usize) -> usize {
        self.cat.rng(a)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn inv_table(&self) -> &[usize] {
        &self.inv
    }

    pub fn composable(&self, a: usize, b: usize) -> bool {
        self.cat.composable(a, b)
    }

    #[inline]
    pub fn comp(&self, a: usize, b: usize) -> usize {
        self.cat.comp(a, b)
    }

    pub fn try_comp(&self, a: usize, b: usize) -> Option<usize> {
        self.cat.try_comp(a, b)
    }

    pub fn units(&self) -> Vec<usize> {
        self.cat.units()
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.cat.is_unit(a)
    }
}

/// Validates that every arrow of `cat` is invertible and `inv` is the unique
/// inverse map.
pub fn validate_groupoid(
    cat: FiniteCategory,
    inv: Vec<usize>,
) -> Result<FiniteGroupoid, CategoryError> {
    let n = cat.size();
    if inv.len() != n || inv.iter().any(|&e| e >= n) {
        return Err(CategoryError::BadShape("inv out of range".into()));
    }
    let (arrows, unique) = core(&cat)?;
    if let Some(a) = (0..n).find(|&a| arrows.binary_search(&a).is_err()) {
        return Err(CategoryError::NotInvertible { a });
    }
    for a in 0..n {
        if unique[a] != Some(inv[a]) {
            return Err(CategoryError::BadInverse { a });
        }
    }
    Ok(FiniteGroupoid { cat, inv })
}

/// Searches for a groupoid isomorphism by backtracking over arrow
/// assignments; returns the arrow bijection when one exists.
pub fn groupoid_isomorphism(a: &FiniteGroupoid, b: &FiniteGroupoid) -> Option<Vec<usize>> {
    let n = a.size();
    if n != b.size() || a.units().len() != b.units().len() {
        return None;
    }
    fn extend(
        a: &FiniteGroupoid,
        b: &FiniteGroupoid,
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        next: usize,
    ) -> bool {
        let n = a.size();
        if next == n {
            // All structure preserved pointwise; composition checked last.
            for x in 0..n {
                for y in 0..n {
                    let lhs = a.try_comp(x, y).map(|c| map[c].unwrap());
                    let rhs = b.try_comp(map[x].unwrap(), map[y].unwrap());
                    if lhs != rhs {
                        return false;
                    }
                }
            }
            return true;
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            if a.is_unit(next) != b.is_unit(cand) {
                continue;
            }
            let consistent = |x: usize, y: usize| -> bool {
                match map[x] {
                    Some(m) => m == y,
                    None => true,
                }
            };
            if !consistent(a.src(next), b.src(cand))
                || !consistent(a.rng(next), b.rng(cand))
                || !consistent(a.inv(next), b.inv(cand))
            {
                continue;
            }
            map[next] = Some(cand);
            used[cand] = true;
            if extend(a, b, map, used, next + 1) {
                return true;
            }
            map[next] = None;
            used[cand] = false;
        }
        false
    }
    let mut map = vec![None; n];
    let mut used = vec![false; n];
    if extend(a, b, &mut map, &mut used, 0) {
        Some(map.into_iter().map(|m| m.unwrap()).collect())
    } else {
        None
    }
}

/// Derives the inverse map by core computation and validates.
pub fn groupoid_from_category(cat: FiniteCategory) -> Result<FiniteGroupoid, CategoryError> {
    let n = cat.size();
    let (arrows, unique) = core(&cat)?;
    if let Some(a) = (0..n).find(|&a| arrows.binary_search(&a).is_err()) {
        return Err(CategoryError::NotInvertible { a });
    }
    let inv = (0..n).map(|a| unique[a].unwrap()).collect();
    validate_groupoid(cat, inv)
}
