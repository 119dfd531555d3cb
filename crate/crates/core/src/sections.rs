//! Sections of finite bundles and the structured carriers they form: the
//! slice-supported sections `S_c`, the unit-valued sections `Z_c`, and the
//! expectation that zeroes a section off the base units.
//!
//! In the ring variant the carrier is the full section ring under fiberwise
//! addition and groupoid convolution. In the category variant the carrier is
//! `S_c` itself: products of two slice-supported sections have at most one
//! contributing factorization per arrow, so the convolution stays total
//! there, while a product of two non-slice sections has no meaning without
//! addition and is rejected as [`SectionError::NeitherSliceSupported`].

use crate::bundle::{FiniteBundle, FiniteRingoidBundle};
use crate::semigroup::{validate_ring, validate_semigroup};
use crate::structured::{Carrier, StructuredData};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SectionError {
    #[error("neither factor is slice-supported")]
    NeitherSliceSupported,
    #[error("value over base arrow {g} does not lie in its fiber")]
    NotASection { g: usize },
    #[error("multiple nonzero contributions at base arrow {g}")]
    AmbiguousProduct { g: usize },
}

/// A section of a bundle: one total arrow per base arrow, lying in its fiber.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Section {
    pub values: Vec<usize>,
}

impl Section {
    pub fn check(&self, b: &FiniteBundle) -> Result<(), SectionError> {
        if self.values.len() != b.base().size() {
            return Err(SectionError::NotASection { g: self.values.len() });
        }
        match (0..b.base().size()).find(|&g| b.rho(self.values[g]) != g) {
            None => Ok(()),
            Some(g) => Err(SectionError::NotASection { g }),
        }
    }

    /// Base arrows where the section is nonzero.
    pub fn support(&self, b: &FiniteBundle) -> Vec<usize> {
        (0..b.base().size()).filter(|&g| self.values[g] != b.zero_at(g)).collect()
    }

    pub fn is_slice_supported(&self, b: &FiniteBundle) -> bool {
        is_slice(b, &self.support(b))
    }

    /// Unit-valued on its support (a characteristic section of base units).
    pub fn is_unit_valued(&self, b: &FiniteBundle) -> bool {
        self.support(b).iter().all(|&g| b.total().is_unit(self.values[g]))
    }
}

/// Source and range are injective on the subset.
pub fn is_slice(b: &FiniteBundle, subset: &[usize]) -> bool {
    let base = b.base();
    for (i, &g) in subset.iter().enumerate() {
        for &h in &subset[i + 1..] {
            if base.src(g) == base.src(h) || base.rng(g) == base.rng(h) {
                return false;
            }
        }
    }
    true
}

pub fn zero_section(b: &FiniteBundle) -> Section {
    Section { values: b.zero_table().to_vec() }
}

/// The characteristic section `1_K` of a set of base units.
pub fn unit_char_section(b: &FiniteBundle, units: &[usize]) -> Section {
    let unit_over = |g: usize| {
        (0..b.total().size())
            .find(|&c| b.total().is_unit(c) && b.rho(c) == g)
            .expect("units biject")
    };
    let values = (0..b.base().size())
        .map(|g| if units.contains(&g) { unit_over(g) } else { b.zero_at(g) })
        .collect();
    Section { values }
}

/// The expectation on sections: keep values over base units, zero elsewhere.
pub fn phi_section(b: &FiniteBundle, a: &Section) -> Section {
    let values = (0..b.base().size())
        .map(|g| if b.base().is_unit(g) { a.values[g] } else { b.zero_at(g) })
        .collect();
    Section { values }
}

/// Convolution in the category variant: at most one factorization may
/// contribute per arrow, which requires a slice-supported factor.
pub fn section_product_cat(
    b: &FiniteBundle,
    x: &Section,
    y: &Section,
) -> Result<Section, SectionError> {
    if !x.is_slice_supported(b) && !y.is_slice_supported(b) {
        return Err(SectionError::NeitherSliceSupported);
    }
    let base = b.base();
    let supp_x = x.support(b);
    let supp_y = y.support(b);
    let mut values: Vec<usize> = (0..base.size()).map(|g| b.zero_at(g)).collect();
    let mut hit = vec![false; base.size()];
    for &g in &supp_x {
        for &h in &supp_y {
            if let Some(f) = base.try_comp(g, h) {
                if hit[f] {
                    return Err(SectionError::AmbiguousProduct { g: f });
                }
                hit[f] = true;
                values[f] = b.total().comp(x.values[g], y.values[h]);
            }
        }
    }
    Ok(Section { values })
}

/// Convolution in the ring variant: fiberwise sums over all factorizations.
pub fn section_product_ring(rb: &FiniteRingoidBundle, x: &Section, y: &Section) -> Section {
    let b = rb.bundle();
    let base = b.base();
    let mut values: Vec<usize> = (0..base.size()).map(|g| b.zero_at(g)).collect();
    for g in 0..base.size() {
        for h in 0..base.size() {
            if let Some(f) = base.try_comp(g, h) {
                let term = b.total().comp(x.values[g], y.values[h]);
                values[f] = rb.fadd(values[f], term);
            }
        }
    }
    Section { values }
}

fn section_sum(rb: &FiniteRingoidBundle, x: &Section, y: &Section) -> Section {
    let values = x.values.iter().zip(&y.values).map(|(&a, &b)| rb.fadd(a, b)).collect();
    Section { values }
}

fn section_neg(rb: &FiniteRingoidBundle, x: &Section) -> Section {
    Section { values: x.values.iter().map(|&a| rb.fneg(a)).collect() }
}

fn section_name(b: &FiniteBundle, s: &Section) -> String {
    let supp = s.support(b);
    if supp.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = supp.iter().map(|&g| b.total().name(s.values[g]).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// All slice-supported sections, in canonical (value-vector) order.
pub fn slice_supported_sections(b: &FiniteBundle) -> Vec<Section> {
    let base_n = b.base().size();
    let mut out: Vec<Section> = Vec::new();
    // Enumerate supports (subsets that are slices), then nonzero values.
    for mask in 0usize..(1 << base_n) {
        let supp: Vec<usize> = (0..base_n).filter(|&g| mask & (1 << g) != 0).collect();
        if !is_slice(b, &supp) {
            continue;
        }
        let choices: Vec<Vec<usize>> = supp
            .iter()
            .map(|&g| b.fiber(g).into_iter().filter(|&c| c != b.zero_at(g)).collect())
            .collect();
        if choices.iter().any(|c| c.is_empty()) {
            continue;
        }
        let mut odometer = vec![0usize; supp.len()];
        loop {
            let mut values: Vec<usize> = (0..base_n).map(|g| b.zero_at(g)).collect();
            for (i, &g) in supp.iter().enumerate() {
                values[g] = choices[i][odometer[i]];
            }
            out.push(Section { values });
            let mut pos = 0;
            loop {
                if pos == supp.len() {
                    break;
                }
                odometer[pos] += 1;
                if odometer[pos] < choices[pos].len() {
                    break;
                }
                odometer[pos] = 0;
                pos += 1;
            }
            if pos == supp.len() {
                break;
            }
        }
        if supp.is_empty() {
            // the zero section was pushed once by the empty odometer loop
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All sections (every fiber choice), in canonical order. The count is the
/// product of the fiber sizes.
pub fn all_sections(b: &FiniteBundle) -> Vec<Section> {
    let base_n = b.base().size();
    let fibers: Vec<Vec<usize>> = (0..base_n).map(|g| b.fiber(g)).collect();
    let mut out = Vec::new();
    let mut odometer = vec![0usize; base_n];
    loop {
        let values: Vec<usize> = (0..base_n).map(|g| fibers[g][odometer[g]]).collect();
        out.push(Section { values });
        let mut pos = 0;
        loop {
            if pos == base_n {
                break;
            }
            odometer[pos] += 1;
            if odometer[pos] < fibers[pos].len() {
                break;
            }
            odometer[pos] = 0;
            pos += 1;
        }
        if pos == base_n {
            break;
        }
    }
    out.sort();
    out.dedup();
    out
}

/// A structured carrier whose elements are sections of a bundle.
pub struct SectionStructure {
    pub data: StructuredData,
    /// Carrier-aligned section values.
    pub sections: Vec<Section>,
    /// Product of the fiber sizes (the count of all sections, whether or not
    /// they all live in the carrier).
    pub total_section_count: usize,
}

impl SectionStructure {
    pub fn index_of(&self, s: &Section) -> Option<usize> {
        self.sections.iter().position(|x| x == s)
    }
}

fn fiber_count(b: &FiniteBundle) -> usize {
    (0..b.base().size()).map(|g| b.fiber(g).len()).product()
}

/// The section semigroup of a category bundle: carrier `S_c` with
/// `Z = unit-valued sections` and the unit-restriction expectation.
pub fn section_structure_cat(b: &FiniteBundle) -> SectionStructure {
    let sections = slice_supported_sections(b);
    let index: BTreeMap<Vec<usize>, usize> =
        sections.iter().enumerate().map(|(i, s)| (s.values.clone(), i)).collect();
    let k = sections.len();
    let names = sections.iter().map(|s| section_name(b, s)).collect();
    let mult: Vec<Vec<usize>> = sections
        .iter()
        .map(|x| {
            sections
                .iter()
                .map(|y| {
                    let prod = section_product_cat(b, x, y).expect("both slice-supported");
                    index[&prod.values]
                })
                .collect()
        })
        .collect();
    let zero_idx = index[&zero_section(b).values];
    let sg = validate_semigroup(names, mult, Some(zero_idx)).expect("convolution semigroup");
    let s_set: Vec<usize> = (0..k).collect();
    let z_set: Vec<usize> = (0..k).filter(|&i| sections[i].is_unit_valued(b)).collect();
    let phi: Vec<usize> =
        sections.iter().map(|s| index[&phi_section(b, s).values]).collect();
    let data = StructuredData::new(Carrier::Semigroup(sg), s_set, z_set, phi).unwrap();
    SectionStructure { data, sections, total_section_count: fiber_count(b) }
}

/// The section ring of a ringoid bundle: carrier = all sections under
/// fiberwise addition and convolution, `S = slice-supported`,
/// `Z = unit-valued`.
pub fn section_structure_ring(rb: &FiniteRingoidBundle) -> SectionStructure {
    let b = rb.bundle();
    let sections = all_sections(b);
    let index: BTreeMap<Vec<usize>, usize> =
        sections.iter().enumerate().map(|(i, s)| (s.values.clone(), i)).collect();
    let k = sections.len();
    let names = sections.iter().map(|s| section_name(b, s)).collect();
    let add: Vec<Vec<usize>> = sections
        .iter()
        .map(|x| sections.iter().map(|y| index[&section_sum(rb, x, y).values]).collect())
        .collect();
    let neg: Vec<usize> = sections.iter().map(|x| index[&section_neg(rb, x).values]).collect();
    let mult: Vec<Vec<usize>> = sections
        .iter()
        .map(|x| {
            sections
                .iter()
                .map(|y| index[&section_product_ring(rb, x, y).values])
                .collect()
        })
        .collect();
    let zero_idx = index[&zero_section(b).values];
    let ring = validate_ring(names, add, neg, zero_idx, mult).expect("section ring laws");
    let s_set: Vec<usize> = (0..k).filter(|&i| sections[i].is_slice_supported(b)).collect();
    let z_set: Vec<usize> = s_set
        .iter()
        .copied()
        .filter(|&i| sections[i].is_unit_valued(b))
        .collect();
    let phi: Vec<usize> =
        sections.iter().map(|s| index[&phi_section(b, s).values]).collect();
    let data = StructuredData::new(Carrier::Ring(ring), s_set, z_set, phi).unwrap();
    SectionStructure { data, sections, total_section_count: fiber_count(b) }
}

/// Elementwise agreement between the abstract relations on the section
/// carrier and their support-level characterizations:
///
/// * `a ≤ b` ⟺ `a` and `b` agree on the support of `a`;
/// * `a < b` ⟺ the support of `a` sits inside `b⁻¹[core]`;
/// * `a ⊥ b` ⟺ the supports have disjoint source and range images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub restriction_ok: bool,
    pub domination_ok: bool,
    pub orthogonality_ok: bool,
    pub witness: Option<(usize, usize)>,
}

pub fn relation_characterizations(
    st: &SectionStructure,
    b: &FiniteBundle,
) -> CharacterizationReport {
    use crate::relations;
    let d = &st.data;
    let core = b.core_arrows();
    let base = b.base();
    let mut report = CharacterizationReport {
        restriction_ok: true,
        domination_ok: true,
        orthogonality_ok: true,
        witness: None,
    };
    for &i in d.s_set() {
        for &j in d.s_set() {
            let (x, y) = (&st.sections[i], &st.sections[j]);
            let supp_x = x.support(b);
            let supp_y = y.support(b);

            let leq = relations::restriction(d, i, j);
            let agree = supp_x.iter().all(|&g| x.values[g] == y.values[g]);
            if leq != agree {
                report.restriction_ok = false;
                report.witness.get_or_insert((i, j));
            }

            let dom = relations::dominates(d, i, j).is_some();
            let inside =
                supp_x.iter().all(|&g| core.binary_search(&y.values[g]).is_ok());
            if dom != inside {
                report.domination_ok = false;
                report.witness.get_or_insert((i, j));
            }

            let orth = relations::orthogonal(d, i, j) == Ok(true);
            let disjoint = supp_x.iter().all(|&g| {
                supp_y
                    .iter()
                    .all(|&h| base.src(g) != base.src(h) && base.rng(g) != base.rng(h))
            });
            if orth != disjoint {
                report.orthogonality_ok = false;
                report.witness.get_or_insert((i, j));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn trivbun() -> FiniteRingoidBundle {
        fixtures::trivial_ringoid_bundle(&fixtures::pair_groupoid(2), &fixtures::cyclic_ring(2))
            .unwrap()
    }

    #[test]
    fn trivial_bundle_section_counts() {
        let rb = trivbun();
        let st = section_structure_ring(&rb);
        assert_eq!(st.total_section_count, 16);
        assert_eq!(st.data.size(), 16);
        assert_eq!(st.data.s_set().len(), 7);
        assert_eq!(st.data.z_set().len(), 4);
    }

    #[test]
    fn convolution_is_matrix_multiplication_over_f2() {
        // Sections of the trivial F2 bundle over the pair groupoid are 2x2
        // matrices, with the arrow (i,j) holding the (i,j) entry; the
        // groupoid convolution is matrix multiplication.
        let rb = trivbun();
        let b = rb.bundle();
        let st = section_structure_ring(&rb);
        let entry = |s: &Section, i: usize, j: usize| -> usize {
            // pair_groupoid(2) indexes arrow (i,j) as i*2+j; fibers are
            // {0,1} with the value equal to the in-fiber offset.
            let g = i * 2 + j;
            if s.values[g] == b.zero_at(g) {
                0
            } else {
                1
            }
        };
        for x in &st.sections {
            for y in &st.sections {
                let prod = section_product_ring(&rb, x, y);
                for i in 0..2 {
                    for j in 0..2 {
                        let expected = (0..2)
                            .map(|k| entry(x, i, k) * entry(y, k, j))
                            .sum::<usize>()
                            % 2;
                        assert_eq!(entry(&prod, i, j), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn zero_section_absorbs() {
        let rb = trivbun();
        let b = rb.bundle();
        let st = section_structure_ring(&rb);
        let z = zero_section(b);
        for x in &st.sections {
            assert_eq!(section_product_ring(&rb, &z, x), z);
            assert_eq!(section_product_ring(&rb, x, &z), z);
        }
    }

    #[test]
    fn unit_characteristic_section_restricts() {
        // 1_K · a keeps exactly the arrows whose range lies in K.
        let rb = trivbun();
        let b = rb.bundle();
        let st = section_structure_ring(&rb);
        let units = b.base().units();
        let k = vec![units[0]];
        let one_k = unit_char_section(b, &k);
        for x in &st.sections {
            let prod = section_product_ring(&rb, &one_k, x);
            for g in 0..b.base().size() {
                let expected = if k.contains(&b.base().rng(g)) {
                    x.values[g]
                } else {
                    b.zero_at(g)
                };
                assert_eq!(prod.values[g], expected);
            }
        }
    }

    #[test]
    fn neither_slice_supported_is_rejected() {
        let rb = trivbun();
        let b = rb.bundle();
        // The all-ones section (support = every arrow) is not a slice.
        let ones: Vec<usize> = (0..b.base().size())
            .map(|g| b.fiber(g).into_iter().find(|&c| c != b.zero_at(g)).unwrap())
            .collect();
        let s = Section { values: ones };
        assert!(!s.is_slice_supported(b));
        let err = section_product_cat(b, &s, &s).unwrap_err();
        assert_eq!(err, SectionError::NeitherSliceSupported);
    }

    #[test]
    fn section_semigroup_of_trivial_bundle() {
        let rb = trivbun();
        let st = section_structure_cat(rb.bundle());
        assert_eq!(st.data.size(), 7);
        assert_eq!(st.total_section_count, 16);
        // Passes the Steinberg semigroup profile.
        let report = crate::axioms::check_profile(
            &crate::axioms::ProfileInput::Structured(&st.data),
            crate::axioms::Profile::SteinbergSemigroup,
        )
        .unwrap();
        assert!(report.all_pass(), "{:?}", report.failures());
    }

    #[test]
    fn section_ring_of_trivial_bundle_is_steinberg() {
        let rb = trivbun();
        let st = section_structure_ring(&rb);
        let report = crate::axioms::check_profile(
            &crate::axioms::ProfileInput::Structured(&st.data),
            crate::axioms::Profile::SteinbergRing,
        )
        .unwrap();
        assert!(report.all_pass(), "{:?}", report.failures());
    }

    #[test]
    fn characterizations_agree_on_trivial_bundle() {
        let rb = trivbun();
        let st = section_structure_ring(&rb);
        let report = relation_characterizations(&st, rb.bundle());
        assert!(report.restriction_ok && report.domination_ok && report.orthogonality_ok,
            "{report:?}");
    }

    #[test]
    fn single_fiber_bundle_gives_the_coefficient_ring() {
        let rb = fixtures::trivial_ringoid_bundle(
            &fixtures::discrete_groupoid(1),
            &fixtures::cyclic_ring(2),
        )
        .unwrap();
        let st = section_structure_ring(&rb);
        assert_eq!(st.data.size(), 2);
    }

    #[test]
    fn expectation_laws_hold_on_section_structures() {
        let rb = trivbun();
        let st = section_structure_ring(&rb);
        let report = crate::axioms::check_expectation_laws(&st.data);
        assert!(report.all_pass(), "{:?}", report.failures());
    }
}

