//! Deterministic generators for the canonical examples: symmetric inverse
//! monoids, powerset meet-semilattices, matrix algebras with their diagonal
//! quasi-Cartan data, trivial ringoid bundles, and locally unital rings.
//!
//! Generators emit canonical element names (domain notation for partial
//! bijections, digit grids for matrices) so emitted files are diffable.
//! Size guards are hard errors, not truncations.

use crate::axioms::{self, Profile};
use crate::bundle::{validate_bundle, validate_ringoid_bundle, FiniteRingoidBundle};
use crate::category::{validate_category, validate_groupoid, FiniteGroupoid};
use crate::semigroup::{validate_ring, validate_semigroup, FiniteRing};
use crate::structured::{Carrier, QuasiCartanPair, StructuredData};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixtureError {
    #[error("requested size is too large for this generator")]
    TooLarge,
    #[error("the coefficient ring has no invertible element")]
    NoUnits,
    #[error("the ring is not locally unital (element {0} has no central idempotent unit)")]
    NotLocallyUnital(usize),
    #[error("unknown fixture name {0}")]
    UnknownFixture(String),
}

// ---------------------------------------------------------------------------
// Partial injections on {1..n} under composition (f∘g)(x) = f(g(x)).

fn partial_injections(n: usize) -> Vec<Vec<Option<usize>>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<Option<usize>>> = vec![Vec::new()];
    while let Some(f) = stack.pop() {
        if f.len() == n {
            out.push(f);
            continue;
        }
        // Digits in reverse so the stack pops None first, then Some(0), ...
        let mut children = Vec::new();
        children.push(None);
        for v in 0..n {
            if !f.contains(&Some(v)) {
                children.push(Some(v));
            }
        }
        for c in children.into_iter().rev() {
            let mut g = f.clone();
            g.push(c);
            stack.push(g);
        }
    }
    out
}

fn pbij_name(f: &[Option<usize>]) -> String {
    let entries: Vec<String> = f
        .iter()
        .enumerate()
        .filter_map(|(x, v)| v.map(|y| format!("{}>{}", x + 1, y + 1)))
        .collect();
    format!("[{}]", entries.join(","))
}

fn pbij_compose(f: &[Option<usize>], g: &[Option<usize>]) -> Vec<Option<usize>> {
    g.iter().map(|&gv| gv.and_then(|y| f[y])).collect()
}

/// The symmetric inverse monoid on `{1..n}` as structured data with
/// `Z = E(S)` (partial identities) and `Φ` the maximum idempotent below
/// each element (restriction to its fixed points).
pub fn symmetric_inverse_monoid(n: usize) -> Result<StructuredData, FixtureError> {
    if n == 0 || n > 4 {
        return Err(FixtureError::TooLarge);
    }
    let elems = partial_injections(n);
    let index_of = |f: &Vec<Option<usize>>| elems.iter().position(|e| e == f).unwrap();
    let k = elems.len();
    let names = elems.iter().map(|f| pbij_name(f)).collect();
    let mult = elems
        .iter()
        .map(|f| elems.iter().map(|g| index_of(&pbij_compose(f, g))).collect())
        .collect();
    let zero = index_of(&vec![None; n]);
    let sg = validate_semigroup(names, mult, Some(zero)).expect("composition is associative");
    let s_set: Vec<usize> = (0..k).collect();
    let z_set: Vec<usize> = (0..k)
        .filter(|&i| elems[i].iter().enumerate().all(|(x, v)| v.is_none() || *v == Some(x)))
        .collect();
    let phi = (0..k)
        .map(|i| {
            let fixed: Vec<Option<usize>> = elems[i]
                .iter()
                .enumerate()
                .map(|(x, v)| if *v == Some(x) { Some(x) } else { None })
                .collect();
            index_of(&fixed)
        })
        .collect();
    Ok(StructuredData::new(Carrier::Semigroup(sg), s_set, z_set, phi).unwrap())
}

/// Subsets of `{1..n}` under intersection, `Z = S = everything`, `Φ = id`.
pub fn powerset_algebra(n: usize) -> Result<StructuredData, FixtureError> {
    if n == 0 || n > 5 {
        return Err(FixtureError::TooLarge);
    }
    let k = 1usize << n;
    let name = |m: usize| {
        let parts: Vec<String> =
            (0..n).filter(|&b| m & (1 << b) != 0).map(|b| (b + 1).to_string()).collect();
        format!("{{{}}}", parts.join(","))
    };
    let names = (0..k).map(name).collect();
    let mult = (0..k).map(|a| (0..k).map(|b| a & b).collect()).collect();
    let sg = validate_semigroup(names, mult, Some(0)).unwrap();
    let all: Vec<usize> = (0..k).collect();
    let phi = all.clone();
    Ok(StructuredData::new(Carrier::Semigroup(sg), all.clone(), all, phi).unwrap())
}

// ---------------------------------------------------------------------------
// Rings.

/// The cyclic ring Z/q with canonical digit names.
pub fn cyclic_ring(q: usize) -> FiniteRing {
    assert!(q >= 1);
    let names = (0..q).map(|i| i.to_string()).collect();
    let add = (0..q).map(|a| (0..q).map(|b| (a + b) % q).collect()).collect();
    let neg = (0..q).map(|a| (q - a) % q).collect();
    let mult = (0..q).map(|a| (0..q).map(|b| (a * b) % q).collect()).collect();
    validate_ring(names, add, neg, 0, mult).unwrap()
}

/// Componentwise product of two rings, elements named `(a,b)`.
pub fn product_ring(r1: &FiniteRing, r2: &FiniteRing) -> FiniteRing {
    let (n1, n2) = (r1.size(), r2.size());
    let k = n1 * n2;
    let pair = |i: usize| (i / n2, i % n2);
    let idx = |a: usize, b: usize| a * n2 + b;
    let names = (0..k)
        .map(|i| {
            let (a, b) = pair(i);
            format!("({},{})", r1.name(a), r2.name(b))
        })
        .collect();
    let add = (0..k)
        .map(|i| {
            let (a, b) = pair(i);
            (0..k)
                .map(|j| {
                    let (c, d) = pair(j);
                    idx(r1.add(a, c), r2.add(b, d))
                })
                .collect()
        })
        .collect();
    let neg = (0..k)
        .map(|i| {
            let (a, b) = pair(i);
            idx(r1.neg(a), r2.neg(b))
        })
        .collect();
    let mult = (0..k)
        .map(|i| {
            let (a, b) = pair(i);
            (0..k)
                .map(|j| {
                    let (c, d) = pair(j);
                    idx(r1.mul(a, c), r2.mul(b, d))
                })
                .collect()
        })
        .collect();
    validate_ring(names, add, neg, idx(r1.zero(), r2.zero()), mult).unwrap()
}

// ---------------------------------------------------------------------------
// Matrix algebras with diagonal quasi-Cartan data.

struct MatrixAlgebra {
    n: usize,
    q: usize,
}

impl MatrixAlgebra {
    fn size(&self) -> usize {
        self.q.pow((self.n * self.n) as u32)
    }

    fn entries(&self, idx: usize) -> Vec<usize> {
        let mut digits = Vec::with_capacity(self.n * self.n);
        let mut rest = idx;
        for _ in 0..self.n * self.n {
            digits.push(rest % self.q);
            rest /= self.q;
        }
        digits
    }

    fn index(&self, entries: &[usize]) -> usize {
        entries.iter().rev().fold(0, |acc, &d| acc * self.q + d)
    }

    fn at(entries: &[usize], n: usize, r: usize, c: usize) -> usize {
        entries[r * n + c]
    }

    fn name(&self, idx: usize) -> String {
        let e = self.entries(idx);
        let rows: Vec<String> = (0..self.n)
            .map(|r| (0..self.n).map(|c| Self::at(&e, self.n, r, c).to_string()).collect())
            .collect();
        format!("[{}]", rows.join("|"))
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let (ea, eb) = (self.entries(a), self.entries(b));
        let mut out = vec![0usize; self.n * self.n];
        for r in 0..self.n {
            for c in 0..self.n {
                let mut acc = 0;
                for k in 0..self.n {
                    acc += Self::at(&ea, self.n, r, k) * Self::at(&eb, self.n, k, c);
                }
                out[r * self.n + c] = acc % self.q;
            }
        }
        self.index(&out)
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (ea, eb) = (self.entries(a), self.entries(b));
        let out: Vec<usize> = ea.iter().zip(&eb).map(|(&x, &y)| (x + y) % self.q).collect();
        self.index(&out)
    }

    fn neg(&self, a: usize) -> usize {
        let out: Vec<usize> = self.entries(a).iter().map(|&x| (self.q - x) % self.q).collect();
        self.index(&out)
    }

    fn scale(&self, r: usize, a: usize) -> usize {
        let out: Vec<usize> = self.entries(a).iter().map(|&x| (x * r) % self.q).collect();
        self.index(&out)
    }

    fn is_diagonal(&self, a: usize) -> bool {
        let e = self.entries(a);
        (0..self.n).all(|r| (0..self.n).all(|c| r == c || Self::at(&e, self.n, r, c) == 0))
    }

    fn diagonal_part(&self, a: usize) -> usize {
        let e = self.entries(a);
        let mut out = vec![0usize; self.n * self.n];
        for r in 0..self.n {
            out[r * self.n + r] = Self::at(&e, self.n, r, r);
        }
        self.index(&out)
    }
}

/// The full matrix ring over the prime field F_q with its diagonal
/// quasi-Cartan data: `S = orthospan of the Z-invertible normalizers of the
/// diagonal`, `Z = E(diagonal)`, `Φ = diagonal projection`.
pub fn matrix_quasi_cartan(n: usize, q: usize) -> Result<QuasiCartanPair, FixtureError> {
    if n == 0 || n > 3 || !(q == 2 || q == 3) {
        return Err(FixtureError::TooLarge);
    }
    let m = MatrixAlgebra { n, q };
    let k = m.size();
    let names = (0..k).map(|i| m.name(i)).collect();
    let add = (0..k).map(|a| (0..k).map(|b| m.add(a, b)).collect()).collect();
    let neg = (0..k).map(|a| m.neg(a)).collect();
    let mult = (0..k).map(|a| (0..k).map(|b| m.mul(a, b)).collect()).collect();
    let ring = validate_ring(names, add, neg, 0, mult).unwrap();

    let z_sub: Vec<usize> = (0..k).filter(|&a| m.is_diagonal(a)).collect();
    let ez: Vec<usize> = z_sub.iter().copied().filter(|&z| ring.mul(z, z) == z).collect();
    let scalars = cyclic_ring(q);
    let action: Vec<Vec<usize>> = (0..q).map(|r| (0..k).map(|a| m.scale(r, a)).collect()).collect();

    let znd = axioms::z_invertible_normalizers(&ring, &z_sub);
    let s_set = axioms::orthospan(&ring, &action, &ez, &znd);
    let phi = (0..k).map(|a| m.diagonal_part(a)).collect();
    let data = StructuredData::new(Carrier::Ring(ring), s_set, ez, phi).unwrap();
    Ok(QuasiCartanPair { data, z_subalgebra: z_sub, scalars, action })
}

// ---------------------------------------------------------------------------
// Groupoids and trivial bundles.

/// The pair groupoid on `n` objects: arrows `(i,j)` from `j` to `i`.
pub fn pair_groupoid(n: usize) -> FiniteGroupoid {
    assert!(n >= 1);
    let k = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let names = (0..k).map(|a| format!("({},{})", a / n + 1, a % n + 1)).collect();
    let src = (0..k).map(|a| idx(a % n, a % n)).collect();
    let rng = (0..k).map(|a| idx(a / n, a / n)).collect();
    let compose = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| {
                    // (i,j)∘(j,l) = (i,l)
                    if a % n == b / n {
                        Some(idx(a / n, b % n))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    let cat = validate_category(names, src, rng, compose).unwrap();
    let inv = (0..k).map(|a| idx(a % n, a / n)).collect();
    validate_groupoid(cat, inv).unwrap()
}

/// The discrete groupoid: `n` units and no other arrows.
pub fn discrete_groupoid(n: usize) -> FiniteGroupoid {
    assert!(n >= 1);
    let names = (0..n).map(|i| format!("u{}", i + 1)).collect();
    let src = (0..n).collect();
    let rng = (0..n).collect();
    let compose = (0..n)
        .map(|a| (0..n).map(|b| if a == b { Some(a) } else { None }).collect())
        .collect();
    let cat = validate_category(names, src, rng, compose).unwrap();
    validate_groupoid(cat, (0..n).collect()).unwrap()
}

/// The trivial ringoid bundle `R × G`: one copy of the ring over every base
/// arrow, componentwise product and fiberwise addition.
pub fn trivial_ringoid_bundle(
    g: &FiniteGroupoid,
    r: &FiniteRing,
) -> Result<FiniteRingoidBundle, FixtureError> {
    let one = r.one().ok_or(FixtureError::NoUnits)?;
    let (ng, nr) = (g.size(), r.size());
    let k = ng * nr;
    let idx = |gi: usize, v: usize| gi * nr + v;
    let names = (0..k)
        .map(|a| format!("({},{})", r.name(a % nr), g.name(a / nr)))
        .collect();
    let src = (0..k).map(|a| idx(g.src(a / nr), one)).collect();
    let rng = (0..k).map(|a| idx(g.rng(a / nr), one)).collect();
    let compose = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| {
                    g.try_comp(a / nr, b / nr)
                        .map(|gh| idx(gh, r.mul(a % nr, b % nr)))
                })
                .collect()
        })
        .collect();
    let total = validate_category(names, src, rng, compose).unwrap();
    let base = g.clone();
    let rho = (0..k).map(|a| a / nr).collect();
    let zero = (0..ng).map(|gi| idx(gi, r.zero())).collect();
    let bundle = validate_bundle(total, base, rho, zero).expect("trivial bundle laws");
    let fibers: Vec<Vec<usize>> = (0..ng).map(|gi| (0..nr).map(|v| idx(gi, v)).collect()).collect();
    let fadd = (0..ng)
        .map(|_| (0..nr).map(|v| (0..nr).map(|w| r.add(v, w)).collect()).collect())
        .collect();
    Ok(validate_ringoid_bundle(bundle, fibers, fadd).expect("fiberwise ring laws"))
}

/// Structured data of a locally unital ring: `(A, A, Z(E(A)), id)`.
pub fn pierce_case(ring: &FiniteRing) -> Result<StructuredData, FixtureError> {
    let n = ring.size();
    let central_idempotents: Vec<usize> = ring
        .idempotents()
        .into_iter()
        .filter(|&e| (0..n).all(|x| ring.mul(e, x) == ring.mul(x, e)))
        .collect();
    if let Some(a) = (0..n).find(|&a| {
        !central_idempotents
            .iter()
            .any(|&e| ring.mul(e, a) == a && ring.mul(a, e) == a)
    }) {
        return Err(FixtureError::NotLocallyUnital(a));
    }
    let all: Vec<usize> = (0..n).collect();
    let phi = all.clone();
    Ok(StructuredData::new(Carrier::Ring(ring.clone()), all, central_idempotents, phi).unwrap())
}

/// A three-element meet chain 0 < m < u with `Z = S` and `Φ = id`: a
/// well-structured semigroup that has no relative complements.
pub fn chain_semilattice() -> StructuredData {
    let names = vec!["0".into(), "m".into(), "u".into()];
    let mult = vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]];
    let sg = validate_semigroup(names, mult, Some(0)).unwrap();
    let all = vec![0, 1, 2];
    StructuredData::new(Carrier::Semigroup(sg), all.clone(), all, vec![0, 1, 2]).unwrap()
}

// ---------------------------------------------------------------------------
// Registry.

#[derive(Debug, Clone)]
pub struct FixtureSpec {
    pub name: &'static str,
    pub parameters: &'static str,
    pub expected_profile: Profile,
}

pub fn registry() -> Vec<FixtureSpec> {
    vec![
        FixtureSpec {
            name: "i1",
            parameters: "symmetric inverse monoid, n = 1",
            expected_profile: Profile::SteinbergSemigroup,
        },
        FixtureSpec {
            name: "i2",
            parameters: "symmetric inverse monoid, n = 2",
            expected_profile: Profile::SteinbergSemigroup,
        },
        FixtureSpec {
            name: "i3",
            parameters: "symmetric inverse monoid, n = 3",
            expected_profile: Profile::SteinbergSemigroup,
        },
        FixtureSpec {
            name: "pow2",
            parameters: "powerset meet-semilattice, n = 2",
            expected_profile: Profile::SteinbergSemigroup,
        },
        FixtureSpec {
            name: "pow3",
            parameters: "powerset meet-semilattice, n = 3",
            expected_profile: Profile::SteinbergSemigroup,
        },
        FixtureSpec {
            name: "m2f2",
            parameters: "2x2 matrices over F2 with diagonal quasi-Cartan data",
            expected_profile: Profile::SteinbergRing,
        },
        FixtureSpec {
            name: "trivbun",
            parameters: "trivial F2 bundle over the pair groupoid on 2 objects",
            expected_profile: Profile::AmpleRingoidBundle,
        },
        FixtureSpec {
            name: "pierce4",
            parameters: "F2 x F2 with identity expectation",
            expected_profile: Profile::SteinbergRing,
        },
        FixtureSpec {
            name: "chain3",
            parameters: "three-element meet chain (fails Complements)",
            expected_profile: Profile::WellStructuredSemigroup,
        },
    ]
}

/// Canonical morphisms reachable from the registry by name.
pub fn morphism_registry() -> Vec<(&'static str, &'static str)> {
    vec![
        ("id-i2", "identity on the symmetric inverse monoid, n = 2"),
        ("iso-i2-m2f2s", "partial bijection to monomial matrix isomorphism"),
        ("incl-pow2-i2", "powerset inclusion into the idempotents of i2"),
    ]
}

/// A fixture value as produced by the registry.
pub enum FixtureValue {
    Structured(StructuredData),
    QuasiCartan(QuasiCartanPair),
    RingoidBundle(FiniteRingoidBundle),
    Morphism(crate::duality::SteinbergMorphism),
}

pub fn build_fixture(name: &str) -> Result<FixtureValue, FixtureError> {
    use crate::duality::SteinbergMorphism;
    Ok(match name {
        "id-i2" => FixtureValue::Morphism(crate::duality::identity_steinberg(
            &symmetric_inverse_monoid(2)?,
        )),
        "iso-i2-m2f2s" => {
            let (source, target, map) = i2_to_m2f2s();
            FixtureValue::Morphism(SteinbergMorphism { source, target, map })
        }
        "incl-pow2-i2" => {
            let (source, target, map) = pow2_into_i2();
            FixtureValue::Morphism(SteinbergMorphism { source, target, map })
        }
        "i1" => FixtureValue::Structured(symmetric_inverse_monoid(1)?),
        "i2" => FixtureValue::Structured(symmetric_inverse_monoid(2)?),
        "i3" => FixtureValue::Structured(symmetric_inverse_monoid(3)?),
        "i4" => FixtureValue::Structured(symmetric_inverse_monoid(4)?),
        "pow1" => FixtureValue::Structured(powerset_algebra(1)?),
        "pow2" => FixtureValue::Structured(powerset_algebra(2)?),
        "pow3" => FixtureValue::Structured(powerset_algebra(3)?),
        "m2f2" => FixtureValue::QuasiCartan(matrix_quasi_cartan(2, 2)?),
        "m1f2" => FixtureValue::QuasiCartan(matrix_quasi_cartan(1, 2)?),
        "m1f3" => FixtureValue::QuasiCartan(matrix_quasi_cartan(1, 3)?),
        "trivbun" => FixtureValue::RingoidBundle(trivial_ringoid_bundle(
            &pair_groupoid(2),
            &cyclic_ring(2),
        )?),
        "pierce4" => {
            let f2 = cyclic_ring(2);
            FixtureValue::Structured(pierce_case(&product_ring(&f2, &f2))?)
        }
        "chain3" => FixtureValue::Structured(chain_semilattice()),
        other => return Err(FixtureError::UnknownFixture(other.to_string())),
    })
}

// ---------------------------------------------------------------------------
// Canonical morphisms between fixtures (used by the duality tests and CLI).

/// The multiplicative embedding of a partial bijection as a 0/1 monomial
/// matrix, landing in the S-restriction of the matrix fixture.
/// Returns (source data, target data, element map).
pub fn i2_to_m2f2s() -> (StructuredData, StructuredData, Vec<usize>) {
    let i2 = symmetric_inverse_monoid(2).unwrap();
    let qc = matrix_quasi_cartan(2, 2).unwrap();
    let restriction = qc.data.restrict_to_s();
    let m = MatrixAlgebra { n: 2, q: 2 };
    let pbijs = partial_injections(2);
    let map = pbijs
        .iter()
        .map(|f| {
            let mut entries = vec![0usize; 4];
            for (j, v) in f.iter().enumerate() {
                if let Some(i) = v {
                    entries[i * 2 + j] = 1;
                }
            }
            let parent = m.index(&entries);
            restriction.from_parent[parent].expect("monomial matrices lie in S")
        })
        .collect();
    (i2, restriction.data, map)
}

/// The inclusion of the powerset algebra on 2 points into the idempotent
/// part of the symmetric inverse monoid on 2 points.
pub fn pow2_into_i2() -> (StructuredData, StructuredData, Vec<usize>) {
    let pow2 = powerset_algebra(2).unwrap();
    let i2 = symmetric_inverse_monoid(2).unwrap();
    let map = (0..4usize)
        .map(|mask| {
            let f: Vec<Option<usize>> =
                (0..2).map(|x| if mask & (1 << x) != 0 { Some(x) } else { None }).collect();
            let name = pbij_name(&f);
            i2.carrier.names().iter().position(|n| *n == name).unwrap()
        })
        .collect();
    (pow2, i2, map)
}
