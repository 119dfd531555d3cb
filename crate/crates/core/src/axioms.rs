//! Structural profiles and their laws.
//!
//! [`check_profile`] decides which profile a value satisfies and returns a
//! full report: every law of the profile is checked (later laws still run
//! after a failure), and every failure carries a witness tuple that
//! re-evaluates to a violation via [`recheck`].

use crate::bundle::{FiniteBundle, FiniteRingoidBundle};
use crate::exec;
use crate::relations;
use crate::semigroup::FiniteRing;
use crate::structured::{QuasiCartanPair, StructuredData};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Profile {
    StructuredSemigroup,
    WellStructuredSemigroup,
    WellStructuredSemimodule,
    SteinbergSemigroup,
    SteinbergRing,
    QuasiCartanPair,
    AmpleBundle,
    AmpleRingoidBundle,
}

impl Profile {
    pub fn name(self) -> &'static str {
        match self {
            Profile::StructuredSemigroup => "structured-semigroup",
            Profile::WellStructuredSemigroup => "well-structured-semigroup",
            Profile::WellStructuredSemimodule => "well-structured-semimodule",
            Profile::SteinbergSemigroup => "steinberg-semigroup",
            Profile::SteinbergRing => "steinberg-ring",
            Profile::QuasiCartanPair => "quasi-cartan-pair",
            Profile::AmpleBundle => "ample-bundle",
            Profile::AmpleRingoidBundle => "ample-ringoid-bundle",
        }
    }

    pub fn from_name(s: &str) -> Option<Profile> {
        Some(match s {
            "structured-semigroup" => Profile::StructuredSemigroup,
            "well-structured-semigroup" => Profile::WellStructuredSemigroup,
            "well-structured-semimodule" => Profile::WellStructuredSemimodule,
            "steinberg-semigroup" => Profile::SteinbergSemigroup,
            "steinberg-ring" => Profile::SteinbergRing,
            "quasi-cartan-pair" => Profile::QuasiCartanPair,
            "ample-bundle" => Profile::AmpleBundle,
            "ample-ringoid-bundle" => Profile::AmpleRingoidBundle,
            _ => return None,
        })
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    SClosed,
    ZClosed,
    Idempotent,
    Homogeneous,
    Shiftable,
    Bistable,
    Binormal,
    Trinormal,
    ZCentral,
    Zero,
    ZIdempotent,
    Dominated,
    Orthosuprema,
    Distributivity,
    Complements,
    Additive,
    Generating,
    Orthodirected,
    Orthoadditive,
    Subtractive,
    ZeroInZ,
    ZCentralIdempotent,
    QuasiCartan,
    Leech,
    Nondegenerate,
    // quasi-Cartan pair laws
    ScalarAction,
    Subalgebra,
    ZCommutative,
    TorsionFree,
    ZSpanned,
    Linear,
    RangeIsZ,
    SpannedByNormalizers,
    QuasiCartanNormalizers,
    QuasiCartanOrthospan,
    ZFieldIdempotents,
    SIsOrthospan,
    // bundle laws
    Functor,
    Isofibration,
    ZeroSection,
    CoreSurjective,
    UnitBijection,
    FiberGroups,
    FiberDistributivity,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::SClosed => "S-Closed",
            Law::ZClosed => "Z-Closed",
            Law::Idempotent => "Idempotent",
            Law::Homogeneous => "Homogeneous",
            Law::Shiftable => "Shiftable",
            Law::Bistable => "Bistable",
            Law::Binormal => "Binormal",
            Law::Trinormal => "Trinormal",
            Law::ZCentral => "Z-Central",
            Law::Zero => "Zero",
            Law::ZIdempotent => "Z-Idempotent",
            Law::Dominated => "Dominated",
            Law::Orthosuprema => "Orthosuprema",
            Law::Distributivity => "Distributivity",
            Law::Complements => "Complements",
            Law::Additive => "Additive",
            Law::Generating => "Generating",
            Law::Orthodirected => "Orthodirected",
            Law::Orthoadditive => "Orthoadditive",
            Law::Subtractive => "Subtractive",
            Law::ZeroInZ => "Zero-In-Z",
            Law::ZCentralIdempotent => "Z-Central-Idempotent",
            Law::QuasiCartan => "Quasi-Cartan",
            Law::Leech => "Leech",
            Law::Nondegenerate => "Nondegenerate",
            Law::ScalarAction => "Scalar-Action",
            Law::Subalgebra => "Subalgebra",
            Law::ZCommutative => "Z-Commutative",
            Law::TorsionFree => "Torsion-Free",
            Law::ZSpanned => "Z-Spanned",
            Law::Linear => "Linear",
            Law::RangeIsZ => "Range-Is-Z",
            Law::SpannedByNormalizers => "Spanned-By-Normalizers",
            Law::QuasiCartanNormalizers => "Quasi-Cartan-Normalizers",
            Law::QuasiCartanOrthospan => "Quasi-Cartan-Orthospan",
            Law::ZFieldIdempotents => "Z-Field-Idempotents",
            Law::SIsOrthospan => "S-Is-Orthospan",
            Law::Functor => "Functor",
            Law::Isofibration => "Isofibration",
            Law::ZeroSection => "Zero-Section",
            Law::CoreSurjective => "Core-Surjective",
            Law::UnitBijection => "Unit-Bijection",
            Law::FiberGroups => "Fiber-Groups",
            Law::FiberDistributivity => "Fiber-Distributivity",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub law: Law,
    pub pass: bool,
    pub witness: Option<Vec<usize>>,
    pub note: Option<String>,
    /// Informational checks are reported but do not gate the profile.
    pub informational: bool,
}

impl LawCheck {
    fn ok(law: Law) -> Self {
        LawCheck { law, pass: true, witness: None, note: None, informational: false }
    }

    fn fail(law: Law, witness: Vec<usize>) -> Self {
        LawCheck { law, pass: false, witness: Some(witness), note: None, informational: false }
    }

    fn fail_note(law: Law, note: &str) -> Self {
        LawCheck {
            law,
            pass: false,
            witness: None,
            note: Some(note.to_string()),
            informational: false,
        }
    }

    fn from_witness(law: Law, w: Option<Vec<usize>>) -> Self {
        match w {
            None => Self::ok(law),
            Some(w) => Self::fail(law, w),
        }
    }

    fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }

    fn informational(mut self) -> Self {
        self.informational = true;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub profile: String,
    pub checks: Vec<LawCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass || c.informational)
    }

    pub fn failures(&self) -> Vec<&LawCheck> {
        self.checks.iter().filter(|c| !c.pass && !c.informational).collect()
    }

    pub fn find(&self, law: Law) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.law == law)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProfileError {
    #[error("profile {profile} does not apply to this input family ({got})")]
    ProfileMismatch { profile: Profile, got: &'static str },
}

pub enum ProfileInput<'a> {
    Structured(&'a StructuredData),
    QuasiCartan(&'a QuasiCartanPair),
    Bundle(&'a FiniteBundle),
    RingoidBundle(&'a FiniteRingoidBundle),
}

// ---------------------------------------------------------------------------
// Law predicates on structured data. Each takes the witness tuple it reports.

fn idempotent_at(d: &StructuredData, a: usize) -> bool {
    d.phi(d.phi(a)) == d.phi(a)
}

fn homogeneous_at(d: &StructuredData, a: usize, b: usize) -> bool {
    let lhs = d.mul(d.phi(a), d.phi(b));
    lhs == d.phi(d.mul(d.phi(a), b)) && lhs == d.phi(d.mul(a, d.phi(b)))
}

fn shiftable_at(d: &StructuredData, a: usize, s: usize) -> bool {
    d.mul(d.phi(d.mul(s, a)), s) == d.mul(s, d.phi(d.mul(a, s)))
}

fn bistable_at(d: &StructuredData, s: usize, t: usize) -> bool {
    if !d.in_z(d.mul(s, t)) {
        return true;
    }
    d.in_z(d.mul(d.phi(s), t)) && d.in_z(d.mul(s, d.phi(t)))
}

fn binormal_at(d: &StructuredData, s: usize, z: usize, t: usize) -> bool {
    if !d.in_z(d.mul(s, t)) || !d.in_z(d.mul(t, s)) {
        return true;
    }
    d.in_z(d.mul(d.mul(s, z), t))
}

fn trinormal_at(d: &StructuredData, s: usize, n: usize, t: usize) -> bool {
    if !d.in_d(n)
        || d.mul(d.mul(t, s), n) != n
        || d.mul(n, d.mul(t, s)) != n
        || !d.in_d(d.mul(s, t))
        || !d.in_d(d.mul(t, s))
    {
        return true;
    }
    d.in_d(d.mul(d.mul(s, n), t))
}

fn z_central_at(d: &StructuredData, z: usize, r: usize) -> bool {
    d.mul(z, r) == d.mul(r, z)
}

fn s_closed_at(d: &StructuredData, a: usize, b: usize) -> bool {
    d.in_s(d.mul(a, b))
}

fn z_closed_at(d: &StructuredData, a: usize, b: usize) -> bool {
    d.in_z(d.mul(a, b))
}

fn quasi_cartan_at(d: &StructuredData, t: usize) -> bool {
    relations::restriction(d, d.phi(t), t)
}

fn leech_at(d: &StructuredData, t: usize, r: usize) -> bool {
    // r ∈ ran(Φ) and r ≤ t imply r ≤ Φ(t); Φ(t) itself must be a restriction
    // of t (checked separately by Quasi-Cartan).
    if !relations::restriction(d, r, t) {
        return true;
    }
    relations::restriction(d, r, d.phi(t))
}

fn nondegenerate_at(d: &StructuredData, a: usize) -> bool {
    let Some(zero) = d.zero() else { return false };
    if a == zero {
        return true;
    }
    d.s_set().iter().any(|&s| d.phi(d.mul(a, s)) != zero)
}

fn dominated_at(d: &StructuredData, a: usize) -> bool {
    d.s_set().iter().any(|&b| relations::dominates(d, a, b).is_some())
}

fn orthosuprema_at(d: &StructuredData, a: usize, b: usize) -> bool {
    match relations::orthogonal(d, a, b) {
        Ok(true) => relations::supremum(d, a, b).is_some(),
        _ => true,
    }
}

fn distributivity_at(d: &StructuredData, r: usize, y: usize, z: usize) -> bool {
    if relations::orthogonal(d, y, z) != Ok(true) {
        return true;
    }
    let Some(yz) = relations::supremum(d, y, z) else { return false };
    if !d.in_z(yz) {
        return false;
    }
    relations::supremum(d, d.mul(r, y), d.mul(r, z)) == Some(d.mul(r, yz))
}

fn complements_at(d: &StructuredData, y: usize, z: usize) -> bool {
    if !relations::restriction(d, y, z) {
        return true;
    }
    matches!(relations::complement(d, y, z), Ok(Some(_)))
}

fn orthodirected_at(d: &StructuredData, s: usize, t: usize) -> bool {
    if relations::orthogonal(d, s, t) != Ok(true) {
        return true;
    }
    d.s_set().iter().any(|&r| {
        relations::dominates(d, s, r).is_some() && relations::dominates(d, t, r).is_some()
    })
}

fn additive_at(d: &StructuredData, a: usize, b: usize) -> bool {
    let Some(ring) = d.carrier.ring() else { return false };
    d.phi(ring.add(a, b)) == ring.add(d.phi(a), d.phi(b))
}

fn orthoadditive_at(d: &StructuredData, y: usize, z: usize) -> bool {
    let Some(ring) = d.carrier.ring() else { return false };
    if relations::orthogonal(d, y, z) != Ok(true) {
        return true;
    }
    d.in_z(ring.add(y, z))
}

fn subtractive_at(d: &StructuredData, y: usize, z: usize) -> bool {
    let Some(ring) = d.carrier.ring() else { return false };
    // z ≤ y implies y - z ∈ Z.
    if !relations::restriction(d, z, y) {
        return true;
    }
    d.in_z(ring.sub(y, z))
}

// ---------------------------------------------------------------------------
// Scans assembling LawChecks.

fn scan1(d: &StructuredData, law: Law, over: &[usize], at: impl Fn(usize) -> bool + Sync) -> LawCheck {
    let _ = d;
    let w = exec::find_min(over.len(), |i| {
        let a = over[i];
        if at(a) {
            None
        } else {
            Some(vec![a])
        }
    });
    LawCheck::from_witness(law, w)
}

fn scan2(
    law: Law,
    xs: &[usize],
    ys: &[usize],
    at: impl Fn(usize, usize) -> bool + Sync,
) -> LawCheck {
    let w = exec::find_min(xs.len() * ys.len().max(1), |i| {
        if ys.is_empty() {
            return None;
        }
        let (i, j) = exec::unpair(i, ys.len());
        let (a, b) = (xs[i], ys[j]);
        if at(a, b) {
            None
        } else {
            Some(vec![a, b])
        }
    });
    LawCheck::from_witness(law, w)
}

fn scan3(
    law: Law,
    xs: &[usize],
    ys: &[usize],
    zs: &[usize],
    at: impl Fn(usize, usize, usize) -> bool + Sync,
) -> LawCheck {
    let (ny, nz) = (ys.len(), zs.len());
    if ny == 0 || nz == 0 || xs.is_empty() {
        return LawCheck::ok(law);
    }
    let w = exec::find_min(xs.len() * ny * nz, |i| {
        let a = xs[i / (ny * nz)];
        let b = ys[(i / nz) % ny];
        let c = zs[i % nz];
        if at(a, b, c) {
            None
        } else {
            Some(vec![a, b, c])
        }
    });
    LawCheck::from_witness(law, w)
}

fn carrier_range(d: &StructuredData) -> Vec<usize> {
    (0..d.size()).collect()
}

fn generating_check(d: &StructuredData) -> LawCheck {
    let Some(ring) = d.carrier.ring() else {
        return LawCheck::fail_note(Law::Generating, "carrier is not a ring");
    };
    let n = d.size();
    let mut reachable = vec![false; n];
    for &s in d.s_set() {
        reachable[s] = true;
    }
    let mut rounds = 1usize;
    loop {
        let mut grew = false;
        let current: Vec<usize> = (0..n).filter(|&a| reachable[a]).collect();
        for &a in &current {
            for &s in d.s_set() {
                let sum = ring.add(a, s);
                if !reachable[sum] {
                    reachable[sum] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
        rounds += 1;
    }
    match (0..n).find(|&a| !reachable[a]) {
        None => LawCheck::ok(Law::Generating)
            .with_note(format!("sum closure of S reached A in {rounds} summand rounds")),
        Some(a) => LawCheck::fail(Law::Generating, vec![a]),
    }
}

fn well_structured_checks(d: &StructuredData) -> Vec<LawCheck> {
    let a = carrier_range(d);
    let s = d.s_set().to_vec();
    let z = d.z_set().to_vec();
    let dd = d.d_set();
    vec![
        scan2(Law::SClosed, &s, &s, |x, y| s_closed_at(d, x, y)),
        scan2(Law::ZClosed, &z, &z, |x, y| z_closed_at(d, x, y)),
        scan1(d, Law::Idempotent, &a, |x| idempotent_at(d, x)),
        scan2(Law::Homogeneous, &a, &a, |x, y| homogeneous_at(d, x, y)),
        scan2(Law::Shiftable, &a, &s, |x, y| shiftable_at(d, x, y)),
        scan2(Law::Bistable, &s, &s, |x, y| bistable_at(d, x, y)),
        scan3(Law::Binormal, &s, &z, &s, |x, y, w| binormal_at(d, x, y, w)),
        scan2(Law::ZCentral, &z, &dd, |x, y| z_central_at(d, x, y)),
    ]
}

fn steinberg_semigroup_extra(d: &StructuredData) -> Vec<LawCheck> {
    let s = d.s_set().to_vec();
    let z = d.z_set().to_vec();
    let dd = d.d_set();
    let mut checks = Vec::new();
    checks.push(if d.zero().is_some() {
        LawCheck::ok(Law::Zero)
    } else {
        LawCheck::fail_note(Law::Zero, "no absorbing element")
    });
    checks.push(scan1(d, Law::ZIdempotent, &z, |x| d.mul(x, x) == x));
    checks.push(scan1(d, Law::Dominated, &s, |x| dominated_at(d, x)));
    if d.zero().is_some() {
        checks.push(scan2(Law::Orthosuprema, &s, &s, |x, y| orthosuprema_at(d, x, y)));
        checks.push(scan3(Law::Distributivity, &dd, &z, &z, |r, y, w| {
            distributivity_at(d, r, y, w)
        }));
        checks.push(scan2(Law::Complements, &z, &z, |y, w| complements_at(d, y, w)));
    } else {
        for law in [Law::Orthosuprema, Law::Distributivity, Law::Complements] {
            checks.push(LawCheck::fail_note(law, "not checkable without a zero"));
        }
    }
    checks
}

fn steinberg_ring_extra(d: &StructuredData) -> Vec<LawCheck> {
    let a = carrier_range(d);
    let s = d.s_set().to_vec();
    let z = d.z_set().to_vec();
    let dd = d.d_set();
    let mut checks = vec![
        scan2(Law::Additive, &a, &a, |x, y| additive_at(d, x, y)),
        generating_check(d),
        scan2(Law::Orthodirected, &s, &s, |x, y| orthodirected_at(d, x, y)),
        scan2(Law::Orthoadditive, &z, &z, |x, y| orthoadditive_at(d, x, y)),
        scan2(Law::Subtractive, &z, &z, |x, y| subtractive_at(d, x, y)),
    ];
    checks.push(match d.zero() {
        Some(zero) if d.in_z(zero) => LawCheck::ok(Law::ZeroInZ),
        Some(zero) => LawCheck::fail(Law::ZeroInZ, vec![zero]),
        None => LawCheck::fail_note(Law::ZeroInZ, "no absorbing element"),
    });
    checks.push(scan2(Law::ZCentralIdempotent, &z, &dd, |x, y| {
        d.mul(x, x) == x && z_central_at(d, x, y)
    }));
    checks
}

/// Expectation-law report: (Idempotent), (Homogeneous), (Shiftable),
/// (Bistable), (Quasi-Cartan) on dominated elements, (Leech),
/// (Nondegenerate), and (Additive) on ring carriers.
pub fn check_expectation_laws(d: &StructuredData) -> AxiomReport {
    let a = carrier_range(d);
    let s = d.s_set().to_vec();
    let sgt = relations::s_dominated(d);
    let mut checks = vec![
        scan1(d, Law::Idempotent, &a, |x| idempotent_at(d, x)),
        scan2(Law::Homogeneous, &a, &a, |x, y| homogeneous_at(d, x, y)),
        scan2(Law::Shiftable, &a, &s, |x, y| shiftable_at(d, x, y)),
        scan2(Law::Bistable, &s, &s, |x, y| bistable_at(d, x, y)),
        scan1(d, Law::QuasiCartan, &sgt, |t| quasi_cartan_at(d, t)),
        scan2(Law::Leech, &sgt, &d.d_set(), |t, r| leech_at(d, t, r)),
    ];
    checks.push(if d.zero().is_some() {
        scan1(d, Law::Nondegenerate, &a, |x| nondegenerate_at(d, x))
    } else {
        LawCheck::fail_note(Law::Nondegenerate, "not checkable without a zero")
    });
    if d.carrier.is_ring() {
        checks.push(scan2(Law::Additive, &a, &a, |x, y| additive_at(d, x, y)));
    }
    AxiomReport { profile: "expectation-laws".into(), checks }
}

// ---------------------------------------------------------------------------
// Quasi-Cartan pair machinery (shared with the fixture generators).

/// Orthogonality with the witness set fixed explicitly (used by the
/// quasi-Cartan checks, where witnesses range over E(Z) of the subalgebra).
fn orthogonal_wrt(ring: &FiniteRing, ez: &[usize], a: usize, b: usize) -> bool {
    let zero = ring.zero();
    ez.iter().any(|&y| ring.mul(y, a) == a && ring.mul(y, b) == zero)
        && ez.iter().any(|&z| ring.mul(a, z) == a && ring.mul(b, z) == zero)
}

fn restriction_wrt(ring: &FiniteRing, zwit: &[usize], a: usize, b: usize) -> bool {
    zwit.iter().any(|&y| ring.mul(y, b) == a && ring.mul(y, a) == a)
        && zwit.iter().any(|&z| ring.mul(a, z) == a && ring.mul(b, z) == a)
}

/// The Z-invertible normalizers of a subalgebra: elements `a` with
/// `aZ = Za` setwise and some `s` with `asa = a`, `sas = s`, `as, sa ∈ Z`.
pub fn z_invertible_normalizers(ring: &FiniteRing, zsub: &[usize]) -> Vec<usize> {
    let n = ring.size();
    (0..n)
        .filter(|&a| {
            let mut left: Vec<usize> = zsub.iter().map(|&z| ring.mul(a, z)).collect();
            let mut right: Vec<usize> = zsub.iter().map(|&z| ring.mul(z, a)).collect();
            left.sort_unstable();
            left.dedup();
            right.sort_unstable();
            right.dedup();
            if left != right {
                return false;
            }
            (0..n).any(|s| {
                let (as_, sa) = (ring.mul(a, s), ring.mul(s, a));
                zsub.binary_search(&as_).is_ok()
                    && zsub.binary_search(&sa).is_ok()
                    && ring.mul(as_, a) == a
                    && ring.mul(sa, s) == s
            })
        })
        .collect()
}

/// Closure of a generating set under scalar action and sums: `span_R(gens)`.
pub fn scalar_span(ring: &FiniteRing, action: &[Vec<usize>], gens: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; ring.size()];
    inside[ring.zero()] = true;
    let mut frontier: Vec<usize> = Vec::new();
    for &g in gens {
        for row in action {
            let rg = row[g];
            if !inside[rg] {
                inside[rg] = true;
                frontier.push(rg);
            }
        }
    }
    loop {
        let current: Vec<usize> = (0..ring.size()).filter(|&a| inside[a]).collect();
        let mut grew = false;
        for &a in &current {
            for &b in &current {
                let s = ring.add(a, b);
                if !inside[s] {
                    inside[s] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let _ = frontier;
    (0..ring.size()).filter(|&a| inside[a]).collect()
}

/// Closure of a generating set under scalar action and sums of orthogonal
/// pairs (orthogonality witnessed in `ez`): the orthospan.
pub fn orthospan(
    ring: &FiniteRing,
    action: &[Vec<usize>],
    ez: &[usize],
    gens: &[usize],
) -> Vec<usize> {
    let mut inside = vec![false; ring.size()];
    inside[ring.zero()] = true;
    for &g in gens {
        for row in action {
            inside[row[g]] = true;
        }
    }
    loop {
        let current: Vec<usize> = (0..ring.size()).filter(|&a| inside[a]).collect();
        let mut grew = false;
        for &a in &current {
            for &b in &current {
                if orthogonal_wrt(ring, ez, a, b) {
                    let s = ring.add(a, b);
                    if !inside[s] {
                        inside[s] = true;
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    (0..ring.size()).filter(|&a| inside[a]).collect()
}

fn quasi_cartan_pair_checks(q: &QuasiCartanPair) -> Result<Vec<LawCheck>, ProfileError> {
    let Some(ring) = q.data.carrier.ring() else {
        return Err(ProfileError::ProfileMismatch {
            profile: Profile::QuasiCartanPair,
            got: "structured data without addition tables",
        });
    };
    let n = ring.size();
    let nr = q.scalars.size();
    let zs = &q.z_subalgebra;
    let ez: Vec<usize> = zs.iter().copied().filter(|&z| ring.mul(z, z) == z).collect();
    let mut checks = Vec::new();

    // Scalar action is a module action compatible with the product.
    let act = &q.action;
    let shape_ok = act.len() == nr && act.iter().all(|r| r.len() == n && r.iter().all(|&e| e < n));
    if !shape_ok {
        checks.push(LawCheck::fail_note(Law::ScalarAction, "action table shape"));
    } else {
        let sc = &q.scalars;
        let w = exec::find_min(nr * nr * n, |i| {
            let r = i / (nr * n);
            let r2 = (i / n) % nr;
            let a = i % n;
            let ok = act[sc.add(r, r2)][a] == ring.add(act[r][a], act[r2][a])
                && act[sc.mul(r, r2)][a] == act[r][act[r2][a]];
            if ok {
                None
            } else {
                Some(vec![r, r2, a])
            }
        })
        .or_else(|| {
            exec::find_min(nr * n * n, |i| {
                let r = i / (n * n);
                let a = (i / n) % n;
                let b = i % n;
                let ok = act[r][ring.add(a, b)] == ring.add(act[r][a], act[r][b])
                    && act[r][ring.mul(a, b)] == ring.mul(act[r][a], b)
                    && act[r][ring.mul(a, b)] == ring.mul(a, act[r][b]);
                if ok {
                    None
                } else {
                    Some(vec![r, a, b])
                }
            })
        })
        .or_else(|| {
            q.scalars.one().map_or(Some(vec![]), |one| {
                (0..n).find(|&a| act[one][a] != a).map(|a| vec![a])
            })
        });
        checks.push(LawCheck::from_witness(Law::ScalarAction, w));
    }

    // The subalgebra is closed under sums, negation, products and scalars.
    let sub_ok = zs.windows(2).all(|w| w[0] < w[1])
        && zs.iter().all(|&z| z < n)
        && zs.binary_search(&ring.zero()).is_ok()
        && zs.iter().all(|&y| {
            zs.iter().all(|&z| {
                zs.binary_search(&ring.add(y, z)).is_ok()
                    && zs.binary_search(&ring.mul(y, z)).is_ok()
            }) && zs.binary_search(&ring.neg(y)).is_ok()
                && (0..nr).all(|r| act.get(r).is_none_or(|row| zs.binary_search(&row[y]).is_ok()))
        });
    checks.push(if sub_ok {
        LawCheck::ok(Law::Subalgebra)
    } else {
        LawCheck::fail_note(Law::Subalgebra, "Z is not an R-subalgebra")
    });

    checks.push(scan2(Law::ZCommutative, zs, zs, |y, z| {
        ring.mul(y, z) == ring.mul(z, y)
    }));

    // Torsion-freeness over R × E(A), by enumeration.
    let ea: Vec<usize> = ring.idempotents();
    if shape_ok {
        let w = exec::find_min(nr * ea.len().max(1), |i| {
            if ea.is_empty() {
                return None;
            }
            let (ri, ei) = exec::unpair(i, ea.len());
            let (r, e) = (ri, ea[ei]);
            if act[r][e] == ring.zero() && r != q.scalars.zero() && e != ring.zero() {
                Some(vec![r, e])
            } else {
                None
            }
        });
        checks.push(LawCheck::from_witness(Law::TorsionFree, w));
    } else {
        checks.push(LawCheck::fail_note(Law::TorsionFree, "action table shape"));
    }

    // Z = span of its idempotents.
    if shape_ok {
        let span_ez = scalar_span(ring, act, &ez);
        checks.push(if span_ez == *zs {
            LawCheck::ok(Law::ZSpanned)
        } else {
            LawCheck::fail_note(Law::ZSpanned, "span of E(Z) differs from Z")
        });
    } else {
        checks.push(LawCheck::fail_note(Law::ZSpanned, "action table shape"));
    }

    // Φ is linear: additive and scalar-compatible.
    let d = &q.data;
    let add_w = exec::find_min(n * n, |i| {
        let (a, b) = exec::unpair(i, n);
        if additive_at(d, a, b) {
            None
        } else {
            Some(vec![a, b])
        }
    });
    let lin_w = add_w.or_else(|| {
        if !shape_ok {
            return None;
        }
        exec::find_min(nr * n, |i| {
            let (r, a) = exec::unpair(i, n);
            if d.phi(act[r][a]) == act[r][d.phi(a)] {
                None
            } else {
                Some(vec![r, a])
            }
        })
    });
    checks.push(LawCheck::from_witness(Law::Linear, lin_w));

    // ran(Φ) = Z.
    checks.push(if d.d_set() == *zs {
        LawCheck::ok(Law::RangeIsZ)
    } else {
        LawCheck::fail_note(Law::RangeIsZ, "ran(Phi) differs from the subalgebra")
    });

    // Packaging consistency: the data's Z field is E(Z).
    checks.push(if d.z_set() == ez.as_slice() {
        LawCheck::ok(Law::ZFieldIdempotents)
    } else {
        LawCheck::fail_note(Law::ZFieldIdempotents, "data Z field is not E(Z)")
    });

    let znd = z_invertible_normalizers(ring, zs);
    if shape_ok {
        let span_znd = scalar_span(ring, act, &znd);
        checks.push(if span_znd.len() == n {
            LawCheck::ok(Law::SpannedByNormalizers)
        } else {
            LawCheck::fail_note(Law::SpannedByNormalizers, "Z-invertible normalizers do not span A")
        });
    } else {
        checks.push(LawCheck::fail_note(Law::SpannedByNormalizers, "action table shape"));
    }

    // Quasi-Cartan on the Z-invertible normalizers (the required scope).
    checks.push(scan1(d, Law::QuasiCartanNormalizers, &znd, |t| {
        restriction_wrt(ring, &ez, d.phi(t), t)
    }));

    // Packaging consistency: the data's S field is the orthospan.
    if shape_ok {
        let ospan = orthospan(ring, act, &ez, &znd);
        checks.push(if d.s_set() == ospan.as_slice() {
            LawCheck::ok(Law::SIsOrthospan)
        } else {
            LawCheck::fail_note(Law::SIsOrthospan, "data S field is not orthospan(Z-normalizers)")
        });
        // Informational: whether quasi-Cartan extends to the orthospan.
        checks.push(
            scan1(d, Law::QuasiCartanOrthospan, &ospan, |t| {
                restriction_wrt(ring, &ez, d.phi(t), t)
            })
            .informational(),
        );
    }

    Ok(checks)
}

// ---------------------------------------------------------------------------
// Bundle profile checks (non-short-circuiting versions of the validator).

/// Ample-bundle laws over raw parts; runs every law for full diagnostics.
pub fn check_bundle_laws(
    total: &crate::category::FiniteCategory,
    base: &crate::category::FiniteGroupoid,
    rho: &[usize],
    zero: &[usize],
) -> Vec<LawCheck> {
    let nc = total.size();
    let ng = base.size();
    let mut checks = Vec::new();

    let shape_ok = rho.len() == nc
        && rho.iter().all(|&g| g < ng)
        && zero.len() == ng
        && zero.iter().all(|&c| c < nc);
    if !shape_ok {
        for law in [
            Law::Functor,
            Law::Isofibration,
            Law::ZeroSection,
            Law::CoreSurjective,
            Law::UnitBijection,
        ] {
            checks.push(LawCheck::fail_note(law, "rho/zero table shape"));
        }
        return checks;
    }

    let functor_w = exec::find_min(nc, |a| {
        let ok = base.src(rho[a]) == rho[total.src(a)] && base.rng(rho[a]) == rho[total.rng(a)];
        if ok {
            None
        } else {
            Some(vec![a])
        }
    })
    .or_else(|| {
        exec::find_min(nc * nc, |i| {
            let (a, b) = exec::unpair(i, nc);
            match total.try_comp(a, b) {
                Some(ab) if base.try_comp(rho[a], rho[b]) != Some(rho[ab]) => Some(vec![a, b]),
                _ => None,
            }
        })
    });
    checks.push(LawCheck::from_witness(Law::Functor, functor_w));

    let units = total.units();
    let mut iso_w = None;
    'outer: for (i, &e1) in units.iter().enumerate() {
        for &e2 in &units[i + 1..] {
            if rho[e1] == rho[e2] {
                iso_w = Some(vec![e1, e2]);
                break 'outer;
            }
        }
    }
    checks.push(LawCheck::from_witness(Law::Isofibration, iso_w));

    let zero_w = (0..ng)
        .find(|&g| rho[zero[g]] != g)
        .map(|g| vec![g])
        .or_else(|| {
            exec::find_min(nc * ng, |i| {
                let (a, g) = exec::unpair(i, ng);
                if base.src(rho[a]) == base.rng(g)
                    && total.try_comp(a, zero[g]) != Some(zero[base.comp(rho[a], g)])
                {
                    return Some(vec![g, a]);
                }
                if base.src(g) == base.rng(rho[a])
                    && total.try_comp(zero[g], a) != Some(zero[base.comp(g, rho[a])])
                {
                    return Some(vec![g, a]);
                }
                None
            })
        });
    checks.push(LawCheck::from_witness(Law::ZeroSection, zero_w));

    match crate::category::core(total) {
        Ok((core_arrows, _)) => {
            let w = (0..ng)
                .find(|&g| !core_arrows.iter().any(|&c| rho[c] == g))
                .map(|g| vec![g]);
            checks.push(LawCheck::from_witness(Law::CoreSurjective, w));
        }
        Err(e) => checks.push(LawCheck::fail_note(Law::CoreSurjective, &e.to_string())),
    }

    let mut unit_images: Vec<usize> = units.iter().map(|&e| rho[e]).collect();
    unit_images.sort_unstable();
    unit_images.dedup();
    checks.push(if unit_images == base.units() {
        LawCheck::ok(Law::UnitBijection)
    } else {
        LawCheck::fail_note(Law::UnitBijection, "unit sets do not biject under rho")
    });

    checks
}

/// Ample-ringoid-bundle laws over raw parts: the bundle laws, then the fiber
/// laws when a bundle can be assembled at all.
pub fn check_ringoid_laws_raw(
    total: &crate::category::FiniteCategory,
    base: &crate::category::FiniteGroupoid,
    rho: &[usize],
    zero: &[usize],
    fibers: &[Vec<usize>],
    fadd: &[Vec<Vec<usize>>],
) -> Vec<LawCheck> {
    let mut checks = check_bundle_laws(total, base, rho, zero);
    let assembled = crate::bundle::validate_bundle(
        total.clone(),
        base.clone(),
        rho.to_vec(),
        zero.to_vec(),
    );
    match assembled {
        Err(_) => {
            for law in [Law::FiberGroups, Law::FiberDistributivity] {
                checks.push(LawCheck::fail_note(law, "bundle laws failed; fibers not checkable"));
            }
        }
        Ok(bundle) => {
            match crate::bundle::validate_ringoid_bundle(bundle, fibers.to_vec(), fadd.to_vec()) {
                Ok(rb) => checks.extend(ringoid_bundle_extra(&rb)),
                Err(e) => {
                    let law = match e {
                        crate::bundle::BundleError::NotFiberDistributive { .. } => {
                            Law::FiberDistributivity
                        }
                        _ => Law::FiberGroups,
                    };
                    checks.push(LawCheck::fail_note(law, &e.to_string()));
                }
            }
        }
    }
    checks
}

fn ringoid_bundle_extra(rb: &FiniteRingoidBundle) -> Vec<LawCheck> {
    // A constructed FiniteRingoidBundle already passed validation; re-derive
    // the two fiber laws for the report.
    let b = rb.bundle();
    let total = b.total();
    let nc = total.size();
    let mut checks = Vec::new();
    let group_w = (0..b.base().size()).find_map(|g| {
        let fib = &rb.fibers()[g];
        let zero = b.zero_at(g);
        let ok = fib.binary_search(&zero).is_ok()
            && fib.iter().all(|&x| {
                rb.fadd(zero, x) == x && fib.iter().all(|&y| rb.fadd(x, y) == rb.fadd(y, x))
            })
            && fib
                .iter()
                .all(|&x| fib.iter().any(|&y| rb.fadd(x, y) == zero));
        if ok {
            None
        } else {
            Some(vec![g])
        }
    });
    checks.push(LawCheck::from_witness(Law::FiberGroups, group_w));

    let dist_w = exec::find_min(nc * nc * nc, |i| {
        let (a, bb, c) = exec::untriple(i, nc);
        if b.rho(a) == b.rho(bb) {
            if total.composable(a, c)
                && total.comp(rb.fadd(a, bb), c) != rb.fadd(total.comp(a, c), total.comp(bb, c))
            {
                return Some(vec![a, bb, c]);
            }
            if total.composable(c, a)
                && total.comp(c, rb.fadd(a, bb)) != rb.fadd(total.comp(c, a), total.comp(c, bb))
            {
                return Some(vec![a, bb, c]);
            }
        }
        None
    });
    checks.push(LawCheck::from_witness(Law::FiberDistributivity, dist_w));
    checks
}

// ---------------------------------------------------------------------------

/// Decides whether the input satisfies the profile, with full diagnostics.
pub fn check_profile(input: &ProfileInput, profile: Profile) -> Result<AxiomReport, ProfileError> {
    let mismatch = |got: &'static str| ProfileError::ProfileMismatch { profile, got };
    let checks = match (profile, input) {
        (Profile::StructuredSemigroup, ProfileInput::Structured(d)) => {
            let a = carrier_range(d);
            let s = d.s_set().to_vec();
            let z = d.z_set().to_vec();
            let dd = d.d_set();
            vec![
                scan2(Law::SClosed, &s, &s, |x, y| s_closed_at(d, x, y)),
                scan2(Law::ZClosed, &z, &z, |x, y| z_closed_at(d, x, y)),
                scan1(d, Law::Idempotent, &a, |x| idempotent_at(d, x)),
                scan2(Law::Homogeneous, &a, &a, |x, y| homogeneous_at(d, x, y)),
                scan3(Law::Trinormal, &s, &dd, &s, |x, y, w| trinormal_at(d, x, y, w)),
                scan3(Law::Binormal, &s, &z, &s, |x, y, w| binormal_at(d, x, y, w)),
                scan2(Law::ZCentral, &z, &dd, |x, y| z_central_at(d, x, y)),
            ]
        }
        (Profile::WellStructuredSemigroup, ProfileInput::Structured(d)) => {
            if d.carrier.is_ring() || d.s_set().len() != d.size() {
                return Err(mismatch("semimodule data (carrier strictly larger than S)"));
            }
            well_structured_checks(d)
        }
        (Profile::WellStructuredSemimodule, ProfileInput::Structured(d)) => {
            well_structured_checks(d)
        }
        (Profile::SteinbergSemigroup, ProfileInput::Structured(d)) => {
            let mut checks = well_structured_checks(d);
            checks.extend(steinberg_semigroup_extra(d));
            checks
        }
        (Profile::SteinbergRing, ProfileInput::Structured(d)) => {
            if !d.carrier.is_ring() {
                return Err(mismatch("no addition tables"));
            }
            let mut checks = well_structured_checks(d);
            checks.extend(steinberg_semigroup_extra(d));
            checks.extend(steinberg_ring_extra(d));
            checks
        }
        (Profile::SteinbergRing, ProfileInput::QuasiCartan(q)) => {
            return check_profile(&ProfileInput::Structured(&q.data), profile);
        }
        (Profile::QuasiCartanPair, ProfileInput::QuasiCartan(q)) => quasi_cartan_pair_checks(q)?,
        (Profile::AmpleBundle, ProfileInput::Bundle(b)) => {
            check_bundle_laws(b.total(), b.base(), b.rho_table(), b.zero_table())
        }
        (Profile::AmpleBundle, ProfileInput::RingoidBundle(rb)) => {
            let b = rb.bundle();
            check_bundle_laws(b.total(), b.base(), b.rho_table(), b.zero_table())
        }
        (Profile::AmpleRingoidBundle, ProfileInput::RingoidBundle(rb)) => {
            let b = rb.bundle();
            let mut checks = check_bundle_laws(b.total(), b.base(), b.rho_table(), b.zero_table());
            checks.extend(ringoid_bundle_extra(rb));
            checks
        }
        (Profile::QuasiCartanPair, _) => return Err(mismatch("no scalar ring attached")),
        (Profile::AmpleRingoidBundle, ProfileInput::Bundle(_)) => {
            return Err(mismatch("no fiber addition tables"))
        }
        (Profile::AmpleBundle | Profile::AmpleRingoidBundle, ProfileInput::Structured(_)) => {
            return Err(mismatch("structured data, not a bundle"))
        }
        (_, ProfileInput::Bundle(_)) | (_, ProfileInput::RingoidBundle(_)) => {
            return Err(mismatch("bundle input"))
        }
        (_, ProfileInput::QuasiCartan(q)) => {
            return check_profile(&ProfileInput::Structured(&q.data), profile);
        }
    };
    Ok(AxiomReport { profile: profile.name().into(), checks })
}

/// Re-evaluates a law at a reported witness tuple on structured data.
/// Returns `Some(true)` when the witness indeed violates the law.
pub fn recheck(d: &StructuredData, law: Law, witness: &[usize]) -> Option<bool> {
    let violated = match (law, witness) {
        (Law::SClosed, &[a, b]) => !s_closed_at(d, a, b),
        (Law::ZClosed, &[a, b]) => !z_closed_at(d, a, b),
        (Law::Idempotent, &[a]) => !idempotent_at(d, a),
        (Law::Homogeneous, &[a, b]) => !homogeneous_at(d, a, b),
        (Law::Shiftable, &[a, s]) => !shiftable_at(d, a, s),
        (Law::Bistable, &[s, t]) => !bistable_at(d, s, t),
        (Law::Binormal, &[s, z, t]) => !binormal_at(d, s, z, t),
        (Law::Trinormal, &[s, n, t]) => !trinormal_at(d, s, n, t),
        (Law::ZCentral, &[z, r]) => !z_central_at(d, z, r),
        (Law::ZIdempotent, &[z]) => d.mul(z, z) != z,
        (Law::Dominated, &[a]) => !dominated_at(d, a),
        (Law::Orthosuprema, &[a, b]) => !orthosuprema_at(d, a, b),
        (Law::Distributivity, &[r, y, z]) => !distributivity_at(d, r, y, z),
        (Law::Complements, &[y, z]) => !complements_at(d, y, z),
        (Law::Additive, &[a, b]) => !additive_at(d, a, b),
        (Law::Orthodirected, &[s, t]) => !orthodirected_at(d, s, t),
        (Law::Orthoadditive, &[y, z]) => !orthoadditive_at(d, y, z),
        (Law::Subtractive, &[y, z]) => !subtractive_at(d, y, z),
        (Law::QuasiCartan, &[t]) => !quasi_cartan_at(d, t),
        (Law::Leech, &[t, r]) => !leech_at(d, t, r),
        (Law::Nondegenerate, &[a]) => !nondegenerate_at(d, a),
        _ => return None,
    };
    Some(violated)
}
