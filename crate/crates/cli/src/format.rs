//! The on-disk structure format: one self-contained JSON document per
//! object, with row-major index tables and an explicit `null` marker for
//! partial operations. See docs/format.md for the field-by-field layout.
//!
//! Morphism files may embed their endpoints or reference them by path with
//! a content hash; references are resolved relative to the morphism file.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::Path;
use steindual_core::bundle::{validate_ringoid_bundle, FiniteBundle, FiniteRingoidBundle};
use steindual_core::category::{
    validate_category, validate_groupoid, FiniteCategory, FiniteGroupoid,
};
use steindual_core::duality::{pullback_bundle, EtaleMorphism, PierceMorphism, SteinbergMorphism};
use steindual_core::semigroup::{validate_ring, validate_semigroup, FiniteRing, FiniteSemigroup};
use steindual_core::structured::{Carrier, QuasiCartanPair, StructuredData};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
    #[error("carrier size {size} exceeds STEINDUAL_MAX_SIZE = {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("referenced file {path} has hash {found}, expected {expected}")]
    HashMismatch { path: String, expected: String, found: String },
}

fn invalid(msg: impl Into<String>) -> FormatError {
    FormatError::Invalid(msg.into())
}

pub fn max_size() -> usize {
    std::env::var("STEINDUAL_MAX_SIZE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(4096)
}

#[derive(Debug, Clone, Serialize, Deserialize, Default, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Tables {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub add: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub neg: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_element: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub src: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rng: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inv: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub compose: Option<Vec<Vec<Option<usize>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fiber_add: Option<Vec<Vec<Vec<usize>>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Subsets {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z_subalgebra: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Maps {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalar_action: Option<Vec<Vec<usize>>>,
    /// Element map of a Steinberg morphism.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<usize>>,
    /// Partial base map of a Pierce morphism (per target-base arrow).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_arrows: Option<Vec<Option<usize>>>,
    /// Bundle map of a Pierce morphism as (base, total, image) triples over
    /// the pullback pairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<(usize, usize, usize)>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Part {
    pub elements: Vec<String>,
    pub tables: Tables,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum Endpoint {
    Reference { path: String, sha256: String },
    Embedded(Box<StructureFile>),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tables: Option<Tables>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subsets: Option<Subsets>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maps: Option<Maps>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total: Option<Part>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<Part>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalars: Option<Box<StructureFile>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<Endpoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<Endpoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metadata: Option<BTreeMap<String, String>>,
}

impl StructureFile {
    fn bare(kind: &str) -> Self {
        StructureFile {
            kind: kind.into(),
            elements: None,
            tables: None,
            subsets: None,
            maps: None,
            total: None,
            base: None,
            scalars: None,
            source: None,
            target: None,
            metadata: None,
        }
    }
}

/// The parsed value of a structure file. Bundle kinds keep their raw parts
/// so that law violations surface as profile failures, not parse errors.
pub enum FileValue {
    Semigroup(FiniteSemigroup),
    Ring(FiniteRing),
    Structured(StructuredData),
    QuasiCartan(QuasiCartanPair),
    RawBundle {
        total: FiniteCategory,
        base: FiniteGroupoid,
        rho: Vec<usize>,
        zero: Vec<usize>,
    },
    RawRingoidBundle {
        total: FiniteCategory,
        base: FiniteGroupoid,
        rho: Vec<usize>,
        zero: Vec<usize>,
        fibers: Vec<Vec<usize>>,
        fadd: Vec<Vec<Vec<usize>>>,
    },
    Morphism(Box<SteinbergMorphism>),
    Pierce(Box<PierceMorphism>),
}

// ---------------------------------------------------------------------------
// Reading.

pub fn read_file(path: &Path) -> Result<StructureFile, FormatError> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("{:x}", hasher.finalize())
}

fn resolve_endpoint(ep: &Endpoint, dir: &Path) -> Result<StructureFile, FormatError> {
    match ep {
        Endpoint::Embedded(f) => Ok((**f).clone()),
        Endpoint::Reference { path, sha256 } => {
            let full = dir.join(path);
            let bytes = std::fs::read(&full)?;
            let found = sha256_hex(&bytes);
            if &found != sha256 {
                return Err(FormatError::HashMismatch {
                    path: path.clone(),
                    expected: sha256.clone(),
                    found,
                });
            }
            Ok(serde_json::from_slice(&bytes)?)
        }
    }
}

fn check_cap(size: usize) -> Result<(), FormatError> {
    let cap = max_size();
    if size > cap {
        return Err(FormatError::TooLarge { size, cap });
    }
    Ok(())
}

fn parse_semigroup(f: &StructureFile) -> Result<FiniteSemigroup, FormatError> {
    let elements =
        f.elements.clone().ok_or_else(|| invalid("semigroup file needs elements"))?;
    check_cap(elements.len())?;
    let tables = f.tables.as_ref().ok_or_else(|| invalid("semigroup file needs tables"))?;
    let mult = tables.mult.clone().ok_or_else(|| invalid("semigroup file needs tables.mult"))?;
    validate_semigroup(elements, mult, tables.zero_element)
        .map_err(|e| invalid(e.to_string()))
}

fn parse_ring(f: &StructureFile) -> Result<FiniteRing, FormatError> {
    let elements = f.elements.clone().ok_or_else(|| invalid("ring file needs elements"))?;
    check_cap(elements.len())?;
    let tables = f.tables.as_ref().ok_or_else(|| invalid("ring file needs tables"))?;
    let add = tables.add.clone().ok_or_else(|| invalid("ring file needs tables.add"))?;
    let neg = tables.neg.clone().ok_or_else(|| invalid("ring file needs tables.neg"))?;
    let zero = tables.zero_element.ok_or_else(|| invalid("ring file needs tables.zero_element"))?;
    let mult = tables.mult.clone().ok_or_else(|| invalid("ring file needs tables.mult"))?;
    validate_ring(elements, add, neg, zero, mult).map_err(|e| invalid(e.to_string()))
}

fn parse_structured(f: &StructureFile) -> Result<FileValue, FormatError> {
    let tables = f.tables.as_ref().ok_or_else(|| invalid("structured file needs tables"))?;
    let carrier = if tables.add.is_some() {
        Carrier::Ring(parse_ring(f)?)
    } else {
        Carrier::Semigroup(parse_semigroup(f)?)
    };
    let subsets = f.subsets.as_ref().ok_or_else(|| invalid("structured file needs subsets"))?;
    let maps = f.maps.as_ref().ok_or_else(|| invalid("structured file needs maps"))?;
    let s = subsets.s.clone().ok_or_else(|| invalid("structured file needs subsets.s"))?;
    let z = subsets.z.clone().ok_or_else(|| invalid("structured file needs subsets.z"))?;
    let phi = maps.phi.clone().ok_or_else(|| invalid("structured file needs maps.phi"))?;
    let data = StructuredData::new(carrier, s, z, phi).map_err(|e| invalid(e.to_string()))?;
    match (&f.scalars, &maps.scalar_action, &subsets.z_subalgebra) {
        (Some(scalars), Some(action), Some(zsub)) => {
            let scalars = parse_ring(scalars)?;
            Ok(FileValue::QuasiCartan(QuasiCartanPair {
                data,
                z_subalgebra: zsub.clone(),
                scalars,
                action: action.clone(),
            }))
        }
        (None, None, None) => Ok(FileValue::Structured(data)),
        _ => Err(invalid(
            "quasi-Cartan data needs scalars, maps.scalar_action and subsets.z_subalgebra together",
        )),
    }
}

fn parse_category(p: &Part) -> Result<FiniteCategory, FormatError> {
    check_cap(p.elements.len())?;
    let src = p.tables.src.clone().ok_or_else(|| invalid("category part needs tables.src"))?;
    let rng = p.tables.rng.clone().ok_or_else(|| invalid("category part needs tables.rng"))?;
    let compose =
        p.tables.compose.clone().ok_or_else(|| invalid("category part needs tables.compose"))?;
    validate_category(p.elements.clone(), src, rng, compose).map_err(|e| invalid(e.to_string()))
}

fn parse_groupoid(p: &Part) -> Result<FiniteGroupoid, FormatError> {
    let cat = parse_category(p)?;
    let inv = p.tables.inv.clone().ok_or_else(|| invalid("groupoid part needs tables.inv"))?;
    validate_groupoid(cat, inv).map_err(|e| invalid(e.to_string()))
}

fn parse_bundle_parts(
    f: &StructureFile,
) -> Result<(FiniteCategory, FiniteGroupoid, Vec<usize>, Vec<usize>), FormatError> {
    let total = f.total.as_ref().ok_or_else(|| invalid("bundle file needs total"))?;
    let base = f.base.as_ref().ok_or_else(|| invalid("bundle file needs base"))?;
    let total = parse_category(total)?;
    let base = parse_groupoid(base)?;
    let tables = f.tables.as_ref().ok_or_else(|| invalid("bundle file needs tables"))?;
    let rho = tables.rho.clone().ok_or_else(|| invalid("bundle file needs tables.rho"))?;
    let zero = tables.zero.clone().ok_or_else(|| invalid("bundle file needs tables.zero"))?;
    if rho.len() != total.size() || rho.iter().any(|&g| g >= base.size()) {
        return Err(invalid("tables.rho shape"));
    }
    if zero.len() != base.size() || zero.iter().any(|&c| c >= total.size()) {
        return Err(invalid("tables.zero shape"));
    }
    Ok((total, base, rho, zero))
}

fn parse_morphism(f: &StructureFile, dir: &Path) -> Result<SteinbergMorphism, FormatError> {
    let src = resolve_endpoint(
        f.source.as_ref().ok_or_else(|| invalid("morphism file needs source"))?,
        dir,
    )?;
    let tgt = resolve_endpoint(
        f.target.as_ref().ok_or_else(|| invalid("morphism file needs target"))?,
        dir,
    )?;
    let source = parse_value(&src, dir).and_then(to_structured)?;
    let target = parse_value(&tgt, dir).and_then(to_structured)?;
    let map = f
        .maps
        .as_ref()
        .and_then(|m| m.map.clone())
        .ok_or_else(|| invalid("morphism file needs maps.map"))?;
    if map.len() != source.size() || map.iter().any(|&a| a >= target.size()) {
        return Err(invalid("maps.map shape"));
    }
    Ok(SteinbergMorphism { source, target, map })
}

fn assemble_ringoid(
    total: FiniteCategory,
    base: FiniteGroupoid,
    rho: Vec<usize>,
    zero: Vec<usize>,
    fibers: Vec<Vec<usize>>,
    fadd: Vec<Vec<Vec<usize>>>,
) -> Result<FiniteRingoidBundle, FormatError> {
    let bundle = steindual_core::bundle::validate_bundle(total, base, rho, zero)
        .map_err(|e| invalid(e.to_string()))?;
    validate_ringoid_bundle(bundle, fibers, fadd).map_err(|e| invalid(e.to_string()))
}

fn parse_pierce(f: &StructureFile, dir: &Path) -> Result<PierceMorphism, FormatError> {
    let src = resolve_endpoint(
        f.source.as_ref().ok_or_else(|| invalid("pierce-morphism file needs source"))?,
        dir,
    )?;
    let tgt = resolve_endpoint(
        f.target.as_ref().ok_or_else(|| invalid("pierce-morphism file needs target"))?,
        dir,
    )?;
    let (source, source_ringoid) = to_bundle(parse_value(&src, dir)?)?;
    let (target, target_ringoid) = to_bundle(parse_value(&tgt, dir)?)?;

    let maps = f.maps.as_ref().ok_or_else(|| invalid("pierce-morphism file needs maps"))?;
    let phi_arrows = maps
        .phi_arrows
        .clone()
        .ok_or_else(|| invalid("pierce-morphism file needs maps.phi_arrows"))?;
    if phi_arrows.len() != target.base().size()
        || phi_arrows.iter().flatten().any(|&g| g >= source.base().size())
    {
        return Err(invalid("maps.phi_arrows shape"));
    }
    let phi = EtaleMorphism {
        source: target.base().clone(),
        target: source.base().clone(),
        map: phi_arrows,
    };
    let pullback = pullback_bundle(&phi, &source, source_ringoid.as_ref());
    let triples = maps
        .beta
        .clone()
        .ok_or_else(|| invalid("pierce-morphism file needs maps.beta"))?;
    if triples.len() != pullback.pairs.len() {
        return Err(invalid("maps.beta does not cover the pullback pairs"));
    }
    let mut beta = vec![usize::MAX; pullback.pairs.len()];
    for (g, c, image) in triples {
        let idx = *pullback
            .pair_index
            .get(&(g, c))
            .ok_or_else(|| invalid(format!("beta triple ({g},{c}) is not a pullback pair")))?;
        if image >= target.total().size() {
            return Err(invalid("beta image out of range"));
        }
        beta[idx] = image;
    }
    if beta.contains(&usize::MAX) {
        return Err(invalid("maps.beta misses a pullback pair"));
    }
    Ok(PierceMorphism {
        source,
        target,
        source_ringoid,
        target_ringoid,
        phi,
        pullback,
        beta,
    })
}

pub fn parse_value(f: &StructureFile, dir: &Path) -> Result<FileValue, FormatError> {
    match f.kind.as_str() {
        "semigroup" => Ok(FileValue::Semigroup(parse_semigroup(f)?)),
        "ring" => Ok(FileValue::Ring(parse_ring(f)?)),
        "structured" => parse_structured(f),
        "bundle" => {
            let (total, base, rho, zero) = parse_bundle_parts(f)?;
            Ok(FileValue::RawBundle { total, base, rho, zero })
        }
        "ringoid-bundle" => {
            let (total, base, rho, zero) = parse_bundle_parts(f)?;
            let tables = f.tables.as_ref().unwrap();
            let fadd = tables
                .fiber_add
                .clone()
                .ok_or_else(|| invalid("ringoid-bundle file needs tables.fiber_add"))?;
            let fibers: Vec<Vec<usize>> = (0..base.size())
                .map(|g| (0..total.size()).filter(|&c| rho[c] == g).collect())
                .collect();
            Ok(FileValue::RawRingoidBundle { total, base, rho, zero, fibers, fadd })
        }
        "morphism" => Ok(FileValue::Morphism(Box::new(parse_morphism(f, dir)?))),
        "pierce-morphism" => Ok(FileValue::Pierce(Box::new(parse_pierce(f, dir)?))),
        other => Err(invalid(format!("unknown kind {other}"))),
    }
}

/// Canonically structures bare carriers: a semigroup becomes
/// `(S, E(Z(S)), id)`, a locally unital ring becomes `(A, A, Z(E(A)), id)`.
pub fn to_structured(v: FileValue) -> Result<StructuredData, FormatError> {
    match v {
        FileValue::Structured(d) => Ok(d),
        FileValue::QuasiCartan(q) => Ok(q.data),
        FileValue::Semigroup(sg) => {
            let n = sg.size();
            let all: Vec<usize> = (0..n).collect();
            let central_idem: Vec<usize> = (0..n)
                .filter(|&e| {
                    sg.mul(e, e) == e && (0..n).all(|x| sg.mul(e, x) == sg.mul(x, e))
                })
                .collect();
            StructuredData::new(Carrier::Semigroup(sg), all.clone(), central_idem, all)
                .map_err(|e| invalid(e.to_string()))
        }
        FileValue::Ring(ring) => steindual_core::fixtures::pierce_case(&ring)
            .map_err(|e| invalid(e.to_string())),
        _ => Err(invalid("expected a structured carrier, found a bundle or morphism")),
    }
}

/// Assembles validated bundles from raw parts.
pub fn to_bundle(
    v: FileValue,
) -> Result<(FiniteBundle, Option<FiniteRingoidBundle>), FormatError> {
    match v {
        FileValue::RawBundle { total, base, rho, zero } => {
            let b = steindual_core::bundle::validate_bundle(total, base, rho, zero)
                .map_err(|e| invalid(e.to_string()))?;
            Ok((b, None))
        }
        FileValue::RawRingoidBundle { total, base, rho, zero, fibers, fadd } => {
            let rb = assemble_ringoid(total, base, rho, zero, fibers, fadd)?;
            Ok((rb.bundle().clone(), Some(rb)))
        }
        _ => Err(invalid("expected a bundle file")),
    }
}

// ---------------------------------------------------------------------------
// Writing.

pub fn emit(f: &StructureFile) -> String {
    let mut text = serde_json::to_string_pretty(f).expect("serializable");
    text.push('\n');
    text
}

pub fn write_file(path: &Path, f: &StructureFile) -> Result<(), FormatError> {
    std::fs::write(path, emit(f))?;
    Ok(())
}

fn meta(name: &str) -> Option<BTreeMap<String, String>> {
    let mut m = BTreeMap::new();
    m.insert("name".to_string(), name.to_string());
    Some(m)
}

pub fn ring_tables(ring: &FiniteRing) -> Tables {
    Tables {
        mult: Some(ring.mult_table().clone()),
        add: Some(ring.add_table().clone()),
        neg: Some(ring.neg_table().to_vec()),
        zero_element: Some(ring.zero()),
        ..Tables::default()
    }
}

pub fn ring_to_file(ring: &FiniteRing, name: &str) -> StructureFile {
    let mut f = StructureFile::bare("ring");
    f.elements = Some(ring.names().to_vec());
    f.tables = Some(ring_tables(ring));
    f.metadata = meta(name);
    f
}

pub fn structured_to_file(d: &StructuredData, name: &str) -> StructureFile {
    let mut f = StructureFile::bare("structured");
    f.elements = Some(d.carrier.names().to_vec());
    f.tables = Some(match &d.carrier {
        Carrier::Ring(r) => ring_tables(r),
        Carrier::Semigroup(sg) => Tables {
            mult: Some(sg.mult_table().clone()),
            zero_element: sg.zero(),
            ..Tables::default()
        },
    });
    f.subsets = Some(Subsets {
        s: Some(d.s_set().to_vec()),
        z: Some(d.z_set().to_vec()),
        z_subalgebra: None,
    });
    f.maps = Some(Maps { phi: Some(d.phi_table().to_vec()), ..Maps::default() });
    f.metadata = meta(name);
    f
}

pub fn quasi_cartan_to_file(q: &QuasiCartanPair, name: &str) -> StructureFile {
    let mut f = structured_to_file(&q.data, name);
    f.subsets.as_mut().unwrap().z_subalgebra = Some(q.z_subalgebra.clone());
    f.maps.as_mut().unwrap().scalar_action = Some(q.action.clone());
    f.scalars = Some(Box::new(ring_to_file(&q.scalars, "scalars")));
    f
}

fn category_part(cat: &FiniteCategory) -> Part {
    Part {
        elements: cat.names().to_vec(),
        tables: Tables {
            src: Some(cat.src_table().to_vec()),
            rng: Some(cat.rng_table().to_vec()),
            compose: Some(cat.compose_table().clone()),
            ..Tables::default()
        },
    }
}

fn groupoid_part(g: &FiniteGroupoid) -> Part {
    let mut p = category_part(g.category());
    p.tables.inv = Some(g.inv_table().to_vec());
    p
}

pub fn bundle_to_file(b: &FiniteBundle, name: &str) -> StructureFile {
    let mut f = StructureFile::bare("bundle");
    f.total = Some(category_part(b.total()));
    f.base = Some(groupoid_part(b.base()));
    f.tables = Some(Tables {
        rho: Some(b.rho_table().to_vec()),
        zero: Some(b.zero_table().to_vec()),
        ..Tables::default()
    });
    f.metadata = meta(name);
    f
}

pub fn ringoid_bundle_to_file(rb: &FiniteRingoidBundle, name: &str) -> StructureFile {
    let mut f = bundle_to_file(rb.bundle(), name);
    f.kind = "ringoid-bundle".into();
    f.tables.as_mut().unwrap().fiber_add = Some(rb.fadd_tables().clone());
    f
}

pub fn morphism_to_file(m: &SteinbergMorphism, name: &str) -> StructureFile {
    let mut f = StructureFile::bare("morphism");
    f.source = Some(Endpoint::Embedded(Box::new(structured_to_file(&m.source, "source"))));
    f.target = Some(Endpoint::Embedded(Box::new(structured_to_file(&m.target, "target"))));
    f.maps = Some(Maps { map: Some(m.map.clone()), ..Maps::default() });
    f.metadata = meta(name);
    f
}

pub fn pierce_to_file(p: &PierceMorphism, name: &str) -> StructureFile {
    let mut f = StructureFile::bare("pierce-morphism");
    let src = match &p.source_ringoid {
        Some(rb) => ringoid_bundle_to_file(rb, "source"),
        None => bundle_to_file(&p.source, "source"),
    };
    let tgt = match &p.target_ringoid {
        Some(rb) => ringoid_bundle_to_file(rb, "target"),
        None => bundle_to_file(&p.target, "target"),
    };
    f.source = Some(Endpoint::Embedded(Box::new(src)));
    f.target = Some(Endpoint::Embedded(Box::new(tgt)));
    let beta = p
        .pullback
        .pairs
        .iter()
        .zip(&p.beta)
        .map(|(&(g, c), &image)| (g, c, image))
        .collect();
    f.maps = Some(Maps {
        phi_arrows: Some(p.phi.map.clone()),
        beta: Some(beta),
        ..Maps::default()
    });
    f.metadata = meta(name);
    f
}
