//! Command-line surface: load structure files, run profile checks, dualize,
//! verify round trips, translate morphisms across the duality, and emit the
//! canonical fixtures.
//!
//! Exit codes: 0 all checks pass, 1 a law/isomorphism check fails, 2 the
//! input cannot be parsed or does not fit the requested profile family.


use clap::{Parser, Subcommand};
use steindual::format::{self, FileValue, FormatError, StructureFile};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use steindual_core::axioms::{self, AxiomReport, LawCheck, Profile, ProfileInput};
use steindual_core::duality;
use steindual_core::filters;
use steindual_core::fixtures;
use steindual_core::relations::RelationCache;
use steindual_core::structured::StructuredData;
use steindual_core::ultrafilter_bundle::{self, BuiltBundle};

#[derive(Parser)]
#[command(name = "steindual", version, about = "Finite Steinberg structures and their dual bundles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum OutputFormat {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Run a structural profile over a structure file.
    Check {
        file: PathBuf,
        #[arg(long)]
        profile: String,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
        /// Also run the brute-force cross-checks (subset filter oracle).
        #[arg(long)]
        oracle: bool,
    },
    /// Build the dual object: structures to bundles, bundles to sections.
    Dualize {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Dualize twice and verify the round-trip isomorphism.
    Roundtrip {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
    /// Translate a morphism file across the duality.
    ApplyFunctor {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
    /// Emit a canonical fixture file.
    Example {
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        list: bool,
    },
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check { file, profile, format, oracle } => cmd_check(&file, &profile, format, oracle),
        Command::Dualize { file, out } => cmd_dualize(&file, &out),
        Command::Roundtrip { file, format } => cmd_roundtrip(&file, format),
        Command::ApplyFunctor { file, out, format } => cmd_apply_functor(&file, out.as_deref(), format),
        Command::Example { name, out, list } => cmd_example(name.as_deref(), out.as_deref(), list),
    };
    match outcome {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<(StructureFile, FileValue), FormatError> {
    let sf = format::read_file(path)?;
    let dir = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    let value = format::parse_value(&sf, &dir)?;
    Ok((sf, value))
}

fn render_report(report: &AxiomReport, names: Option<&[String]>, format: OutputFormat) {
    match format {
        OutputFormat::Machine => {
            let checks: Vec<serde_json::Value> = report
                .checks
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "law": c.law.to_string(),
                        "pass": c.pass,
                        "witness": c.witness,
                        "note": c.note,
                        "informational": c.informational,
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "profile": report.profile,
                "all_pass": report.all_pass(),
                "checks": checks,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        OutputFormat::Human => {
            println!("profile {}: {}", report.profile, verdict(report.all_pass()));
            for c in &report.checks {
                print_check(c, names);
            }
        }
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn print_check(c: &LawCheck, names: Option<&[String]>) {
    let mut line = format!(
        "  {} {}",
        if c.pass { "pass" } else if c.informational { "info" } else { "FAIL" },
        c.law
    );
    if let Some(w) = &c.witness {
        let rendered: Vec<String> = w
            .iter()
            .map(|&i| match names {
                Some(ns) if i < ns.len() => format!("{i}={}", ns[i]),
                _ => i.to_string(),
            })
            .collect();
        line.push_str(&format!(" witness [{}]", rendered.join(", ")));
    }
    if let Some(n) = &c.note {
        line.push_str(&format!(" ({n})"));
    }
    println!("{line}");
}

fn cmd_check(
    path: &Path,
    profile_name: &str,
    format: OutputFormat,
    oracle: bool,
) -> Result<bool, FormatError> {
    let profile = Profile::from_name(profile_name)
        .ok_or_else(|| FormatError::Invalid(format!("unknown profile {profile_name}")))?;
    let (_, value) = load(path)?;

    let (report, names, structured): (AxiomReport, Option<Vec<String>>, Option<StructuredData>) =
        match (&value, profile) {
            (FileValue::RawBundle { total, base, rho, zero }, Profile::AmpleBundle) => {
                let checks = axioms::check_bundle_laws(total, base, rho, zero);
                (
                    AxiomReport { profile: profile.name().into(), checks },
                    Some(total.names().to_vec()),
                    None,
                )
            }
            (
                FileValue::RawRingoidBundle { total, base, rho, zero, fibers, fadd },
                Profile::AmpleBundle | Profile::AmpleRingoidBundle,
            ) => {
                let checks = if profile == Profile::AmpleBundle {
                    axioms::check_bundle_laws(total, base, rho, zero)
                } else {
                    axioms::check_ringoid_laws_raw(total, base, rho, zero, fibers, fadd)
                };
                (
                    AxiomReport { profile: profile.name().into(), checks },
                    Some(total.names().to_vec()),
                    None,
                )
            }
            (FileValue::QuasiCartan(q), _) => {
                let report = axioms::check_profile(&ProfileInput::QuasiCartan(q), profile)
                    .map_err(|e| FormatError::Invalid(e.to_string()))?;
                (report, Some(q.data.carrier.names().to_vec()), Some(q.data.clone()))
            }
            (FileValue::Structured(_) | FileValue::Semigroup(_) | FileValue::Ring(_), _) => {
                let d = format::to_structured(value)?;
                let report = axioms::check_profile(&ProfileInput::Structured(&d), profile)
                    .map_err(|e| FormatError::Invalid(e.to_string()))?;
                (report, Some(d.carrier.names().to_vec()), Some(d))
            }
            _ => {
                return Err(FormatError::Invalid(format!(
                    "profile {profile} does not apply to this input family"
                )))
            }
        };

    render_report(&report, names.as_deref(), format);
    let mut pass = report.all_pass();

    if oracle {
        if let Some(d) = &structured {
            if d.s_set().len() <= 12 && d.zero().is_some() {
                let rel = RelationCache::new(d);
                match filters::enumerate_filters(d, &rel) {
                    Ok(listed) => {
                        let listed: Vec<Vec<usize>> =
                            listed.into_iter().map(|f| f.members).collect();
                        let brute = filters::brute_force_filters(d, &rel);
                        let agree = listed == brute;
                        println!(
                            "oracle filter cross-check: {} ({} filters)",
                            verdict(agree),
                            brute.len()
                        );
                        pass = pass && agree;
                    }
                    Err(e) => println!("oracle filter cross-check skipped: {e}"),
                }
                let seq = RelationCache::new_sequential(d);
                let agree = seq == rel;
                println!("oracle relation cross-check: {}", verdict(agree));
                pass = pass && agree;
            } else {
                println!("oracle cross-checks skipped: S too large or no zero");
            }
        }
    }

    Ok(pass)
}

fn cmd_dualize(path: &Path, out: &Path) -> Result<bool, FormatError> {
    let (_, value) = load(path)?;
    match value {
        FileValue::RawBundle { .. } | FileValue::RawRingoidBundle { .. } => {
            let (bundle, ringoid) = format::to_bundle(value)?;
            let st = duality::section_structure_of(&bundle, ringoid.as_ref());
            format::write_file(out, &format::structured_to_file(&st.data, "sections"))?;
            println!(
                "wrote section structure: {} elements, |S| = {}, |Z| = {}",
                st.data.size(),
                st.data.s_set().len(),
                st.data.z_set().len()
            );
            Ok(true)
        }
        FileValue::Morphism(_) | FileValue::Pierce(_) => Err(FormatError::Invalid(
            "dualize expects a structure or bundle file, not a morphism".into(),
        )),
        other => {
            let d = format::to_structured(other)?;
            let rel = RelationCache::new(&d);
            match ultrafilter_bundle::build_bundle(&d, &rel) {
                Ok(ub) => {
                    let file = match &ub.built {
                        BuiltBundle::Ringoid(rb) => format::ringoid_bundle_to_file(rb, "dual"),
                        BuiltBundle::Category(b) => format::bundle_to_file(b, "dual"),
                    };
                    format::write_file(out, &file)?;
                    println!(
                        "wrote dual bundle: {} base arrows, {} total arrows",
                        ub.bundle().base().size(),
                        ub.bundle().total().size()
                    );
                    Ok(true)
                }
                Err(e) => {
                    println!("profile gate refused: {e}");
                    Ok(false)
                }
            }
        }
    }
}

fn cmd_roundtrip(path: &Path, format_kind: OutputFormat) -> Result<bool, FormatError> {
    let (_, value) = load(path)?;
    match value {
        FileValue::RawBundle { .. } | FileValue::RawRingoidBundle { .. } => {
            let (bundle, ringoid) = format::to_bundle(value)?;
            match duality::epsilon(&bundle, ringoid.as_ref()) {
                Err(e) => {
                    println!("round trip refused: {e}");
                    Ok(false)
                }
                Ok(eps) => {
                    let morphism_ok = duality::validate_pierce_morphism(&eps.pierce).all_pass();
                    let criterion = duality::epsilon_matches_equivalence(&eps, &bundle);
                    let pass = eps.groupoid_iso && eps.bundle_iso && morphism_ok && criterion;
                    if format_kind == OutputFormat::Human {
                        println!("evaluation isomorphism (base arrow -> section ultrafilter):");
                        for g in 0..bundle.base().size() {
                            let u = eps.pierce.phi.map[g].unwrap();
                            println!(
                                "  {} -> {}",
                                bundle.base().name(g),
                                eps.dual.ug.groupoid.name(u)
                            );
                        }
                    }
                    println!(
                        "roundtrip epsilon: groupoid iso {}, bundle iso {}, laws {}, evaluation criterion {}",
                        verdict(eps.groupoid_iso),
                        verdict(eps.bundle_iso),
                        verdict(morphism_ok),
                        verdict(criterion)
                    );
                    Ok(pass)
                }
            }
        }
        FileValue::Morphism(_) | FileValue::Pierce(_) => Err(FormatError::Invalid(
            "roundtrip expects a structure or bundle file, not a morphism".into(),
        )),
        other => {
            let d = format::to_structured(other)?;
            let rel = RelationCache::new(&d);
            match duality::eta(&d, &rel) {
                Err(e) => {
                    println!("round trip refused: {e}");
                    Ok(false)
                }
                Ok(result) => {
                    let report = duality::validate_steinberg_morphism(&result.morphism);
                    let pass = result.injective && result.surjective && report.all_pass();
                    if format_kind == OutputFormat::Human {
                        println!("representation isomorphism (element -> section):");
                        for a in 0..d.size() {
                            let i = result.morphism.map[a];
                            println!("  {} -> {}", d.name(a), result.sections.data.name(i));
                        }
                    }
                    println!(
                        "roundtrip eta: injective {}, surjective {}, morphism laws {}",
                        verdict(result.injective),
                        verdict(result.surjective),
                        verdict(report.all_pass())
                    );
                    Ok(pass)
                }
            }
        }
    }
}

fn print_morphism_report(label: &str, report: &duality::MorphismReport) {
    println!("{label}: {}", verdict(report.all_pass()));
    for c in &report.checks {
        let w = c
            .witness
            .as_ref()
            .map(|w| format!(" witness {w:?}"))
            .unwrap_or_default();
        println!("  {} {}{}", if c.pass { "pass" } else { "FAIL" }, c.law, w);
    }
}

fn cmd_apply_functor(
    path: &Path,
    out: Option<&Path>,
    _format: OutputFormat,
) -> Result<bool, FormatError> {
    let (_, value) = load(path)?;
    match value {
        FileValue::Morphism(m) => {
            let report = duality::validate_steinberg_morphism(&m);
            print_morphism_report("morphism laws", &report);
            if !report.all_pass() {
                return Ok(false);
            }
            let induced =
                duality::functor_u(&m).map_err(|e| FormatError::Invalid(e.to_string()))?;
            let pierce_report = duality::validate_pierce_morphism(&induced.pierce);
            print_morphism_report("induced bundle morphism laws", &pierce_report);
            let naturality =
                duality::check_naturality(&m).map_err(|e| FormatError::Invalid(e.to_string()))?;
            println!("naturality: {}", verdict(naturality.all_pass()));
            if let Some(out) = out {
                format::write_file(out, &format::pierce_to_file(&induced.pierce, "induced"))?;
                println!("wrote pierce morphism to {}", out.display());
            }
            Ok(pierce_report.all_pass() && naturality.all_pass())
        }
        FileValue::Pierce(p) => {
            let report = duality::validate_pierce_morphism(&p);
            print_morphism_report("pierce morphism laws", &report);
            if !report.all_pass() {
                return Ok(false);
            }
            let m = duality::functor_s(&p).map_err(|e| FormatError::Invalid(e.to_string()))?;
            let m_report = duality::validate_steinberg_morphism(&m);
            print_morphism_report("section morphism laws", &m_report);
            let naturality = duality::check_naturality_pierce(&p)
                .map_err(|e| FormatError::Invalid(e.to_string()))?;
            println!("naturality: {}", verdict(naturality.all_pass()));
            if let Some(out) = out {
                format::write_file(out, &format::morphism_to_file(&m, "sections"))?;
                println!("wrote section morphism to {}", out.display());
            }
            Ok(m_report.all_pass() && naturality.all_pass())
        }
        _ => Err(FormatError::Invalid("apply-functor expects a morphism file".into())),
    }
}

fn cmd_example(name: Option<&str>, out: Option<&Path>, list: bool) -> Result<bool, FormatError> {
    if list || name.is_none() {
        for spec in fixtures::registry() {
            println!(
                "{:14} {} (expected profile: {})",
                spec.name, spec.parameters, spec.expected_profile
            );
        }
        for (name, what) in fixtures::morphism_registry() {
            println!("{name:14} {what} (morphism)");
        }
        return Ok(true);
    }
    let name = name.unwrap();
    let value =
        fixtures::build_fixture(name).map_err(|e| FormatError::Invalid(e.to_string()))?;
    let file = match &value {
        fixtures::FixtureValue::Structured(d) => format::structured_to_file(d, name),
        fixtures::FixtureValue::QuasiCartan(q) => format::quasi_cartan_to_file(q, name),
        fixtures::FixtureValue::RingoidBundle(rb) => format::ringoid_bundle_to_file(rb, name),
        fixtures::FixtureValue::Morphism(m) => format::morphism_to_file(m, name),
    };
    match out {
        Some(path) => {
            format::write_file(path, &file)?;
            println!("wrote {name} to {}", path.display());
        }
        None => print!("{}", format::emit(&file)),
    }
    Ok(true)
}

