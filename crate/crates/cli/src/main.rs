//! `locsem`: check, transform and enumerate finite localisable semigroups
//! and transcription categories stored in the `uas`/`ucat` text formats.
//!
//! Exit codes are the machine contract: 0 when every requested check passed
//! (or an enumeration/search completed with output), 1 when a checked
//! property failed (a witness is printed), 2 for usage, parse or input
//! errors.

use clap::{Parser, Subcommand, ValueEnum};
use locsem_core::axioms::{self, AxiomId, AxiomReport};
use locsem_core::category::{self, TranscriptionCategory};
use locsem_core::classify::{classify, PredicateStatus};
use locsem_core::enumerate::{self, PredicateId, SearchSpec, TargetClass};
use locsem_core::format::{self, FormatError, UasDocument};
use locsem_core::functor::{
    pseudoproduct_semigroup, roundtrip_category, roundtrip_semigroup, trace_category,
    RoundtripReport,
};
use locsem_core::relations::{self, CongruenceTag};
use locsem_core::reps;
use locsem_core::semigroup::FiniteUnarySemigroup;
use locsem_core::starloc;
use locsem_core::Error;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "locsem", version, about = "Finite localisable semigroup toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this path instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RelationsKind {
    Mu,
    Orders,
    Greens,
    Congruences,
}

#[derive(Subcommand)]
enum Command {
    /// Check a document against a named class of structures.
    Check {
        /// One of: semigroup, band, left-localisable, right-localisable,
        /// localisable, left-ehresmann, right-ehresmann, ehresmann,
        /// restriction, star-localisable; or for ucat documents: category,
        /// transcription, groupoid.
        #[arg(long)]
        class: String,
        file: PathBuf,
    },
    /// Derive the transcription category of a localisable semigroup.
    DeriveCategory { file: PathBuf },
    /// Derive the pseudoproduct semigroup of a transcription category.
    DeriveSemigroup { file: PathBuf },
    /// Re-run the double construction and compare all tables literally.
    Roundtrip { file: PathBuf },
    /// Emit every structure of a class at one order, up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        class: String,
        /// Worker count (0 = default).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Print one canonical hex digest per instance instead of documents.
        #[arg(long)]
        digests: bool,
    },
    /// Report every class predicate with witnesses.
    Classify { file: PathBuf },
    /// Relational structure of a semigroup.
    Relations {
        #[arg(long, value_enum, default_value_t = RelationsKind::Greens)]
        which: RelationsKind,
        file: PathBuf,
    },
    /// Transformation representations on the projection band.
    Reps { file: PathBuf },
    /// Search for a structure with one property and without another.
    Counterexample {
        #[arg(long)]
        has: String,
        #[arg(long)]
        lacks: String,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
    },
}

/// A finished report: human text, machine mirror, exit code.
struct Report {
    text: String,
    json: Value,
    code: u8,
}

impl Report {
    fn pass(text: String, json: Value) -> Report {
        Report {
            text,
            json,
            code: 0,
        }
    }

    fn fail(text: String, json: Value) -> Report {
        Report {
            text,
            json,
            code: 1,
        }
    }
}

/// Usage or input errors (exit 2), printed to stderr.
struct Usage(String);

fn names_tuple(names: &[String], witness: &[usize]) -> String {
    let parts: Vec<&str> = witness.iter().map(|&x| names[x].as_str()).collect();
    format!("({})", parts.join(","))
}

fn witness_json(names: &[String], witness: &[usize]) -> Value {
    Value::Array(
        witness
            .iter()
            .map(|&x| Value::String(names[x].clone()))
            .collect(),
    )
}

/// Classifies a core error as a property failure (with a rendered witness)
/// or an input/usage problem.
fn error_report(err: &Error, names: &[String], context: &str) -> Result<Report, Usage> {
    let failure = |axiom: Option<AxiomId>, witness: &[usize], label: &str| {
        let line = match axiom {
            Some(a) => format!("{a} at {}", names_tuple(names, witness)),
            None => format!("{label} at {}", names_tuple(names, witness)),
        };
        Ok(Report::fail(
            format!("fail: {context}: {line}\n"),
            json!({
                "command": context,
                "pass": false,
                "axiom": axiom.map(|a| a.to_string()),
                "witness": witness_json(names, witness),
            }),
        ))
    };
    match err {
        Error::NonAssociative { x, y, z } => failure(None, &[*x, *y, *z], "associativity"),
        Error::AxiomViolation { axiom, witness }
        | Error::NotLocalisable { axiom, witness }
        | Error::StarAxiomsFail { axiom, witness } => failure(Some(*axiom), witness, ""),
        Error::DomainMismatch { x, y, defined } => {
            let what = if *defined { "defined" } else { "undefined" };
            Ok(Report::fail(
                format!(
                    "fail: {context}: composition {what} at {} though x- {} y+\n",
                    names_tuple(names, &[*x, *y]),
                    if *defined { "differs from" } else { "equals" }
                ),
                json!({
                    "command": context,
                    "pass": false,
                    "domain-mismatch": witness_json(names, &[*x, *y]),
                    "defined": defined,
                }),
            ))
        }
        other => Err(Usage(other.to_string())),
    }
}

fn read_document(path: &Path) -> Result<UasDocument, Usage> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?;
    format::parse(&text).map_err(|e| match e {
        FormatError::Parse { .. } | FormatError::VersionUnsupported { .. } => {
            Usage(format!("{}: {e}", path.display()))
        }
    })
}

fn semigroup_document(path: &Path) -> Result<(FiniteUnarySemigroup, Vec<String>), DocOutcome> {
    match read_document(path) {
        Ok(UasDocument::Semigroup(raw)) => {
            let names = raw.names.clone();
            match raw.build() {
                Ok(s) => Ok((s, names)),
                Err(e) => Err(DocOutcome::Invalid(e, names)),
            }
        }
        Ok(UasDocument::Category(_)) => Err(DocOutcome::Usage(Usage(format!(
            "{}: expected a uas document",
            path.display()
        )))),
        Err(u) => Err(DocOutcome::Usage(u)),
    }
}

enum DocOutcome {
    Invalid(Error, Vec<String>),
    Usage(Usage),
}

fn load_semigroup(path: &Path, context: &str) -> Result<(FiniteUnarySemigroup, Vec<String>), Result<Report, Usage>> {
    semigroup_document(path).map_err(|outcome| match outcome {
        DocOutcome::Invalid(e, names) => error_report(&e, &names, context),
        DocOutcome::Usage(u) => Err(u),
    })
}

fn suite_for(class: &str) -> Option<&'static [AxiomId]> {
    Some(match class {
        "left-localisable" => axioms::LEFT_LOCALISABLE,
        "right-localisable" => axioms::RIGHT_LOCALISABLE,
        "localisable" => axioms::LOCALISABLE,
        "left-ehresmann" => axioms::LEFT_EHRESMANN,
        "right-ehresmann" => axioms::RIGHT_EHRESMANN,
        "ehresmann" => axioms::EHRESMANN,
        "restriction" => axioms::RESTRICTION,
        "star-localisable" => axioms::STAR_LOCALISABLE,
        _ => return None,
    })
}

fn check_command(class: &str, file: &Path) -> Result<Report, Usage> {
    let pass = |class: &str| {
        Report::pass(
            format!("pass: {class}\n"),
            json!({"command": "check", "class": class, "pass": true}),
        )
    };
    match read_document(file)? {
        UasDocument::Semigroup(raw) => {
            let names = raw.names.clone();
            let s = match raw.build() {
                Ok(s) => s,
                Err(e) => return error_report(&e, &names, &format!("check {class}")),
            };
            match class {
                "semigroup" => Ok(pass(class)),
                "band" => match (0..s.order()).find(|&x| s.mul(x, x) != x) {
                    None => Ok(pass(class)),
                    Some(x) => Ok(Report::fail(
                        format!(
                            "fail: check band: idempotency at {}\n",
                            names_tuple(&names, &[x])
                        ),
                        json!({"command": "check", "class": "band", "pass": false,
                               "witness": witness_json(&names, &[x])}),
                    )),
                },
                _ => {
                    let suite = suite_for(class)
                        .ok_or_else(|| Usage(format!("unknown class `{class}`")))?;
                    match axioms::first_failure(&s, suite) {
                        Ok(None) => Ok(pass(class)),
                        Ok(Some((axiom, witness))) => Ok(Report::fail(
                            format!(
                                "fail: check {class}: {axiom} at {}\n",
                                names_tuple(&names, &witness)
                            ),
                            json!({"command": "check", "class": class, "pass": false,
                                   "axiom": axiom.to_string(),
                                   "witness": witness_json(&names, &witness)}),
                        )),
                        Err(e) => Err(Usage(format!("class `{class}`: {e}"))),
                    }
                }
            }
        }
        UasDocument::Category(tables) => {
            let names = tables.names.clone();
            let validate = TranscriptionCategory::validate(tables.clone());
            match class {
                "category" => {
                    let reports: Vec<AxiomReport> = category::category_reports(&tables)
                        .map_err(|e| Usage(e.to_string()))?;
                    match reports.into_iter().find(|r| !r.holds) {
                        None => Ok(pass(class)),
                        Some(r) => Ok(Report::fail(
                            format!(
                                "fail: check category: {} at {}\n",
                                r.axiom,
                                names_tuple(&names, r.witness.as_ref().unwrap())
                            ),
                            json!({"command": "check", "class": class, "pass": false,
                                   "axiom": r.axiom.to_string(),
                                   "witness": witness_json(&names, r.witness.as_ref().unwrap())}),
                        )),
                    }
                }
                "transcription" => match validate {
                    Ok(_) => Ok(pass(class)),
                    Err(e) => error_report(&e, &names, "check transcription"),
                },
                "groupoid" => match validate {
                    Ok(c) => match c.inverse_map() {
                        Ok(_) => Ok(pass(class)),
                        Err(arrow) => Ok(Report::fail(
                            format!(
                                "fail: check groupoid: no inverse for {}\n",
                                names_tuple(&names, &[arrow])
                            ),
                            json!({"command": "check", "class": class, "pass": false,
                                   "witness": witness_json(&names, &[arrow])}),
                        )),
                    },
                    Err(e) => error_report(&e, &names, "check groupoid"),
                },
                _ => Err(Usage(format!(
                    "class `{class}` does not apply to ucat documents"
                ))),
            }
        }
    }
}

fn derive_category_command(file: &Path) -> Result<Report, Usage> {
    let (s, names) = match load_semigroup(file, "derive-category") {
        Ok(pair) => pair,
        Err(outcome) => return outcome,
    };
    match trace_category(&s) {
        Ok(c) => {
            let doc = format::render_category(&c);
            Ok(Report::pass(
                doc.clone(),
                json!({"command": "derive-category", "pass": true, "document": doc}),
            ))
        }
        Err(e) => error_report(&e, &names, "derive-category"),
    }
}

fn derive_semigroup_command(file: &Path) -> Result<Report, Usage> {
    match read_document(file)? {
        UasDocument::Category(tables) => {
            let names = tables.names.clone();
            match TranscriptionCategory::validate(tables) {
                Ok(c) => {
                    let doc = format::render_semigroup(&pseudoproduct_semigroup(&c));
                    Ok(Report::pass(
                        doc.clone(),
                        json!({"command": "derive-semigroup", "pass": true, "document": doc}),
                    ))
                }
                Err(e) => error_report(&e, &names, "derive-semigroup"),
            }
        }
        UasDocument::Semigroup(_) => Err(Usage(format!(
            "{}: expected a ucat document",
            file.display()
        ))),
    }
}

fn roundtrip_report(report: RoundtripReport, names: &[String], kind: &str) -> Report {
    if report.tables_identical() {
        Report::pass(
            "tables identical\n".into(),
            json!({"command": "roundtrip", "kind": kind, "pass": true, "diffs": []}),
        )
    } else {
        let mut text = String::from("fail: roundtrip: tables differ\n");
        let mut diffs = Vec::new();
        for d in &report.diffs {
            let cell = names_tuple(names, &d.index);
            let show = |v: &Option<usize>| {
                v.map(|x| names[x].clone()).unwrap_or_else(|| ".".into())
            };
            let _ = writeln!(
                text,
                "  {}{} original {} recomputed {}",
                d.table,
                cell,
                show(&d.left),
                show(&d.right)
            );
            diffs.push(json!({
                "table": d.table,
                "cell": witness_json(names, &d.index),
                "original": d.left.map(|x| names[x].clone()),
                "recomputed": d.right.map(|x| names[x].clone()),
            }));
        }
        Report::fail(
            text,
            json!({"command": "roundtrip", "kind": kind, "pass": false, "diffs": diffs}),
        )
    }
}

fn roundtrip_command(file: &Path) -> Result<Report, Usage> {
    match read_document(file)? {
        UasDocument::Semigroup(raw) => {
            let names = raw.names.clone();
            let s = match raw.build() {
                Ok(s) => s,
                Err(e) => return error_report(&e, &names, "roundtrip"),
            };
            match roundtrip_semigroup(&s) {
                Ok(report) => Ok(roundtrip_report(report, &names, "uas")),
                Err(e) => error_report(&e, &names, "roundtrip"),
            }
        }
        UasDocument::Category(tables) => {
            let names = tables.names.clone();
            match TranscriptionCategory::validate(tables) {
                Ok(c) => Ok(roundtrip_report(roundtrip_category(&c), &names, "ucat")),
                Err(e) => error_report(&e, &names, "roundtrip"),
            }
        }
    }
}

fn enumerate_command(order: usize, class: &str, jobs: usize, digests: bool) -> Result<Report, Usage> {
    let class = TargetClass::parse(class).ok_or_else(|| Usage(format!("unknown class `{class}`")))?;
    let spec = SearchSpec {
        order,
        class,
        up_to_isomorphism: true,
        jobs,
    };
    let found = enumerate::enumerate(&spec).map_err(|e| Usage(e.to_string()))?;
    let mut text = String::new();
    let mut docs = Vec::new();
    for s in &found {
        if digests {
            let _ = writeln!(text, "{}", enumerate::canonical_hex(s));
        } else {
            let doc = format::render_semigroup(s);
            if !text.is_empty() {
                text.push('\n');
            }
            text.push_str(&doc);
        }
        docs.push(if digests {
            Value::String(enumerate::canonical_hex(s))
        } else {
            Value::String(format::render_semigroup(s))
        });
    }
    let _ = writeln!(text, "# {} structures", found.len());
    Ok(Report::pass(
        text,
        json!({"command": "enumerate", "class": class.id(), "order": order,
               "count": found.len(), "instances": docs}),
    ))
}

fn classify_command(file: &Path) -> Result<Report, Usage> {
    let (s, names) = match load_semigroup(file, "classify") {
        Ok(pair) => pair,
        Err(outcome) => return outcome,
    };
    let report = classify(&s);
    let mut text = String::new();
    let mut entries = Vec::new();
    for (predicate, status) in &report.entries {
        let (line, value) = match status {
            PredicateStatus::Holds => ("yes".to_string(), json!({"holds": true})),
            PredicateStatus::NotApplicable => {
                ("not applicable".to_string(), json!({"holds": Value::Null}))
            }
            PredicateStatus::Fails { axiom, witness } => {
                let where_ = names_tuple(&names, witness);
                let line = match axiom {
                    Some(a) => format!("no ({a} at {where_})"),
                    None => format!("no (at {where_})"),
                };
                (
                    line,
                    json!({"holds": false,
                           "axiom": axiom.map(|a| a.to_string()),
                           "witness": witness_json(&names, witness)}),
                )
            }
        };
        let _ = writeln!(text, "{:<24} {line}", predicate.id());
        let mut obj = value;
        obj["predicate"] = Value::String(predicate.id().into());
        entries.push(obj);
    }
    let mut compatibility = Value::Null;
    if let Ok(outcome) = starloc::check_star_compatibility(&s) {
        let (line, value) = match outcome {
            None => ("yes".to_string(), json!({"holds": true})),
            Some(w) => {
                let x = &names[w.element];
                let sentence = match w.op {
                    locsem_core::UnaryOp::Plus => format!(
                        "{x}⁺ = {} but {x}{x}∗ = {}",
                        names[w.unary_value], names[w.product]
                    ),
                    _ => format!(
                        "{x}⁻ = {} but {x}∗{x} = {}",
                        names[w.unary_value], names[w.product]
                    ),
                };
                (
                    format!("no ({sentence})"),
                    json!({"holds": false, "witness": names[w.element],
                           "sentence": sentence}),
                )
            }
        };
        let _ = writeln!(text, "{:<24} {line}", "star-compatibility");
        compatibility = value;
    }
    Ok(Report::pass(
        text,
        json!({"command": "classify", "predicates": entries,
               "star-compatibility": compatibility}),
    ))
}

fn class_text(names: &[String], classes: &[Vec<usize>]) -> String {
    classes
        .iter()
        .map(|c| {
            let parts: Vec<&str> = c.iter().map(|&x| names[x].as_str()).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn class_json(names: &[String], classes: &[Vec<usize>]) -> Value {
    Value::Array(classes.iter().map(|c| witness_json(names, c)).collect())
}

fn pairs_text(names: &[String], rel: &locsem_core::BinaryRelation) -> String {
    let mut out = Vec::new();
    for (a, b) in rel.pairs() {
        if a != b {
            out.push(format!("({},{})", names[a], names[b]));
        }
    }
    if out.is_empty() {
        "none beyond reflexivity".into()
    } else {
        out.join(" ")
    }
}

fn relations_command(which: RelationsKind, file: &Path) -> Result<Report, Usage> {
    let (s, names) = match load_semigroup(file, "relations") {
        Ok(pair) => pair,
        Err(outcome) => return outcome,
    };
    let run = || -> Result<Report, Error> {
        match which {
            RelationsKind::Greens => {
                let classes = relations::swung_r_classes(&s)?;
                let leq = relations::swung_leq_r(&s)?;
                let mut text = String::new();
                let _ = writeln!(text, "~R classes: {}", class_text(&names, &classes));
                let _ = writeln!(text, "~<=R pairs: {}", pairs_text(&names, &leq));
                Ok(Report::pass(
                    text,
                    json!({"command": "relations", "which": "greens",
                           "classes": class_json(&names, &classes)}),
                ))
            }
            RelationsKind::Mu => {
                let mu = relations::mu_relation(&s)?;
                let fundamental = mu.is_identity();
                let congruence = mu.is_congruence(&s);
                let classes = mu.classes();
                let text = format!(
                    "mu classes: {}\nmu is a congruence here: {}\nfundamental: {}\n",
                    class_text(&names, &classes),
                    if congruence { "yes" } else { "no" },
                    if fundamental { "yes" } else { "no" },
                );
                Ok(Report::pass(
                    text,
                    json!({"command": "relations", "which": "mu",
                           "classes": class_json(&names, &classes),
                           "congruence": congruence, "fundamental": fundamental}),
                ))
            }
            RelationsKind::Orders => {
                let (natural, mitsch) = relations::natural_orders(&s)?;
                let text = format!(
                    "natural order pairs: {}\nmitsch order pairs: {}\n",
                    pairs_text(&names, &natural),
                    pairs_text(&names, &mitsch),
                );
                Ok(Report::pass(
                    text,
                    json!({"command": "relations", "which": "orders",
                           "natural": pairs_text(&names, &natural),
                           "mitsch": pairs_text(&names, &mitsch)}),
                ))
            }
            RelationsKind::Congruences => {
                let mut text = String::new();
                let mut counts = serde_json::Map::new();
                let mut partitions = Vec::new();
                for (label, tag) in [
                    ("semigroup", CongruenceTag::Semigroup),
                    ("pm", CongruenceTag::Pm),
                    ("projection-separating-pm", CongruenceTag::ProjectionSeparatingPm),
                ] {
                    let found = relations::congruences(&s, tag)?;
                    let _ = writeln!(text, "congruences ({label}): {}", found.len());
                    counts.insert(label.into(), json!(found.len()));
                    if tag == CongruenceTag::Pm {
                        for rel in &found {
                            let classes = rel.classes();
                            let _ = writeln!(text, "  {}", class_text(&names, &classes));
                            partitions.push(class_json(&names, &classes));
                        }
                    }
                }
                Ok(Report::pass(
                    text,
                    json!({"command": "relations", "which": "congruences",
                           "counts": counts, "pm-partitions": partitions}),
                ))
            }
        }
    };
    match run() {
        Ok(report) => Ok(report),
        Err(e) => error_report(&e, &names, "relations"),
    }
}

fn reps_command(file: &Path) -> Result<Report, Usage> {
    let (s, names) = match load_semigroup(file, "reps") {
        Ok(pair) => pair,
        Err(outcome) => return outcome,
    };
    let run = || -> Result<Report, Error> {
        let gammas = reps::gamma(&s)?;
        let deltas = reps::delta(&s)?;
        let omega = reps::omega_embedding(&s)?;
        let kernel = reps::kernel_of_gamma_delta(&s)?;
        let domain: Vec<&str> = gammas[0].domain.iter().map(|&p| names[p].as_str()).collect();
        let mut text = String::new();
        let _ = writeln!(text, "projections: {}", domain.join(" "));
        let show = |maps: &[reps::TransformationMap], text: &mut String, label: &str| {
            let _ = writeln!(text, "{label}:");
            for (el, map) in maps.iter().enumerate() {
                let images: Vec<&str> = map
                    .images
                    .iter()
                    .map(|&i| names[map.domain[i]].as_str())
                    .collect();
                let _ = writeln!(text, "  {}: {}", names[el], images.join(" "));
            }
        };
        show(&gammas, &mut text, "gamma (p -> (sp)+)");
        show(&deltas, &mut text, "delta (p -> (ps)-)");
        let _ = writeln!(
            text,
            "omega embedding: injective on {} projections",
            omega.band.order()
        );
        let _ = writeln!(
            text,
            "kernel classes: {}",
            class_text(&names, &kernel.classes())
        );
        let maps_json = |maps: &[reps::TransformationMap]| {
            Value::Array(
                maps.iter()
                    .enumerate()
                    .map(|(el, map)| {
                        json!({
                            "element": names[el],
                            "images": map.images.iter()
                                .map(|&i| names[map.domain[i]].clone())
                                .collect::<Vec<_>>(),
                        })
                    })
                    .collect(),
            )
        };
        Ok(Report::pass(
            text,
            json!({"command": "reps",
                   "projections": domain,
                   "gamma": maps_json(&gammas),
                   "delta": maps_json(&deltas),
                   "kernel": class_json(&names, &kernel.classes())}),
        ))
    };
    match run() {
        Ok(report) => Ok(report),
        Err(e) => error_report(&e, &names, "reps"),
    }
}

fn counterexample_command(has: &str, lacks: &str, max_order: usize) -> Result<Report, Usage> {
    let has_id =
        PredicateId::parse(has).ok_or_else(|| Usage(format!("unknown predicate `{has}`")))?;
    let lacks_id =
        PredicateId::parse(lacks).ok_or_else(|| Usage(format!("unknown predicate `{lacks}`")))?;
    match enumerate::find_counterexample(has_id, lacks_id, max_order) {
        Ok(Some(s)) => {
            let doc = format::render_semigroup(&s);
            Ok(Report::pass(
                doc.clone(),
                json!({"command": "counterexample", "found": true, "order": s.order(),
                       "document": doc}),
            ))
        }
        Ok(None) => Ok(Report::fail(
            format!("no instance with `{has}` and without `{lacks}` up to order {max_order}\n"),
            json!({"command": "counterexample", "found": false, "max-order": max_order}),
        )),
        Err(e) => Err(Usage(e.to_string())),
    }
}

fn run(cli: &Cli) -> Result<Report, Usage> {
    match &cli.command {
        Command::Check { class, file } => check_command(class, file),
        Command::DeriveCategory { file } => derive_category_command(file),
        Command::DeriveSemigroup { file } => derive_semigroup_command(file),
        Command::Roundtrip { file } => roundtrip_command(file),
        Command::Enumerate {
            order,
            class,
            jobs,
            digests,
        } => enumerate_command(*order, class, *jobs, *digests),
        Command::Classify { file } => classify_command(file),
        Command::Relations { which, file } => relations_command(*which, file),
        Command::Reps { file } => reps_command(file),
        Command::Counterexample {
            has,
            lacks,
            max_order,
        } => counterexample_command(has, lacks, *max_order),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let body = match cli.format {
                Format::Text => report.text,
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&report.json).unwrap()),
            };
            match &cli.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, body) {
                        eprintln!("cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{body}"),
            }
            ExitCode::from(report.code)
        }
        Err(Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
