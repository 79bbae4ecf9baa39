//! Command-line front end. Every subcommand loads one closure operator,
//! runs one computation and prints either canonical JSON or a short human
//! summary.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bergman::{
    augmented_bergman, bergman_complex, cone_bergman, independence_complex, layers, AugmentedFace,
};
use crate::closure::{ClosureOperator, ElementSet, InstanceFile, MatroidCheck};
use crate::complex::{format_face, ComplexStats, SimplicialComplex, VertexLabel};
use crate::decompose::{
    check_certificate, is_vertex_decomposable, matroid_vd_certificate, shelling_from_certificate,
    VdOutcome,
};
use crate::error::{Error, Result};
use crate::instances::builtin;
use crate::report::to_canonical_json;
use crate::shelling::{
    augmented_h_formula, find_shelling, flag_to_basis_default, shelling_report,
    theorem_equivalence_report, verify_shelling, FacetClass, SearchConstraint, SearchOutcome,
    ShellingOrder, DEFAULT_SEARCH_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "augbergman",
    version,
    about = "Bergman, independence and augmented Bergman complexes of closure operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an instance and report whether it is a matroid.
    Validate(Common),
    /// Statistics of the Bergman, coned Bergman, independence and augmented complexes.
    Complexes(Common),
    /// Facets of one complex.
    Facets(WithComplex),
    /// Check a facet order read from a file.
    ShellingVerify {
        #[command(flatten)]
        target: WithComplex,
        /// JSON file holding a facet list, a shelling order or a shelling report.
        #[arg(long)]
        order: PathBuf,
    },
    /// Search for a shelling order.
    ShellingFind {
        #[command(flatten)]
        target: WithComplex,
        #[arg(long, value_enum, default_value_t = ConstraintArg::None)]
        constraint: ConstraintArg,
    },
    /// Shelling of the augmented complex with maximal flags first and bases last.
    FlagToBasis(Common),
    /// Search for a vertex decomposition.
    Vd(WithComplex),
    /// Constructive vertex decomposition of an augmented complex of a matroid.
    VdMatroid {
        #[command(flatten)]
        common: Common,
        /// JSON list of flats forming an upper-set; defaults to all proper flats.
        #[arg(long)]
        upper_set: Option<PathBuf>,
    },
    /// f-vector and h-vector of one complex.
    Hvector(WithComplex),
    /// Compare the h-polynomial of the augmented complex with the sum over
    /// independent sets.
    Formula(Common),
    /// Decide the four equivalent shellability conditions.
    Equivalence(Common),
    /// Facets of the augmented complex split into flag, hybrid and independent layers.
    Layers(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Instance JSON file, or one of example-1-3, two-wedge, uniform:r,n, random:n,density.
    instance: String,
    /// Node expansions allowed to each search.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Seed for random instances.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args, Debug)]
struct WithComplex {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = ComplexKind::Augmented)]
    complex: ComplexKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ComplexKind {
    Bergman,
    Independence,
    Augmented,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConstraintArg {
    None,
    BasesFirst,
    FlagsFirst,
    BasesLast,
}

impl ConstraintArg {
    fn constraint(self) -> SearchConstraint {
        match self {
            ConstraintArg::None => SearchConstraint::none(),
            ConstraintArg::BasesFirst => SearchConstraint::class_first(FacetClass::Basis),
            ConstraintArg::FlagsFirst => SearchConstraint::class_first(FacetClass::MaximalFlag),
            ConstraintArg::BasesLast => SearchConstraint::class_last(FacetClass::Basis),
        }
    }
}

/// Text to print and the exit code.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            code: EXIT_OK,
        }
    }
}

/// Runs the command line `args` (program name first), printing to the
/// process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout(), &mut std::io::stderr())
}

/// Like [`run`], writing to the given streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(output) => {
            let _ = writeln!(out, "{}", output.text.trim_end());
            output.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::BudgetExhausted(_) => EXIT_BUDGET,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn load(common: &Common) -> Result<ClosureOperator> {
    if let Some(f) = builtin(&common.instance, common.seed) {
        return f;
    }
    let text = std::fs::read_to_string(&common.instance)
        .map_err(|e| Error::InvalidArgument(format!("cannot read `{}`: {e}", common.instance)))?;
    InstanceFile::from_json(&text)
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", common.instance)))?
        .to_operator()
}

fn build_complex(f: &ClosureOperator, kind: ComplexKind) -> Result<SimplicialComplex> {
    match kind {
        ComplexKind::Bergman => Ok(bergman_complex(f)),
        ComplexKind::Independence => independence_complex(f),
        ComplexKind::Augmented => augmented_bergman(f),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    to_canonical_json(value)
}

fn tuple<T: ToString>(values: &[T]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn stats_line(stats: &ComplexStats) -> String {
    format!("f={}, h={}", tuple(&stats.f_vector), tuple(&stats.h_vector))
}

fn show_facet(f: &ClosureOperator, kind: ComplexKind, facet: &[VertexLabel]) -> String {
    if kind == ComplexKind::Augmented {
        if let Ok(face) = AugmentedFace::from_labels(f, facet) {
            return face.display(f);
        }
    }
    format_face(facet)
}

fn describe_matroid_check(f: &ClosureOperator, check: &MatroidCheck) -> String {
    match check {
        MatroidCheck::Matroid => "matroid".into(),
        MatroidCheck::ExchangeViolation {
            first,
            second,
            element,
        } => format!(
            "not a matroid: exchange fails for {} and {} at {}",
            f.format_set(*first),
            f.format_set(*second),
            f.ground_set()[*element]
        ),
        MatroidCheck::ClosureMismatch { set } => format!(
            "not a matroid: {} is a flat of exactly one of the operator and the matroid of its independent sets",
            f.format_set(*set)
        ),
    }
}

fn names_of(f: &ClosureOperator, sets: &[ElementSet]) -> Vec<Vec<String>> {
    sets.iter().map(|s| f.names(*s)).collect()
}

fn execute(command: Command) -> Result<Output> {
    match command {
        Command::Validate(c) => validate(&c),
        Command::Complexes(c) => complexes(&c),
        Command::Facets(t) => facets(&t),
        Command::ShellingVerify { target, order } => shelling_verify(&target, &order),
        Command::ShellingFind { target, constraint } => shelling_find(&target, constraint),
        Command::FlagToBasis(c) => flag_to_basis(&c),
        Command::Vd(t) => vd(&t),
        Command::VdMatroid { common, upper_set } => vd_matroid(&common, upper_set.as_deref()),
        Command::Hvector(t) => hvector(&t),
        Command::Formula(c) => formula(&c),
        Command::Equivalence(c) => equivalence(&c),
        Command::Layers(c) => layers_command(&c),
    }
}

fn validate(c: &Common) -> Result<Output> {
    let f = load(c)?;
    let check = f.matroid_check()?;
    let report = json!({
        "valid": true,
        "ground_set": f.ground_set(),
        "flats": names_of(&f, f.flats()),
        "matroid": check.is_matroid(),
        "matroid_check": describe_matroid_check(&f, &check),
    });
    Ok(Output::ok(match c.format {
        Format::Json => json(&report),
        Format::Human => format!(
            "valid closure operator on {} elements with {} flats\n{}",
            f.len(),
            f.flats().len(),
            describe_matroid_check(&f, &check)
        ),
    }))
}

fn complexes(c: &Common) -> Result<Output> {
    let f = load(c)?;
    let cone = if f.bottom() == f.full() {
        Value::Null
    } else {
        serde_json::to_value(cone_bergman(&f)?.stats()?)?
    };
    let entries = [
        (
            "bergman",
            serde_json::to_value(bergman_complex(&f).stats()?)?,
        ),
        ("cone_bergman", cone),
        (
            "independence",
            serde_json::to_value(independence_complex(&f)?.stats()?)?,
        ),
        (
            "augmented",
            serde_json::to_value(augmented_bergman(&f)?.stats()?)?,
        ),
    ];
    Ok(Output::ok(match c.format {
        Format::Json => json(
            &entries
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect::<serde_json::Map<_, _>>(),
        ),
        Format::Human => entries
            .iter()
            .map(
                |(name, value)| match serde_json::from_value::<ComplexStats>(value.clone()) {
                    Ok(stats) => format!(
                        "{name}: dim={} pure={} {}",
                        stats.dimension,
                        stats.pure,
                        stats_line(&stats)
                    ),
                    Err(_) => format!("{name}: undefined"),
                },
            )
            .collect::<Vec<_>>()
            .join("\n"),
    }))
}

fn facets(t: &WithComplex) -> Result<Output> {
    let f = load(&t.common)?;
    let complex = build_complex(&f, t.complex)?;
    Ok(Output::ok(match t.common.format {
        Format::Json => json(&complex.to_document()),
        Format::Human => {
            let mut lines = vec![format!("{} facets", complex.facet_count())];
            lines.extend(
                complex
                    .facets()
                    .iter()
                    .map(|s| show_facet(&f, t.complex, s)),
            );
            lines.join("\n")
        }
    }))
}

/// Accepts a bare facet list, `{"facets": …}` or `{"order": …}`.
fn read_order(path: &std::path::Path) -> Result<ShellingOrder> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read `{}`: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    let list = match &value {
        Value::Array(_) => value.clone(),
        Value::Object(map) => map
            .get("order")
            .or_else(|| map.get("facets"))
            .cloned()
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "{}: expected an `order` or `facets` field",
                    path.display()
                ))
            })?,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "{}: expected a list of facets",
                path.display()
            )))
        }
    };
    let facets: Vec<Vec<VertexLabel>> = serde_json::from_value(list)
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    Ok(ShellingOrder::new(facets))
}

fn order_lines(
    f: &ClosureOperator,
    kind: ComplexKind,
    order: &[Vec<VertexLabel>],
    restrictions: &[Vec<VertexLabel>],
) -> Vec<String> {
    order
        .iter()
        .enumerate()
        .map(|(i, facet)| {
            let mut line = format!("{:>3}  {}", i + 1, show_facet(f, kind, facet));
            if let Some(r) = restrictions.get(i) {
                line.push_str(&format!("  R={}", format_face(r)));
            }
            line
        })
        .collect()
}

fn shelling_verify(t: &WithComplex, path: &std::path::Path) -> Result<Output> {
    let f = load(&t.common)?;
    let complex = build_complex(&f, t.complex)?;
    let order = read_order(path)?;
    let verdict = verify_shelling(&complex, &order)?;
    Ok(Output::ok(match t.common.format {
        Format::Json => json(&verdict),
        Format::Human => match verdict.failed_at {
            None => "valid shelling".to_string(),
            Some(i) => format!(
                "not a shelling: fails at position {i}\n{}",
                verdict.detail.unwrap_or_default()
            ),
        },
    }))
}

fn found_report(
    f: &ClosureOperator,
    kind: ComplexKind,
    complex: &SimplicialComplex,
    order: &ShellingOrder,
    format: Format,
) -> Result<String> {
    let report = shelling_report(complex, order)?;
    Ok(match format {
        Format::Json => {
            let mut value = serde_json::to_value(&report)?;
            value["status"] = json!("found");
            json(&value)
        }
        Format::Human => {
            let mut lines = vec![format!(
                "shelling of {} facets (verified: {}), h from restriction sets {}",
                report.order.len(),
                report.verified,
                tuple(&report.h_from_restrictions)
            )];
            lines.extend(order_lines(
                f,
                kind,
                &report.order,
                &report.restriction_sets,
            ));
            lines.join("\n")
        }
    })
}

fn exhausted(expansions: u64, format: Format) -> Output {
    Output {
        text: match format {
            Format::Json => json(&json!({"status": "budget_exhausted", "expansions": expansions})),
            Format::Human => format!("BUDGET_EXHAUSTED after {expansions} expansions"),
        },
        code: EXIT_BUDGET,
    }
}

fn shelling_find(t: &WithComplex, constraint: ConstraintArg) -> Result<Output> {
    let f = load(&t.common)?;
    let complex = build_complex(&f, t.complex)?;
    match find_shelling(&complex, &constraint.constraint(), t.common.budget)? {
        SearchOutcome::Found(order) => Ok(Output::ok(found_report(
            &f,
            t.complex,
            &complex,
            &order,
            t.common.format,
        )?)),
        SearchOutcome::NoShelling => Ok(Output::ok(match t.common.format {
            Format::Json => json(&json!({"status": "none"})),
            Format::Human => "NONE: no shelling order satisfies the constraint".to_string(),
        })),
        SearchOutcome::BudgetExhausted { expansions } => Ok(exhausted(expansions, t.common.format)),
    }
}

fn flag_to_basis(c: &Common) -> Result<Output> {
    let f = load(c)?;
    match flag_to_basis_default(&f, c.budget) {
        Ok(order) => {
            let complex = augmented_bergman(&f)?;
            Ok(Output::ok(found_report(
                &f,
                ComplexKind::Augmented,
                &complex,
                &order,
                c.format,
            )?))
        }
        Err(Error::ContractionNotShellable(flat)) => Ok(Output::ok(match c.format {
            Format::Json => json(&json!({"status": "contraction_not_shellable", "flat": flat})),
            Format::Human => {
                format!("the Bergman complex of the contraction by {flat} is not shellable")
            }
        })),
        Err(e) => Err(e),
    }
}

fn vd(t: &WithComplex) -> Result<Output> {
    let f = load(&t.common)?;
    let complex = build_complex(&f, t.complex)?;
    match is_vertex_decomposable(&complex, t.common.budget)? {
        VdOutcome::Decomposable(cert) => {
            let check = check_certificate(&complex, &cert);
            Ok(Output::ok(match t.common.format {
                Format::Json => json(&json!({
                    "status": "decomposable",
                    "certificate": cert,
                    "check": check,
                })),
                Format::Human => format!(
                    "vertex decomposable; root {}, certificate valid: {}",
                    cert.root_vertex()
                        .map_or("(simplex)".to_string(), ToString::to_string),
                    check.valid
                ),
            }))
        }
        VdOutcome::NotDecomposable => Ok(Output::ok(match t.common.format {
            Format::Json => json(&json!({"status": "not_vd"})),
            Format::Human => "NOT_VD: no vertex decomposition exists".to_string(),
        })),
        VdOutcome::BudgetExhausted { expansions } => Ok(exhausted(expansions, t.common.format)),
    }
}

fn read_upper_set(f: &ClosureOperator, path: &std::path::Path) -> Result<Vec<ElementSet>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read `{}`: {e}", path.display())))?;
    let lists: Vec<Vec<String>> = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    lists.iter().map(|names| f.set_of(names)).collect()
}

fn vd_matroid(c: &Common, upper_set: Option<&std::path::Path>) -> Result<Output> {
    let m = load(c)?;
    let family = match upper_set {
        Some(path) => read_upper_set(&m, path)?,
        None => m.proper_flats(),
    };
    let cert = matroid_vd_certificate(&m, &family, c.budget)?;
    let complex = crate::bergman::augmented_upperset(&m, &family)?;
    let check = check_certificate(&complex, &cert);
    let shelling_verified = shelling_from_certificate(&complex, &cert).is_ok();
    Ok(Output::ok(match c.format {
        Format::Json => json(&json!({
            "certificate": cert,
            "check": check,
            "shelling_verified": shelling_verified,
            "upper_set": names_of(&m, &family),
        })),
        Format::Human => format!(
            "certificate for {} facets; root {}; valid: {}; induced shelling verified: {}",
            complex.facet_count(),
            cert.root_vertex()
                .map_or("(simplex)".to_string(), ToString::to_string),
            check.valid,
            shelling_verified
        ),
    }))
}

fn hvector(t: &WithComplex) -> Result<Output> {
    let f = load(&t.common)?;
    let stats = build_complex(&f, t.complex)?.stats()?;
    Ok(Output::ok(match t.common.format {
        Format::Json => json(&stats),
        Format::Human => stats_line(&stats),
    }))
}

fn polynomial(coefficients: &[i64]) -> String {
    let mut out = String::new();
    for (i, c) in coefficients.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let sign = if *c < 0 { "-" } else { "+" };
        let magnitude = c.unsigned_abs();
        let term = match (i, magnitude) {
            (0, m) => m.to_string(),
            (1, 1) => "t".into(),
            (1, m) => format!("{m}t"),
            (k, 1) => format!("t^{k}"),
            (k, m) => format!("{m}t^{k}"),
        };
        if out.is_empty() {
            if *c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn formula(c: &Common) -> Result<Output> {
    let f = load(c)?;
    let report = augmented_h_formula(&f)?;
    Ok(Output::ok(match c.format {
        Format::Json => json(&report),
        Format::Human => format!(
            "sum over independent sets: {}\nh-polynomial:              {}\n{}",
            polynomial(&report.formula),
            polynomial(&report.actual),
            if report.agree {
                "the two sides agree".to_string()
            } else {
                format!(
                    "MISMATCH (augmented complex pure: {}, contractions pure: {})",
                    report.augmented_pure, report.contractions_pure
                )
            }
        ),
    }))
}

fn verdict(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "UNKNOWN",
    }
}

fn equivalence(c: &Common) -> Result<Output> {
    let f = load(c)?;
    let report = theorem_equivalence_report(&f, c.budget)?;
    let code = if report.all_agree.is_none() {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    let text = match c.format {
        Format::Json => json(&report),
        Format::Human => {
            let mut lines = vec![
                format!(
                    "(i)   Bergman complex shellable:              {}",
                    verdict(report.bergman_shellable)
                ),
                format!(
                    "(ii)  every contraction's Bergman shellable:  {}",
                    verdict(report.contractions_shellable)
                ),
                format!(
                    "(iii) flags-first, bases-last shelling:       {}",
                    verdict(report.flags_first_bases_last)
                ),
                format!(
                    "(iv)  augmented complex shellable:            {}",
                    verdict(report.augmented_shellable)
                ),
            ];
            if let Some(flat) = &report.witness_flat {
                lines.push(format!(
                    "non-shellable contraction by {{{}}}",
                    flat.join(",")
                ));
            }
            lines.push(match report.all_agree {
                Some(true) => "all four agree".to_string(),
                Some(false) => "DISAGREEMENT".to_string(),
                None => "some verdicts unknown; agreement not checked".to_string(),
            });
            lines.join("\n")
        }
    };
    Ok(Output { text, code })
}

fn layers_command(c: &Common) -> Result<Output> {
    let f = load(c)?;
    let layers = layers(&f)?;
    Ok(Output::ok(match c.format {
        Format::Json => json(&crate::bergman::LayersDocument { layers }),
        Format::Human => {
            let mut lines = Vec::new();
            for (name, facets) in [
                ("flag", &layers.flag),
                ("hybrid", &layers.hybrid),
                ("independent", &layers.independent),
            ] {
                lines.push(format!("{name}: {} facets", facets.len()));
                lines.extend(
                    facets
                        .iter()
                        .map(|s| format!("  {}", show_facet(&f, ComplexKind::Augmented, s))),
                );
            }
            lines.join("\n")
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(
            std::iter::once("augbergman").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn hvector_human() {
        let (code, out, _) = run_capture(&["hvector", "example-1-3"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "f=(1,17,50,32), h=(1,14,19,-2)");
    }

    #[test]
    fn independence_search_is_none() {
        let (code, out, _) = run_capture(&[
            "shelling-find",
            "example-1-3",
            "--complex=independence",
            "--format=json",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["status"], "none");
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_capture(&["frobnicate"]).0, 1);
        assert_eq!(run_capture(&["hvector", "no-such-file.json"]).0, 1);
        assert_eq!(run_capture(&["hvector", "example-1-3", "--budget=0"]).0, 1);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn tiny_budget_exits_two() {
        let (code, out, _) = run_capture(&[
            "shelling-find",
            "example-1-3",
            "--budget=1",
            "--format=json",
        ]);
        assert_eq!(code, 2);
        assert!(out.contains("budget_exhausted"));
    }

    #[test]
    fn polynomial_text() {
        assert_eq!(polynomial(&[1, 14, 19, -2]), "1 + 14t + 19t^2 - 2t^3");
        assert_eq!(polynomial(&[0, -1]), "-t");
        assert_eq!(polynomial(&[]), "0");
    }
}
