use std::fmt::Write as _;
use std::path::Path;

use capacity_core::axioms::{
    check_axioms, compare_extensions, AxiomCheckConfig, AxiomId, AxiomReport, Witness,
};
use capacity_core::integrals::{Aggregation, Extension, ScoreVector};
use capacity_core::interaction::{classify, interaction_index, InteractionReport};
use capacity_core::model::{parse_acts, ModelFile};
use capacity_core::set_function::{ordinal_mobius, SetFunctionFile};
use capacity_core::{CapacityF64, MobiusF64, SetFunctionF64, Subset};
use serde::Serialize;
use serde_json::json;

use crate::numfmt::{g12, join, round_json};
use crate::{CliError, Format, TransformKind};

type Output = Result<String, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn in_file(path: &Path) -> impl Fn(capacity_core::Error) -> CliError + '_ {
    move |e| CliError::Domain(format!("{}: {e}", path.display()))
}

fn load_capacity(path: &Path) -> Result<CapacityF64, CliError> {
    CapacityF64::from_json_str(&read(path)?, false).map_err(in_file(path))
}

fn to_json<S: Serialize>(value: &S) -> String {
    let v = serde_json::to_value(value).expect("serializable output");
    format!("{}\n", round_json(v))
}

fn table(n: usize, values: &[f64], format: Format) -> String {
    match format {
        Format::Json => to_json(&SetFunctionFile::dense(n, values)),
        Format::Text => {
            let mut out = String::new();
            for (a, v) in Subset::all(n).zip(values) {
                let _ = writeln!(out, "{a}\t{}", g12(*v));
            }
            out
        }
    }
}

pub fn transform(kind: TransformKind, input: &Path, format: Format) -> Output {
    let text = read(input)?;
    let (n, values) = match kind {
        TransformKind::Mobius => {
            let f = SetFunctionF64::from_json_str(&text).map_err(in_file(input))?;
            (f.n(), f.mobius().coefficients().to_vec())
        }
        TransformKind::Zeta => {
            let m = MobiusF64::from_json_str(&text).map_err(in_file(input))?;
            (m.n(), m.zeta().into_values())
        }
        TransformKind::Comobius => {
            let f = SetFunctionF64::from_json_str(&text).map_err(in_file(input))?;
            (f.n(), f.co_mobius().coefficients().to_vec())
        }
        TransformKind::Ordinal => {
            let f = SetFunctionF64::from_json_str(&text).map_err(in_file(input))?;
            (f.n(), ordinal_mobius(&f).coefficients().to_vec())
        }
        TransformKind::Conjugate => {
            let mu = CapacityF64::from_json_str(&text, false).map_err(in_file(input))?;
            (mu.n(), mu.conjugate().into_set_function().into_values())
        }
    };
    Ok(table(n, &values, format))
}

fn aggregation(
    integral: &str,
    capacity: &Path,
    capacity2: Option<&Path>,
) -> Result<Aggregation<f64>, CliError> {
    let extension: Extension = integral
        .parse()
        .map_err(|e: capacity_core::Error| CliError::Usage(e.to_string()))?;
    let mu = load_capacity(capacity)?;
    match (extension, capacity2) {
        (Extension::Cpt, Some(p)) => Ok(Aggregation::cpt(mu, load_capacity(p)?)?),
        (Extension::Cpt, None) => Err(CliError::Usage("--integral cpt needs --capacity2".into())),
        (_, Some(_)) => Err(CliError::Usage(format!(
            "--capacity2 only applies to cpt, not {extension}"
        ))),
        (e, None) => Ok(Aggregation::new(e, mu)?),
    }
}

pub fn eval(
    integral: &str,
    capacity: &Path,
    capacity2: Option<&Path>,
    scores: &str,
    format: Format,
) -> Output {
    let agg = aggregation(integral, capacity, capacity2)?;
    let t = ScoreVector::<f64>::parse_csv(scores)
        .map_err(|e| CliError::Usage(format!("--scores: {e}")))?;
    let value = agg.evaluate(&t)?;
    Ok(match format {
        Format::Text => format!("{}\n", g12(value)),
        Format::Json => to_json(&json!({
            "integral": agg.extension().as_str(),
            "scores": &t[..],
            "value": value,
        })),
    })
}

pub fn interaction(capacity: &Path, coalition: Option<&str>, tol: f64, format: Format) -> Output {
    if tol.is_nan() || tol < 0.0 {
        return Err(CliError::Usage("--tol must be nonnegative".into()));
    }
    let mu = load_capacity(capacity)?;
    if let Some(key) = coalition {
        let a = Subset::parse_key(key, mu.n())
            .map_err(|e| CliError::Usage(format!("--coalition: {e}")))?;
        let value = interaction_index(&mu, a)?;
        let kind = classify(value, tol);
        return Ok(match format {
            Format::Text => format!("{} {kind}\n", g12(value)),
            Format::Json => to_json(&json!({"coalition": a.key(), "value": value, "kind": kind})),
        });
    }
    let report = InteractionReport::new(&mu, tol);
    Ok(match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut out = String::from("shapley\n");
            for (i, phi) in report.shapley.iter().enumerate() {
                let _ = writeln!(out, "  {}\t{}", i + 1, g12(*phi));
            }
            if !report.pairs.is_empty() {
                out.push_str("pairs\n");
            }
            for p in &report.pairs {
                let _ = writeln!(out, "  {},{}\t{}\t{}", p.i, p.j, g12(p.value), p.kind);
            }
            out
        }
    })
}

fn describe(w: &Witness) -> String {
    match w {
        Witness::Target { point, expected } => {
            format!("F({}) should be {}", join(point), g12(*expected))
        }
        Witness::Scaled {
            point,
            reference,
            factor,
            offset,
        } => format!(
            "F({}) should be {} * F({}) + {}",
            join(point),
            g12(*factor),
            join(reference),
            g12(*offset)
        ),
        Witness::Ratio { points, expected } => format!(
            "(F({}) - F({})) / (F({}) - F({})) should be {}",
            join(&points[0]),
            join(&points[1]),
            join(&points[2]),
            join(&points[3]),
            g12(*expected)
        ),
        Witness::Dominance { lower, upper } => {
            format!("F({}) <= F({}) should hold", join(lower), join(upper))
        }
    }
}

fn report_lines(reports: &[AxiomReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let verdict = if r.passed { "pass" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{:<3} {verdict}  {} tested, {} skipped",
            r.axiom.as_str(),
            r.samples_tested,
            r.skipped
        );
        if let Some(c) = &r.counterexample {
            let _ = writeln!(out, "    {}", describe(&c.witness));
            let _ = writeln!(out, "    expected {}, got {}", g12(c.expected), g12(c.got));
        }
    }
    out
}

pub fn verify(
    capacity: &Path,
    capacity2: Option<&Path>,
    integral: &str,
    axioms: &str,
    cfg: AxiomCheckConfig,
    unit_cube: bool,
    format: Format,
) -> Output {
    let axioms = if axioms.trim().eq_ignore_ascii_case("all") {
        AxiomId::ALL.to_vec()
    } else {
        AxiomId::parse_list(axioms).map_err(|e| CliError::Usage(format!("--axioms: {e}")))?
    };
    if axioms.is_empty() {
        return Err(CliError::Usage("--axioms is empty".into()));
    }
    if cfg.samples == 0 || cfg.tolerance.is_nan() || cfg.tolerance < 0.0 {
        return Err(CliError::Usage(
            "--samples must be positive and --tol nonnegative".into(),
        ));
    }
    let mut agg = aggregation(integral, capacity, capacity2)?;
    if unit_cube {
        agg = agg.restricted_to_unit_cube();
    }
    let mu = agg.capacity().clone();
    let reports = check_axioms(&axioms, &agg, &mu, &cfg)?;
    Ok(match format {
        Format::Text => report_lines(&reports),
        Format::Json => to_json(&json!({
            "integral": agg.extension().as_str(),
            "unit_cube": unit_cube,
            "seed": cfg.seed,
            "samples": cfg.samples,
            "tolerance": cfg.tolerance,
            "reports": reports,
        })),
    })
}

fn parse_points(text: &str, path: &Path) -> Result<Vec<Vec<f64>>, CliError> {
    let bad = |msg: String| CliError::Domain(format!("{}: {msg}", path.display()));
    let points: Vec<Vec<f64>> = if text.trim_start().starts_with('[') {
        serde_json::from_str(text).map_err(|e| bad(e.to_string()))?
    } else {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                ScoreVector::<f64>::parse_csv(l)
                    .map(ScoreVector::into_inner)
                    .map_err(|e| bad(e.to_string()))
            })
            .collect::<Result<_, _>>()?
    };
    if points.is_empty() {
        return Err(bad("no score vectors".into()));
    }
    Ok(points)
}

pub fn compare(
    capacity: &Path,
    scores_file: &Path,
    cfg: AxiomCheckConfig,
    format: Format,
) -> Output {
    if cfg.samples == 0 {
        return Err(CliError::Usage("--samples must be positive".into()));
    }
    let mu = load_capacity(capacity)?;
    let points = parse_points(&read(scores_file)?, scores_file)?;
    let table = compare_extensions(&mu, &points, &cfg)?;
    if format == Format::Json {
        return Ok(to_json(&table));
    }
    let mut out = String::new();
    let names: Vec<&str> = Extension::SINGLE_CAPACITY
        .iter()
        .map(|e| e.as_str())
        .collect();
    let _ = writeln!(
        out,
        "{:<24}{}",
        "scores",
        names.iter().map(|n| format!("{n:>16}")).collect::<String>()
    );
    for row in &table.rows {
        let values = [
            row.choquet,
            row.sipos,
            row.mle,
            row.smle,
            row.sugeno_product,
        ];
        let cells: String = values.iter().map(|&v| format!("{:>16}", g12(v))).collect();
        let _ = writeln!(out, "{:<24}{cells}", join(&row.point));
    }
    out.push('\n');
    let _ = writeln!(
        out,
        "{:<14}{:>6}{:>6}{:>6}{:>6}",
        "extension", "A1", "A2", "I", "M"
    );
    let yes = |b: bool| if b { "yes" } else { "no" };
    for v in &table.verdicts {
        let _ = writeln!(
            out,
            "{:<14}{:>6}{:>6}{:>6}{:>6}",
            v.extension,
            yes(v.intra_criterion),
            yes(v.inter_criteria),
            yes(v.absolute_information),
            yes(v.monotonicity)
        );
    }
    Ok(out)
}

#[derive(Serialize)]
struct RankLine {
    rank: usize,
    name: String,
    score: f64,
    indifferent_to_previous: bool,
}

pub fn rank(model: &Path, acts: &Path, format: Format) -> Output {
    let model_file = ModelFile::parse(&read(model)?).map_err(in_file(model))?;
    let model_value = model_file.build::<f64>().map_err(in_file(model))?;
    let acts_list = parse_acts::<f64>(&read(acts)?).map_err(in_file(acts))?;
    let ranked = model_value.rank_acts(&acts_list)?;
    let mut lines = Vec::with_capacity(ranked.len());
    let mut position = 0;
    for (k, r) in ranked.iter().enumerate() {
        if !r.indifferent_to_previous {
            position = k + 1;
        }
        lines.push(RankLine {
            rank: position,
            name: r
                .name
                .clone()
                .unwrap_or_else(|| format!("act {}", r.index + 1)),
            score: r.score,
            indifferent_to_previous: r.indifferent_to_previous,
        });
    }
    Ok(match format {
        Format::Json => to_json(&lines),
        Format::Text => {
            let mut out = String::new();
            for l in &lines {
                let tie = if l.indifferent_to_previous { "  ~" } else { "" };
                let _ = writeln!(out, "{}\t{}\t{}{tie}", l.rank, l.name, g12(l.score));
            }
            out
        }
    })
}
