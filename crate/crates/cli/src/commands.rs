use std::fs;

use serde_json::{json, Value};

use osculant::catalog::{
    build_a, castelnuovo_bound, index_set_of, make_variety, pi_formula, ScrollSpec, SpecDocument,
    VarietySpec,
};
use osculant::field::parse_rational;
use osculant::osculation::{osculator, regularity_order};
use osculant::random::Sampler;
use osculant::rnc::{certify_curve, fit_rnc_through};
use osculant::verify::{
    inequivalence_invariants, specialness_witness, verify_general_projection, verify_membership,
    verify_veronese_projection, Verdict, WitnessVerdict, MAX_ATTEMPTS,
};
use osculant::{Error, Rational};

use crate::output::{envelope, key_values, table};
use crate::{Cli, Command, Format, RunConfig, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_PASS, EXIT_USAGE};

pub struct Outcome {
    pub text: String,
    pub code: u8,
}

pub struct CliError {
    pub message: String,
    pub code: u8,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidParams(_) | Error::Dimension { .. } => EXIT_USAGE,
            _ => EXIT_FAIL,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        message: message.into(),
        code: EXIT_USAGE,
    }
}

type CliResult = Result<Outcome, CliError>;

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn load_spec(cfg: &RunConfig) -> Result<SpecDocument, CliError> {
    let path = cfg
        .spec
        .as_ref()
        .ok_or_else(|| usage("this command needs --spec <file>"))?;
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(text.parse::<SpecDocument>()?)
}

fn render(
    cfg: &RunConfig,
    command: &str,
    body: Value,
    text: impl FnOnce() -> String,
    code: u8,
) -> Outcome {
    let text = match cfg.format {
        Format::Json => envelope(command, body),
        Format::Table => text(),
    };
    Outcome { text, code }
}

pub fn run(cli: &Cli) -> CliResult {
    let cfg = &cli.config;
    match &cli.command {
        Command::PiTable { r, n, q } => pi_table(cfg, r, n, q),
        Command::Enumerate => enumerate(cfg),
        Command::Build => build(cfg),
        Command::Osculate { point, order } => osculate(cfg, point.as_deref(), *order),
        Command::Fit => fit(cfg),
        Command::Verify { projection } => verify(cfg, *projection),
        Command::Witness { scroll, rho } => witness(cfg, scroll.as_deref(), *rho),
    }
}

/// `a-b` or a single value.
fn parse_range(s: &str) -> Result<(u32, u32), CliError> {
    let bad = || usage(format!("bad range {s:?}, expected a-b"));
    let (lo, hi) = match s.split_once('-') {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn pi_table(cfg: &RunConfig, r: &str, n: &str, q: &str) -> CliResult {
    let (r_lo, r_hi) = parse_range(r)?;
    let (n_lo, n_hi) = parse_range(n)?;
    let (q_lo, q_hi) = parse_range(q)?;
    if n_lo < 2 {
        return Err(usage("n must be at least 2"));
    }
    let mut rows = Vec::new();
    let mut all_ok = true;
    for r in r_lo..=r_hi {
        for n in n_lo..=n_hi {
            for q in q_lo.max(n - 1)..=q_hi {
                let pi = pi_formula(r, n, q);
                let g = castelnuovo_bound(r, n, q + r * (n - 1) + 2);
                let ok = g == pi + 1;
                all_ok &= ok;
                rows.push((r, n, q, pi, g - 1, ok));
            }
        }
    }
    let body = json!({
        "rows": rows.iter().map(|&(r, n, q, pi, c, ok)| json!({"r": r, "n": n, "q": q, "pi": pi, "castelnuovo": c, "identity": ok})).collect::<Vec<_>>(),
    });
    let text = || {
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|&(r, n, q, pi, c, ok)| {
                vec![
                    r.to_string(),
                    n.to_string(),
                    q.to_string(),
                    pi.to_string(),
                    c.to_string(),
                    if ok { "ok" } else { "MISMATCH" }.into(),
                ]
            })
            .collect();
        table(&["r", "n", "q", "pi", "g-1", "identity"], &cells)
    };
    Ok(render(
        cfg,
        "pi-table",
        body,
        text,
        if all_ok { EXIT_PASS } else { EXIT_FAIL },
    ))
}

fn enumerate(cfg: &RunConfig) -> CliResult {
    let doc = load_spec(cfg)?;
    let spec = &doc.spec;
    let set =
        index_set_of(spec).ok_or_else(|| usage(format!("{spec} has no monomial index set")))?;
    let class = spec.class();
    let indices: Vec<Vec<u32>> = set.indices().iter().map(|i| i.0.clone()).collect();
    let pi = class.pi();
    let matches = set.len() as u64 == pi;
    // the other normalization of the same class, when there is one
    let alternate = match spec {
        VarietySpec::StandardScroll { a, rho, chi } => {
            let other = if *chi == a.n() as i64 - 2 {
                Some((rho + 1, -1))
            } else if *chi == -1 && *rho >= 2 {
                Some((rho - 1, a.n() as i64 - 2))
            } else {
                None
            };
            other.map(|(r2, c2)| -> Result<Value, CliError> {
                let b = build_a(a, r2, c2)?;
                Ok(json!({"rho": r2, "chi": c2, "cardinality": b.len(), "identical": b == set, "a0_is_n_minus_1": a.degrees()[0] == a.n() - 1}))
            })
        }
        _ => None,
    }
    .transpose()?;
    let body = json!({
        "spec": spec.to_json(),
        "class": class,
        "indices": indices,
        "cardinality": set.len(),
        "pi": pi,
        "matches_pi": matches,
        "alternate": alternate,
    });
    let text = || {
        let mut out: String = set.indices().iter().map(|i| format!("{i}\n")).collect();
        let mut kv = vec![
            ("spec", spec.to_string()),
            ("cardinality", set.len().to_string()),
            ("pi", pi.to_string()),
            ("matches pi", matches.to_string()),
        ];
        if let Some(alt) = &alternate {
            kv.push((
                "alternate",
                format!(
                    "A({}, {}) identical: {}",
                    alt["rho"], alt["chi"], alt["identical"]
                ),
            ));
            kv.push(("a0 = n-1", alt["a0_is_n_minus_1"].to_string()));
        }
        out.push_str(&key_values(&kv));
        out
    };
    Ok(render(
        cfg,
        "enumerate",
        body,
        text,
        if matches { EXIT_PASS } else { EXIT_FAIL },
    ))
}

fn build(cfg: &RunConfig) -> CliResult {
    let doc = load_spec(cfg)?;
    let spec = &doc.spec;
    let v = make_variety(spec)?;
    let class = doc.class();
    let names: Vec<String> = (0..v.param_dim()).map(|i| format!("x{}", i + 1)).collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let coords: Vec<String> = v
        .coords()
        .iter()
        .map(|c| c.to_string_with(&name_refs))
        .collect();
    let span = v.span_dim();
    let ok = span >= 0 && span as u64 == class.pi();
    let body = json!({
        "spec": spec.to_json(),
        "class": class,
        "ambient": v.ambient(),
        "span": span,
        "pi": class.pi(),
        "degree": v.degree(),
        "coordinates": coords,
    });
    let text = || {
        let mut out = key_values(&[
            ("spec", spec.to_string()),
            (
                "class",
                format!("X_{{{},{}}}({})", class.r + 1, class.n, class.q),
            ),
            ("ambient", format!("P^{}", v.ambient())),
            ("span", span.to_string()),
            ("pi", class.pi().to_string()),
        ]);
        for (i, c) in coords.iter().enumerate() {
            out.push_str(&format!("X{i} = {c}\n"));
        }
        out
    };
    Ok(render(
        cfg,
        "build",
        body,
        text,
        if ok { EXIT_PASS } else { EXIT_FAIL },
    ))
}

fn parse_point(s: &str, dim: usize) -> Result<Vec<Rational>, CliError> {
    let p: Vec<Rational> = s
        .split(',')
        .map(parse_rational)
        .collect::<Result<_, _>>()
        .map_err(usage)?;
    if p.len() != dim {
        return Err(usage(format!(
            "point has {} coordinates, the chart has {dim}",
            p.len()
        )));
    }
    Ok(p)
}

fn osculate(cfg: &RunConfig, point: Option<&str>, order: u32) -> CliResult {
    let doc = load_spec(cfg)?;
    let v = make_variety(&doc.spec)?;
    let p = match point {
        Some(s) => parse_point(s, v.param_dim())?,
        None => Sampler::new(cfg.seed).vector(v.param_dim()),
    };
    let reports = (0..=order)
        .map(|k| osculator(&v, &p, k))
        .collect::<Result<Vec<_>, _>>()?;
    let reg = regularity_order(&v, &p)?;
    let point_str: Vec<String> = p.iter().map(ToString::to_string).collect();
    let body = json!({
        "spec": doc.spec.to_json(),
        "point": point_str,
        "osculators": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        "regularity_order": reg,
    });
    let text = || {
        let rows: Vec<Vec<String>> = reports
            .iter()
            .map(|r| {
                vec![
                    r.order.to_string(),
                    r.dim().to_string(),
                    (r.expected_dim_plus_1 - 1).to_string(),
                    r.is_regular.to_string(),
                ]
            })
            .collect();
        let mut out = format!("point ({})\n", point_str.join(", "));
        out.push_str(&table(&["order", "dim", "expected", "regular"], &rows));
        out.push_str(&format!("regularity order {reg}\n"));
        out
    };
    Ok(render(cfg, "osculate", body, text, EXIT_PASS))
}

fn fit(cfg: &RunConfig) -> CliResult {
    let doc = load_spec(cfg)?;
    let spec = &doc.spec;
    let v = make_variety(spec)?;
    let class = spec.class();
    let mut sampler = Sampler::new(cfg.seed);
    let mut last = String::new();
    for attempt in 1..=MAX_ATTEMPTS {
        let points: Vec<Vec<Rational>> = (0..class.n)
            .map(|_| sampler.vector(v.param_dim()))
            .collect();
        let fit = match fit_rnc_through(spec, &points) {
            Ok(f) => f,
            Err(e) if e.is_genericity() => {
                last = e.to_string();
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let cert = certify_curve(&fit.curve)?;
        let mut incidence = true;
        for p in &points {
            incidence &= fit.curve.incidence(&v.eval(p)?)?.passes_through();
        }
        let ok = cert.is_rnc && cert.degree == class.q as usize && incidence;
        let pts: Vec<Vec<String>> = points
            .iter()
            .map(|p| p.iter().map(ToString::to_string).collect())
            .collect();
        let comps: Vec<String> = fit
            .curve
            .components()
            .iter()
            .map(ToString::to_string)
            .collect();
        let body = json!({
            "spec": spec.to_json(),
            "class": class,
            "attempts": attempt,
            "points": pts,
            "curve": comps,
            "certificate": cert,
            "incidence": incidence,
            "extension": fit.extension.as_ref().map(ToString::to_string),
        });
        let text = || {
            let mut out = String::new();
            for p in &pts {
                out.push_str(&format!("point ({})\n", p.join(", ")));
            }
            for (i, c) in comps.iter().enumerate() {
                out.push_str(&format!("C{i}(t) = {c}\n"));
            }
            out.push_str(&key_values(&[
                ("degree", cert.degree.to_string()),
                ("span", cert.span_dim.to_string()),
                ("rnc", cert.is_rnc.to_string()),
                ("incidence", incidence.to_string()),
            ]));
            out
        };
        return Ok(render(
            cfg,
            "fit",
            body,
            text,
            if ok { EXIT_PASS } else { EXIT_FAIL },
        ));
    }
    Err(CliError {
        message: Error::RetriesExhausted {
            attempts: MAX_ATTEMPTS,
            last,
        }
        .to_string(),
        code: EXIT_INCONCLUSIVE,
    })
}

fn witness_supported(spec: &VarietySpec) -> bool {
    matches!(
        spec,
        VarietySpec::SegreSpecial { .. }
            | VarietySpec::CubicSpecial { .. }
            | VarietySpec::Veronese33
            | VarietySpec::StandardScroll { .. }
    )
}

fn verify(cfg: &RunConfig, with_projection: bool) -> CliResult {
    let doc = load_spec(cfg)?;
    let spec = &doc.spec;
    let report = verify_membership(spec, doc.declared, cfg.trials, cfg.seed)?;
    let mut verdict = report.verdict;
    let witness = if witness_supported(spec) {
        Some(specialness_witness(spec)?)
    } else {
        None
    };
    if witness
        .as_ref()
        .is_some_and(|w| w.verdict == WitnessVerdict::Inconclusive)
    {
        verdict = verdict.combine(Verdict::Inconclusive);
    }
    let projections = if with_projection && spec.class().n >= 3 {
        let p = verify_veronese_projection(spec, cfg.trials, cfg.seed)?;
        let g = verify_general_projection(spec, cfg.trials, cfg.seed)?;
        verdict = verdict.combine(p.verdict).combine(g.verdict);
        Some((p, g))
    } else {
        None
    };
    let body = json!({
        "report": report,
        "witness": witness,
        "projection": projections.as_ref().map(|(p, _)| p),
        "general_projection": projections.as_ref().map(|(_, g)| g),
        "verdict": verdict,
    });
    let text = || {
        let class = report.class;
        let mut out = key_values(&[
            ("spec", spec.to_string()),
            (
                "class",
                format!("X_{{{},{}}}({})", class.r + 1, class.n, class.q),
            ),
            (
                "span",
                format!("{} (expected {})", report.span.found, report.span.expected),
            ),
        ]);
        let rows: Vec<Vec<String>> = report
            .trials
            .iter()
            .map(|t| {
                vec![
                    t.index.to_string(),
                    format!("{:#018x}", t.seed),
                    t.attempts.to_string(),
                    t.certificate
                        .map_or("-".into(), |c| format!("{}/{}", c.degree, c.span_dim)),
                    t.incidence.to_string(),
                    t.admissibility
                        .as_ref()
                        .map_or("-".into(), |a| a.passed().to_string()),
                    format!("{:?}", t.verdict).to_lowercase(),
                ]
            })
            .collect();
        out.push_str(&table(
            &[
                "trial",
                "seed",
                "attempts",
                "deg/span",
                "incidence",
                "admissible",
                "verdict",
            ],
            &rows,
        ));
        if let Some(w) = &witness {
            out.push_str(&format!(
                "witness  {:?}: measured {}, reference {} -> {:?}\n",
                w.kind, w.measured, w.reference, w.verdict
            ));
        }
        if let Some((p, g)) = &projections {
            out.push_str(&format!(
                "projection  order {} span {} -> {:?}\n",
                p.order, p.expected_span, p.verdict
            ));
            out.push_str(&format!(
                "general projection  weight {} span {} -> {:?}\n",
                g.weight, g.expected_span, g.verdict
            ));
        }
        out.push_str(&format!(
            "verdict  {}\n",
            format!("{verdict:?}").to_lowercase()
        ));
        out
    };
    Ok(render(cfg, "verify", body, text, verdict_code(verdict)))
}

fn witness(cfg: &RunConfig, scroll: Option<&str>, rho: Option<u32>) -> CliResult {
    if let Some(s) = scroll {
        let degrees: Vec<u32> = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse()
                    .map_err(|_| usage(format!("bad scroll degree {x:?}")))
            })
            .collect::<Result<_, _>>()?;
        let a = ScrollSpec::new(degrees)?;
        let rho = rho.ok_or_else(|| usage("--scroll needs --rho"))?;
        let rep = inequivalence_invariants(&a, rho)?;
        let code = if rep.equivalent.is_some() {
            EXIT_PASS
        } else {
            EXIT_INCONCLUSIVE
        };
        let body = json!({ "inequivalence": rep });
        let text = || {
            key_values(&[
                ("scroll", format!("{:?}", rep.a)),
                ("rho", rep.rho.to_string()),
                ("q", rep.q.to_string()),
                ("|A(rho,-1)|", rep.card_minus_one.to_string()),
                ("|A(rho-1,n-2)|", rep.card_alternate.to_string()),
                ("relation", format!("{:?}", rep.relation)),
                (
                    "equivalent",
                    rep.equivalent.map_or("undecided".into(), |e| e.to_string()),
                ),
            ])
        };
        return Ok(render(cfg, "witness", body, text, code));
    }
    let doc = load_spec(cfg)?;
    let w = specialness_witness(&doc.spec)?;
    let code = if w.verdict == WitnessVerdict::Inconclusive {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_PASS
    };
    let body = json!({ "witness": w });
    let text = || {
        let mut out = key_values(&[
            ("spec", doc.spec.to_string()),
            ("kind", format!("{:?}", w.kind)),
            ("measured", w.measured.to_string()),
            ("reference", w.reference.to_string()),
            ("verdict", format!("{:?}", w.verdict)),
        ]);
        for c in &w.components {
            out.push_str(&format!(
                "component {}: dim {}, contained {}\n",
                c.description, c.dim, c.contained
            ));
        }
        for c in &w.controls {
            out.push_str(&format!("control {}: measured {}\n", c.spec, c.measured));
        }
        out
    };
    Ok(render(cfg, "witness", body, text, code))
}
