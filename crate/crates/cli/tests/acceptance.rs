//! End-to-end acceptance checks, one printed line per criterion.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::Instant;

use osculant::catalog::{
    binomial, build_a, castelnuovo_bound, i_formula, make_variety, pi_formula, ClassParams,
    ScrollSpec, VarietySpec,
};
use osculant::curve::RationalCurve;
use osculant::field::{int, Rational};
use osculant::gstructure::{construct_structure, grn_relation, is_type_subspace, random_subspaces};
use osculant::osculation::{osculator, projection_compatibility, regularity_order};
use osculant::random::{derive_seed, Sampler};
use osculant::rnc::{certify_curve, rnc_through_points, FrameChoice};
use osculant::subspace::{direct_sum, ProjSubspace};
use osculant::upoly::UPoly;
use osculant::verify::{
    inequivalence_invariants, specialness_witness, verify_general_projection, verify_membership,
    verify_veronese_projection, Relation, Verdict, WitnessKind, WitnessVerdict,
};
use osculant::Error;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn scroll(a: &[u32]) -> ScrollSpec {
    ScrollSpec::new(a.to_vec()).expect("valid scroll")
}

fn formula_suite() -> Check {
    let mut checked = 0;
    for r in 1..=4u32 {
        for n in 2..=6u32 {
            for q in n - 1..=12 {
                let c = ClassParams::new(r, n, q).map_err(|e| e.to_string())?;
                let pi = pi_formula(r, n, q);
                let mut branches = vec![(c.rho(), c.chi())];
                if (q + 1) % (n - 1) == 0 {
                    ensure(c.alternate_branch() == Some((c.rho() + 1, -1)), || {
                        format!("({r},{n},{q}): no alternate branch")
                    })?;
                    branches.push((c.rho() + 1, -1));
                }
                for a in ScrollSpec::all(r, n) {
                    for &(rho, chi) in &branches {
                        if rho as i64 * (n as i64 - 1) + chi < n as i64 - 1 {
                            continue;
                        }
                        let card = build_a(&a, rho, chi).map_err(|e| e.to_string())?.len() as u64;
                        ensure(card == pi, || {
                            format!(
                                "card A({rho},{chi}) over {:?} = {card}, π = {pi}",
                                a.degrees()
                            )
                        })?;
                        checked += 1;
                    }
                    // I(ρ, χ) over χ at fixed q, for general scrolls
                    if a.degrees()[0] == n - 1 {
                        continue;
                    }
                    for chi in -6..=n as i64 + 4 {
                        let rest = q as i64 - chi;
                        if rest <= 0 || rest % (n as i64 - 1) != 0 {
                            continue;
                        }
                        let rho = (rest / (n as i64 - 1)) as u32;
                        let value = i_formula(&a, rho, chi);
                        let in_window = (-1..=n as i64 - 2).contains(&chi);
                        ensure(value <= pi + 1 && (value == pi + 1) == in_window, || {
                            format!(
                                "I({rho},{chi}) over {:?} = {value}, π+1 = {}",
                                a.degrees(),
                                pi + 1
                            )
                        })?;
                        checked += 1;
                    }
                }
                let g = castelnuovo_bound(r, n, q + r * (n - 1) + 2);
                ensure(g == pi + 1, || {
                    format!(
                        "g_{{{r},{n}}}({}) = {g}, π+1 = {}",
                        q + r * (n - 1) + 2,
                        pi + 1
                    )
                })?;
                checked += 1;
            }
        }
        for rho in 1..=6u32 {
            let lhs = binomial((r + 1 + rho) as i64, (r + 1) as i64)
                + binomial((r + rho) as i64, (r + 1) as i64)
                - 1;
            ensure(lhs == pi_formula(r, 3, 2 * rho) as u128, || {
                format!("quadric identity fails at r={r}, ρ={rho}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} identities"))
}

fn membership_catalog() -> Vec<VarietySpec> {
    vec![
        VarietySpec::Veronese { dim: 1, order: 3 },
        VarietySpec::Veronese { dim: 2, order: 2 },
        VarietySpec::Veronese { dim: 2, order: 3 },
        VarietySpec::Veronese { dim: 3, order: 2 },
        VarietySpec::Scroll { a: scroll(&[1, 1]) },
        VarietySpec::Scroll { a: scroll(&[3, 2]) },
        VarietySpec::Scroll {
            a: scroll(&[2, 2, 1]),
        },
        VarietySpec::StandardScroll {
            a: scroll(&[1, 1]),
            rho: 2,
            chi: 0,
        },
        VarietySpec::StandardScroll {
            a: scroll(&[2, 1]),
            rho: 2,
            chi: 1,
        },
        VarietySpec::StandardScroll {
            a: scroll(&[1, 1, 1]),
            rho: 3,
            chi: 0,
        },
        VarietySpec::ConeStandard { r: 1, q: 4 },
        VarietySpec::ConeStandard { r: 1, q: 6 },
        VarietySpec::ConeStandard { r: 2, q: 4 },
        VarietySpec::ConeStandard { r: 2, q: 6 },
        VarietySpec::QuadricVeronese {
            r: 3,
            rho: 1,
            rank: 6,
        },
        VarietySpec::QuadricVeronese {
            r: 3,
            rho: 2,
            rank: 5,
        },
        VarietySpec::SegreSpecial { r: 2, mu: 4 },
        VarietySpec::SegreSpecial { r: 3, mu: 5 },
        VarietySpec::CubicSpecial { r: 2, mu_prime: 1 },
        VarietySpec::CubicSpecial { r: 2, mu_prime: 2 },
        VarietySpec::Veronese33,
    ]
}

fn membership_suite() -> Check {
    let catalog = membership_catalog();
    for (i, spec) in catalog.iter().enumerate() {
        let report = verify_membership(spec, None, 20, derive_seed(2024, i as u64))
            .map_err(|e| format!("{spec}: {e}"))?;
        ensure(report.span.found == report.span.expected as i64, || {
            format!(
                "{spec}: span {} vs π {}",
                report.span.found, report.span.expected
            )
        })?;
        ensure(report.trials.len() == 20, || {
            format!("{spec}: {} trials", report.trials.len())
        })?;
        for t in &report.trials {
            let cert_ok = t
                .certificate
                .is_some_and(|c| c.is_rnc && c.degree == report.class.q as usize);
            ensure(t.verdict == Verdict::Pass && cert_ok && t.incidence, || {
                format!(
                    "{spec}: trial {} {:?} ({})",
                    t.index,
                    t.verdict,
                    t.error.clone().unwrap_or_default()
                )
            })?;
        }
    }
    Ok(format!("{} instances x 20 trials", catalog.len()))
}

fn twisted(d: usize) -> RationalCurve<Rational> {
    RationalCurve::new(
        (0..=d)
            .map(|i| {
                let mut c = vec![int(0); i + 1];
                c[i] = int(1);
                UPoly::new(c)
            })
            .collect(),
    )
}

fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    (1..=total)
        .flat_map(|first| {
            compositions(total - first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

fn distinct_rationals(s: &mut Sampler, k: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    while out.len() < k {
        let t = s.rational();
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

fn osculation_suite() -> Check {
    let mut s = Sampler::new(31);
    for dim in 1..=3u32 {
        for order in 1..=3u32 {
            let v =
                make_variety(&VarietySpec::Veronese { dim, order }).map_err(|e| e.to_string())?;
            for _ in 0..5 {
                let p = s.vector(dim as usize);
                let reg = regularity_order(&v, &p).map_err(|e| e.to_string())?;
                ensure(reg == order, || {
                    format!("Veronese({dim},{order}) regularity {reg}")
                })?;
            }
        }
    }

    let models = [
        VarietySpec::Veronese { dim: 2, order: 2 },
        VarietySpec::StandardScroll {
            a: scroll(&[1, 1]),
            rho: 2,
            chi: 0,
        },
        VarietySpec::SegreSpecial { r: 2, mu: 4 },
        VarietySpec::ConeStandard { r: 1, q: 4 },
        VarietySpec::Veronese33,
    ];
    for i in 0..10 {
        let spec = &models[i % models.len()];
        let v = make_variety(spec).map_err(|e| e.to_string())?;
        let g = s.invertible_matrix(v.ambient() + 1);
        let moved = v.transform(&g).map_err(|e| e.to_string())?;
        let p = s.vector(v.param_dim());
        for k in 0..=2 {
            let a = osculator(&v, &p, k)
                .map_err(|e| e.to_string())?
                .subspace
                .image(&g);
            let b = osculator(&moved, &p, k)
                .map_err(|e| e.to_string())?
                .subspace;
            ensure(a == b, || {
                format!("{spec}: osculator of order {k} not carried by the projectivity")
            })?;
        }
    }

    let mut pairs = 0;
    let mut attempts = 0;
    while pairs < 10 {
        attempts += 1;
        ensure(attempts < 100, || {
            "could not draw 10 admissible centers".into()
        })?;
        let spec = &models[pairs % models.len()];
        let v = make_variety(spec).map_err(|e| e.to_string())?;
        let p = s.vector(v.param_dim());
        let k = 1;
        let osc_rank = osculator(&v, &p, k)
            .map_err(|e| e.to_string())?
            .subspace
            .rank();
        let free = v.ambient() + 1 - osc_rank;
        let c_rank = 1 + s.index(free.min(2));
        let center =
            ProjSubspace::span_of(v.ambient(), &s.matrix(c_rank, v.ambient() + 1).row_vecs())
                .map_err(|e| e.to_string())?;
        match projection_compatibility(&v, &p, k, &center) {
            Ok(true) => pairs += 1,
            Ok(false) => {
                return Err(format!(
                    "{spec}: projected osculator differs from the image osculator"
                ))
            }
            Err(Error::Dimension { .. } | Error::GeneralPosition(_) | Error::Genericity(_)) => {
                continue
            }
            Err(e) => return Err(format!("{spec}: {e}")),
        }
    }

    let mut sums = 0;
    for d in 1..=6usize {
        let c = twisted(d);
        for comp in compositions(d + 1) {
            let ts = distinct_rationals(&mut s, comp.len());
            let parts: Vec<_> = ts
                .iter()
                .zip(&comp)
                .map(|(t, &m)| c.osculator(t, m - 1))
                .collect();
            let sum =
                direct_sum(&parts).map_err(|e| format!("degree {d}, orders {comp:?}: {e}"))?;
            ensure(sum.rank() == d + 1, || {
                format!("degree {d}, orders {comp:?}: rank {}", sum.rank())
            })?;
            sums += 1;
        }
    }
    Ok(format!(
        "regularity 9x5, invariance 10, compatibility {pairs}, direct sums {sums}"
    ))
}

fn projection_suite() -> Check {
    let standards: Vec<VarietySpec> = membership_catalog()
        .into_iter()
        .filter(|s| s.class().n >= 3)
        .collect();
    for (i, spec) in standards.iter().enumerate() {
        let seed = derive_seed(77, i as u64);
        let c = spec.class();
        if matches!(
            spec,
            VarietySpec::StandardScroll { .. }
                | VarietySpec::ConeStandard { .. }
                | VarietySpec::Scroll { .. }
        ) {
            let p =
                verify_veronese_projection(spec, 5, seed).map_err(|e| format!("{spec}: {e}"))?;
            let expected = pi_formula(c.r, 2, c.rho());
            ensure(p.order == c.rho() && p.expected_span == expected, || {
                format!(
                    "{spec}: order {} span {} vs π_{{r,2}}(ρ) = {expected}",
                    p.order, p.expected_span
                )
            })?;
            for t in &p.trials {
                let cert_ok = t
                    .curve
                    .is_some_and(|k| k.is_rnc && k.degree == c.rho() as usize);
                ensure(
                    t.verdict == Verdict::Pass
                        && t.image_span == Some(expected as i64)
                        && cert_ok
                        && t.injective,
                    || {
                        format!(
                            "{spec}: projection trial {} {:?} ({})",
                            t.index,
                            t.verdict,
                            t.error.clone().unwrap_or_default()
                        )
                    },
                )?;
            }
        }
        let g = verify_general_projection(spec, 5, seed).map_err(|e| format!("{spec}: {e}"))?;
        let weight = c.ponderation()[0];
        let expected = pi_formula(c.r, c.n - 1, c.q - weight - 1);
        ensure(
            g.verdict == Verdict::Pass && g.expected_span == expected,
            || {
                format!(
                    "{spec}: general projection {:?}, spans {:?} vs {expected}",
                    g.verdict, g.found_spans
                )
            },
        )?;
        ensure(g.found_spans.iter().all(|&f| f == expected as i64), || {
            format!("{spec}: spans {:?}", g.found_spans)
        })?;
    }
    Ok(format!("{} models", standards.len()))
}

fn specialness_suite() -> Check {
    let w = specialness_witness(&VarietySpec::Veronese33).map_err(|e| e.to_string())?;
    ensure(
        w.kind == WitnessKind::RegularityOrder
            && w.measured == 3
            && w.verdict == WitnessVerdict::Special,
        || format!("Veronese33: measured {} -> {:?}", w.measured, w.verdict),
    )?;
    ensure(
        w.controls.len() == 2 && w.controls.iter().all(|c| c.measured < 3),
        || {
            format!(
                "Veronese33 controls {:?}",
                w.controls.iter().map(|c| c.measured).collect::<Vec<_>>()
            )
        },
    )?;

    for (r, mu) in [(2, 3), (2, 4), (3, 3), (3, 4), (3, 5)] {
        let w =
            specialness_witness(&VarietySpec::SegreSpecial { r, mu }).map_err(|e| e.to_string())?;
        let expected = 1.max(r - 1);
        ensure(
            w.measured == expected && expected < r && w.verdict == WitnessVerdict::Special,
            || {
                format!(
                    "SegreSpecial({r},{mu}): measured {} -> {:?}",
                    w.measured, w.verdict
                )
            },
        )?;
        ensure(
            !w.controls.is_empty() && w.controls.iter().all(|c| c.measured == r),
            || {
                format!(
                    "SegreSpecial({r},{mu}) controls {:?}",
                    w.controls.iter().map(|c| c.measured).collect::<Vec<_>>()
                )
            },
        )?;
    }
    for mu_prime in 1..=2 {
        let r = 2;
        let w = specialness_witness(&VarietySpec::CubicSpecial { r, mu_prime })
            .map_err(|e| e.to_string())?;
        ensure(
            w.measured == r - 1 && w.verdict == WitnessVerdict::Special,
            || {
                format!(
                    "CubicSpecial({r},{mu_prime}): measured {} -> {:?}",
                    w.measured, w.verdict
                )
            },
        )?;
        ensure(
            !w.controls.is_empty() && w.controls.iter().all(|c| c.measured == r),
            || {
                format!(
                    "CubicSpecial({r},{mu_prime}) controls {:?}",
                    w.controls.iter().map(|c| c.measured).collect::<Vec<_>>()
                )
            },
        )?;
    }

    let mut identities = 0;
    for r in 1..=3u32 {
        for n in 3..=6u32 {
            let mut a = vec![0; r as usize + 1];
            a[0] = n - 1;
            for rho in 2..=4 {
                let rep = inequivalence_invariants(&scroll(&a), rho).map_err(|e| e.to_string())?;
                ensure(rep.relation == Relation::Identical, || {
                    format!("a = {a:?}, ρ = {rho}: {:?}", rep.relation)
                })?;
                identities += 1;
            }
        }
    }
    for rho in 2..=5 {
        let rep = inequivalence_invariants(&scroll(&[1, 1]), rho).map_err(|e| e.to_string())?;
        ensure(rep.relation == Relation::Swap, || {
            format!("a = (1,1), ρ = {rho}: {:?}", rep.relation)
        })?;
    }
    let rep = inequivalence_invariants(&scroll(&[2, 1, 1]), 2).map_err(|e| e.to_string())?;
    match rep.relation {
        Relation::Separated {
            dim_minus_one,
            dim_alternate,
        } if dim_alternate >= dim_minus_one + 2 => {}
        other => return Err(format!("a = (2,1,1), ρ = 2: {other:?}")),
    }
    Ok(format!(
        "Veronese33, 5 Segre, 2 cubic, {identities} identities, swap, separation"
    ))
}

fn tensor_suite() -> Check {
    let mut runs = 0;
    for r in 1..=4usize {
        for n in 2..=4usize {
            for seed in 0..10u64 {
                let mut s = Sampler::new(derive_seed(seed, (r * 10 + n) as u64));
                let fs = random_subspaces(&mut s, r, n);
                let st = construct_structure(r, &fs)
                    .map_err(|e| format!("(r,n) = ({r},{n}) seed {seed}: {e}"))?;
                for (i, f) in fs.iter().enumerate() {
                    let t = is_type_subspace(&st, f).map_err(|e| e.to_string())?;
                    let expected: Vec<Rational> = (0..n)
                        .map(|a| if i == 0 || a + 1 == i { int(1) } else { int(0) })
                        .collect();
                    ensure(t.as_ref() == Some(&expected), || {
                        format!("({r},{n}) seed {seed}: input {i} gives {t:?}")
                    })?;
                }
                let mut reordered = fs.clone();
                reordered.rotate_left(1);
                let other = construct_structure(r, &reordered).map_err(|e| e.to_string())?;
                ensure(grn_relation(&st, &other).is_some(), || {
                    format!("({r},{n}) seed {seed}: constructions unrelated")
                })?;
                if r >= 2 && n >= 2 {
                    let t: Vec<Rational> = (0..n).map(|_| s.rational()).collect();
                    let c: Vec<Rational> = (0..r).map(|_| s.rational()).collect();
                    if t.iter().any(|x| *x != int(0)) && c.iter().any(|x| *x != int(0)) {
                        let f = st.type_subspace(&t).map_err(|e| e.to_string())?;
                        let e = st.dual_type_subspace(&c).map_err(|e| e.to_string())?;
                        let meet = f.intersect(&e).map_err(|e| e.to_string())?;
                        ensure(meet.rank() == (r - 1) * (n - 1), || {
                            format!("({r},{n}) seed {seed}: intersection rank {}", meet.rank())
                        })?;
                    }
                }
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} structures"))
}

fn interpolation_suite() -> Check {
    let mut fits = 0;
    for d in 1..=5usize {
        for seed in 0..20u64 {
            let mut s = Sampler::new(derive_seed(seed, 500 + d as u64));
            let (pts, base) = loop {
                let pts: Vec<Vec<Rational>> = (0..d + 3).map(|_| s.vector(d + 1)).collect();
                match rnc_through_points(d, &pts, &FrameChoice::standard(d)) {
                    Ok(f) => break (pts, f),
                    Err(Error::GeneralPosition(_)) => continue,
                    Err(e) => return Err(format!("d = {d}, seed {seed}: {e}")),
                }
            };
            let mut order: Vec<usize> = (0..d + 3).collect();
            order.rotate_left(1 + seed as usize % (d + 2));
            let choice = FrameChoice {
                order,
                u: s.rational(),
                kappa: s.nonzero_rational(),
            };
            let alt = rnc_through_points(d, &pts, &choice).map_err(|e| e.to_string())?;
            for fit in [&base, &alt] {
                let cert = certify_curve(&fit.curve).map_err(|e| e.to_string())?;
                ensure(
                    cert.is_rnc && cert.degree == d && cert.span_dim == d,
                    || format!("d = {d}, seed {seed}: {cert:?}"),
                )?;
                for (p, t) in pts.iter().zip(&fit.params) {
                    let x = fit.curve.eval_p1(t);
                    let on = (0..=d).all(|i| {
                        (0..=d).all(|j| x[i].clone() * p[j].clone() == x[j].clone() * p[i].clone())
                    });
                    ensure(on, || format!("d = {d}, seed {seed}: point missed"))?;
                }
            }
            for _ in 0..3 {
                let x = base.curve.eval(&s.rational());
                if x.iter().all(|v| *v == int(0)) {
                    continue;
                }
                let inc = alt.curve.incidence(&x).map_err(|e| e.to_string())?;
                ensure(inc.passes_through(), || {
                    format!("d = {d}, seed {seed}: frame choices give different curves")
                })?;
            }
            fits += 1;
        }
    }
    Ok(format!("{fits} configurations"))
}

fn scratch_dir() -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&dir).expect("scratch directory");
    dir
}

fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osculant"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn cli_suite() -> Check {
    let dir = scratch_dir();
    let write = |name: &str, body: &str| {
        let p = dir.join(name);
        std::fs::write(&p, body).expect("spec file");
        p.to_string_lossy().into_owned()
    };
    let pass = write(
        "segre.json",
        r#"{"family": "SegreSpecial", "params": {"r": 2, "mu": 4}}"#,
    );
    let wrong = write(
        "wrong.json",
        r#"{"family": "SegreSpecial", "params": {"r": 2, "mu": 4}, "class": {"r": 2, "n": 3, "q": 4}}"#,
    );
    let malformed = write(
        "malformed.json",
        r#"{"family": "SegreSpecial", "params": {"r": 2"#,
    );

    let args = |spec: &str| {
        vec![
            "--seed".to_string(),
            "11".into(),
            "--trials".into(),
            "4".into(),
            "--format".into(),
            "json".into(),
            "--spec".into(),
            spec.to_string(),
            "verify".into(),
        ]
    };
    let run = |spec: &str| {
        let a = args(spec);
        run_cli(&a.iter().map(String::as_str).collect::<Vec<_>>())
    };

    let first = run(&pass);
    let second = run(&pass);
    ensure(first.status.code() == Some(0), || {
        format!(
            "pass case exited {:?}: {}",
            first.status.code(),
            String::from_utf8_lossy(&first.stderr)
        )
    })?;
    ensure(
        first.stdout == second.stdout && !first.stdout.is_empty(),
        || "repeated runs differ".into(),
    )?;
    let body: serde_json::Value =
        serde_json::from_slice(&first.stdout).map_err(|e| format!("JSON: {e}"))?;
    ensure(body["schema"] == 1 && body["command"] == "verify", || {
        "missing schema envelope".into()
    })?;

    let fail = run(&wrong);
    ensure(fail.status.code() == Some(1), || {
        format!("forced fail exited {:?}", fail.status.code())
    })?;
    let bad = run(&malformed);
    ensure(bad.status.code() == Some(64), || {
        format!("malformed spec exited {:?}", bad.status.code())
    })?;
    let usage = run_cli(&["no-such-command"]);
    ensure(usage.status.code() == Some(64), || {
        format!("unknown subcommand exited {:?}", usage.status.code())
    })?;
    Ok("byte-identical reruns, exits 0/1/64".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("formula suite", formula_suite),
        ("membership suite", membership_suite),
        ("osculation suite", osculation_suite),
        ("projection suite", projection_suite),
        ("specialness suite", specialness_suite),
        ("tensor-structure suite", tensor_suite),
        ("interpolation suite", interpolation_suite),
        ("cli determinism and exit codes", cli_suite),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why}; {secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
