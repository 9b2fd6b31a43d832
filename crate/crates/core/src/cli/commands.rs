use std::path::PathBuf;

use serde_json::json;

use super::input::{self, AlgebraFile, Source};
use super::report::{RunReport, Status};
use super::{Cli, Command, Family};
use crate::error::{Error, Result};
use crate::helix::{
    cubic_1periodicity_check, cubic_2periodicity, omega_quadruple, quadratic_periodicity,
    translate_admissible, translate_stepwise, Helix, PicClass, Translation,
};
use crate::linalg::{Field, FieldSpec, PrimeField, Rationals};
use crate::pointscheme::{
    chain_kernel, classify_quintuple, enumerate_points, factor_22, form_points, gamma_form,
    multiplication_injectivity, rank_one_in_pencil, smoothness, Classification, FlattenSlot,
    PencilWitness, Side,
};
use crate::quintuple::random::{
    random_degenerate, random_geometric, random_integer, rng, DEGENERATE_ZEROS,
};
use crate::quintuple::{
    build_prequadric, linear_detect, linear_tensor, relations_from_w, summarize, theta_maps,
    transport_relations, Quintuple,
};
use crate::zalgebra::{
    check_resolution, dim_table, expected_dim, veronese_dims, veronese_generation_check,
    AlgebraKind, Presentation,
};

pub enum Output {
    Report(RunReport),
    Text(String),
}

enum FieldChoice {
    Prime(PrimeField),
    Rational,
}

macro_rules! with_field {
    ($choice:expr, $f:ident => $body:expr) => {
        match $choice {
            FieldChoice::Prime($f) => $body,
            FieldChoice::Rational => {
                let $f = Rationals;
                $body
            }
        }
    };
}

fn field_choice(cli: &Cli, spec: FieldSpec) -> Result<FieldChoice> {
    match (spec, cli.field) {
        (FieldSpec::Prime { p }, None) => Ok(FieldChoice::Prime(PrimeField::new(p)?)),
        (FieldSpec::Prime { p }, Some(q)) if p == q => Ok(FieldChoice::Prime(PrimeField::new(p)?)),
        (FieldSpec::Prime { p }, Some(q)) => Err(Error::Input(format!(
            "input is over GF({p}) but --field {q} was given"
        ))),
        (FieldSpec::Rational, None) => Ok(FieldChoice::Rational),
        (FieldSpec::Rational, Some(q)) => Ok(FieldChoice::Prime(PrimeField::new(q)?)),
    }
}

fn random_field(cli: &Cli) -> Result<(PrimeField, u64)> {
    match (cli.field, cli.seed) {
        (Some(p), Some(s)) => Ok((PrimeField::new(p)?, s)),
        _ => Err(Error::Input(
            "no input file: pass FILE, or --seed and --field for a random draw".into(),
        )),
    }
}

/// Reads the input file, or draws a random geometric quintuple.
fn load_algebra(cli: &Cli, file: &Option<PathBuf>) -> Result<(AlgebraFile, String)> {
    match file {
        Some(path) => {
            let src = Source::read(path)?;
            Ok((input::parse_algebra(&src.text)?, src.digest))
        }
        None => {
            let (f, seed) = random_field(cli)?;
            let q = random_geometric(&f, &mut rng(seed))
                .ok_or_else(|| Error::Resource("no geometric draw found".into()))?;
            let qf = input::quintuple_file(&q, Some(format!("random geometric, seed {seed}")));
            let src = Source::from_text(serde_json::to_string(&qf)?);
            Ok((AlgebraFile::Quintuple(qf), src.digest))
        }
    }
}

fn algebra<F: Field>(f: &F, file: &AlgebraFile) -> Result<Presentation<F>> {
    match file {
        AlgebraFile::Quintuple(qf) => {
            let q = input::quintuple(f, qf)?;
            let rels = (0..4)
                .map(|i| relations_from_w(q.w(), i))
                .collect::<Result<Vec<_>>>()?;
            Presentation::new(f, AlgebraKind::Cubic, vec![2; 4], rels, None)
        }
        AlgebraFile::Presentation(pf) => input::presentation(f, pf),
    }
}

pub fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Dims { file, from, to } => {
            let (af, digest) = load_algebra(cli, file)?;
            let mut r = RunReport::new("dims", digest, cli.seed);
            with_field!(field_choice(cli, af.field())?, f => {
                let a = algebra(&f, &af)?;
                let cutoff = to.or(cli.cutoff).unwrap_or(default_cutoff(a.kind()));
                dims(&mut r, &a, *from, cutoff)?;
            });
            Ok(Output::Report(r))
        }
        Command::Classify { file } => {
            let (af, digest) = load_algebra(cli, file)?;
            let AlgebraFile::Quintuple(_) = &af else {
                return Err(Error::Input("classify needs a quintuple file".into()));
            };
            let mut r = RunReport::new("classify", digest, cli.seed);
            with_field!(field_choice(cli, af.field())?, f => {
                let AlgebraFile::Quintuple(qf) = &af else { unreachable!() };
                let q = input::quintuple(&f, qf)?;
                classify_checks(&mut r, &q, cli.cutoff.unwrap_or(8))?;
            });
            Ok(Output::Report(r))
        }
        Command::Pointscheme {
            file,
            factor,
            chains,
        } => {
            let (af, digest) = load_algebra(cli, file)?;
            let f = match field_choice(cli, af.field())? {
                FieldChoice::Prime(f) => f,
                FieldChoice::Rational => {
                    return Err(Error::Input(
                        "point enumeration needs a prime field; pass --field p".into(),
                    ))
                }
            };
            let a = algebra(&f, &af)?;
            let mut r = RunReport::new("pointscheme", digest, cli.seed);
            pointscheme(&mut r, &a, *factor, *chains, cli.cutoff.unwrap_or(4))?;
            Ok(Output::Report(r))
        }
        Command::Helix { file, op } => {
            let src = Source::read(file)?;
            let cf = input::parse_curve(&src.text)?;
            let h = input::helix(&cf)?;
            let mut r = RunReport::new("helix", src.digest, cli.seed);
            helix(&mut r, &h, op)?;
            Ok(Output::Report(r))
        }
        Command::Resolution { file } => {
            let (af, digest) = load_algebra(cli, file)?;
            let mut r = RunReport::new("resolution", digest, cli.seed);
            with_field!(field_choice(cli, af.field())?, f => {
                let a = algebra(&f, &af)?;
                resolution(&mut r, &a, cli.cutoff.unwrap_or(10))?;
            });
            Ok(Output::Report(r))
        }
        Command::Veronese { file } => {
            let (af, digest) = load_algebra(cli, file)?;
            let mut r = RunReport::new("veronese", digest, cli.seed);
            with_field!(field_choice(cli, af.field())?, f => {
                let a = algebra(&f, &af)?;
                let cutoff = cli.cutoff.unwrap_or(match a.kind() {
                    AlgebraKind::Cubic => 6,
                    AlgebraKind::Quadratic => 4,
                });
                veronese(&mut r, &a, cutoff)?;
            });
            Ok(Output::Report(r))
        }
        Command::Fixture { family } => fixture(cli, *family).map(Output::Text),
    }
}

fn default_cutoff(kind: AlgebraKind) -> usize {
    match kind {
        AlgebraKind::Cubic => 12,
        AlgebraKind::Quadratic => 9,
    }
}

fn fixture(cli: &Cli, family: Family) -> Result<String> {
    let f = PrimeField::new(cli.field.unwrap_or(7))?;
    if family == Family::Linear {
        let qf = input::quintuple_file(&linear_tensor(&f), Some("linear quadric".into()));
        return Ok(serde_json::to_string_pretty(&qf)? + "\n");
    }
    let seed = cli
        .seed
        .ok_or_else(|| Error::Input("random fixtures need --seed".into()))?;
    let mut g = rng(seed);
    let none = || Error::Resource("no draw found".into());
    let qf = match family {
        Family::Geometric => input::quintuple_file(
            &random_geometric(&f, &mut g).ok_or_else(none)?,
            Some(format!("random geometric, seed {seed}")),
        ),
        Family::Degenerate => input::quintuple_file(
            &random_degenerate(&f, &mut g).ok_or_else(none)?,
            Some(format!("random degenerate, seed {seed}")),
        ),
        _ => input::quintuple_file(
            &random_integer(&Rationals, &mut g, 50, &DEGENERATE_ZEROS).ok_or_else(none)?,
            Some(format!(
                "random degenerate with integer coefficients, seed {seed}"
            )),
        ),
    };
    Ok(serde_json::to_string_pretty(&qf)? + "\n")
}

fn dims<F: Field>(r: &mut RunReport, p: &Presentation<F>, from: i64, cutoff: usize) -> Result<()> {
    let t = dim_table(p, from, cutoff)?;
    let expected: Vec<usize> = (0..=cutoff)
        .map(|n| expected_dim(p.kind(), n as i64))
        .collect();
    let mismatch = t.first_mismatch(p.kind());
    let status = if !p.has_regular_shape() {
        Status::Inconclusive
    } else {
        Status::from_bool(mismatch.is_none())
    };
    let detail = match mismatch {
        None => format!("{:?}", t.values),
        Some(n) => format!(
            "dim A_({from},{}) = {}, expected {}",
            from + n as i64,
            t.values[n],
            expected[n]
        ),
    };
    r.push(
        "profile",
        status,
        detail,
        json!({ "base": from, "values": t.values, "expected": expected, "first_mismatch": mismatch }),
    );
    Ok(())
}

fn classify_checks<F: Field>(r: &mut RunReport, q: &Quintuple<F>, cutoff: usize) -> Result<()> {
    let s = summarize(q);
    r.push(
        "strongly-nondegenerate",
        Status::from_bool(s.strongly_nondegenerate),
        format!("slot ranks {:?}", s.slot_ranks),
        &s,
    );
    r.push(
        "geometric",
        Status::from_bool(s.geometric),
        format!("killing pairs {:?}", s.killing_pairs),
        &s,
    );
    let c = classify_quintuple(q);
    let name = serde_json::to_value(c.classification)?;
    let ok = matches!(
        c.classification,
        Classification::Linear | Classification::EllipticAdmissibleCandidate
    );
    r.push(
        "classification",
        Status::from_bool(ok),
        name.as_str().unwrap_or_default().to_string(),
        &c,
    );
    if s.geometric {
        let lin = linear_detect(q)?;
        r.push(
            "linear-detect",
            Status::Pass,
            if lin { "linear" } else { "not linear" },
            json!({ "linear": lin }),
        );
    } else {
        r.push(
            "linear-detect",
            Status::Inconclusive,
            "needs geometric w",
            json!(null),
        );
    }
    if !s.strongly_nondegenerate {
        return Ok(());
    }

    let pq = build_prequadric(q)?;
    r.push(
        "w-spaces",
        Status::from_bool(pq.w_ok()),
        format!("dims {:?}", pq.w_dims),
        json!({ "dims": pq.w_dims, "match_rotations": pq.w_matches }),
    );

    let p = &pq.presentation;
    let mut tables = Vec::new();
    let mut first_bad = None;
    for i in 0..4 {
        let t = dim_table(p, i, cutoff)?;
        if let (None, Some(n)) = (first_bad, t.first_mismatch(AlgebraKind::Cubic)) {
            first_bad = Some((i, n, t.values[n]));
        }
        tables.push(t);
    }
    let detail = match first_bad {
        None => format!("matches through n = {cutoff} at every residue"),
        Some((i, n, v)) => format!(
            "dim A_({i},{}) = {v}, expected {}",
            i + n as i64,
            expected_dim(AlgebraKind::Cubic, n as i64)
        ),
    };
    r.push(
        "profile",
        Status::from_bool(first_bad.is_none()),
        detail,
        &tables,
    );

    let mut failing = Vec::new();
    for i in 0..4 {
        let rep = check_resolution(p, i, cutoff)?;
        failing.push(json!({ "base": i, "w_dim": rep.w_dim, "failing": rep.failing_degrees() }));
    }
    let exact = failing
        .iter()
        .all(|v| v["failing"].as_array().is_some_and(|a| a.is_empty()));
    r.push(
        "resolution",
        Status::from_bool(exact),
        if exact {
            format!("exact through depth {cutoff}")
        } else {
            "not exact".into()
        },
        &failing,
    );

    match theta_maps(q) {
        Ok(ts) => {
            let mut ok = true;
            for t in &ts {
                ok &= transport_relations(q, t)? == relations_from_w(q.w(), t.residue as i64 + 4)?;
            }
            let identity = ts.iter().all(|t| {
                t.theta == crate::linalg::Matrix::identity(q.field(), 2)
                    && t.theta_prime == crate::linalg::Matrix::identity(q.field(), 2)
            });
            r.push(
                "theta",
                Status::from_bool(ok),
                if ok {
                    "θ' carries R_i onto R_(i+4)"
                } else {
                    "transport failed"
                },
                json!({ "identity": identity }),
            );
        }
        Err(e) => r.push("theta", Status::Fail, e.to_string(), json!(null)),
    }
    Ok(())
}

fn pointscheme(
    r: &mut RunReport,
    p: &Presentation<PrimeField>,
    factor: bool,
    chains: bool,
    reach: usize,
) -> Result<()> {
    if p.kind() != AlgebraKind::Cubic || p.gen_dims().iter().any(|&g| g != 2) {
        return Err(Error::Input(
            "point schemes need a cubic presentation on 2-dimensional V_i".into(),
        ));
    }
    let f = p.field();
    let q = f.modulus() as usize;
    let mut forms = Vec::new();
    let mut all_zero = true;
    for i in 0..p.period() as i64 {
        for side in [Side::S01, Side::S12] {
            let g = gamma_form(p.relations(i), side)?;
            all_zero &= g.is_zero();
            forms.push(json!({ "residue": i, "side": side, "form": g.to_json() }));
        }
    }
    r.push(
        "gamma-forms",
        Status::Pass,
        if all_zero {
            "all forms vanish"
        } else {
            "nonzero (2,2) forms"
        },
        &forms,
    );

    let triples = enumerate_points(p, 0)?;
    let g01 = gamma_form(p.relations(0), Side::S01)?;
    let mut proj: Vec<_> = triples.iter().map(|t| [t[0], t[1]]).collect();
    proj.sort();
    proj.dedup();
    let mut on_form = form_points(&g01);
    on_form.sort();
    if all_zero {
        let diagonal = triples.iter().all(|t| t[0] == t[2]);
        let ok = triples.len() == (q + 1) * (q + 1) && diagonal;
        r.push(
            "points",
            Status::from_bool(ok),
            format!(
                "{} triples, expected {} of shape (a, b, a)",
                triples.len(),
                (q + 1) * (q + 1)
            ),
            json!({ "count": triples.len(), "diagonal": diagonal }),
        );
    } else {
        r.push(
            "points",
            Status::from_bool(proj == on_form),
            format!("{} triples, {} points on Γ01", triples.len(), on_form.len()),
            json!({ "count": triples.len(), "gamma01_points": on_form.len(), "triples": triples }),
        );
        let sm = smoothness(&g01)?;
        // singular point schemes are legitimate, so this is informational
        let detail = if sm.smooth {
            format!(
                "smooth, {} points, within Hasse bound: {}",
                sm.points, sm.within_hasse
            )
        } else {
            format!(
                "singular at {}",
                serde_json::to_string(&sm.singular_points)?
            )
        };
        r.push("smoothness", Status::Pass, detail, &sm);
    }

    let mut witnesses = Vec::new();
    for i in 0..p.period() as i64 {
        for slot in [FlattenSlot::First, FlattenSlot::Last] {
            let w = rank_one_in_pencil(p.relations(i), slot)?;
            let kind = match &w {
                PencilWitness::None => continue,
                PencilWitness::Rational(lm) => json!({ "rational": [lm[0], lm[1]] }),
                PencilWitness::Irrational(b) => {
                    json!({ "irrational": b.coeffs().iter().map(|c| f.render(c)).collect::<Vec<_>>() })
                }
            };
            witnesses.push(json!({ "residue": i, "slot": slot, "witness": kind }));
        }
    }
    r.push(
        "regularity",
        Status::from_bool(witnesses.is_empty()),
        if witnesses.is_empty() {
            "no rank-one member in any pencil".to_string()
        } else {
            format!("{} rank-one witnesses", witnesses.len())
        },
        &witnesses,
    );

    if factor {
        if all_zero {
            r.push("factor", Status::Inconclusive, "forms vanish", json!(null));
        } else {
            let mut out = Vec::new();
            let mut err = None;
            for side in [Side::S01, Side::S12] {
                match factor_22(&gamma_form(p.relations(0), side)?) {
                    Ok(fz) => out.push(json!({ "side": side, "factorization": fz.to_json(f) })),
                    Err(e @ Error::Resource(_)) => err = Some(e.to_string()),
                    Err(e) => return Err(e),
                }
            }
            match err {
                Some(e) => r.push("factor", Status::Inconclusive, e, json!(null)),
                None => {
                    let counts: Vec<usize> = out
                        .iter()
                        .map(|v| {
                            v["factorization"]["factors"]
                                .as_array()
                                .map_or(0, |a| a.len())
                        })
                        .collect();
                    r.push(
                        "factor",
                        Status::Pass,
                        format!("factor counts {counts:?}"),
                        &out,
                    )
                }
            }
        }
    }

    if chains {
        let ck = chain_kernel(p, 0)?;
        let expect = if all_zero { 0 } else { 1 };
        let data = json!({
            "chains": ck.chains,
            "slice_dim": ck.slice_dim,
            "evaluation_rank": ck.evaluation_rank,
            "kernel_dim": ck.kernel.dim(),
        });
        let status = if ck.inconclusive {
            Status::Inconclusive
        } else {
            Status::from_bool(ck.kernel.dim() == expect)
        };
        r.push(
            "chain-kernel",
            status,
            format!("kernel dim {} from {} chains", ck.kernel.dim(), ck.chains),
            data,
        );
        if ck.kernel.dim() == 1 && !ck.inconclusive {
            let g = ck.kernel.basis_vectors().remove(0);
            let inj = multiplication_injectivity(p, 0, &g, reach)?;
            r.push(
                "injectivity",
                Status::from_bool(inj.injective()),
                format!("left and right multiplication up to n = {reach}"),
                &inj,
            );
        }
    }
    Ok(())
}

fn parse_arg(op: &[String]) -> Result<Option<i64>> {
    op.get(1)
        .map(|a| {
            a.parse::<i64>().map_err(|_| {
                Error::Input(format!("expected an integer after {}, got {a:?}", op[0]))
            })
        })
        .transpose()
}

fn helix(r: &mut RunReport, h: &Helix, op: &[String]) -> Result<()> {
    let c = h.curve();
    r.push(
        "curve",
        Status::Pass,
        format!(
            "y^2 = x^3 + {}x + {} over GF({}), {} points",
            c.a(),
            c.b(),
            c.modulus(),
            c.order()
        ),
        json!({ "p": c.modulus(), "a": c.a(), "b": c.b(), "order": c.order(), "seeds": h.seeds() }),
    );
    match op[0].as_str() {
        "extend" => {
            let n = parse_arg(op)?.unwrap_or(10);
            let window: Vec<(i64, PicClass)> = (-n..=n).map(|k| (k, h.term(k))).collect();
            let ok = (-n..=n).all(|k| h.residual(k) == PicClass::trivial());
            let degree = match h.kind() {
                AlgebraKind::Cubic => 2,
                AlgebraKind::Quadratic => 3,
            };
            let deg_ok = window.iter().all(|(_, l)| l.degree == degree);
            r.push(
                "residuals",
                Status::from_bool(ok),
                format!("recursion residual trivial on [{}, {n}]", -n),
                &window,
            );
            r.push(
                "degrees",
                Status::from_bool(deg_ok),
                format!("all of degree {degree}"),
                json!(null),
            );
        }
        "translate" => {
            let n = parse_arg(op)?
                .ok_or_else(|| Error::Input("translate needs an integer n".into()))?;
            match translate_admissible(h, n)? {
                Translation::Admissible { seeds, pattern_ok } => {
                    r.push(
                        "translate",
                        Status::from_bool(pattern_ok),
                        format!("seeds (L_0, L_{}, L_2)", 2 * n + 1),
                        json!({ "seeds": seeds, "pattern_ok": pattern_ok }),
                    );
                    let steps = translate_stepwise(h, n)?;
                    r.push(
                        "stepwise",
                        Status::from_bool(steps == Some(seeds)),
                        format!("{} single steps agree", n.abs()),
                        steps,
                    );
                }
                Translation::Violation { m } => r.push(
                    "translate",
                    Status::Fail,
                    format!("L_{m} coincides with L_0 or L_2"),
                    json!({ "violating_m": m }),
                ),
            }
        }
        "periodicity" => {
            let mode = op.get(1).map(String::as_str).unwrap_or("2");
            let s = h.seeds();
            let witness = match (mode, h.kind()) {
                ("quad", AlgebraKind::Quadratic) => quadratic_periodicity(c, &s[0], &s[1])?,
                ("2", AlgebraKind::Cubic) => cubic_2periodicity(c, &s[0], &s[2])?,
                ("1", AlgebraKind::Cubic) => cubic_1periodicity_check(c, &s[0], &s[1], &s[2])?,
                ("quad" | "1" | "2", kind) => {
                    return Err(Error::Input(format!(
                        "periodicity {mode} does not apply to a {kind:?} helix"
                    )))
                }
                _ => return Err(Error::Input(format!("unknown periodicity mode {mode:?}"))),
            };
            r.push(
                &format!("periodicity-{mode}"),
                Status::from_bool(witness.is_some()),
                match &witness {
                    Some(a) => format!("A = (0, {})", a.s),
                    None => "no η(A) satisfies the conditions".into(),
                },
                json!({ "witness": witness, "group_order": c.order() }),
            );
        }
        "omega" => match omega_quadruple(h) {
            Ok(om) => {
                let back = Helix::cubic(*c, om.seeds[0], om.seeds[1], om.seeds[2])
                    .and_then(|m| omega_quadruple(&m));
                let twice = back
                    .as_ref()
                    .map(|b| b.seeds.to_vec() == h.seeds())
                    .unwrap_or(false);
                r.push(
                    "omega",
                    Status::from_bool(om.pattern_ok),
                    "seeds (L_-1, L_2, L_1)",
                    &om,
                );
                r.push(
                    "omega-twice",
                    Status::from_bool(twice),
                    "ω applied twice restores the seeds",
                    json!(null),
                );
            }
            Err(e @ Error::Precondition(_)) => {
                r.push("omega", Status::Fail, e.to_string(), json!(null))
            }
            Err(e) => return Err(e),
        },
        other => return Err(Error::Input(format!("unknown helix op {other:?}"))),
    }
    Ok(())
}

fn resolution<F: Field>(r: &mut RunReport, p: &Presentation<F>, depth: usize) -> Result<()> {
    for i in 0..p.period() as i64 {
        let rep = check_resolution(p, i, depth)?;
        let failing = rep.failing_degrees();
        r.push(
            &format!("resolution-{i}"),
            Status::from_bool(failing.is_empty()),
            if failing.is_empty() {
                format!("exact for j <= {}", i + depth as i64)
            } else {
                format!("inexact at j in {failing:?}")
            },
            &rep,
        );
    }
    Ok(())
}

fn veronese<F: Field>(r: &mut RunReport, p: &Presentation<F>, cutoff: usize) -> Result<()> {
    for res in [0, 1] {
        let t = veronese_dims(p, res, cutoff)?;
        let expected: Vec<usize> = (0..=cutoff)
            .map(|n| expected_dim(p.kind(), 2 * n as i64))
            .collect();
        let status = if p.has_regular_shape() {
            Status::from_bool(t.values == expected)
        } else {
            Status::Inconclusive
        };
        r.push(
            &format!("veronese-{res}"),
            status,
            format!("{:?}", t.values),
            json!({ "values": t.values, "expected": expected }),
        );
    }
    let gen = veronese_generation_check(p, cutoff)?;
    r.push(
        "generation",
        Status::from_bool(gen),
        "even slices generated in degree two",
        json!(gen),
    );
    Ok(())
}
