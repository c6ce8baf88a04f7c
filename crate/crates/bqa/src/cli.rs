//! Command-line front end: parse presentation files and expressions, run
//! check / reduce / classify / orbit / structure / apply / selftest, and
//! emit deterministic JSON (exact values are always strings, never floats).
//!
//! Exit codes: 0 success, 1 negative domain verdict (inconsistent input,
//! uncovered family, failing suite), 2 malformed input or I/O failure.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::classify::{
    classify2, classify3, orbit_invariant, orbit_representative, CanonicalFamily, Classification,
    OneQForm, ThreeQForm, TwoQForm,
};
use crate::consistency3::{residues, Bq3};
use crate::field::{FieldKind, FieldValue};
use crate::freealg::parse_expr;
use crate::rewrite::{overlap_check, parse_presentation, reduce, reduce_in_order, BqPresentation};
use crate::selftest::{run_all, SuiteConfig};
use crate::structure::{extract_structure, StructureReport};
use crate::transform::{apply as apply_transform, MonomialAffineTransform};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "bqa",
    about = "Exact PBW consistency, normal forms and classification of bi-quadratic algebra presentations",
    version
)]
pub struct Cli {
    /// Pretty-print the JSON output
    #[arg(long, global = true)]
    pub json_pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide PBW consistency; for n = 3 prints the ten labeled residues
    Check { file: PathBuf },
    /// Rewrite an expression to its ordered normal form
    Reduce {
        file: PathBuf,
        /// Expression over x1..xn, e.g. "x3*x2*x1 - 2*x1"
        #[arg(long)]
        expr: String,
        /// Generator order as a permutation word, e.g. 213 (default: identity)
        #[arg(long)]
        order: Option<String>,
    },
    /// Classify a consistent presentation into its canonical family
    Classify { file: PathBuf },
    /// Orbit invariant of a parameter triple under one of the four torus actions
    Orbit {
        #[arg(long)]
        case: u8,
        /// Comma-separated triple, e.g. "1,2,3" or "1,-1/2,0"
        #[arg(long)]
        xi: String,
        /// Ground field: Q or fp:<prime>
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Extract the diskew/Weyl structure of a classified presentation and
    /// verify its relations symbolically
    Structure { file: PathBuf },
    /// Apply a generator change (permutation, scaling, shift) to a presentation
    Apply {
        file: PathBuf,
        /// Permutation word, e.g. 132
        #[arg(long, default_value = "123")]
        perm: String,
        /// Comma-separated nonzero scales, e.g. "1,2,1/3"
        #[arg(long)]
        scale: Option<String>,
        /// Comma-separated shifts, e.g. "0,0,1"
        #[arg(long)]
        shift: Option<String>,
    },
    /// Run the verification suites
    Selftest {
        /// Oracle trial count; the other suites scale proportionally
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Restrict the randomized suites to one prime field (fp:<p>)
        #[arg(long)]
        field: Option<String>,
    },
}

/// Dispatches a parsed command; returns the JSON payload and the exit code.
pub fn run(command: &Command) -> (Value, i32) {
    match dispatch(command) {
        Ok(done) => done,
        Err(msg) => (json!({ "error": msg }), EXIT_INPUT),
    }
}

pub fn main() -> i32 {
    let cli = Cli::parse();
    let (value, code) = run(&cli.command);
    let rendered = if cli.json_pretty {
        serde_json::to_string_pretty(&value).expect("serializable")
    } else {
        value.to_string()
    };
    println!("{rendered}");
    code
}

fn dispatch(command: &Command) -> Result<(Value, i32), String> {
    match command {
        Command::Check { file } => cmd_check(file),
        Command::Reduce { file, expr, order } => cmd_reduce(file, expr, order.as_deref()),
        Command::Classify { file } => cmd_classify(file),
        Command::Orbit { case, xi, field } => cmd_orbit(*case, xi, field),
        Command::Structure { file } => cmd_structure(file),
        Command::Apply {
            file,
            perm,
            scale,
            shift,
        } => cmd_apply(file, perm, scale.as_deref(), shift.as_deref()),
        Command::Selftest {
            trials,
            seed,
            field,
        } => cmd_selftest(*trials, *seed, field.as_deref()),
    }
}

fn load_presentation(file: &Path) -> Result<BqPresentation, String> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    parse_presentation(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn value_str(v: &FieldValue) -> Value {
    Value::String(v.to_string())
}

fn presentation_json(p: &BqPresentation) -> Value {
    let n = p.n();
    let mut q = Vec::new();
    let mut a = Vec::new();
    let mut b = Vec::new();
    for i in 2..=n {
        for j in 1..i {
            q.push(value_str(p.q(i, j)));
            a.push(Value::Array(
                (1..=n).map(|k| value_str(p.a(i, j, k))).collect(),
            ));
            b.push(value_str(p.b(i, j)));
        }
    }
    json!({
        "n": n,
        "field": p.field().spec_string(),
        "q": q,
        "A": a,
        "B": b,
    })
}

fn transform_json(g: &MonomialAffineTransform) -> Value {
    json!({
        "perm": g.perm().iter().map(|d| d.to_string()).collect::<String>(),
        "scale": g.scale().iter().map(value_str).collect::<Vec<_>>(),
        "shift": g.shift().iter().map(value_str).collect::<Vec<_>>(),
    })
}

fn residues_json(a: &Bq3) -> Value {
    let r = residues(a);
    let mut map = Map::new();
    for (label, value) in r.labeled() {
        map.insert(label.to_string(), value_str(value));
    }
    Value::Object(map)
}

fn cmd_check(file: &Path) -> Result<(Value, i32), String> {
    let p = load_presentation(file)?;
    if p.n() == 3 {
        let a = Bq3::from_presentation(&p).map_err(|e| e.to_string())?;
        let r = residues(&a);
        let consistent = r.all_zero();
        let payload = json!({
            "n": 3,
            "field": p.field().spec_string(),
            "consistent": consistent,
            "residues": residues_json(&a),
        });
        Ok((payload, if consistent { EXIT_OK } else { EXIT_DOMAIN }))
    } else {
        let reports = overlap_check(&p);
        let consistent = reports.is_empty();
        let overlaps: Vec<Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "triple": [r.k, r.j, r.i],
                    "difference": r.difference.to_string(),
                })
            })
            .collect();
        let payload = json!({
            "n": p.n(),
            "field": p.field().spec_string(),
            "consistent": consistent,
            "overlaps": overlaps,
        });
        Ok((payload, if consistent { EXIT_OK } else { EXIT_DOMAIN }))
    }
}

fn parse_perm_word(word: &str, n: usize) -> Result<Vec<usize>, String> {
    let digits: Vec<usize> = word
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as usize))
        .collect::<Option<_>>()
        .ok_or_else(|| format!("bad permutation word `{word}`"))?;
    let mut seen = vec![false; n];
    if digits.len() != n
        || !digits
            .iter()
            .all(|&d| (1..=n).contains(&d) && !std::mem::replace(&mut seen[d - 1], true))
    {
        return Err(format!("`{word}` is not a permutation of 1..={n}"));
    }
    Ok(digits)
}

fn cmd_reduce(file: &Path, expr: &str, order: Option<&str>) -> Result<(Value, i32), String> {
    let p = load_presentation(file)?;
    let f = parse_expr(expr, p.n(), p.field()).map_err(|e| format!("--expr: {e}"))?;
    let (normal_form, order_word) = match order {
        None => (reduce(&f, &p), None),
        Some(word) => {
            let sigma = parse_perm_word(word, p.n())?;
            match reduce_in_order(&f, &p, &sigma) {
                Ok(nf) => (nf, Some(word.to_string())),
                Err(e) => {
                    return Ok((json!({ "error": e.to_string() }), EXIT_DOMAIN));
                }
            }
        }
    };
    let payload = json!({
        "input": f.to_string(),
        "order": order_word.unwrap_or_else(|| {
            (1..=p.n()).map(|d| d.to_string()).collect()
        }),
        "normal_form": normal_form.to_string(),
    });
    Ok((payload, EXIT_OK))
}

fn family_params(cls: &Classification) -> Value {
    let mut map = Map::new();
    let mut put = |k: &str, v: &FieldValue| {
        map.insert(k.to_string(), value_str(v));
    };
    match &cls.form.family {
        CanonicalFamily::TwoGen(_) | CanonicalFamily::LieType(_) => {}
        CanonicalFamily::OneQ(OneQForm::MuAlphaNonzero { q1, alpha, mu }) => {
            put("q1", q1);
            put("alpha", alpha);
            put("mu", mu);
        }
        CanonicalFamily::OneQ(OneQForm::MuAlphaZero { q1, alpha, c, b1 }) => {
            put("q1", q1);
            put("alpha", alpha);
            put("c", c);
            put("b1", b1);
        }
        CanonicalFamily::TwoQ(TwoQForm::NonUnit { q1, q2 }) => {
            put("q1", q1);
            put("q2", q2);
        }
        CanonicalFamily::TwoQ(TwoQForm::Unit { q1, lambda, b3 }) => {
            put("q1", q1);
            put("lambda", lambda);
            put("b3", b3);
        }
        CanonicalFamily::ThreeQ(ThreeQForm::Quantum(qf)) => {
            put("q", &qf.q);
            map.insert("q_inverted".into(), Value::Bool(qf.q_inverted));
            map.insert(
                "classes".into(),
                Value::Array(
                    qf.classes
                        .iter()
                        .map(|c| {
                            json!({
                                "exponent": c.exponent,
                                "representative": c.representative.to_string(),
                            })
                        })
                        .collect(),
                ),
            );
        }
        CanonicalFamily::ThreeQ(ThreeQForm::C2 { q1, q2, beta, b2 }) => {
            put("q1", q1);
            put("q2", q2);
            put("beta", beta);
            put("b2", b2);
        }
        CanonicalFamily::ThreeQ(ThreeQForm::C3 { q1, q3, lambda, b3 }) => {
            put("q1", q1);
            put("q3", q3);
            put("lambda", lambda);
            put("b3", b3);
        }
        CanonicalFamily::ThreeQ(ThreeQForm::C4 { q1, q2, c, b1 }) => {
            put("q1", q1);
            put("q2", q2);
            put("c", c);
            put("b1", b1);
        }
        CanonicalFamily::ThreeQ(ThreeQForm::C5 { q1, q2, q3 }) => {
            put("q1", q1);
            put("q2", q2);
            put("q3", q3);
        }
    }
    if let CanonicalFamily::LieType(form) = &cls.form.family {
        map.insert("dim_center".into(), json!(form.dim_center));
        map.insert("nilpotent".into(), json!(form.nilpotent));
        map.insert("solvable".into(), json!(form.solvable));
    }
    Value::Object(map)
}

fn family_case(cls: &Classification) -> Value {
    match &cls.form.family {
        CanonicalFamily::ThreeQ(ThreeQForm::Quantum(qf)) => json!(qf.case),
        _ => Value::Null,
    }
}

fn classification_json(cls: &Classification) -> Value {
    json!({
        "family": cls.form.family.label(),
        "case": family_case(cls),
        "params": family_params(cls),
        "closure_flag": cls.form.closure_flag,
        "canonical": presentation_json(&cls.presentation.to_presentation()),
        "transforms": cls
            .transforms
            .iter()
            .map(transform_json)
            .collect::<Vec<_>>(),
    })
}

fn classify_presentation(p: &BqPresentation) -> Result<(Value, i32), String> {
    match p.n() {
        2 => {
            let form = classify2(p.q(2, 1), p.a(2, 1, 1), p.a(2, 1, 2), p.b(2, 1))
                .map_err(|e| e.to_string())?;
            let mut params = Map::new();
            if let CanonicalFamily::TwoGen(
                crate::classify::TwoGenClass::QuantumPlane { q }
                | crate::classify::TwoGenClass::QuantumWeyl { q },
            ) = &form.family
            {
                params.insert("q".into(), value_str(q));
            }
            Ok((
                json!({
                    "family": form.family.label(),
                    "case": Value::Null,
                    "params": Value::Object(params),
                    "closure_flag": form.closure_flag,
                    "transforms": Value::Array(vec![]),
                }),
                EXIT_OK,
            ))
        }
        3 => {
            let a = Bq3::from_presentation(p).map_err(|e| e.to_string())?;
            match classify3(&a) {
                Ok(cls) => Ok((classification_json(&cls), EXIT_OK)),
                Err(crate::classify::ClassifyError::Inconsistent) => Ok((
                    json!({
                        "error": "presentation is not PBW consistent",
                        "consistent": false,
                        "residues": residues_json(&a),
                    }),
                    EXIT_DOMAIN,
                )),
                Err(e) => Err(e.to_string()),
            }
        }
        n => Err(format!("classification supports n = 2 or 3, found n = {n}")),
    }
}

fn cmd_classify(file: &Path) -> Result<(Value, i32), String> {
    let p = load_presentation(file)?;
    classify_presentation(&p)
}

fn cmd_orbit(case: u8, xi: &str, field: &str) -> Result<(Value, i32), String> {
    let kind = FieldKind::parse(field).map_err(|e| format!("--field: {e}"))?;
    let parts: Vec<&str> = xi.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("--xi must list three values, found `{xi}`"));
    }
    let values: Vec<FieldValue> = parts
        .iter()
        .map(|s| kind.parse_literal(s))
        .collect::<Result<_, _>>()
        .map_err(|e| format!("--xi: {e}"))?;
    let triple: [FieldValue; 3] = [values[0].clone(), values[1].clone(), values[2].clone()];
    let inv = orbit_invariant(case, &triple).map_err(|e| e.to_string())?;
    let rep = orbit_representative(&inv);
    let payload = json!({
        "case": case,
        "field": kind.spec_string(),
        "xi": triple.iter().map(value_str).collect::<Vec<_>>(),
        "supp": inv.supp.iter().map(|s| *s as u8).collect::<Vec<_>>(),
        "classes": inv
            .classes
            .iter()
            .map(|c| json!({
                "exponent": c.exponent,
                "representative": c.representative.to_string(),
            }))
            .collect::<Vec<_>>(),
        "representative": rep.iter().map(value_str).collect::<Vec<_>>(),
    });
    Ok((payload, EXIT_OK))
}

fn structure_json(report: &StructureReport) -> Value {
    let affine = |m: &crate::structure::AffineMap| json!({ "linear": m.linear.to_string(), "constant": m.constant.to_string() });
    let poly = |p: &crate::structure::LinearPoly| json!({ "linear": p.linear.to_string(), "constant": p.constant.to_string() });
    let hmap = |m: &crate::structure::HMap| json!({ "h_coefficient": m.h_coeff.to_string(), "base_part": poly(&m.t_part) });
    json!({
        "dpr": {
            "base_generator": format!("x{}", report.dpr.base_gen),
            "x": format!("x{}", report.dpr.x_gen),
            "y": format!("x{}", report.dpr.y_gen),
            "sigma": affine(&report.dpr.sigma),
            "tau": affine(&report.dpr.tau),
            "rho": report.dpr.rho.to_string(),
            "b": poly(&report.dpr.b),
            "classical": report.dpr.classical,
        },
        "gwa": {
            "nu": affine(&report.gwa.nu),
            "sigma_h": hmap(&report.gwa.sigma_h),
            "tau_h": hmap(&report.gwa.tau_h),
            "classical": report.gwa.classical,
        },
        "central_element": report
            .central
            .as_ref()
            .map(|c| json!({ "alpha": poly(&c.alpha) }))
            .unwrap_or(Value::Null),
        "checks": report
            .checks
            .iter()
            .map(|(name, ok)| json!({ "relation": name, "ok": ok }))
            .collect::<Vec<_>>(),
        "verified": report.verified,
    })
}

fn cmd_structure(file: &Path) -> Result<(Value, i32), String> {
    let p = load_presentation(file)?;
    if p.n() != 3 {
        return Err(format!(
            "structure extraction supports n = 3, found n = {}",
            p.n()
        ));
    }
    let a = Bq3::from_presentation(&p).map_err(|e| e.to_string())?;
    let cls = match classify3(&a) {
        Ok(cls) => cls,
        Err(crate::classify::ClassifyError::Inconsistent) => {
            return Ok((
                json!({
                    "error": "presentation is not PBW consistent",
                    "consistent": false,
                }),
                EXIT_DOMAIN,
            ));
        }
        Err(e) => return Err(e.to_string()),
    };
    match extract_structure(&cls) {
        Ok(report) => {
            let verified = report.verified;
            let mut payload = structure_json(&report);
            if let Value::Object(map) = &mut payload {
                map.insert("family".into(), json!(cls.form.family.label()));
            }
            Ok((payload, if verified { EXIT_OK } else { EXIT_DOMAIN }))
        }
        Err(e) => Ok((
            json!({
                "family": cls.form.family.label(),
                "covered": false,
                "error": e.to_string(),
            }),
            EXIT_DOMAIN,
        )),
    }
}

fn parse_value_list(kind: FieldKind, text: &str) -> Result<[FieldValue; 3], String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated values in `{text}`"));
    }
    let values: Vec<FieldValue> = parts
        .iter()
        .map(|s| kind.parse_literal(s))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    Ok([values[0].clone(), values[1].clone(), values[2].clone()])
}

fn cmd_apply(
    file: &Path,
    perm: &str,
    scale: Option<&str>,
    shift: Option<&str>,
) -> Result<(Value, i32), String> {
    let p = load_presentation(file)?;
    if p.n() != 3 {
        return Err(format!("apply supports n = 3, found n = {}", p.n()));
    }
    let kind = p.field();
    let a = Bq3::from_presentation(&p).map_err(|e| e.to_string())?;
    let sigma = parse_perm_word(perm, 3)?;
    let scale = match scale {
        Some(text) => parse_value_list(kind, text).map_err(|e| format!("--scale: {e}"))?,
        None => [kind.one(), kind.one(), kind.one()],
    };
    let shift = match shift {
        Some(text) => parse_value_list(kind, text).map_err(|e| format!("--shift: {e}"))?,
        None => [kind.zero(), kind.zero(), kind.zero()],
    };
    let g = MonomialAffineTransform::new([sigma[0], sigma[1], sigma[2]], scale, shift)
        .map_err(|e| e.to_string())?;
    let out = apply_transform(&a, &g);
    let payload = json!({
        "transform": transform_json(&g),
        "result": presentation_json(&out.to_presentation()),
        "consistent": crate::consistency3::is_consistent3(&out),
    });
    Ok((payload, EXIT_OK))
}

fn cmd_selftest(
    trials: Option<usize>,
    seed: Option<u64>,
    field: Option<&str>,
) -> Result<(Value, i32), String> {
    let mut cfg = SuiteConfig::default();
    if let Some(n) = trials {
        cfg.oracle_trials = n;
        cfg.confluence_trials = (n / 10).max(1);
        cfg.reorder_instances = (n / 50).max(1);
        cfg.invariance_per_family = (n / 20).max(1);
    }
    if let Some(s) = seed {
        cfg.seed = s;
    }
    if let Some(spec) = field {
        match FieldKind::parse(spec).map_err(|e| format!("--field: {e}"))? {
            FieldKind::Fp(p) if p >= 3 => cfg.field_restriction = Some(p),
            FieldKind::Fp(p) => {
                return Err(format!("GF({p}) has no unit other than 1; use p >= 3"))
            }
            FieldKind::Rational => {
                return Err("--field expects a prime field fp:<p> for the restricted run".into())
            }
        }
    }
    let reports = run_all(&cfg);
    let pass = reports.iter().all(|r| r.passed());
    let payload = json!({
        "suites": reports
            .iter()
            .map(|r| json!({
                "name": r.name,
                "cases": r.cases,
                "failures": r.failures,
                "pass": r.passed(),
                "note": r.note,
            }))
            .collect::<Vec<_>>(),
        "pass": pass,
    });
    Ok((payload, if pass { EXIT_OK } else { EXIT_DOMAIN }))
}
