//! Subcommand bodies. Each returns a JSON value and an exit code; printing
//! is left to the caller.

use crate::spec::{build, flat_json, flat_of, raw_parts, InstanceSpec, SpecError};
use builtmat::building::validate_building_set;
use builtmat::complete::{completeness_witness, flag_witness, is_complete};
use builtmat::corpus::{standard_corpus, Instance};
use builtmat::deletion::chow_by_deletion;
use builtmat::descent::{balanced_check, gamma_by_descents, gamma_by_descents_factored, gamma_complex};
use builtmat::diagnostics::kruskal_katona_check;
use builtmat::families::braid_min;
use builtmat::fy::chow_polynomial;
use builtmat::modular::validate_modular_cut;
use builtmat::ops::is_g_compatible;
use builtmat::registry::{methods_agree, MethodRegistry};
use builtmat::trees::{m0n_gamma, stable_descent_counts};
use builtmat::{gamma_expansion, BuiltMatroid, Error, Flat, Polynomial};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_FAILED: i32 = 3;

pub struct Output {
    pub value: Value,
    pub code: i32,
}

impl Output {
    fn ok(value: Value) -> Output {
        Output { value, code: EXIT_OK }
    }

    fn with(value: Value, pass: bool) -> Output {
        Output { value, code: if pass { EXIT_OK } else { EXIT_FAILED } }
    }

    pub fn input_error(e: &SpecError) -> Output {
        Output { value: json!({"error": e.message, "location": e.location}), code: EXIT_INPUT }
    }
}

fn flats_json(v: &[Flat]) -> Vec<Vec<usize>> {
    v.iter().map(|&f| flat_json(f)).collect()
}

/// The variant name, its flats and the message of a library error.
pub fn error_json(e: &Error) -> Value {
    let kind = format!("{e:?}");
    let kind = kind.split('(').next().unwrap_or_default().to_string();
    let flats: Vec<Flat> = match e {
        Error::NotAFlat(a)
        | Error::MissingIrreducible(a)
        | Error::StructuralMismatch(a)
        | Error::NotGCompatible(a)
        | Error::CutContainsAtom(a)
        | Error::NotContained(a)
        | Error::NotNestedLocal(a)
        | Error::MixedFactorStep(a)
        | Error::RankNotOne(a, _) => vec![*a],
        Error::NotUpwardClosed(a, b)
        | Error::NotMeetClosed(a, b)
        | Error::JoinClosureViolation(a, b)
        | Error::NotUnique(a, b)
        | Error::ChainLeavesBuildingSet(a, b) => vec![*a, *b],
        Error::FiberMismatch(v) => v.clone(),
        _ => Vec::new(),
    };
    json!({"kind": kind, "flats": flats_json(&flats), "message": e.to_string()})
}

fn poly_json(p: &Polynomial) -> Value {
    json!(p.coeffs())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    All,
    One(&'static str),
}

pub fn parse_method(s: &str) -> Option<MethodChoice> {
    match s {
        "all" => Some(MethodChoice::All),
        _ => MethodRegistry::standard().names().into_iter().find(|&n| n == s).map(MethodChoice::One),
    }
}

fn chow_value(bm: &BuiltMatroid, method: MethodChoice) -> (Value, bool, Option<Error>) {
    let reg = MethodRegistry::standard();
    let runs = match method {
        MethodChoice::All => reg.run_all(bm),
        MethodChoice::One(name) => vec![(name, reg.get(name).expect("known method").compute(bm))],
    };
    let agree = methods_agree(&runs);
    let mut per = Map::new();
    for (name, r) in &runs {
        per.insert((*name).to_string(), match r {
            Ok(p) => poly_json(p),
            Err(e) => json!({"error": error_json(e)}),
        });
    }
    let first = runs.iter().find_map(|(_, r)| r.as_ref().ok());
    let err = if first.is_none() { runs.iter().find_map(|(_, r)| r.as_ref().err().cloned()) } else { None };
    let mut out = Map::new();
    out.insert("chow".into(), first.map(poly_json).unwrap_or(Value::Null));
    out.insert("methods_agree".into(), json!(agree));
    out.insert("per_method".into(), Value::Object(per));
    (Value::Object(out), agree, err)
}

pub fn cmd_chow(spec: &InstanceSpec, method: MethodChoice) -> Output {
    let bm = match build(spec) {
        Ok(b) => b,
        Err(e) => return Output::input_error(&e),
    };
    let (value, agree, err) = chow_value(&bm, method);
    if err.is_some() {
        // the only selected method cannot handle this instance
        return Output { value, code: EXIT_INPUT };
    }
    Output::with(value, agree)
}

fn gamma_value(bm: &BuiltMatroid, with_descents: bool, with_complex: bool) -> (Value, bool) {
    let h = chow_polynomial(bm);
    let mut out = Map::new();
    out.insert("chow".into(), poly_json(&h));
    let gv = gamma_expansion(&h).expect("Chow polynomials are palindromic");
    out.insert("gamma".into(), json!(gv.gammas));
    out.insert("gamma_positive".into(), json!(gv.is_positive()));
    let mut pass = true;
    if with_descents || with_complex {
        out.insert("complete".into(), json!(is_complete(bm)));
    }
    if with_descents {
        match gamma_by_descents_factored(bm) {
            Ok(d) => {
                let mut lhs = gv.gammas.clone();
                while lhs.len() > 1 && lhs.last() == Some(&0) {
                    lhs.pop();
                }
                let matched = d.coeffs() == lhs.as_slice();
                out.insert("descent_formula".into(), poly_json(&d));
                out.insert("match".into(), json!(matched));
                if !matched && is_complete(bm) {
                    pass = false;
                }
            }
            Err(e) => {
                out.insert("descent_formula".into(), json!({"error": error_json(&e)}));
            }
        }
    }
    if with_complex {
        let v = match gamma_complex(bm) {
            Ok(gc) => {
                let bal = balanced_check(bm, &gc.complex);
                json!({
                    "faces": gc.complex.labeled_faces().iter().map(|f| flats_json(f)).collect::<Vec<_>>(),
                    "f_vector": gc.complex.f_vector(),
                    "downward_closed": gc.downward_closed,
                    "proper_coloring": bal.proper_coloring,
                    "balanced": bal.balanced(),
                })
            }
            Err(e) => json!({"error": error_json(&e)}),
        };
        out.insert("gamma_complex".into(), v);
    }
    (Value::Object(out), pass)
}

pub fn cmd_gamma(spec: &InstanceSpec, with_descents: bool, with_complex: bool) -> Output {
    match build(spec) {
        Ok(bm) => {
            let (v, pass) = gamma_value(&bm, with_descents, with_complex);
            Output::with(v, pass)
        }
        Err(e) => Output::input_error(&e),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    BuildingSet,
    Complete,
    Flag,
    ModularCut,
}

pub fn cmd_check(spec: &InstanceSpec, what: CheckKind) -> Output {
    if what == CheckKind::BuildingSet {
        let (m, flats) = match raw_parts(spec) {
            Ok(x) => x,
            Err(e) => return Output::input_error(&e),
        };
        return match validate_building_set(m.lattice(), &flats) {
            Ok(_) => Output::ok(json!({"check": "building-set", "result": true})),
            Err(e) => Output::with(json!({"check": "building-set", "result": false, "witness": error_json(&e)}), false),
        };
    }
    let bm = match build(spec) {
        Ok(b) => b,
        Err(e) => return Output::input_error(&e),
    };
    match what {
        CheckKind::Complete => match completeness_witness(&bm) {
            None => Output::ok(json!({"check": "complete", "result": true})),
            Some((f, g, x)) => Output::with(
                json!({"check": "complete", "result": false,
                       "witness": {"from": flat_json(f), "to": flat_json(g), "chain_element": flat_json(x)}}),
                false,
            ),
        },
        CheckKind::Flag => match flag_witness(&bm) {
            None => Output::ok(json!({"check": "flag", "result": true})),
            Some(w) => Output::with(json!({"check": "flag", "result": false, "witness": {"antichain": flats_json(&w)}}), false),
        },
        CheckKind::ModularCut => {
            let Some(cut) = &spec.cut else {
                return Output::input_error(&SpecError { location: "cut", message: "no modular cut given".into() });
            };
            let flats = match cut.iter().map(|v| flat_of(bm.n(), v)).collect::<Result<Vec<_>, _>>() {
                Ok(f) => f,
                Err(e) => return Output::input_error(&e),
            };
            match validate_modular_cut(bm.lattice(), &flats) {
                Ok(c) => {
                    let compatible = is_g_compatible(&bm, &c);
                    Output::ok(json!({"check": "modular-cut", "result": true, "proper": c.proper,
                        "nonempty": c.nonempty, "atom_free": c.atom_free, "g_compatible": compatible,
                        "minimal": flats_json(&c.minimal())}))
                }
                Err(e) => Output::with(json!({"check": "modular-cut", "result": false, "witness": error_json(&e)}), false),
            }
        }
        CheckKind::BuildingSet => unreachable!("handled above"),
    }
}

pub const M0N_MAX: usize = 8;

fn m0n_row(n: usize) -> (Value, bool) {
    let bm = braid_min(n).expect("2 <= n <= 8");
    let h = chow_polynomial(&bm);
    let del = chow_by_deletion(&bm);
    let gv = gamma_expansion(&h).expect("palindromic");
    let tree = m0n_gamma(n);
    let trees: Vec<i64> = stable_descent_counts(n).into_iter().map(|x| x as i64).collect();
    let nested = gamma_by_descents(&bm);
    let mut g = gv.gammas.clone();
    while g.len() > 1 && g.last() == Some(&0) {
        g.pop();
    }
    let kk = kruskal_katona_check(&gv.gammas);
    let agree = del.as_ref() == Ok(&h)
        && tree.coeffs() == g.as_slice()
        && nested.as_ref().map(|p| p.coeffs() == trees.as_slice()).unwrap_or(false);
    let row = json!({
        "n": n,
        "poincare": h.coeffs(),
        "gamma": gv.gammas,
        "stable_trees_by_descent": trees,
        "stable_nested_sets_by_descent": nested.map(|p| p.coeffs().to_vec()).unwrap_or_default(),
        "kruskal_katona": kk,
        "agree": agree,
    });
    (row, agree && kk)
}

pub fn cmd_m0n(n_max: usize) -> Output {
    if !(2..=M0N_MAX).contains(&n_max) {
        return Output::input_error(&SpecError { location: "n", message: format!("expected 2 <= N <= {M0N_MAX}") });
    }
    let rows: Vec<(Value, bool)> = (2..=n_max).into_par_iter().map(m0n_row).collect();
    let pass = rows.iter().all(|(_, p)| *p);
    Output::with(json!({"rows": rows.into_iter().map(|(v, _)| v).collect::<Vec<_>>()}), pass)
}

fn corpus_run<F>(f: F) -> Output
where
    F: Fn(&Instance) -> (Value, bool) + Sync,
{
    let corpus = standard_corpus();
    let rows: Vec<(Value, bool)> = corpus
        .par_iter()
        .map(|i| {
            let (mut v, pass) = f(i);
            if let Value::Object(m) = &mut v {
                m.insert("name".into(), json!(i.name));
                m.insert("pass".into(), json!(pass));
            }
            (v, pass)
        })
        .collect();
    let failed = rows.iter().filter(|(_, p)| !*p).count();
    let value = json!({
        "instances": rows.iter().map(|(v, _)| v.clone()).collect::<Vec<_>>(),
        "total": rows.len(),
        "failed": failed,
    });
    Output::with(value, failed == 0)
}

/// Every method on every corpus instance, one row per instance with the
/// status of each method.
pub fn cmd_chow_corpus(method: MethodChoice) -> Output {
    corpus_run(|i| {
        let (v, agree, err) = chow_value(&i.bm, method);
        let status: Map<String, Value> = v["per_method"]
            .as_object()
            .expect("object")
            .iter()
            .map(|(k, r)| {
                let s = if r.is_array() {
                    if agree { "pass" } else { "fail" }
                } else {
                    "unsupported"
                };
                (k.clone(), json!(s))
            })
            .collect();
        (json!({"chow": v["chow"], "methods": status}), agree && err.is_none())
    })
}

pub fn cmd_gamma_corpus(with_descents: bool) -> Output {
    corpus_run(|i| {
        let (v, pass) = gamma_value(&i.bm, with_descents, false);
        let mut row = Map::new();
        for key in ["gamma", "gamma_positive", "complete", "match"] {
            if let Some(x) = v.get(key) {
                row.insert(key.into(), x.clone());
            }
        }
        (Value::Object(row), pass)
    })
}
