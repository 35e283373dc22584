use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use cameral::acceptance::{run_check, CHECKS};
use cameral::gcohom::{decide_n_class_bounded, split_witness, Verdict};
use cameral::glncover::{cover_report, CoverSpec};
use cameral::hitchin::hitchin_row;
use cameral::rank1::{run_rank1, Fq, HyperCurve};
use cameral::rootdata::{degrees, has_nonprimitive_coroot, nonprimitive_coroots, ram_scan, RootSystem};
use cameral::Error;

use crate::{DatumArgs, Failure, Outcome};

/// Splitting algebras have dimension `n!`.
const MAX_COVER_DEGREE: usize = 4;
const CHARPOLY_SAMPLES: usize = 10;

#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    pub max_group_order: usize,
    pub max_enum: u64,
}

fn system(args: &DatumArgs, budgets: Budgets) -> Result<RootSystem, Failure> {
    Ok(RootSystem::with_bound(&args.load()?, budgets.max_group_order)?)
}

pub fn rootdata(args: &DatumArgs, budgets: Budgets) -> Result<Outcome, Failure> {
    let sys = system(args, budgets)?;
    let d = sys.datum();
    let results = json!({
        "label": d.label(),
        "datum": d,
        "rank": d.rank(),
        "semisimple_rank": d.semisimple_rank(),
        "cartan_matrix": d.cartan_matrix(),
        "positive_roots": sys.positive_roots(),
        "coroots": sys.coroots(),
        "weyl_order": sys.order(),
        "degrees": degrees(&sys)?,
        "nonprimitive": has_nonprimitive_coroot(&sys),
        "nonprimitive_coroots": nonprimitive_coroots(&sys),
    });
    Ok((results, true))
}

pub fn ramcheck(args: &DatumArgs, identity_only: bool, budgets: Budgets) -> Result<Outcome, Failure> {
    let sys = system(args, budgets)?;
    let elements: Vec<usize> = if identity_only { vec![sys.identity()] } else { (0..sys.order()).collect() };
    let scan = ram_scan(&sys, &elements)?;
    let passed = scan.passed();
    Ok((json!(scan), passed))
}

pub fn titsclass(args: &DatumArgs, witness: bool, budgets: Budgets) -> Result<Outcome, Failure> {
    let datum = args.load()?;
    let report = decide_n_class_bounded(&datum, budgets.max_group_order)?;
    let mut passed = true;
    let witness_json = if witness {
        match split_witness(&datum) {
            Ok(w) => {
                passed = w.passed() && report.verdict == Verdict::Vanishes;
                json!(w)
            }
            Err(Error::NoneRegistered(label)) => json!({ "none_registered": label }),
            Err(e) => return Err(e.into()),
        }
    } else {
        Value::Null
    };
    Ok((json!({ "verdict": report.verdict, "report": report, "witness": witness_json }), passed))
}

pub fn cover(text: Option<&str>, file: Option<&Path>, seed: u64) -> Result<Outcome, Failure> {
    let text = match (text, file) {
        (Some(t), _) => t.to_string(),
        (None, Some(p)) => std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        (None, None) => return Err(Failure::Usage("give --json or --file".into())),
    };
    let spec: CoverSpec = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("bad cover JSON: {e}")))?;
    if spec.n > MAX_COVER_DEGREE {
        return Err(Failure::Runtime(Error::Budget(format!(
            "cover degree {} exceeds {MAX_COVER_DEGREE}",
            spec.n
        ))));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let report = cover_report(&spec.to_spectral()?, &mut rng, CHARPOLY_SAMPLES)?;
    let passed = report.passed();
    Ok((json!(report), passed))
}

pub fn rank1(q: u32, g: Option<usize>, f: Option<&str>, budgets: Budgets) -> Result<Outcome, Failure> {
    if q % 2 == 0 {
        return Err(Failure::Usage(format!("q = {q} is even; only odd prime powers are supported")));
    }
    let curve = match (g, f) {
        (_, Some(text)) => {
            let field = Fq::new(q)?;
            let coeffs = parse_poly(text).map_err(Failure::Usage)?;
            let f = coeffs.iter().map(|&c| field.from_int(c)).collect();
            HyperCurve::new(field, f)?
        }
        (Some(g), None) => HyperCurve::default_for(q, g)?,
        (None, None) => return Err(Failure::Usage("give --g or --f".into())),
    };
    let report = run_rank1(&curve, budgets.max_enum)?;
    let passed = report.passed();
    Ok((json!(report), passed))
}

/// Parses `"x^5+x+1"` or a comma-separated list of integer coefficients,
/// low degree first, into coefficients low degree first.
pub fn parse_poly(text: &str) -> Result<Vec<i64>, String> {
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if !text.contains('x') {
        return text
            .split(',')
            .map(|t| t.parse::<i64>().map_err(|_| format!("bad coefficient {t:?}")))
            .collect();
    }
    let mut coeffs: Vec<i64> = Vec::new();
    let mut rest = text.as_str();
    while !rest.is_empty() {
        let sign = match rest.as_bytes()[0] {
            b'-' => -1,
            _ => 1,
        };
        if rest.starts_with(['+', '-']) {
            rest = &rest[1..];
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        rest = tail;
        let bad = || format!("bad term {term:?}");
        let (coef, power) = match term.split_once('x') {
            None => (term.parse::<i64>().map_err(|_| bad())?, 0),
            Some((c, p)) => {
                let c = match c.trim_end_matches('*') {
                    "" => 1,
                    c => c.parse::<i64>().map_err(|_| bad())?,
                };
                let p = match p {
                    "" => 1,
                    p => p.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?,
                };
                (c, p)
            }
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] += sign * coef;
    }
    Ok(coeffs)
}

pub fn hitchin(args: &DatumArgs, genera: &[u32]) -> Result<Outcome, Failure> {
    let datum = args.load()?;
    let rows = genera.iter().map(|&g| hitchin_row(&datum, g)).collect::<cameral::Result<Vec<_>>>()?;
    let passed = rows.iter().all(|r| r.equal);
    Ok((json!({ "rows": rows }), passed))
}

pub fn selftest(only: &[u32], seed: u64) -> Result<Outcome, Failure> {
    if let Some(bad) = only.iter().find(|id| !CHECKS.iter().any(|(i, _)| i == *id)) {
        return Err(Failure::Usage(format!("no check with id {bad}")));
    }
    let checks: Vec<_> = CHECKS
        .iter()
        .filter(|(id, _)| only.is_empty() || only.contains(id))
        .map(|(id, _)| run_check(*id, seed))
        .collect();
    let passed = checks.iter().all(|c| c.passed);
    Ok((json!({ "checks": checks }), passed))
}
